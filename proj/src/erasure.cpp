#include "tscc/erasure.hpp"

#include <stdexcept>

namespace tscc {

namespace {

constexpr uint64_t GOLDEN = 0x9e3779b97f4a7c15ull;

uint64_t splitmix64(uint64_t& state) {
    uint64_t z = (state += GOLDEN);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

}  // namespace

RngStream::RngStream(uint64_t seed, uint64_t stream) {
    // Mix seed and stream id through two rounds so neighboring streams are
    // decorrelated.
    uint64_t s = seed;
    uint64_t a = splitmix64(s);
    s = a ^ (stream * GOLDEN + 0x6a09e667f3bcc909ull);
    splitmix64(s);
    state_ = s;
}

uint64_t RngStream::next_u64() { return splitmix64(state_); }

double RngStream::next_double() { return double(next_u64() >> 11) * 0x1.0p-53; }

bool RngStream::bernoulli(double p) {
    if (p <= 0.0) return false;
    if (p >= 1.0) return true;
    return next_double() < p;
}

uint32_t RngStream::next_below(uint32_t bound) {
    return uint32_t(next_u64() % bound);
}

ErasurePattern sample_erasure(std::size_t n, double eps, RngStream& rng) {
    if (eps < 0.0 || eps > 1.0) throw std::invalid_argument("sample_erasure: eps out of range");
    ErasurePattern pat;
    pat.n = n;
    pat.induced = PauliOperator(n);
    for (uint32_t q = 0; q < n; ++q) {
        if (!rng.bernoulli(eps)) continue;
        pat.erased.push_back(q);
        uint64_t bits = rng.next_u64();
        if (bits & 1) pat.induced.x.set(q, true);
        if (bits & 2) pat.induced.z.set(q, true);
    }
    return pat;
}

}  // namespace tscc
