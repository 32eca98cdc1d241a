#include "tscc/montecarlo.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <map>
#include <sstream>
#include <thread>

#include "tscc/correctability.hpp"
#include "tscc/decoder.hpp"
#include "tscc/erasure.hpp"

namespace tscc {

namespace {

constexpr const char* VERSION = "tscc 0.1.0";
constexpr uint64_t CHUNK = 256;

bool run_trial(const TsccCode& code, TrialKind kind, double eps, uint64_t seed, uint64_t trial) {
    RngStream rng(seed, trial);
    ErasurePattern pattern = sample_erasure(code.n, eps, rng);
    switch (kind) {
        case TrialKind::DecodePartial: return decode(code, Mode::Partial, pattern).failed;
        case TrialKind::DecodeMaximal: return decode(code, Mode::Maximal, pattern).failed;
        case TrialKind::Correctability: return !tscc_correctable(code, pattern.erased).correctable;
    }
    return false;
}

double logit(double p) { return std::log(p / (1.0 - p)); }

struct LineFit {
    double a = 0.0, b = 0.0;
    bool ok = false;
};

// Weighted least squares of logit(rate) against eps. Empirical rates get a
// continuity correction so saturated points stay usable.
LineFit fit_logistic(const std::vector<PointResult>& pts) {
    double sw = 0, sx = 0, sy = 0, sxx = 0, sxy = 0;
    std::size_t used = 0;
    for (const auto& p : pts) {
        if (p.trials == 0) continue;
        double rate = (double(p.failures) + 0.5) / (double(p.trials) + 1.0);
        double w = double(p.trials) * rate * (1.0 - rate);
        double y = logit(rate);
        sw += w;
        sx += w * p.eps;
        sy += w * y;
        sxx += w * p.eps * p.eps;
        sxy += w * p.eps * y;
        ++used;
    }
    LineFit fit;
    if (used < 2) return fit;
    double det = sw * sxx - sx * sx;
    if (std::abs(det) < 1e-12) return fit;
    fit.b = (sw * sxy - sx * sy) / det;
    fit.a = (sy * sxx - sx * sxy) / det;
    fit.ok = true;
    return fit;
}

// Mean pairwise crossing of the per-distance fits; empty optional when no
// pair crosses inside the (slightly widened) sampled range.
std::optional<double> crossing_from_points(const std::map<int, std::vector<PointResult>>& by_d,
                                           double lo, double hi) {
    std::vector<int> ds;
    for (const auto& [d, pts] : by_d) ds.push_back(d);
    std::vector<double> crossings;
    for (std::size_t i = 0; i < ds.size(); ++i) {
        for (std::size_t j = i + 1; j < ds.size(); ++j) {
            LineFit f1 = fit_logistic(by_d.at(ds[i]));
            LineFit f2 = fit_logistic(by_d.at(ds[j]));
            if (!f1.ok || !f2.ok) continue;
            if (std::abs(f1.b - f2.b) < 1e-9) continue;
            double x = (f2.a - f1.a) / (f1.b - f2.b);
            if (x >= lo && x <= hi) crossings.push_back(x);
        }
    }
    if (crossings.empty()) return std::nullopt;
    double sum = 0;
    for (double c : crossings) sum += c;
    return sum / double(crossings.size());
}

}  // namespace

const char* trial_kind_name(TrialKind k) {
    switch (k) {
        case TrialKind::DecodePartial: return "partial";
        case TrialKind::DecodeMaximal: return "maximal";
        case TrialKind::Correctability: return "correctability";
    }
    return "?";
}

int default_workers() {
    if (const char* env = std::getenv("TSCC_WORKERS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc > 0 ? int(hc) : 1;
}

uint64_t point_seed(uint64_t master, int d, std::size_t eps_index) {
    uint64_t h = master;
    h ^= 0x9e3779b97f4a7c15ull * (uint64_t(d) + 1);
    h = (h ^ (h >> 30)) * 0xbf58476d1ce4e5b9ull;
    h ^= 0x94d049bb133111ebull * (uint64_t(eps_index) + 1);
    h = (h ^ (h >> 27)) * 0x94d049bb133111ebull;
    return h ^ (h >> 31);
}

std::pair<double, double> wilson_interval(uint64_t failures, uint64_t trials) {
    if (trials == 0) return {0.0, 1.0};
    const double z = 1.959964;
    double n = double(trials);
    double p = double(failures) / n;
    double z2 = z * z;
    double denom = 1.0 + z2 / n;
    double center = (p + z2 / (2 * n)) / denom;
    double half = z * std::sqrt(p * (1 - p) / n + z2 / (4 * n * n)) / denom;
    return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

PointResult run_point(const TsccCode& code, TrialKind kind, double eps, StoppingRule stop,
                      uint64_t seed, int workers) {
    if (workers <= 0) workers = default_workers();
    PointResult res;
    res.d = code.distance();
    res.eps = eps;

    std::vector<uint8_t> chunk_failed(CHUNK);
    uint64_t base = 0;
    bool done = false;
    while (!done && base < stop.max_trials) {
        uint64_t count = std::min(CHUNK, stop.max_trials - base);
        if (workers == 1 || count < 8) {
            for (uint64_t t = 0; t < count; ++t) {
                chunk_failed[t] = run_trial(code, kind, eps, seed, base + t);
            }
        } else {
            std::vector<std::thread> pool;
            pool.reserve(workers);
            for (int w = 0; w < workers; ++w) {
                pool.emplace_back([&, w]() {
                    for (uint64_t t = uint64_t(w); t < count; t += uint64_t(workers)) {
                        chunk_failed[t] = run_trial(code, kind, eps, seed, base + t);
                    }
                });
            }
            for (auto& th : pool) th.join();
        }
        // Stopping decisions are made in trial order, so the outcome does not
        // depend on the worker count.
        for (uint64_t t = 0; t < count; ++t) {
            res.trials += 1;
            res.failures += chunk_failed[t];
            if (res.failures >= stop.target_failures || res.trials >= stop.max_trials) {
                done = true;
                break;
            }
        }
        base += count;
    }
    res.rate = res.trials ? double(res.failures) / double(res.trials) : 0.0;
    auto [lo, hi] = wilson_interval(res.failures, res.trials);
    res.ci_lo = lo;
    res.ci_hi = hi;
    return res;
}

SweepResult run_sweep(const SweepConfig& config, const PointSink& sink) {
    SweepResult result;
    result.config = config;
    result.version = VERSION;
    auto t0 = std::chrono::steady_clock::now();
    for (int d : config.distances) {
        TsccCode code = build_code(d);
        for (std::size_t ei = 0; ei < config.eps_grid.size(); ++ei) {
            PointResult pt = run_point(code, config.kind, config.eps_grid[ei],
                                       {config.max_trials, config.target_failures},
                                       point_seed(config.seed, d, ei), config.workers);
            if (sink) sink(pt);
            result.points.push_back(pt);
        }
    }
    result.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return result;
}

std::string sweep_to_jsonl(const SweepResult& result) {
    std::ostringstream os;
    os.precision(12);
    for (const auto& p : result.points) {
        os << "{\"d\":" << p.d << ",\"eps\":" << p.eps << ",\"trials\":" << p.trials
           << ",\"failures\":" << p.failures << ",\"rate\":" << p.rate << ",\"ci_lo\":" << p.ci_lo
           << ",\"ci_hi\":" << p.ci_hi << ",\"mode\":\"" << trial_kind_name(result.config.kind)
           << "\",\"seed\":" << result.config.seed << "}\n";
    }
    return os.str();
}

std::string sweep_to_csv(const SweepResult& result) {
    std::ostringstream os;
    os.precision(12);
    os << "d,eps,trials,failures,rate,ci_lo,ci_hi,mode,seed\n";
    for (const auto& p : result.points) {
        os << p.d << "," << p.eps << "," << p.trials << "," << p.failures << "," << p.rate << ","
           << p.ci_lo << "," << p.ci_hi << "," << trial_kind_name(result.config.kind) << ","
           << result.config.seed << "\n";
    }
    return os.str();
}

ThresholdEstimate estimate_threshold(const SweepResult& result) {
    ThresholdEstimate est;
    std::map<int, std::vector<PointResult>> by_d;
    double lo = 1.0, hi = 0.0;
    for (const auto& p : result.points) {
        by_d[p.d].push_back(p);
        lo = std::min(lo, p.eps);
        hi = std::max(hi, p.eps);
    }
    if (by_d.size() < 2) throw std::invalid_argument("estimate_threshold: need at least two distances");
    for (const auto& [d, pts] : by_d) {
        if (pts.size() < 3) throw std::invalid_argument("estimate_threshold: need at least three eps points");
    }
    double margin = 0.2 * (hi - lo);
    auto center = crossing_from_points(by_d, lo - margin, hi + margin);
    if (!center) {
        est.found = false;
        est.note = "no-crossing";
        return est;
    }
    est.found = true;
    est.value = *center;

    // Parametric bootstrap on the failure counts.
    RngStream rng(0x7353cc, 0);
    std::vector<double> samples;
    const int B = 200;
    for (int b = 0; b < B; ++b) {
        std::map<int, std::vector<PointResult>> resampled = by_d;
        for (auto& [d, pts] : resampled) {
            for (auto& p : pts) {
                if (p.trials == 0) continue;
                double mean = double(p.failures);
                double sd = std::sqrt(mean * (1.0 - p.rate) + 1e-12);
                // Box-Muller draw
                double u1 = std::max(rng.next_double(), 1e-12);
                double u2 = rng.next_double();
                double gauss = std::sqrt(-2.0 * std::log(u1)) * std::cos(6.28318530717958648 * u2);
                double k = std::round(mean + sd * gauss);
                k = std::clamp(k, 0.0, double(p.trials));
                p.failures = uint64_t(k);
                p.rate = double(p.failures) / double(p.trials);
            }
        }
        auto c = crossing_from_points(resampled, lo - margin, hi + margin);
        if (c) samples.push_back(*c);
    }
    if (samples.size() >= 20) {
        std::sort(samples.begin(), samples.end());
        est.ci_lo = samples[std::size_t(0.025 * double(samples.size()))];
        est.ci_hi = samples[std::size_t(0.975 * double(samples.size())) - 1];
    } else {
        est.ci_lo = est.ci_hi = est.value;
        est.note = "bootstrap-thin";
    }
    return est;
}

}  // namespace tscc
