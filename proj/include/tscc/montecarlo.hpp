#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "tscc/code.hpp"

namespace tscc {

enum class TrialKind { DecodePartial, DecodeMaximal, Correctability };
const char* trial_kind_name(TrialKind k);

struct StoppingRule {
    uint64_t max_trials = 10000;
    uint64_t target_failures = 2000;
};

struct PointResult {
    int d = 0;
    double eps = 0.0;
    uint64_t trials = 0;
    uint64_t failures = 0;
    double rate = 0.0;
    double ci_lo = 0.0;
    double ci_hi = 0.0;
};

// Runs sample/decode/tally trials until either stopping bound is hit.
// Per-trial substreams keyed by trial index make the result identical for
// any worker count.
PointResult run_point(const TsccCode& code, TrialKind kind, double eps, StoppingRule stop,
                      uint64_t seed, int workers);

struct SweepConfig {
    TrialKind kind = TrialKind::DecodePartial;
    std::vector<int> distances;
    std::vector<double> eps_grid;  // ascending
    uint64_t max_trials = 10000;
    uint64_t target_failures = 2000;
    uint64_t seed = 1;
    int workers = 0;  // 0 picks the default
};

struct SweepResult {
    SweepConfig config;
    std::vector<PointResult> points;
    double wall_seconds = 0.0;
    std::string version;
};

using PointSink = std::function<void(const PointResult&)>;
SweepResult run_sweep(const SweepConfig& config, const PointSink& sink = {});

std::string sweep_to_jsonl(const SweepResult& result);
std::string sweep_to_csv(const SweepResult& result);

struct ThresholdEstimate {
    bool found = false;
    double value = 0.0;
    double ci_lo = 0.0;
    double ci_hi = 0.0;
    std::string note;
};

// Crossing-point extraction: per-distance logistic fit in log-odds versus
// erasure rate, averaged over distance pairs, with a parametric bootstrap
// interval.
ThresholdEstimate estimate_threshold(const SweepResult& result);

std::pair<double, double> wilson_interval(uint64_t failures, uint64_t trials);
int default_workers();
uint64_t point_seed(uint64_t master, int d, std::size_t eps_index);

}  // namespace tscc
