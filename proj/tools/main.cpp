#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"

#include "tscc/code.hpp"
#include "tscc/decoder.hpp"
#include "tscc/montecarlo.hpp"
#include "tscc/verify.hpp"

namespace {

using nlohmann::json;

int cmd_verify(int d) {
    std::cout << "verifying distance-" << d << " code\n";
    try {
        tscc::TsccCode code = tscc::build_code(d);
        auto checks = tscc::run_verification(code);
        bool all = true;
        for (const auto& c : checks) {
            std::cout << (c.pass ? "PASS " : "FAIL ") << c.name;
            if (!c.detail.empty()) std::cout << " (" << c.detail << ")";
            std::cout << "\n";
            all = all && c.pass;
        }
        std::cout << (all ? "all checks passed" : "some checks FAILED") << "\n";
        return all ? 0 : 2;
    } catch (const std::exception& e) {
        std::cout << "FAIL construction: " << e.what() << "\n";
        return 2;
    }
}

json point_to_json(const tscc::PointResult& p, const char* mode, uint64_t seed) {
    return json{{"d", p.d},     {"eps", p.eps},     {"trials", p.trials}, {"failures", p.failures},
                {"rate", p.rate}, {"ci_lo", p.ci_lo}, {"ci_hi", p.ci_hi},   {"mode", mode},
                {"seed", seed}};
}

int run_sweep_command(tscc::SweepConfig config, const std::string& out_path, const std::string& csv_path,
                      bool estimate) {
    auto result = tscc::run_sweep(config, [&](const tscc::PointResult& p) {
        std::cerr << "d=" << p.d << " eps=" << p.eps << " trials=" << p.trials
                  << " failures=" << p.failures << " rate=" << p.rate << "\n";
    });
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) {
            std::cerr << "cannot open " << out_path << "\n";
            return 1;
        }
        out << tscc::sweep_to_jsonl(result);
    } else {
        std::cout << tscc::sweep_to_jsonl(result);
    }
    if (!csv_path.empty()) {
        std::ofstream csv(csv_path);
        csv << tscc::sweep_to_csv(result);
    }
    // Crossing extraction needs at least two distances and three eps points.
    if (estimate && config.distances.size() >= 2 && config.eps_grid.size() >= 3) {
        auto th = tscc::estimate_threshold(result);
        json j{{"threshold_found", th.found}};
        if (th.found) {
            j["threshold"] = th.value;
            j["ci_lo"] = th.ci_lo;
            j["ci_hi"] = th.ci_hi;
        }
        if (!th.note.empty()) j["note"] = th.note;
        std::cout << j.dump() << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"topological subsystem color code erasure decoding toolkit"};
    app.require_subcommand(1);

    int verify_d = 4;
    auto* verify = app.add_subcommand("verify", "run all construction invariants and report pass/fail");
    verify->add_option("--d", verify_d, "code distance")->check(CLI::PositiveNumber);

    int dec_d = 4;
    std::string dec_mode = "partial";
    double dec_eps = 0.1;
    uint64_t dec_trials = 10000, dec_failures = 2000, dec_seed = 1;
    int dec_workers = 0;
    auto* dec = app.add_subcommand("decode", "single-point Monte Carlo run, prints a JSON record");
    dec->add_option("--d", dec_d, "code distance")->required();
    dec->add_option("--mode", dec_mode, "partial|maximal")->check(CLI::IsMember({"partial", "maximal"}));
    dec->add_option("--eps", dec_eps, "erasure probability")->required();
    dec->add_option("--trials", dec_trials, "max trials");
    dec->add_option("--target-failures", dec_failures, "stop after this many failures");
    dec->add_option("--seed", dec_seed, "rng seed");
    dec->add_option("--workers", dec_workers, "worker threads (0 = auto)");

    tscc::SweepConfig sweep_cfg;
    std::string sweep_mode = "partial";
    std::string sweep_out, sweep_csv;
    auto* sweep = app.add_subcommand("sweep", "full (d, eps) sweep, writes JSON-lines results");
    sweep->add_option("--mode", sweep_mode, "partial|maximal")->check(CLI::IsMember({"partial", "maximal"}));
    sweep->add_option("--distances", sweep_cfg.distances, "code distances")->delimiter(',')->required();
    sweep->add_option("--eps", sweep_cfg.eps_grid, "erasure probabilities")->delimiter(',')->required();
    sweep->add_option("--trials", sweep_cfg.max_trials, "max trials per point");
    sweep->add_option("--target-failures", sweep_cfg.target_failures, "failure cap per point");
    sweep->add_option("--seed", sweep_cfg.seed, "rng seed");
    sweep->add_option("--workers", sweep_cfg.workers, "worker threads (0 = auto)");
    sweep->add_option("--out", sweep_out, "JSON-lines output file (default stdout)");
    sweep->add_option("--csv", sweep_csv, "optional CSV mirror");

    tscc::SweepConfig corr_cfg;
    std::string corr_out, corr_csv;
    auto* corr = app.add_subcommand("correctability", "rank-condition sweep over erasure patterns");
    corr->add_option("--distances", corr_cfg.distances, "code distances")->delimiter(',')->required();
    corr->add_option("--eps", corr_cfg.eps_grid, "erasure probabilities")->delimiter(',')->required();
    corr->add_option("--trials", corr_cfg.max_trials, "max trials per point");
    corr->add_option("--target-failures", corr_cfg.target_failures, "failure cap per point");
    corr->add_option("--seed", corr_cfg.seed, "rng seed");
    corr->add_option("--workers", corr_cfg.workers, "worker threads (0 = auto)");
    corr->add_option("--out", corr_out, "JSON-lines output file (default stdout)");
    corr->add_option("--csv", corr_csv, "optional CSV mirror");

    int lat_d = 4;
    std::string lat_out;
    auto* lat = app.add_subcommand("export-lattice", "dump the lattice as a JSON adjacency description");
    lat->add_option("--d", lat_d, "code distance")->required();
    lat->add_option("--out", lat_out, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 1;
    }

    try {
        if (verify->parsed()) return cmd_verify(verify_d);

        if (dec->parsed()) {
            tscc::TsccCode code = tscc::build_code(dec_d);
            tscc::TrialKind kind =
                dec_mode == "maximal" ? tscc::TrialKind::DecodeMaximal : tscc::TrialKind::DecodePartial;
            auto p = tscc::run_point(code, kind, dec_eps, {dec_trials, dec_failures}, dec_seed, dec_workers);
            std::cout << point_to_json(p, dec_mode.c_str(), dec_seed).dump() << "\n";
            return 0;
        }

        if (sweep->parsed()) {
            sweep_cfg.kind = sweep_mode == "maximal" ? tscc::TrialKind::DecodeMaximal
                                                     : tscc::TrialKind::DecodePartial;
            return run_sweep_command(sweep_cfg, sweep_out, sweep_csv, true);
        }

        if (corr->parsed()) {
            corr_cfg.kind = tscc::TrialKind::Correctability;
            return run_sweep_command(corr_cfg, corr_out, corr_csv, true);
        }

        if (lat->parsed()) {
            std::string text = tscc::lattice_to_json(tscc::inflate(tscc::build_colex(lat_d)));
            if (lat_out.empty()) {
                std::cout << text << "\n";
            } else {
                std::ofstream out(lat_out);
                if (!out) {
                    std::cerr << "cannot open " << lat_out << "\n";
                    return 1;
                }
                out << text << "\n";
            }
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 1;
}
