#include "harness/commands.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <thread>

#include <nlohmann/json.hpp>

#include "sigma/checkpoint.hpp"
#include "sigma/series_oracle.hpp"
#include "sigma/valuation.hpp"

namespace sigma::harness {

namespace {

using nlohmann::json;

unsigned resolve_workers(const RunConfig& config) {
    if (config.workers > 0) return config.workers;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

std::string default_checkpoint_path(const RunConfig& config) {
    return "sigma-coeffs-" + std::to_string(config.max_i) + "x" +
           std::to_string(config.max_j) + ".ckpt";
}

json to_json(const VerificationSummary& summary) {
    json mismatches = json::array();
    for (const ValuationReport& report : summary.non_matches) {
        mismatches.push_back({
            {"i", report.idx.i},
            {"j", report.idx.j},
            {"nu2_actual", report.nu2_actual},
            {"nu2_predicted", report.nu2_predicted},
            {"nu3_actual", report.nu3_actual},
            {"nu3_predicted", report.nu3_predicted},
            {"status", to_string(report.status)},
        });
    }
    return json{
        {"bounds", {{"max_i", summary.max_i}, {"max_j", summary.max_j}}},
        {"total", summary.total},
        {"matches", summary.matches},
        {"mismatches", std::move(mismatches)},
        {"elapsed_seconds", summary.elapsed_seconds},
    };
}

int run_compute(const RunConfig& config, std::ostream& out) {
    const unsigned workers = resolve_workers(config);
    const std::filesystem::path path =
        config.checkpoint_path.value_or(default_checkpoint_path(config));
    CoeffTable table(0, 0);
    if (std::filesystem::exists(path)) {
        std::ifstream in(path, std::ios::binary);
        if (!in) throw ParseError("cannot open '" + path.string() + "'", 0);
        const Checkpoint snapshot = Checkpoint::parse(in);
        out << "resuming from " << path.string() << " ("
            << snapshot.rows().size() << " entries)\n";
        table = compute_rectangle(config.max_i, config.max_j, workers, snapshot);
    } else {
        table = compute_rectangle(config.max_i, config.max_j, workers);
    }
    save_checkpoint(table, path);
    out << "computed rectangle " << config.max_i << "x" << config.max_j
        << " (working set: " << table.size() << " entries, weight cap "
        << table.weight_cap() << ", workers " << workers << ")\n"
        << "checkpoint written to " << path.string() << "\n";
    return exit_ok;
}

int run_verify(const RunConfig& config, std::ostream& out) {
    const auto start = std::chrono::steady_clock::now();
    CoeffTable table(0, 0);
    if (config.checkpoint_path) {
        table = load_checkpoint(*config.checkpoint_path);
    } else {
        table =
            compute_rectangle(config.max_i, config.max_j, resolve_workers(config));
    }
    VerificationSummary summary = verify_range(table, config.max_i, config.max_j);
    summary.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    const json report = to_json(summary);
    if (config.json_path) {
        std::ofstream json_out(*config.json_path, std::ios::binary);
        if (!json_out)
            throw ParseError("cannot open '" + *config.json_path +
                                 "' for writing",
                             0);
        json_out << report.dump(2) << "\n";
        out << summary.matches << "/" << summary.total
            << " indices match; report written to " << *config.json_path
            << "\n";
    } else {
        out << report.dump(2) << "\n";
    }
    return summary.all_match() ? exit_ok : exit_verification_mismatch;
}

int run_tables(const RunConfig& config, std::ostream& out) {
    const CoeffTable table =
        compute_rectangle(config.max_i, config.max_j, resolve_workers(config));
    out << emit_table(table, config.table_prime, config.max_i, config.max_j,
                      config.table_mode, config.output_format);
    return exit_ok;
}

struct OracleOutcome {
    bool q0 = false;
    bool q2 = false;
    bool weierstrass = false;
    bool equivalence = false;

    bool all() const { return q0 && q2 && weierstrass && equivalence; }
};

OracleOutcome run_oracle_suite(long order, unsigned workers,
                               std::ostream& out) {
    const long need_i = order >= 2 ? (order - 2) / 4 : 0;
    const long need_j = order >= 2 ? (order - 2) / 6 : 0;
    const CoeffTable table = compute_rectangle(need_i, need_j, workers);
    const TruncatedSeries sigma_tab = sigma_from_table(table, order);

    OracleOutcome outcome;
    outcome.q0 = apply_Q0(sigma_tab).is_zero();
    outcome.q2 = apply_Q2(sigma_tab).is_zero();
    outcome.weierstrass = weierstrass_residual(order).is_zero();
    outcome.equivalence = sigma_from_pe(order).agrees_with(sigma_tab, order);

    const auto line = [&](const char* name, bool ok) {
        out << (ok ? "ok   " : "FAIL ") << name << "\n";
    };
    line("Q0 annihilates the expansion", outcome.q0);
    line("Q2 annihilates the expansion below the truncation", outcome.q2);
    line("cubic identity residual vanishes", outcome.weierstrass);
    line("reconstruction agrees with the recursion", outcome.equivalence);
    return outcome;
}

int run_oracle_check(const RunConfig& config, std::ostream& out) {
    out << "oracle suite at order " << config.oracle_order << "\n";
    const OracleOutcome outcome =
        run_oracle_suite(config.oracle_order, resolve_workers(config), out);
    return outcome.all() ? exit_ok : exit_oracle_failure;
}

int run_report(const RunConfig& config, std::ostream& out) {
    const unsigned workers = resolve_workers(config);
    out << "== sigma coefficient report ==\n"
        << "rectangle: 0.." << config.max_i << " x 0.." << config.max_j
        << ", workers: " << workers << "\n\n";
    const CoeffTable table =
        compute_rectangle(config.max_i, config.max_j, workers);

    out << "-- expansion head (through z^11) --\n";
    const long head_order = std::min<long>(12, table.weight_cap() + 2);
    out << sigma_from_table(table, head_order).dump() << "\n";

    const VerificationSummary summary =
        verify_range(table, config.max_i, config.max_j);
    out << "-- valuation verification --\n"
        << "total " << summary.total << ", matches " << summary.matches
        << ", mismatch2 " << summary.mismatch2 << ", mismatch3 "
        << summary.mismatch3 << ", mismatch_both " << summary.mismatch_both
        << ", zero " << summary.zero_coefficients << " ("
        << summary.elapsed_seconds << " s)\n\n";
    for (const ValuationReport& report : summary.non_matches)
        out << "  non-match at (" << report.idx.i << ", " << report.idx.j
            << "): " << to_string(report.status) << "\n";

    for (unsigned long p : config.primes) {
        out << "-- nu_" << p << " --\n"
            << emit_table(table, p, config.max_i, config.max_j, TableMode::Nu,
                          config.output_format)
            << "\n";
        if (p == 3)
            out << "-- nu_3 - j --\n"
                << emit_table(table, p, config.max_i, config.max_j,
                              TableMode::NuMinusJ, config.output_format)
                << "\n";
        if (p > 3)
            out << "-- residual nu_" << p << "(a) - nu_" << p
                << "(b) (exploratory) --\n"
                << render_residual(
                       residual_report(table, p, config.max_i, config.max_j),
                       config.output_format)
                << "\n";
    }

    out << "-- oracle suite (order " << config.oracle_order << ") --\n";
    const OracleOutcome outcome =
        run_oracle_suite(config.oracle_order, workers, out);

    if (!summary.all_match()) return exit_verification_mismatch;
    if (!outcome.all()) return exit_oracle_failure;
    return exit_ok;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        switch (config.command) {
            case RunConfig::Command::Compute: return run_compute(config, out);
            case RunConfig::Command::Verify: return run_verify(config, out);
            case RunConfig::Command::Tables: return run_tables(config, out);
            case RunConfig::Command::OracleCheck:
                return run_oracle_check(config, out);
            case RunConfig::Command::Report: return run_report(config, out);
        }
        err << "error: unknown command\n";
        return exit_invalid_config;
    } catch (const NotPrime& e) {
        err << "error: " << e.what() << "\n";
        return exit_invalid_config;
    } catch (const DivisibilityViolation& e) {
        err << "error: " << e.what() << "\n";
        return exit_oracle_failure;
    } catch (const IntegralityViolation& e) {
        err << "error: " << e.what() << "\n";
        return exit_oracle_failure;
    } catch (const InsufficientPrecision& e) {
        err << "error: " << e.what() << "\n";
        return exit_invalid_config;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return exit_invalid_config;
    } catch (const std::exception& e) {
        // ParseError, VersionError, CheckpointMismatch, NotComputed and
        // filesystem failures: bad or missing input data.
        err << "error: " << e.what() << "\n";
        return exit_io_error;
    }
}

}  // namespace sigma::harness
