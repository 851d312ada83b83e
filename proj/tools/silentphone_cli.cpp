// Command-line front door: ingest / synth / sweep / mine / eval.
//
// Exit codes: 0 success, 1 data error (missing file, unusable log, empty
// dataset), 2 usage error.

#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "silentphone/silentphone.hpp"

namespace {

using namespace silentphone;

std::string read_file(const std::string& path) {
    std::ifstream stream(path, std::ios::binary);
    if (!stream) {
        throw FatalFormatError("cannot open input file: " + path);
    }
    std::ostringstream buffer;
    buffer << stream.rdbuf();
    return buffer.str();
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream stream(path, std::ios::binary);
    if (!stream) {
        throw FatalFormatError("cannot open output file: " + path);
    }
    stream << content;
}

void report_malformed(const ParseResult& parsed) {
    for (const auto& row : parsed.malformed) {
        std::cerr << "line " << row.line << ": " << row.reason << "\n";
    }
}

ParseResult load_log(const std::string& path) {
    auto parsed = parse_log_file(path);
    report_malformed(parsed);
    return parsed;
}

struct MiningFlags {
    double confidence = 0.8;
    std::vector<int> candidates;
    int min_events = 1;
    int min_support_count = -1;
    std::string cmax_mode = "day";

    PipelineOptions options() const {
        PipelineOptions opts;
        if (!candidates.empty()) {
            opts.candidates.clear();
            for (int m : candidates) opts.candidates.emplace_back(m);
        }
        opts.min_events = min_events;
        if (min_support_count >= 0) opts.min_support_count = min_support_count;
        opts.cmax_mode = cmax_mode == "week" ? CmaxMode::Week : CmaxMode::Day;
        return opts;
    }
};

void add_mining_flags(CLI::App* cmd, MiningFlags& flags) {
    cmd->add_option("-c,--confidence", flags.confidence,
                    "Confidence threshold t in (0,1]")
        ->check(CLI::Range(1e-9, 1.0));
    cmd->add_option("--candidates", flags.candidates,
                    "Candidate base periods in minutes (default 5,10,...,60)")
        ->delimiter(',')
        ->check(CLI::Range(1, 1440));
    cmd->add_option("--min-events", flags.min_events,
                    "Minimum events per slice before it can be dominant")
        ->check(CLI::Range(1, 1000000));
    cmd->add_option("--min-support-count", flags.min_support_count,
                    "Minimum Reject+Missed count per emitted rule (default: min-events)")
        ->check(CLI::Range(0, 1000000));
    cmd->add_option("--cmax-mode", flags.cmax_mode,
                    "Coverage normalization: day (1440 min) or week (10080 min)")
        ->check(CLI::IsMember({"day", "week"}));
}

int run_ingest(const std::string& input, const std::string& output) {
    auto parsed = load_log(input);
    const auto& data = parsed.dataset;
    std::size_t accept = 0, reject = 0, missed = 0, outgoing = 0;
    for (const auto& entry : data.records()) {
        switch (entry.activity) {
            case CallActivity::Accept: ++accept; break;
            case CallActivity::Reject: ++reject; break;
            case CallActivity::Missed: ++missed; break;
            case CallActivity::Outgoing: ++outgoing; break;
        }
    }
    std::cerr << "parsed " << data.record_count() << " records (Accept " << accept << ", Reject "
              << reject << ", Missed " << missed << ", Outgoing " << outgoing << "), skipped "
              << parsed.malformed.size() << " malformed rows\n";
    if (!output.empty()) {
        write_output(output, write_csv(data));
    }
    return 0;
}

int run_synth(const std::string& spec_path, const std::string& output,
              std::optional<std::uint64_t> seed_override) {
    auto spec = load_synth_spec(read_file(spec_path));
    if (seed_override) spec.seed = *seed_override;
    const Dataset data = generate(spec);
    write_output(output, write_csv(data));
    std::cerr << "generated " << data.record_count() << " records over " << spec.weeks
              << " weeks (seed " << spec.seed << ")\n";
    return 0;
}

int run_sweep(const std::string& input, const MiningFlags& flags, const std::string& output) {
    const auto parsed = load_log(input);
    const Dataset incoming = filter_incoming_related(parsed.dataset);
    const auto opts = flags.options();
    const auto sweeps = sweep_all_days(incoming, ConfidenceThreshold{flags.confidence},
                                       opts.candidates, opts.min_events, opts.cmax_mode);
    write_output(output, format_sweep_csv(sweeps));
    for (Weekday day : all_weekdays) {
        const auto& sweep = sweeps[static_cast<std::size_t>(day)];
        if (sweep.optimal) {
            std::cerr << to_string(day) << ": optimal base period " << sweep.optimal->minutes()
                      << " min\n";
        }
    }
    return 0;
}

int run_mine(const std::string& input, const MiningFlags& flags, const std::string& output) {
    const auto parsed = load_log(input);
    const auto result =
        mine_rules(parsed.dataset, ConfidenceThreshold{flags.confidence}, flags.options());
    write_output(output, serialize_rules(result.rules));
    std::cerr << format_rule_summary(result.rules);
    std::cerr << result.rules.size() << " rule(s) at confidence >= " << flags.confidence << "\n";
    return 0;
}

int run_eval(const std::string& input, const MiningFlags& flags,
             const std::vector<double>& thresholds, double holdout, const std::string& output) {
    const auto parsed = load_log(input);
    const auto reports = threshold_curve(parsed.dataset, thresholds, flags.options(), holdout);
    write_output(output, format_eval_csv(reports));
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Mine per-user phone silent-mode configuring rules from call logs"};
    app.require_subcommand(1);

    std::string input, output, spec_path;
    MiningFlags flags;
    std::vector<double> thresholds{1.0, 0.8, 0.6};
    double holdout = 0.0;
    std::optional<std::uint64_t> seed_override;

    auto* ingest = app.add_subcommand("ingest", "Parse and validate a call log, report activity counts");
    ingest->add_option("-i,--input", input, "Call-log CSV")->required();
    ingest->add_option("-o,--output", output, "Write the normalized CSV here");

    auto* synth = app.add_subcommand("synth", "Generate a synthetic call log from a JSON spec");
    synth->add_option("-s,--spec", spec_path, "Synthetic-log spec (JSON)")->required();
    synth->add_option("-o,--output", output, "Output CSV path (default stdout)");
    synth->add_option("--seed", seed_override, "Override the spec's seed");

    auto* sweep = app.add_subcommand("sweep", "Score candidate base periods per day (CSV output)");
    sweep->add_option("-i,--input", input, "Call-log CSV")->required();
    sweep->add_option("-o,--output", output, "Output CSV path (default stdout)");
    add_mining_flags(sweep, flags);

    auto* mine = app.add_subcommand("mine", "Mine silent-mode rules (JSON output)");
    mine->add_option("-i,--input", input, "Call-log CSV")->required();
    mine->add_option("-o,--output", output, "Output rules JSON path (default stdout)");
    add_mining_flags(mine, flags);

    auto* eval = app.add_subcommand("eval", "Coverage/accuracy per confidence threshold (CSV output)");
    eval->add_option("-i,--input", input, "Call-log CSV")->required();
    eval->add_option("-o,--output", output, "Output CSV path (default stdout)");
    eval->add_option("--thresholds", thresholds, "Thresholds to evaluate, each in (0,1]")
        ->delimiter(',')
        ->check(CLI::Range(1e-9, 1.0));
    eval->add_option("--holdout", holdout, "Chronological holdout fraction in [0,1)")
        ->check(CLI::Range(0.0, 0.999999));
    add_mining_flags(eval, flags);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (ingest->parsed()) return run_ingest(input, output);
        if (synth->parsed()) return run_synth(spec_path, output, seed_override);
        if (sweep->parsed()) return run_sweep(input, flags, output);
        if (mine->parsed()) return run_mine(input, flags, output);
        if (eval->parsed()) return run_eval(input, flags, thresholds, holdout, output);
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
