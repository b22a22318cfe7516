#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "idri/io.hpp"
#include "idri/metric.hpp"
#include "idri/motif.hpp"
#include "idri/oracle.hpp"
#include "idri/render.hpp"
#include "idri/synth.hpp"

namespace {

// Exit codes: 0 success, 1 usage, 2 data error, 3 check failure.
constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitCheckFailed = 3;

struct ComputeArgs {
    std::string edges;
    std::string metadata;
    std::string output = "-";
    idri::RefCountMode mode = idri::RefCountMode::dataset;
    idri::ReportFormat format = idri::ReportFormat::csv;
    int round = 4;
    bool include_uncited = false;
};

struct AggregateArgs {
    std::string edges;
    std::string metadata;
    std::string output = "-";
    std::string group_by = "group";
    idri::IncludeRule include_rule = idri::IncludeRule::citers_ge_1;
    idri::RefCountMode mode = idri::RefCountMode::dataset;
    idri::ReportFormat format = idri::ReportFormat::csv;
    int round = 4;
};

struct CheckArgs {
    std::string edges;
    std::string focal;
    std::size_t cap = idri::kDefaultEnumerationCap;
    bool inject_fault = false;  // test hook: perturbs the first fast value
};

struct SynthArgs {
    std::string output;
    std::uint64_t papers = 0;
    std::uint64_t refs = 0;
    double mix = 0.0;
    std::optional<std::uint64_t> seed;
};

void write_output(const std::string& path, const std::string& content) {
    if (path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file '" + path + "'");
    out << content;
}

void emit_warnings(const idri::Metadata& meta) {
    for (const std::string& warning : meta.warnings)
        std::cerr << "warning: " << warning << '\n';
}

void warn_self_citations(const idri::CitationGraph& graph) {
    if (graph.summary().self_loops_dropped > 0)
        std::cerr << "warning: dropped " << graph.summary().self_loops_dropped
                  << " self-citation record(s)\n";
}

int run_compute(const ComputeArgs& args) {
    idri::CitationGraph graph = idri::io::read_edge_csv_file(args.edges);
    warn_self_citations(graph);
    if (!args.metadata.empty()) {
        const auto records = idri::io::read_metadata_csv_file(args.metadata);
        emit_warnings(idri::apply_metadata(graph, records));
    } else if (args.mode == idri::RefCountMode::declared) {
        throw std::runtime_error("--mode declared requires --metadata with ref_count values");
    }
    std::cerr << idri::io::summary_json(graph.summary()) << '\n';

    const auto stats = idri::all_focal_stats(graph, args.mode);
    std::vector<idri::MetricResult> metrics;
    metrics.reserve(stats.size());
    for (const auto& st : stats) metrics.push_back(idri::compute_metric(st));

    idri::ReportOptions options;
    options.format = args.format;
    options.value_places = args.round;
    options.include_uncited = args.include_uncited;
    write_output(args.output, idri::render_compute_report(graph, stats, metrics, options));
    return kExitOk;
}

int run_aggregate(const AggregateArgs& args) {
    idri::CitationGraph graph = idri::io::read_edge_csv_file(args.edges);
    warn_self_citations(graph);
    const auto records =
        idri::io::read_metadata_csv_file(args.metadata, args.group_by, /*require_group=*/true);
    const idri::Metadata meta = idri::apply_metadata(graph, records);
    emit_warnings(meta);
    std::cerr << idri::io::summary_json(graph.summary()) << '\n';

    const auto stats = idri::all_focal_stats(graph, args.mode);

    std::map<std::string, std::vector<idri::FocalStats>> groups;
    for (const auto& [node, label] : meta.group_of) groups[label].push_back(stats[node]);

    std::vector<idri::AggregateResult> results;
    results.reserve(groups.size());
    for (const auto& [label, members] : groups) {
        try {
            results.push_back(idri::aggregate(label, members, args.include_rule));
        } catch (const std::runtime_error&) {
            // nothing aggregable: report the group as insufficient
            idri::AggregateResult empty;
            empty.group = label;
            empty.status = idri::AggregateStatus::insufficient_group;
            results.push_back(std::move(empty));
        }
    }

    idri::ReportOptions options;
    options.format = args.format;
    options.value_places = args.round;
    write_output(args.output, idri::render_aggregate_report(results, options));
    return kExitOk;
}

int run_check(const CheckArgs& args) {
    const idri::CitationGraph graph = idri::io::read_edge_csv_file(args.edges);
    warn_self_citations(graph);
    std::optional<idri::NodeId> focal;
    if (!args.focal.empty()) focal = graph.require(args.focal);

    auto rows = idri::run_check(graph, focal, args.cap);
    if (args.inject_fault && !rows.empty()) rows.front().fast += 1;

    std::cout << idri::render_check_report(graph, rows);
    std::size_t failures = 0;
    for (const auto& row : rows)
        if (!row.pass()) ++failures;
    std::cerr << rows.size() << " focal papers checked, " << failures << " mismatches\n";
    return failures == 0 ? kExitOk : kExitCheckFailed;
}

int run_synth(const SynthArgs& args) {
    idri::SynthConfig config;
    config.num_papers = args.papers;
    config.refs_per_paper = args.refs;
    config.uniform_mix = args.mix;
    config.seed = args.seed ? *args.seed : std::random_device{}();

    idri::CitationGraph graph;
    try {
        graph = idri::generate(config);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    std::cerr << "seed: " << config.seed << '\n';

    std::ostringstream csv;
    idri::io::write_edge_csv(graph, csv);
    write_output(args.output, csv.str());
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"co-citation interdisciplinarity (IDRI) toolkit"};
    app.require_subcommand(1);

    const std::map<std::string, idri::RefCountMode> mode_names{
        {"dataset", idri::RefCountMode::dataset}, {"declared", idri::RefCountMode::declared}};
    const std::map<std::string, idri::ReportFormat> format_names{
        {"csv", idri::ReportFormat::csv}, {"json", idri::ReportFormat::json}};
    const std::map<std::string, idri::IncludeRule> rule_names{
        {"s_ge_1", idri::IncludeRule::citers_ge_1}, {"s_ge_2", idri::IncludeRule::citers_ge_2}};

    ComputeArgs compute_args;
    auto* compute = app.add_subcommand("compute", "per-paper interdisciplinarity metrics");
    compute->add_option("edges", compute_args.edges, "edge CSV (citing_id,cited_id)")->required();
    compute->add_option("--metadata", compute_args.metadata,
                        "metadata CSV (paper_id,group,ref_count)");
    compute->add_option("--mode", compute_args.mode, "reference-count source")
        ->transform(CLI::CheckedTransformer(mode_names))
        ->default_str("dataset");
    compute->add_option("--format", compute_args.format, "output format")
        ->transform(CLI::CheckedTransformer(format_names))
        ->default_str("csv");
    compute->add_option("--round", compute_args.round, "decimal places for metric columns")
        ->check(CLI::Range(0, 12))
        ->capture_default_str();
    compute->add_flag("--include-uncited", compute_args.include_uncited,
                      "also emit papers without citers");
    compute->add_option("-o,--output", compute_args.output, "output file, '-' for stdout")
        ->capture_default_str();

    AggregateArgs aggregate_args;
    auto* aggregate = app.add_subcommand("aggregate", "joint metrics per group of papers");
    aggregate->add_option("edges", aggregate_args.edges, "edge CSV (citing_id,cited_id)")
        ->required();
    aggregate->add_option("--metadata", aggregate_args.metadata,
                          "metadata CSV (paper_id,group,ref_count)")
        ->required();
    aggregate->add_option("--group-by", aggregate_args.group_by,
                          "metadata column carrying the group label")
        ->capture_default_str();
    aggregate->add_option("--include-rule", aggregate_args.include_rule,
                          "which papers join their group's pool")
        ->transform(CLI::CheckedTransformer(rule_names))
        ->default_str("s_ge_1");
    aggregate->add_option("--mode", aggregate_args.mode, "reference-count source")
        ->transform(CLI::CheckedTransformer(mode_names))
        ->default_str("dataset");
    aggregate->add_option("--format", aggregate_args.format, "output format")
        ->transform(CLI::CheckedTransformer(format_names))
        ->default_str("csv");
    aggregate->add_option("--round", aggregate_args.round, "decimal places for metric columns")
        ->check(CLI::Range(0, 12))
        ->capture_default_str();
    aggregate->add_option("-o,--output", aggregate_args.output, "output file, '-' for stdout")
        ->capture_default_str();

    CheckArgs check_args;
    auto* check = app.add_subcommand("check", "compare the fast path against brute force");
    check->add_option("edges", check_args.edges, "edge CSV (citing_id,cited_id)")->required();
    check->add_option("--focal", check_args.focal, "check a single paper id");
    check->add_option("--cap", check_args.cap, "maximum graph size to enumerate")
        ->capture_default_str();
    check->add_flag("--inject-fault", check_args.inject_fault)->group("");

    SynthArgs synth_args;
    auto* synth = app.add_subcommand("synth", "generate a preferential-attachment network");
    synth->add_option("output", synth_args.output, "edge CSV to write, '-' for stdout")
        ->required();
    synth->add_option("--papers", synth_args.papers, "number of papers")->required();
    synth->add_option("--refs", synth_args.refs, "reference-list length per arriving paper")
        ->required();
    synth->add_option("--mix", synth_args.mix, "probability of a uniform (non-preferential) pick")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
    synth->add_option("--seed", synth_args.seed, "RNG seed (random when omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*compute) return run_compute(compute_args);
        if (*aggregate) return run_aggregate(aggregate_args);
        if (*check) return run_check(check_args);
        if (*synth) return run_synth(synth_args);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitData;
    }
    return kExitUsage;
}
