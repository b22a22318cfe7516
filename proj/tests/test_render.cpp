#include <doctest.h>

#include <sstream>
#include <vector>

#include <json.hpp>

#include "idri/metric.hpp"
#include "idri/motif.hpp"
#include "idri/render.hpp"
#include "support.hpp"

using namespace idri;
using namespace testsupport;

namespace {

struct Report {
    CitationGraph graph;
    std::vector<FocalStats> stats;
    std::vector<MetricResult> metrics;
};

Report figure1_report() {
    Report rep{figure1_graph(), {}, {}};
    rep.stats = all_focal_stats(rep.graph);
    for (const auto& st : rep.stats) rep.metrics.push_back(compute_metric(st));
    return rep;
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) lines.push_back(line);
    return lines;
}

}  // namespace

TEST_CASE("compute report CSV") {
    const Report rep = figure1_report();
    const std::string csv =
        render_compute_report(rep.graph, rep.stats, rep.metrics, ReportOptions{});
    const auto lines = lines_of(csv);

    REQUIRE(!lines.empty());
    CHECK(lines[0] == "paper_id,s,D,k,q,xm,xm_norm,idri,idri_percent,status");

    bool found_focal = false, found_degenerate = false;
    for (const auto& line : lines) {
        if (line == "i,3,4,3,1,0.2500,0.3750,0.6250,62.5%,ok") found_focal = true;
        if (line == "a,1,2,2,0,,,,,insufficient_citations") found_degenerate = true;
        CHECK(line.find(",c1,") == std::string::npos);  // uncited papers excluded
    }
    CHECK(found_focal);
    CHECK(found_degenerate);

    // rows stay sorted by paper id
    CHECK(lines[1].substr(0, 2) == "a,");
    CHECK(lines.back().substr(0, 2) == "i,");
}

TEST_CASE("fully disjoint co-references render as 100.0%") {
    const CitationGraph g = graph_from(
        {{"j1", "i"}, {"j1", "a"}, {"j2", "i"}, {"j2", "b"}, {"j3", "i"}, {"j3", "c"}});
    const auto stats = all_focal_stats(g);
    std::vector<MetricResult> metrics;
    for (const auto& st : stats) metrics.push_back(compute_metric(st));
    const std::string csv = render_compute_report(g, stats, metrics, ReportOptions{});
    CHECK(csv.find("i,3,3,3,0,0.0000,0.0000,1.0000,100.0%,ok") != std::string::npos);
}

TEST_CASE("compute report includes uncited papers on request") {
    const Report rep = figure1_report();
    ReportOptions options;
    options.include_uncited = true;
    const std::string csv = render_compute_report(rep.graph, rep.stats, rep.metrics, options);
    CHECK(csv.find("c1,0,0,0,0,,,,,insufficient_citations") != std::string::npos);
}

TEST_CASE("compute report JSON lines") {
    const Report rep = figure1_report();
    ReportOptions options;
    options.format = ReportFormat::json;
    const auto lines = lines_of(render_compute_report(rep.graph, rep.stats, rep.metrics, options));
    REQUIRE(lines.size() == 4);  // papers with citers only

    bool found_focal = false;
    for (const auto& line : lines) {
        const auto row = nlohmann::json::parse(line);
        if (row["paper_id"] == "i") {
            found_focal = true;
            CHECK(row["s"] == 3);
            CHECK(row["D"] == 4);
            CHECK(row["k"] == 3);
            CHECK(row["q"] == 1);
            CHECK(row["idri"] == "0.6250");
            CHECK(row["idri_percent"] == "62.5%");
            CHECK(row["status"] == "ok");
        }
        if (row["status"] == "insufficient_citations") CHECK(row["idri"].is_null());
    }
    CHECK(found_focal);
}

TEST_CASE("round option widens the value columns only") {
    const Report rep = figure1_report();
    ReportOptions options;
    options.value_places = 6;
    const std::string csv = render_compute_report(rep.graph, rep.stats, rep.metrics, options);
    CHECK(csv.find("i,3,4,3,1,0.250000,0.375000,0.625000,62.5%,ok") != std::string::npos);
}

TEST_CASE("aggregate report rows are sorted and rendered") {
    const CitationGraph g = figure2_graph();
    const std::vector<FocalStats> pair{focal_stats(g, g.require("i")),
                                       focal_stats(g, g.require("ip"))};
    std::vector<AggregateResult> groups;
    groups.push_back(aggregate("zeta", pair));
    AggregateResult dry;
    dry.group = "alpha";
    dry.status = AggregateStatus::insufficient_group;
    groups.push_back(dry);

    const auto lines = lines_of(render_aggregate_report(groups, ReportOptions{}));
    REQUIRE(lines.size() == 3);
    CHECK(lines[0] ==
          "group,n,sum_s,sum_D,sum_k,sum_q,xm_joint,xm_norm_joint,idri_joint,idri_percent,status");
    CHECK(lines[1] == "alpha,0,0,0,0,0,,,,,insufficient_group");
    CHECK(lines[2] == "zeta,2,7,10,7,3,0.3000,0.4200,0.5800,58.0%,ok");
}

TEST_CASE("check report lines") {
    const CitationGraph g = figure1_graph();
    std::vector<CheckRow> rows;
    rows.push_back({g.require("i"), 1, 1});
    rows.push_back({g.require("b"), 2, 1});  // fabricated mismatch
    const std::string report = render_check_report(g, rows);
    CHECK(report.find("i: fast=1 oracle=1 PASS") != std::string::npos);
    CHECK(report.find("b: fast=2 oracle=1 FAIL") != std::string::npos);
}

TEST_CASE("rendering twice is byte-identical") {
    const Report rep = figure1_report();
    const std::string a = render_compute_report(rep.graph, rep.stats, rep.metrics, ReportOptions{});
    const std::string b = render_compute_report(rep.graph, rep.stats, rep.metrics, ReportOptions{});
    CHECK(a == b);
}
