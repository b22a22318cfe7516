#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "idri/io.hpp"
#include "idri/metric.hpp"
#include "idri/motif.hpp"
#include "idri/oracle.hpp"
#include "idri/render.hpp"
#include "idri/synth.hpp"

namespace py = pybind11;

namespace {

idri::RefCountMode parse_mode(const std::string& mode) {
    if (mode == "dataset") return idri::RefCountMode::dataset;
    if (mode == "declared") return idri::RefCountMode::declared;
    throw std::invalid_argument("mode must be 'dataset' or 'declared'");
}

idri::IncludeRule parse_rule(const std::string& rule) {
    if (rule == "s_ge_1") return idri::IncludeRule::citers_ge_1;
    if (rule == "s_ge_2") return idri::IncludeRule::citers_ge_2;
    throw std::invalid_argument("include rule must be 's_ge_1' or 's_ge_2'");
}

idri::ReportFormat parse_format(const std::string& format) {
    if (format == "csv") return idri::ReportFormat::csv;
    if (format == "json") return idri::ReportFormat::json;
    throw std::invalid_argument("format must be 'csv' or 'json'");
}

/// Focal stats with the paper ids resolved, so Python callers never touch
/// internal node indices.
struct PyStats {
    std::string paper;
    idri::FocalStats stats;
    std::map<std::string, std::uint32_t> multiplicities;
};

PyStats make_stats(const idri::CitationGraph& g, const idri::FocalStats& stats) {
    PyStats out;
    out.paper = g.id_of(stats.focal);
    out.stats = stats;
    for (const auto& [node, m] : stats.cociters) out.multiplicities.emplace(g.id_of(node), m);
    return out;
}

struct PyMetric {
    std::string paper;
    std::string status;
    std::optional<idri::Rational> xm, xm_max, xm_norm, idri;
};

struct PyAggregate {
    std::string group;
    std::vector<std::string> members;
    std::uint64_t n = 0, sum_s = 0, sum_d = 0, sum_k = 0, sum_q = 0;
    std::string status;
    std::optional<idri::Rational> xm_joint, xm_norm_joint, idri_joint;
};

idri::CitationGraph graph_from_edges(
    const std::vector<std::pair<std::string, std::string>>& edges) {
    idri::GraphBuilder builder;
    for (const auto& [citing, cited] : edges) builder.add_edge(citing, cited);
    return builder.build();
}

std::string graph_edge_csv(const idri::CitationGraph& g) {
    std::ostringstream out;
    idri::io::write_edge_csv(g, out);
    return out.str();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Co-citation interdisciplinarity (IDRI) toolkit";

    py::class_<idri::Rational>(m, "Rational")
        .def(py::init<std::int64_t>(), py::arg("value"))
        .def(py::init<std::int64_t, std::int64_t>(), py::arg("num"), py::arg("den"))
        .def_property_readonly("num", &idri::Rational::num)
        .def_property_readonly("den", &idri::Rational::den)
        .def("__float__", &idri::Rational::to_double)
        .def("__repr__", &idri::Rational::to_string)
        .def("__eq__",
             [](const idri::Rational& a, const idri::Rational& b) { return a == b; })
        .def("__lt__",
             [](const idri::Rational& a, const idri::Rational& b) { return a < b; });

    m.def("to_decimal", &idri::to_decimal, py::arg("value"), py::arg("places"));
    m.def("to_percent", &idri::to_percent, py::arg("value"), py::arg("places") = 1);

    py::class_<idri::CitationGraph>(m, "CitationGraph")
        .def_static(
            "from_csv",
            [](const std::string& path) { return idri::io::read_edge_csv_file(path); },
            py::arg("path"))
        .def_static("from_edges", &graph_from_edges, py::arg("edges"))
        .def_property_readonly("num_papers", &idri::CitationGraph::num_papers)
        .def_property_readonly("num_edges", &idri::CitationGraph::num_edges)
        .def("paper_ids",
             [](const idri::CitationGraph& g) {
                 std::vector<std::string> ids;
                 ids.reserve(g.num_papers());
                 for (idri::NodeId n = 0; n < g.num_papers(); ++n) ids.push_back(g.id_of(n));
                 return ids;
             })
        .def("references",
             [](const idri::CitationGraph& g, const std::string& id) {
                 std::vector<std::string> out;
                 for (const idri::NodeId n : g.references(g.require(id)))
                     out.push_back(g.id_of(n));
                 return out;
             },
             py::arg("paper"))
        .def("citers",
             [](const idri::CitationGraph& g, const std::string& id) {
                 std::vector<std::string> out;
                 for (const idri::NodeId n : g.citers(g.require(id))) out.push_back(g.id_of(n));
                 return out;
             },
             py::arg("paper"))
        .def("ref_count",
             [](const idri::CitationGraph& g, const std::string& id, const std::string& mode) {
                 return g.ref_count(g.require(id), parse_mode(mode));
             },
             py::arg("paper"), py::arg("mode") = "dataset")
        .def("declared_ref_count",
             [](const idri::CitationGraph& g, const std::string& id) {
                 return g.declared_ref_count(g.require(id));
             },
             py::arg("paper"))
        .def("summary",
             [](const idri::CitationGraph& g) {
                 const idri::IngestSummary& s = g.summary();
                 py::dict d;
                 d["edges_accepted"] = s.edges_accepted;
                 d["duplicates_dropped"] = s.duplicates_dropped;
                 d["self_loops_dropped"] = s.self_loops_dropped;
                 d["papers"] = s.papers;
                 return d;
             })
        .def("edge_csv", &graph_edge_csv)
        .def("__eq__", [](const idri::CitationGraph& a, const idri::CitationGraph& b) {
            return a == b;
        });

    m.def(
        "apply_metadata_csv",
        [](idri::CitationGraph& g, const std::string& path, const std::string& group_column,
           bool require_group) {
            const auto records =
                idri::io::read_metadata_csv_file(path, group_column, require_group);
            const idri::Metadata meta = idri::apply_metadata(g, records);
            py::dict groups;
            for (const auto& [node, label] : meta.group_of)
                groups[py::str(g.id_of(node))] = label;
            py::dict out;
            out["groups"] = groups;
            out["warnings"] = meta.warnings;
            return out;
        },
        py::arg("graph"), py::arg("path"), py::arg("group_column") = "group",
        py::arg("require_group") = false);

    py::class_<PyStats>(m, "FocalStats")
        .def_readonly("paper", &PyStats::paper)
        .def_property_readonly("citers",
                               [](const PyStats& s) { return s.stats.citer_count; })
        .def_property_readonly("coref_mass",
                               [](const PyStats& s) { return s.stats.coref_mass; })
        .def_property_readonly("cocited",
                               [](const PyStats& s) { return s.stats.cocited_count; })
        .def_property_readonly("xmotifs",
                               [](const PyStats& s) { return s.stats.xmotif_count; })
        .def_readonly("multiplicities", &PyStats::multiplicities)
        .def("as_dict", [](const PyStats& s) {
            py::dict d;
            d["paper_id"] = s.paper;
            d["s"] = s.stats.citer_count;
            d["D"] = s.stats.coref_mass;
            d["k"] = s.stats.cocited_count;
            d["q"] = s.stats.xmotif_count;
            return d;
        });

    m.def(
        "focal_stats",
        [](const idri::CitationGraph& g, const std::string& paper, const std::string& mode) {
            return make_stats(g, idri::focal_stats(g, g.require(paper), parse_mode(mode)));
        },
        py::arg("graph"), py::arg("paper"), py::arg("mode") = "dataset");

    m.def(
        "all_stats",
        [](const idri::CitationGraph& g, const std::string& mode) {
            std::vector<PyStats> out;
            for (const auto& st : idri::all_focal_stats(g, parse_mode(mode)))
                out.push_back(make_stats(g, st));
            return out;
        },
        py::arg("graph"), py::arg("mode") = "dataset");

    py::class_<PyMetric>(m, "MetricResult")
        .def_readonly("paper", &PyMetric::paper)
        .def_readonly("status", &PyMetric::status)
        .def_readonly("xm", &PyMetric::xm)
        .def_readonly("xm_max", &PyMetric::xm_max)
        .def_readonly("xm_norm", &PyMetric::xm_norm)
        .def_readonly("idri", &PyMetric::idri)
        .def_property_readonly("idri_percent", [](const PyMetric& r) -> std::optional<std::string> {
            if (!r.idri) return std::nullopt;
            return idri::to_percent(*r.idri);
        });

    m.def(
        "compute_metric",
        [](const PyStats& stats) {
            const idri::MetricResult r = idri::compute_metric(stats.stats);
            PyMetric out;
            out.paper = stats.paper;
            out.status = std::string(idri::to_string(r.status));
            out.xm = r.xm;
            out.xm_max = r.xm_max;
            out.xm_norm = r.xm_norm;
            out.idri = r.idri;
            return out;
        },
        py::arg("stats"));

    m.def("mediant", &idri::mediant, py::arg("a"), py::arg("b"), py::arg("c"), py::arg("d"));

    m.def(
        "betweenness_diagnostic",
        [](const PyStats& a, const PyStats& b) {
            return idri::betweenness_diagnostic(a.stats, b.stats);
        },
        py::arg("a"), py::arg("b"));

    py::class_<PyAggregate>(m, "AggregateResult")
        .def_readonly("group", &PyAggregate::group)
        .def_readonly("members", &PyAggregate::members)
        .def_readonly("n", &PyAggregate::n)
        .def_readonly("sum_s", &PyAggregate::sum_s)
        .def_readonly("sum_D", &PyAggregate::sum_d)
        .def_readonly("sum_k", &PyAggregate::sum_k)
        .def_readonly("sum_q", &PyAggregate::sum_q)
        .def_readonly("status", &PyAggregate::status)
        .def_readonly("xm_joint", &PyAggregate::xm_joint)
        .def_readonly("xm_norm_joint", &PyAggregate::xm_norm_joint)
        .def_readonly("idri_joint", &PyAggregate::idri_joint)
        .def_property_readonly("idri_percent",
                               [](const PyAggregate& r) -> std::optional<std::string> {
                                   if (!r.idri_joint) return std::nullopt;
                                   return idri::to_percent(*r.idri_joint);
                               });

    m.def(
        "aggregate",
        [](const std::string& group, const std::vector<PyStats>& members,
           const std::string& rule) {
            std::vector<idri::FocalStats> raw;
            std::map<idri::NodeId, std::string> names;
            raw.reserve(members.size());
            for (const PyStats& member : members) {
                raw.push_back(member.stats);
                names[member.stats.focal] = member.paper;
            }
            const idri::AggregateResult r = idri::aggregate(group, raw, parse_rule(rule));
            PyAggregate out;
            out.group = r.group;
            for (const idri::NodeId node : r.members) out.members.push_back(names.at(node));
            out.n = r.included;
            out.sum_s = r.sum_citers;
            out.sum_d = r.sum_coref_mass;
            out.sum_k = r.sum_cocited;
            out.sum_q = r.sum_xmotifs;
            out.status = std::string(idri::to_string(r.status));
            out.xm_joint = r.xm_joint;
            out.xm_norm_joint = r.xm_norm_joint;
            out.idri_joint = r.idri_joint;
            return out;
        },
        py::arg("group"), py::arg("members"), py::arg("rule") = "s_ge_1");

    m.def(
        "enumerate_xmotifs",
        [](const idri::CitationGraph& g, const std::string& paper, std::size_t cap) {
            return idri::enumerate_xmotifs(g, g.require(paper), cap);
        },
        py::arg("graph"), py::arg("paper"), py::arg("cap") = idri::kDefaultEnumerationCap);

    m.def(
        "run_check",
        [](const idri::CitationGraph& g, const std::optional<std::string>& focal,
           std::size_t cap) {
            std::optional<idri::NodeId> node;
            if (focal) node = g.require(*focal);
            py::list out;
            for (const idri::CheckRow& row : idri::run_check(g, node, cap))
                out.append(py::make_tuple(g.id_of(row.focal), row.fast, row.brute, row.pass()));
            return out;
        },
        py::arg("graph"), py::arg("focal") = std::nullopt,
        py::arg("cap") = idri::kDefaultEnumerationCap);

    m.def(
        "generate",
        [](std::uint64_t num_papers, std::uint64_t refs_per_paper, double uniform_mix,
           std::uint64_t seed) {
            return idri::generate({num_papers, refs_per_paper, uniform_mix, seed});
        },
        py::arg("num_papers"), py::arg("refs_per_paper"), py::arg("uniform_mix") = 0.0,
        py::arg("seed") = 0);

    m.def("decay_trend", &idri::decay_trend, py::arg("graph"), py::arg("min_citers") = 2);

    m.def(
        "compute_report",
        [](const idri::CitationGraph& g, const std::string& mode, const std::string& format,
           int round, bool include_uncited) {
            const auto stats = idri::all_focal_stats(g, parse_mode(mode));
            std::vector<idri::MetricResult> metrics;
            metrics.reserve(stats.size());
            for (const auto& st : stats) metrics.push_back(idri::compute_metric(st));
            idri::ReportOptions options;
            options.format = parse_format(format);
            options.value_places = round;
            options.include_uncited = include_uncited;
            return idri::render_compute_report(g, stats, metrics, options);
        },
        py::arg("graph"), py::arg("mode") = "dataset", py::arg("format") = "csv",
        py::arg("round") = 4, py::arg("include_uncited") = false);

#ifdef IDRI_VERSION
    m.attr("__version__") = IDRI_VERSION;
#else
    m.attr("__version__") = "dev";
#endif
}
