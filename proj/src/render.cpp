#include "idri/render.hpp"

#include <algorithm>
#include <stdexcept>

#include <json.hpp>

#include "idri/io.hpp"

namespace idri {

namespace {

std::string opt_decimal(const std::optional<Rational>& value, int places) {
    return value ? to_decimal(*value, places) : std::string();
}

void append_json_value(nlohmann::ordered_json& row, const char* key, const std::string& text) {
    if (text.empty())
        row[key] = nullptr;
    else
        row[key] = text;
}

}  // namespace

std::string render_compute_report(const CitationGraph& g, std::span<const FocalStats> stats,
                                  std::span<const MetricResult> metrics,
                                  const ReportOptions& options) {
    if (stats.size() != g.num_papers() || metrics.size() != g.num_papers())
        throw std::invalid_argument("stats/metrics arrays must cover every paper");

    std::string out;
    if (options.format == ReportFormat::csv)
        out += "paper_id,s,D,k,q,xm,xm_norm,idri,idri_percent,status\n";

    for (NodeId node = 0; node < g.num_papers(); ++node) {
        const FocalStats& st = stats[node];
        const MetricResult& mr = metrics[node];
        if (st.citer_count == 0 && !options.include_uncited) continue;

        const std::string xm = opt_decimal(mr.xm, options.value_places);
        const std::string xm_norm = opt_decimal(mr.xm_norm, options.value_places);
        const std::string idri = opt_decimal(mr.idri, options.value_places);
        const std::string percent =
            mr.idri ? to_percent(*mr.idri, options.percent_places) : std::string();
        const std::string_view status = to_string(mr.status);

        if (options.format == ReportFormat::csv) {
            out += io::csv_field(g.id_of(node));
            out += ',' + std::to_string(st.citer_count);
            out += ',' + std::to_string(st.coref_mass);
            out += ',' + std::to_string(st.cocited_count);
            out += ',' + std::to_string(st.xmotif_count);
            out += ',' + xm;
            out += ',' + xm_norm;
            out += ',' + idri;
            out += ',' + percent;
            out += ',';
            out += status;
            out += '\n';
        } else {
            nlohmann::ordered_json row;
            row["paper_id"] = g.id_of(node);
            row["s"] = st.citer_count;
            row["D"] = st.coref_mass;
            row["k"] = st.cocited_count;
            row["q"] = st.xmotif_count;
            append_json_value(row, "xm", xm);
            append_json_value(row, "xm_norm", xm_norm);
            append_json_value(row, "idri", idri);
            append_json_value(row, "idri_percent", percent);
            row["status"] = status;
            out += row.dump();
            out += '\n';
        }
    }
    return out;
}

std::string render_aggregate_report(std::span<const AggregateResult> groups,
                                    const ReportOptions& options) {
    std::vector<const AggregateResult*> sorted;
    sorted.reserve(groups.size());
    for (const AggregateResult& group : groups) sorted.push_back(&group);
    std::sort(sorted.begin(), sorted.end(),
              [](const AggregateResult* a, const AggregateResult* b) { return a->group < b->group; });

    std::string out;
    if (options.format == ReportFormat::csv)
        out += "group,n,sum_s,sum_D,sum_k,sum_q,xm_joint,xm_norm_joint,idri_joint,idri_percent,status\n";

    for (const AggregateResult* group : sorted) {
        const std::string xm = opt_decimal(group->xm_joint, options.value_places);
        const std::string xm_norm = opt_decimal(group->xm_norm_joint, options.value_places);
        const std::string idri = opt_decimal(group->idri_joint, options.value_places);
        const std::string percent =
            group->idri_joint ? to_percent(*group->idri_joint, options.percent_places)
                              : std::string();
        const std::string_view status = to_string(group->status);

        if (options.format == ReportFormat::csv) {
            out += io::csv_field(group->group);
            out += ',' + std::to_string(group->included);
            out += ',' + std::to_string(group->sum_citers);
            out += ',' + std::to_string(group->sum_coref_mass);
            out += ',' + std::to_string(group->sum_cocited);
            out += ',' + std::to_string(group->sum_xmotifs);
            out += ',' + xm;
            out += ',' + xm_norm;
            out += ',' + idri;
            out += ',' + percent;
            out += ',';
            out += status;
            out += '\n';
        } else {
            nlohmann::ordered_json row;
            row["group"] = group->group;
            row["n"] = group->included;
            row["sum_s"] = group->sum_citers;
            row["sum_D"] = group->sum_coref_mass;
            row["sum_k"] = group->sum_cocited;
            row["sum_q"] = group->sum_xmotifs;
            append_json_value(row, "xm_joint", xm);
            append_json_value(row, "xm_norm_joint", xm_norm);
            append_json_value(row, "idri_joint", idri);
            append_json_value(row, "idri_percent", percent);
            row["status"] = status;
            out += row.dump();
            out += '\n';
        }
    }
    return out;
}

std::string render_check_report(const CitationGraph& g, std::span<const CheckRow> rows) {
    std::string out;
    for (const CheckRow& row : rows) {
        out += g.id_of(row.focal);
        out += ": fast=" + std::to_string(row.fast);
        out += " oracle=" + std::to_string(row.brute);
        out += row.pass() ? " PASS" : " FAIL";
        out += '\n';
    }
    return out;
}

}  // namespace idri
