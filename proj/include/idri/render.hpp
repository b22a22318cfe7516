#pragma once

#include <span>
#include <string>

#include "idri/graph.hpp"
#include "idri/metric.hpp"
#include "idri/oracle.hpp"

namespace idri {

enum class ReportFormat { csv, json };

struct ReportOptions {
    ReportFormat format = ReportFormat::csv;
    int value_places = 4;    // decimals for metric value columns
    int percent_places = 1;  // decimals for the percent column
    bool include_uncited = false;
};

/// Per-paper report, one row per paper in id order. `stats` and `metrics`
/// are parallel arrays covering every node of the graph. CSV columns:
/// paper_id,s,D,k,q,xm,xm_norm,idri,idri_percent,status; the JSON format
/// emits one object per line with the same fields. Metric fields of
/// degenerate papers stay empty (null in JSON), never zero.
std::string render_compute_report(const CitationGraph& g, std::span<const FocalStats> stats,
                                  std::span<const MetricResult> metrics,
                                  const ReportOptions& options);

/// Per-group report, rows sorted by group label. CSV columns:
/// group,n,sum_s,sum_D,sum_k,sum_q,xm_joint,xm_norm_joint,idri_joint,
/// idri_percent,status.
std::string render_aggregate_report(std::span<const AggregateResult> groups,
                                    const ReportOptions& options);

/// "<id>: fast=N oracle=M PASS|FAIL" lines, one per checked focal paper.
std::string render_check_report(const CitationGraph& g, std::span<const CheckRow> rows);

}  // namespace idri
