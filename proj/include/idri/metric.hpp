#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "idri/motif.hpp"
#include "idri/rational.hpp"

namespace idri {

enum class MetricStatus {
    ok,
    insufficient_citations,  // fewer than two citers: the scale factor degenerates
    empty_denominator,       // two or more citers, but no co-references at all
};

std::string_view to_string(MetricStatus status);

/// Interdisciplinarity metrics of one paper, exact rationals. The value
/// fields are set when status == ok and absent otherwise — degenerate
/// papers never report a numeric index.
struct MetricResult {
    NodeId focal = 0;
    MetricStatus status = MetricStatus::insufficient_citations;
    std::optional<Rational> xm;       // duplicated share: xmotifs / coref_mass
    std::optional<Rational> xm_max;   // attainable maximum (citers-1)/citers
    std::optional<Rational> xm_norm;  // xm rescaled by xm_max, in [0, 1]
    std::optional<Rational> idri;     // 1 - xm_norm
};

MetricResult compute_metric(const FocalStats& stats);

/// The mediant (a+c)/(b+d) of the fractions a/b and c/d. Requires
/// non-negative numerators and positive denominators; it lies between the
/// two fractions, strictly when they differ.
Rational mediant(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d);

/// Membership filter for aggregation. Papers without citers never
/// contribute; the stricter rule also drops single-citer papers.
enum class IncludeRule { citers_ge_1, citers_ge_2 };

enum class AggregateStatus { ok, insufficient_group };

std::string_view to_string(AggregateStatus status);

struct AggregateResult {
    std::string group;
    std::vector<NodeId> members;  // members that passed the include rule
    std::uint64_t included = 0;
    std::uint64_t sum_citers = 0;
    std::uint64_t sum_coref_mass = 0;
    std::uint64_t sum_cocited = 0;
    std::uint64_t sum_xmotifs = 0;
    AggregateStatus status = AggregateStatus::insufficient_group;
    std::optional<Rational> xm_joint;       // generalized mediant of member shares
    std::optional<Rational> xm_norm_joint;  // scaled by sum_citers/(sum_citers - n)
    std::optional<Rational> idri_joint;     // 1 - xm_norm_joint
};

/// Joint metric of a group: sums motif counts and co-reference masses over
/// the included members (the generalized mediant of their shares) and
/// normalizes by sum_citers/(sum_citers - n). Groups whose sums cannot
/// support the metric come back as insufficient_group; an empty member
/// list after filtering throws.
AggregateResult aggregate(std::string group, std::span<const FocalStats> members,
                          IncludeRule rule = IncludeRule::citers_ge_1);

/// Signed diagnostic (citers_a - citers_b) * (share_a - share_b) for a
/// pair of papers. The joint normalized metric can fall outside the range
/// spanned by the two members only when this product is positive. Both
/// papers need at least two citers and nonzero co-reference mass.
Rational betweenness_diagnostic(const FocalStats& a, const FocalStats& b);

}  // namespace idri
