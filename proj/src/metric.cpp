#include "idri/metric.hpp"

#include <limits>
#include <stdexcept>

namespace idri {

namespace {

std::int64_t to_i64(std::uint64_t value) {
    if (value > std::uint64_t(std::numeric_limits<std::int64_t>::max()))
        throw std::overflow_error("count does not fit in 64-bit rational arithmetic");
    return std::int64_t(value);
}

}  // namespace

std::string_view to_string(MetricStatus status) {
    switch (status) {
        case MetricStatus::ok: return "ok";
        case MetricStatus::insufficient_citations: return "insufficient_citations";
        case MetricStatus::empty_denominator: return "empty_denominator";
    }
    return "unknown";
}

std::string_view to_string(AggregateStatus status) {
    switch (status) {
        case AggregateStatus::ok: return "ok";
        case AggregateStatus::insufficient_group: return "insufficient_group";
    }
    return "unknown";
}

MetricResult compute_metric(const FocalStats& stats) {
    MetricResult result;
    result.focal = stats.focal;
    if (stats.citer_count < 2) {
        result.status = MetricStatus::insufficient_citations;
        return result;
    }
    if (stats.coref_mass == 0) {
        result.status = MetricStatus::empty_denominator;
        return result;
    }
    const std::int64_t citers = to_i64(stats.citer_count);
    const std::int64_t motifs = to_i64(stats.xmotif_count);
    const std::int64_t mass = to_i64(stats.coref_mass);

    result.xm = Rational(motifs, mass);
    result.xm_max = Rational(citers - 1, citers);
    result.xm_norm = Rational(citers, citers - 1) * *result.xm;
    result.idri = Rational(1) - *result.xm_norm;
    result.status = MetricStatus::ok;
    return result;
}

Rational mediant(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
    if (b == 0 || d == 0) throw std::domain_error("mediant with zero denominator");
    if (b < 0 || d < 0) throw std::invalid_argument("mediant denominators must be positive");
    if (a < 0 || c < 0) throw std::invalid_argument("mediant numerators must be non-negative");
    return Rational(a + c, b + d);
}

AggregateResult aggregate(std::string group, std::span<const FocalStats> members,
                          IncludeRule rule) {
    AggregateResult out;
    out.group = std::move(group);

    const std::uint64_t min_citers = (rule == IncludeRule::citers_ge_2) ? 2 : 1;
    for (const FocalStats& member : members) {
        if (member.citer_count < min_citers) continue;
        out.members.push_back(member.focal);
        out.sum_citers += member.citer_count;
        out.sum_coref_mass += member.coref_mass;
        out.sum_cocited += member.cocited_count;
        out.sum_xmotifs += member.xmotif_count;
    }
    out.included = out.members.size();
    if (out.included == 0) throw std::runtime_error("no aggregable members");

    if (out.sum_citers <= out.included || out.sum_coref_mass == 0) {
        out.status = AggregateStatus::insufficient_group;
        return out;
    }

    const std::int64_t sum_s = to_i64(out.sum_citers);
    const std::int64_t n = to_i64(out.included);
    out.xm_joint = Rational(to_i64(out.sum_xmotifs), to_i64(out.sum_coref_mass));
    out.xm_norm_joint = Rational(sum_s, sum_s - n) * *out.xm_joint;
    out.idri_joint = Rational(1) - *out.xm_norm_joint;
    out.status = AggregateStatus::ok;
    return out;
}

Rational betweenness_diagnostic(const FocalStats& a, const FocalStats& b) {
    if (a.citer_count < 2 || b.citer_count < 2 || a.coref_mass == 0 || b.coref_mass == 0)
        throw std::invalid_argument(
            "betweenness diagnostic needs two citers and nonzero co-reference mass on both sides");
    const Rational citer_gap = Rational(to_i64(a.citer_count)) - Rational(to_i64(b.citer_count));
    const Rational share_gap = Rational(to_i64(a.xmotif_count), to_i64(a.coref_mass)) -
                               Rational(to_i64(b.xmotif_count), to_i64(b.coref_mass));
    return citer_gap * share_gap;
}

}  // namespace idri
