#include "idri/synth.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include "idri/motif.hpp"
#include "idri/rational.hpp"

namespace idri {

namespace {

/// Uniform draw from [0, n) by rejection, independent of the standard
/// library's distribution internals.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t n) {
    const std::uint64_t limit =
        std::numeric_limits<std::uint64_t>::max() -
        std::numeric_limits<std::uint64_t>::max() % n;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % n;
}

double next_unit(std::mt19937_64& rng) {
    return double(rng() >> 11) * 0x1.0p-53;
}

std::string paper_label(std::uint64_t index, std::size_t width) {
    std::string digits = std::to_string(index);
    return "p" + std::string(width - digits.size(), '0') + digits;
}

/// Average ranks (1-based, ties averaged), for any strictly comparable T.
template <typename T>
std::vector<double> average_ranks(const std::vector<T>& values) {
    const std::size_t n = values.size();
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });

    std::vector<double> ranks(n);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && !(values[order[i]] < values[order[j + 1]])) ++j;
        const double shared = (double(i) + double(j)) / 2.0 + 1.0;
        for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = shared;
        i = j + 1;
    }
    return ranks;
}

double pearson(const std::vector<double>& xs, const std::vector<double>& ys) {
    const double n = double(xs.size());
    double sx = 0, sy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sx += xs[i];
        sy += ys[i];
    }
    const double mx = sx / n, my = sy / n;
    double sxy = 0, sxx = 0, syy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double dx = xs[i] - mx, dy = ys[i] - my;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if (sxx == 0.0 || syy == 0.0)
        throw std::runtime_error("rank correlation undefined: constant ranks");
    return sxy / std::sqrt(sxx * syy);
}

}  // namespace

CitationGraph generate(const SynthConfig& config) {
    if (config.num_papers == 0) throw std::invalid_argument("num_papers must be positive");
    if (config.refs_per_paper == 0)
        throw std::invalid_argument("refs_per_paper must be positive");
    if (config.refs_per_paper >= config.num_papers)
        throw std::invalid_argument("refs_per_paper must be smaller than num_papers");
    if (!(config.uniform_mix >= 0.0 && config.uniform_mix <= 1.0))
        throw std::invalid_argument("uniform_mix must be within [0, 1]");

    const std::size_t width = std::to_string(config.num_papers - 1).size();
    std::mt19937_64 rng(config.seed);

    // Attachment pool: one entry per arrival plus one per received
    // citation, so a pool draw is proportional to (in-degree + 1).
    std::vector<std::uint32_t> pool;
    pool.reserve(config.num_papers * (1 + config.refs_per_paper));

    GraphBuilder builder;
    std::vector<std::uint32_t> picked;
    picked.reserve(config.refs_per_paper);

    for (std::uint64_t idx = 0; idx < config.num_papers; ++idx) {
        if (idx >= config.refs_per_paper) {
            picked.clear();
            while (picked.size() < config.refs_per_paper) {
                std::uint32_t candidate;
                if (next_unit(rng) < config.uniform_mix)
                    candidate = std::uint32_t(bounded(rng, idx));
                else
                    candidate = pool[bounded(rng, pool.size())];
                if (std::find(picked.begin(), picked.end(), candidate) != picked.end()) continue;
                picked.push_back(candidate);
            }
            const std::string citing = paper_label(idx, width);
            for (const std::uint32_t target : picked) {
                builder.add_edge(citing, paper_label(target, width));
                pool.push_back(target);
            }
        }
        pool.push_back(std::uint32_t(idx));
    }
    return builder.build();
}

double decay_trend(const CitationGraph& g, std::uint64_t min_citers) {
    const auto stats = all_focal_stats(g);

    std::vector<std::uint64_t> citers;
    std::vector<Rational> shares;
    for (const FocalStats& st : stats) {
        if (st.citer_count < min_citers || st.coref_mass == 0) continue;
        citers.push_back(st.citer_count);
        shares.push_back(Rational(std::int64_t(st.xmotif_count), std::int64_t(st.coref_mass)));
    }
    if (citers.size() < 30)
        throw std::runtime_error("decay trend needs at least 30 papers with " +
                                 std::to_string(min_citers) + "+ citers; found " +
                                 std::to_string(citers.size()));

    return pearson(average_ranks(citers), average_ranks(shares));
}

}  // namespace idri
