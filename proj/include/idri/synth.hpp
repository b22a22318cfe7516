#pragma once

#include <cstdint>

#include "idri/graph.hpp"

namespace idri {

/// Preferential-attachment citation network. Papers arrive in index order;
/// every paper past the first refs_per_paper draws that many distinct
/// targets among its predecessors, each chosen uniformly with probability
/// uniform_mix and otherwise proportionally to (in-degree + 1). Generation
/// is fully deterministic in the seed.
struct SynthConfig {
    std::uint64_t num_papers = 0;
    std::uint64_t refs_per_paper = 0;
    double uniform_mix = 0.0;
    std::uint64_t seed = 0;
};

/// Throws std::invalid_argument on an unsatisfiable config
/// (refs_per_paper must be positive and smaller than num_papers,
/// uniform_mix within [0, 1]).
CitationGraph generate(const SynthConfig& config);

/// Spearman rank correlation between citer count and the duplicated share
/// xmotifs/coref_mass, over papers with at least min_citers citers (papers
/// with zero co-reference mass carry no share and are skipped). Requires
/// at least 30 qualifying papers; constant ranks on either side make the
/// correlation undefined and throw.
double decay_trend(const CitationGraph& g, std::uint64_t min_citers = 2);

}  // namespace idri
