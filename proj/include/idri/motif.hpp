#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "idri/graph.hpp"

namespace idri {

/// Co-citation statistics of one focal paper.
///
/// `cociters` maps every paper that shares at least one citer with the
/// focal paper to its number of common citers (ascending by node). The
/// scalar counts derive from the citer neighborhood:
///
///   citer_count   — papers citing the focal paper
///   coref_mass    — sum over those citers of (reference count - 1); the
///                   total co-reference volume around the focal paper
///   cocited_count — distinct co-cited papers (the focal paper's degree in
///                   the co-citation projection)
///   xmotif_count  — sum over co-cited papers of (common citers - 1): the
///                   non-redundant X-motifs, i.e. duplicated co-citations
///
/// In dataset mode coref_mass equals the sum of the multiplicities and
/// cocited_count == coref_mass - xmotif_count; both identities are checked
/// on every computation. In declared mode coref_mass may only exceed the
/// multiplicity sum.
///
/// All counts are taken over the edges present in the graph. For faithful
/// statistics of a focal paper the input must contain the complete
/// reference list of every paper citing it; this closure requirement is a
/// data contract, not something the engine can verify.
struct FocalStats {
    NodeId focal = 0;
    std::uint64_t citer_count = 0;
    std::uint64_t coref_mass = 0;
    std::uint64_t cocited_count = 0;
    std::uint64_t xmotif_count = 0;
    std::vector<std::pair<NodeId, std::uint32_t>> cociters;
};

/// Common-citer multiplicities of every paper co-cited with `focal`,
/// ascending by node. An uncited paper yields an empty vector.
std::vector<std::pair<NodeId, std::uint32_t>> co_citer_multiplicities(const CitationGraph& g,
                                                                      NodeId focal);

FocalStats focal_stats(const CitationGraph& g, NodeId focal,
                       RefCountMode mode = RefCountMode::dataset);

/// Stats for every paper, node order. Focal computations are independent
/// and run chunked across threads; the result is identical for any thread
/// count. threads == 0 picks hardware_concurrency.
std::vector<FocalStats> all_focal_stats(const CitationGraph& g,
                                        RefCountMode mode = RefCountMode::dataset,
                                        unsigned threads = 0);

}  // namespace idri
