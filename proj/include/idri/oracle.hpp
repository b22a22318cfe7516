#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "idri/graph.hpp"

namespace idri {

inline constexpr std::size_t kDefaultEnumerationCap = 1000;

/// Brute-force count of the non-redundant X-motifs around `focal`.
///
/// Enumerates every citer pair, intersects their reference lists, and for
/// each co-cited partner admits the pair only when it merges two distinct
/// components of that partner's motif graph (spanning-forest counting).
/// Citer pairs are visited in lexicographic id order; the count is
/// order-invariant because the motif graph per cited pair is complete.
///
/// This path never touches the multiplicity shortcut used by focal_stats,
/// so the two stay independently checkable. Graphs larger than
/// `max_papers` throw, pointing at the fast path.
std::uint64_t enumerate_xmotifs(const CitationGraph& g, NodeId focal,
                                std::size_t max_papers = kDefaultEnumerationCap);

struct CheckRow {
    NodeId focal = 0;
    std::uint64_t fast = 0;
    std::uint64_t brute = 0;
    bool pass() const { return fast == brute; }
};

/// Fast path vs brute force, for one focal paper or all of them.
std::vector<CheckRow> run_check(const CitationGraph& g,
                                std::optional<NodeId> focal = std::nullopt,
                                std::size_t max_papers = kDefaultEnumerationCap);

}  // namespace idri
