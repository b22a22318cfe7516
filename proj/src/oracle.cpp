#include "idri/oracle.hpp"

#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "idri/motif.hpp"

namespace idri {

namespace {

struct DisjointSet {
    explicit DisjointSet(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), std::size_t(0));
    }

    std::size_t find(std::size_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }

    bool unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[a] = b;
        return true;
    }

    std::vector<std::size_t> parent;
};

}  // namespace

std::uint64_t enumerate_xmotifs(const CitationGraph& g, NodeId focal, std::size_t max_papers) {
    if (g.num_papers() > max_papers)
        throw std::runtime_error("graph has " + std::to_string(g.num_papers()) +
                                 " papers, above the enumeration cap of " +
                                 std::to_string(max_papers) +
                                 "; use the multiplicity fast path (compute) instead");

    // Citer lists are ascending by node, which is lexicographic id order.
    const auto citer_list = g.citers(focal);

    // One spanning forest over the citers per co-cited partner: a citer
    // pair counts only when it connects two new components, which drops
    // exactly the redundant motifs.
    std::unordered_map<NodeId, DisjointSet> forests;
    std::uint64_t total = 0;

    for (std::size_t a = 0; a < citer_list.size(); ++a) {
        for (std::size_t b = a + 1; b < citer_list.size(); ++b) {
            const auto refs_a = g.references(citer_list[a]);
            const auto refs_b = g.references(citer_list[b]);
            std::size_t ia = 0, ib = 0;
            while (ia < refs_a.size() && ib < refs_b.size()) {
                if (refs_a[ia] < refs_b[ib]) {
                    ++ia;
                } else if (refs_b[ib] < refs_a[ia]) {
                    ++ib;
                } else {
                    const NodeId shared = refs_a[ia];
                    ++ia;
                    ++ib;
                    if (shared == focal) continue;
                    auto [it, fresh] = forests.try_emplace(shared, citer_list.size());
                    if (it->second.unite(a, b)) ++total;
                }
            }
        }
    }
    return total;
}

std::vector<CheckRow> run_check(const CitationGraph& g, std::optional<NodeId> focal,
                                std::size_t max_papers) {
    std::vector<CheckRow> rows;
    const auto check_one = [&](NodeId node) {
        CheckRow row;
        row.focal = node;
        row.fast = focal_stats(g, node).xmotif_count;
        row.brute = enumerate_xmotifs(g, node, max_papers);
        rows.push_back(row);
    };
    if (focal) {
        check_one(*focal);
    } else {
        for (NodeId node = 0; node < g.num_papers(); ++node) check_one(node);
    }
    return rows;
}

}  // namespace idri
