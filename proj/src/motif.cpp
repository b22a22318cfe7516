#include "idri/motif.hpp"

#include <algorithm>
#include <exception>
#include <stdexcept>
#include <thread>

namespace idri {

namespace {

/// Reusable dense counting buffer; `touched` remembers which slots to
/// reset so consecutive focals cost only their own neighborhood size.
struct Scratch {
    std::vector<std::uint32_t> count;
    std::vector<NodeId> touched;

    explicit Scratch(std::size_t n) : count(n, 0) {}
};

FocalStats compute_stats(const CitationGraph& g, NodeId focal, RefCountMode mode,
                         Scratch& scratch) {
    FocalStats out;
    out.focal = focal;

    const auto citer_list = g.citers(focal);
    out.citer_count = citer_list.size();

    std::uint64_t mass = 0;
    for (const NodeId citer : citer_list) {
        mass += g.ref_count(citer, mode) - 1;
        for (const NodeId target : g.references(citer)) {
            if (target == focal) continue;
            if (scratch.count[target]++ == 0) scratch.touched.push_back(target);
        }
    }
    std::sort(scratch.touched.begin(), scratch.touched.end());

    std::uint64_t multiplicity_sum = 0;
    std::uint64_t motifs = 0;
    out.cociters.reserve(scratch.touched.size());
    for (const NodeId cocited : scratch.touched) {
        const std::uint32_t m = scratch.count[cocited];
        scratch.count[cocited] = 0;
        out.cociters.emplace_back(cocited, m);
        multiplicity_sum += m;
        motifs += m - 1;
    }
    scratch.touched.clear();

    out.coref_mass = mass;
    out.cocited_count = out.cociters.size();
    out.xmotif_count = motifs;

    // Degree identity of the co-citation projection: the co-reference mass
    // splits exactly into distinct partners plus duplicated links.
    if (mode == RefCountMode::dataset) {
        if (mass != multiplicity_sum || out.cocited_count != mass - motifs)
            throw std::logic_error("co-citation degree identity violated for paper '" +
                                   g.id_of(focal) + "'");
    } else if (mass < multiplicity_sum) {
        throw std::logic_error("declared co-reference mass below dataset mass for paper '" +
                               g.id_of(focal) + "'");
    }
    return out;
}

}  // namespace

std::vector<std::pair<NodeId, std::uint32_t>> co_citer_multiplicities(const CitationGraph& g,
                                                                      NodeId focal) {
    Scratch scratch(g.num_papers());
    return compute_stats(g, focal, RefCountMode::dataset, scratch).cociters;
}

FocalStats focal_stats(const CitationGraph& g, NodeId focal, RefCountMode mode) {
    Scratch scratch(g.num_papers());
    return compute_stats(g, focal, mode, scratch);
}

std::vector<FocalStats> all_focal_stats(const CitationGraph& g, RefCountMode mode,
                                        unsigned threads) {
    const std::size_t n = g.num_papers();
    std::vector<FocalStats> results(n);

    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    if (n < 2048) threads = 1;

    if (threads == 1) {
        Scratch scratch(n);
        for (NodeId node = 0; node < n; ++node)
            results[node] = compute_stats(g, node, mode, scratch);
        return results;
    }

    const std::size_t chunk = (n + threads - 1) / threads;
    std::vector<std::exception_ptr> errors(threads);
    std::vector<std::thread> workers;
    workers.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
        workers.emplace_back([&, t] {
            const std::size_t begin = t * chunk;
            const std::size_t end = std::min(n, begin + chunk);
            if (begin >= end) return;
            try {
                Scratch scratch(n);
                for (std::size_t node = begin; node < end; ++node)
                    results[node] = compute_stats(g, NodeId(node), mode, scratch);
            } catch (...) {
                errors[t] = std::current_exception();
            }
        });
    }
    for (auto& worker : workers) worker.join();
    for (const auto& error : errors)
        if (error) std::rethrow_exception(error);
    return results;
}

}  // namespace idri
