#include "idri/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace idri {

std::optional<NodeId> CitationGraph::find(std::string_view id) const {
    const auto it = index_.find(std::string(id));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

NodeId CitationGraph::require(std::string_view id) const {
    const auto node = find(id);
    if (!node) throw std::runtime_error("unknown paper id '" + std::string(id) + "'");
    return *node;
}

void CitationGraph::set_declared_ref_count(NodeId node, std::uint32_t count) {
    if (count == 0)
        throw std::invalid_argument("declared reference count for paper '" + ids_[node] +
                                    "' must be positive");
    if (count < out_degree(node))
        throw std::invalid_argument("declared reference count " + std::to_string(count) +
                                    " for paper '" + ids_[node] +
                                    "' is below its dataset out-degree " +
                                    std::to_string(out_degree(node)));
    declared_[node] = count;
}

std::uint64_t CitationGraph::ref_count(NodeId node, RefCountMode mode) const {
    if (mode == RefCountMode::dataset) return out_degree(node);
    const std::int64_t declared = declared_[node];
    if (declared < 0)
        throw std::runtime_error("no declared reference count for paper '" + ids_[node] + "'");
    return std::uint64_t(declared);
}

void GraphBuilder::add_edge(std::string_view citing, std::string_view cited) {
    ++records_;
    const NodeId u = intern(citing);
    const NodeId v = intern(cited);
    if (u == v) {
        ++self_loops_;
        return;
    }
    edges_.emplace_back(u, v);
}

NodeId GraphBuilder::intern(std::string_view id) {
    if (id.empty()) throw std::invalid_argument("empty paper id");
    if (id.find_first_of(",\r\n") != std::string_view::npos)
        throw std::invalid_argument("paper id '" + std::string(id) +
                                    "' contains a field-separator character");
    const auto [it, inserted] = index_.try_emplace(std::string(id), NodeId(ids_.size()));
    if (inserted) ids_.push_back(it->first);
    return it->second;
}

CitationGraph GraphBuilder::build() {
    if (records_ == 0) throw std::runtime_error("empty graph: no edge records");

    // Renumber papers into lexicographic id order so the graph is
    // canonical regardless of record order.
    const std::size_t n = ids_.size();
    std::vector<NodeId> order(n);
    std::iota(order.begin(), order.end(), NodeId(0));
    std::sort(order.begin(), order.end(),
              [&](NodeId a, NodeId b) { return ids_[a] < ids_[b]; });
    std::vector<NodeId> rank(n);
    for (std::size_t pos = 0; pos < n; ++pos) rank[order[pos]] = NodeId(pos);

    CitationGraph g;
    g.ids_.resize(n);
    for (std::size_t old = 0; old < n; ++old) g.ids_[rank[old]] = std::move(ids_[old]);
    g.index_.reserve(n);
    for (std::size_t i = 0; i < n; ++i) g.index_.emplace(g.ids_[i], NodeId(i));

    for (auto& [u, v] : edges_) {
        u = rank[u];
        v = rank[v];
    }
    std::sort(edges_.begin(), edges_.end());
    const auto unique_end = std::unique(edges_.begin(), edges_.end());
    const std::size_t accepted = std::size_t(unique_end - edges_.begin());
    const std::uint64_t duplicates = edges_.size() - accepted;
    edges_.erase(unique_end, edges_.end());

    g.ref_offsets_.assign(n + 1, 0);
    for (const auto& [u, v] : edges_) ++g.ref_offsets_[u + 1];
    for (std::size_t i = 0; i < n; ++i) g.ref_offsets_[i + 1] += g.ref_offsets_[i];
    g.ref_targets_.resize(accepted);
    {
        std::vector<std::uint64_t> cursor(g.ref_offsets_.begin(), g.ref_offsets_.end() - 1);
        for (const auto& [u, v] : edges_) g.ref_targets_[cursor[u]++] = v;
    }

    g.citer_offsets_.assign(n + 1, 0);
    for (const auto& [u, v] : edges_) ++g.citer_offsets_[v + 1];
    for (std::size_t i = 0; i < n; ++i) g.citer_offsets_[i + 1] += g.citer_offsets_[i];
    g.citer_sources_.resize(accepted);
    {
        std::vector<std::uint64_t> cursor(g.citer_offsets_.begin(), g.citer_offsets_.end() - 1);
        // edges_ is sorted by (u, v), so each citer list fills ascending
        for (const auto& [u, v] : edges_) g.citer_sources_[cursor[v]++] = u;
    }

    g.declared_.assign(n, -1);
    g.summary_ = IngestSummary{accepted, duplicates, self_loops_, n};

    index_.clear();
    edges_.clear();
    ids_.clear();
    self_loops_ = 0;
    records_ = 0;
    return g;
}

Metadata apply_metadata(CitationGraph& graph, const std::vector<MetadataRecord>& records) {
    Metadata meta;

    // Merge duplicate rows per paper first; differing non-empty values are
    // conflicts.
    std::vector<MetadataRecord> merged;
    std::unordered_map<std::string, std::size_t> slot_of;
    for (const auto& rec : records) {
        const auto [it, fresh] = slot_of.try_emplace(rec.paper, merged.size());
        if (fresh) {
            merged.push_back(rec);
            continue;
        }
        MetadataRecord& prev = merged[it->second];
        if (!rec.group.empty()) {
            if (!prev.group.empty() && prev.group != rec.group)
                throw std::runtime_error("metadata row (line " + std::to_string(rec.line) +
                                         "): paper '" + rec.paper +
                                         "' already has group '" + prev.group + "'");
            prev.group = rec.group;
        }
        if (rec.ref_count) {
            if (prev.ref_count && *prev.ref_count != *rec.ref_count)
                throw std::runtime_error("metadata row (line " + std::to_string(rec.line) +
                                         "): paper '" + rec.paper +
                                         "' already has ref_count " +
                                         std::to_string(*prev.ref_count));
            prev.ref_count = rec.ref_count;
        }
    }

    for (const auto& rec : merged) {
        const auto node = graph.find(rec.paper);
        if (!node) {
            meta.warnings.push_back("metadata row (line " + std::to_string(rec.line) +
                                    "): paper '" + rec.paper +
                                    "' is not present in the graph; row ignored");
            continue;
        }
        if (rec.ref_count) {
            try {
                graph.set_declared_ref_count(*node, *rec.ref_count);
            } catch (const std::invalid_argument& e) {
                throw std::runtime_error("metadata row (line " + std::to_string(rec.line) +
                                         "): " + e.what());
            }
        }
        if (!rec.group.empty()) meta.group_of.emplace(*node, rec.group);
    }
    return meta;
}

}  // namespace idri
