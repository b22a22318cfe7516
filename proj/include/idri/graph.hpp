#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace idri {

/// Dense paper index. Indices follow the lexicographic order of the paper
/// id strings, so a graph built from the same edge set always numbers its
/// papers identically, whatever the ingestion record order was.
using NodeId = std::uint32_t;

/// Which reference-list length feeds the co-reference mass: the out-degree
/// observed in the dataset, or an externally declared full count.
enum class RefCountMode { dataset, declared };

struct IngestSummary {
    std::uint64_t edges_accepted = 0;
    std::uint64_t duplicates_dropped = 0;
    std::uint64_t self_loops_dropped = 0;
    std::uint64_t papers = 0;

    friend bool operator==(const IngestSummary&, const IngestSummary&) = default;
};

/// Immutable directed citation graph. An edge j -> i records that paper j
/// lists paper i among its references; the inverse index (citers) is built
/// once at construction and both adjacency lists are sorted. Paper ids are
/// opaque, case-sensitive tokens.
class CitationGraph {
public:
    std::size_t num_papers() const { return ids_.size(); }
    std::size_t num_edges() const { return ref_targets_.size(); }

    const std::string& id_of(NodeId node) const { return ids_[node]; }
    std::optional<NodeId> find(std::string_view id) const;
    NodeId require(std::string_view id) const;  // throws std::runtime_error on unknown ids

    /// Out-edges of `node` (its reference list), ascending.
    std::span<const NodeId> references(NodeId node) const {
        return {ref_targets_.data() + ref_offsets_[node],
                ref_targets_.data() + ref_offsets_[node + 1]};
    }
    /// Papers citing `node`, ascending.
    std::span<const NodeId> citers(NodeId node) const {
        return {citer_sources_.data() + citer_offsets_[node],
                citer_sources_.data() + citer_offsets_[node + 1]};
    }

    std::size_t out_degree(NodeId node) const { return references(node).size(); }
    std::size_t in_degree(NodeId node) const { return citers(node).size(); }

    std::optional<std::uint32_t> declared_ref_count(NodeId node) const {
        const std::int64_t v = declared_[node];
        return v < 0 ? std::nullopt : std::optional<std::uint32_t>(std::uint32_t(v));
    }

    /// Attaches an externally declared full reference-list length. The
    /// count must be positive and at least the dataset out-degree.
    void set_declared_ref_count(NodeId node, std::uint32_t count);

    /// Reference-list length of `node` under the given mode. In declared
    /// mode a missing declared count throws, naming the paper.
    std::uint64_t ref_count(NodeId node, RefCountMode mode) const;

    const IngestSummary& summary() const { return summary_; }

    /// Structural equality: same papers, edges and declared counts.
    friend bool operator==(const CitationGraph& a, const CitationGraph& b) {
        return a.ids_ == b.ids_ && a.ref_offsets_ == b.ref_offsets_ &&
               a.ref_targets_ == b.ref_targets_ && a.declared_ == b.declared_;
    }

private:
    friend class GraphBuilder;

    std::vector<std::string> ids_;  // sorted; index == NodeId
    std::unordered_map<std::string, NodeId> index_;
    std::vector<std::uint64_t> ref_offsets_;
    std::vector<NodeId> ref_targets_;
    std::vector<std::uint64_t> citer_offsets_;
    std::vector<NodeId> citer_sources_;
    std::vector<std::int64_t> declared_;  // -1 == absent
    IngestSummary summary_;
};

/// Accumulates raw edge records and finalizes them into a CitationGraph.
/// Duplicate records are collapsed and self-loop records dropped, both
/// counted in the ingestion summary. Ids must be non-empty and free of
/// field-separator characters (comma, CR, LF).
class GraphBuilder {
public:
    void add_edge(std::string_view citing, std::string_view cited);

    /// Finalizes the graph; the builder is left empty. Throws
    /// std::runtime_error when no edge record was ever added.
    CitationGraph build();

private:
    NodeId intern(std::string_view id);

    std::vector<std::string> ids_;  // first-appearance order until build()
    std::unordered_map<std::string, NodeId> index_;
    std::vector<std::pair<NodeId, NodeId>> edges_;
    std::uint64_t self_loops_ = 0;
    std::uint64_t records_ = 0;
};

/// One row of per-paper metadata: optional group label (journal, author,
/// venue ...) and optional declared full reference-list length.
struct MetadataRecord {
    std::string paper;
    std::string group;  // empty == ungrouped
    std::optional<std::uint32_t> ref_count;
    std::size_t line = 0;  // source line, for error messages
};

struct Metadata {
    std::unordered_map<NodeId, std::string> group_of;
    std::vector<std::string> warnings;
};

/// Validates metadata rows against the graph, attaches declared reference
/// counts and returns the grouping table. Rows naming papers absent from
/// the graph become warnings; duplicate rows with conflicting values and
/// declared counts below the dataset out-degree are hard errors.
Metadata apply_metadata(CitationGraph& graph, const std::vector<MetadataRecord>& records);

}  // namespace idri
