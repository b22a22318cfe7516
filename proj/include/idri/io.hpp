#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "idri/graph.hpp"

namespace idri::io {

/// Reads an edge CSV (header `citing_id,cited_id`, one edge per row).
/// Malformed rows raise std::runtime_error with "<source>:<line>" context.
CitationGraph read_edge_csv(std::istream& in, std::string_view source = "<stream>");
CitationGraph read_edge_csv_file(const std::string& path);

/// Reads a metadata CSV. The header must name a `paper_id` column; the
/// grouping label is taken from `group_column` when that column exists and
/// `ref_count` supplies declared reference-list lengths. When
/// `require_group` is set, a missing group column is an error.
std::vector<MetadataRecord> read_metadata_csv(std::istream& in,
                                              std::string_view source = "<stream>",
                                              const std::string& group_column = "group",
                                              bool require_group = false);
std::vector<MetadataRecord> read_metadata_csv_file(const std::string& path,
                                                   const std::string& group_column = "group",
                                                   bool require_group = false);

/// Writes the graph back out in the standard edge format, rows ordered by
/// (citing, cited) paper id.
void write_edge_csv(const CitationGraph& graph, std::ostream& out);

/// {"edges_accepted": ..., "duplicates_dropped": ..., "self_loops_dropped":
/// ..., "papers": ...}
std::string summary_json(const IngestSummary& summary);

/// Quotes a CSV field only when it contains a comma, quote or newline.
std::string csv_field(std::string_view field);

}  // namespace idri::io
