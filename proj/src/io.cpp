#include "idri/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

namespace idri::io {

namespace {

void strip_bom(std::vector<std::string>& header) {
    if (!header.empty() && header[0].rfind("\xEF\xBB\xBF", 0) == 0) header[0].erase(0, 3);
}

/// Minimal RFC 4180 record reader: quoted fields may contain commas,
/// doubled quotes and newlines. Blank lines between records are skipped;
/// the line a record started on is kept for error messages.
class CsvParser {
public:
    CsvParser(std::istream& in, std::string_view source) : in_(in), source_(source) {}

    bool next(std::vector<std::string>& fields) {
        fields.clear();
        int c = in_.get();
        while (c == '\n' || c == '\r') {
            if (c == '\r' && in_.peek() == '\n') in_.get();
            ++line_;
            c = in_.get();
        }
        if (c == eof) return false;
        record_line_ = line_;

        std::string field;
        bool quoted = false;
        while (true) {
            if (c == eof) {
                if (quoted) throw std::runtime_error(where() + ": unterminated quoted field");
                fields.push_back(std::move(field));
                return true;
            }
            const char ch = char(c);
            if (quoted) {
                if (ch == '"') {
                    if (in_.peek() == '"') {
                        field += '"';
                        in_.get();
                    } else {
                        quoted = false;
                    }
                } else {
                    if (ch == '\n') ++line_;
                    field += ch;
                }
            } else if (ch == '"' && field.empty()) {
                quoted = true;
            } else if (ch == ',') {
                fields.push_back(std::move(field));
                field.clear();
            } else if (ch == '\n' || ch == '\r') {
                if (ch == '\r' && in_.peek() == '\n') in_.get();
                ++line_;
                fields.push_back(std::move(field));
                return true;
            } else {
                field += ch;
            }
            c = in_.get();
        }
    }

    std::string where() const {
        return std::string(source_) + ":" + std::to_string(record_line_);
    }

    std::size_t record_line() const { return record_line_; }

private:
    static constexpr int eof = std::char_traits<char>::eof();

    std::istream& in_;
    std::string source_;
    std::size_t line_ = 1;
    std::size_t record_line_ = 1;
};

std::ifstream open_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    return in;
}

}  // namespace

CitationGraph read_edge_csv(std::istream& in, std::string_view source) {
    CsvParser csv(in, source);
    std::vector<std::string> row;
    if (!csv.next(row))
        throw std::runtime_error(std::string(source) + ": empty graph (no header)");
    strip_bom(row);
    if (row != std::vector<std::string>{"citing_id", "cited_id"})
        throw std::runtime_error(csv.where() + ": expected header 'citing_id,cited_id'");

    GraphBuilder builder;
    while (csv.next(row)) {
        if (row.size() != 2)
            throw std::runtime_error(csv.where() + ": expected 2 fields, got " +
                                     std::to_string(row.size()));
        try {
            builder.add_edge(row[0], row[1]);
        } catch (const std::invalid_argument& e) {
            throw std::runtime_error(csv.where() + ": " + e.what());
        }
    }
    try {
        return builder.build();
    } catch (const std::runtime_error& e) {
        throw std::runtime_error(std::string(source) + ": " + e.what());
    }
}

CitationGraph read_edge_csv_file(const std::string& path) {
    auto in = open_file(path);
    return read_edge_csv(in, path);
}

std::vector<MetadataRecord> read_metadata_csv(std::istream& in, std::string_view source,
                                              const std::string& group_column,
                                              bool require_group) {
    CsvParser csv(in, source);
    std::vector<std::string> row;
    if (!csv.next(row)) throw std::runtime_error(std::string(source) + ": empty metadata file");
    strip_bom(row);

    std::size_t paper_col = row.size(), group_col = row.size(), count_col = row.size();
    for (std::size_t i = 0; i < row.size(); ++i) {
        if (row[i] == "paper_id") paper_col = i;
        if (row[i] == group_column) group_col = i;
        if (row[i] == "ref_count") count_col = i;
    }
    if (paper_col == row.size())
        throw std::runtime_error(csv.where() + ": metadata header lacks a 'paper_id' column");
    if (require_group && group_col == row.size())
        throw std::runtime_error(csv.where() + ": metadata header lacks a '" + group_column +
                                 "' column");
    const std::size_t width = row.size();

    std::vector<MetadataRecord> records;
    while (csv.next(row)) {
        if (row.size() != width)
            throw std::runtime_error(csv.where() + ": expected " + std::to_string(width) +
                                     " fields, got " + std::to_string(row.size()));
        MetadataRecord rec;
        rec.paper = row[paper_col];
        if (rec.paper.empty()) throw std::runtime_error(csv.where() + ": empty paper id");
        if (group_col < width) rec.group = row[group_col];
        if (count_col < width && !row[count_col].empty()) {
            const std::string& text = row[count_col];
            std::uint64_t value = 0;
            bool ok = !text.empty();
            for (const char ch : text) {
                if (ch < '0' || ch > '9') {
                    ok = false;
                    break;
                }
                value = value * 10 + std::uint64_t(ch - '0');
                if (value > 0xFFFFFFFFull) {
                    ok = false;
                    break;
                }
            }
            if (!ok || value == 0)
                throw std::runtime_error(csv.where() + ": ref_count '" + text +
                                         "' is not a positive integer");
            rec.ref_count = std::uint32_t(value);
        }
        rec.line = csv.record_line();
        records.push_back(std::move(rec));
    }
    return records;
}

std::vector<MetadataRecord> read_metadata_csv_file(const std::string& path,
                                                   const std::string& group_column,
                                                   bool require_group) {
    auto in = open_file(path);
    return read_metadata_csv(in, path, group_column, require_group);
}

void write_edge_csv(const CitationGraph& graph, std::ostream& out) {
    out << "citing_id,cited_id\n";
    for (NodeId u = 0; u < graph.num_papers(); ++u)
        for (const NodeId v : graph.references(u))
            out << csv_field(graph.id_of(u)) << ',' << csv_field(graph.id_of(v)) << '\n';
}

std::string summary_json(const IngestSummary& summary) {
    nlohmann::ordered_json j;
    j["edges_accepted"] = summary.edges_accepted;
    j["duplicates_dropped"] = summary.duplicates_dropped;
    j["self_loops_dropped"] = summary.self_loops_dropped;
    j["papers"] = summary.papers;
    return j.dump();
}

std::string csv_field(std::string_view field) {
    if (field.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(field);
    std::string quoted = "\"";
    for (const char ch : field) {
        if (ch == '"') quoted += '"';
        quoted += ch;
    }
    quoted += '"';
    return quoted;
}

}  // namespace idri::io
