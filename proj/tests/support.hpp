#pragma once

#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <random>
#include <string>
#include <utility>

#include "idri/graph.hpp"

namespace testsupport {

inline idri::CitationGraph graph_from(
    std::initializer_list<std::pair<const char*, const char*>> edges) {
    idri::GraphBuilder builder;
    for (const auto& [citing, cited] : edges) builder.add_edge(citing, cited);
    return builder.build();
}

// Worked example: three citers of i with reference lists {i,a,b}, {i,b},
// {i,c}. Focal i has s=3, D=4, k=3, q=1.
inline idri::CitationGraph figure1_graph() {
    return graph_from({{"c1", "i"},
                       {"c1", "a"},
                       {"c1", "b"},
                       {"c2", "i"},
                       {"c2", "b"},
                       {"c3", "i"},
                       {"c3", "c"}});
}

inline const char* figure1_csv() {
    return "citing_id,cited_id\nc1,i\nc1,a\nc1,b\nc2,i\nc2,b\nc3,i\nc3,c\n";
}

// Two-paper joint example: focal i (citers c1,c2,c4) has s=3, D=5, q=2;
// focal ip (citers c2,c4,c5,c6) has s=4, D=5, q=1. The pair {c2,c4} citing
// both i and ip is the motif the two papers share.
inline idri::CitationGraph figure2_graph() {
    return graph_from({{"c1", "i"},
                       {"c1", "a"},
                       {"c1", "x"},
                       {"c2", "i"},
                       {"c2", "ip"},
                       {"c2", "x"},
                       {"c4", "i"},
                       {"c4", "ip"},
                       {"c5", "ip"},
                       {"c5", "b"},
                       {"c6", "ip"},
                       {"c6", "c"}});
}

inline const char* figure2_csv() {
    return "citing_id,cited_id\n"
           "c1,i\nc1,a\nc1,x\n"
           "c2,i\nc2,ip\nc2,x\n"
           "c4,i\nc4,ip\n"
           "c5,ip\nc5,b\n"
           "c6,ip\nc6,c\n";
}

inline std::string pad_id(std::size_t index) {
    std::string digits = std::to_string(index);
    if (digits.size() < 3) digits.insert(0, 3 - digits.size(), '0');
    return "p" + digits;
}

/// Random sparse digraph with up to max_papers nodes, out-degrees 0..6,
/// no self-loops. Occasionally repeats a record to exercise dedup.
inline idri::CitationGraph random_graph(std::mt19937_64& rng, std::size_t max_papers = 50) {
    const std::size_t n = 2 + rng() % (max_papers - 1);
    idri::GraphBuilder builder;
    std::size_t records = 0;
    for (std::size_t j = 0; j < n; ++j) {
        const std::size_t degree = rng() % std::min<std::size_t>(n, 7);
        for (std::size_t d = 0; d < degree; ++d) {
            const std::size_t target = rng() % n;
            if (target == j) continue;
            builder.add_edge(pad_id(j), pad_id(target));
            ++records;
            if (rng() % 16 == 0) {
                builder.add_edge(pad_id(j), pad_id(target));
                ++records;
            }
        }
    }
    if (records == 0) builder.add_edge(pad_id(0), pad_id(1));
    return builder.build();
}

class TempFile {
public:
    TempFile(const std::string& stem, const std::string& content) {
        path_ = std::filesystem::temp_directory_path() /
                ("idri_test_" + stem + "_" + std::to_string(counter_++));
        std::ofstream out(path_, std::ios::binary);
        out << content;
    }
    ~TempFile() {
        std::error_code ec;
        std::filesystem::remove(path_, ec);
    }
    TempFile(const TempFile&) = delete;
    TempFile& operator=(const TempFile&) = delete;

    const std::filesystem::path& path() const { return path_; }
    std::string str() const { return path_.string(); }

private:
    inline static int counter_ = 0;
    std::filesystem::path path_;
};

}  // namespace testsupport
