#include <doctest.h>

#include <algorithm>
#include <string>
#include <vector>

#include "idri/motif.hpp"
#include "idri/synth.hpp"
#include "support.hpp"

using namespace idri;
using namespace testsupport;

namespace {

std::vector<std::size_t> sorted_in_degrees(const CitationGraph& g) {
    std::vector<std::size_t> degrees;
    degrees.reserve(g.num_papers());
    for (NodeId n = 0; n < g.num_papers(); ++n) degrees.push_back(g.in_degree(n));
    std::sort(degrees.begin(), degrees.end());
    return degrees;
}

std::size_t percentile(const std::vector<std::size_t>& sorted, double p) {
    return sorted[std::size_t(double(sorted.size() - 1) * p)];
}

// Thirty focal papers f_t with strictly increasing citer counts t+3 and
// strictly decreasing duplicated share 2/(t+5). The helper papers all stay
// below three citers, so min_citers = 3 isolates the focals.
CitationGraph strict_decay_fixture() {
    GraphBuilder b;
    for (int t = 0; t < 30; ++t) {
        const std::string focal = "f" + std::to_string(t);
        const std::string c0 = focal + "_c0";
        const std::string c1 = focal + "_c1";
        b.add_edge(c0, focal);
        b.add_edge(c0, focal + "_x0");
        b.add_edge(c0, focal + "_x1");
        b.add_edge(c1, focal);
        b.add_edge(c1, focal + "_x0");
        b.add_edge(c1, focal + "_x1");
        for (int extra = 0; extra < t + 1; ++extra) {
            const std::string citer = focal + "_e" + std::to_string(extra);
            b.add_edge(citer, focal);
            b.add_edge(citer, focal + "_junk" + std::to_string(extra));
        }
    }
    return b.build();
}

}  // namespace

TEST_CASE("pure-uniform generation with one reference per paper") {
    const CitationGraph g = generate({5, 1, 1.0, 123});
    CHECK(g.num_papers() == 5);
    CHECK(g.num_edges() == 4);
    // every paper past the first cites exactly one predecessor
    for (NodeId n = 0; n < g.num_papers(); ++n) {
        const std::string& id = g.id_of(n);
        const std::size_t index = std::stoul(id.substr(1));
        if (index == 0) {
            CHECK(g.out_degree(n) == 0);
        } else {
            REQUIRE(g.out_degree(n) == 1);
            const std::string& target = g.id_of(g.references(n)[0]);
            CHECK(std::stoul(target.substr(1)) < index);
        }
    }
}

TEST_CASE("generation is deterministic in the seed") {
    const SynthConfig config{300, 6, 0.25, 42};
    CHECK(generate(config) == generate(config));
    const SynthConfig other{300, 6, 0.25, 43};
    CHECK(!(generate(config) == generate(other)));
}

TEST_CASE("edge count follows the arrival rule") {
    const CitationGraph g = generate({100, 5, 0.2, 7});
    CHECK(g.num_edges() == (100 - 5) * 5);
}

TEST_CASE("preferential attachment fattens the in-degree tail") {
    const CitationGraph preferential = generate({1000, 10, 0.1, 42});
    const CitationGraph uniform = generate({1000, 10, 1.0, 42});
    const auto pref_degrees = sorted_in_degrees(preferential);
    const auto unif_degrees = sorted_in_degrees(uniform);
    CHECK(percentile(pref_degrees, 0.99) > percentile(unif_degrees, 0.99));
}

TEST_CASE("unsatisfiable configs are rejected") {
    CHECK_THROWS_AS(generate({5, 10, 0.0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(generate({5, 5, 0.0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(generate({0, 1, 0.0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(generate({5, 0, 0.0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(generate({5, 2, 1.5, 1}), std::invalid_argument);
    CHECK_THROWS_AS(generate({5, 2, -0.1, 1}), std::invalid_argument);
}

TEST_CASE("strictly decreasing share yields a perfect anti-rank") {
    const CitationGraph g = strict_decay_fixture();
    // sanity: focal f0 has 3 citers, mass 2+2+1 = 5, motifs 2
    const FocalStats st = focal_stats(g, g.require("f0"));
    CHECK(st.citer_count == 3);
    CHECK(st.coref_mass == 5);
    CHECK(st.xmotif_count == 2);
    CHECK(decay_trend(g, 3) == doctest::Approx(-1.0));
}

TEST_CASE("constant citer counts make the trend undefined") {
    GraphBuilder b;
    for (int t = 0; t < 32; ++t) {
        const std::string focal = "f" + std::to_string(t);
        b.add_edge(focal + "_c0", focal);
        b.add_edge(focal + "_c0", focal + "_x");
        b.add_edge(focal + "_c1", focal);
        b.add_edge(focal + "_c1", focal + "_x");
    }
    const CitationGraph g = b.build();
    CHECK_THROWS_WITH_AS(decay_trend(g), doctest::Contains("undefined"), std::runtime_error);
}

TEST_CASE("too few qualifying papers") {
    const CitationGraph g = figure1_graph();
    CHECK_THROWS_WITH_AS(decay_trend(g), doctest::Contains("30"), std::runtime_error);
}

TEST_CASE("decay trend on a generated graph is a well-formed rank correlation") {
    const CitationGraph g = generate({2000, 10, 0.1, 42});
    const double rho = decay_trend(g);
    CHECK(rho >= -1.0);
    CHECK(rho <= 1.0);
    CHECK(decay_trend(g) == rho);  // pure function of the graph
}
