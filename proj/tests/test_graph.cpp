#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <stdexcept>

#include "triquad/generators.hpp"
#include "triquad/graph.hpp"
#include "triquad/graph6.hpp"

#include "support/test_rng.hpp"

using namespace triquad;
using triquad::testing::random_graph;

TEST_CASE("build basic graphs") {
    const VertexPair k3_edges[] = {{0, 1}, {0, 2}, {1, 2}};
    const Graph k3 = Graph::build(3, k3_edges);
    CHECK(k3.vertex_count() == 3);
    CHECK(k3.edge_count() == 3);
    CHECK(k3.has_edge(0, 1));
    CHECK(k3.has_edge(2, 0));

    const Graph e2 = Graph::build(2, {});
    CHECK(e2.vertex_count() == 2);
    CHECK(e2.edge_count() == 0);

    const Graph bt = bowtie_graph();
    CHECK(bt.vertex_count() == 5);
    CHECK(bt.edge_count() == 6);
    CHECK(bt.degree(0) == 4);
    CHECK(bt.degree(1) == 2);
}

TEST_CASE("build rejects bad input") {
    CHECK_THROWS_AS(Graph::build(65, {}), std::invalid_argument);
    CHECK_THROWS_AS(Graph::build(-1, {}), std::invalid_argument);
    const VertexPair loop[] = {{1, 1}};
    CHECK_THROWS_AS(Graph::build(3, loop), std::invalid_argument);
    const VertexPair outside[] = {{0, 3}};
    CHECK_THROWS_AS(Graph::build(3, outside), std::invalid_argument);
}

TEST_CASE("duplicate edges are idempotent") {
    const VertexPair dup[] = {{0, 1}, {0, 1}, {1, 0}};
    CHECK(Graph::build(2, dup).edge_count() == 1);
}

TEST_CASE("from_rows validates invariants") {
    const std::uint64_t asym[] = {0b010, 0b000, 0b000};
    CHECK_THROWS_AS(Graph::from_rows(3, asym), std::invalid_argument);
    const std::uint64_t loop[] = {0b001};
    CHECK_THROWS_AS(Graph::from_rows(1, loop), std::invalid_argument);
    const std::uint64_t high[] = {0b100, 0b000};
    CHECK_THROWS_AS(Graph::from_rows(2, high), std::invalid_argument);
}

TEST_CASE("complement examples") {
    const Graph k3 = complete_graph(3);
    CHECK(k3.complement() == empty_graph(3));

    // bowtie complement: 4-cycle 1-3-2-4 plus isolated vertex 0
    const Graph bc = bowtie_graph().complement();
    CHECK(bc.degree(0) == 0);
    CHECK(bc.has_edge(1, 3));
    CHECK(bc.has_edge(3, 2));
    CHECK(bc.has_edge(2, 4));
    CHECK(bc.has_edge(4, 1));
    CHECK(bc.edge_count() == 4);
}

TEST_CASE("complement is an involution (randomized)") {
    std::mt19937_64 rng(20240811);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = static_cast<int>(rng() % 17);
        const Graph g = random_graph(rng, n);
        CHECK(g.complement().complement() == g);
    }
}

TEST_CASE("edges and non_edges partition all pairs") {
    const Graph k3 = complete_graph(3);
    CHECK(k3.edges() == std::vector<VertexPair>{{0, 1}, {0, 2}, {1, 2}});
    CHECK(k3.non_edges().empty());

    const Graph bt = bowtie_graph();
    CHECK(bt.edges().size() == 6);
    CHECK(bt.non_edges().size() == 4);

    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = static_cast<int>(rng() % 13);
        const Graph g = random_graph(rng, n);
        const auto e = g.edges();
        const auto ne = g.non_edges();
        CHECK(e.size() + ne.size() == g.pair_count());
        // lexicographic order and disjointness
        for (std::size_t i = 1; i < e.size(); ++i) CHECK(e[i - 1] < e[i]);
        for (std::size_t i = 1; i < ne.size(); ++i) CHECK(ne[i - 1] < ne[i]);
        for (const VertexPair& p : e) CHECK(g.has_edge(p.u, p.v));
        for (const VertexPair& p : ne) CHECK(!g.has_edge(p.u, p.v));
    }
}

TEST_CASE("graph6 frozen encodings") {
    CHECK(to_graph6(complete_graph(3)) == "Bw");
    CHECK(to_graph6(complete_graph(1)) == "@");
    CHECK(to_graph6(Graph()) == "?");
    CHECK(parse_graph6("Bw") == complete_graph(3));
    CHECK(parse_graph6("Bw\n") == complete_graph(3));
}

TEST_CASE("graph6 round trip (randomized)") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = static_cast<int>(rng() % 33);
        const Graph g = random_graph(rng, n);
        CHECK(parse_graph6(to_graph6(g)) == g);
    }
}

TEST_CASE("graph6 rejects malformed input") {
    CHECK_THROWS_AS(parse_graph6(""), Graph6Error);
    CHECK_THROWS_AS(parse_graph6("B"), Graph6Error);       // truncated payload
    CHECK_THROWS_AS(parse_graph6("Bww"), Graph6Error);     // trailing bytes
    CHECK_THROWS_AS(parse_graph6("B\x20"), Graph6Error);   // byte below 63
    CHECK_THROWS_AS(parse_graph6("~??"), Graph6Error);     // long form
    CHECK_THROWS_AS(parse_graph6("A?x"), Graph6Error);     // trailing garbage
    // n=2 has one real bit; "A_" (payload 100000) is K2, while "A@"
    // (payload 000001) sets a padding bit and must be rejected
    CHECK(parse_graph6("A_") == complete_graph(2));
    CHECK_THROWS_AS(parse_graph6("A@"), Graph6Error);
    CHECK_THROWS_AS(to_graph6(empty_graph(63)), std::invalid_argument);
}

TEST_CASE("generators") {
    CHECK(generate(GeneratorSpec::parse("complete", std::vector<long>{1})) ==
          complete_graph(1));
    CHECK(complete_graph(1).edge_count() == 0);

    const Graph r33 = rook_graph(3, 3);
    CHECK(r33.vertex_count() == 9);
    for (int v = 0; v < 9; ++v) CHECK(r33.degree(v) == 4);

    const Graph p5 = paley_graph(5);
    CHECK(p5.vertex_count() == 5);
    for (int v = 0; v < 5; ++v) CHECK(p5.degree(v) == 2);

    const Graph c5 = cycle_graph(5);
    CHECK(c5.edge_count() == 5);
}

TEST_CASE("generator parameter validation") {
    CHECK_THROWS_AS(generate(GeneratorSpec::parse("paley", std::vector<long>{9})),
                    std::invalid_argument);  // not prime
    CHECK_THROWS_AS(generate(GeneratorSpec::parse("paley", std::vector<long>{7})),
                    std::invalid_argument);  // 7 % 4 != 1
    CHECK_THROWS_AS(generate(GeneratorSpec::parse("cycle", std::vector<long>{2})),
                    std::invalid_argument);
    CHECK_THROWS_AS(generate(GeneratorSpec::parse("rook", std::vector<long>{0, 3})),
                    std::invalid_argument);
    CHECK_THROWS_AS(generate(GeneratorSpec::parse("rook", std::vector<long>{9, 9})),
                    std::invalid_argument);  // 81 > 64
    CHECK_THROWS_AS(GeneratorSpec::parse("petersen", {}), std::invalid_argument);
    CHECK_THROWS_AS(generate(GeneratorSpec::parse("bowtie", std::vector<long>{5})),
                    std::invalid_argument);  // wrong arity
}

TEST_CASE("permuted relabels edges") {
    const Graph bt = bowtie_graph();
    const int perm[] = {4, 3, 2, 1, 0};
    const Graph moved = bt.permuted(perm);
    CHECK(moved.degree(4) == 4);
    CHECK(moved.has_edge(4, 3));
    CHECK(moved.edge_count() == bt.edge_count());
}
