#include <doctest.h>

#include <random>
#include <set>

#include "cospec/graph.hpp"
#include "cospec/miner.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

using namespace cospec;
using namespace cospec::testing;

TEST_CASE("complement of small graphs") {
    CHECK(complement(complete_graph(3)) == empty_graph(3));
    CHECK(complement(empty_graph(0)) == empty_graph(0));

    // P4 is self-complementary: complement edges of 0-1-2-3 are exactly
    // {02, 03, 13}, the path 2-0-3-1.
    const Graph p4c = complement(path_graph(4));
    CHECK(p4c == Graph::from_edges(4, {{0, 2}, {0, 3}, {1, 3}}));
    CHECK(isomorphic_bruteforce(p4c, path_graph(4)));
    CHECK(canonical_form(p4c) == canonical_form(path_graph(4)));
}

TEST_CASE("complement is an involution") {
    std::mt19937 rng(7001);
    for (int trial = 0; trial < 50; ++trial) {
        const Graph g = random_graph(rng, 1 + trial % 12);
        CHECK(complement(complement(g)) == g);
    }
}

TEST_CASE("delete_vertex") {
    CHECK(delete_vertex(complete_graph(3), 0) == complete_graph(2));
    CHECK(delete_vertex(path_graph(4), 3) == path_graph(3));
    for (int v = 0; v < 5; ++v)
        CHECK(canonical_form(delete_vertex(cycle_graph(5), v)) == canonical_form(path_graph(4)));
    CHECK_THROWS_AS(delete_vertex(path_graph(3), 3), std::out_of_range);
}

TEST_CASE("overgraph") {
    const Graph g = path_graph(3);
    CHECK(overgraph(g, zero_bits(3)) == disjoint_union(path_graph(3), empty_graph(1)));
    CHECK(overgraph(empty_graph(4), ones_bits(4)) ==
          Graph::from_edges(5, {{0, 4}, {1, 4}, {2, 4}, {3, 4}}));
    CHECK(isomorphic_bruteforce(overgraph(empty_graph(4), ones_bits(4)), star_graph(4)));
    CHECK_THROWS_AS(overgraph(g, zero_bits(2)), std::invalid_argument);
}

TEST_CASE("split_root") {
    {
        const auto [rest, b] = split_root(RootedGraph{complete_graph(2), 1});
        CHECK(rest == empty_graph(1));
        CHECK(b == BitVec{1});
    }
    {
        const auto [rest, b] = split_root(RootedGraph{path_graph(4), 3});
        CHECK(rest == path_graph(3));
        CHECK(b == BitVec{0, 0, 1});
    }
    CHECK_THROWS_AS(split_root(RootedGraph{empty_graph(0), 0}), std::invalid_argument);
}

TEST_CASE("split_root / overgraph round trip, exhaustive n <= 6") {
    for (int n = 1; n <= 6; ++n) {
        for (const Graph& g : enumerate_graphs(n)) {
            for (int root = 0; root < n; ++root) {
                const auto [rest, b] = split_root(RootedGraph{g, root});
                CHECK(canonical_form(overgraph(rest, b)) == canonical_form(g));
                CHECK(relabel_root_last(RootedGraph{g, root}) == overgraph(rest, b));
            }
        }
    }
}

TEST_CASE("canonical_form basics") {
    const Graph p3a = Graph::from_edges(3, {{0, 1}, {1, 2}});
    const Graph p3b = Graph::from_edges(3, {{1, 0}, {0, 2}}); // relabeled path
    CHECK(canonical_form(p3a) == canonical_form(p3b));
    CHECK(canonical_form(complete_graph(3)) != canonical_form(p3a));
    std::mt19937 rng(1);
    CHECK_THROWS_AS(canonical_form(random_graph(rng, 11)), std::invalid_argument);
}

TEST_CASE("11 isomorphism classes on 4 vertices") {
    // Independent classification of all 2^6 labeled graphs by direct
    // permutation search, then cross-check canonical_form against it.
    std::vector<Graph> reps;
    for (std::uint64_t mask = 0; mask < 64; ++mask) {
        const Graph g = from_upper_bits(4, mask);
        bool fresh = true;
        for (const Graph& rep : reps)
            if (isomorphic_bruteforce(rep, g)) {
                fresh = false;
                CHECK(canonical_form(rep) == canonical_form(g));
                break;
            }
        if (fresh) reps.push_back(g);
    }
    CHECK(reps.size() == 11);
    std::set<std::uint64_t> canon;
    for (const Graph& rep : reps) canon.insert(upper_bits(canonical_form(rep)));
    CHECK(canon.size() == 11);
}

TEST_CASE("canonical_form is isomorphism-invariant on random relabelings") {
    std::mt19937 rng(7002);
    std::uniform_int_distribution<int> order(1, 8);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = order(rng);
        const Graph g = random_graph(rng, n);
        const Graph h = permuted(g, random_permutation(rng, n));
        CHECK(canonical_form(g) == canonical_form(h));
    }
}

TEST_CASE("deck") {
    const auto k3_deck = deck(complete_graph(3));
    REQUIRE(k3_deck.size() == 3);
    for (const Graph& card : k3_deck) CHECK(card == complete_graph(2));

    // deck(P3) = {2K1 x1, K2 x2}
    const auto p3_deck = deck(path_graph(3));
    REQUIRE(p3_deck.size() == 3);
    CHECK(p3_deck[0] == empty_graph(2));
    CHECK(p3_deck[1] == complete_graph(2));
    CHECK(p3_deck[2] == complete_graph(2));

    std::mt19937 rng(7003);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 1 + trial % 7;
        CHECK(deck(random_graph(rng, n)).size() == static_cast<std::size_t>(n));
    }
    CHECK_THROWS_AS(deck(empty_graph(0)), std::invalid_argument);
}

TEST_CASE("graph guards") {
    CHECK_THROWS_AS(Graph(65), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3).set_edge(0, 0, true), std::invalid_argument);
    Graph g(2);
    g.add_edge(0, 1);
    CHECK(g.edge(1, 0));
    g.set_edge(0, 1, false);
    CHECK(g.edge_count() == 0);
}
