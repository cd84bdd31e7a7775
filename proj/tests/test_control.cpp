#include <doctest.h>

#include <random>

#include "cospec/control.hpp"
#include "cospec/miner.hpp"
#include "cospec/spectral.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

using namespace cospec;
using namespace cospec::testing;

TEST_CASE("walk matrices") {
    const auto wk2 = walk_matrix(complete_graph(2));
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) CHECK(wk2.w(i, j) == 1);
    CHECK(wk2.rank == 1);

    for (int n = 2; n <= 6; ++n) CHECK(walk_matrix(complete_graph(n)).rank == 1);

    const auto wp3 = walk_matrix(path_graph(3));
    const long expected[3][3] = {{1, 1, 2}, {1, 2, 2}, {1, 1, 2}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(wp3.w(i, j) == expected[i][j]);
    CHECK(wp3.rank == 2);
    CHECK(rank_rref_oracle(wp3.w) == 2);

    CHECK_THROWS_AS(walk_matrix(empty_graph(0)), std::invalid_argument);
}

TEST_CASE("main eigenvalue counts") {
    for (int n = 2; n <= 6; ++n) CHECK(main_eigenvalue_count(complete_graph(n)) == 1);
    CHECK(main_eigenvalue_count(path_graph(3)) == 2);
    CHECK(main_eigenvalue_count(disjoint_union(cycle_graph(4), empty_graph(1))) == 2);
}

TEST_CASE("main eigenvalue count equals the number of main clusters, n <= 6") {
    for (int n = 1; n <= 6; ++n)
        for (const Graph& g : enumerate_graphs(n)) {
            const auto d = eigendecompose(RealMatrix::adjacency(g));
            const auto p = spectral_profile(d, zero_bits(n));
            int main_clusters = 0;
            for (double mu : p.mu)
                if (mu > 1e-6) ++main_clusters;
            CHECK(main_eigenvalue_count(g) == main_clusters);
        }
}

TEST_CASE("controllability classes") {
    CHECK(classify_controllability(complete_graph(2)) == Controllability::almost_controllable);
    CHECK(classify_controllability(complete_graph(3)) == Controllability::neither);
    CHECK(classify_controllability(path_graph(3)) == Controllability::almost_controllable);
}

TEST_CASE("Q0 of P3 and K2") {
    {
        const auto cert = compute_q0(path_graph(3));
        CHECK(cert.xi == std::vector<BigInt>{1, 0, -1});
        const long flip[3][3] = {{0, 0, 1}, {0, 1, 0}, {1, 0, 0}};
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) CHECK(cert.q0(i, j) == flip[i][j]);
        CHECK(cert.is_permutation);
        CHECK(cert.symmetry_class() == "Hs");
    }
    {
        const auto cert = compute_q0(complete_graph(2));
        CHECK(cert.xi == std::vector<BigInt>{1, -1});
        CHECK(cert.q0(0, 1) == 1);
        CHECK(cert.q0(0, 0) == 0);
        CHECK(cert.is_permutation);
    }
    CHECK_THROWS_AS(compute_q0(complete_graph(3)), precondition_error);
}

TEST_CASE("Q0 exact identities across the n <= 5 catalog") {
    for (int n = 2; n <= 5; ++n)
        for (const Graph& g : enumerate_graphs(n)) {
            if (classify_controllability(g) != Controllability::almost_controllable) continue;
            const auto cert = compute_q0(g);
            const int k = g.order();
            CHECK(cert.q0 * cert.q0 == RatMatrix::identity(k));
            CHECK(cert.q0 == cert.q0.transpose());
            std::vector<Rational> e(static_cast<std::size_t>(k), Rational(1));
            CHECK(cert.q0 * e == e);
            const RatMatrix a = RatMatrix::adjacency(g);
            CHECK(cert.q0.transpose() * a * cert.q0 == a);
        }
}

TEST_CASE("Q0 is independent of the kernel vector sign") {
    int tested = 0;
    for (int n = 2; n <= 4; ++n)
        for (const Graph& g : enumerate_graphs(n)) {
            if (classify_controllability(g) != Controllability::almost_controllable) continue;
            const auto cert = compute_q0(g);
            std::vector<BigInt> negated;
            for (const BigInt& v : cert.xi) negated.push_back(-v);
            CHECK(regular_householder(negated) == cert.q0);
            ++tested;
        }
    CHECK(tested > 0);
}

TEST_CASE("permutation solutions") {
    const auto p3 = permutation_solutions(path_graph(3));
    REQUIRE(p3.size() == 2);
    CHECK(p3[0] == std::vector<int>{0, 1, 2});
    CHECK(p3[1] == std::vector<int>{2, 1, 0});

    CHECK(permutation_solutions(complete_graph(3)).size() == 6);

    // Smallest asymmetric graphs have 6 vertices; find one by scanning.
    bool found = false;
    for (const Graph& g : enumerate_graphs(6)) {
        if (permutation_solutions(g).size() == 1) {
            found = true;
            CHECK(permutation_solutions(g)[0] == std::vector<int>{0, 1, 2, 3, 4, 5});
            break;
        }
    }
    CHECK(found);
    for (int n = 2; n <= 5; ++n)
        for (const Graph& g : enumerate_graphs(n)) CHECK(permutation_solutions(g).size() >= 2);
}

TEST_CASE("automorphisms of almost controllable graphs lie in {I, Q0}, n <= 5") {
    for (int n = 2; n <= 5; ++n)
        for (const Graph& g : enumerate_graphs(n)) {
            if (classify_controllability(g) != Controllability::almost_controllable) continue;
            const auto cert = compute_q0(g);
            const auto solutions = permutation_solutions(g);
            CHECK(solutions.size() <= 2);
            for (const auto& p : solutions) {
                const RatMatrix pm = RatMatrix::permutation(p);
                CHECK((pm == RatMatrix::identity(n) || pm == cert.q0));
            }
        }
}

TEST_CASE("reconstructibility certificates") {
    SUBCASE("P4 certified via an Hs card") {
        const auto cert = reconstructibility_certificate(path_graph(4));
        CHECK(cert.certified);
        CHECK(cert.witness_vertex == 0);
        CHECK(cert.clause == ReconClause::hs);
        CHECK(cert.xi == std::vector<BigInt>{1, 0, -1});
    }
    SUBCASE("K3 certified via an Hs card") {
        const auto cert = reconstructibility_certificate(complete_graph(3));
        CHECK(cert.certified);
        CHECK(cert.witness_vertex == 0);
        CHECK(cert.clause == ReconClause::hs);
    }
    SUBCASE("C4 certified via an Hs card") {
        const auto cert = reconstructibility_certificate(cycle_graph(4));
        CHECK(cert.certified);
        CHECK(cert.witness_vertex == 0);
        CHECK(cert.clause == ReconClause::hs);
    }
    SUBCASE("K4 is uncertified (every card is K3)") {
        CHECK(classify_controllability(complete_graph(3)) == Controllability::neither);
        const auto cert = reconstructibility_certificate(complete_graph(4));
        CHECK_FALSE(cert.certified);
        CHECK(cert.clause == ReconClause::none);
        CHECK(cert.witness_vertex == -1);
    }
    SUBCASE("n < 3 rejected") {
        CHECK_THROWS_AS(reconstructibility_certificate(complete_graph(2)), std::invalid_argument);
    }
}

TEST_CASE("certificate scan picks the lowest qualifying vertex") {
    std::mt19937 rng(7601);
    for (int trial = 0; trial < 20; ++trial) {
        const Graph g = random_graph(rng, 3 + trial % 4);
        ReconstructibilityCertificate cert;
        try {
            cert = reconstructibility_certificate(g);
        } catch (const std::exception&) {
            continue;
        }
        if (!cert.certified) continue;
        for (int u = 0; u < cert.witness_vertex; ++u) {
            const auto [card, b] = split_root(RootedGraph{g, u});
            const auto cls = classify_controllability(card);
            CHECK(cls != Controllability::controllable);
            if (cls == Controllability::almost_controllable) {
                const auto q0 = compute_q0(card);
                CHECK_FALSE(q0.is_permutation);
                // the excluded case must have occurred: Q0 b is a 0/1 vector != b
                std::vector<Rational> bq(b.size());
                for (std::size_t i = 0; i < b.size(); ++i) bq[i] = b[i] ? 1 : 0;
                const auto q0b = q0.q0 * bq;
                bool zero_one = true, equals_b = true;
                for (std::size_t i = 0; i < q0b.size(); ++i) {
                    if (!(q0b[i] == 0 || q0b[i] == 1)) zero_one = false;
                    if (q0b[i] != bq[i]) equals_b = false;
                }
                CHECK(zero_one);
                CHECK_FALSE(equals_b);
            }
        }
    }
}
