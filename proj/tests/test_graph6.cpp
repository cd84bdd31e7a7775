#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "cospec/graph6.hpp"
#include "cospec/miner.hpp"
#include "test_support.hpp"

using namespace cospec;
using namespace cospec::testing;

TEST_CASE("decode fixed strings") {
    CHECK(decode_graph6("A_") == complete_graph(2));
    CHECK(decode_graph6("@") == empty_graph(1));
    CHECK(decode_graph6("?") == empty_graph(0));
    CHECK(decode_graph6(">>graph6<<A_") == complete_graph(2));
    CHECK(decode_graph6("A_\n") == complete_graph(2));
}

TEST_CASE("encode fixed strings") {
    CHECK(encode_graph6(empty_graph(1)) == "@");
    CHECK(encode_graph6(complete_graph(2)) == "A_");
    CHECK(encode_graph6(empty_graph(3)) == "B?");
}

TEST_CASE("round trip on random graphs up to n = 32") {
    std::mt19937 rng(7101);
    std::uniform_int_distribution<int> order(0, 32);
    for (int trial = 0; trial < 500; ++trial) {
        const Graph g = random_graph(rng, order(rng));
        const std::string s = encode_graph6(g);
        CHECK(decode_graph6(s) == g);
        CHECK(encode_graph6(decode_graph6(s)) == s);
    }
}

TEST_CASE("round trip at the order-field boundaries") {
    for (int n : {61, 62, 63, 64}) {
        std::mt19937 rng(7102 + n);
        const Graph g = random_graph(rng, n);
        CHECK(decode_graph6(encode_graph6(g)) == g);
    }
}

TEST_CASE("malformed inputs") {
    CHECK_THROWS_AS(decode_graph6(""), std::invalid_argument);
    CHECK_THROWS_AS(decode_graph6(":Fa@x^"), std::invalid_argument);  // sparse6
    CHECK_THROWS_AS(decode_graph6("&A_"), std::invalid_argument);     // digraph6
    CHECK_THROWS_AS(decode_graph6("A"), std::invalid_argument);       // missing body
    CHECK_THROWS_AS(decode_graph6("A_?"), std::invalid_argument);     // trailing bytes
    CHECK_THROWS_AS(decode_graph6("A\x20"), std::invalid_argument);   // char below range
    CHECK_THROWS_AS(decode_graph6("BF"), std::invalid_argument);      // nonzero padding
    CHECK_THROWS_AS(decode_graph6("~?@?"), std::invalid_argument);    // n = 64, missing body
    CHECK_THROWS_AS(decode_graph6("~?A?"), std::invalid_argument);    // n = 128 > 64
}

TEST_CASE("reader skips blanks and header lines") {
    std::istringstream in(">>graph6<<\nA_\n\nB?\n");
    const auto graphs = read_graph6_lines(in);
    REQUIRE(graphs.size() == 2);
    CHECK(graphs[0] == complete_graph(2));
    CHECK(graphs[1] == empty_graph(3));
}

TEST_CASE("catalog round trip, n <= 5") {
    for (int n = 1; n <= 5; ++n)
        for (const Graph& g : enumerate_graphs(n)) {
            const std::string s = encode_graph6(g);
            CHECK(decode_graph6(s) == g);
            CHECK(encode_graph6(decode_graph6(s)) == s);
        }
}

TEST_CASE("agrees with externally produced fixture lines") {
    std::ifstream in(std::string(COSPEC_TEST_DATA_DIR) + "/random_graphs_1000.g6");
    REQUIRE(in.good());
    std::string line;
    int checked = 0;
    while (std::getline(in, line) && checked < 100) {
        if (line.empty()) continue;
        CHECK(encode_graph6(decode_graph6(line)) == line);
        ++checked;
    }
    CHECK(checked == 100);
}
