#include <doctest.h>

#include <random>
#include <string>
#include <vector>

#include "qratio/errors.hpp"
#include "qratio/graph.hpp"
#include "qratio/graph6.hpp"

using namespace qratio;

namespace {

Graph random_graph(std::mt19937& rng, std::uint32_t n, double p) {
    Graph::Builder b(n);
    std::bernoulli_distribution coin(p);
    for (std::uint32_t u = 0; u < n; ++u)
        for (std::uint32_t v = u + 1; v < n; ++v)
            if (coin(rng)) b.add_edge(u, v);
    return std::move(b).build();
}

} // namespace

TEST_CASE("known encodings decode to the right graphs") {
    SUBCASE("C~ is K_4") {
        Graph g = decode_graph6("C~");
        CHECK(g == build_named(Family::complete, 4));
    }
    SUBCASE("Ch is P_4") {
        // Header 'C' (n = 4), data 'h' = 41 + 63 -> bits 101001: edges
        // (0,1), (1,2), (2,3) in column-major upper-triangle order.
        Graph g = decode_graph6("Ch");
        CHECK(g.order() == 4);
        CHECK(g.edge_count() == 3);
        CHECK(g.has_edge(0, 1));
        CHECK(g.has_edge(1, 2));
        CHECK(g.has_edge(2, 3));
    }
    SUBCASE("@ is the single vertex") {
        Graph g = decode_graph6("@");
        CHECK(g.order() == 1);
        CHECK(g.edge_count() == 0);
    }
    SUBCASE("A_ is the single edge") {
        Graph g = decode_graph6("A_");
        CHECK(g.order() == 2);
        CHECK(g.has_edge(0, 1));
    }
}

TEST_CASE("encode matches known strings") {
    CHECK(encode_graph6(build_named(Family::complete, 4)) == "C~");
    CHECK(encode_graph6(build_named(Family::path, 1)) == "@");
    Graph::Builder b(2);
    b.add_edge(0, 1);
    CHECK(encode_graph6(std::move(b).build()) == "A_");
}

TEST_CASE("round trip on families, kites, and random graphs") {
    for (std::uint32_t n = 1; n <= 10; ++n) {
        Graph p = build_named(Family::path, n);
        CHECK(decode_graph6(encode_graph6(p)) == p);
        Graph k = build_named(Family::complete, n);
        CHECK(decode_graph6(encode_graph6(k)) == k);
        if (n >= 3) {
            Graph c = build_named(Family::cycle, n);
            CHECK(decode_graph6(encode_graph6(c)) == c);
        }
    }
    for (std::uint32_t n = 4; n <= 12; ++n)
        for (std::uint32_t k = 2; k < n; ++k) {
            Graph g = build_kite(n, k);
            CHECK(decode_graph6(encode_graph6(g)) == g);
        }
    std::mt19937 rng(5);
    for (int t = 0; t < 200; ++t) {
        std::uniform_int_distribution<std::uint32_t> size(1, 40);
        Graph g = random_graph(rng, size(rng), 0.25);
        Graph back = decode_graph6(encode_graph6(g));
        CHECK(back == g);
    }
}

TEST_CASE("long-form orders (n > 62) round trip") {
    for (std::uint32_t n : {63u, 64u, 70u, 100u}) {
        Graph g = build_named(Family::path, n);
        std::string s = encode_graph6(g);
        CHECK(s[0] == '~');
        CHECK(decode_graph6(s) == g);
    }
    std::mt19937 rng(17);
    Graph g = random_graph(rng, 80, 0.1);
    CHECK(decode_graph6(encode_graph6(g)) == g);
}

TEST_CASE("decoder rejects malformed input") {
    CHECK_THROWS_AS(decode_graph6(""), Graph6Error);
    // '?' encodes n = 0.
    CHECK_THROWS_AS(decode_graph6("?"), Graph6Error);
    // Bytes outside 63..126.
    CHECK_THROWS_AS(decode_graph6("C "), Graph6Error);
    CHECK_THROWS_AS(decode_graph6(std::string("C") + char(127)), Graph6Error);
    // Length mismatches.
    CHECK_THROWS_AS(decode_graph6("C"), Graph6Error);
    CHECK_THROWS_AS(decode_graph6("C~~"), Graph6Error);
    CHECK_THROWS_AS(decode_graph6("~A"), Graph6Error);
    // Nonzero padding: n = 3 uses 3 bits + 3 padding bits, '~' sets all six.
    CHECK_THROWS_AS(decode_graph6("B~"), Graph6Error);
    // Non-minimal long-form encoding of n = 4 (valid chars, valid length).
    CHECK_THROWS_AS(decode_graph6("~??C~~"), Graph6Error);
}

TEST_CASE("padding bits of valid strings are exactly zero") {
    // 'Bw' would set padding bits; the valid encodings of the 3-vertex graphs
    // are B? BG Bg Bo BW Bw ... check the triangle and P_3 specifically.
    Graph triangle = build_named(Family::cycle, 3);
    CHECK(encode_graph6(triangle) == "Bw");
    CHECK(decode_graph6("Bw") == triangle);
    Graph p3 = build_named(Family::path, 3);
    std::string s = encode_graph6(p3);
    CHECK(decode_graph6(s) == p3);
    // Flipping a padding bit must be rejected.
    std::string bad = s;
    bad.back() = static_cast<char>(((bad.back() - 63) | 1) + 63);
    CHECK_THROWS_AS(decode_graph6(bad), Graph6Error);
}
