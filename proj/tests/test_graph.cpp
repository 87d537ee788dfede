#include <random>

#include "doctest.h"
#include "lhamil/error.hpp"
#include "lhamil/extremal.hpp"
#include "lhamil/graph.hpp"
#include "lhamil/graph6.hpp"
#include "lhamil/verify.hpp"
#include "oracles.hpp"

using namespace lhamil;

TEST_SUITE("graph-core") {
    TEST_CASE("build_graph basics") {
        Graph p3 = build_graph(3, {{0, 1}, {1, 2}});
        CHECK(p3.edge_count() == 2);
        CHECK(p3.degree(0) == 1);
        CHECK(p3.degree(1) == 2);
        CHECK(p3.degree(2) == 1);

        Graph k4 = build_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
        CHECK(k4.edge_count() == 6);
        CHECK(k4 == complete_graph(4));

        Graph single = build_graph(1, {});
        CHECK(single.edge_count() == 0);
        CHECK(single.order() == 1);

        CHECK(build_graph(3, {{0, 1}, {1, 0}, {0, 1}}).edge_count() == 1);
    }

    TEST_CASE("build_graph rejects bad input") {
        CHECK_THROWS_AS(build_graph(3, {{0, 3}}), ParameterError);
        CHECK_THROWS_AS(build_graph(3, {{-1, 2}}), ParameterError);
        CHECK_THROWS_AS(build_graph(3, {{1, 1}}), ParameterError);
        CHECK_THROWS_AS(build_graph(0, {}), ParameterError);
        CHECK_THROWS_AS(build_graph(65, {}), ParameterError);
        CHECK_NOTHROW(build_graph(64, {{0, 63}}));
    }

    TEST_CASE("degree_sequence") {
        CHECK(degree_sequence(complete_graph(4)) == std::vector<int>{3, 3, 3, 3});
        CHECK(degree_sequence(star_graph(3)) == std::vector<int>{3, 1, 1, 1});
        CHECK(degree_sequence(build_H(10, 4, 1).first) == std::vector<int>{9, 9, 9, 9, 6, 6, 6, 4, 4, 4});
    }

    TEST_CASE("edge count is half the degree sum") {
        std::mt19937_64 rng(11);
        for (int i = 0; i < 200; ++i) {
            Graph g = oracle::random_graph(rng, 1 + static_cast<int>(rng() % 64), 0.3);
            int sum = 0;
            for (int v = 0; v < g.order(); ++v) sum += g.degree(v);
            CHECK(2 * g.edge_count() == sum);
            CHECK(static_cast<int>(g.edges().size()) == g.edge_count());
        }
    }

    TEST_CASE("is_linear_forest") {
        Graph c5 = cycle_graph(5);
        CHECK(is_linear_forest(c5, std::vector<Edge>{Edge(0, 1)}));
        Graph k3 = complete_graph(3);
        CHECK_FALSE(is_linear_forest(k3, std::vector<Edge>{Edge(0, 1), Edge(1, 2), Edge(0, 2)}));
        Graph claw = star_graph(3);
        CHECK_FALSE(is_linear_forest(claw, std::vector<Edge>{Edge(0, 1), Edge(0, 2), Edge(0, 3)}));
        CHECK_FALSE(is_linear_forest(c5, std::vector<Edge>{Edge(0, 2)}));  // not an edge of G
        CHECK(is_linear_forest(c5, std::vector<Edge>{}));
    }

    TEST_CASE("enumerate_linear_forests examples") {
        CHECK(enumerate_linear_forests(cycle_graph(5), 1).size() == 5);
        CHECK(enumerate_linear_forests(complete_graph(3), 3).empty());
        // Brute force over the 15 two-edge subsets of K_4: every pair of edges
        // is a linear forest.
        const auto brute = oracle::linear_forests(complete_graph(4), 2);
        CHECK(brute.size() == 15);
        CHECK(enumerate_linear_forests(complete_graph(4), 2).size() == 15);

        auto zero = enumerate_linear_forests(cycle_graph(5), 0);
        REQUIRE(zero.size() == 1);
        CHECK(zero.front().empty());
    }

    TEST_CASE("enumerate_linear_forests matches subset brute force, in order") {
        std::mt19937_64 rng(5);
        for (int i = 0; i < 150; ++i) {
            const int n = 3 + static_cast<int>(rng() % 5);
            Graph g = oracle::random_graph(rng, n, 0.6);
            for (int ell = 0; ell <= 3; ++ell) {
                auto mine = enumerate_linear_forests(g, ell);
                auto brute = oracle::linear_forests(g, ell);
                REQUIRE(mine.size() == brute.size());
                for (std::size_t k = 0; k < mine.size(); ++k) {
                    CHECK(mine[k].edges() == brute[k]);
                    CHECK(is_linear_forest(g, mine[k]));
                }
                if (ell == 1) CHECK(static_cast<int>(mine.size()) == g.edge_count());
            }
        }
    }

    TEST_CASE("count_cliques examples and identities") {
        CHECK(count_cliques(complete_graph(5), 3) == 10);
        CHECK(count_cliques(cycle_graph(5), 3) == 0);
        Graph h = build_H(10, 4, 1).first;
        CHECK(oracle::clique_count(h, 3) == 53);
        CHECK(count_cliques(h, 3) == 53);
        CHECK(count_cliques(h, 1) == 10);
        CHECK(count_cliques(complete_graph(3), 4) == 0);
        CHECK_THROWS_AS(count_cliques(h, 0), ParameterError);
        for (int n = 1; n <= 12; ++n)
            for (int r = 1; r <= n; ++r) CHECK(count_cliques(complete_graph(n), r) == binomial(n, r));
    }

    TEST_CASE("count_cliques agrees with subset oracle") {
        std::mt19937_64 rng(99);
        for (int i = 0; i < 10000; ++i) {
            const int n = 1 + static_cast<int>(rng() % 7);
            Graph g = oracle::random_graph(rng, n, 0.2 + 0.6 * static_cast<double>(rng() % 100) / 100.0);
            CHECK(count_cliques(g, 2) == static_cast<Count>(g.edge_count()));
            for (int r = 1; r <= 4; ++r) REQUIRE(count_cliques(g, r) == oracle::clique_count(g, r));
        }
    }
}

TEST_SUITE("graph6") {
    TEST_CASE("hand-encoded examples") {
        CHECK(parse_graph6("C~") == complete_graph(4));
        CHECK(parse_graph6("Bw") == complete_graph(3));
        CHECK(parse_graph6("@") == Graph(1));
        CHECK(write_graph6(complete_graph(4)) == "C~");
        CHECK(write_graph6(complete_graph(3)) == "Bw");
        CHECK(write_graph6(Graph(1)) == "@");
        // P_3 0-1-2: bits x01=1, x02=0, x12=1 -> 101000 = 40, +63 = 'g'
        CHECK(write_graph6(path_graph(3)) == "Bg");
    }

    TEST_CASE("malformed input") {
        CHECK_THROWS_AS(parse_graph6(""), Graph6Error);
        CHECK_THROWS_AS(parse_graph6("?"), Graph6Error);     // n = 0
        CHECK_THROWS_AS(parse_graph6("C~~"), Graph6Error);   // trailing byte
        CHECK_THROWS_AS(parse_graph6("D~"), Graph6Error);    // truncated
        CHECK_THROWS_AS(parse_graph6("C\x01"), Graph6Error); // non-printable
        CHECK_THROWS_AS(parse_graph6("Bx"), Graph6Error);    // padding bit set
        CHECK_THROWS_AS(parse_graph6("~??"), Graph6Error);   // short long-prefix
        CHECK_THROWS_AS(parse_graph6("~?A@"), Graph6Error);  // n = 129
    }

    TEST_CASE("orders 63 and 64 use the long size prefix") {
        Graph g(64);
        g.add_edge(0, 63);
        std::string s = write_graph6(g);
        CHECK(s.substr(0, 4) == "~?@?");
        CHECK(parse_graph6(s) == g);
        Graph h(63);
        CHECK(write_graph6(h).substr(0, 4) == "~??~");
        CHECK(parse_graph6(write_graph6(h)) == h);
    }

    TEST_CASE("round trip on all graphs with n <= 5 and random graphs") {
        for (int n = 1; n <= 5; ++n) {
            for_each_labeled_graph(n, std::nullopt, [](const Graph& g) {
                REQUIRE(parse_graph6(write_graph6(g)) == g);
                return true;
            });
        }
        std::mt19937_64 rng(3);
        for (int i = 0; i < 500; ++i) {
            Graph g = oracle::random_graph(rng, 1 + static_cast<int>(rng() % 64), 0.5);
            REQUIRE(parse_graph6(write_graph6(g)) == g);
        }
    }
}
