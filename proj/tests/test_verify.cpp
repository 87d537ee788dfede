#include <sstream>

#include "doctest.h"
#include "lhamil/embedding.hpp"
#include "lhamil/error.hpp"
#include "lhamil/graph6.hpp"
#include "lhamil/hamiltonicity.hpp"
#include "lhamil/report_io.hpp"
#include "lhamil/verify.hpp"
#include "oracles.hpp"

using namespace lhamil;

namespace {

SweepConfig config(int n, int d, int ell, int r) {
    SweepConfig c;
    c.n = n;
    c.d = d;
    c.ell = ell;
    c.r = r;
    return c;
}

bool in_scope(const SweepConfig& c, const Graph& g) {
    return g.min_degree() >= c.d && !oracle::is_l_hamiltonian(g, c.ell);
}

}  // namespace

TEST_SUITE("verify") {
    TEST_CASE("labeled enumeration") {
        CHECK(enumerate_labeled_graphs(3).size() == 8);
        CHECK(enumerate_labeled_graphs(4).size() == 64);
        auto dense = enumerate_labeled_graphs(4, 3);
        REQUIRE(dense.size() == 1);
        CHECK(dense.front() == complete_graph(4));
        CHECK(labeled_graph_count(8) == (std::uint64_t{1} << 28));
        CHECK(labeled_graph(4, 0b111111) == complete_graph(4));
        CHECK(labeled_graph(3, 0b001) == build_graph(3, {{0, 1}}));
        CHECK(labeled_graph(3, 0b100) == build_graph(3, {{1, 2}}));
        CHECK_THROWS_AS(enumerate_labeled_graphs(9), ParameterError);

        int seen = 0;
        for_each_labeled_graph(5, std::nullopt, [&](const Graph&) { return ++seen < 10; });
        CHECK(seen == 10);
    }

    TEST_CASE("graph stream reader") {
        std::istringstream two("C~\nBw\n");
        auto gs = read_graph_stream(two, ErrorMode::Abort);
        REQUIRE(gs.size() == 2);
        CHECK(gs[0] == complete_graph(4));
        CHECK(gs[1] == complete_graph(3));

        std::istringstream empty("");
        CHECK(read_graph_stream(empty, ErrorMode::Abort).empty());

        std::istringstream bad("C~\n???\n");
        std::vector<std::string> warnings;
        auto kept = read_graph_stream(bad, ErrorMode::Skip, &warnings);
        REQUIRE(kept.size() == 1);
        CHECK(kept[0] == complete_graph(4));
        REQUIRE(warnings.size() == 1);
        CHECK(warnings[0].find("line 2") != std::string::npos);

        std::istringstream abort("C~\n\nBx\n");
        try {
            read_graph_stream(abort, ErrorMode::Abort);
            FAIL("expected a stream error");
        } catch (const StreamError& e) {
            CHECK(e.line() == 3);
        }

        std::istringstream crlf("C~\r\n\r\nBw\r\n");
        CHECK(read_graph_stream(crlf, ErrorMode::Abort).size() == 2);
    }

    TEST_CASE("config validation") {
        CHECK_THROWS_AS(verify_pp_bound(config(6, 3, 0, 2)), ParameterError);
        CHECK_THROWS_AS(verify_pp_bound(config(9, 2, 0, 2)), ParameterError);
        CHECK_THROWS_AS(verify_pp_bound(config(6, 2, 0, 1)), ParameterError);
        CHECK_THROWS_AS(verify_sufficiency(config(5, 1, 4, 2)), ParameterError);
        std::vector<Graph> wrong{complete_graph(4)};
        CHECK_THROWS_AS(verify_pp_bound(config(5, 2, 0, 2), wrong), ParameterError);
    }

    TEST_CASE("verify_pp_bound examples") {
        auto a = verify_pp_bound(config(6, 2, 0, 2));
        CHECK(a.scanned == 32768);
        CHECK(a.holds());
        REQUIRE(a.max_count);
        CHECK(*a.max_count == 10);
        CHECK(a.bound == 10);
        CHECK(a.attained);

        auto b = verify_pp_bound(config(5, 2, 1, 2));
        CHECK(b.holds());
        REQUIRE(b.max_count);
        CHECK(*b.max_count == 8);
        CHECK(b.bound == 8);

        auto c = verify_pp_bound(config(5, 1, 0, 3));
        CHECK(c.holds());
        CHECK(c.bound == pp_bound(5, 1, 0, 3));
    }

    TEST_CASE("injected bound produces violations") {
        auto c = config(5, 2, 1, 2);
        c.bound_override = 7;
        auto rep = verify_pp_bound(c);
        CHECK_FALSE(rep.holds());
        CHECK_FALSE(rep.attained);
        for (const auto& v : rep.violations) CHECK(v.count > 7);
        CHECK(rep.violations.size() == rep.argmax_total);
    }

    TEST_CASE("report integrity") {
        for (int ell = 0; ell <= 1; ++ell) {
            auto c = config(5, 2, ell, 2);
            c.argmax_limit = 1000;
            auto rep = verify_pp_bound(c);
            REQUIRE(rep.max_count);
            CHECK(rep.argmax.size() == rep.argmax_total);
            for (const auto& g6 : rep.argmax) {
                Graph g = parse_graph6(g6);
                CHECK(write_graph6(g) == g6);
                CHECK(in_scope(c, g));
                CHECK(oracle::clique_count(g, c.r) == *rep.max_count);
            }
            // in_scope recount with the brute-force oracle
            std::uint64_t scope = 0;
            for (const Graph& g : enumerate_labeled_graphs(5))
                if (in_scope(c, g)) ++scope;
            CHECK(scope == rep.in_scope);
        }

        auto s = verify_stability(config(6, 2, 0, 2));
        CHECK(s.holds());
        for (const auto& e : s.entries) {
            Graph g = parse_graph6(e.graph6);
            CHECK(count_cliques(g, 2) == e.count);
            CHECK(e.count > s.threshold);
            REQUIRE(e.witness);
            CHECK(e.verdict != EmbeddingVerdict::Violation);
        }
    }

    TEST_CASE("argmax list is capped and sorted") {
        auto c = config(6, 2, 0, 2);
        c.argmax_limit = 3;
        auto rep = verify_pp_bound(c);
        CHECK(rep.argmax.size() == 3);
        CHECK(rep.argmax_total == 90);
        CHECK(std::is_sorted(rep.argmax.begin(), rep.argmax.end()));
        c.argmax_limit = 1000;
        auto full = verify_pp_bound(c);
        CHECK(std::equal(rep.argmax.begin(), rep.argmax.end(), full.argmax.begin()));
    }

    TEST_CASE("stream and internal sources agree") {
        std::ostringstream file;
        for (const Graph& g : enumerate_labeled_graphs(5)) file << write_graph6(g) << '\n';
        std::istringstream in(file.str());
        const auto graphs = read_graph_stream(in, ErrorMode::Abort);
        REQUIRE(graphs.size() == 1024);
        for (int ell = 0; ell <= 1; ++ell)
            for (int r = 2; r <= 3; ++r) {
                auto c = config(5, 2, ell, r);
                auto internal = verify_pp_bound(c);
                c.source = SweepSource::Stream;
                CHECK(verify_pp_bound(c, graphs) == internal);
                c.source = SweepSource::Internal;
                auto st = verify_stability(c);
                c.source = SweepSource::Stream;
                CHECK(verify_stability(c, graphs) == st);
            }
    }

    TEST_CASE("reports do not depend on worker count") {
        for (int workers : {2, 3, 8}) {
            auto c = config(6, 2, 1, 3);
            auto serial = verify_pp_bound(c);
            auto serial_st = verify_stability(c);
            auto serial_su = verify_sufficiency(c);
            c.workers = workers;
            CHECK(verify_pp_bound(c) == serial);
            CHECK(verify_stability(c) == serial_st);
            CHECK(verify_sufficiency(c) == serial_su);
            CHECK(to_json(verify_pp_bound(c)).dump() == to_json(serial).dump());
        }
    }

    TEST_CASE("stability and sufficiency sweeps at n <= 6") {
        for (int n = 5; n <= 6; ++n)
            for (int ell = 0; ell <= 1; ++ell)
                for (int r = 2; r <= 3; ++r)
                    for (int d = ell + 1; d <= (n + ell - 1) / 2; ++d) {
                        auto rep = verify_stability(config(n, d, ell, r));
                        CHECK(rep.holds());
                    }
        for (int n = 3; n <= 6; ++n)
            for (int ell = 0; ell <= 1; ++ell) {
                auto rep = verify_sufficiency(config(n, 1, ell, 2));
                CHECK(rep.holds());
                CHECK(rep.scanned == labeled_graph_count(n));
            }
        std::vector<Graph> k5{complete_graph(5)};
        auto c = config(5, 1, 1, 2);
        c.source = SweepSource::Stream;
        auto rep = verify_sufficiency(c, k5);
        CHECK(rep.degree_sum_pass == 1);
        CHECK(rep.posa_kronk_pass == 1);
        CHECK(rep.oracle_confirmed == 1);
    }

    TEST_CASE("report serialisation") {
        auto rep = verify_pp_bound(config(5, 2, 1, 2));
        auto j = to_json(rep);
        CHECK(j["schema"] == 1);
        CHECK(j["scanned"] == 1024);
        CHECK(j["max_count"] == 8);
        CHECK(j["bound"] == 8);
        CHECK(j["violations"].empty());
        CHECK(j["argmax"].size() == rep.argmax.size());
        const std::string tsv = to_tsv(rep);
        CHECK(tsv.find("scanned\t1024\n") != std::string::npos);
        CHECK(tsv.find("bound\t8\n") != std::string::npos);
    }
}
