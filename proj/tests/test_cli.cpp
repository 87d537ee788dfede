#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "lhamil/cli.hpp"
#include "lhamil/closure.hpp"
#include "lhamil/extremal.hpp"
#include "lhamil/graph6.hpp"
#include "lhamil/hamiltonicity.hpp"
#include "lhamil/report_io.hpp"
#include "lhamil/verify.hpp"

using namespace lhamil;

namespace {

struct Run {
    int code = 0;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args, const std::string& input = "") {
    std::istringstream in(input);
    std::ostringstream out;
    std::ostringstream err;
    Run r;
    r.code = run_cli(args, in, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

std::string all_graphs(int n) {
    std::string s;
    for (const Graph& g : enumerate_labeled_graphs(n)) s += write_graph6(g) + "\n";
    return s;
}

}  // namespace

TEST_SUITE("cli") {
    TEST_CASE("construct") {
        auto r = run({"construct", "--family", "h", "--n", "4", "--d", "1", "--ell", "0"});
        CHECK(r.code == kExitOk);
        CHECK(r.out == "C{\n");
        CHECK(parse_graph6("C{") == build_H(4, 1, 0).first);

        auto p = run({"construct", "--family", "hprime", "--n", "10", "--d", "4", "--ell", "1"});
        CHECK(p.out == write_graph6(build_Hprime(10, 4, 1).first) + "\n");

        auto j = run({"construct", "--family", "h", "--n", "7", "--d", "3", "--ell", "1", "--format", "json"});
        auto doc = nlohmann::json::parse(j.out);
        CHECK(doc["schema"] == 1);
        CHECK(doc["graph6"] == write_graph6(build_H(7, 3, 1).first));
        CHECK(doc["witness"] == to_json(build_H(7, 3, 1).second));
    }

    TEST_CASE("formula") {
        auto r = run({"formula", "--n", "10", "--d", "4", "--ell", "1", "--r", "2"});
        CHECK(r.code == kExitOk);
        auto doc = nlohmann::json::parse(r.out);
        CHECK(doc["pp_bound"] == 35);
        CHECK(doc["stability_bound"] == 35);
        CHECK(doc["h_r"] == 33);
    }

    TEST_CASE("parameter window violations name the inequality") {
        auto r = run({"formula", "--n", "10", "--d", "6", "--ell", "1", "--r", "2"});
        CHECK(r.code == kExitUsage);
        CHECK(r.err.find("d <= floor((n+ell-1)/2)") != std::string::npos);
        CHECK(r.out.empty());
    }

    TEST_CASE("usage errors") {
        CHECK(run({"frobnicate"}).code == kExitUsage);
        CHECK(run({}).code == kExitUsage);
        CHECK(run({"cliques"}).code == kExitUsage);
        CHECK(run({"check", "--ell", "1", "/nonexistent/file.g6"}).code == kExitUsage);
        CHECK(run({"--help"}).code == kExitOk);
    }

    TEST_CASE("streaming subcommands match the library") {
        const std::string input = "C~\nBw\nDQc\nC^\n";
        std::istringstream src(input);
        const auto graphs = read_graph_stream(src, ErrorMode::Abort);

        std::string cliques;
        std::string check;
        std::string closure;
        std::string posa;
        std::string kronk;
        for (const Graph& g : graphs) {
            const std::string g6 = write_graph6(g);
            cliques += g6 + "\t" + std::to_string(count_cliques(g, 3)) + "\n";
            check += g6 + (is_l_hamiltonian(g, 1).is_l_hamiltonian ? "\ttrue\n" : "\tfalse\n");
            closure += write_graph6(k_closure(g, 4)) + "\n";
            posa += g6 + (degree_sum_check(g, 0) ? "\ttrue\n" : "\tfalse\n");
            kronk += g6 + (posa_kronk_check(g, 0) ? "\ttrue\n" : "\tfalse\n");
        }
        CHECK(run({"cliques", "--r", "3"}, input).out == cliques);
        CHECK(run({"check", "--ell", "1"}, input).out == check);
        CHECK(run({"closure", "--k", "4"}, input).out == closure);
        CHECK(run({"posa", "--ell", "0"}, input).out == posa);
        CHECK(run({"posa-kronk", "--ell", "0"}, input).out == kronk);
        CHECK(run({"cliques", "--r", "3", "-"}, input).out == cliques);
    }

    TEST_CASE("check witnesses") {
        const std::string h = write_graph6(build_H(7, 3, 1).first);
        auto r = run({"check", "--ell", "1", "--witness"}, h + "\nC~\n");
        std::istringstream lines(r.out);
        std::string first;
        std::string second;
        std::getline(lines, first);
        std::getline(lines, second);
        CHECK(first == h + "\tfalse\t0-1");
        CHECK(second.rfind("C~\ttrue\t", 0) == 0);
    }

    TEST_CASE("saturate and error modes") {
        const std::string star = write_graph6(star_graph(3));
        auto ok = run({"saturate", "--ell", "0"}, star + "\n");
        CHECK(ok.out == write_graph6(saturate(star_graph(3), 0)) + "\n");

        // C_5 is hamiltonian: abort stops, skip warns and continues
        const std::string input = write_graph6(cycle_graph(5)) + "\n" + star + "\n";
        auto aborted = run({"saturate", "--ell", "0"}, input);
        CHECK(aborted.code == kExitUsage);
        CHECK(aborted.err.find("line 1") != std::string::npos);
        auto skipped = run({"saturate", "--ell", "0", "--on-error", "skip"}, input);
        CHECK(skipped.code == kExitOk);
        CHECK(skipped.out == ok.out);
        CHECK(skipped.err.find("warning: line 1") != std::string::npos);

        auto malformed = run({"check", "--ell", "0"}, "C~\n???\n");
        CHECK(malformed.code == kExitUsage);
        auto tolerant = run({"check", "--ell", "0", "--on-error", "skip"}, "C~\n???\n");
        CHECK(tolerant.code == kExitOk);
        CHECK(tolerant.out == "C~\ttrue\n");
        CHECK(tolerant.err.find("warning") != std::string::npos);
    }

    TEST_CASE("verify exit codes and byte-identical reports") {
        auto r = run({"verify", "bound", "--n", "6", "--d", "2", "--ell", "0", "--r", "2", "--source", "internal"});
        CHECK(r.code == kExitOk);
        SweepConfig c;
        c.n = 6;
        c.d = 2;
        c.ell = 0;
        c.r = 2;
        const auto rep = verify_pp_bound(c);
        CHECK(r.out == to_json(rep).dump() + "\n");
        CHECK(nlohmann::json::parse(r.out)["max_count"] == 10);

        auto tsv = run({"verify", "bound", "--n", "6", "--d", "2", "--ell", "0", "--r", "2", "--format", "tsv"});
        CHECK(tsv.out == to_tsv(rep));

        auto corrupt = run({"verify", "bound", "--n", "6", "--d", "2", "--ell", "0", "--r", "2", "--bound", "9"});
        CHECK(corrupt.code == kExitViolation);
        CHECK_FALSE(nlohmann::json::parse(corrupt.out)["violations"].empty());

        auto st_ok = run({"verify", "stability", "--n", "5", "--d", "2", "--ell", "1", "--r", "2", "--bound", "0"});
        CHECK(st_ok.code == kExitOk);
        auto st = run({"verify", "stability", "--n", "6", "--d", "2", "--ell", "0", "--r", "2", "--bound", "0",
                       "--no-degree-filter", "--format", "tsv"});
        CHECK(st.code == kExitViolation);
        CHECK(st.out.find("VIOLATION") != std::string::npos);

        auto window = run({"verify", "bound", "--n", "6", "--d", "3", "--ell", "0"});
        CHECK(window.code == kExitUsage);

        auto bad = run({"verify", "bound", "--n", "5", "--d", "2", "--ell", "1", "--source", "stdin"}, "D~{\n!!\n");
        CHECK(bad.code == kExitUsage);
    }

    TEST_CASE("verify over a stream equals the internal sweep") {
        const std::string input = all_graphs(5);
        for (const std::string mode : {"bound", "stability", "sufficiency"}) {
            std::vector<std::string> base{"verify", mode, "--n", "5", "--d", "2", "--ell", "1", "--r", "2"};
            auto internal = run(base);
            base.insert(base.end(), {"--source", "stdin", "--workers", "3"});
            auto streamed = run(base, input);
            CHECK(internal.code == kExitOk);
            CHECK(streamed.code == kExitOk);
            CHECK(streamed.out == internal.out);
        }
    }

    TEST_CASE("convexity") {
        CHECK(run({"convexity", "--n", "10", "--ell", "1", "--r", "2", "--lo", "2", "--hi", "5"}).out == "true\n");
        CHECK(run({"convexity", "--n", "10", "--ell", "1", "--r", "2", "--lo", "4", "--hi", "3"}).code == kExitUsage);
    }
}
