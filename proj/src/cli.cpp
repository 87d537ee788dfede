#include "lhamil/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <sstream>

#include "CLI11.hpp"
#include "lhamil/closure.hpp"
#include "lhamil/error.hpp"
#include "lhamil/extremal.hpp"
#include "lhamil/graph6.hpp"
#include "lhamil/hamiltonicity.hpp"
#include "lhamil/report_io.hpp"
#include "lhamil/verify.hpp"

namespace lhamil {

namespace {

struct Options {
    std::string family;
    int n = 0;
    int d = 0;
    int ell = 0;
    int r = 2;
    int k = 0;
    int lo = 0;
    int hi = 0;
    std::string input = "-";
    std::string format;
    std::string on_error = "abort";
    std::string source = "internal";
    std::string mode;
    int workers = 1;
    std::size_t argmax_limit = 16;
    std::optional<Count> bound_override;
    bool witness = false;
    bool no_degree_filter = false;
};

std::string forest_text(const LinearForest& f) {
    if (f.empty()) return "none";
    std::string s;
    for (const Edge& e : f.edges()) {
        if (!s.empty()) s += ',';
        s += std::to_string(e.u) + "-" + std::to_string(e.v);
    }
    return s;
}

std::string cycle_text(const Cycle& c) {
    std::string s;
    for (int v : c) {
        if (!s.empty()) s += '-';
        s += std::to_string(v);
    }
    return s;
}

class Runner {
public:
    Runner(const Options& o, std::istream& in, std::ostream& out, std::ostream& err)
        : o_(o), stdin_(in), out_(out), err_(err) {}

    // Applies `each` to every graph of the input, in order.
    void for_each_input(const std::function<void(const Graph&, std::size_t line)>& each) {
        std::istream& in = open_input();
        GraphStreamReader reader(in, error_mode());
        std::size_t reported = 0;
        while (auto item = reader.next()) {
            flush_warnings(reader, reported);
            each(item->graph, item->line);
        }
        flush_warnings(reader, reported);
    }

    ErrorMode error_mode() const {
        if (o_.on_error == "abort") return ErrorMode::Abort;
        if (o_.on_error == "skip") return ErrorMode::Skip;
        throw ParameterError("--on-error must be abort or skip");
    }

    std::istream& open_input() {
        if (o_.input == "-" || o_.input.empty()) return stdin_;
        file_ = std::make_unique<std::ifstream>(o_.input);
        if (!*file_) throw std::runtime_error("cannot open input file: " + o_.input);
        return *file_;
    }

    // Per-graph failure: abort stops the run, skip reports and continues.
    bool recoverable(std::size_t line, const std::exception& e) {
        if (error_mode() == ErrorMode::Abort) throw StreamError(line, e.what());
        err_ << "warning: line " << line << ": " << e.what() << '\n';
        return true;
    }

    int construct() {
        auto [g, w] = o_.family == "h" ? build_H(o_.n, o_.d, o_.ell) : build_Hprime(o_.n, o_.d, o_.ell);
        if (o_.format == "json") {
            nlohmann::json j{{"schema", kReportSchema}, {"graph6", write_graph6(g)}, {"witness", to_json(w)}};
            out_ << j.dump() << '\n';
        } else {
            out_ << write_graph6(g) << '\n';
        }
        return kExitOk;
    }

    int formula() {
        ExtremalParams p{o_.n, o_.d, o_.ell, o_.r};
        p.validate();
        nlohmann::json j{{"schema", kReportSchema},
                         {"n", o_.n},
                         {"d", o_.d},
                         {"ell", o_.ell},
                         {"r", o_.r},
                         {"top", p.top()},
                         {"h_edges", h_edges(o_.n, o_.d, o_.ell)},
                         {"h_r", h_r_value(o_.n, o_.d, o_.ell, o_.r)},
                         {"h_r_next", h_r_formula(o_.n, o_.d + 1, o_.ell, o_.r)},
                         {"h_r_top", h_r_formula(o_.n, p.top(), o_.ell, o_.r)},
                         {"pp_bound", pp_bound(o_.n, o_.d, o_.ell, o_.r)},
                         {"stability_bound", stability_bound(o_.n, o_.d, o_.ell, o_.r)}};
        out_ << j.dump() << '\n';
        return kExitOk;
    }

    int cliques() {
        if (o_.r < 1) throw ParameterError("clique size must satisfy r >= 1");
        for_each_input([&](const Graph& g, std::size_t) {
            out_ << write_graph6(g) << '\t' << count_cliques(g, o_.r) << '\n';
        });
        return kExitOk;
    }

    int check() {
        for_each_input([&](const Graph& g, std::size_t line) {
            HamVerdict v;
            try {
                v = is_l_hamiltonian(g, o_.ell);
            } catch (const ParameterError& e) {
                recoverable(line, e);
                return;
            }
            out_ << write_graph6(g) << '\t' << (v.is_l_hamiltonian ? "true" : "false");
            if (o_.witness) {
                if (v.witness_forest) {
                    out_ << '\t' << forest_text(*v.witness_forest);
                } else if (v.witness_cycle) {
                    out_ << '\t' << cycle_text(*v.witness_cycle);
                }
            }
            out_ << '\n';
        });
        return kExitOk;
    }

    int closure() {
        for_each_input([&](const Graph& g, std::size_t) { out_ << write_graph6(k_closure(g, o_.k)) << '\n'; });
        return kExitOk;
    }

    int saturate_cmd() {
        for_each_input([&](const Graph& g, std::size_t line) {
            try {
                out_ << write_graph6(saturate(g, o_.ell)) << '\n';
            } catch (const ParameterError& e) {
                recoverable(line, e);
            }
        });
        return kExitOk;
    }

    int degree_test(bool kronk) {
        for_each_input([&](const Graph& g, std::size_t line) {
            bool pass = false;
            try {
                pass = kronk ? posa_kronk_check(g, o_.ell) : degree_sum_check(g, o_.ell);
            } catch (const ParameterError& e) {
                recoverable(line, e);
                return;
            }
            out_ << write_graph6(g) << '\t' << (pass ? "true" : "false") << '\n';
        });
        return kExitOk;
    }

    int convexity() {
        out_ << (check_endpoint_convexity(o_.n, o_.ell, o_.r, o_.lo, o_.hi) ? "true" : "false") << '\n';
        return kExitOk;
    }

    int verify() {
        SweepConfig c;
        c.n = o_.n;
        c.d = o_.d;
        c.ell = o_.ell;
        c.r = o_.r;
        c.workers = o_.workers;
        c.argmax_limit = o_.argmax_limit;
        c.bound_override = o_.bound_override;
        c.degree_filter = !o_.no_degree_filter;
        if (o_.source == "internal") {
            c.source = SweepSource::Internal;
        } else if (o_.source == "stdin" || o_.source == "stream") {
            c.source = SweepSource::Stream;
        } else {
            throw ParameterError("--source must be internal or stdin");
        }
        if (o_.mode == "sufficiency") {
            c.validate_sufficiency();
        } else {
            c.validate_extremal();
        }

        if (o_.mode == "bound") return emit(sweep<BoundReport>(c, [&](auto&&... a) { return verify_pp_bound(a...); },
                                                                [&](BoundReport& x, const BoundReport& y) {
                                                                    merge_report(x, y, c.argmax_limit);
                                                                }));
        if (o_.mode == "stability") return emit(sweep<StabilityReport>(c, [&](auto&&... a) { return verify_stability(a...); },
                                                                        [](StabilityReport& x, const StabilityReport& y) {
                                                                            merge_report(x, y);
                                                                        }));
        return emit(sweep<SufficiencyReport>(c, [&](auto&&... a) { return verify_sufficiency(a...); },
                                             [](SufficiencyReport& x, const SufficiencyReport& y) { merge_report(x, y); }));
    }

private:
    template <class Report, class Run, class Merge>
    Report sweep(const SweepConfig& c, Run run, Merge merge) {
        if (c.source == SweepSource::Internal) return run(c);
        constexpr std::size_t kBatch = 1 << 15;
        std::optional<Report> total;
        std::vector<Graph> batch;
        auto drain = [&] {
            if (batch.empty() && total) return;
            Report part = run(c, std::span<const Graph>(batch));
            if (total) {
                merge(*total, part);
            } else {
                total = std::move(part);
            }
            batch.clear();
        };
        for_each_input([&](const Graph& g, std::size_t line) {
            if (g.order() != c.n) {
                recoverable(line, ParameterError("graph order " + std::to_string(g.order()) +
                                                 " does not match --n " + std::to_string(c.n)));
                return;
            }
            batch.push_back(g);
            if (batch.size() == kBatch) drain();
        });
        drain();
        return *total;
    }

    template <class Report>
    int emit(const Report& r) {
        if (o_.format == "tsv") {
            out_ << to_tsv(r);
        } else {
            out_ << to_json(r).dump() << '\n';
        }
        return r.holds() ? kExitOk : kExitViolation;
    }

    void flush_warnings(const GraphStreamReader& reader, std::size_t& reported) {
        for (; reported < reader.warnings().size(); ++reported) err_ << "warning: " << reader.warnings()[reported] << '\n';
    }

    const Options& o_;
    std::istream& stdin_;
    std::ostream& out_;
    std::ostream& err_;
    std::unique_ptr<std::ifstream> file_;
};

void add_input(CLI::App* sub, Options& o) {
    sub->add_option("input", o.input, "graph6 file, one graph per line ('-' or omitted: stdin)");
    sub->add_option("--on-error", o.on_error, "abort or skip malformed lines")->check(CLI::IsMember({"abort", "skip"}));
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Clique bounds and exhaustive checks for non-l-hamiltonian graphs", "lhamil"};
    app.require_subcommand(1);

    auto* construct = app.add_subcommand("construct", "graph6 of H_{n,d,l} or H'_{n,d,l}");
    construct->add_option("--family", o.family, "h or hprime")->required()->check(CLI::IsMember({"h", "hprime"}));
    construct->add_option("--n", o.n)->required();
    construct->add_option("--d", o.d)->required();
    construct->add_option("--ell", o.ell)->required();
    construct->add_option("--format", o.format, "g6 or json")->check(CLI::IsMember({"g6", "json"}));

    auto* formula = app.add_subcommand("formula", "bound values as JSON");
    formula->add_option("--n", o.n)->required();
    formula->add_option("--d", o.d)->required();
    formula->add_option("--ell", o.ell)->required();
    formula->add_option("--r", o.r)->required();

    auto* cliques = app.add_subcommand("cliques", "per-graph K_r counts (TSV)");
    cliques->add_option("--r", o.r)->required();
    add_input(cliques, o);

    auto* check = app.add_subcommand("check", "per-graph l-hamiltonicity verdicts (TSV)");
    check->add_option("--ell", o.ell)->required();
    check->add_flag("--witness", o.witness, "append the failing forest (or a cycle)");
    add_input(check, o);

    auto* closure = app.add_subcommand("closure", "k-closure of each graph (graph6)");
    closure->add_option("--k", o.k)->required();
    add_input(closure, o);

    auto* sat = app.add_subcommand("saturate", "canonical l-saturation of each graph (graph6)");
    sat->add_option("--ell", o.ell)->required();
    add_input(sat, o);

    auto* posa = app.add_subcommand("posa", "degree-sum test on every non-edge (TSV)");
    posa->add_option("--ell", o.ell)->required();
    add_input(posa, o);

    auto* kronk = app.add_subcommand("posa-kronk", "degree-sequence test (TSV)");
    kronk->add_option("--ell", o.ell)->required();
    add_input(kronk, o);

    auto* verify = app.add_subcommand("verify", "exhaustive or streamed sweep; exit 2 on violation");
    verify->add_option("mode", o.mode, "bound, stability or sufficiency")
        ->required()
        ->check(CLI::IsMember({"bound", "stability", "sufficiency"}));
    verify->add_option("--n", o.n)->required();
    verify->add_option("--d", o.d);
    verify->add_option("--ell", o.ell)->required();
    verify->add_option("--r", o.r);
    verify->add_option("--source", o.source, "internal or stdin")->check(CLI::IsMember({"internal", "stdin", "stream"}));
    verify->add_option("--input", o.input, "graph6 file for --source stdin");
    verify->add_option("--workers", o.workers)->check(CLI::PositiveNumber);
    verify->add_option("--format", o.format, "json or tsv")->check(CLI::IsMember({"json", "tsv"}));
    verify->add_option("--on-error", o.on_error)->check(CLI::IsMember({"abort", "skip"}));
    verify->add_option("--argmax-limit", o.argmax_limit);
    verify->add_option("--bound", o.bound_override, "override the computed bound or threshold");
    verify->add_flag("--no-degree-filter", o.no_degree_filter);

    auto* convex = app.add_subcommand("convexity", "endpoint maximum of h_r over [lo, hi]");
    convex->add_option("--n", o.n)->required();
    convex->add_option("--ell", o.ell)->required();
    convex->add_option("--r", o.r)->required();
    convex->add_option("--lo", o.lo)->required();
    convex->add_option("--hi", o.hi)->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return kExitOk;
    } catch (const CLI::CallForAllHelp& e) {
        app.exit(e, out, err);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    Runner runner(o, in, out, err);
    try {
        if (*construct) return runner.construct();
        if (*formula) return runner.formula();
        if (*cliques) return runner.cliques();
        if (*check) return runner.check();
        if (*closure) return runner.closure();
        if (*sat) return runner.saturate_cmd();
        if (*posa) return runner.degree_test(false);
        if (*kronk) return runner.degree_test(true);
        if (*verify) return runner.verify();
        if (*convex) return runner.convexity();
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    err << app.help();
    return kExitUsage;
}

}  // namespace lhamil
