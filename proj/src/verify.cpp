#include "lhamil/verify.hpp"

#include <algorithm>
#include <istream>
#include <string>

#include "lhamil/closure.hpp"
#include "lhamil/embedding.hpp"
#include "lhamil/error.hpp"
#include "lhamil/graph6.hpp"
#include "lhamil/hamiltonicity.hpp"
#include "parallel_fold.hpp"

namespace lhamil {

// ---------------------------------------------------------------------------
// Sources

namespace {

void require_enumerable(int n) {
    if (n < 1 || n > kMaxEnumerationOrder) {
        throw ParameterError("labeled enumeration requires 1 <= n <= 8 (got n=" + std::to_string(n) + ")");
    }
}

}  // namespace

Graph labeled_graph(int n, std::uint64_t mask) {
    require_enumerable(n);
    Graph g(n);
    int i = 0;
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b, ++i) {
            if ((mask >> i) & 1U) g.add_edge(a, b);
        }
    }
    return g;
}

std::uint64_t labeled_graph_count(int n) {
    require_enumerable(n);
    return std::uint64_t{1} << (n * (n - 1) / 2);
}

void for_each_labeled_graph(int n, std::optional<int> min_degree, const std::function<bool(const Graph&)>& visit) {
    const std::uint64_t total = labeled_graph_count(n);
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        Graph g = labeled_graph(n, mask);
        if (min_degree && g.min_degree() < *min_degree) continue;
        if (!visit(g)) return;
    }
}

std::vector<Graph> enumerate_labeled_graphs(int n, std::optional<int> min_degree) {
    std::vector<Graph> out;
    for_each_labeled_graph(n, min_degree, [&](const Graph& g) {
        out.push_back(g);
        return true;
    });
    return out;
}

StreamError::StreamError(std::size_t line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

std::optional<NumberedGraph> GraphStreamReader::next() {
    std::string text;
    while (std::getline(in_, text)) {
        ++line_;
        if (!text.empty() && text.back() == '\r') text.pop_back();
        if (text.empty()) continue;
        try {
            return NumberedGraph{line_, parse_graph6(text)};
        } catch (const Graph6Error& e) {
            if (mode_ == ErrorMode::Abort) throw StreamError(line_, e.what());
            warnings_.push_back("line " + std::to_string(line_) + ": " + e.what());
        }
    }
    return std::nullopt;
}

std::vector<Graph> read_graph_stream(std::istream& in, ErrorMode mode, std::vector<std::string>* warnings) {
    GraphStreamReader reader(in, mode);
    std::vector<Graph> out;
    while (auto item = reader.next()) out.push_back(std::move(item->graph));
    if (warnings) *warnings = reader.warnings();
    return out;
}

// ---------------------------------------------------------------------------
// Sweeps

void SweepConfig::validate_extremal() const {
    ExtremalParams{n, d, ell, r}.validate();
    if (source == SweepSource::Internal) require_enumerable(n);
    if (n > kMaxOracleOrder) throw ParameterError("sweeps require n <= 20");
}

void SweepConfig::validate_sufficiency() const {
    if (n < 3) throw ParameterError("sufficiency sweep requires n >= 3");
    if (ell < 0 || ell > n - 2) throw ParameterError("sufficiency sweep requires 0 <= ell <= n-2");
    if (source == SweepSource::Internal) require_enumerable(n);
    if (n > kMaxOracleOrder) throw ParameterError("sweeps require n <= 20");
}

const char* verdict_name(EmbeddingVerdict v) {
    switch (v) {
        case EmbeddingVerdict::IntoH: return "H";
        case EmbeddingVerdict::IntoHPrime: return "Hprime";
        case EmbeddingVerdict::Violation: return "VIOLATION";
    }
    return "?";
}

namespace {

void require_order(const SweepConfig& c, const Graph& g) {
    if (g.order() != c.n) {
        throw ParameterError("sweep expects graphs of order " + std::to_string(c.n) + " (got " +
                             std::to_string(g.order()) + ")");
    }
}

// Degree hypothesis and non-ell-hamiltonicity, cheap test first.
bool in_scope(const SweepConfig& c, const Graph& g) {
    if (c.degree_filter && g.min_degree() < c.d) return false;
    return !is_l_hamiltonian(g, c.ell).is_l_hamiltonian;
}

void insert_capped(std::vector<std::string>& sorted, std::string g6, std::size_t limit) {
    auto at = std::lower_bound(sorted.begin(), sorted.end(), g6);
    if (at != sorted.end() && *at == g6) return;
    if (sorted.size() >= limit && at == sorted.end()) return;
    sorted.insert(at, std::move(g6));
    if (sorted.size() > limit) sorted.pop_back();
}

template <class Visit>
auto run_sweep(const SweepConfig& c, std::span<const Graph> graphs, bool internal, auto make, Visit visit, auto merge) {
    const std::uint64_t count = internal ? labeled_graph_count(c.n) : graphs.size();
    using Part = decltype(make());
    return detail::parallel_fold<Part>(
        count, c.workers, make,
        [&](Part& part, std::uint64_t i) {
            if (internal) {
                visit(part, labeled_graph(c.n, i));
            } else {
                visit(part, graphs[i]);
            }
        },
        merge);
}

BoundReport bound_sweep(const SweepConfig& c, std::span<const Graph> graphs, bool internal) {
    c.validate_extremal();
    const Count bound = c.bound_override.value_or(pp_bound(c.n, c.d, c.ell, c.r));
    BoundReport rep = run_sweep(
        c, graphs, internal,
        [&] {
            BoundReport r;
            r.bound = bound;
            return r;
        },
        [&](BoundReport& part, const Graph& g) {
            require_order(c, g);
            ++part.scanned;
            if (!in_scope(c, g)) return;
            ++part.in_scope;
            const Count k = count_cliques(g, c.r);
            if (k > bound) part.violations.push_back({write_graph6(g), k});
            if (!part.max_count || k > *part.max_count) {
                part.max_count = k;
                part.argmax.clear();
                part.argmax_total = 0;
            }
            if (k == *part.max_count) {
                ++part.argmax_total;
                insert_capped(part.argmax, write_graph6(g), c.argmax_limit);
            }
        },
        [&](BoundReport& into, const BoundReport& from) { merge_report(into, from, c.argmax_limit); });
    rep.attained = rep.max_count && *rep.max_count == bound;
    return rep;
}

StabilityReport stability_sweep(const SweepConfig& c, std::span<const Graph> graphs, bool internal) {
    c.validate_extremal();
    const Count threshold = c.bound_override.value_or(stability_bound(c.n, c.d, c.ell, c.r));
    return run_sweep(
        c, graphs, internal,
        [&] {
            StabilityReport r;
            r.threshold = threshold;
            return r;
        },
        [&](StabilityReport& part, const Graph& g) {
            require_order(c, g);
            ++part.scanned;
            if (!in_scope(c, g)) return;
            ++part.in_scope;
            const Count k = count_cliques(g, c.r);
            if (k <= threshold) return;
            StabilityEntry entry{write_graph6(g), k, EmbeddingVerdict::Violation, std::nullopt};
            if (auto w = embeds_into_H(g, c.d, c.ell)) {
                entry.verdict = EmbeddingVerdict::IntoH;
                entry.witness = std::move(w);
            } else if (auto wp = embeds_into_Hprime(g, c.d, c.ell)) {
                entry.verdict = EmbeddingVerdict::IntoHPrime;
                entry.witness = std::move(wp);
            } else {
                ++part.violations;
            }
            part.entries.push_back(std::move(entry));
        },
        [](StabilityReport& into, const StabilityReport& from) { merge_report(into, from); });
}

SufficiencyReport sufficiency_sweep(const SweepConfig& c, std::span<const Graph> graphs, bool internal) {
    c.validate_sufficiency();
    return run_sweep(
        c, graphs, internal, [] { return SufficiencyReport{}; },
        [&](SufficiencyReport& part, const Graph& g) {
            require_order(c, g);
            ++part.scanned;
            const bool ds = degree_sum_check(g, c.ell);
            const bool pk = posa_kronk_check(g, c.ell);
            part.degree_sum_pass += ds ? 1 : 0;
            part.posa_kronk_pass += pk ? 1 : 0;
            if (!ds && !pk) return;
            if (is_l_hamiltonian(g, c.ell).is_l_hamiltonian) {
                ++part.oracle_confirmed;
            } else {
                part.counterexamples.push_back({write_graph6(g), ds, pk});
            }
        },
        [](SufficiencyReport& into, const SufficiencyReport& from) { merge_report(into, from); });
}

}  // namespace

void merge_report(BoundReport& into, const BoundReport& from, std::size_t argmax_limit) {
    into.scanned += from.scanned;
    into.in_scope += from.in_scope;
    if (from.max_count) {
        if (!into.max_count || *from.max_count > *into.max_count) {
            into.max_count = from.max_count;
            into.argmax = from.argmax;
            into.argmax_total = from.argmax_total;
        } else if (*from.max_count == *into.max_count) {
            for (const auto& g6 : from.argmax) insert_capped(into.argmax, g6, argmax_limit);
            into.argmax_total += from.argmax_total;
        }
    }
    into.violations.insert(into.violations.end(), from.violations.begin(), from.violations.end());
    std::sort(into.violations.begin(), into.violations.end(),
              [](const CountedGraph& a, const CountedGraph& b) { return a.graph6 < b.graph6; });
    into.attained = into.max_count && *into.max_count == into.bound;
}

void merge_report(StabilityReport& into, const StabilityReport& from) {
    into.scanned += from.scanned;
    into.in_scope += from.in_scope;
    into.violations += from.violations;
    into.entries.insert(into.entries.end(), from.entries.begin(), from.entries.end());
    std::sort(into.entries.begin(), into.entries.end(),
              [](const StabilityEntry& a, const StabilityEntry& b) { return a.graph6 < b.graph6; });
}

void merge_report(SufficiencyReport& into, const SufficiencyReport& from) {
    into.scanned += from.scanned;
    into.degree_sum_pass += from.degree_sum_pass;
    into.posa_kronk_pass += from.posa_kronk_pass;
    into.oracle_confirmed += from.oracle_confirmed;
    into.counterexamples.insert(into.counterexamples.end(), from.counterexamples.begin(), from.counterexamples.end());
    std::sort(into.counterexamples.begin(), into.counterexamples.end(),
              [](const auto& a, const auto& b) { return a.graph6 < b.graph6; });
}

BoundReport verify_pp_bound(const SweepConfig& config) { return bound_sweep(config, {}, true); }
BoundReport verify_pp_bound(const SweepConfig& config, std::span<const Graph> graphs) {
    return bound_sweep(config, graphs, false);
}

StabilityReport verify_stability(const SweepConfig& config) { return stability_sweep(config, {}, true); }
StabilityReport verify_stability(const SweepConfig& config, std::span<const Graph> graphs) {
    return stability_sweep(config, graphs, false);
}

SufficiencyReport verify_sufficiency(const SweepConfig& config) { return sufficiency_sweep(config, {}, true); }
SufficiencyReport verify_sufficiency(const SweepConfig& config, std::span<const Graph> graphs) {
    return sufficiency_sweep(config, graphs, false);
}

}  // namespace lhamil
