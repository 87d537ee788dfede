#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "lhamil/extremal.hpp"
#include "lhamil/graph.hpp"

namespace lhamil {

// ---------------------------------------------------------------------------
// Graph sources

inline constexpr int kMaxEnumerationOrder = 8;

/// The labeled graph on n vertices whose edges are the set bits of `mask`,
/// bit i standing for the i-th pair in lexicographic order (01, 02, ..., 12, ...).
Graph labeled_graph(int n, std::uint64_t mask);

/// Number of labeled graphs on n vertices, 2^C(n,2).
std::uint64_t labeled_graph_count(int n);

/// All labeled graphs on 1 <= n <= 8 vertices in edge-mask order, optionally
/// only those with minimum degree >= min_degree. The visitor returns false
/// to stop.
void for_each_labeled_graph(int n, std::optional<int> min_degree, const std::function<bool(const Graph&)>& visit);

/// Materialised form of for_each_labeled_graph; intended for n <= 6.
std::vector<Graph> enumerate_labeled_graphs(int n, std::optional<int> min_degree = std::nullopt);

enum class ErrorMode { Abort, Skip };

struct NumberedGraph {
    std::size_t line = 0;
    Graph graph;
};

/// Thrown in abort mode; the message carries the 1-based line number.
class StreamError : public std::runtime_error {
public:
    StreamError(std::size_t line, const std::string& what);
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// Reads graph6 lines. Blank lines are ignored; a trailing '\r' is stripped.
/// In skip mode a malformed line yields a warning and is dropped.
class GraphStreamReader {
public:
    GraphStreamReader(std::istream& in, ErrorMode mode) : in_(in), mode_(mode) {}

    std::optional<NumberedGraph> next();
    const std::vector<std::string>& warnings() const { return warnings_; }

private:
    std::istream& in_;
    ErrorMode mode_;
    std::size_t line_ = 0;
    std::vector<std::string> warnings_;
};

std::vector<Graph> read_graph_stream(std::istream& in, ErrorMode mode, std::vector<std::string>* warnings = nullptr);

// ---------------------------------------------------------------------------
// Sweeps

enum class SweepSource { Internal, Stream };

struct SweepConfig {
    int n = 0;
    int d = 1;
    int ell = 0;
    int r = 2;
    SweepSource source = SweepSource::Internal;
    /// Skip graphs with minimum degree below d. Off means every graph is
    /// taken as satisfying the degree hypothesis.
    bool degree_filter = true;
    int workers = 1;
    /// How many argmax graphs (smallest graph6 first) a report keeps.
    std::size_t argmax_limit = 16;
    /// Replaces the computed bound / threshold. Used to exercise the
    /// violation path.
    std::optional<Count> bound_override;

    /// Window checks for bound and stability sweeps.
    void validate_extremal() const;
    /// Window checks for sufficiency sweeps: n >= 3, 0 <= ell <= n-2.
    void validate_sufficiency() const;
};

struct CountedGraph {
    std::string graph6;
    Count count = 0;

    friend bool operator==(const CountedGraph&, const CountedGraph&) = default;
};

struct BoundReport {
    std::uint64_t scanned = 0;
    std::uint64_t in_scope = 0;
    std::optional<Count> max_count;
    Count bound = 0;
    /// Some in-scope graph reaches the bound exactly.
    bool attained = false;
    /// Smallest graph6 strings among the graphs attaining max_count.
    std::vector<std::string> argmax;
    std::uint64_t argmax_total = 0;
    std::vector<CountedGraph> violations;

    bool holds() const { return violations.empty(); }
    friend bool operator==(const BoundReport&, const BoundReport&) = default;
};

enum class EmbeddingVerdict { IntoH, IntoHPrime, Violation };

const char* verdict_name(EmbeddingVerdict v);

struct StabilityEntry {
    std::string graph6;
    Count count = 0;
    EmbeddingVerdict verdict = EmbeddingVerdict::Violation;
    std::optional<ExtremalWitness> witness;

    friend bool operator==(const StabilityEntry&, const StabilityEntry&) = default;
};

struct StabilityReport {
    std::uint64_t scanned = 0;
    std::uint64_t in_scope = 0;
    Count threshold = 0;
    /// In-scope graphs with N(G, K_r) > threshold, sorted by graph6.
    std::vector<StabilityEntry> entries;
    std::uint64_t violations = 0;

    bool holds() const { return violations == 0; }
    friend bool operator==(const StabilityReport&, const StabilityReport&) = default;
};

struct SufficiencyCounterexample {
    std::string graph6;
    bool degree_sum = false;
    bool posa_kronk = false;

    friend bool operator==(const SufficiencyCounterexample&, const SufficiencyCounterexample&) = default;
};

struct SufficiencyReport {
    std::uint64_t scanned = 0;
    std::uint64_t degree_sum_pass = 0;
    std::uint64_t posa_kronk_pass = 0;
    std::uint64_t oracle_confirmed = 0;
    std::vector<SufficiencyCounterexample> counterexamples;

    bool holds() const { return counterexamples.empty(); }
    friend bool operator==(const SufficiencyReport&, const SufficiencyReport&) = default;
};

/// Internal source: every labeled graph on config.n vertices.
BoundReport verify_pp_bound(const SweepConfig& config);
/// Graphs supplied by the caller; each must have order config.n.
BoundReport verify_pp_bound(const SweepConfig& config, std::span<const Graph> graphs);
/// Combines two partial reports of the same configuration (same bound).
void merge_report(BoundReport& into, const BoundReport& from, std::size_t argmax_limit);

StabilityReport verify_stability(const SweepConfig& config);
StabilityReport verify_stability(const SweepConfig& config, std::span<const Graph> graphs);
void merge_report(StabilityReport& into, const StabilityReport& from);

SufficiencyReport verify_sufficiency(const SweepConfig& config);
SufficiencyReport verify_sufficiency(const SweepConfig& config, std::span<const Graph> graphs);
void merge_report(SufficiencyReport& into, const SufficiencyReport& from);

}  // namespace lhamil
