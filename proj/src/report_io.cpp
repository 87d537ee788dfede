#include "lhamil/report_io.hpp"

#include <sstream>

namespace lhamil {

using nlohmann::json;

json to_json(const ExtremalWitness& w) {
    if (w.family == Family::H) return json{{"family", "H"}, {"D", w.low}, {"B", w.hub}};
    return json{{"family", "Hprime"}, {"X", w.low}, {"Y", w.hub}, {"Z", w.rest}};
}

json to_json(const BoundReport& r) {
    json violations = json::array();
    for (const auto& v : r.violations) violations.push_back({{"graph6", v.graph6}, {"count", v.count}});
    return json{{"schema", kReportSchema},
                {"kind", "bound"},
                {"scanned", r.scanned},
                {"in_scope", r.in_scope},
                {"max_count", r.max_count ? json(*r.max_count) : json(nullptr)},
                {"bound", r.bound},
                {"attained", r.attained},
                {"argmax", r.argmax},
                {"argmax_total", r.argmax_total},
                {"violations", violations}};
}

json to_json(const StabilityReport& r) {
    json entries = json::array();
    json violations = json::array();
    for (const auto& e : r.entries) {
        json item{{"graph6", e.graph6}, {"count", e.count}, {"verdict", verdict_name(e.verdict)}};
        if (e.witness) item["witness"] = to_json(*e.witness);
        if (e.verdict == EmbeddingVerdict::Violation) violations.push_back(e.graph6);
        entries.push_back(std::move(item));
    }
    return json{{"schema", kReportSchema},
                {"kind", "stability"},
                {"scanned", r.scanned},
                {"in_scope", r.in_scope},
                {"threshold", r.threshold},
                {"above_threshold", r.entries.size()},
                {"entries", entries},
                {"violations", violations}};
}

json to_json(const SufficiencyReport& r) {
    json counterexamples = json::array();
    for (const auto& c : r.counterexamples) {
        counterexamples.push_back({{"graph6", c.graph6}, {"degree_sum", c.degree_sum}, {"posa_kronk", c.posa_kronk}});
    }
    return json{{"schema", kReportSchema},
                {"kind", "sufficiency"},
                {"scanned", r.scanned},
                {"degree_sum_pass", r.degree_sum_pass},
                {"posa_kronk_pass", r.posa_kronk_pass},
                {"oracle_confirmed", r.oracle_confirmed},
                {"violations", counterexamples}};
}

std::string to_tsv(const BoundReport& r) {
    std::ostringstream out;
    out << "scanned\t" << r.scanned << '\n' << "in_scope\t" << r.in_scope << '\n';
    out << "max_count\t";
    if (r.max_count) out << *r.max_count;
    out << '\n' << "bound\t" << r.bound << '\n' << "attained\t" << (r.attained ? "true" : "false") << '\n';
    out << "argmax_total\t" << r.argmax_total << '\n';
    for (const auto& g6 : r.argmax) out << "argmax\t" << g6 << '\n';
    for (const auto& v : r.violations) out << "violation\t" << v.graph6 << '\t' << v.count << '\n';
    return out.str();
}

std::string to_tsv(const StabilityReport& r) {
    std::ostringstream out;
    out << "scanned\t" << r.scanned << '\n'
        << "in_scope\t" << r.in_scope << '\n'
        << "threshold\t" << r.threshold << '\n'
        << "above_threshold\t" << r.entries.size() << '\n'
        << "violations\t" << r.violations << '\n';
    for (const auto& e : r.entries) out << "entry\t" << e.graph6 << '\t' << e.count << '\t' << verdict_name(e.verdict) << '\n';
    return out.str();
}

std::string to_tsv(const SufficiencyReport& r) {
    std::ostringstream out;
    out << "scanned\t" << r.scanned << '\n'
        << "degree_sum_pass\t" << r.degree_sum_pass << '\n'
        << "posa_kronk_pass\t" << r.posa_kronk_pass << '\n'
        << "oracle_confirmed\t" << r.oracle_confirmed << '\n';
    for (const auto& c : r.counterexamples) {
        out << "violation\t" << c.graph6 << '\t' << (c.degree_sum ? "degree_sum" : "") << (c.degree_sum && c.posa_kronk ? "," : "")
            << (c.posa_kronk ? "posa_kronk" : "") << '\n';
    }
    return out.str();
}

}  // namespace lhamil
