#include "lhamil/graph6.hpp"

#include "lhamil/error.hpp"

namespace lhamil {

namespace {

constexpr int kBias = 63;
constexpr char kLongSize = '~';

bool printable(char c) { return c >= 63 && c <= 126; }

}  // namespace

Graph parse_graph6(std::string_view text) {
    if (text.empty()) throw Graph6Error("graph6: empty input");
    for (char c : text) {
        if (!printable(c)) throw Graph6Error("graph6: non-printable byte in input");
    }

    int n = 0;
    std::size_t pos = 0;
    if (text[0] == kLongSize) {
        if (text.size() < 4 || text[1] == kLongSize) throw Graph6Error("graph6: malformed length prefix");
        n = ((text[1] - kBias) << 12) | ((text[2] - kBias) << 6) | (text[3] - kBias);
        if (n < 63) throw Graph6Error("graph6: long length prefix used for n < 63");
        pos = 4;
    } else {
        n = text[0] - kBias;
        pos = 1;
    }
    if (n < 1 || n > kMaxOrder) {
        throw Graph6Error("graph6: order " + std::to_string(n) + " outside 1..64");
    }

    const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
    const std::size_t body = (bits + 5) / 6;
    if (text.size() - pos < body) throw Graph6Error("graph6: truncated adjacency data");
    if (text.size() - pos > body) throw Graph6Error("graph6: trailing bytes after adjacency data");

    Graph g(n);
    std::size_t k = 0;
    for (int b = 1; b < n; ++b) {
        for (int a = 0; a < b; ++a, ++k) {
            int chunk = text[pos + k / 6] - kBias;
            if ((chunk >> (5 - k % 6)) & 1) g.add_edge(a, b);
        }
    }
    for (; k < body * 6; ++k) {
        int chunk = text[pos + k / 6] - kBias;
        if ((chunk >> (5 - k % 6)) & 1) throw Graph6Error("graph6: non-zero padding bits");
    }
    return g;
}

std::string write_graph6(const Graph& g) {
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kBias));
    } else {
        out.push_back(kLongSize);
        out.push_back(static_cast<char>(((n >> 12) & 63) + kBias));
        out.push_back(static_cast<char>(((n >> 6) & 63) + kBias));
        out.push_back(static_cast<char>((n & 63) + kBias));
    }
    int chunk = 0;
    int filled = 0;
    for (int b = 1; b < n; ++b) {
        for (int a = 0; a < b; ++a) {
            chunk = (chunk << 1) | (g.has_edge(a, b) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(chunk + kBias));
                chunk = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((chunk << (6 - filled)) + kBias));
    return out;
}

}  // namespace lhamil
