#include "specfactor/graph6.hpp"

#include <string>

namespace specfactor {

namespace {
constexpr int kOffset = 63;

int triangle_bits(int n) { return n * (n - 1) / 2; }
int body_bytes(int n) { return (triangle_bits(n) + 5) / 6; }
} // namespace

Graph parse_graph6(std::string_view text) {
    // strip one trailing newline so raw stream lines parse as-is
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r'))
        text.remove_suffix(1);
    if (text.empty()) throw std::invalid_argument("empty graph6 string");

    for (char c : text)
        if (c < 63 || c > 126)
            throw std::invalid_argument("byte outside graph6 range 63..126");

    std::size_t pos = 0;
    long n;
    if (text[0] != '~') {
        n = text[0] - kOffset;
        pos = 1;
    } else {
        if (text.size() >= 2 && text[1] == '~')
            throw capacity_error("graph6 order exceeds 64");
        if (text.size() < 4) throw std::invalid_argument("malformed length header");
        n = (long(text[1] - kOffset) << 12) | (long(text[2] - kOffset) << 6) |
            long(text[3] - kOffset);
        if (n <= 62)
            throw std::invalid_argument("malformed length header: long form for small order");
        pos = 4;
    }
    if (n > Graph::kMaxVertices) throw capacity_error("graph6 order exceeds 64");

    std::string_view body = text.substr(pos);
    if ((int)body.size() != body_bytes((int)n))
        throw std::invalid_argument("body length does not match order");

    Graph g((int)n);
    auto bit_at = [&](int idx) {
        return ((body[idx / 6] - kOffset) >> (5 - idx % 6)) & 1;
    };
    int bit = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u, ++bit)
            if (bit_at(bit)) g.add_edge(u, v);
    for (int pad = bit; pad < (int)body.size() * 6; ++pad)
        if (bit_at(pad)) throw std::invalid_argument("trailing bits nonzero");
    return g;
}

std::string write_graph6(const Graph& g) {
    std::string out;
    int n = g.n();
    if (n <= 62) {
        out.push_back(char(n + kOffset));
    } else {
        out.push_back('~');
        out.push_back(char(((n >> 12) & 63) + kOffset));
        out.push_back(char(((n >> 6) & 63) + kOffset));
        out.push_back(char((n & 63) + kOffset));
    }
    int val = 0, filled = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) {
            val = (val << 1) | (g.has_edge(u, v) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(char(val + kOffset));
                val = 0;
                filled = 0;
            }
        }
    if (filled) out.push_back(char((val << (6 - filled)) + kOffset));
    return out;
}

} // namespace specfactor
