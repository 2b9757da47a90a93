#include "specfactor/canonical.hpp"

#include <algorithm>
#include <limits>

namespace specfactor {

namespace {

constexpr int kCap = 10;

// Searches vertex orderings position by position. The code is the
// concatenation of "columns": placing a vertex at position p contributes the
// bits (0,p),(1,p),...,(p-1,p), read most-significant-first, so the whole
// string is minimized by minimizing each column given the chosen prefix.
// Only candidates attaining the minimal column are branched on; twins
// (vertices whose swap is an automorphism) collapse to one branch; once an
// incumbent exists, subtrees whose next column exceeds it are cut.
struct Canonizer {
    const Graph& g;
    int n;
    std::vector<int> perm;
    std::vector<unsigned> cur, best; // column values per position 1..n-1
    bool have_best = false;

    explicit Canonizer(const Graph& graph) : g(graph), n(graph.n()) {
        perm.reserve(n);
        cur.assign(n, 0);
    }

    unsigned column_of(int c) const {
        int p = (int)perm.size();
        unsigned col = 0;
        for (int q = 0; q < p; ++q)
            col = (col << 1) | (g.has_edge(perm[q], c) ? 1u : 0u);
        return col;
    }

    static bool twins(const Graph& g, int a, int b) {
        std::uint64_t na = g.adj(a) & ~(1ULL << b);
        std::uint64_t nb = g.adj(b) & ~(1ULL << a);
        return na == nb;
    }

    // tight: prefix so far equals the incumbent's prefix
    void dfs(std::uint64_t used, bool tight) {
        int p = (int)perm.size();
        if (p == n) {
            // a loose subtree can reach leaves worse than the incumbent
            if (!have_best || cur < best) best = cur;
            have_best = true;
            return;
        }
        unsigned min_col = std::numeric_limits<unsigned>::max();
        std::vector<int> cands;
        std::uint64_t rest = g.vmask() & ~used;
        while (rest) {
            int c = __builtin_ctzll(rest);
            rest &= rest - 1;
            unsigned col = column_of(c);
            if (col < min_col) {
                min_col = col;
                cands.clear();
            }
            if (col == min_col) cands.push_back(c);
        }
        std::vector<int> reps;
        for (int c : cands) {
            bool dup = false;
            for (int r : reps)
                if (twins(g, r, c)) { dup = true; break; }
            if (!dup) reps.push_back(c);
        }
        for (int c : reps) {
            // re-check per child: an earlier sibling may have lowered best
            bool child_tight = tight;
            if (have_best && tight) {
                if (min_col > best[p]) return;
                if (min_col < best[p]) child_tight = false;
            }
            perm.push_back(c);
            cur[p] = min_col;
            dfs(used | (1ULL << c), child_tight);
            perm.pop_back();
        }
    }
};

} // namespace

std::string canonical_code(const Graph& g) {
    if (g.n() > kCap)
        throw capacity_error("canonical form capped at 10 vertices");
    if (g.n() <= 1) return std::string(1, char('0' + g.n()));

    Canonizer cz(g);
    cz.dfs(0, true);

    std::string code(1, char('0' + g.n()));
    for (int p = 1; p < g.n(); ++p)
        for (int q = p - 1; q >= 0; --q)
            code.push_back(((cz.best[p] >> q) & 1) ? '1' : '0');
    return code;
}

bool is_isomorphic(const Graph& g, const Graph& h) {
    if (g.n() != h.n() || g.edge_count() != h.edge_count()) return false;
    return canonical_code(g) == canonical_code(h);
}

} // namespace specfactor
