#include "specfactor/matching.hpp"

#include <algorithm>
#include <queue>

namespace specfactor {

namespace {

// Alternating-forest search with blossom contraction. `base[v]` tracks the
// base vertex of the blossom currently containing v; `p` stores the
// alternating-tree parent used to unwind augmenting paths.
struct BlossomSolver {
    const AdjList& g;
    int n;
    std::vector<int> match, p, base;
    std::vector<char> used, blossom;

    explicit BlossomSolver(const AdjList& graph)
        : g(graph), n(graph.n), match(n, -1), p(n, -1), base(n, 0),
          used(n, 0), blossom(n, 0) {}

    int lca(int a, int b) {
        std::vector<char> seen(n, 0);
        int cur = a;
        for (;;) {
            cur = base[cur];
            seen[cur] = 1;
            if (match[cur] == -1) break;
            cur = p[match[cur]];
        }
        cur = b;
        for (;;) {
            cur = base[cur];
            if (seen[cur]) return cur;
            cur = p[match[cur]];
        }
    }

    void mark_path(int v, int b, int child) {
        while (base[v] != b) {
            blossom[base[v]] = 1;
            blossom[base[match[v]]] = 1;
            p[v] = child;
            child = match[v];
            v = p[match[v]];
        }
    }

    int find_path(int root) {
        std::fill(used.begin(), used.end(), 0);
        std::fill(p.begin(), p.end(), -1);
        for (int i = 0; i < n; ++i) base[i] = i;
        used[root] = 1;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int to : g.adj[v]) {
                if (base[v] == base[to] || match[v] == to) continue;
                if (to == root || (match[to] != -1 && p[match[to]] != -1)) {
                    // odd cycle: contract the blossom around the lca
                    int curbase = lca(v, to);
                    std::fill(blossom.begin(), blossom.end(), 0);
                    mark_path(v, curbase, to);
                    mark_path(to, curbase, v);
                    for (int i = 0; i < n; ++i)
                        if (blossom[base[i]]) {
                            base[i] = curbase;
                            if (!used[i]) {
                                used[i] = 1;
                                q.push(i);
                            }
                        }
                } else if (p[to] == -1) {
                    p[to] = v;
                    if (match[to] == -1) return to; // augmenting path found
                    used[match[to]] = 1;
                    q.push(match[to]);
                }
            }
        }
        return -1;
    }

    std::vector<int> solve() {
        // greedy seed cuts the number of augmentation phases roughly in half
        for (int v = 0; v < n; ++v)
            if (match[v] == -1)
                for (int to : g.adj[v])
                    if (match[to] == -1) {
                        match[v] = to;
                        match[to] = v;
                        break;
                    }
        for (int v = 0; v < n; ++v) {
            if (match[v] != -1) continue;
            int u = find_path(v);
            while (u != -1) {
                int pv = p[u], ppv = match[pv];
                match[u] = pv;
                match[pv] = u;
                u = ppv;
            }
        }
        return match;
    }
};

} // namespace

std::vector<int> blossom_matching(const AdjList& g) {
    return BlossomSolver(g).solve();
}

Matching max_matching(const Graph& g) {
    AdjList a(g.n());
    for (const Edge& e : g.edges()) a.add_edge(e.u, e.v);
    std::vector<int> match = blossom_matching(a);
    Matching m;
    for (int v = 0; v < g.n(); ++v)
        if (match[v] > v) m.edges.push_back({v, match[v]});
    return m;
}

namespace {
int brute_rec(const Graph& g, VertexSet unmatched) {
    if (!unmatched) return 0;
    int u = __builtin_ctzll(unmatched);
    VertexSet rest = unmatched & ~(1ULL << u);
    int best = brute_rec(g, rest); // u stays exposed
    std::uint64_t nb = g.adj(u) & rest;
    while (nb) {
        int v = __builtin_ctzll(nb);
        nb &= nb - 1;
        best = std::max(best, 1 + brute_rec(g, rest & ~(1ULL << v)));
    }
    return best;
}
} // namespace

int brute_force_matching_size(const Graph& g) {
    return brute_rec(g, g.vmask());
}

VertexSet tutte_witness(const Graph& g) {
    int nu = max_matching(g).size();
    VertexSet d = 0;
    for (int v = 0; v < g.n(); ++v) {
        Graph without = induced(g, g.vmask() & ~(1ULL << v));
        if (max_matching(without).size() == nu) d |= 1ULL << v;
    }
    VertexSet a = 0;
    VertexSet dd = d;
    while (dd) {
        int v = __builtin_ctzll(dd);
        dd &= dd - 1;
        a |= g.adj(v);
    }
    a &= ~d;
    return a;
}

} // namespace specfactor
