#include "specfactor/factors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

#include "specfactor/spectral.hpp"

namespace specfactor {

std::optional<VertexSet> sweep_violator(const Graph& g, int b, SweepKind kind) {
    if (b < 1) throw std::invalid_argument("sweep multiplier must be >= 1");
    const int n = g.n();
    if (n > 24) throw capacity_error("subset sweep needs n <= 24");
    auto excess = [&](VertexSet s) {
        return kind == SweepKind::OddComponents ? odd_components(g, s)
                                                : isolated_vertices(g, s);
    };
    // A violating S of size k leaves n-k vertices to supply more than b*k
    // components, so k <= (n-1)/(b+1); larger sizes cannot violate.
    const int max_k = n > 0 ? (n - 1) / (b + 1) : 0;
    for (int k = 1; k <= max_k; ++k) {
        const VertexSet limit = 1ULL << n;
        VertexSet s = (1ULL << k) - 1;
        while (s < limit) {
            if (excess(s) > b * k) return s;
            VertexSet c = s & (~s + 1);  // Gosper: next k-subset by ascending mask
            VertexSet r = s + c;
            s = r | (((s ^ r) >> 2) / c);
        }
    }
    if (excess(0) > 0) return VertexSet{0};
    return std::nullopt;
}

FactorResult perfect_matching(const Graph& g) {
    const int n = g.n();
    FactorResult r;
    Matching m = max_matching(g);
    if (2 * m.size() == n) {
        Graph f(n);
        for (const Edge& e : m.edges) f.add_edge(e.u, e.v);
        r.outcome = Outcome::Found;
        r.factor = f;
        r.method = "blossom";
        return r;
    }
    r.outcome = Outcome::Refuted;
    r.witness = tutte_witness(g);
    r.method = "gallai_edmonds";
    if (odd_components(g, r.witness) <= __builtin_popcountll(r.witness))
        throw std::logic_error("matching certificate does not violate the odd-component bound");
    return r;
}

bool is_unique_pm(const Graph& g) {
    const int n = g.n();
    if (n % 2) return false;
    Matching m = max_matching(g);
    if (2 * m.size() != n) return false;
    std::vector<int> mate(n, -1);
    for (const Edge& e : m.edges) {
        mate[e.u] = e.v;
        mate[e.v] = e.u;
    }
    // Kotzig peeling: a graph whose perfect matching is unique has a bridge
    // inside the matching, and that bridge lies in every perfect matching
    // (an alternating cycle cannot cross a bridge), so deleting its endpoints
    // preserves the count. No matched bridge at any stage means a second
    // matching exists.
    Graph cur = g;
    std::vector<int> ids(n);
    for (int v = 0; v < n; ++v) ids[v] = v;
    while (cur.n() > 0) {
        Edge matched_bridge{-1, -1};
        for (const Edge& b : bridges(cur)) {
            if (mate[ids[b.u]] == ids[b.v]) {
                matched_bridge = b;
                break;
            }
        }
        if (matched_bridge.u < 0) return false;
        VertexSet keep = cur.vmask() & ~(1ULL << matched_bridge.u) &
                         ~(1ULL << matched_bridge.v);
        std::vector<int> sub_ids;
        cur = induced(cur, keep, &sub_ids);
        std::vector<int> next(cur.n());
        for (int v = 0; v < cur.n(); ++v) next[v] = ids[sub_ids[v]];
        ids = std::move(next);
    }
    return true;
}

namespace {

void pm_count_rec(const Graph& g, VertexSet free, long long cap, long long& cnt) {
    if (!free) {
        ++cnt;
        return;
    }
    int pick = -1, pick_deg = 65;
    for (VertexSet m = free; m;) {
        int v = __builtin_ctzll(m);
        m &= m - 1;
        int d = __builtin_popcountll(g.adj(v) & free);
        if (d < pick_deg) {
            pick_deg = d;
            pick = v;
            if (d == 0) return;  // stranded vertex, dead branch
        }
    }
    VertexSet nb = g.adj(pick) & free;
    while (nb) {
        int w = __builtin_ctzll(nb);
        nb &= nb - 1;
        pm_count_rec(g, free & ~((1ULL << pick) | (1ULL << w)), cap, cnt);
        if (cnt >= cap) return;
    }
}

}  // namespace

long long count_perfect_matchings(const Graph& g, long long cap) {
    if (cap < 1) throw std::invalid_argument("count cap must be >= 1");
    if (g.n() % 2) return 0;
    long long cnt = 0;
    pm_count_rec(g, g.vmask(), cap, cnt);
    return cnt;
}

namespace {

// Edge-by-edge backtracking for spanning subgraphs with per-vertex degree in
// [lo,hi] (all degrees odd when odd is set). Counts solutions up to cap and
// keeps the first one found.
struct DegreeSearch {
    std::vector<Edge> edges;
    const std::vector<int>& lo;
    const std::vector<int>& hi;
    bool odd;
    long long cap;
    std::vector<int> deg, rem;
    std::vector<Edge> cur, first;
    long long count = 0;

    bool vertex_ok(int v) const {
        if (deg[v] > hi[v]) return false;
        if (deg[v] + rem[v] < lo[v]) return false;
        if (rem[v] == 0) {
            if (deg[v] < lo[v]) return false;
            if (odd && deg[v] % 2 == 0) return false;
        }
        return true;
    }

    bool run(std::size_t idx) {  // true = cap reached, stop
        if (idx == edges.size()) {
            if (count == 0) first = cur;
            return ++count >= cap;
        }
        const Edge e = edges[idx];
        --rem[e.u];
        --rem[e.v];
        ++deg[e.u];
        ++deg[e.v];
        if (vertex_ok(e.u) && vertex_ok(e.v)) {
            cur.push_back(e);
            bool stop = run(idx + 1);
            cur.pop_back();
            if (stop) {
                --deg[e.u];
                --deg[e.v];
                ++rem[e.u];
                ++rem[e.v];
                return true;
            }
        }
        --deg[e.u];
        --deg[e.v];
        bool stop = false;
        if (vertex_ok(e.u) && vertex_ok(e.v)) stop = run(idx + 1);
        ++rem[e.u];
        ++rem[e.v];
        return stop;
    }
};

struct SearchOutcome {
    long long count;
    std::vector<Edge> first;
};

SearchOutcome degree_search(const Graph& g, const std::vector<int>& lo,
                            const std::vector<int>& hi, bool odd, long long cap) {
    const int n = g.n();
    DegreeSearch s{g.edges(), lo, hi, odd, cap, std::vector<int>(n, 0),
                   std::vector<int>(n, 0),    {}, {}};
    for (int v = 0; v < n; ++v) {
        s.rem[v] = g.degree(v);
        if (!s.vertex_ok(v)) return {0, {}};
    }
    s.run(0);
    return {s.count, s.first};
}

Graph subgraph_from(int n, const std::vector<Edge>& es) {
    Graph f(n);
    for (const Edge& e : es) f.add_edge(e.u, e.v);
    return f;
}

}  // namespace

FactorResult f_factor(const Graph& g, const std::vector<int>& f) {
    const int n = g.n();
    if ((int)f.size() != n)
        throw std::invalid_argument("degree target list must have one entry per vertex");
    for (int v = 0; v < n; ++v)
        if (f[v] < 0) throw std::invalid_argument("degree targets must be nonnegative");
    FactorResult r;
    r.method = "gadget";
    for (int v = 0; v < n; ++v) {
        if (f[v] > g.degree(v)) {
            r.outcome = Outcome::Refuted;
            r.witness = 1ULL << v;
            return r;
        }
    }
    long long gadget_nodes = 0;
    for (int v = 0; v < n; ++v) gadget_nodes += 2LL * g.degree(v) - f[v];
    if (gadget_nodes > 512) throw capacity_error("f-factor gadget exceeds 512 nodes");

    // Per vertex: one end node per incident edge, fully joined to
    // deg - f internal nodes; each original edge links its two end nodes.
    std::vector<int> end_base(n), int_base(n), slot(n, 0);
    int total = 0;
    for (int v = 0; v < n; ++v) {
        end_base[v] = total;
        total += g.degree(v);
        int_base[v] = total;
        total += g.degree(v) - f[v];
    }
    const auto es = g.edges();
    AdjList h(total);
    std::vector<std::pair<int, int>> end_of(es.size());
    for (std::size_t i = 0; i < es.size(); ++i) {
        end_of[i] = {end_base[es[i].u] + slot[es[i].u]++,
                     end_base[es[i].v] + slot[es[i].v]++};
        h.add_edge(end_of[i].first, end_of[i].second);
    }
    for (int v = 0; v < n; ++v)
        for (int e = 0; e < g.degree(v); ++e)
            for (int i = 0; i < g.degree(v) - f[v]; ++i)
                h.add_edge(end_base[v] + e, int_base[v] + i);

    auto match = blossom_matching(h);
    int matched = 0;
    for (int x : match)
        if (x >= 0) ++matched;
    if (matched != total) {
        r.outcome = Outcome::NotFound;
        r.exhaustive = true;  // the reduction is exact, so this is a proof
        return r;
    }
    Graph sub(n);
    for (std::size_t i = 0; i < es.size(); ++i)
        if (match[end_of[i].first] == end_of[i].second) sub.add_edge(es[i].u, es[i].v);
    for (int v = 0; v < n; ++v)
        if (sub.degree(v) != f[v]) throw std::logic_error("gadget extraction degree mismatch");
    r.outcome = Outcome::Found;
    r.factor = sub;
    return r;
}

long long count_f_factors(const Graph& g, const std::vector<int>& f, long long cap) {
    if ((int)f.size() != g.n())
        throw std::invalid_argument("degree target list must have one entry per vertex");
    if (cap < 1) throw std::invalid_argument("count cap must be >= 1");
    return degree_search(g, f, f, false, cap).count;
}

long long count_ab_factors(const Graph& g, const FactorQuery& q, long long cap) {
    if (q.a < 1 || q.a > q.b)
        throw std::invalid_argument("factor bounds need 1 <= a <= b");
    if (q.odd_only && q.b % 2 == 0)
        throw std::invalid_argument("odd factor queries need odd b");
    if (cap < 1) throw std::invalid_argument("count cap must be >= 1");
    std::vector<int> lo(g.n(), q.a), hi(g.n(), q.b);
    return degree_search(g, lo, hi, q.odd_only, cap).count;
}

namespace {

// Builds an odd [1,b]-factor, b >= 3 odd, after the sweep certified one
// exists. Tutte-style reduction to a perfect matching: per vertex, one end
// node per incident edge, deg - kmax absorbers that each must swallow an
// end (pinning the kept degree at most kmax), and an even clique of
// kmax - 1 spares soaking ends two at a time, which locks the kept degree
// odd. Edge-by-edge backtracking is not used here: near-extremal graphs
// make it discover stranded vertices exponentially late.
Graph odd_factor_from_gadget(const Graph& g, int b) {
    const int n = g.n();
    const auto es = g.edges();
    std::vector<int> end_base(n), int_base(n), spare(n), slot(n, 0);
    int total = 0;
    for (int v = 0; v < n; ++v) {
        const int d = g.degree(v);
        if (d == 0)
            throw std::logic_error("odd-component sweep passed but no odd factor was built");
        int kmax = std::min(b, d);
        if (kmax % 2 == 0) --kmax;
        end_base[v] = total;
        total += d;
        int_base[v] = total;
        spare[v] = kmax - 1;
        total += d - 1;  // d - kmax absorbers, then kmax - 1 clique spares
    }
    AdjList h(total);
    std::vector<std::pair<int, int>> end_of(es.size());
    for (std::size_t i = 0; i < es.size(); ++i) {
        end_of[i] = {end_base[es[i].u] + slot[es[i].u]++,
                     end_base[es[i].v] + slot[es[i].v]++};
        h.add_edge(end_of[i].first, end_of[i].second);
    }
    for (int v = 0; v < n; ++v) {
        const int d = g.degree(v);
        for (int e = 0; e < d; ++e)
            for (int i = 0; i < d - 1; ++i) h.add_edge(end_base[v] + e, int_base[v] + i);
        for (int i = d - 1 - spare[v]; i < d - 1; ++i)
            for (int j = i + 1; j < d - 1; ++j) h.add_edge(int_base[v] + i, int_base[v] + j);
    }
    auto match = blossom_matching(h);
    for (int x : match)
        if (x < 0)
            throw std::logic_error("odd-component sweep passed but no odd factor was built");
    Graph sub(n);
    for (std::size_t i = 0; i < es.size(); ++i)
        if (match[end_of[i].first] == end_of[i].second) sub.add_edge(es[i].u, es[i].v);
    for (int v = 0; v < n; ++v) {
        const int d = sub.degree(v);
        if (d < 1 || d > b || d % 2 == 0)
            throw std::logic_error("gadget extraction degree mismatch");
    }
    return sub;
}

}  // namespace

FactorResult odd_1b_factor(const Graph& g, int b) {
    if (b < 1 || b % 2 == 0)
        throw std::invalid_argument("odd factor bound must be odd and >= 1");
    FactorResult r;
    if (auto s = sweep_violator(g, b, SweepKind::OddComponents)) {
        r.outcome = Outcome::Refuted;
        r.witness = *s;
        r.method = "subset_sweep";
        return r;
    }
    r.outcome = Outcome::Found;
    if (b == 1) {
        // an odd [1,1]-factor is a perfect matching, and at b = 1 the swept
        // condition is exactly Tutte's, so the blossom must produce one
        Matching m = max_matching(g);
        if (2 * m.size() != g.n())
            throw std::logic_error("odd-component sweep passed but no odd factor was built");
        Graph sub(g.n());
        for (const Edge& e : m.edges) sub.add_edge(e.u, e.v);
        r.factor = sub;
        r.method = "blossom";
        return r;
    }
    r.factor = odd_factor_from_gadget(g, b);
    r.method = "gadget";
    return r;
}

FactorResult one_b_factor_exists(const Graph& g, int b) {
    if (b < 2) throw std::invalid_argument("[1,b] existence check needs b >= 2");
    FactorResult r;
    if (auto s = sweep_violator(g, b, SweepKind::IsolatedVertices)) {
        r.outcome = Outcome::Refuted;
        r.witness = *s;
        r.method = "subset_sweep";
        return r;
    }
    std::vector<int> lo(g.n(), 1), hi(g.n(), b);
    auto got = degree_search(g, lo, hi, false, 1);
    if (got.count == 0)
        throw std::logic_error("isolated-vertex sweep passed but no factor was built");
    r.outcome = Outcome::Found;
    r.factor = subgraph_from(g.n(), got.first);
    r.method = "backtracking";
    return r;
}

FactorResult ab_factor(const Graph& g, const FactorQuery& q) {
    if (q.a < 1 || q.a > q.b)
        throw std::invalid_argument("factor bounds need 1 <= a <= b");
    if (q.odd_only) {
        if (q.b % 2 == 0) throw std::invalid_argument("odd factor queries need odd b");
        if (q.a != 1) throw std::invalid_argument("odd factor queries fix a = 1");
        return odd_1b_factor(g, q.b);
    }
    if (q.a == 1 && q.b == 1) return perfect_matching(g);
    if (q.a == q.b) return f_factor(g, std::vector<int>(g.n(), q.a));
    if (q.a == 1) return one_b_factor_exists(g, q.b);
    std::vector<int> lo(g.n(), q.a), hi(g.n(), q.b);
    auto got = degree_search(g, lo, hi, false, 1);
    FactorResult r;
    r.method = "backtracking";
    if (got.count > 0) {
        r.outcome = Outcome::Found;
        r.factor = subgraph_from(g.n(), got.first);
    } else {
        r.outcome = Outcome::NotFound;
        r.exhaustive = true;
    }
    return r;
}

FractionalPmResult fractional_pm(const Graph& g) {
    const int n = g.n();
    FractionalPmResult out;
    out.result.method = "double_cover";
    // Two copies v' = v and v'' = n+v; edge uv becomes u'v'' and v'u''.
    AdjList h(2 * n);
    const auto es = g.edges();
    for (const Edge& e : es) {
        h.add_edge(e.u, n + e.v);
        h.add_edge(e.v, n + e.u);
    }
    auto match = blossom_matching(h);
    int matched = 0;
    for (int x : match)
        if (x >= 0) ++matched;
    if (matched == 2 * n) {
        FractionalMatching fm;
        Graph support(n);
        for (const Edge& e : es) {
            int twice = (match[e.u] == n + e.v) + (match[e.v] == n + e.u);
            if (twice) {
                fm.weights.push_back({e, twice / 2.0});
                support.add_edge(e.u, e.v);
            }
        }
        out.result.outcome = Outcome::Found;
        out.result.factor = support;
        out.matching = std::move(fm);
        return out;
    }
    auto s = sweep_violator(g, 1, SweepKind::IsolatedVertices);
    if (!s) throw std::logic_error("double cover refutes but the sweep finds no witness");
    out.result.outcome = Outcome::Refuted;
    out.result.witness = *s;
    return out;
}

std::vector<Graph> kelmans_sequence_to_extremal(const Graph& g) {
    const int order = g.n();
    if (order == 0 || order % 2)
        throw std::invalid_argument("extremal sequence needs positive even order");
    if (!is_connected(g))
        throw std::invalid_argument("extremal sequence needs a connected graph");
    if (!is_unique_pm(g))
        throw std::invalid_argument("extremal sequence needs a unique perfect matching");

    std::vector<Graph> seq{g};
    Graph cur = g;
    VertexSet live = g.vmask();  // S_i: vertices not yet paired off
    const int steps = order / 2 - 1;
    for (int i = 0; i < steps; ++i) {
        std::vector<int> ids;
        Graph sub = induced(cur, live, &ids);
        Matching m = max_matching(sub);
        std::vector<int> mate(sub.n(), -1);
        for (const Edge& e : m.edges) {
            mate[e.u] = e.v;
            mate[e.v] = e.u;
        }
        int bu = -1, bv = -1;
        for (const Edge& e : bridges(sub)) {
            if (mate[e.u] != e.v) continue;
            int gu = ids[e.u], gv = ids[e.v];
            if (bu < 0 || gu < bu || (gu == bu && gv < bv)) {
                bu = gu;
                bv = gv;
            }
        }
        if (bu < 0) throw std::logic_error("no cut edge inside the induced matching");

        // u keeps the larger Perron entry (smaller index on a tie).
        Spectrum sp = perron_vector(cur);
        int u = bu, v = bv;
        if (sp.perron[bv] > sp.perron[bu] + 1e-12) std::swap(u, v);

        Graph nxt = cur;
        VertexSet strip = nxt.adj(v) & live & ~(1ULL << u);
        while (strip) {
            int w = __builtin_ctzll(strip);
            strip &= strip - 1;
            nxt.remove_edge(v, w);
        }
        VertexSet fill = live & ~nxt.adj(u) & ~(1ULL << u);
        while (fill) {
            int w = __builtin_ctzll(fill);
            fill &= fill - 1;
            nxt.add_edge(u, w);
        }
        if (!is_unique_pm(nxt))
            throw std::logic_error("shift step broke the unique-matching invariant");
        seq.push_back(nxt);
        live &= ~((1ULL << u) | (1ULL << v));
        cur = nxt;
    }
    return seq;
}

}  // namespace specfactor
