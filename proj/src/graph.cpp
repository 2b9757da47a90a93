#include "specfactor/graph.hpp"

#include <algorithm>
#include <string>

namespace specfactor {

Graph empty_graph(int n) { return Graph(n); }

Graph complete_graph(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph disjoint_union(const Graph& g, const Graph& h) {
    if (g.n() + h.n() > Graph::kMaxVertices)
        throw capacity_error("union exceeds 64 vertices");
    Graph out(g.n() + h.n());
    for (const Edge& e : g.edges()) out.add_edge(e.u, e.v);
    for (const Edge& e : h.edges()) out.add_edge(e.u + g.n(), e.v + g.n());
    return out;
}

Graph join(const Graph& g, const Graph& h) {
    Graph out = disjoint_union(g, h);
    for (int u = 0; u < g.n(); ++u)
        for (int v = g.n(); v < out.n(); ++v) out.add_edge(u, v);
    return out;
}

Graph copies(int k, const Graph& g) {
    if (k < 0) throw std::invalid_argument("copy count must be nonnegative");
    if (k * g.n() > Graph::kMaxVertices)
        throw capacity_error("copies exceed 64 vertices");
    Graph out(k * g.n());
    for (int c = 0; c < k; ++c)
        for (const Edge& e : g.edges()) out.add_edge(e.u + c * g.n(), e.v + c * g.n());
    return out;
}

Graph h_na(int n, int a) {
    if (a < 1 || a > n - 1)
        throw std::invalid_argument("h_na requires 1 <= a <= n-1");
    return join(complete_graph(a - 1),
                disjoint_union(complete_graph(1), complete_graph(n - a)));
}

Graph t_graph(int n, int b, int delta) {
    if (b < 1 || b % 2 == 0)
        throw std::invalid_argument("t_graph requires odd b >= 1");
    if (delta < 1) throw std::invalid_argument("t_graph requires delta >= 1");
    if (n < (b + 1) * delta + 2)
        throw std::invalid_argument("t_graph requires n >= (b+1)*delta + 2");
    return join(complete_graph(delta),
                disjoint_union(complete_graph(n - (b + 1) * delta - 1),
                               empty_graph(b * delta + 1)));
}

Graph g_unique_pm(int two_n) {
    if (two_n < 2 || two_n % 2 != 0)
        throw std::invalid_argument("g_unique_pm requires even order >= 2");
    if (two_n > Graph::kMaxVertices) throw capacity_error("order exceeds 64");
    int n = two_n / 2;
    // u_i at index i-1, w_i at index n+i-1; W is a clique, u_i ~ w_1..w_i.
    Graph g(two_n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(n + i, n + j);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= i; ++j) g.add_edge(i - 1, n + j - 1);
    return g;
}

Graph g_unique_kfactor(int two_n, int k) {
    if (two_n < 2 || two_n % 2 != 0)
        throw std::invalid_argument("g_unique_kfactor requires even order >= 2");
    if (two_n > Graph::kMaxVertices) throw capacity_error("order exceeds 64");
    int n = two_n / 2;
    if (k < 1) throw std::invalid_argument("factor degree must be >= 1");
    if (k > n)
        throw std::invalid_argument(
            "k > n is out of this construction's range (see the explore command)");
    int s = n / k, t = n % k;

    Graph g(two_n);
    // F_1 on 2(k+t) vertices. With t = 0 the first two blocks are empty and
    // the bridge is complete bipartite, so F_1 degenerates to K_k join kK_1.
    int a11 = 0, a12 = t, a21 = 2 * t, a22 = 2 * t + k; // block offsets
    for (int i = 0; i < t; ++i)
        for (int j = i + 1; j < t; ++j) g.add_edge(a12 + i, a12 + j); // K_t
    for (int i = 0; i < t; ++i)
        for (int j = 0; j < t; ++j) g.add_edge(a11 + i, a12 + j); // H_1 join
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) g.add_edge(a22 + i, a22 + j); // K_k
    // (k-t)-regular bipartite bridge: singleton i to clique i..i+k-t-1 mod k.
    for (int i = 0; i < k; ++i)
        for (int r = 0; r < k - t; ++r) g.add_edge(a21 + i, a22 + (i + r) % k);
    for (int i = 0; i < t; ++i)
        for (int j = 0; j < k; ++j) {
            g.add_edge(a11 + i, a22 + j); // A_11 x A_22
            g.add_edge(a12 + i, a21 + j); // A_12 x A_21
            g.add_edge(a12 + i, a22 + j); // A_12 x A_22
        }

    // s-1 further blocks, each K_k join kK_1 (U_i then W_i).
    int f1_size = 2 * (k + t);
    std::vector<std::pair<int, int>> blocks; // [start, end) of each F_i
    blocks.push_back({0, f1_size});
    for (int i = 2; i <= s; ++i) {
        int base = f1_size + (i - 2) * 2 * k;
        for (int x = 0; x < k; ++x)
            for (int y = x + 1; y < k; ++y) g.add_edge(base + k + x, base + k + y);
        for (int x = 0; x < k; ++x)
            for (int y = 0; y < k; ++y) g.add_edge(base + x, base + k + y);
        blocks.push_back({base, base + 2 * k});
    }

    // W_i of every earlier block joined to all of every later block. W_1 is
    // A_12 together with A_22; W_i (i >= 2) is the clique half.
    for (int i = 0; i < s; ++i) {
        std::vector<int> wi;
        if (i == 0) {
            for (int x = 0; x < t; ++x) wi.push_back(a12 + x);
            for (int x = 0; x < k; ++x) wi.push_back(a22 + x);
        } else {
            for (int x = 0; x < k; ++x) wi.push_back(blocks[i].first + k + x);
        }
        for (int j = i + 1; j < s; ++j)
            for (int w : wi)
                for (int v = blocks[j].first; v < blocks[j].second; ++v)
                    g.add_edge(w, v);
    }
    return g;
}

Graph circulant(int n, const std::vector<int>& offsets) {
    Graph g(n);
    for (int d : offsets) {
        if (d < 1 || d > n / 2)
            throw std::invalid_argument("circulant offsets must lie in 1..n/2");
        for (int i = 0; i < n; ++i) g.add_edge(i, (i + d) % n);
    }
    return g;
}

Graph kelmans_shift(const Graph& g, int u, int v) {
    if (u == v) throw std::invalid_argument("kelmans_shift requires u != v");
    Graph out = g;
    std::uint64_t moved = g.adj(v) & ~(g.adj(u) | (1ULL << u));
    while (moved) {
        int w = __builtin_ctzll(moved);
        moved &= moved - 1;
        out.remove_edge(v, w);
        out.add_edge(u, w);
    }
    return out;
}

std::vector<VertexSet> components_within(const Graph& g, VertexSet within) {
    std::vector<VertexSet> out;
    VertexSet rem = within & g.vmask();
    while (rem) {
        VertexSet comp = rem & (~rem + 1); // lowest remaining vertex
        VertexSet frontier = comp;
        while (frontier) {
            VertexSet next = 0;
            VertexSet f = frontier;
            while (f) {
                int v = __builtin_ctzll(f);
                f &= f - 1;
                next |= g.adj(v);
            }
            next &= within & ~comp;
            comp |= next;
            frontier = next;
        }
        out.push_back(comp);
        rem &= ~comp;
    }
    return out;
}

std::vector<VertexSet> components(const Graph& g) {
    return components_within(g, g.vmask());
}

bool is_connected(const Graph& g) {
    if (g.n() <= 1) return true;
    return components(g).size() == 1;
}

int min_degree(const Graph& g) {
    if (g.n() == 0) return 0;
    int d = Graph::kMaxVertices;
    for (int v = 0; v < g.n(); ++v) d = std::min(d, g.degree(v));
    return d;
}

int odd_components(const Graph& g, VertexSet s) {
    // Allocation-free flood fill: this sits inside subset sweeps that call it
    // hundreds of thousands of times per graph.
    VertexSet rest = g.vmask() & ~s;
    int count = 0;
    while (rest) {
        VertexSet comp = rest & (~rest + 1);
        VertexSet frontier = comp;
        while (frontier) {
            VertexSet next = 0;
            VertexSet scan = frontier;
            while (scan) {
                int v = __builtin_ctzll(scan);
                scan &= scan - 1;
                next |= g.adj(v);
            }
            frontier = next & rest & ~comp;
            comp |= frontier;
        }
        rest &= ~comp;
        count += __builtin_popcountll(comp) & 1;
    }
    return count;
}

int isolated_vertices(const Graph& g, VertexSet s) {
    VertexSet keep = g.vmask() & ~s;
    int count = 0;
    VertexSet rem = keep;
    while (rem) {
        int v = __builtin_ctzll(rem);
        rem &= rem - 1;
        if ((g.adj(v) & keep) == 0) ++count;
    }
    return count;
}

namespace {
void bridge_dfs(const Graph& g, int root, std::vector<int>& tin,
                std::vector<int>& low, int& timer, std::vector<Edge>& out) {
    // iterative lowpoint DFS; parent tracked per stack frame
    struct Frame { int v, parent; std::uint64_t rest; };
    std::vector<Frame> stack;
    tin[root] = low[root] = timer++;
    stack.push_back({root, -1, g.adj(root)});
    while (!stack.empty()) {
        Frame& f = stack.back();
        if (f.rest) {
            int to = __builtin_ctzll(f.rest);
            f.rest &= f.rest - 1;
            if (to == f.parent) continue;
            if (tin[to] >= 0) {
                low[f.v] = std::min(low[f.v], tin[to]);
            } else {
                tin[to] = low[to] = timer++;
                stack.push_back({to, f.v, g.adj(to)});
            }
        } else {
            int v = f.v, parent = f.parent;
            stack.pop_back();
            if (parent >= 0) {
                low[parent] = std::min(low[parent], low[v]);
                if (low[v] > tin[parent])
                    out.push_back({std::min(parent, v), std::max(parent, v)});
            }
        }
    }
}
} // namespace

std::vector<Edge> bridges(const Graph& g) {
    std::vector<int> tin(g.n(), -1), low(g.n(), -1);
    std::vector<Edge> out;
    int timer = 0;
    for (int v = 0; v < g.n(); ++v)
        if (tin[v] < 0) bridge_dfs(g, v, tin, low, timer, out);
    std::sort(out.begin(), out.end(), [](const Edge& a, const Edge& b) {
        return a.u != b.u ? a.u < b.u : a.v < b.v;
    });
    return out;
}

Graph induced(const Graph& g, VertexSet keep, std::vector<int>* old_ids) {
    keep &= g.vmask();
    std::vector<int> ids;
    VertexSet rem = keep;
    while (rem) {
        ids.push_back(__builtin_ctzll(rem));
        rem &= rem - 1;
    }
    Graph out(static_cast<int>(ids.size()));
    for (size_t i = 0; i < ids.size(); ++i)
        for (size_t j = i + 1; j < ids.size(); ++j)
            if (g.has_edge(ids[i], ids[j])) out.add_edge((int)i, (int)j);
    if (old_ids) *old_ids = std::move(ids);
    return out;
}

} // namespace specfactor
