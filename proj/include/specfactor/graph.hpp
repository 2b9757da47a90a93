#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "specfactor/errors.hpp"

namespace specfactor {

// Vertex subset as a bitset; bit i <=> vertex i. Guaranteed to fit because
// graphs are capped at 64 vertices.
using VertexSet = std::uint64_t;

struct Edge {
    int u, v; // u < v
    friend bool operator==(const Edge&, const Edge&) = default;
};

// Undirected simple graph on at most 64 vertices, adjacency as per-vertex
// bitsets. Values are cheap to copy and treated as immutable once built:
// constructors and the *_graph/join/union factories are the only writers.
class Graph {
public:
    static constexpr int kMaxVertices = 64;

    Graph() : n_(0) {}
    explicit Graph(int n) : n_(n) {
        if (n < 0 || n > kMaxVertices)
            throw capacity_error("graph order must be between 0 and 64");
        for (int v = 0; v < n_; ++v) adj_[v] = 0;
    }

    int n() const { return n_; }
    std::uint64_t adj(int v) const { return adj_[v]; }
    VertexSet vmask() const { return n_ == 64 ? ~0ULL : ((1ULL << n_) - 1); }

    bool has_edge(int u, int v) const { return (adj_[u] >> v) & 1ULL; }

    void add_edge(int u, int v) {
        adj_[u] |= 1ULL << v;
        adj_[v] |= 1ULL << u;
    }
    void remove_edge(int u, int v) {
        adj_[u] &= ~(1ULL << v);
        adj_[v] &= ~(1ULL << u);
    }

    int degree(int v) const { return __builtin_popcountll(adj_[v]); }

    int edge_count() const {
        int twice = 0;
        for (int v = 0; v < n_; ++v) twice += degree(v);
        return twice / 2;
    }

    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        for (int u = 0; u < n_; ++u) {
            std::uint64_t higher = adj_[u] >> (u + 1);
            while (higher) {
                int v = u + 1 + __builtin_ctzll(higher);
                out.push_back({u, v});
                higher &= higher - 1;
            }
        }
        return out;
    }

    friend bool operator==(const Graph& a, const Graph& b) {
        if (a.n_ != b.n_) return false;
        for (int v = 0; v < a.n_; ++v)
            if (a.adj_[v] != b.adj_[v]) return false;
        return true;
    }

private:
    int n_;
    std::array<std::uint64_t, 64> adj_; // only [0, n_) initialized
};

// ---- constructors (join/union algebra and the extremal families) ----

Graph empty_graph(int n);
Graph complete_graph(int n);
Graph disjoint_union(const Graph& g, const Graph& h);
Graph join(const Graph& g, const Graph& h);
Graph copies(int k, const Graph& g);

// K_{a-1} joined to (K_1 union K_{n-a}); requires 1 <= a <= n-1.
Graph h_na(int n, int a);

// K_delta joined to (K_{n-(b+1)delta-1} union (b*delta+1) K_1);
// requires b odd >= 1, delta >= 1, n >= (b+1)*delta + 2.
Graph t_graph(int n, int b, int delta);

// Half graph over a clique: independent set u_1..u_n, clique w_1..w_n,
// u_i adjacent to w_1..w_i. Unique perfect matching {u_i w_i}, n^2 edges.
Graph g_unique_pm(int two_n);

// The order-2n graph with a unique k-factor assembled from the block F_1
// (built from K_t joined to tK_1 and a (k-t)-regular bipartite bridge onto
// kK_1 union K_k) followed by s-1 copies of K_k joined to kK_1, with each
// clique block W_i joined to every later block. Requires k <= n.
Graph g_unique_kfactor(int two_n, int k);

// Vertex i adjacent to i +- d (mod n) for each offset d; offsets must lie in
// {1..n/2}.
Graph circulant(int n, const std::vector<int>& offsets);

// Move every neighbor of v outside N(u) union {u} from v to u. Preserves the
// total edge count.
Graph kelmans_shift(const Graph& g, int u, int v);

// ---- structural queries ----

// Connected components inside `within` (vertices outside it are ignored).
std::vector<VertexSet> components_within(const Graph& g, VertexSet within);
std::vector<VertexSet> components(const Graph& g);
bool is_connected(const Graph& g);
int min_degree(const Graph& g);

// Number of odd-order components of G - S.
int odd_components(const Graph& g, VertexSet s);
// Number of isolated vertices of G - S.
int isolated_vertices(const Graph& g, VertexSet s);

// All cut edges, by lowpoint traversal.
std::vector<Edge> bridges(const Graph& g);

// Subgraph induced by `keep`, re-indexed by increasing vertex id;
// old_ids[new] = old when requested.
Graph induced(const Graph& g, VertexSet keep, std::vector<int>* old_ids = nullptr);

} // namespace specfactor
