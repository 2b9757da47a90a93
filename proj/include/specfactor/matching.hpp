#pragma once

#include <vector>

#include "specfactor/graph.hpp"

namespace specfactor {

// Plain adjacency-list graph for matching internals. Unlike Graph this has no
// 64-vertex cap: factor gadget expansions need up to 512 nodes.
struct AdjList {
    int n = 0;
    std::vector<std::vector<int>> adj;

    explicit AdjList(int nodes = 0) : n(nodes), adj(nodes) {}
    void add_edge(int u, int v) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
};

// Maximum matching by blossom contraction (alternating BFS forest with
// base/contract bookkeeping, O(V^3) overall). Returns match[v] = partner
// or -1. Greedy-initialized; deterministic.
std::vector<int> blossom_matching(const AdjList& g);

struct Matching {
    std::vector<Edge> edges;
    int size() const { return (int)edges.size(); }
};

Matching max_matching(const Graph& g);

// Exponential reference oracle for cross-checks (first unmatched vertex:
// leave exposed or match to each unmatched neighbor).
int brute_force_matching_size(const Graph& g);

// For a graph with no perfect matching: the canonical Tutte-condition
// violator derived from the Gallai-Edmonds decomposition. D is the set of
// vertices missed by some maximum matching (detected by nu(G - v) = nu(G)),
// the witness is A = N(D) \ D; then o(G - A) - |A| equals the deficiency.
VertexSet tutte_witness(const Graph& g);

} // namespace specfactor
