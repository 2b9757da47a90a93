#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "specfactor/graph.hpp"
#include "specfactor/matching.hpp"

namespace specfactor {

enum class Outcome { Found, Refuted, NotFound };

struct FactorQuery {
    int a = 1;
    int b = 1;
    bool odd_only = false;
};

struct FactorResult {
    Outcome outcome = Outcome::NotFound;
    Graph factor;             // spanning subgraph, valid when Found
    VertexSet witness = 0;    // violating vertex set, valid when Refuted
    bool exhaustive = false;  // NotFound: whether the search space was fully explored
    std::string method;
};

struct FractionalMatching {
    std::vector<std::pair<Edge, double>> weights;  // positive-weight edges only
};

struct FractionalPmResult {
    FactorResult result;
    std::optional<FractionalMatching> matching;  // present iff Found
};

enum class SweepKind { OddComponents, IsolatedVertices };

// First S with count(G-S) > b|S|. Nonempty sets are scanned by size then by
// ascending bitmask; the empty set is reported only when nothing else
// violates (it can be the sole violator, e.g. two disjoint triangles under
// the odd-component condition). Sizes above (n-1)/(b+1) cannot violate --
// there are not enough leftover vertices -- so the scan stops there.
std::optional<VertexSet> sweep_violator(const Graph& g, int b, SweepKind kind);

// Perfect matching via blossom; refutations carry the Gallai-Edmonds set A
// with o(G-A) > |A|.
FactorResult perfect_matching(const Graph& g);

// Exactly one perfect matching? Finds one, then looks for an alternating
// cycle (arcs x -> mate(y) per non-matching edge xy); unique iff acyclic.
bool is_unique_pm(const Graph& g);

// Backtracking count, capped. Branches on an unmatched vertex with fewest
// unmatched neighbours.
long long count_perfect_matchings(const Graph& g, long long cap);

// Exact f-factor via the gadget reduction: vertex v becomes d(v) edge-end
// nodes joined completely to d(v)-f(v) internal nodes; each edge links its
// two end nodes; an f-factor exists iff the gadget has a perfect matching.
// f(v) > d(v) refutes immediately with witness {v}. Gadgets above 512 nodes
// are refused with a capacity error.
FactorResult f_factor(const Graph& g, const std::vector<int>& f);

// Capped backtracking count of spanning subgraphs with degree exactly f(v).
long long count_f_factors(const Graph& g, const std::vector<int>& f, long long cap);

// Number of [a,b]-factors the backtracking oracle finds before hitting cap
// (with odd_only restricting to all-odd degree sequences). This is the raw
// search leg, independent of any sweep shortcut, so cross-checks can compare
// the two.
long long count_ab_factors(const Graph& g, const FactorQuery& q, long long cap);

// Odd [1,b]-factor (b odd): decided by the odd-component sweep, with the
// factor itself built by backtracking degree assignment. Needs n <= 24.
FactorResult odd_1b_factor(const Graph& g, int b);

// [1,b]-factor for b >= 2: isolated-vertex sweep decision plus backtracking
// construction. Needs n <= 24.
FactorResult one_b_factor_exists(const Graph& g, int b);

// Dispatch: odd queries, a=b (exact), a=1 (isolated-vertex condition),
// general a<b backtracking with capacity pruning.
FactorResult ab_factor(const Graph& g, const FactorQuery& q);

// Fractional perfect matching: perfect matching in the bipartite double
// cover; halved matched pairs give half-integral weights. Refutation
// witnesses (isolated-vertex condition) come from the sweep, so n <= 24 is
// required in the no-matching case.
FractionalPmResult fractional_pm(const Graph& g);

// The extremal sequence G_0..G_{n-1} driven by cut edges of the unique
// perfect matching: at step i take a cut edge u_i v_i of G_i[S_i] inside its
// matching (S_i = vertices not yet processed), orient so the Perron entry of
// u_i dominates, strip v_i's other S_i-edges and complete u_i onto S_i. The
// last graph is the half-graph-over-clique maximizer.
std::vector<Graph> kelmans_sequence_to_extremal(const Graph& g);

}  // namespace specfactor
