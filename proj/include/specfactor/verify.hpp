#pragma once

#include "specfactor/enumerate.hpp"
#include "specfactor/report.hpp"

namespace specfactor {

// Exhaustive sweep over unique-perfect-matching graphs of even order two_n,
// asserting rho(G) <= rho(g_unique_pm(two_n)) with equality only at graphs
// isomorphic to the extremal construction. Internal enumeration supports
// two_n <= 8 (the 8-vertex sweep walks 2^28 masks); jobs > 1 splits the mask
// space into contiguous ranges merged in order, so output is independent of
// the worker count.
VerificationReport verify_thm_1_1(int two_n, const EnumerationSource& src, int jobs = 1);

// Exhaustive: every enumerated graph with rho(G) > rho(h_na(n,a)) must have
// an [a,b]-factor. Requires a*n even, n >= 3a+b-1, b >= a >= 1.
VerificationReport verify_thm_1_3(int n, int a, int b, const EnumerationSource& src, int jobs = 1);

// Exhaustive k-factor specialization: rho(G) > rho(h_na(n,k)) forces a
// k-factor (checked through the matching gadget). Requires k*n even, n >= 4k-1.
VerificationReport verify_cor_1_1(int n, int k, const EnumerationSource& src, int jobs = 1);

// Sampled: connected even-order graphs with min degree >= delta and
// rho(G) >= rho(t_graph(n,b,delta)) must contain an odd [1,b]-factor unless
// isomorphic to the extremal graph. Also deterministically re-derives the
// extremal graph's refutation witness. Requires b odd, n even, n >= F(b,delta)
// with F(b,delta) = max{4(b+1)delta+4, b*delta^3+delta}.
VerificationReport verify_thm_1_2(int n, int b, int delta, const Sampler& sampler);

enum class Thm51Variant {
    OneB,          // [1,b]-factor conclusion, b >= 2, n >= 4(b+1)delta+4
    FractionalPM,  // fractional perfect matching conclusion, n >= 8delta+4
};

VerificationReport verify_thm_5_1(int n, int b, int delta, Thm51Variant variant,
                                  const Sampler& sampler);

// Exhaustive property battery over all labeled graphs of order <= n_max
// (n_max <= 7): spectral bounds envelope, edge monotonicity, shift
// monotonicity, equitable-quotient agreement, clique-redistribution
// inequalities, the degree-t nonadjacent-pair bound, unique-matching edge
// bounds and bridge structure, the Tutte-Berge identity, and the
// cross-validation of every factor oracle pair.
VerificationReport verify_lemma_suite(int n_max);

// Evidence sweep for the unique-k-factor extremal question: reports the
// argmax-rho graphs among enumerated graphs with exactly one k-factor and
// compares against the block construction (k <= n) or against circulant join
// candidates K_{2n-k} v H with H a 2(k-n)-regular circulant of order h_order
// (k > n; h_order defaults to k).
VerificationReport explore_problem_5_1(int two_n, int k, const EnumerationSource& src,
                                       int h_order = -1);

// max{4(b+1)delta+4, b*delta^3+delta}: the order threshold for the odd-factor
// theorem's hypothesis.
int f_bound(int b, int delta);

// Structural test for K_delta v (K_clique u singles*K_1) without going
// through canonical codes, so it works at any order: delta dominating
// vertices, one clique, and `singles` vertices seeing only the hub.
bool is_hub_extremal(const Graph& g, int delta, int clique, int singles);

}  // namespace specfactor
