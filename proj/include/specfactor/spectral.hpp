#pragma once

#include <vector>

#include "specfactor/graph.hpp"

namespace specfactor {

struct Spectrum {
    double rho = 0.0;
    std::vector<double> perron; // unit positive eigenvector; empty when absent
    int iterations = 0;
    double residual = 0.0; // final max-norm of A x - rho x
};

// Largest adjacency eigenvalue by power iteration on A + I (the shift keeps
// the dominant eigenvalue strictly separated even on bipartite graphs),
// all-ones start, Rayleigh estimate, residual-certified convergence.
// Disconnected graphs: max over components, perron left empty.
// Throws convergence_error at the iteration cap; never a partial value.
Spectrum spectral_radius(const Graph& g, double tol = 1e-10);

// As above but requires a connected graph and always carries the
// strictly positive unit eigenvector.
Spectrum perron_vector(const Graph& g, double tol = 1e-10);

enum class Verdict { Less, Tie, Greater };

struct RhoOrder {
    Verdict verdict;
    double margin; // |rho(G) - rho(H)|
};

// Decision procedure for spectral-threshold hypotheses. Radii are computed at
// tie_tol/10; a Tie triggers one automatic retry 100x tighter before being
// reported, so near-ties are surfaced only when genuinely unresolved.
RhoOrder compare_rho(const Graph& g, const Graph& h, double tie_tol = 1e-9);

// One-sided threshold test with certified enclosure (min/max Rayleigh ratio
// bounds), cheap enough for enumeration sweeps: answers whether rho(G) is
// below thr - band, above thr + band, or within the band.
enum class RhoSide { Below, Near, Above };
RhoSide rho_vs_threshold(const Graph& g, double thr, double band);

struct QuotientMatrix {
    int dim = 0;
    std::vector<long long> entries; // row-major, dim x dim
    std::vector<VertexSet> partition;
    long long at(int r, int c) const { return entries[r * dim + c]; }
};

// Builds the quotient matrix of an equitable partition, verifying
// equitability cell by cell; a violation names the vertex and cell.
QuotientMatrix quotient_matrix(const Graph& g, const std::vector<VertexSet>& partition);

// Largest eigenvalue of a small nonnegative (possibly non-symmetric) matrix:
// power iteration shifted by +cI, c = max entry.
double matrix_spectral_radius(const QuotientMatrix& m, double tol = 1e-10);

// Exact integer characteristic polynomial (monic, highest degree first) by
// Faddeev-LeVerrier over 128-bit intermediates; dimension capped at 8.
std::vector<long long> char_poly(const QuotientMatrix& m);

// The cubic lambda^3 - (n-4)lambda^2 - (n+2t-3)lambda + 2tn - 2t^2 - 6t,
// the characteristic polynomial of the 3-cell quotient of
// K_t join (2K_1 union K_{n-t-2}).
double f_poly(int n, int t, double lam);

} // namespace specfactor
