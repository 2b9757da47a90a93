#include "specfactor/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace specfactor {

namespace {

constexpr int kIterCap = 1'000'000;
// below this the residual of a 64-vertex double-precision multiply can stall
constexpr double kTolFloor = 2e-13;

struct CompPower {
    double rho = 0.0;
    int iterations = 0;
    double residual_inf = 0.0;
};

// Power iteration on (A + I) restricted to one connected component. The +I
// shift makes the top eigenvalue strictly dominant in modulus (bipartite
// components have -rho in their spectrum), and an all-ones start has positive
// overlap with the Perron direction. Convergence is certified on the 2-norm
// of the eigen-residual of A itself.
CompPower power_component(const Graph& g, VertexSet comp, double tol,
                          std::vector<double>* vec_out) {
    std::vector<int> verts;
    VertexSet rem = comp;
    while (rem) {
        verts.push_back(__builtin_ctzll(rem));
        rem &= rem - 1;
    }
    const int m = (int)verts.size();
    std::vector<double> x(g.n(), 0.0), y(g.n(), 0.0);
    for (int v : verts) x[v] = 1.0 / std::sqrt((double)m);

    tol = std::max(tol, kTolFloor);
    CompPower out;
    for (int iter = 1; iter <= kIterCap; ++iter) {
        for (int v : verts) {
            double acc = x[v];
            std::uint64_t nb = g.adj(v);
            while (nb) {
                int w = __builtin_ctzll(nb);
                nb &= nb - 1;
                acc += x[w];
            }
            y[v] = acc;
        }
        double nu = 0.0; // Rayleigh quotient of A+I (x is unit)
        for (int v : verts) nu += x[v] * y[v];
        double res2 = 0.0, res_inf = 0.0;
        for (int v : verts) {
            double r = y[v] - nu * x[v];
            res2 += r * r;
            res_inf = std::max(res_inf, std::fabs(r));
        }
        res2 = std::sqrt(res2);
        if (res2 <= tol) {
            out.rho = nu - 1.0;
            out.iterations = iter;
            out.residual_inf = res_inf;
            if (vec_out) {
                double norm = 0.0;
                for (int v : verts) norm += x[v] * x[v];
                norm = std::sqrt(norm);
                vec_out->assign(g.n(), 0.0);
                for (int v : verts) (*vec_out)[v] = x[v] / norm;
            }
            return out;
        }
        double ny = 0.0;
        for (int v : verts) ny += y[v] * y[v];
        ny = std::sqrt(ny);
        for (int v : verts) x[v] = y[v] / ny;
    }
    throw convergence_error("power iteration did not converge within 1e6 iterations");
}

} // namespace

Spectrum spectral_radius(const Graph& g, double tol) {
    if (g.n() < 1)
        throw std::invalid_argument("spectral radius requires at least one vertex");
    Spectrum s;
    auto comps = components(g);
    std::vector<double> vec;
    for (VertexSet comp : comps) {
        CompPower p = power_component(g, comp, tol, comps.size() == 1 ? &vec : nullptr);
        s.rho = std::max(s.rho, p.rho);
        s.iterations += p.iterations;
        s.residual = std::max(s.residual, p.residual_inf);
    }
    if (comps.size() == 1) s.perron = std::move(vec);
    return s;
}

Spectrum perron_vector(const Graph& g, double tol) {
    if (g.n() < 1)
        throw std::invalid_argument("perron vector requires at least one vertex");
    if (!is_connected(g))
        throw std::invalid_argument("perron vector requires a connected graph");
    return spectral_radius(g, tol);
}

RhoOrder compare_rho(const Graph& g, const Graph& h, double tie_tol) {
    double tol = tie_tol / 10.0;
    double ra = spectral_radius(g, tol).rho;
    double rb = spectral_radius(h, tol).rho;
    if (std::fabs(ra - rb) <= tie_tol) {
        // one retry, 100x tighter, before reporting a tie
        ra = spectral_radius(g, tol / 100.0).rho;
        rb = spectral_radius(h, tol / 100.0).rho;
    }
    double margin = std::fabs(ra - rb);
    if (margin <= tie_tol) return {Verdict::Tie, margin};
    return {ra < rb ? Verdict::Less : Verdict::Greater, margin};
}

RhoSide rho_vs_threshold(const Graph& g, double thr, double band) {
    bool near = false;
    for (VertexSet comp : components(g)) {
        std::vector<int> verts;
        VertexSet rem = comp;
        while (rem) {
            verts.push_back(__builtin_ctzll(rem));
            rem &= rem - 1;
        }
        const int m = (int)verts.size();
        if (m == 1) {
            if (0.0 > thr + band) return RhoSide::Above;
            if (!(0.0 < thr - band)) near = true;
            continue;
        }
        std::vector<double> x(g.n(), 0.0), y(g.n(), 0.0);
        for (int v : verts) x[v] = 1.0;
        bool resolved = false;
        for (int iter = 0; iter < 200000 && !resolved; ++iter) {
            double lo = 1e300, hi = -1e300;
            for (int v : verts) {
                double acc = x[v];
                std::uint64_t nb = g.adj(v);
                while (nb) {
                    int w = __builtin_ctzll(nb);
                    nb &= nb - 1;
                    acc += x[w];
                }
                y[v] = acc;
                double ratio = acc / x[v] - 1.0; // Collatz-Wielandt bound pair
                lo = std::min(lo, ratio);
                hi = std::max(hi, ratio);
            }
            if (lo > thr + band) return RhoSide::Above;
            if (hi < thr - band) resolved = true; // component certified below
            if (!resolved && hi - lo < band * 0.25) {
                near = true; // enclosure stuck inside the band
                resolved = true;
            }
            double ny = 0.0;
            for (int v : verts) ny += y[v] * y[v];
            ny = std::sqrt(ny);
            for (int v : verts) x[v] = y[v] / ny;
        }
        if (!resolved) near = true; // caller must fall back to full precision
    }
    return near ? RhoSide::Near : RhoSide::Below;
}

QuotientMatrix quotient_matrix(const Graph& g, const std::vector<VertexSet>& partition) {
    if (partition.empty()) throw std::invalid_argument("partition must be nonempty");
    VertexSet seen = 0;
    for (size_t i = 0; i < partition.size(); ++i) {
        VertexSet cell = partition[i];
        if (cell == 0)
            throw std::invalid_argument("partition cell " + std::to_string(i) + " is empty");
        if (cell & ~g.vmask())
            throw std::invalid_argument("partition cell " + std::to_string(i) +
                                        " contains vertices outside the graph");
        if (cell & seen)
            throw std::invalid_argument("partition cells overlap at cell " + std::to_string(i));
        seen |= cell;
    }
    if (seen != g.vmask())
        throw std::invalid_argument("partition does not cover every vertex");

    const int k = (int)partition.size();
    QuotientMatrix q;
    q.dim = k;
    q.partition = partition;
    q.entries.assign((size_t)k * k, 0);
    for (int r = 0; r < k; ++r) {
        int first = __builtin_ctzll(partition[r]);
        for (int c = 0; c < k; ++c)
            q.entries[r * k + c] = __builtin_popcountll(g.adj(first) & partition[c]);
        // equitability: every vertex of the cell must match the first one
        VertexSet rest = partition[r] & ~(1ULL << first);
        while (rest) {
            int v = __builtin_ctzll(rest);
            rest &= rest - 1;
            for (int c = 0; c < k; ++c) {
                int cnt = __builtin_popcountll(g.adj(v) & partition[c]);
                if (cnt != q.entries[r * k + c])
                    throw std::invalid_argument(
                        "partition not equitable: vertex " + std::to_string(v) + " has " +
                        std::to_string(cnt) + " neighbors in cell " + std::to_string(c) +
                        ", expected " + std::to_string(q.entries[r * k + c]));
            }
        }
    }
    return q;
}

double matrix_spectral_radius(const QuotientMatrix& m, double tol) {
    const int k = m.dim;
    if (k < 1) throw std::invalid_argument("matrix must have positive dimension");
    long long maxe = 0;
    for (long long e : m.entries) {
        if (e < 0) throw std::invalid_argument("matrix entries must be nonnegative");
        maxe = std::max(maxe, e);
    }
    if (maxe == 0) return 0.0;
    const double shift = (double)maxe;

    tol = std::max(tol, kTolFloor);
    std::vector<double> x(k, 1.0 / std::sqrt((double)k)), y(k);
    for (int iter = 1; iter <= kIterCap; ++iter) {
        for (int r = 0; r < k; ++r) {
            double acc = shift * x[r];
            for (int c = 0; c < k; ++c) acc += (double)m.at(r, c) * x[c];
            y[r] = acc;
        }
        double nu = 0.0;
        for (int r = 0; r < k; ++r) nu += x[r] * y[r];
        double res2 = 0.0;
        for (int r = 0; r < k; ++r) {
            double d = y[r] - nu * x[r];
            res2 += d * d;
        }
        if (std::sqrt(res2) <= tol * std::max(1.0, nu)) return nu - shift;
        double ny = 0.0;
        for (int r = 0; r < k; ++r) ny += y[r] * y[r];
        ny = std::sqrt(ny);
        for (int r = 0; r < k; ++r) x[r] = y[r] / ny;
    }
    throw convergence_error("matrix power iteration did not converge within 1e6 iterations");
}

std::vector<long long> char_poly(const QuotientMatrix& m) {
    const int k = m.dim;
    if (k < 1 || k > 8)
        throw capacity_error("exact characteristic polynomial capped at dimension 8");
    using i128 = __int128;
    std::vector<i128> a((size_t)k * k), mk((size_t)k * k);
    for (int i = 0; i < k * k; ++i) a[i] = mk[i] = m.entries[i];

    std::vector<long long> coeff(k + 1);
    coeff[0] = 1;
    i128 ck = 0;
    for (int step = 1; step <= k; ++step) {
        if (step > 1) {
            // M_k = A (M_{k-1} + c_{k-1} I)
            std::vector<i128> shifted = mk;
            for (int i = 0; i < k; ++i) shifted[i * k + i] += ck;
            for (int r = 0; r < k; ++r)
                for (int c = 0; c < k; ++c) {
                    i128 acc = 0;
                    for (int j = 0; j < k; ++j) acc += a[r * k + j] * shifted[j * k + c];
                    mk[r * k + c] = acc;
                }
        }
        i128 tr = 0;
        for (int i = 0; i < k; ++i) tr += mk[i * k + i];
        ck = -tr / step; // exact by Faddeev-LeVerrier
        if (ck > i128(9'000'000'000'000'000'000LL) || ck < -i128(9'000'000'000'000'000'000LL))
            throw capacity_error("characteristic polynomial coefficient exceeds 64-bit range");
        coeff[step] = (long long)ck;
    }
    return coeff;
}

double f_poly(int n, int t, double lam) {
    return lam * lam * lam - (double)(n - 4) * lam * lam - (double)(n + 2 * t - 3) * lam +
           (double)(2 * t * n - 2 * t * t - 6 * t);
}

} // namespace specfactor
