#include "specfactor/enumerate.hpp"

#include <fstream>
#include <stdexcept>
#include <unordered_set>

#include "specfactor/canonical.hpp"
#include "specfactor/graph6.hpp"

namespace specfactor {

Graph graph_from_mask(int n, std::uint64_t mask) {
    Graph g(n);
    int idx = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u, ++idx)
            if ((mask >> idx) & 1) g.add_edge(u, v);
    return g;
}

long long enumerate_graphs(const EnumerationSource& src,
                           const std::function<bool(const Graph&)>& fn) {
    long long delivered = 0;
    std::unordered_set<std::string> seen;
    auto emit = [&](const Graph& g) {
        if (src.connected_only && !is_connected(g)) return true;
        if (src.dedup && !seen.insert(canonical_code(g)).second) return true;
        ++delivered;
        return fn(g);
    };

    if (src.mode == EnumerationSource::Mode::Internal) {
        if (src.n < 0 || src.n > 7)
            throw capacity_error("internal enumeration is capped at n <= 7");
        const int pairs = src.n * (src.n - 1) / 2;
        const std::uint64_t total = 1ULL << pairs;
        for (std::uint64_t mask = 0; mask < total; ++mask)
            if (!emit(graph_from_mask(src.n, mask))) break;
        return delivered;
    }

    std::ifstream in(src.path);
    if (!in) throw std::invalid_argument("cannot open graph6 stream: " + src.path);
    std::string line;
    long long line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        Graph g;
        try {
            g = parse_graph6(line);
        } catch (const capacity_error&) {
            throw;
        } catch (const std::exception& e) {
            throw std::invalid_argument("line " + std::to_string(line_no) + ": " + e.what());
        }
        if (!emit(g)) break;
    }
    return delivered;
}

namespace {

std::uint64_t rng_below(std::mt19937_64& rng, std::uint64_t bound) {
    // rejection kills modulo bias; identical across platforms
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
        std::uint64_t r = rng();
        if (r >= threshold) return r % bound;
    }
}

double rng_unit(std::mt19937_64& rng) { return (rng() >> 11) * 0x1.0p-53; }

}  // namespace

SampleStream::SampleStream(const Sampler& cfg) : cfg_(cfg), rng_(cfg.seed) {
    if (cfg_.n < 1 || cfg_.n > Graph::kMaxVertices)
        throw std::invalid_argument("sample order out of range");
    if (cfg_.strategy != SampleStrategy::UniformEdgeProb && cfg_.base.n() != cfg_.n)
        throw std::invalid_argument("near-extremal sampling needs a base graph of the right order");
}

Graph SampleStream::uniform_sample() {
    for (int attempt = 0; attempt < 100000; ++attempt) {
        double p = cfg_.edge_prob >= 0 ? cfg_.edge_prob : 0.15 + 0.75 * rng_unit(rng_);
        Graph g(cfg_.n);
        for (int v = 1; v < cfg_.n; ++v)
            for (int u = 0; u < v; ++u)
                if (rng_unit(rng_) < p) g.add_edge(u, v);
        if (min_degree(g) < cfg_.min_degree) continue;
        if (cfg_.require_connected && !is_connected(g)) continue;
        return g;
    }
    throw std::runtime_error("uniform sampling rejected 100000 candidates in a row");
}

Graph SampleStream::near_extremal_sample() {
    for (int attempt = 0; attempt < 100000; ++attempt) {
        Graph g = cfg_.base;
        const int edits = 1 + (int)rng_below(rng_, (std::uint64_t)cfg_.max_edits);
        for (int e = 0; e < edits; ++e) {
            int u = (int)rng_below(rng_, (std::uint64_t)cfg_.n);
            int v = (int)rng_below(rng_, (std::uint64_t)(cfg_.n - 1));
            if (v >= u) ++v;
            if (g.has_edge(u, v))
                g.remove_edge(u, v);
            else
                g.add_edge(u, v);
        }
        if (min_degree(g) < cfg_.min_degree) continue;
        if (cfg_.require_connected && !is_connected(g)) continue;
        return g;
    }
    throw std::runtime_error("near-extremal sampling rejected 100000 candidates in a row");
}

Graph SampleStream::next() {
    const long long i = index_++;
    switch (cfg_.strategy) {
        case SampleStrategy::UniformEdgeProb:
            return uniform_sample();
        case SampleStrategy::NearExtremal:
            return near_extremal_sample();
        case SampleStrategy::Mixed:
        default:
            return i % 2 == 0 ? uniform_sample() : near_extremal_sample();
    }
}

}  // namespace specfactor
