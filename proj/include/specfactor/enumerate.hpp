#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>

#include "specfactor/graph.hpp"

namespace specfactor {

// Labeled graph for a triangle bitmask: bit t(u,v) = v(v-1)/2 + u for u < v,
// the same column order graph6 uses.
Graph graph_from_mask(int n, std::uint64_t mask);

struct EnumerationSource {
    enum class Mode { Internal, Stream };
    Mode mode = Mode::Internal;
    int n = 0;          // Internal order; 2^(n(n-1)/2) masks, capped at n <= 7
    std::string path;   // Stream: graph6 lines, one graph per line
    bool connected_only = false;
    bool dedup = false;  // one representative per isomorphism class (n <= 10)
};

// Feeds every selected graph to fn; stop early by returning false. Returns
// the number of graphs delivered. Stream errors carry the 1-based line number.
long long enumerate_graphs(const EnumerationSource& src,
                           const std::function<bool(const Graph&)>& fn);

enum class SampleStrategy { UniformEdgeProb, NearExtremal, Mixed };

struct Sampler {
    std::uint64_t seed = 1;
    long long count = 0;
    SampleStrategy strategy = SampleStrategy::Mixed;
    int n = 0;
    double edge_prob = -1.0;  // < 0: fresh p drawn from [0.15, 0.9] per sample
    Graph base;               // NearExtremal start point
    int max_edits = 3;
    int min_degree = 0;
    bool require_connected = true;
};

// Deterministic sample sequence: one generator consumed in order, so a fixed
// seed fixes every sample. Mixed alternates uniform (even index) with
// near-extremal (odd index). Samples violating the connectivity/min-degree
// side conditions are rejected and redrawn.
class SampleStream {
public:
    explicit SampleStream(const Sampler& cfg);
    Graph next();

private:
    Graph uniform_sample();
    Graph near_extremal_sample();

    Sampler cfg_;
    std::mt19937_64 rng_;
    long long index_ = 0;
};

}  // namespace specfactor
