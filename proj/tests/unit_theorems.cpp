#include <algorithm>
#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include <doctest.h>

#include "specfactor/canonical.hpp"
#include "specfactor/enumerate.hpp"
#include "specfactor/errors.hpp"
#include "specfactor/graph.hpp"
#include "specfactor/graph6.hpp"
#include "specfactor/report.hpp"
#include "specfactor/spectral.hpp"
#include "specfactor/verify.hpp"
#include "test_util.hpp"

using namespace specfactor;
using namespace testutil;

namespace {

bool has_note(const VerificationReport& r, const std::string& text) {
    return std::find(r.notes.begin(), r.notes.end(), text) != r.notes.end();
}

bool has_note_prefix(const VerificationReport& r, const std::string& prefix) {
    for (const std::string& n : r.notes)
        if (n.rfind(prefix, 0) == 0) return true;
    return false;
}

std::string stable_string(VerificationReport r) {
    r.wall_time_ms = 0.0;
    return report_to_string(r);
}

int edge_difference(const Graph& a, const Graph& b) {
    int diff = 0;
    for (int u = 0; u < a.n(); ++u)
        for (int v = u + 1; v < a.n(); ++v)
            if (a.has_edge(u, v) != b.has_edge(u, v)) ++diff;
    return diff;
}

EnumerationSource internal_source(int n = 0) {
    EnumerationSource src;
    src.n = n;
    return src;
}

}  // namespace

TEST_CASE("hypothesis order bound") {
    CHECK(f_bound(1, 1) == 12);
    CHECK(f_bound(1, 2) == 20);
    CHECK(f_bound(3, 1) == 20);
    CHECK(f_bound(3, 3) == 84);  // the cubic term takes over
}

TEST_CASE("hub-extremal structure test") {
    CHECK(is_hub_extremal(t_graph(20, 1, 2), 2, 15, 3));
    CHECK(is_hub_extremal(t_graph(12, 3, 1), 1, 7, 4));
    CHECK_FALSE(is_hub_extremal(t_graph(20, 1, 2), 2, 14, 4));
    Graph edited = t_graph(20, 1, 2);
    edited.add_edge(17, 18);
    CHECK_FALSE(is_hub_extremal(edited, 2, 15, 3));
    CHECK_FALSE(is_hub_extremal(complete_graph(6), 2, 3, 1));
}

TEST_CASE("sample streams are deterministic and respect side conditions") {
    Sampler cfg;
    cfg.seed = 99;
    cfg.n = 12;
    cfg.strategy = SampleStrategy::UniformEdgeProb;
    cfg.min_degree = 3;

    SampleStream a(cfg), b(cfg);
    for (int i = 0; i < 15; ++i) {
        Graph ga = a.next();
        CHECK(write_graph6(ga) == write_graph6(b.next()));
        CHECK(ga.n() == 12);
        CHECK(is_connected(ga));
        CHECK(min_degree(ga) >= 3);
    }

    Sampler fixed = cfg;
    fixed.edge_prob = 1.0;
    SampleStream full(fixed);
    CHECK(full.next() == complete_graph(12));

    Sampler near;
    near.seed = 5;
    near.n = 20;
    near.strategy = SampleStrategy::NearExtremal;
    near.base = t_graph(20, 1, 2);
    near.max_edits = 3;
    near.min_degree = 2;
    SampleStream ns(near);
    for (int i = 0; i < 10; ++i) {
        Graph g = ns.next();
        CHECK(edge_difference(g, near.base) <= 3);
        CHECK(is_connected(g));
        CHECK(min_degree(g) >= 2);
    }

    Sampler mixed = near;
    mixed.strategy = SampleStrategy::Mixed;
    SampleStream ms(mixed);
    for (int i = 0; i < 8; ++i) {
        int diff = edge_difference(ms.next(), mixed.base);
        if (i % 2 == 0)
            CHECK(diff > 6);  // uniform draw, far from the base
        else
            CHECK(diff <= 3);  // near-extremal draw
    }

    Sampler bad = cfg;
    bad.n = 70;
    CHECK_THROWS_AS(SampleStream{bad}, std::invalid_argument);
    bad.n = 0;
    CHECK_THROWS_AS(SampleStream{bad}, std::invalid_argument);
    Sampler nobase;
    nobase.n = 10;
    nobase.strategy = SampleStrategy::NearExtremal;
    CHECK_THROWS_AS(SampleStream{nobase}, std::invalid_argument);
}

TEST_CASE("unique-matching maximizer sweep (exhaustive orders)") {
    VerificationReport tiny = verify_thm_1_1(2, internal_source());
    CHECK(tiny.pass());
    CHECK(tiny.checked == 2);
    CHECK(tiny.extremal_attainers == std::vector<std::string>{"A_"});
    CHECK(tiny.threshold_rho == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(has_note(tiny, "connected unique-matching graphs: 1"));

    VerificationReport r4 = verify_thm_1_1(4, internal_source());
    CHECK(r4.pass());
    CHECK(r4.verdict() == "pass");
    CHECK(r4.checked == 64);
    CHECK(r4.extremal_attainers.size() == 12);
    CHECK(r4.ties.empty());
    CHECK(r4.counterexamples.empty());
    CHECK_FALSE(r4.sampled);
    CHECK(r4.has_threshold);
    CHECK(r4.threshold_rho ==
          doctest::Approx(spectral_radius(g_unique_pm(4)).rho).epsilon(1e-9));
    CHECK(has_note(r4, "connected unique-matching graphs: 24"));
    CHECK(has_note(r4, "attainers verified isomorphic to the half-graph construction"));
    for (const std::string& g6 : r4.extremal_attainers)
        CHECK(is_isomorphic(parse_graph6(g6), g_unique_pm(4)));
    CHECK(r4.params["two_n"] == 4);
    CHECK(r4.params["source"] == "internal");

    VerificationReport r6 = verify_thm_1_1(6, internal_source());
    CHECK(r6.pass());
    CHECK(r6.checked == 32768);
    CHECK(r6.extremal_attainers.size() == 360);
    CHECK(r6.ties.empty());

    // worker split cannot change the report
    CHECK(stable_string(verify_thm_1_1(6, internal_source(), 4)) == stable_string(r6));

    CHECK_THROWS_AS(verify_thm_1_1(3, internal_source()), std::invalid_argument);
    CHECK_THROWS_AS(verify_thm_1_1(10, internal_source()), capacity_error);
}

TEST_CASE("unique-matching sweep over a stream source") {
    const char* path = "thm11_stream_tmp.g6";
    {
        std::ofstream out(path);
        out << "A_\n";
    }
    EnumerationSource src;
    src.mode = EnumerationSource::Mode::Stream;
    src.path = path;
    VerificationReport r = verify_thm_1_1(2, src);
    CHECK(r.pass());
    CHECK(r.checked == 1);
    CHECK(r.extremal_attainers == std::vector<std::string>{"A_"});
    CHECK(r.params["source"] == std::string("stream:") + path);

    // the sweep is order-specific: off-order stream graphs are rejected
    {
        std::ofstream out(path);
        out << write_graph6(path_graph(4)) << "\n";
    }
    CHECK(testutil::throws_containing<std::invalid_argument>(
        [&] { verify_thm_1_1(2, src); }, "order disagrees"));
    std::remove(path);
}

TEST_CASE("strict-threshold factor sweep") {
    VerificationReport r = verify_thm_1_3(6, 1, 2, internal_source());
    CHECK(r.pass());
    CHECK(r.verdict() == "pass");
    CHECK(r.checked == 32768);
    CHECK(r.has_threshold);
    CHECK(r.threshold_rho == doctest::Approx(4.0).epsilon(1e-9));
    CHECK(r.extremal_attainers.size() == 6);    // K_1 + K_5 labelings
    CHECK(r.ties.size() == 15);                 // the 4-regular octahedron labelings
    CHECK(has_note(r, "benchmark graph has no factor: witness {} (subset_sweep)"));
    CHECK(has_note_prefix(r, "graphs strictly above the threshold: "));
    CHECK(has_note_prefix(r, "ties: rho inside the tie band"));
    for (const std::string& g6 : r.extremal_attainers)
        CHECK(is_isomorphic(parse_graph6(g6), h_na(6, 1)));
    for (const std::string& g6 : r.ties)
        CHECK(is_isomorphic(parse_graph6(g6), circulant(6, {1, 2})));
    CHECK(r.params["n"] == 6);
    CHECK(r.params["a"] == 1);
    CHECK(r.params["b"] == 2);

    CHECK(stable_string(verify_thm_1_3(6, 1, 2, internal_source(), 3)) == stable_string(r));

    CHECK_THROWS_AS(verify_thm_1_3(5, 2, 2, internal_source()), std::invalid_argument);
    CHECK_THROWS_AS(verify_thm_1_3(6, 2, 2, internal_source()), std::invalid_argument);
    CHECK_THROWS_AS(verify_thm_1_3(7, 1, 2, internal_source()), std::invalid_argument);
    CHECK_THROWS_AS(verify_thm_1_3(6, 0, 2, internal_source()), std::invalid_argument);
}

TEST_CASE("k-factor specialization sweep") {
    VerificationReport r = verify_cor_1_1(4, 1, internal_source());
    CHECK(r.pass());
    CHECK(r.checked == 64);
    CHECK(r.threshold_rho == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(r.extremal_attainers.size() == 4);  // K_1 + K_3 labelings
    CHECK(r.ties.size() == 3);                // C_4 labelings sit exactly on the threshold
    for (const std::string& g6 : r.ties)
        CHECK(is_isomorphic(parse_graph6(g6), cycle_graph(4)));
    CHECK(r.params["k"] == 1);

    CHECK_THROWS_AS(verify_cor_1_1(6, 2, internal_source()), std::invalid_argument);
    CHECK_THROWS_AS(verify_cor_1_1(5, 1, internal_source()), std::invalid_argument);
    CHECK_THROWS_AS(verify_cor_1_1(4, 0, internal_source()), std::invalid_argument);
}

TEST_CASE("sampled odd-factor statement") {
    Sampler cfg;
    cfg.seed = 5;
    cfg.count = 80;
    cfg.strategy = SampleStrategy::Mixed;

    VerificationReport r = verify_thm_1_2(20, 1, 2, cfg);
    CHECK(r.pass());
    CHECK(r.sampled);
    CHECK(r.samples == 80);
    CHECK(r.checked == 80);
    CHECK(r.verdict() == "no_counterexample_in_samples");
    CHECK(r.extremal_attainers == std::vector<std::string>{write_graph6(t_graph(20, 1, 2))});
    CHECK(r.has_threshold);
    CHECK(r.threshold_rho ==
          doctest::Approx(spectral_radius(t_graph(20, 1, 2)).rho).epsilon(1e-9));
    CHECK(r.notes.front() == "extremal refuted: S={0,1}, o(G-S)=4 > 1*2");
    CHECK(r.notes.back() == "sampled evidence, not an exhaustive proof");
    CHECK(has_note_prefix(r, "samples strictly above the threshold: "));
    CHECK(r.params["n"] == 20);
    CHECK(r.params["b"] == 1);
    CHECK(r.params["delta"] == 2);
    CHECK(r.params["samples"] == 80);
    CHECK(r.params["seed"] == 5);
    CHECK(r.params["strategy"] == "mixed");

    CHECK(stable_string(verify_thm_1_2(20, 1, 2, cfg)) == stable_string(r));

    CHECK_THROWS_AS(verify_thm_1_2(12, 3, 1, cfg), std::invalid_argument);
    CHECK_THROWS_AS(verify_thm_1_2(19, 1, 2, cfg), std::invalid_argument);
    CHECK_THROWS_AS(verify_thm_1_2(20, 2, 2, cfg), std::invalid_argument);
    Sampler empty_cfg = cfg;
    empty_cfg.count = 0;
    CHECK_THROWS_AS(verify_thm_1_2(20, 1, 2, empty_cfg), std::invalid_argument);
}

TEST_CASE("sampled degree-interval and fractional statements") {
    Sampler cfg;
    cfg.seed = 7;
    cfg.count = 40;
    cfg.strategy = SampleStrategy::Mixed;

    VerificationReport oneb = verify_thm_5_1(16, 2, 1, Thm51Variant::OneB, cfg);
    CHECK(oneb.pass());
    CHECK(oneb.sampled);
    CHECK(oneb.theorem == "thm5.1");
    CHECK(oneb.notes.front() == "extremal refuted: S={0}, i(G-S)=3 > 2*1");
    CHECK(oneb.params["variant"] == "one_b");
    CHECK(oneb.params["b"] == 2);

    VerificationReport frac = verify_thm_5_1(12, 0, 1, Thm51Variant::FractionalPM, cfg);
    CHECK(frac.pass());
    CHECK(frac.notes.front() == "extremal refuted: S={0}, i(G-S)=2 > 1*1");
    CHECK(frac.params["variant"] == "fractional_pm");
    CHECK_FALSE(frac.params.contains("b"));

    CHECK_THROWS_AS(verify_thm_5_1(16, 1, 1, Thm51Variant::OneB, cfg), std::invalid_argument);
    CHECK_THROWS_AS(verify_thm_5_1(15, 2, 1, Thm51Variant::OneB, cfg), std::invalid_argument);
    CHECK_THROWS_AS(verify_thm_5_1(10, 0, 1, Thm51Variant::FractionalPM, cfg),
                    std::invalid_argument);
}

TEST_CASE("exhaustive property battery") {
    VerificationReport r = verify_lemma_suite(4);
    CHECK(r.pass());
    CHECK(r.theorem == "lemmas");
    CHECK(r.checked == 75);  // every labeled graph of order 1..4
    CHECK(r.params["n_max"] == 4);
    CHECK(has_note(r, "clique redistribution tuples: 4"));
    CHECK(has_note(r, "construction identities: 6"));
    CHECK(has_note(r, "deficiency identities: 75"));
    CHECK(has_note(r, "quotient agreements: 43"));
    CHECK(has_note(r, "oracle cross-checks: 600"));
    CHECK(has_note(r, "unique-matching graphs: 28"));
    CHECK(has_note_prefix(r, "edge additions checked: "));
    CHECK(has_note_prefix(r, "shifts checked: "));
    CHECK(has_note_prefix(r, "minimum shift margin: "));
    CHECK(has_note_prefix(r, "low-degree pair bounds: "));

    CHECK(stable_string(verify_lemma_suite(4)) == stable_string(r));

    CHECK_THROWS_AS(verify_lemma_suite(0), std::invalid_argument);
    CHECK_THROWS_AS(verify_lemma_suite(8), capacity_error);
}

TEST_CASE("extremal-question exploration") {
    VerificationReport r = explore_problem_5_1(6, 1, internal_source());
    CHECK(r.pass());
    CHECK(r.theorem == "problem5.1");
    CHECK(r.checked == 32768);
    CHECK(r.has_threshold);
    CHECK(has_note(r, "argmax isomorphic to the construction: yes"));
    CHECK(has_note_prefix(r, "graphs with exactly one factor: "));
    CHECK(has_note_prefix(r, "argmax rho: "));
    CHECK(has_note_prefix(r, "block construction rho: "));
    CHECK_FALSE(r.params.contains("h_order"));
    for (const std::string& g6 : r.extremal_attainers)
        CHECK(is_isomorphic(parse_graph6(g6), g_unique_pm(6)));

    VerificationReport beyond = explore_problem_5_1(6, 4, internal_source());
    CHECK(beyond.pass());
    CHECK(beyond.params["h_order"] == 4);
    CHECK(has_note(beyond, "join candidates evaluated: 1"));
    CHECK(has_note_prefix(beyond, "candidate offsets {1}: rho "));

    CHECK_THROWS_AS(explore_problem_5_1(5, 1, internal_source()), std::invalid_argument);
    CHECK_THROWS_AS(explore_problem_5_1(6, 0, internal_source()), std::invalid_argument);
}

TEST_CASE("report serialization shape") {
    Sampler cfg;
    cfg.seed = 3;
    cfg.count = 10;
    VerificationReport r = verify_thm_1_2(20, 1, 2, cfg);
    nlohmann::ordered_json j = report_to_json(r);

    std::vector<std::string> keys;
    for (const auto& item : j.items()) keys.push_back(item.key());
    CHECK(keys == std::vector<std::string>{"theorem", "verdict", "params", "checked",
                                           "counterexamples", "extremal_attainers",
                                           "threshold_rho", "ties", "sampled", "samples",
                                           "notes", "wall_time_ms"});

    std::vector<std::string> pkeys;
    for (const auto& item : j["params"].items()) pkeys.push_back(item.key());
    CHECK(pkeys == std::vector<std::string>{"n", "b", "delta", "samples", "seed", "strategy"});

    // reals are fixed 12-decimal strings
    std::string thr = j["threshold_rho"].get<std::string>();
    CHECK(thr.size() > 13);
    CHECK(thr[thr.size() - 13] == '.');
    CHECK(j["wall_time_ms"].is_string());

    // a strict run has no "samples" key and parses back cleanly
    VerificationReport s = verify_cor_1_1(4, 1, internal_source());
    nlohmann::ordered_json js = report_to_json(s);
    CHECK_FALSE(js.contains("samples"));
    CHECK(js["sampled"] == false);
    CHECK(js["verdict"] == "pass");
    auto reparsed = nlohmann::ordered_json::parse(report_to_string(s));
    CHECK(reparsed["theorem"] == "cor1.1");

    CHECK(format_real(4.0) == "4.000000000000");
    CHECK(format_real(0.5) == "0.500000000000");

    // verdict strings cover all three outcomes
    VerificationReport v;
    CHECK(v.verdict() == "pass");
    v.sampled = true;
    CHECK(v.verdict() == "no_counterexample_in_samples");
    v.counterexamples.push_back("Bw");
    CHECK(v.verdict() == "counterexample");
    CHECK_FALSE(v.pass());
}
