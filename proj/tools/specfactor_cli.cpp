#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "specfactor/enumerate.hpp"
#include "specfactor/errors.hpp"
#include "specfactor/factors.hpp"
#include "specfactor/graph.hpp"
#include "specfactor/graph6.hpp"
#include "specfactor/report.hpp"
#include "specfactor/spectral.hpp"
#include "specfactor/verify.hpp"

using namespace specfactor;
using nlohmann::ordered_json;

namespace {

std::string trimmed(std::string s) {
    while (!s.empty() && (s.back() == '\r' || s.back() == '\n' || s.back() == ' ' ||
                          s.back() == '\t'))
        s.pop_back();
    size_t at = 0;
    while (at < s.size() && (s[at] == ' ' || s[at] == '\t')) ++at;
    return s.substr(at);
}

// Positional graph6 argument, falling back to the first nonempty stdin line.
Graph graph_from_arg(const std::string& arg) {
    std::string line = trimmed(arg);
    if (line.empty()) {
        std::string buf;
        while (std::getline(std::cin, buf)) {
            buf = trimmed(buf);
            if (!buf.empty()) {
                line = buf;
                break;
            }
        }
        if (line.empty()) throw std::invalid_argument("no graph6 input given");
    }
    return parse_graph6(line);
}

EnumerationSource source_from(const std::string& name, int order) {
    EnumerationSource src;
    if (name.empty() || name == "internal") {
        src.mode = EnumerationSource::Mode::Internal;
        src.n = order;
    } else {
        src.mode = EnumerationSource::Mode::Stream;
        src.path = name;
    }
    return src;
}

SampleStrategy parse_strategy(const std::string& s) {
    if (s == "uniform") return SampleStrategy::UniformEdgeProb;
    if (s == "near-extremal" || s == "near_extremal") return SampleStrategy::NearExtremal;
    if (s == "mixed") return SampleStrategy::Mixed;
    throw std::invalid_argument("unknown strategy " + s +
                                " (choose uniform, near-extremal, or mixed)");
}

const char* outcome_name(Outcome o) {
    switch (o) {
        case Outcome::Found: return "Found";
        case Outcome::Refuted: return "Refuted";
        default: return "NotFound";
    }
}

ordered_json vertex_list(VertexSet s) {
    auto out = ordered_json::array();
    while (s) {
        out.push_back(__builtin_ctzll(s));
        s &= s - 1;
    }
    return out;
}

void emit(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

// Exit code contract: 0 pass, 1 counterexample, 5 sampled-no-counterexample.
int finish_report(const VerificationReport& rep, const std::string& out_path) {
    const std::string text = report_to_string(rep);
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path);
        if (!out) throw std::invalid_argument("cannot open output file " + out_path);
        out << text;
        std::cerr << "report written to " << out_path << "\n";
    }
    if (!rep.pass()) return 1;
    return rep.sampled ? 5 : 0;
}

void for_each_line(const std::string& path,
                   const std::function<bool(long long, const std::string&)>& fn) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    std::string line;
    long long no = 0;
    while (std::getline(in, line)) {
        ++no;
        const std::string body = trimmed(line);
        if (body.empty()) continue;
        if (!fn(no, body)) break;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"spectral conditions and factor existence toolkit"};
    app.require_subcommand(1);
    std::function<int()> action;

    // ---- construct ----
    std::string family;
    std::vector<long long> cparams;
    bool cstats = false, cjson = false;
    auto* con = app.add_subcommand("construct", "emit a named construction as graph6");
    con->add_option("family", family,
                    "h_na | t_graph | g_unique_pm | g_unique_kfactor | complete | circulant")
        ->required();
    con->add_option("params", cparams, "integer parameters for the family");
    con->add_flag("--stats", cstats, "also print order/size/min-degree/connectivity as JSON");
    con->add_flag("--json", cjson, "JSON-only output");
    con->callback([&] {
        action = [&] {
            auto need = [&](size_t k, const char* what) {
                if (cparams.size() != k)
                    throw std::invalid_argument(family + " takes parameters: " +
                                                std::string(what));
            };
            Graph g;
            if (family == "h_na") {
                need(2, "n a");
                g = h_na((int)cparams[0], (int)cparams[1]);
            } else if (family == "t_graph") {
                need(3, "n b delta");
                g = t_graph((int)cparams[0], (int)cparams[1], (int)cparams[2]);
            } else if (family == "g_unique_pm") {
                need(1, "two_n");
                g = g_unique_pm((int)cparams[0]);
            } else if (family == "g_unique_kfactor") {
                need(2, "two_n k");
                g = g_unique_kfactor((int)cparams[0], (int)cparams[1]);
            } else if (family == "complete") {
                need(1, "n");
                g = complete_graph((int)cparams[0]);
            } else if (family == "circulant") {
                if (cparams.size() < 2)
                    throw std::invalid_argument("circulant takes parameters: n offsets...");
                std::vector<int> offs;
                for (size_t i = 1; i < cparams.size(); ++i) offs.push_back((int)cparams[i]);
                g = circulant((int)cparams[0], offs);
            } else {
                throw std::invalid_argument("unknown family " + family);
            }
            const std::string g6 = write_graph6(g);
            ordered_json stats;
            if (cstats || cjson) {
                stats["order"] = g.n();
                stats["size"] = g.edge_count();
                stats["min_degree"] = min_degree(g);
                stats["connected"] = is_connected(g);
            }
            if (cjson) {
                ordered_json j;
                j["graph6"] = g6;
                for (auto& [key, value] : stats.items()) j[key] = value;
                emit(j);
            } else {
                std::cout << g6 << "\n";
                if (cstats) emit(stats);
            }
            return 0;
        };
    });

    // ---- rho ----
    std::string rgraph, rcompare;
    double rtol = 1e-10;
    auto* rh = app.add_subcommand("rho", "spectral radius of a graph6 input");
    rh->add_option("graph", rgraph, "graph6 string (reads stdin when omitted)");
    rh->add_option("--tol", rtol, "residual tolerance");
    rh->add_option("--compare", rcompare, "second graph6: adds a verdict and margin");
    rh->callback([&] {
        action = [&] {
            const Graph g = graph_from_arg(rgraph);
            const Spectrum sp = spectral_radius(g, rtol);
            ordered_json j;
            j["rho"] = format_real(sp.rho);
            j["residual"] = format_real(sp.residual);
            j["iterations"] = sp.iterations;
            if (!rcompare.empty()) {
                const Graph h = parse_graph6(trimmed(rcompare));
                const RhoOrder ord = compare_rho(g, h);
                j["verdict"] = ord.verdict == Verdict::Less      ? "Less"
                               : ord.verdict == Verdict::Greater ? "Greater"
                                                                 : "Tie";
                j["margin"] = format_real(ord.margin);
            }
            emit(j);
            return 0;
        };
    });

    // ---- factor ----
    std::string fgraph;
    int fa = 1, fb = 1;
    bool fodd = false, ffrac = false;
    auto* fac = app.add_subcommand("factor", "decide factor existence for a graph6 input");
    fac->add_option("graph", fgraph, "graph6 string (reads stdin when omitted)");
    fac->add_option("--a", fa, "degree lower bound");
    fac->add_option("--b", fb, "degree upper bound");
    fac->add_flag("--odd", fodd, "require all degrees odd (needs a=1, b odd)");
    fac->add_flag("--fractional", ffrac, "fractional perfect matching instead of [a,b]");
    fac->callback([&] {
        action = [&] {
            const Graph g = graph_from_arg(fgraph);
            ordered_json j;
            if (ffrac) {
                const FractionalPmResult fr = fractional_pm(g);
                j["outcome"] = outcome_name(fr.result.outcome);
                if (fr.matching) {
                    auto weights = ordered_json::array();
                    for (const auto& [edge, w] : fr.matching->weights) {
                        ordered_json entry;
                        entry["u"] = edge.u;
                        entry["v"] = edge.v;
                        entry["weight"] = format_real(w);
                        weights.push_back(entry);
                    }
                    j["weights"] = weights;
                } else if (fr.result.outcome == Outcome::Refuted) {
                    j["witness"] = vertex_list(fr.result.witness);
                }
                j["method"] = fr.result.method;
            } else {
                const FactorResult res = ab_factor(g, FactorQuery{fa, fb, fodd});
                j["outcome"] = outcome_name(res.outcome);
                if (res.outcome == Outcome::Found) {
                    auto edges = ordered_json::array();
                    for (const Edge& e : res.factor.edges())
                        edges.push_back(ordered_json::array({e.u, e.v}));
                    j["factor_edges"] = edges;
                } else if (res.outcome == Outcome::Refuted) {
                    j["witness"] = vertex_list(res.witness);
                } else {
                    j["exhaustive"] = res.exhaustive;
                }
                j["method"] = res.method;
            }
            emit(j);
            return 0;
        };
    });

    // ---- verify ----
    std::string vsource = "internal", vout, vstrategy = "mixed", vvariant;
    int vjobs = 1;
    long long vsamples = 10000;
    std::uint64_t vseed = 1;
    int p_two_n = 0, p_n = 0, p_a = 1, p_b = 1, p_k = 1, p_delta = 1, p_nmax = 6;
    auto* ver = app.add_subcommand("verify", "run a theorem verification and print the report");
    ver->require_subcommand(1);
    auto add_exhaustive_opts = [&](CLI::App* s) {
        s->add_option("--source", vsource, "internal or a graph6 stream path");
        s->add_option("--jobs", vjobs, "workers for internal mask sweeps");
        s->add_option("--out", vout, "write the JSON report here instead of stdout");
    };
    auto add_sampled_opts = [&](CLI::App* s) {
        s->add_option("--samples", vsamples, "number of seeded samples");
        s->add_option("--seed", vseed, "RNG seed");
        s->add_option("--strategy", vstrategy, "uniform | near-extremal | mixed");
        s->add_option("--out", vout, "write the JSON report here instead of stdout");
    };

    auto* v11 = ver->add_subcommand("thm1.1", "unique-matching spectral maximality sweep");
    v11->add_option("--two-n", p_two_n, "even order")->required();
    add_exhaustive_opts(v11);
    v11->callback([&] {
        action = [&] {
            return finish_report(
                verify_thm_1_1(p_two_n, source_from(vsource, p_two_n), vjobs), vout);
        };
    });

    auto* v13 = ver->add_subcommand("thm1.3", "[a,b]-factor threshold sweep");
    v13->add_option("--n", p_n, "order")->required();
    v13->add_option("--a", p_a, "degree lower bound")->required();
    v13->add_option("--b", p_b, "degree upper bound")->required();
    add_exhaustive_opts(v13);
    v13->callback([&] {
        action = [&] {
            return finish_report(verify_thm_1_3(p_n, p_a, p_b, source_from(vsource, p_n), vjobs),
                                 vout);
        };
    });

    auto* vc1 = ver->add_subcommand("cor1.1", "k-factor threshold sweep");
    vc1->add_option("--n", p_n, "order")->required();
    vc1->add_option("--k", p_k, "factor degree")->required();
    add_exhaustive_opts(vc1);
    vc1->callback([&] {
        action = [&] {
            return finish_report(verify_cor_1_1(p_n, p_k, source_from(vsource, p_n), vjobs),
                                 vout);
        };
    });

    auto* v12 = ver->add_subcommand("thm1.2", "odd-factor threshold, sampled");
    v12->add_option("--n", p_n, "even order")->required();
    v12->add_option("--b", p_b, "odd degree bound")->required();
    v12->add_option("--delta", p_delta, "minimum degree")->required();
    add_sampled_opts(v12);
    v12->callback([&] {
        action = [&] {
            Sampler smp;
            smp.count = vsamples;
            smp.seed = vseed;
            smp.strategy = parse_strategy(vstrategy);
            return finish_report(verify_thm_1_2(p_n, p_b, p_delta, smp), vout);
        };
    });

    auto* v51 = ver->add_subcommand("thm5.1", "[1,b] / fractional threshold, sampled");
    v51->add_option("--n", p_n, "order")->required();
    v51->add_option("--b", p_b, "degree bound (variant i)");
    v51->add_option("--delta", p_delta, "minimum degree")->required();
    v51->add_option("--variant", vvariant, "i | ii (one-b | fractional)")->required();
    add_sampled_opts(v51);
    v51->callback([&] {
        action = [&] {
            Thm51Variant variant;
            if (vvariant == "i" || vvariant == "one-b" || vvariant == "one_b")
                variant = Thm51Variant::OneB;
            else if (vvariant == "ii" || vvariant == "fractional")
                variant = Thm51Variant::FractionalPM;
            else
                throw std::invalid_argument("unknown variant " + vvariant);
            Sampler smp;
            smp.count = vsamples;
            smp.seed = vseed;
            smp.strategy = parse_strategy(vstrategy);
            return finish_report(verify_thm_5_1(p_n, p_b, p_delta, variant, smp), vout);
        };
    });

    auto* vle = ver->add_subcommand("lemmas", "exhaustive lemma property suite");
    vle->add_option("--n-max", p_nmax, "largest order to enumerate (<= 7)");
    vle->add_option("--out", vout, "write the JSON report here instead of stdout");
    vle->callback([&] {
        action = [&] { return finish_report(verify_lemma_suite(p_nmax), vout); };
    });

    // ---- explore ----
    int p_horder = -1;
    auto* exp = app.add_subcommand("explore", "argmax evidence for the unique-factor question");
    exp->add_option("--two-n", p_two_n, "even order")->required();
    exp->add_option("--k", p_k, "factor degree")->required();
    exp->add_option("--h-order", p_horder, "circulant candidate order (k > n branch)");
    exp->add_option("--source", vsource, "internal or a graph6 stream path");
    exp->add_option("--out", vout, "write the JSON report here instead of stdout");
    exp->callback([&] {
        action = [&] {
            return finish_report(
                explore_problem_5_1(p_two_n, p_k, source_from(vsource, p_two_n), p_horder), vout);
        };
    });

    // ---- g6 ----
    std::string g6file;
    bool lenient = false;
    auto* g6c = app.add_subcommand("g6", "graph6 stream utilities");
    g6c->require_subcommand(1);
    auto* g6v = g6c->add_subcommand("validate", "parse every line, report failures");
    g6v->add_option("file", g6file, "graph6 stream path")->required();
    g6v->add_flag("--lenient", lenient, "skip malformed lines instead of stopping");
    g6v->callback([&] {
        action = [&] {
            long long ok = 0, bad = 0;
            for_each_line(g6file, [&](long long no, const std::string& line) {
                try {
                    parse_graph6(line);
                    ++ok;
                } catch (const std::exception& e) {
                    ++bad;
                    std::cerr << "line " << no << ": " << e.what() << "\n";
                    if (!lenient) return false;
                }
                return true;
            });
            ordered_json j;
            j["valid"] = ok;
            j["invalid"] = bad;
            emit(j);
            if (bad > 0 && !lenient) return 2;
            return 0;
        };
    });
    auto* g6s = g6c->add_subcommand("stats", "order and edge histograms for a stream");
    g6s->add_option("file", g6file, "graph6 stream path")->required();
    g6s->callback([&] {
        action = [&] {
            std::map<int, long long> orders, sizes;
            long long count = 0;
            bool failed = false;
            for_each_line(g6file, [&](long long no, const std::string& line) {
                try {
                    const Graph g = parse_graph6(line);
                    ++count;
                    ++orders[g.n()];
                    ++sizes[g.edge_count()];
                } catch (const std::exception& e) {
                    std::cerr << "line " << no << ": " << e.what() << "\n";
                    failed = true;
                    return false;
                }
                return true;
            });
            if (failed) return 2;
            ordered_json j;
            if (orders.size() == 1) j["n"] = orders.begin()->first;
            j["count"] = count;
            ordered_json oh, eh;
            for (const auto& [n, c] : orders) oh[std::to_string(n)] = c;
            for (const auto& [m, c] : sizes) eh[std::to_string(m)] = c;
            j["orders"] = oh;
            j["edges"] = eh;
            emit(j);
            return 0;
        };
    });
    auto* g6x = g6c->add_subcommand("convert", "re-encode every line (normalizes the stream)");
    g6x->add_option("file", g6file, "graph6 stream path")->required();
    g6x->callback([&] {
        action = [&] {
            bool failed = false;
            for_each_line(g6file, [&](long long no, const std::string& line) {
                try {
                    std::cout << write_graph6(parse_graph6(line)) << "\n";
                } catch (const std::exception& e) {
                    std::cerr << "line " << no << ": " << e.what() << "\n";
                    failed = true;
                    return false;
                }
                return true;
            });
            return failed ? 2 : 0;
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }
    if (!action) {
        std::cerr << app.help();
        return 2;
    }
    try {
        return action();
    } catch (const capacity_error& e) {
        std::cerr << "capacity: " << e.what() << "\n";
        return 4;
    } catch (const convergence_error& e) {
        std::cerr << "convergence: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::logic_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 70;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
