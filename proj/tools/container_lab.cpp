#include <chrono>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "clab/bounds.hpp"
#include "clab/builders.hpp"
#include "clab/exact_prob.hpp"
#include "clab/generators.hpp"
#include "clab/io.hpp"
#include "clab/verify.hpp"

using nlohmann::json;
using namespace clab;

namespace {

constexpr const char* kVersion = "1.0.0";
constexpr const char* kSchema = "container-lab-report/1";

// usage errors exit 2, invariant failures exit 1
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Rational parse_p(const std::string& text) {
    try {
        Rational q = parse_rational(text);
        return q;
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

uint64_t fnv1a(const std::string& s) {
    uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) h = (h ^ c) * 1099511628211ULL;
    return h;
}

Hypergraph load_instance(const std::string& path, std::string* digest = nullptr) {
    std::vector<std::string> warnings;
    HypergraphDocument doc = parse_document(read_file(path), &warnings);
    for (const auto& w : warnings) std::cerr << "warning: " << path << ": " << w << "\n";
    if (digest) {
        char buf[32];
        snprintf(buf, sizeof buf, "%016llx", (unsigned long long)fnv1a(serialize_document(doc)));
        *digest = buf;
    }
    return document_to_hypergraph(doc);
}

VertexSet parse_vertex_list(const std::string& text, int n) {
    VertexSet s(n);
    if (text.empty()) return s;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            s.add(std::stoi(item));
        } catch (const std::exception& e) {
            throw UsageError("bad vertex list '" + text + "': " + e.what());
        }
    }
    return s;
}

void emit(const std::string& out_path, const std::string& content) {
    if (out_path.empty())
        std::cout << content;
    else
        write_file(out_path, content);
}

json report_json(const VerificationReport& rep) { return json::parse(report_to_json(rep)); }

json trace_json(const ContainerOutput& out) {
    json jt = json::array();
    for (const auto& step : out.trace) {
        json js;
        js["round"] = step.round;
        js["chosen"] = step.chosen.elements();
        if (step.s) js["s"] = *step.s;
        js["branch"] = step.branch == Branch::InsideI ? "inside_I" : "outside_I";
        js["fingerprint_size_after"] = step.fingerprint_size_after;
        jt.push_back(std::move(js));
    }
    return jt;
}

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    long ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start)
            .count();
    }
};

json run_header(const std::string& digest, const std::map<std::string, std::string>& params) {
    json j;
    j["schema"] = kSchema;
    j["version"] = kVersion;
    if (!digest.empty()) j["input_digest"] = digest;
    j["params"] = params;
    return j;
}

int cmd_generate(const std::string& kind, int n, int r, int k, long m, const std::string& density, uint64_t seed,
                 const std::string& out_path) {
    Hypergraph h;
    std::map<std::string, std::string> meta{{"generator", kind}, {"seed", std::to_string(seed)}};
    if (kind == "triangles") {
        h = gen_triangles(n);
    } else if (kind == "aps") {
        h = gen_aps(n, k);
        meta["k"] = std::to_string(k);
    } else if (kind == "random") {
        h = gen_random_uniform(n, r, m, seed);
        meta["r"] = std::to_string(r);
        meta["m"] = std::to_string(m);
    } else if (kind == "decreasing") {
        h = gen_decreasing_family_instance(n, parse_p(density), seed);
        meta["density"] = density;
    } else if (kind == "complete") {
        h = gen_complete_graph(n);
    } else {
        throw UsageError("unknown generator kind '" + kind + "'");
    }
    meta["n"] = std::to_string(n);
    emit(out_path, serialize_document(hypergraph_to_document(h, std::move(meta))));
    return 0;
}

AlgorithmParams make_params(const std::string& mode, const std::string& p, const std::string& delta,
                            const std::string& stop_rule, const std::string& stop_k) {
    AlgorithmParams ap;
    ap.p = parse_p(p);
    if (mode == "cover")
        ap.mode = BuilderMode::Cover;
    else if (mode == "hardcore")
        ap.mode = BuilderMode::Hardcore;
    else if (mode == "interpolating")
        ap.mode = BuilderMode::Interpolating;
    else
        throw UsageError("unknown mode '" + mode + "'");
    if (!delta.empty()) ap.delta = parse_p(delta);
    if (stop_rule == "logr") {
        ap.stop_rule = StopRule::LogR;
        if (stop_k.empty()) throw UsageError("logr stop rule requires --K");
        ap.stop_k = parse_p(stop_k);
    } else if (stop_rule != "standard") {
        throw UsageError("unknown stop rule '" + stop_rule + "'");
    }
    return ap;
}

int cmd_containers(const std::string& in_path, const std::string& mode, const std::string& p,
                   const std::string& delta, const std::string& input_set, bool all, const std::string& stop_rule,
                   const std::string& stop_k, const std::string& out_path) {
    Timer timer;
    std::string digest;
    Hypergraph h = load_instance(in_path, &digest);
    AlgorithmParams ap = make_params(mode, p, delta, stop_rule, stop_k);
    json j = run_header(digest, {{"mode", mode}, {"p", p}, {"delta", delta}, {"stop_rule", stop_rule}});
    j["results"] = json::array();
    try {
        if (all) {
            for (const auto& entry : build_family(h, ap)) {
                json je;
                je["fingerprint"] = entry.fingerprint.elements();
                je["container"] = entry.container.elements();
                je["inputs"] = entry.inputs;
                if (entry.cover) {
                    json jc = json::array();
                    for (const auto& e : entry.cover->edges()) jc.push_back(e.elements());
                    je["cover"] = std::move(jc);
                }
                j["results"].push_back(std::move(je));
            }
        } else {
            ContainerOutput out = build_container(h, ap, parse_vertex_list(input_set, h.vertex_count()));
            json je;
            je["fingerprint"] = out.fingerprint.elements();
            je["container"] = out.container.elements();
            je["rounds"] = out.rounds;
            je["trace"] = trace_json(out);
            if (out.cover) {
                json jc = json::array();
                for (const auto& e : out.cover->edges()) jc.push_back(e.elements());
                je["cover"] = std::move(jc);
            }
            j["results"].push_back(std::move(je));
        }
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    j["elapsed_ms"] = timer.ms();
    emit(out_path, j.dump(2) + "\n");
    return 0;
}

int cmd_verify(const std::string& suite, const std::string& in_path, const std::string& corpus, int count,
               uint64_t seed, const std::string& p, const std::string& delta, const std::string& tau,
               const std::string& big_k, int trials, const std::string& out_path) {
    Timer timer;
    std::vector<std::pair<std::string, Hypergraph>> instances;  // (digest, H)
    if (!in_path.empty()) {
        std::string digest;
        Hypergraph h = load_instance(in_path, &digest);
        instances.emplace_back(digest, std::move(h));
    } else if (corpus == "random") {
        for (int i = 0; i < count; ++i) {
            uint64_t s = seed + uint64_t(i);
            Hypergraph h;
            if (suite == "prop23") {
                h = gen_decreasing_family_instance(8 + int(s % 3), rat(1 + long(s % 3), 4), s);
            } else if (suite == "hardcore-lemmas" || suite == "interpolating-lemmas") {
                h = gen_random_uniform(8 + int(s % 3), 2 + int(s % 2), 6 + int(s % 5), s);
            } else if (suite == "cover-lemmas" || suite == "crosscheck" || suite == "packaged") {
                int r = 2 + int(s % 2);
                h = gen_random_uniform(9 + int(s % 3), r, 8 + int(s % 7), s);
            } else {
                h = gen_random_uniform(9 + int(s % 4), 2 + int(s % 2), 10 + int(s % 8), s);
            }
            instances.emplace_back("seed:" + std::to_string(s), std::move(h));
        }
    } else {
        throw UsageError("need --in FILE or --corpus random");
    }

    json j = run_header("", {{"suite", suite}, {"p", p}, {"delta", delta}});
    j["results"] = json::array();
    bool all_pass = true;
    for (auto& [digest, h] : instances) {
        int r = std::max(2, h.rank());
        VerificationReport rep;
        json extra;
        try {
            if (suite == "cover-lemmas") {
                AlgorithmParams ap;
                ap.p = p.empty() ? rat(1, 8L * r * r) : parse_p(p);
                rep = verify_cover_run(h, ap);
                ContainerOutput empty_run = build_cover_container(h, ap, VertexSet(h.vertex_count()));
                extra["empty_input_run"] = {{"rounds", empty_run.rounds},
                                            {"container_size", empty_run.container.size()},
                                            {"trace", trace_json(empty_run)}};
            } else if (suite == "hardcore-lemmas") {
                AlgorithmParams ap;
                ap.p = p.empty() ? rat(1, 8) : parse_p(p);
                ap.delta = delta.empty() ? rat(1, 4) : parse_p(delta);
                rep = verify_hardcore_run(h, ap);
            } else if (suite == "interpolating-lemmas") {
                AlgorithmParams ap;
                ap.p = p.empty() ? rat(1, 4) : parse_p(p);
                ap.delta = delta.empty() ? rat(1, 4) : parse_p(delta);
                rep = verify_interpolating_run(h, ap);
            } else if (suite == "prop21") {
                rep = verify_constructive_cover(h, p.empty() ? rat(1, 8L * r) : parse_p(p));
            } else if (suite == "prop23") {
                rep = verify_key_inequality(h, p.empty() ? rat(1, 3) : parse_p(p));
            } else if (suite == "janson") {
                rep = verify_janson(h, p.empty() ? rat(1, 3) : parse_p(p));
            } else if (suite == "lymb") {
                rep = verify_lymb(h);
            } else if (suite == "efficient") {
                if (tau.empty() || big_k.empty()) throw UsageError("efficient suite requires --tau and --K");
                rep = check_efficient_conclusion(h, EfficientParams{parse_p(tau), parse_p(big_k)});
            } else if (suite == "packaged") {
                rep = check_packaged_conclusion(h, p.empty() ? rat(1, 8L * r * r) : parse_p(p), trials, seed);
            } else if (suite == "crosscheck") {
                rep = crosscheck_hcl4_implies_hcl1(h, p.empty() ? rat(1, 8L * r * r) : parse_p(p));
            } else {
                throw UsageError("unknown suite '" + suite + "'");
            }
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        } catch (const std::domain_error& e) {
            throw UsageError(e.what());
        }
        all_pass = all_pass && rep.pass();
        json jr = report_json(rep);
        jr["instance"] = digest;
        if (!extra.is_null()) jr.update(extra);
        j["results"].push_back(std::move(jr));
    }
    j["pass"] = all_pass;
    j["elapsed_ms"] = timer.ms();
    emit(out_path, j.dump(2) + "\n");
    return all_pass ? 0 : 1;
}

int cmd_bounds(const std::string& in_path, const std::string& which, const std::string& p,
               const std::string& out_path) {
    std::string digest;
    Hypergraph h = load_instance(in_path, &digest);
    json j = run_header(digest, {{"which", which}, {"p", p}});
    try {
        if (which == "janson") {
            JansonBound jb = janson_bound(h, parse_p(p));
            j["mu"] = format_rational(jb.mu);
            j["delta_star"] = format_rational(jb.delta_star);
            j["bound"] = format_rational(jb.bound);
            j["bound_approx"] = jb.bound.get_d();
        } else if (which == "harris") {
            HarrisBound hb = harris_bound(h, parse_p(p));
            j["weight"] = format_rational(hb.w);
            j["product"] = format_rational(hb.product);
            j["product_approx"] = hb.product.get_d();
        } else if (which == "lymb") {
            Rational sum = lymb_sum(h);
            j["sum"] = format_rational(sum);
            j["sum_approx"] = sum.get_d();
        } else if (which == "construct-cover") {
            Hypergraph g = construct_cover(h, parse_p(p));
            json jc = json::array();
            for (const auto& e : g.edges()) jc.push_back(e.elements());
            j["cover"] = std::move(jc);
        } else if (which == "key-inequality") {
            KeyInequalityResult res = key_inequality_check(h, parse_p(p));
            j["x"] = format_rational(res.x);
            j["holds"] = res.holds;
            j["equality"] = res.equality;
        } else {
            throw UsageError("unknown bound '" + which + "'");
        }
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    } catch (const std::domain_error& e) {
        throw UsageError(e.what());
    }
    emit(out_path, j.dump(2) + "\n");
    return 0;
}

int cmd_prob(const std::string& in_path, const std::string& p, const std::string& conditional, long mc_samples,
             uint64_t mc_seed, const std::string& out_path) {
    std::string digest;
    Hypergraph h = load_instance(in_path, &digest);
    Rational q = parse_p(p);
    json j = run_header(digest, {{"p", p}});
    try {
        if (mc_samples > 0) {
            McEstimate est = mc_prob_independent(h, q, mc_samples, mc_seed);
            j["estimate"] = est.estimate;
            j["half_width"] = est.half_width;
            j["samples"] = est.samples;
        } else if (!conditional.empty()) {
            Rational pr = conditional_subset_prob(h, q, parse_vertex_list(conditional, h.vertex_count()));
            j["conditional_probability"] = format_rational(pr);
            j["approx"] = pr.get_d();
        } else {
            Rational pr = prob_independent(h, q);
            j["probability"] = format_rational(pr);
            j["approx"] = pr.get_d();
        }
    } catch (const std::domain_error& e) {
        throw UsageError(e.what());
    }
    emit(out_path, j.dump(2) + "\n");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"container lab: hypergraph container construction and exact verification"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);

    // generate
    auto* gen = app.add_subcommand("generate", "write an instance document");
    std::string g_kind, g_density = "1/2", g_out;
    int g_n = 0, g_r = 2, g_k = 3;
    long g_m = 0;
    uint64_t g_seed = 0;
    gen->add_option("kind", g_kind, "triangles | aps | random | decreasing | complete")->required();
    gen->add_option("--n", g_n)->required();
    gen->add_option("--r", g_r);
    gen->add_option("--k", g_k);
    gen->add_option("--m", g_m);
    gen->add_option("--density", g_density);
    gen->add_option("--seed", g_seed);
    gen->add_option("--out", g_out);

    // containers
    auto* con = app.add_subcommand("containers", "run a container builder");
    std::string c_in, c_mode = "cover", c_p, c_delta, c_input, c_stop = "standard", c_k, c_out;
    bool c_all = false;
    con->add_option("--in", c_in)->required();
    con->add_option("--mode", c_mode);
    con->add_option("--p", c_p, "rational, e.g. 1/32")->required();
    con->add_option("--delta", c_delta);
    con->add_option("--input-set", c_input, "comma-separated vertices of I");
    con->add_flag("--all", c_all, "run over every independent set");
    con->add_option("--stop-rule", c_stop, "standard | logr");
    con->add_option("--K", c_k);
    con->add_option("--out", c_out);

    // verify
    auto* ver = app.add_subcommand("verify", "run a verification suite");
    std::string v_suite, v_in, v_corpus, v_p, v_delta, v_tau, v_k, v_out;
    int v_count = 10, v_trials = 100;
    uint64_t v_seed = 1;
    ver->add_option("--suite", v_suite)->required();
    ver->add_option("--in", v_in);
    ver->add_option("--corpus", v_corpus);
    ver->add_option("--count", v_count);
    ver->add_option("--seed", v_seed);
    ver->add_option("--p", v_p);
    ver->add_option("--delta", v_delta);
    ver->add_option("--tau", v_tau);
    ver->add_option("--K", v_k);
    ver->add_option("--trials", v_trials);
    ver->add_option("--out", v_out);

    // bounds
    auto* bnd = app.add_subcommand("bounds", "compute a bound calculator");
    std::string b_in, b_which, b_p = "1/3", b_out;
    bnd->add_option("--in", b_in)->required();
    bnd->add_option("--which", b_which, "janson | harris | lymb | construct-cover | key-inequality")->required();
    bnd->add_option("--p", b_p);
    bnd->add_option("--out", b_out);

    // prob
    auto* prb = app.add_subcommand("prob", "exact or Monte Carlo independence probability");
    std::string p_in, p_p, p_cond, p_out;
    long p_mc = 0;
    uint64_t p_mc_seed = 0;
    prb->add_option("--in", p_in)->required();
    prb->add_option("--p", p_p)->required();
    prb->add_option("--conditional", p_cond, "comma-separated vertices of L");
    prb->add_option("--mc", p_mc, "Monte Carlo sample count");
    prb->add_option("--mc-seed", p_mc_seed);
    prb->add_option("--out", p_out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help / --version
        app.exit(e);
        return 2;
    }

    try {
        if (gen->parsed()) return cmd_generate(g_kind, g_n, g_r, g_k, g_m, g_density, g_seed, g_out);
        if (con->parsed()) return cmd_containers(c_in, c_mode, c_p, c_delta, c_input, c_all, c_stop, c_k, c_out);
        if (ver->parsed())
            return cmd_verify(v_suite, v_in, v_corpus, v_count, v_seed, v_p, v_delta, v_tau, v_k, v_trials, v_out);
        if (bnd->parsed()) return cmd_bounds(b_in, b_which, b_p, b_out);
        if (prb->parsed()) return cmd_prob(p_in, p_p, p_cond, p_mc, p_mc_seed, p_out);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const MalformedDocumentError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const IndexOutOfRangeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const EmptyEdgeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
