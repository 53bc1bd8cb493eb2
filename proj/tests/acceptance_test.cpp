// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any
// failure.  Every numeric claim is checked in exact rational arithmetic.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <string>
#include <utility>
#include <vector>

#include "clab/bounds.hpp"
#include "clab/builders.hpp"
#include "clab/certified.hpp"
#include "clab/exact_prob.hpp"
#include "clab/generators.hpp"
#include "clab/verify.hpp"

using namespace clab;

namespace {

struct Criterion {
    int failures = 0;
    std::string first;
    void expect(bool ok, const std::string& what) {
        if (ok) return;
        ++failures;
        if (first.empty()) first = what;
    }
};

uint64_t splitmix64(uint64_t& x) {
    x += 0x9e3779b97f4a7c15ULL;
    uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Seeded random independent sets: random vertex order, each vertex kept with
// probability 1/2 when it stays independent.
std::vector<VertexSet> random_independent_sets(const Hypergraph& h, int count, uint64_t seed) {
    int n = h.vertex_count();
    std::vector<VertexSet> out;
    out.reserve(count);
    uint64_t state = seed;
    std::vector<int> order(n);
    for (int k = 0; k < count; ++k) {
        for (int v = 0; v < n; ++v) order[v] = v;
        for (int v = n - 1; v > 0; --v) std::swap(order[v], order[splitmix64(state) % uint64_t(v + 1)]);
        VertexSet s(n);
        for (int v : order) {
            if (splitmix64(state) & 1) continue;
            VertexSet cand = s;
            cand.add(v);
            if (is_independent(h, cand)) s = cand;
        }
        out.push_back(std::move(s));
    }
    return out;
}

Hypergraph mixed_random(int n, int m2, int m3, uint64_t seed) {
    std::vector<VertexSet> es = gen_random_uniform(n, 2, m2, seed).edges();
    Hypergraph extra = gen_random_uniform(n, 3, m3, seed + 1000003);
    for (const auto& e : extra.edges()) es.push_back(e);
    return Hypergraph(n, std::move(es));
}

long binom_long(int n, int k) {
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

bool criterion1() {
    Criterion c;
    struct Inst {
        Hypergraph h;
        int r;
        std::string tag;
    };
    std::vector<Inst> corpus;
    for (int n = 3; n <= 6; ++n) corpus.push_back({gen_triangles(n), 3, "triangles(" + std::to_string(n) + ")"});
    for (int n = 5; n <= 20; ++n) corpus.push_back({gen_aps(n, 3), 3, "aps(" + std::to_string(n) + ")"});
    for (int n : {30, 60, 100, 120}) corpus.push_back({gen_complete_graph(n), 2, "K_" + std::to_string(n)});
    for (int i = 0; corpus.size() < 200; ++i) {
        int r = 2 + i % 3;
        int n, m;
        if (i % 2 == 0) {
            n = 8 + i % 7;  // 8..14: enumerate all independent sets
            m = std::min<long>(binom_long(n, r), n + i % 5);
        } else {
            n = 20 + i % 41;  // 20..60: 100 seeded random inputs
            m = std::min<long>(binom_long(n, r), 2 * n);
        }
        corpus.push_back({gen_random_uniform(n, r, m, 7000 + i), r, "random#" + std::to_string(i)});
    }

    for (const Inst& inst : corpus) {
        int n = inst.h.vertex_count();
        std::vector<VertexSet> inputs;
        if (n > 18) inputs = random_independent_sets(inst.h, 100, 555 + n);
        for (long denom : {8L * inst.r * inst.r, 16L * inst.r * inst.r}) {
            AlgorithmParams ap;
            ap.mode = BuilderMode::Cover;
            ap.p = rat(1, denom);
            VerificationReport rep = verify_cover_run(inst.h, ap, inputs);
            for (const CheckItem& it : rep.items)
                c.expect(it.pass, inst.tag + " p=1/" + std::to_string(denom) + " " + it.label + ": " + it.witness);
        }
    }
    c.expect(corpus.size() >= 200, "corpus size");
    if (c.failures) std::fprintf(stderr, "  criterion 1: %d failed checks; first: %s\n", c.failures, c.first.c_str());
    return c.failures == 0;
}

bool criterion2() {
    Criterion c;
    AlgorithmParams ap;
    ap.mode = BuilderMode::Cover;
    ap.p = rat(1, 32);
    ContainerOutput out = build_cover_container(gen_complete_graph(100), ap, VertexSet(100));
    c.expect(out.rounds == 35, "rounds = " + std::to_string(out.rounds));
    c.expect(out.container.size() == 65, "|C| = " + std::to_string(out.container.size()));
    VertexSet want(100);
    for (int v = 35; v < 100; ++v) want.add(v);
    c.expect(out.container == want, "container vertices");
    c.expect(out.cover.has_value() && weight(*out.cover, rat(1, 32)) == rat(65, 32), "w_p(G) = 65/32 equality");
    c.expect(out.fingerprint == VertexSet(100), "empty fingerprint");
    if (c.failures) std::fprintf(stderr, "  criterion 2: %s\n", c.first.c_str());
    return c.failures == 0;
}

bool criterion3() {
    Criterion c;
    std::vector<Hypergraph> corpus;
    for (int n = 3; n <= 5; ++n) corpus.push_back(gen_triangles(n));
    for (int i = 0; corpus.size() < 100; ++i) {
        int which = i % 3;
        if (which == 0) {
            int n = 6 + i % 7;  // 6..12 uniform r=2
            corpus.push_back(gen_random_uniform(n, 2, std::min<long>(binom_long(n, 2), n + i % 4), 900 + i));
        } else if (which == 1) {
            int n = 7 + i % 6;  // 7..12 uniform r=3
            corpus.push_back(gen_random_uniform(n, 3, std::min<long>(binom_long(n, 3), n), 1900 + i));
        } else {
            int n = 8 + i % 9;  // 8..16 non-uniform
            corpus.push_back(mixed_random(n, n, n / 2, 2900 + i));
        }
    }
    struct PD {
        Rational p, d;
    };
    std::vector<PD> params = {{rat(1, 4), rat(1, 4)}, {rat(1, 8), rat(1, 4)}, {rat(1, 10), rat(1, 2)}};
    for (size_t i = 0; i < corpus.size(); ++i) {
        for (const PD& pd : params) {
            AlgorithmParams ap;
            ap.mode = BuilderMode::Hardcore;
            ap.p = pd.p;
            ap.delta = pd.d;
            VerificationReport rep = verify_hardcore_run(corpus[i], ap);
            for (const CheckItem& it : rep.items)
                c.expect(it.pass, "instance " + std::to_string(i) + " " + it.label + ": " + it.witness);
        }
    }
    c.expect(corpus.size() >= 100, "corpus size");

    // star goldens at p = delta = 1/2
    Hypergraph star(4, {VertexSet(4, {0, 1}), VertexSet(4, {0, 2}), VertexSet(4, {0, 3})});
    AlgorithmParams ap;
    ap.mode = BuilderMode::Hardcore;
    ap.p = rat(1, 2);
    ap.delta = rat(1, 2);
    ContainerOutput in0 = build_hardcore_container(star, ap, VertexSet(4, {0}));
    c.expect(in0.fingerprint == VertexSet(4, {0}) && in0.container == VertexSet(4, {0}), "star inside golden");
    ContainerOutput out0 = build_hardcore_container(star, ap, VertexSet(4));
    c.expect(out0.fingerprint == VertexSet(4) && out0.container == VertexSet(4, {1, 2, 3}), "star outside golden");
    if (c.failures) std::fprintf(stderr, "  criterion 3: %d failed checks; first: %s\n", c.failures, c.first.c_str());
    return c.failures == 0;
}

bool criterion4() {
    Criterion c;
    std::vector<std::pair<Hypergraph, int>> corpus;  // (instance, r)
    corpus.push_back({gen_triangles(3), 3});
    corpus.push_back({gen_triangles(4), 3});
    for (int i = 0; corpus.size() < 50; ++i) {
        int r = 2 + i % 2;
        int n = 6 + i % 9;  // 6..14
        long m = std::min<long>(binom_long(n, r), n + i % 4);
        corpus.push_back({gen_random_uniform(n, r, m, 4100 + i), r});
    }
    for (size_t i = 0; i < corpus.size(); ++i) {
        const auto& [h, r] = corpus[i];
        AlgorithmParams ap;
        ap.mode = BuilderMode::Interpolating;
        ap.p = rat(1, 8);
        ap.delta = rat(1, 4);
        VerificationReport rep = verify_interpolating_run(h, ap);
        for (const CheckItem& it : rep.items)
            c.expect(it.pass, "instance " + std::to_string(i) + " " + it.label + ": " + it.witness);
        VerificationReport x = crosscheck_hcl4_implies_hcl1(h, rat(1, 8L * r * r));
        for (const CheckItem& it : x.items)
            c.expect(it.pass, "crosscheck " + std::to_string(i) + " " + it.label + ": " + it.witness);
    }
    c.expect(corpus.size() >= 50, "corpus size");
    if (c.failures) std::fprintf(stderr, "  criterion 4: %d failed checks; first: %s\n", c.failures, c.first.c_str());
    return c.failures == 0;
}

bool criterion5() {
    Criterion c;
    std::vector<Rational> ps = {rat(1, 10), rat(1, 3), rat(1, 2), rat(9, 10)};
    for (int i = 0; i < 500; ++i) {
        int n = 4 + i % 9;  // 4..12
        Hypergraph h = gen_decreasing_family_instance(n, rat(1 + i % 4, 4), 5100 + i);
        for (const Rational& p : ps) {
            KeyInequalityResult k = key_inequality_check(h, p);
            c.expect(k.holds, "instance " + std::to_string(i));
        }
    }
    // 2^U construction: exact equality for every U subset of an 8-element
    // universe at p in {1/3, 1/2}
    for (uint64_t mask = 0; mask < 256; ++mask) {
        Hypergraph h = gen_singleton_complement(VertexSet::from_mask64(8, mask));
        for (const Rational& p : {rat(1, 3), rat(1, 2)}) {
            KeyInequalityResult k = key_inequality_check(h, p);
            c.expect(k.holds && k.equality, "2^U mask " + std::to_string(mask));
        }
    }
    if (c.failures) std::fprintf(stderr, "  criterion 5: %d failed checks; first: %s\n", c.failures, c.first.c_str());
    return c.failures == 0;
}

bool criterion6() {
    Criterion c;
    for (int i = 0; i < 100; ++i) {
        int r = 2 + i % 2;
        int n = 6 + i % 9;  // 6..14
        long m = std::min<long>(binom_long(n, r), n + i % 5);
        Hypergraph h = gen_random_uniform(n, r, m, 6100 + i);
        Rational p = rat(1, 4 * r + 2 + i % 3);  // strictly below 1/(4r)
        VerificationReport cc = verify_constructive_cover(h, p);
        for (const CheckItem& it : cc.items)
            c.expect(it.pass, "cover " + std::to_string(i) + " " + it.label + ": " + it.witness);
        VerificationReport ha = verify_harris(h, h, p);
        for (const CheckItem& it : ha.items)
            c.expect(it.pass, "harris " + std::to_string(i) + " " + it.label + ": " + it.witness);
        VerificationReport ja = verify_janson(h, p);
        for (const CheckItem& it : ja.items)
            c.expect(it.pass, "janson " + std::to_string(i) + " " + it.label + ": " + it.witness);
    }
    for (int i = 0; i < 500; ++i) {
        int r = 2 + i % 3;
        int n = r + 2 + i % 10;
        long m = std::min<long>(binom_long(n, r), 1 + i % 12);
        Hypergraph a = gen_random_uniform(n, r, m, 6600 + i);  // uniform, hence antichain
        c.expect(lymb_sum(a) <= 1, "lymb " + std::to_string(i));
    }
    if (c.failures) std::fprintf(stderr, "  criterion 6: %d failed checks; first: %s\n", c.failures, c.first.c_str());
    return c.failures == 0;
}

bool criterion7() {
    Criterion c;
    EfficientParams ep{rat(3, 10), Rational(2)};
    c.expect(efficient_assumptions_hold(gen_complete_graph(1000), ep), "K_1000 assumptions");
    VerificationReport eff = check_efficient_conclusion(gen_complete_graph(1000), ep);
    for (const CheckItem& it : eff.items) c.expect(it.pass, "efficient " + it.label + ": " + it.witness);
    VerificationReport p1 = check_packaged_conclusion(gen_complete_graph(100), rat(1, 32), 1000, 424242);
    for (const CheckItem& it : p1.items) c.expect(it.pass, "packaged K_100 " + it.label + ": " + it.witness);
    VerificationReport p2 = check_packaged_conclusion(gen_triangles(5), rat(1, 72), 1000, 424243);
    for (const CheckItem& it : p2.items) c.expect(it.pass, "packaged triangles(5) " + it.label + ": " + it.witness);
    if (c.failures) std::fprintf(stderr, "  criterion 7: %d failed checks; first: %s\n", c.failures, c.first.c_str());
    return c.failures == 0;
}

bool criterion8() {
    Criterion c;
    uint64_t state = 987654321;
    for (int i = 0; i < 200; ++i) {
        int n = 4 + i % 7;  // 4..10
        int m = 1 + int(splitmix64(state) % 6);
        std::vector<VertexSet> es;
        for (int e = 0; e < m; ++e) {
            VertexSet edge(n);
            int sz = 1 + int(splitmix64(state) % 3);
            while (int(edge.size()) < sz) edge.add(int(splitmix64(state) % uint64_t(n)));
            es.push_back(std::move(edge));
        }
        Hypergraph h(n, std::move(es));
        Rational lambda = rat(1 + i % 4, 3);
        Rational p = rat(1 + i % 3, 5);

        Rational z = 0, prob = 0, cond_num = 0, probe_num = 0;
        VertexSet probe = VertexSet::from_mask64(n, splitmix64(state) % (uint64_t(1) << n));
        for (uint64_t mask = 0; mask < (uint64_t(1) << n); ++mask) {
            VertexSet s = VertexSet::from_mask64(n, mask);
            if (!is_independent(h, s)) continue;
            z += rat_pow(lambda, s.size());
            Rational pw = rat_pow(p, s.size()) * rat_pow(1 - p, n - s.size());
            prob += pw;
            cond_num += Rational(s.size()) * pw;
            if (probe.subset_of(s)) probe_num += pw;
        }
        c.expect(partition_function(h, lambda).z == z, "Z " + std::to_string(i));
        c.expect(prob_independent(h, p) == prob, "Pr " + std::to_string(i));
        c.expect(conditional_expected_size(h, p) == cond_num / prob, "E|I| " + std::to_string(i));
        if (is_independent(h, probe))
            c.expect(conditional_subset_prob(h, p, probe) == probe_num / prob, "cond " + std::to_string(i));
        auto marg = conditional_marginals(h, p);
        for (int v = 0; v < n; ++v)
            c.expect(marg[v] == conditional_subset_prob(h, p, VertexSet(n, {v})), "marg " + std::to_string(i));

        if (i < 50) {
            McEstimate mc = mc_prob_independent(h, p, 40000, 31337 + i);
            double exact = prob.get_d();
            double sigma = mc.half_width / 1.96;
            c.expect(std::abs(mc.estimate - exact) <= 4 * sigma + 1e-12, "mc " + std::to_string(i));
        }
    }
    if (c.failures) std::fprintf(stderr, "  criterion 8: %d failed checks; first: %s\n", c.failures, c.first.c_str());
    return c.failures == 0;
}

}  // namespace

int main() {
    bool (*criteria[])() = {criterion1, criterion2, criterion3, criterion4,
                            criterion5, criterion6, criterion7, criterion8};
    bool all = true;
    for (int k = 0; k < 8; ++k) {
        auto t0 = std::chrono::steady_clock::now();
        bool ok = criteria[k]();
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("CRITERION %d: %s (%.1fs)\n", k + 1, ok ? "PASS" : "FAIL", secs);
        std::fflush(stdout);
        all = all && ok;
    }
    return all ? 0 : 1;
}
