#include "clab/exact_prob.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace clab {
namespace {

int effective_guard(int guard) {
    return guard >= 0 ? guard : exact_guard_n();
}

void check_guard(const Hypergraph& h, int guard, const char* what) {
    if (h.vertex_count() > guard)
        throw std::runtime_error(std::string(what) + ": n=" + std::to_string(h.vertex_count()) +
                                 " exceeds exact-engine guard " + std::to_string(guard));
    if (h.vertex_count() > 64) throw std::runtime_error(std::string(what) + ": n > 64 unsupported in exact engine");
}

std::vector<uint64_t> edge_masks(const Hypergraph& h) {
    std::vector<uint64_t> es;
    es.reserve(h.edges().size());
    for (const auto& e : h.edges()) es.push_back(e.as_mask64());
    return es;
}

// W(A) = sum over independent I inside A of a^|I| b^(|A|-|I|), integers.
// Branch on the lowest vertex covered by an edge; free vertices give (a+b)^k.
mpz_class weighted_count(uint64_t avail, std::vector<uint64_t> edges, const mpz_class& a, const mpz_class& b,
                         const mpz_class& ab) {
    // factor out vertices not touched by any edge: each contributes (a+b)
    uint64_t covered = 0;
    for (uint64_t e : edges) covered |= e;
    covered &= avail;
    int free_vertices = std::popcount(avail & ~covered);
    mpz_class scale;
    mpz_pow_ui(scale.get_mpz_t(), ab.get_mpz_t(), free_vertices);
    if (edges.empty()) return scale;
    int v = std::countr_zero(covered);
    uint64_t bit = uint64_t(1) << v;

    std::vector<uint64_t> excl, incl;
    bool incl_dead = false;
    for (uint64_t e : edges) {
        if (e & bit) {
            uint64_t r = e & ~bit;
            if (r == 0) incl_dead = true;  // edge fully selected; branch dies
            else incl.push_back(r);
        } else {
            excl.push_back(e);
            incl.push_back(e);
        }
    }
    uint64_t rest = covered & ~bit;
    mpz_class total = b * weighted_count(rest, std::move(excl), a, b, ab);
    if (!incl_dead && a != 0) total += a * weighted_count(rest, std::move(incl), a, b, ab);
    return scale * total;
}

// Wrapper handling free vertices at top level correctly.
mpz_class weighted_count_root(const Hypergraph& h, const mpz_class& a, const mpz_class& b) {
    mpz_class ab = a + b;
    uint64_t avail = h.vertex_count() == 64 ? ~uint64_t(0) : (uint64_t(1) << h.vertex_count()) - 1;
    return weighted_count(avail, edge_masks(h), a, b, ab);
}

uint64_t splitmix64(uint64_t& x) {
    uint64_t z = (x += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace

int exact_guard_n() {
    if (const char* env = std::getenv("CONTAINER_LAB_GUARD_N")) {
        int v = std::atoi(env);
        if (v > 0) return std::min(v, 64);
    }
    return 24;
}

bool for_each_independent_set(const Hypergraph& h, const std::function<bool(const VertexSet&)>& fn) {
    int n = h.vertex_count();
    const auto& edges = h.edges();
    // remaining[e] = #vertices of edge e not yet added; 0 means violated
    std::vector<int> remaining(edges.size());
    std::vector<std::vector<int>> by_vertex(n);
    for (size_t i = 0; i < edges.size(); ++i) {
        remaining[i] = edges[i].size();
        for (int v : edges[i].elements()) by_vertex[v].push_back(int(i));
    }
    VertexSet current(n);
    std::function<bool(int)> rec = [&](int v) -> bool {
        if (v == n) return fn(current);
        if (!rec(v + 1)) return false;  // exclude v
        bool ok = true;
        for (int ei : by_vertex[v])
            if (remaining[ei] == 1) { ok = false; break; }
        if (ok) {
            for (int ei : by_vertex[v]) --remaining[ei];
            current.add(v);
            bool cont = rec(v + 1);
            current.remove(v);
            for (int ei : by_vertex[v]) ++remaining[ei];
            if (!cont) return false;
        }
        return true;
    };
    return rec(0);
}

std::vector<VertexSet> independent_sets(const Hypergraph& h, int guard) {
    check_guard(h, effective_guard(guard), "independent_sets");
    std::vector<VertexSet> out;
    for_each_independent_set(h, [&](const VertexSet& s) {
        out.push_back(s);
        return true;
    });
    std::sort(out.begin(), out.end());
    return out;
}

PartitionEvaluation partition_function(const Hypergraph& h, const Rational& lambda, int guard) {
    if (lambda < 0) throw std::domain_error("partition_function: lambda < 0");
    check_guard(h, effective_guard(guard), "partition_function");
    mpz_class a = lambda.get_num(), b = lambda.get_den();
    mpz_class w = weighted_count_root(h, a, b);
    Rational z(w);
    mpz_class bn;
    mpz_pow_ui(bn.get_mpz_t(), b.get_mpz_t(), h.vertex_count());
    z /= Rational(bn);
    z.canonicalize();
    return {z, h.vertex_count(), lambda};
}

Rational prob_independent(const Hypergraph& h, const Rational& p, int guard) {
    if (p < 0 || p > 1) throw std::domain_error("prob_independent: p outside [0,1]");
    if (p == 1) {
        if (!h.edges().empty()) throw std::domain_error("prob_independent: p=1 with nonempty hypergraph");
        return 1;
    }
    check_guard(h, effective_guard(guard), "prob_independent");
    mpz_class c = p.get_num(), d = p.get_den();
    mpz_class w = weighted_count_root(h, c, d - c);
    mpz_class dn;
    mpz_pow_ui(dn.get_mpz_t(), d.get_mpz_t(), h.vertex_count());
    Rational r(w);
    r /= Rational(dn);
    r.canonicalize();
    return r;
}

namespace {

// numerator of Pr(L subset V_p and independent), times den(p)^n
mpz_class joint_numerator(const Hypergraph& h, const Rational& p, const VertexSet& l) {
    if (!is_independent(h, l)) return 0;
    auto [stripped, had_empty] = strip_link(h, l);
    (void)had_empty;  // impossible: L independent
    mpz_class c = p.get_num(), d = p.get_den();
    mpz_class ab = d;  // c + (d - c)
    uint64_t avail = (h.vertex_count() == 64 ? ~uint64_t(0) : (uint64_t(1) << h.vertex_count()) - 1) &
                     ~l.as_mask64();
    std::vector<uint64_t> es;
    for (const auto& e : stripped.edges()) es.push_back(e.as_mask64());
    mpz_class w = weighted_count(avail, std::move(es), c, d - c, ab);
    mpz_class cl;
    mpz_pow_ui(cl.get_mpz_t(), c.get_mpz_t(), l.size());
    return cl * w;
}

}  // namespace

Rational conditional_subset_prob(const Hypergraph& h, const Rational& p, const VertexSet& l, int guard) {
    if (p <= 0 || p >= 1) throw std::domain_error("conditional_subset_prob: need 0 < p < 1");
    check_guard(h, effective_guard(guard), "conditional_subset_prob");
    mpz_class c = p.get_num(), d = p.get_den();
    mpz_class denom = weighted_count_root(h, c, d - c);  // > 0: empty set independent
    Rational r(joint_numerator(h, p, l));
    r /= Rational(denom);
    r.canonicalize();
    return r;
}

Rational conditional_expected_size(const Hypergraph& h, const Rational& p, int guard) {
    if (p <= 0 || p >= 1) throw std::domain_error("conditional_expected_size: need 0 < p < 1");
    check_guard(h, effective_guard(guard), "conditional_expected_size");
    mpz_class c = p.get_num(), d = p.get_den();
    mpz_class denom = weighted_count_root(h, c, d - c);
    mpz_class total = 0;
    for (int v = 0; v < h.vertex_count(); ++v) {
        VertexSet l(h.vertex_count());
        l.add(v);
        total += joint_numerator(h, p, l);
    }
    Rational r(total);
    r /= Rational(denom);
    r.canonicalize();
    return r;
}

Rational prob_union_independent(const Hypergraph& h, const Rational& p, const VertexSet& s, const VertexSet& w,
                                int guard) {
    if (p < 0 || p >= 1) throw std::domain_error("prob_union_independent: need 0 <= p < 1");
    if (!is_independent(h, s)) return 0;
    int wsize = w.size();
    if (wsize > effective_guard(guard) || h.vertex_count() > 64)
        throw std::runtime_error("prob_union_independent: guard exceeded");
    mpz_class c = p.get_num(), d = p.get_den();
    std::vector<uint64_t> es;
    for (const auto& e : h.edges()) {
        VertexSet r = e.minus(s);
        if (!r.subset_of(w)) continue;  // cannot be realized inside W
        es.push_back(r.as_mask64());
    }
    mpz_class ab = d;
    mpz_class num = weighted_count(w.as_mask64(), std::move(es), c, d - c, ab);
    mpz_class dn;
    mpz_pow_ui(dn.get_mpz_t(), d.get_mpz_t(), wsize);
    Rational r(num);
    r /= Rational(dn);
    r.canonicalize();
    return r;
}

McEstimate mc_prob_independent(const Hypergraph& h, const Rational& p, long samples, uint64_t seed) {
    if (samples < 1) throw std::invalid_argument("mc_prob_independent: samples < 1");
    if (p < 0 || p > 1) throw std::domain_error("mc_prob_independent: p outside [0,1]");
    // threshold = floor(p * 2^64); keep-v test is rnd < threshold
    mpz_class t = (mpz_class(p.get_num()) << 64) / p.get_den();
    bool always = t >= (mpz_class(1) << 64);
    uint64_t threshold = always ? 0 : mpz_get_ui(t.get_mpz_t());
    int n = h.vertex_count();
    long hits = 0;
    for (long k = 0; k < samples; ++k) {
        uint64_t state = seed ^ (0x2545f4914f6cdd1dULL * (uint64_t(k) + 1));
        VertexSet vp(n);
        for (int v = 0; v < n; ++v) {
            uint64_t r = splitmix64(state);
            if (always || r < threshold) vp.add(v);
        }
        if (is_independent(h, vp)) ++hits;
    }
    McEstimate est;
    est.samples = samples;
    est.seed = seed;
    est.estimate = double(hits) / double(samples);
    est.half_width = 1.96 * std::sqrt(est.estimate * (1.0 - est.estimate) / double(samples));
    return est;
}

std::vector<Rational> conditional_marginals(const Hypergraph& h, const Rational& p, int guard) {
    if (p <= 0 || p >= 1) throw std::domain_error("conditional_marginals: need 0 < p < 1");
    check_guard(h, effective_guard(guard), "conditional_marginals");
    mpz_class c = p.get_num(), d = p.get_den();
    mpz_class denom = weighted_count_root(h, c, d - c);
    std::vector<Rational> out(h.vertex_count());
    for (int v = 0; v < h.vertex_count(); ++v) {
        VertexSet l(h.vertex_count());
        l.add(v);
        Rational r(joint_numerator(h, p, l));
        r /= Rational(denom);
        r.canonicalize();
        out[v] = r;
    }
    return out;
}

std::vector<mpz_class> superset_joint_table(const Hypergraph& h, const Rational& p, int guard) {
    check_guard(h, effective_guard(guard), "superset_joint_table");
    int n = h.vertex_count();
    size_t size = size_t(1) << n;
    mpz_class c = p.get_num(), q = p.get_den() - p.get_num();
    std::vector<mpz_class> cpow(n + 1), qpow(n + 1);
    cpow[0] = 1;
    qpow[0] = 1;
    for (int i = 1; i <= n; ++i) {
        cpow[i] = cpow[i - 1] * c;
        qpow[i] = qpow[i - 1] * q;
    }
    // dependent-mask propagation: edge masks and all their supersets
    std::vector<uint8_t> dep(size, 0);
    for (const auto& e : h.edges()) dep[e.as_mask64()] = 1;
    for (int b = 0; b < n; ++b) {
        uint64_t bit = uint64_t(1) << b;
        for (uint64_t m = 0; m < size; ++m)
            if (!(m & bit) && dep[m]) dep[m | bit] = 1;
    }
    std::vector<mpz_class> g(size);
    for (uint64_t m = 0; m < size; ++m)
        if (!dep[m]) {
            int k = std::popcount(m);
            g[m] = cpow[k] * qpow[n - k];
        }
    // superset-sum transform
    for (int b = 0; b < n; ++b) {
        uint64_t bit = uint64_t(1) << b;
        for (uint64_t m = 0; m < size; ++m)
            if (!(m & bit)) g[m] += g[m | bit];
    }
    return g;
}

}  // namespace clab
