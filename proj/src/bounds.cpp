#include "clab/bounds.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "clab/builders.hpp"
#include "clab/certified.hpp"
#include "clab/exact_prob.hpp"

namespace clab {

namespace {

mpz_class binom(unsigned long n, unsigned long k) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return b;
}

uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Independent sets for arbitrary n (the enumeration guard does not apply to
// the family drivers; the cap protects against family explosions instead).
std::vector<VertexSet> collect_independent_sets(const Hypergraph& h, size_t limit = size_t(1) << 21) {
    std::vector<VertexSet> out;
    bool complete = for_each_independent_set(h, [&](const VertexSet& i) {
        if (out.size() >= limit) return false;
        out.push_back(i);
        return true;
    });
    if (!complete) throw std::runtime_error("independent-set family exceeds the driver cap");
    return out;
}

std::string size_witness(const char* what, long got, const Rational& limit) {
    return std::string(what) + " = " + std::to_string(got) + ", limit = " + format_rational(limit);
}

}  // namespace

HarrisBound harris_bound(const Hypergraph& g, const Rational& p) {
    if (p <= 0 || p >= rat(1, 2)) throw std::domain_error("harris_bound: requires 0 < p < 1/2");
    HarrisBound out;
    out.w = weight(g, p);
    out.product = 1;
    for (const auto& a : g.edges()) out.product *= 1 - rat_pow(p, a.size());
    return out;
}

Rational cover_lambda(int ell, int r) {
    if (ell < 1 || ell > r) throw std::invalid_argument("cover_lambda: ell outside 1..r");
    return rat_pow(rat(1, 4), std::min(ell, r - ell));
}

Hypergraph construct_cover(const Hypergraph& h, const Rational& p) {
    if (h.edge_count() == 0) {
        if (p <= 0 || p >= 1) throw std::domain_error("construct_cover: p outside (0,1)");
        return Hypergraph(h.vertex_count());
    }
    if (!h.is_uniform()) throw std::invalid_argument("construct_cover: H must be uniform");
    const int r = h.rank();
    if (p <= 0 || p * 4 * r >= 1) throw std::domain_error("construct_cover: requires 0 < p < 1/(4r)");

    // degree caps; the floors are >= 1 for every ell because p < 1/(4r)
    std::vector<mpz_class> floor_cap(r + 1);
    for (int ell = 1; ell <= r; ++ell) {
        Rational cap = cover_lambda(ell, r) * rat_pow(1 / p, r - ell) / Rational(binom(r, ell));
        floor_cap[ell] = cap.get_num() / cap.get_den();
    }

    // greedy maximal subgraph in canonical edge order under the caps
    std::unordered_map<VertexSet, long, VertexSetHash> deg;
    std::vector<VertexSet> subsets;
    long picked = 0;
    for (const auto& e : h.edges()) {
        auto vs = e.elements();
        subsets.clear();
        bool fits = true;
        for (unsigned mask = 1; mask < (1u << r) && fits; ++mask) {
            VertexSet t(h.vertex_count());
            for (int i = 0; i < r; ++i)
                if (mask & (1u << i)) t.add(vs[i]);
            auto it = deg.find(t);
            long d = it == deg.end() ? 0 : it->second;
            if (floor_cap[t.size()] < d + 1) fits = false;
            subsets.push_back(std::move(t));
        }
        if (!fits) continue;
        ++picked;
        for (auto& t : subsets) ++deg[std::move(t)];
    }

    // saturated subsets, then their minimal elements
    std::vector<VertexSet> saturated;
    for (const auto& [t, d] : deg)
        if (floor_cap[t.size()] == d) saturated.push_back(t);
    Hypergraph g = minimal_elements(Hypergraph(h.vertex_count(), std::move(saturated)));

    if (!covers(g, h)) throw std::logic_error("construct_cover: result fails to cover H");
    Rational wq = weight(g, p / (4 * r * r));
    if (wq > 2 * Rational(picked) * rat_pow(p, r))
        throw std::logic_error("construct_cover: weight bound violated");
    return g;
}

JansonBound janson_bound(const Hypergraph& g, const Rational& p) {
    if (p < 0 || p > 1) throw std::domain_error("janson_bound: p outside [0,1]");
    JansonBound out;
    if (g.edge_count() == 0) return out;  // mu = 0: trivial bound 1
    const auto& es = g.edges();
    for (const auto& a : es) out.mu += rat_pow(p, a.size());
    for (size_t i = 0; i < es.size(); ++i) {
        out.delta_star += rat_pow(p, es[i].size());  // the A = B term
        for (size_t j = i + 1; j < es.size(); ++j)
            if (es[i].intersects(es[j]))
                out.delta_star += 2 * rat_pow(p, es[i].union_with(es[j]).size());
    }
    out.bound = exp_neg_upper_bound(out.mu * out.mu / (2 * out.delta_star));
    return out;
}

Rational lymb_sum(const Hypergraph& a) {
    if (!is_antichain(a)) throw std::invalid_argument("lymb_sum: edge set is not an antichain");
    Rational sum = 0;
    for (const auto& e : a.edges()) sum += 1 / Rational(binom(a.vertex_count(), e.size()));
    return sum;
}

bool supersaturation_holds(const Hypergraph& h_s, long container_size, const Rational& p) {
    if (h_s.edge_count() == 0) throw std::invalid_argument("supersaturation_holds: empty hypergraph");
    if (!h_s.is_uniform()) throw std::invalid_argument("supersaturation_holds: H_S must be uniform");
    if (container_size < 1) throw std::invalid_argument("supersaturation_holds: container_size < 1");
    const int r = h_s.rank();
    for (int ell = 2; ell <= r; ++ell) {
        Rational rhs = rat_pow(p, ell - 1) * h_s.edge_count() / container_size;
        if (Rational(max_degree(h_s, ell)) >= rhs) return false;
    }
    return true;
}

bool efficient_assumptions_hold(const Hypergraph& h, const EfficientParams& params) {
    if (h.edge_count() == 0) throw std::invalid_argument("efficient_assumptions_hold: empty hypergraph");
    if (!h.is_uniform()) throw std::invalid_argument("efficient_assumptions_hold: H must be uniform");
    const int r = h.rank();
    if (params.tau <= 0 || params.tau >= 1) throw std::invalid_argument("efficient: tau outside (0,1)");
    if (params.k < r) throw std::invalid_argument("efficient: requires K >= r");
    Rational ratio = params.tau / (32 * params.k * r * r);
    Rational per_vertex = Rational(h.edge_count()) / h.vertex_count();
    for (int ell = 1; ell <= r; ++ell)
        if (Rational(max_degree(h, ell)) > params.k * rat_pow(ratio, ell - 1) * per_vertex) return false;
    return true;
}

VerificationReport check_efficient_conclusion(const Hypergraph& h, const EfficientParams& params) {
    if (!efficient_assumptions_hold(h, params))
        throw std::invalid_argument("check_efficient_conclusion: assumptions fail");
    const int r = h.rank();
    const long n = h.vertex_count();

    AlgorithmParams ap;
    ap.mode = BuilderMode::Cover;
    ap.stop_rule = StopRule::Standard;
    ap.p = params.tau / (8 * r * r);
    auto family = build_family(h, ap, collect_independent_sets(h));

    VerificationReport rep;
    rep.name = "efficient-conclusion";
    Rational s_limit = params.tau * n;
    Rational c_limit = (1 - 1 / (2 * params.k)) * n;
    int max_s = 0, max_c = 0;
    bool s_ok = true, c_ok = true;
    for (const auto& entry : family) {
        int s = entry.fingerprint.size(), c = entry.container.size();
        max_s = std::max(max_s, s);
        max_c = std::max(max_c, c);
        s_ok = s_ok && Rational(s) <= s_limit;
        c_ok = c_ok && Rational(c) <= c_limit;
    }
    rep.add("family-size", true, std::to_string(family.size()) + " fingerprints");
    rep.add("fingerprint-bound", s_ok, size_witness("max |S|", max_s, s_limit));
    rep.add("container-bound", c_ok, size_witness("max |C|", max_c, c_limit));
    return rep;
}

VerificationReport check_packaged_conclusion(const Hypergraph& h, const Rational& p, int trials, uint64_t seed) {
    AlgorithmParams ap;
    ap.mode = BuilderMode::Cover;
    ap.stop_rule = StopRule::Standard;
    ap.p = p;
    auto family = build_family(h, ap, collect_independent_sets(h));

    VerificationReport rep;
    rep.name = "packaged-conclusion";
    bool cert_ok = true;
    std::string cert_witness;
    std::unordered_set<VertexSet, VertexSetHash> seen;
    long sampled = 0, refuted = 0;
    uint64_t ctr = seed;
    for (const auto& entry : family) {
        const Hypergraph& g = *entry.cover;
        Hypergraph inside = restrict(h, entry.container);
        long c = entry.container.size();
        bool ok = weight(g, p) <= p * c && covers(g, inside) &&
                  (g.edge_count() == 0 || g.min_edge_size() >= 2);
        if (!ok && cert_ok) {
            cert_ok = false;
            cert_witness = "fingerprint " + entry.fingerprint.to_string();
        }
        // spot check per distinct container: sampled subhypergraphs of H[C]
        // must all fail supersaturation
        if (!seen.insert(entry.container).second) continue;
        const auto& edges = inside.edges();
        if (edges.empty()) continue;
        for (int t = 0; t < trials; ++t) {
            std::vector<VertexSet> chosen;
            for (size_t i = 0; i < edges.size(); ++i)
                if (splitmix64(ctr++) & 1) chosen.push_back(edges[i]);
            if (chosen.empty()) chosen.push_back(edges[splitmix64(ctr++) % edges.size()]);
            ++sampled;
            if (!supersaturation_holds(Hypergraph(h.vertex_count(), std::move(chosen)), c, p)) ++refuted;
        }
    }
    rep.add("certificate", cert_ok, cert_ok ? std::to_string(family.size()) + " entries" : cert_witness);
    rep.add("supersaturation-spot-check", refuted == sampled,
            std::to_string(refuted) + "/" + std::to_string(sampled) + " samples refuted");
    return rep;
}

VerificationReport crosscheck_hcl4_implies_hcl1(const Hypergraph& h, const Rational& p) {
    const int r = h.rank();
    if (h.edge_count() > 0 && !h.is_uniform())
        throw std::invalid_argument("crosscheck: H must be uniform");
    VerificationReport rep;
    rep.name = "interpolating-implies-cover";
    if (h.edge_count() == 0) {
        rep.add("trivial", true, "no edges");
        return rep;
    }
    if (p <= 0 || p * 8 * r * r > 1) throw std::domain_error("crosscheck: requires 0 < p <= 1/(8r^2)");

    AlgorithmParams ap;
    ap.mode = BuilderMode::Interpolating;
    ap.p = 2 * r * p;         // density parameter q
    ap.delta = rat(1, 4 * r);
    auto family = build_family(h, ap);

    Rational s_limit = ap.p * h.vertex_count() / ap.delta;  // = 8 r^2 p |V|
    bool cover_ok = true, size_ok = true, weight_ok = true, s_ok = true;
    int max_s = 0;
    Rational max_ratio = 0;  // max of w_p(G_min) / (p |C|)
    for (const auto& entry : family) {
        Hypergraph g = minimal_elements(*entry.cover);
        long c = entry.container.size();
        cover_ok = cover_ok && covers(g, restrict(h, entry.container));
        size_ok = size_ok && (g.edge_count() == 0 || g.min_edge_size() >= 2);
        Rational w = weight(g, p);
        weight_ok = weight_ok && w <= p * c;
        if (c > 0) max_ratio = std::max(max_ratio, Rational(w / (p * c)));
        max_s = std::max(max_s, entry.fingerprint.size());
        s_ok = s_ok && Rational(max_s) <= s_limit;
    }
    rep.add("family-size", true, std::to_string(family.size()) + " fingerprints");
    rep.add("cover-property", cover_ok);
    rep.add("edge-sizes", size_ok);
    rep.add("weight-bound", weight_ok, "max w_p(G)/(p|C|) = " + format_rational(max_ratio));
    rep.add("fingerprint-bound", s_ok, size_witness("max |S|", max_s, s_limit));
    return rep;
}

KeyInequalityResult key_inequality_check(const Hypergraph& h, const Rational& p, int guard) {
    if (p <= 0 || p >= 1) throw std::domain_error("key_inequality_check: p outside (0,1)");
    KeyInequalityResult out;
    out.x = h.vertex_count() - conditional_expected_size(h, p, guard) / p;
    if (out.x < 0) throw std::logic_error("key_inequality_check: negative exponent");
    out.lhs.base = prob_independent(h, p, guard);
    out.lhs.exponent = out.x.get_den();
    out.rhs.base = 1 - p;
    out.rhs.exponent = out.x.get_num();
    int cmp = cert_cmp_pow(out.lhs.base, out.lhs.exponent, out.rhs.base, out.rhs.exponent);
    out.holds = cmp >= 0;
    out.equality = cmp == 0;
    return out;
}

}  // namespace clab
