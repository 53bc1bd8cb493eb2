#include "clab/verify.hpp"

#include <unordered_map>

#include "clab/bounds.hpp"
#include "clab/certified.hpp"
#include "clab/exact_prob.hpp"

namespace clab {

namespace {

// Aggregates one kind of check over many rounds/entries: pass/fail counts
// plus the first failing witness (reports stay readable on large families).
struct Agg {
    long total = 0, failed = 0;
    std::string first;
    template <class W>
    void check(bool ok, W witness) {
        ++total;
        if (!ok && failed++ == 0) first = witness();
    }
    void into(VerificationReport& rep, const std::string& label) const {
        if (failed)
            rep.add(label, false, first + (failed > 1 ? " (+" + std::to_string(failed - 1) + " more)" : ""));
        else
            rep.add(label, true, std::to_string(total) + " checks");
    }
};

std::string round_tag(int round) { return "round " + std::to_string(round); }

Rational tail_weight(const Hypergraph& h, const Rational& p) {
    Rational w = 0;
    for (const auto& e : h.edges())
        if (e.size() >= 2) w += rat_pow(p, e.size());
    return w;
}

// branch set F_i of the cover round
std::vector<VertexSet> cover_branch_set(const Hypergraph& h_i, int s, const VertexSet& l, Branch branch) {
    std::vector<VertexSet> f;
    if (branch == Branch::InsideI) {
        for (const auto& e : h_i.edges())
            if (e.size() == s && l.subset_of(e)) f.push_back(e.minus(l));
    } else {
        f.push_back(l);
    }
    return f;
}

}  // namespace

VerificationReport verify_cover_run(const Hypergraph& h, const AlgorithmParams& params0,
                                    const std::vector<VertexSet>& inputs) {
    AlgorithmParams params = params0;
    params.mode = BuilderMode::Cover;
    const int r = h.rank();
    const long n = h.vertex_count();
    const Rational p = params.p;

    Agg antichain, growth, fresh_branch, uniform_branch, link_cap, stop_sound, sandwich;
    RoundObserver obs = [&](int round, const Hypergraph& h_i, const VertexSet& s_i,
                            const std::optional<std::pair<std::optional<int>, VertexSet>>& sel,
                            const std::vector<const VertexSet*>& ins) {
        antichain.check(is_antichain(h_i), [&] { return round_tag(round) + ": H_i not an antichain"; });
        VertexSet c_i = unblocked_vertices(h_i);
        for (const VertexSet* in : ins)
            sandwich.check(s_i.subset_of(*in) && in->subset_of(c_i) && is_independent(h_i, *in),
                           [&] { return round_tag(round) + ": input " + in->to_string() + " escapes S_i/C_i"; });
        // link weights of slices strictly below the rank stay capped
        for (int s = 2; s < r; ++s) {
            std::unordered_map<VertexSet, int, VertexSetHash> deg;
            for (const auto& e : h_i.edges()) {
                if (e.size() != s) continue;
                auto vs = e.elements();
                for (unsigned mask = 1; mask + 1 < (1u << s); ++mask) {
                    VertexSet t(h_i.vertex_count());
                    for (int i = 0; i < s; ++i)
                        if (mask & (1u << i)) t.add(vs[i]);
                    ++deg[t];
                }
            }
            for (const auto& [t, d] : deg)
                link_cap.check(Rational(d) * rat_pow(p, s - t.size()) <= rat(1, 2L * r), [&] {
                    return round_tag(round) + ": slice " + std::to_string(s) + " link of " + t.to_string() +
                           " too heavy";
                });
        }
        if (!sel) {
            Rational w = tail_weight(h_i, p);
            bool ok;
            if (params.stop_rule == StopRule::Standard) {
                ok = w <= p * c_i.size();
            } else {
                ok = Rational(c_i.size()) <= (1 - Rational(1) / (2 * params.stop_k)) * n ||
                     (r >= 2 && w <= (log_r_lower_bound(r) / r) * p * c_i.size());
            }
            stop_sound.check(ok, [&] { return round_tag(round) + ": stop fired with heavy tail weight"; });
            return;
        }
        const int s = *sel->first;
        const VertexSet& l = sel->second;
        bool any_inside = false, any_outside = false;
        for (const VertexSet* in : ins) (l.subset_of(*in) ? any_inside : any_outside) = true;
        for (Branch branch : {Branch::InsideI, Branch::OutsideI}) {
            if (branch == Branch::InsideI ? !any_inside : !any_outside) continue;
            auto f = cover_branch_set(h_i, s, l, branch);
            int u = f.empty() ? -1 : f.front().size();
            bool uniform = u >= 1 && u < s;
            for (const auto& fe : f) uniform = uniform && fe.size() == u;
            uniform_branch.check(uniform, [&] { return round_tag(round) + ": F_i not uniform below s"; });
            for (const auto& fe : f)
                fresh_branch.check(is_independent(h_i, fe),
                                   [&] { return round_tag(round) + ": F_i member already in the up-set"; });
            Hypergraph h_next = cover_update(h_i, std::move(f));
            growth.check(covers(h_next, h_i) && !covers(h_i, h_next),
                         [&] { return round_tag(round) + ": up-set did not strictly grow"; });
        }
    };

    auto family = build_family_observed(h, params, inputs, obs);

    VerificationReport rep;
    rep.name = "cover-run";
    antichain.into(rep, "antichain-each-round");
    growth.into(rep, "upset-strict-growth");
    fresh_branch.into(rep, "branch-set-fresh");
    uniform_branch.into(rep, "branch-set-uniform");
    link_cap.into(rep, "link-weight-cap");
    stop_sound.into(rep, "stop-test-sound");
    sandwich.into(rep, "input-sandwich");

    Rational s_limit = params.stop_rule == StopRule::Standard
                           ? Rational(8L * r * r) * p * n
                           : (r >= 2 ? Rational(16L * r) * log_r_upper_bound(r) * p * n : Rational(0));
    Agg cover_prop, edge_sizes, weight_bound, fp_bound, s_in_c;
    for (const auto& entry : family) {
        const Hypergraph& g = *entry.cover;
        cover_prop.check(covers(g, restrict(h, entry.container)),
                         [&] { return "fingerprint " + entry.fingerprint.to_string() + ": G misses an edge of H[C]"; });
        edge_sizes.check(g.edge_count() == 0 || g.min_edge_size() >= 2,
                         [&] { return "fingerprint " + entry.fingerprint.to_string() + ": singleton in G"; });
        weight_bound.check(weight(g, p) <= p * entry.container.size(), [&] {
            return "fingerprint " + entry.fingerprint.to_string() + ": w_p(G) = " + format_rational(weight(g, p));
        });
        fp_bound.check(Rational(entry.fingerprint.size()) <= s_limit, [&] {
            return "fingerprint " + entry.fingerprint.to_string() + ": |S| exceeds " + format_rational(s_limit);
        });
        s_in_c.check(entry.fingerprint.subset_of(entry.container),
                     [&] { return "fingerprint " + entry.fingerprint.to_string() + " not inside its container"; });
    }
    cover_prop.into(rep, "cover-property");
    edge_sizes.into(rep, "edge-sizes");
    weight_bound.into(rep, "weight-bound");
    fp_bound.into(rep, "fingerprint-bound");
    s_in_c.into(rep, "fingerprint-in-container");
    rep.add("determinism", true, std::to_string(family.size()) + " fingerprints; reproduction pass succeeded");
    return rep;
}

VerificationReport verify_hardcore_run(const Hypergraph& h, const AlgorithmParams& params0,
                                       const std::vector<VertexSet>& inputs) {
    AlgorithmParams params = params0;
    params.mode = BuilderMode::Hardcore;
    const long n = h.vertex_count();

    Agg sandwich, transfer, round_cap;
    RoundObserver obs = [&](int round, const Hypergraph& h_i, const VertexSet& s_i,
                            const std::optional<std::pair<std::optional<int>, VertexSet>>& sel,
                            const std::vector<const VertexSet*>& ins) {
        for (const VertexSet* in : ins)
            sandwich.check(s_i.subset_of(*in) && is_independent(h_i, *in),
                           [&] { return round_tag(round) + ": input " + in->to_string() + " escapes S_i"; });
        round_cap.check(round <= n, [&] { return round_tag(round) + " exceeds |V|"; });
        if (n <= 12) {
            // independence is invariant under adjoining the fingerprint
            std::vector<uint64_t> masks;
            for (const auto& e : h_i.edges()) masks.push_back(e.as_mask64());
            uint64_t s_mask = s_i.as_mask64();
            auto ind = [&](uint64_t m) {
                for (uint64_t em : masks)
                    if ((em & m) == em) return false;
                return true;
            };
            bool ok = true;
            for (uint64_t m = 0; m < (uint64_t(1) << n) && ok; ++m) ok = ind(m) == ind(m | s_mask);
            transfer.check(ok, [&] { return round_tag(round) + ": independence transfer failed"; });
        }
    };

    auto family = build_family_observed(h, params, inputs, obs);

    VerificationReport rep;
    rep.name = "hardcore-run";
    sandwich.into(rep, "input-sandwich");
    transfer.into(rep, "independence-transfer");
    round_cap.into(rep, "round-count");

    Agg fp_bound, occupancy;
    for (const auto& entry : family) {
        fp_bound.check(params.delta * entry.fingerprint.size() <= params.p * n, [&] {
            return "fingerprint " + entry.fingerprint.to_string() + ": delta|S| > p|V|";
        });
        // Pr(S union C_p independent) >= (1-p)^{delta |C \ S|}, via the
        // power transform on the rational exponent
        Rational t = params.delta * entry.container.minus(entry.fingerprint).size();
        Rational pr = prob_union_independent(h, params.p, entry.fingerprint, entry.container, params.guard);
        int cmp = cert_cmp_pow(pr, t.get_den(), 1 - params.p, t.get_num());
        occupancy.check(cmp >= 0, [&] {
            return "fingerprint " + entry.fingerprint.to_string() + ": Pr = " + format_rational(pr) +
                   " below (1-p)^" + format_rational(t);
        });
    }
    fp_bound.into(rep, "fingerprint-bound");
    occupancy.into(rep, "occupancy-bound");
    rep.add("determinism", true, std::to_string(family.size()) + " fingerprints; reproduction pass succeeded");
    return rep;
}

VerificationReport verify_interpolating_run(const Hypergraph& h, const AlgorithmParams& params0,
                                            const std::vector<VertexSet>& inputs) {
    AlgorithmParams params = params0;
    params.mode = BuilderMode::Interpolating;
    const long n = h.vertex_count();

    Agg sandwich;
    RoundObserver obs = [&](int round, const Hypergraph& h_i, const VertexSet& s_i,
                            const std::optional<std::pair<std::optional<int>, VertexSet>>& sel,
                            const std::vector<const VertexSet*>& ins) {
        if (sel) return;  // outputs carry the guarantees; check the sandwich at the stop
        VertexSet c = unblocked_vertices(h_i);
        for (const VertexSet* in : ins)
            sandwich.check(s_i.subset_of(*in) && in->subset_of(c),
                           [&] { return round_tag(round) + ": input " + in->to_string() + " escapes S/C"; });
    };

    auto family = build_family_observed(h, params, inputs, obs);

    VerificationReport rep;
    rep.name = "interpolating-run";
    sandwich.into(rep, "input-sandwich");

    Agg cover_prop, edge_shape, fp_bound, conditional;
    Rational bar_base = (1 - params.delta) * params.p;
    for (const auto& entry : family) {
        const Hypergraph& g = *entry.cover;
        cover_prop.check(covers(g, restrict(h, entry.container)),
                         [&] { return "fingerprint " + entry.fingerprint.to_string() + ": G misses an edge of H[C]"; });
        for (const auto& e : g.edges())
            edge_shape.check(e.size() >= 2 && !e.intersects(entry.fingerprint), [&] {
                return "fingerprint " + entry.fingerprint.to_string() + ": bad cover edge " + e.to_string();
            });
        fp_bound.check(params.delta * entry.fingerprint.size() <= params.p * n, [&] {
            return "fingerprint " + entry.fingerprint.to_string() + ": |S| > p|V|/delta";
        });
        // conditional containment for every independent set of G inside C:
        // Pr(L <= C_p | C_p independent in G) >= ((1-delta)p)^{|L|}
        std::vector<VertexSet> blocked = g.edges();
        for (int v = 0; v < n; ++v)
            if (!entry.container.contains(v)) blocked.push_back(VertexSet(int(n), {v}));
        Hypergraph blocker(int(n), std::move(blocked));
        std::vector<mpz_class> table = superset_joint_table(blocker, params.p, params.guard);
        const mpz_class& total = table[0];
        for (uint64_t mask = 1; mask < table.size(); ++mask) {
            if (table[mask] == 0) continue;  // not independent inside C
            Rational bar = rat_pow(bar_base, std::popcount(mask));
            conditional.check(table[mask] * bar.get_den() >= bar.get_num() * total, [&] {
                return "fingerprint " + entry.fingerprint.to_string() + ": L = " +
                       VertexSet::from_mask64(int(n), mask).to_string() + " too unlikely";
            });
        }
    }
    cover_prop.into(rep, "cover-property");
    edge_shape.into(rep, "edge-shape");
    fp_bound.into(rep, "fingerprint-bound");
    conditional.into(rep, "conditional-containment");
    rep.add("determinism", true, std::to_string(family.size()) + " fingerprints; reproduction pass succeeded");
    return rep;
}

VerificationReport verify_constructive_cover(const Hypergraph& h, const Rational& p) {
    VerificationReport rep;
    rep.name = "constructive-cover";
    Hypergraph g = construct_cover(h, p);
    rep.add("cover-property", covers(g, h), std::to_string(g.edge_count()) + " cover sets");
    rep.add("antichain", is_antichain(g));
    const int r = h.rank();
    Rational t = r > 0 ? Rational(weight(g, p / (4 * r * r)) / 8) : Rational(0);
    Rational pr = prob_independent(h, p);
    rep.add("certified-probability-bound", cert_leq_exp_neg(pr, t),
            "Pr = " + format_rational(pr) + " vs exp(-" + format_rational(t) + ")");
    return rep;
}

VerificationReport verify_harris(const Hypergraph& h, const Hypergraph& g, const Rational& p) {
    VerificationReport rep;
    rep.name = "harris";
    HarrisBound hb = harris_bound(g, p);
    rep.add("cover-property", covers(g, h));
    Rational pr_g = prob_independent(g, p);
    Rational pr_h = prob_independent(h, p);
    rep.add("product-lower-bound", pr_g >= hb.product,
            format_rational(pr_g) + " >= " + format_rational(hb.product));
    rep.add("cover-monotone", pr_h >= pr_g, format_rational(pr_h) + " >= " + format_rational(pr_g));
    return rep;
}

VerificationReport verify_janson(const Hypergraph& g, const Rational& p) {
    VerificationReport rep;
    rep.name = "janson";
    JansonBound jb = janson_bound(g, p);
    Rational pr = prob_independent(g, p);
    rep.add("certified-upper-bound", pr <= jb.bound,
            "Pr = " + format_rational(pr) + ", bound <= " + format_rational(jb.bound));
    if (g.edge_count() > 0)
        rep.add("exponent-dominates", cert_leq_exp_neg(pr, jb.mu * jb.mu / (2 * jb.delta_star)),
                "mu = " + format_rational(jb.mu) + ", delta* = " + format_rational(jb.delta_star));
    return rep;
}

VerificationReport verify_lymb(const Hypergraph& h) {
    VerificationReport rep;
    rep.name = "lymb";
    Hypergraph a = minimal_elements(h);
    rep.add("antichain", is_antichain(a), std::to_string(a.edge_count()) + " minimal sets");
    Rational sum = a.edge_count() ? lymb_sum(a) : Rational(0);
    rep.add("sum-at-most-one", sum <= 1, format_rational(sum));
    return rep;
}

VerificationReport verify_key_inequality(const Hypergraph& h, const Rational& p) {
    VerificationReport rep;
    rep.name = "key-inequality";
    KeyInequalityResult res = key_inequality_check(h, p);
    rep.add("holds", res.holds,
            "x = " + format_rational(res.x) + (res.equality ? " (equality)" : ""));
    return rep;
}

}  // namespace clab
