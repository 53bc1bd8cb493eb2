#include "clab/builders.hpp"

#include <algorithm>
#include <climits>
#include <map>
#include <stdexcept>
#include <unordered_map>
#include <utility>

#include "clab/certified.hpp"

namespace clab {
namespace {

// w_p(H^{>1}) without materializing the slice: group edges by size.
Rational weight_tail(const Hypergraph& h, const Rational& p) {
    std::map<int, long> count_by_size;
    for (const auto& e : h.edges())
        if (e.size() >= 2) ++count_by_size[e.size()];
    Rational w = 0;
    for (auto [s, cnt] : count_by_size) w += Rational(cnt) * rat_pow(p, s);
    return w;
}

// Everything the cover round needs from H_i, gathered in one streaming pass:
// the >1-slice weight, |C_i|, and per-vertex degrees of each small slice.
struct CoverScan {
    Rational w_tail;
    int c_size = 0;
    std::vector<std::vector<int>> deg;  // deg[s][v] over the s-slice, 2 <= s <= r
};

CoverScan cover_scan(const Hypergraph& h, const Rational& p, int r) {
    int n = h.vertex_count();
    CoverScan scan;
    scan.deg.assign(size_t(r) + 1, {});
    for (int s = 2; s <= r; ++s) scan.deg[s].assign(n, 0);
    std::vector<long> hist;
    VertexSet blocked(n);
    for (const auto& e : h.edges()) {
        int sz = e.size();
        if (sz == 1) {
            blocked.add(e.min_element());
            continue;
        }
        if (int(hist.size()) <= sz) hist.resize(sz + 1, 0);
        ++hist[sz];
        if (sz <= r) e.for_each_element([&](int v) { ++scan.deg[sz][v]; });
    }
    scan.w_tail = 0;
    for (size_t sz = 2; sz < hist.size(); ++sz)
        if (hist[sz]) scan.w_tail += Rational(hist[sz]) * rat_pow(p, sz);
    scan.c_size = n - blocked.size();
    return scan;
}

long watchdog_limit(int n) {
    long limit = 1;
    for (int i = 0; i < n; ++i) {
        if (limit > (LONG_MAX / 3)) return LONG_MAX;
        limit *= 3;
    }
    return limit;
}

struct Selection {
    std::optional<int> s;  // cover mode only
    VertexSet l;
};

// Shared per-build context: original-instance data the rounds refer back to.
struct BuildContext {
    AlgorithmParams params;
    int n = 0;
    int r = 0;              // rank of the original hypergraph (cover mode)
    Rational logr_lb;       // lower bound on log r (logr stop rule)
    int guard = -1;
};

void validate(const Hypergraph& h, const AlgorithmParams& params, BuildContext& ctx) {
    ctx.params = params;
    ctx.n = h.vertex_count();
    ctx.r = h.rank();
    ctx.guard = params.guard;
    if (params.p <= 0 || params.p > 1) throw std::invalid_argument("builders: need 0 < p <= 1");
    if (params.mode == BuilderMode::Cover) {
        if (!h.is_uniform()) throw std::invalid_argument("cover mode requires a uniform hypergraph");
        if (ctx.r >= 2 && params.p > rat(1, 8L * ctx.r * ctx.r))
            throw std::invalid_argument("cover mode requires p <= 1/(8r^2)");
        if (params.stop_rule == StopRule::LogR) {
            if (params.stop_k < ctx.r) throw std::invalid_argument("log-r stop rule requires K >= r");
            if (ctx.r >= 2) ctx.logr_lb = log_r_lower_bound(ctx.r);
        }
    } else {
        if (!(params.p <= params.delta && params.delta < 1))
            throw std::invalid_argument("hardcore/interpolating modes require 0 < p <= delta < 1");
    }
}

void validate_input(const Hypergraph& h, const VertexSet& input) {
    if (input.universe() != h.vertex_count()) throw std::invalid_argument("input set universe mismatch");
    if (!is_independent(h, input)) throw std::invalid_argument("input set is not independent");
}

bool cover_stop(const Rational& w, int c_size, const BuildContext& ctx) {
    Rational pc = ctx.params.p * Rational(c_size);
    if (ctx.params.stop_rule == StopRule::Standard) return w <= pc;
    // modified rule: tighter weight target, early exit once |C| is small enough
    if (Rational(c_size) <= (1 - Rational(1) / (2 * ctx.params.stop_k)) * Rational(ctx.n)) return true;
    if (ctx.r < 2) return w <= 0;
    return w <= (ctx.logr_lb / ctx.r) * pc;
}

// Cover-mode round step: stop test, then the (s, L) selector; the selector
// must succeed whenever the stop test fails.  The 2-slice case is resolved
// straight from the scan (its witnesses are exactly the heavy singletons and
// cannot extend); anything else falls back to the full selector.
std::optional<Selection> cover_step(const Hypergraph& h_i, const BuildContext& ctx) {
    CoverScan scan = cover_scan(h_i, ctx.params.p, ctx.r);
    if (cover_stop(scan.w_tail, scan.c_size, ctx)) return std::nullopt;
    if (ctx.r >= 2) {
        Rational threshold = rat(1, 4L * ctx.r);
        const std::vector<int>& deg2 = scan.deg[2];
        for (int v = 0; v < ctx.n; ++v) {
            if (deg2[v] == 0) continue;
            if (Rational(deg2[v]) * ctx.params.p < threshold) continue;
            VertexSet l(ctx.n, {v});
            if (h_i.has_edge(l)) continue;
            return Selection{2, l};
        }
    }
    auto sel = select_cover_branch(h_i, ctx.params.p, ctx.r);
    if (!sel) throw std::logic_error("cover selector found no branch although the stop test failed");
    return Selection{sel->first, sel->second};
}

std::optional<Selection> hardcore_step(const Hypergraph& h_i, const VertexSet& s_i, const BuildContext& ctx) {
    auto v = select_hardcore_vertex(h_i, ctx.params.p, ctx.params.delta, s_i, ctx.guard);
    if (!v) return std::nullopt;
    VertexSet l(ctx.n);
    l.add(*v);
    return Selection{std::nullopt, l};
}

std::optional<Selection> interpolating_step(const Hypergraph& h_i, const VertexSet& s_i, const BuildContext& ctx) {
    auto l = select_interpolating_set(h_i, ctx.params.p, ctx.params.delta, s_i, ctx.guard);
    if (!l) return std::nullopt;
    return Selection{std::nullopt, *l};
}

std::optional<Selection> step(const Hypergraph& h_i, const VertexSet& s_i, const BuildContext& ctx) {
    switch (ctx.params.mode) {
        case BuilderMode::Cover: return cover_step(h_i, ctx);
        case BuilderMode::Hardcore: return hardcore_step(h_i, s_i, ctx);
        case BuilderMode::Interpolating: return interpolating_step(h_i, s_i, ctx);
    }
    throw std::logic_error("unknown builder mode");
}

Hypergraph apply_cover(const Hypergraph& h_i, const Selection& sel, Branch branch) {
    std::vector<VertexSet> f;
    if (branch == Branch::InsideI) {
        for (const auto& e : h_i.edges())
            if (e.size() == *sel.s && sel.l.subset_of(e)) f.push_back(e.minus(sel.l));
    } else {
        f.push_back(sel.l);
    }
    return cover_update(h_i, std::move(f));
}

Hypergraph apply_hardcore(const Hypergraph& h_i, const Selection& sel, Branch branch) {
    std::vector<VertexSet> next = h_i.edges();
    int v = sel.l.min_element();
    if (branch == Branch::InsideI) {
        for (const auto& e : h_i.edges())
            if (e.contains(v)) next.push_back(e.minus(sel.l));
    } else {
        next.push_back(sel.l);
    }
    return Hypergraph(h_i.vertex_count(), std::move(next));
}

Hypergraph apply_interpolating(const Hypergraph& h_i, const Selection& sel, Branch branch) {
    if (branch == Branch::InsideI) {
        auto [stripped, had_empty] = strip_link(h_i, sel.l);
        if (had_empty) throw std::logic_error("interpolating inside-branch stripped a contained edge");
        return stripped;
    }
    std::vector<VertexSet> next = h_i.edges();
    next.push_back(sel.l);
    return Hypergraph(h_i.vertex_count(), std::move(next));
}

Hypergraph apply(const Hypergraph& h_i, const Selection& sel, Branch branch, const BuildContext& ctx) {
    switch (ctx.params.mode) {
        case BuilderMode::Cover: return apply_cover(h_i, sel, branch);
        case BuilderMode::Hardcore: return apply_hardcore(h_i, sel, branch);
        case BuilderMode::Interpolating: return apply_interpolating(h_i, sel, branch);
    }
    throw std::logic_error("unknown builder mode");
}

// Consuming variant for the straight-line continuation: cover mode recycles
// the old edge buffer instead of reallocating every round.
Hypergraph apply_consume(Hypergraph&& h_i, const Selection& sel, Branch branch, const BuildContext& ctx) {
    if (ctx.params.mode == BuilderMode::Cover) {
        std::vector<VertexSet> f;
        if (branch == Branch::InsideI) {
            for (const auto& e : h_i.edges())
                if (e.size() == *sel.s && sel.l.subset_of(e)) f.push_back(e.minus(sel.l));
        } else {
            f.push_back(sel.l);
        }
        return cover_update(std::move(h_i), std::move(f));
    }
    return apply(h_i, sel, branch, ctx);
}

std::pair<VertexSet, std::optional<Hypergraph>> finalize(const Hypergraph& h_j, const BuildContext& ctx) {
    VertexSet c = unblocked_vertices(h_j);
    switch (ctx.params.mode) {
        case BuilderMode::Cover: return {c, slice(h_j, 2, std::max(2, h_j.rank()))};
        case BuilderMode::Hardcore: return {c, std::nullopt};
        case BuilderMode::Interpolating: return {c, restrict(h_j, c)};
    }
    throw std::logic_error("unknown builder mode");
}

std::optional<std::pair<std::optional<int>, VertexSet>> observer_view(const std::optional<Selection>& sel) {
    if (!sel) return std::nullopt;
    return std::make_pair(sel->s, sel->l);
}

ContainerOutput run_single(const Hypergraph& h, const AlgorithmParams& params, const VertexSet& input,
                           const RoundObserver* observer) {
    BuildContext ctx;
    validate(h, params, ctx);
    validate_input(h, input);
    Hypergraph h_i = h;
    VertexSet s_i(ctx.n);
    ContainerOutput out;
    long limit = watchdog_limit(ctx.n);
    int round = 0;
    std::vector<const VertexSet*> the_input{&input};
    while (true) {
        auto sel = step(h_i, s_i, ctx);
        if (observer) (*observer)(round, h_i, s_i, observer_view(sel), the_input);
        if (!sel) break;
        Branch branch = sel->l.subset_of(input) ? Branch::InsideI : Branch::OutsideI;
        if (branch == Branch::InsideI) s_i = s_i.union_with(sel->l);
        h_i = apply_consume(std::move(h_i), *sel, branch, ctx);
        out.trace.push_back({round, sel->l, sel->s, branch, s_i.size()});
        ++round;
        if (round > limit) throw std::runtime_error("builder watchdog: round limit exceeded");
        if (params.mode == BuilderMode::Hardcore && round > ctx.n)
            throw std::logic_error("hardcore builder exceeded |V| rounds");
    }
    out.rounds = round;
    out.fingerprint = s_i;
    auto [c, g] = finalize(h_i, ctx);
    out.container = c;
    out.cover = std::move(g);
    return out;
}

// --- family construction ------------------------------------------------
//
// The execution depends on the input I only through the branch tests
// L_i subset-of I, so runs with different inputs share a common prefix until
// their branches diverge.  We exploit this with a depth-first traversal that
// partitions the inputs at every round: each distinct execution state is
// visited (and each H_{i+1} computed) exactly once, so the cost scales with
// the number of distinct fingerprints, not with |I(H)|.  The outside branch
// is continued iteratively so only states with a pending sibling keep their
// hypergraph alive.

struct FamilyResult {
    // fingerprint -> (container, cover, #inputs)
    std::map<VertexSet, FamilyEntry> by_fingerprint;
};

void family_dfs(Hypergraph h_i, VertexSet s_i, int round, std::vector<const VertexSet*> inputs,
                const BuildContext& ctx, const RoundObserver* observer, FamilyResult& result, long limit) {
    while (true) {
        if (round > limit) throw std::runtime_error("builder watchdog: round limit exceeded");
        if (ctx.params.mode == BuilderMode::Hardcore && round > ctx.n)
            throw std::logic_error("hardcore builder exceeded |V| rounds");
        auto sel = step(h_i, s_i, ctx);
        if (observer) (*observer)(round, h_i, s_i, observer_view(sel), inputs);
        if (!sel) {
            auto [c, g] = finalize(h_i, ctx);
            auto it = result.by_fingerprint.find(s_i);
            if (it == result.by_fingerprint.end()) {
                result.by_fingerprint.emplace(s_i, FamilyEntry{s_i, c, g, long(inputs.size())});
            } else {
                if (it->second.container != c || it->second.cover != g)
                    throw std::logic_error("determinism violation: equal fingerprints with different outputs");
                it->second.inputs += long(inputs.size());
            }
            return;
        }
        std::vector<const VertexSet*> inside, outside;
        for (const VertexSet* in : inputs)
            (sel->l.subset_of(*in) ? inside : outside).push_back(in);
        if (!inside.empty()) {
            VertexSet s_in = s_i.union_with(sel->l);
            Hypergraph h_in = apply(h_i, *sel, Branch::InsideI, ctx);
            if (outside.empty()) {
                h_i = std::move(h_in);
                s_i = std::move(s_in);
                inputs = std::move(inside);
                ++round;
                continue;
            }
            family_dfs(std::move(h_in), std::move(s_in), round + 1, std::move(inside), ctx, observer, result, limit);
        }
        if (outside.empty()) return;
        h_i = apply_consume(std::move(h_i), *sel, Branch::OutsideI, ctx);
        inputs = std::move(outside);
        ++round;
    }
}

std::vector<FamilyEntry> run_family(const Hypergraph& h, const AlgorithmParams& params,
                                    const std::vector<VertexSet>& inputs, const RoundObserver* observer) {
    BuildContext ctx;
    validate(h, params, ctx);
    std::vector<VertexSet> all;
    const std::vector<VertexSet>* pool = &inputs;
    if (inputs.empty()) {
        all = independent_sets(h, params.guard);
        pool = &all;
    }
    std::vector<const VertexSet*> ptrs;
    ptrs.reserve(pool->size());
    for (const auto& in : *pool) {
        validate_input(h, in);
        ptrs.push_back(&in);
    }
    long limit = watchdog_limit(ctx.n);
    FamilyResult result;
    family_dfs(h, VertexSet(ctx.n), 0, std::move(ptrs), ctx, observer, result, limit);

    // reproduction pass: feeding each fingerprint back in as the input must
    // land on the same fingerprint and reproduce (C, G)
    std::vector<VertexSet> fingerprints;
    fingerprints.reserve(result.by_fingerprint.size());
    for (const auto& [s, entry] : result.by_fingerprint) fingerprints.push_back(s);
    std::vector<const VertexSet*> fptrs;
    for (const auto& s : fingerprints) fptrs.push_back(&s);
    FamilyResult rerun;
    family_dfs(h, VertexSet(ctx.n), 0, std::move(fptrs), ctx, nullptr, rerun, limit);
    for (const auto& s : fingerprints) {
        auto it = rerun.by_fingerprint.find(s);
        const auto& want = result.by_fingerprint.at(s);
        if (it == rerun.by_fingerprint.end() || it->second.container != want.container ||
            it->second.cover != want.cover)
            throw std::logic_error("determinism violation: rerun with fingerprint input diverged");
    }

    std::vector<FamilyEntry> out;
    out.reserve(result.by_fingerprint.size());
    for (auto& [s, entry] : result.by_fingerprint) out.push_back(std::move(entry));
    return out;
}

}  // namespace

std::optional<std::pair<int, VertexSet>> select_cover_branch(const Hypergraph& h_i, const Rational& p, int r) {
    if (r < 2) return std::nullopt;
    Rational threshold = rat(1, 4L * r);
    int n = h_i.vertex_count();
    for (int s = 2; s <= r; ++s) {
        std::vector<const VertexSet*> slice_edges;
        for (const auto& e : h_i.edges())
            if (e.size() == s) slice_edges.push_back(&e);
        if (slice_edges.empty()) continue;

        std::optional<VertexSet> seed;
        // singleton candidates first: a degree array beats subset maps
        {
            std::vector<int> deg(n, 0);
            for (const VertexSet* e : slice_edges)
                e->for_each_element([&](int v) { ++deg[v]; });
            Rational scale = rat_pow(p, s - 1);
            for (int v = 0; v < n && !seed; ++v) {
                if (deg[v] == 0) continue;
                VertexSet l(n, {v});
                if (h_i.has_edge(l)) continue;
                if (Rational(deg[v]) * scale >= threshold) seed = l;
            }
        }
        // larger candidates: k-subsets of the slice edges
        for (int k = 2; k < s && !seed; ++k) {
            std::unordered_map<VertexSet, int, VertexSetHash> deg;
            for (const VertexSet* e : slice_edges) {
                std::vector<int> vs = e->elements();
                std::vector<int> idx(k);
                for (int i = 0; i < k; ++i) idx[i] = i;
                while (true) {
                    VertexSet l(n);
                    for (int i : idx) l.add(vs[i]);
                    ++deg[l];
                    int i = k - 1;
                    while (i >= 0 && idx[i] == s - k + i) --i;
                    if (i < 0) break;
                    ++idx[i];
                    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
                }
            }
            Rational scale = rat_pow(p, s - k);
            std::optional<VertexSet> best;
            for (const auto& [l, d] : deg) {
                if (h_i.has_edge(l)) continue;
                if (Rational(d) * scale < threshold) continue;
                if (!best || l < *best) best = l;
            }
            seed = best;
        }
        if (!seed) continue;

        // greedy inclusion-maximal extension by least admissible vertex;
        // a seed of size s-1 cannot extend (a size-s set with positive degree
        // in the s-slice is the edge itself, which is excluded)
        VertexSet l = *seed;
        bool extended = l.size() < s - 1;
        while (extended) {
            extended = false;
            std::vector<int> cnt(n, 0);
            for (const VertexSet* e : slice_edges) {
                if (!l.subset_of(*e)) continue;
                e->minus(l).for_each_element([&](int v) { ++cnt[v]; });
            }
            for (int v = 0; v < n; ++v) {
                if (cnt[v] == 0 || l.contains(v)) continue;
                VertexSet cand = l;
                cand.add(v);
                if (h_i.has_edge(cand)) continue;
                if (Rational(cnt[v]) * rat_pow(p, s - cand.size()) >= threshold) {
                    l = std::move(cand);
                    extended = true;
                    break;
                }
            }
        }
        return std::make_pair(s, l);
    }
    return std::nullopt;
}

std::optional<int> select_hardcore_vertex(const Hypergraph& h_i, const Rational& p, const Rational& delta,
                                          const VertexSet& s_i, int guard) {
    Rational bar = (1 - delta) * p;
    std::vector<Rational> marginals = conditional_marginals(h_i, p, guard);
    for (int v = 0; v < h_i.vertex_count(); ++v) {
        if (s_i.contains(v)) continue;
        VertexSet l(h_i.vertex_count(), {v});
        if (h_i.has_edge(l)) continue;
        if (marginals[v] < bar) return v;
    }
    return std::nullopt;
}

std::optional<VertexSet> select_interpolating_set(const Hypergraph& h_i, const Rational& p, const Rational& delta,
                                                  const VertexSet& s_i, int guard) {
    int n = h_i.vertex_count();
    if (guard < 0) guard = std::min(exact_guard_n(), 20);
    if (n > guard)
        throw std::runtime_error("select_interpolating_set: n=" + std::to_string(n) + " exceeds guard " +
                                 std::to_string(guard));
    std::vector<mpz_class> g = superset_joint_table(h_i, p, guard);
    const mpz_class& total = g[0];
    std::vector<int> allowed = VertexSet::full(n).minus(s_i).elements();
    int m = int(allowed.size());
    Rational factor = (1 - delta) * p;
    for (int k = 1; k <= m; ++k) {
        Rational bar = rat_pow(factor, k);
        std::vector<int> idx(k);
        for (int i = 0; i < k; ++i) idx[i] = i;
        while (true) {
            uint64_t mask = 0;
            for (int i : idx) mask |= uint64_t(1) << allowed[i];
            // g[mask] > 0 certifies independence of L itself
            if (g[mask] != 0 && g[mask] * bar.get_den() < bar.get_num() * total)
                return VertexSet::from_mask64(n, mask);
            int i = k - 1;
            while (i >= 0 && idx[i] == m - k + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    return std::nullopt;
}

ContainerOutput build_cover_container(const Hypergraph& h, const AlgorithmParams& params, const VertexSet& input) {
    AlgorithmParams q = params;
    q.mode = BuilderMode::Cover;
    return run_single(h, q, input, nullptr);
}

ContainerOutput build_hardcore_container(const Hypergraph& h, const AlgorithmParams& params, const VertexSet& input) {
    AlgorithmParams q = params;
    q.mode = BuilderMode::Hardcore;
    return run_single(h, q, input, nullptr);
}

ContainerOutput build_interpolating_container(const Hypergraph& h, const AlgorithmParams& params,
                                              const VertexSet& input) {
    AlgorithmParams q = params;
    q.mode = BuilderMode::Interpolating;
    return run_single(h, q, input, nullptr);
}

ContainerOutput build_container(const Hypergraph& h, const AlgorithmParams& params, const VertexSet& input) {
    return run_single(h, params, input, nullptr);
}

ContainerOutput build_container_observed(const Hypergraph& h, const AlgorithmParams& params, const VertexSet& input,
                                         const RoundObserver& observer) {
    return run_single(h, params, input, &observer);
}

std::vector<FamilyEntry> build_family(const Hypergraph& h, const AlgorithmParams& params,
                                      const std::vector<VertexSet>& inputs) {
    return run_family(h, params, inputs, nullptr);
}

std::vector<FamilyEntry> build_family_observed(const Hypergraph& h, const AlgorithmParams& params,
                                               const std::vector<VertexSet>& inputs, const RoundObserver& observer) {
    return run_family(h, params, inputs, &observer);
}

Rational log_r_lower_bound(int r) {
    if (r < 1) throw std::domain_error("log_r_lower_bound: r < 1");
    if (r == 1) return 0;
    return log_lower_bound(Rational(r), 40);
}

Rational log_r_upper_bound(int r) {
    if (r < 1) throw std::domain_error("log_r_upper_bound: r < 1");
    if (r == 1) return 0;
    return log_upper_bound(Rational(r), 40);
}

}  // namespace clab
