#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "clab/hypergraph.hpp"

namespace clab {

// Exact hard-core engine.  Works on bitmask universes (n <= 64); the
// enumeration/partition guard defaults to n <= 24 and can be raised via the
// CONTAINER_LAB_GUARD_N environment variable or per call.

int exact_guard_n();  // env CONTAINER_LAB_GUARD_N or 24

struct PartitionEvaluation {
    Rational z;       // Z_lambda = sum over independent sets of lambda^|I|
    int n = 0;
    Rational lambda;
};

struct McEstimate {
    double estimate = 0.0;
    long samples = 0;
    uint64_t seed = 0;
    double half_width = 0.0;  // 95% CI, normal approximation
};

// Enumerates all independent sets in canonical (size, lex) order.
std::vector<VertexSet> independent_sets(const Hypergraph& h, int guard = -1);

// Visits independent sets (arbitrary order) without materializing; works for
// any n.  Stops early (returns false) when the callback returns false.
bool for_each_independent_set(const Hypergraph& h, const std::function<bool(const VertexSet&)>& fn);

// Z via branch-and-reduce on the lowest-index covered vertex; free vertices
// contribute (1+lambda)^#free.
PartitionEvaluation partition_function(const Hypergraph& h, const Rational& lambda, int guard = -1);

// Pr(V_p independent) = (1-p)^n * Z_{p/(1-p)}.
Rational prob_independent(const Hypergraph& h, const Rational& p, int guard = -1);

// Pr(L subset of V_p | V_p independent); exact.
Rational conditional_subset_prob(const Hypergraph& h, const Rational& p, const VertexSet& l, int guard = -1);

// Sum over v of the conditional singleton marginals.
Rational conditional_expected_size(const Hypergraph& h, const Rational& p, int guard = -1);

// Pr(S union W_p independent in H), W_p the p-random subset of W.
// Requires S independent and S,W disjoint from nothing in particular.
Rational prob_union_independent(const Hypergraph& h, const Rational& p, const VertexSet& s, const VertexSet& w,
                                int guard = -1);

// Monte Carlo fallback; deterministic in (seed, sample index) via a
// counter-based generator, so results are order- and thread-independent.
McEstimate mc_prob_independent(const Hypergraph& h, const Rational& p, long samples, uint64_t seed);

// All singleton conditional marginals Pr(v in V_p | V_p independent) with a
// shared denominator; cheaper than n separate conditional_subset_prob calls.
std::vector<Rational> conditional_marginals(const Hypergraph& h, const Rational& p, int guard = -1);

// Batch conditional machinery used by the builders: joint weights
// g[mask] = sum over independent I >= mask of num(p)^|I| (den(p)-num(p))^(n-|I|),
// so Pr(L subset V_p and independent) = g[L] / den(p)^n.  n <= guard.
std::vector<mpz_class> superset_joint_table(const Hypergraph& h, const Rational& p, int guard = -1);

}  // namespace clab
