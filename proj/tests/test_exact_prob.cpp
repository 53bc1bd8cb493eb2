#include <doctest.h>

#include <cmath>

#include "clab/certified.hpp"
#include "clab/exact_prob.hpp"
#include "clab/generators.hpp"

using namespace clab;

namespace {
Hypergraph hg(int n, std::initializer_list<std::initializer_list<int>> edges) {
    std::vector<VertexSet> es;
    for (auto e : edges) es.push_back(VertexSet(n, e));
    return Hypergraph(n, std::move(es));
}

// brute-force oracles over all 2^n subsets
Rational brute_z(const Hypergraph& h, const Rational& lambda) {
    int n = h.vertex_count();
    Rational z = 0;
    for (uint64_t m = 0; m < (uint64_t(1) << n); ++m) {
        VertexSet i = VertexSet::from_mask64(n, m);
        if (is_independent(h, i)) z += rat_pow(lambda, i.size());
    }
    return z;
}

Rational brute_prob(const Hypergraph& h, const Rational& p) {
    int n = h.vertex_count();
    Rational total = 0;
    for (uint64_t m = 0; m < (uint64_t(1) << n); ++m) {
        VertexSet i = VertexSet::from_mask64(n, m);
        if (is_independent(h, i)) total += rat_pow(p, i.size()) * rat_pow(1 - p, n - i.size());
    }
    return total;
}
}  // namespace

TEST_CASE("independent set enumeration") {
    auto sets = independent_sets(hg(2, {{0, 1}}));
    REQUIRE(sets.size() == 3);
    CHECK(sets[0] == VertexSet(2));
    CHECK(sets[1] == VertexSet(2, {0}));
    CHECK(sets[2] == VertexSet(2, {1}));
    CHECK(independent_sets(Hypergraph(3)).size() == 8);

    // triangle-free subgraphs of K_4, cross-checked against the 2^6 filter
    Hypergraph t4 = gen_triangles(4);
    size_t count = 0;
    for (uint64_t m = 0; m < 64; ++m)
        if (is_independent(t4, VertexSet::from_mask64(6, m))) ++count;
    CHECK(independent_sets(t4).size() == count);

    CHECK_THROWS(independent_sets(Hypergraph(30)));  // enumeration guard
}

TEST_CASE("partition function") {
    CHECK(partition_function(hg(2, {{0, 1}}), 1).z == 3);
    CHECK(partition_function(hg(2, {{0, 1}}), 2).z == 5);
    CHECK(partition_function(Hypergraph(7), rat(1, 3)).z == rat_pow(rat(4, 3), 7));
    CHECK_THROWS_AS(partition_function(Hypergraph(2), rat(-1, 2)), std::domain_error);
}

TEST_CASE("prob_independent") {
    CHECK(prob_independent(hg(2, {{0, 1}}), rat(1, 2)) == rat(3, 4));
    CHECK(prob_independent(Hypergraph(9), rat(2, 5)) == 1);
    CHECK(prob_independent(hg(2, {{0, 1}}), rat(2, 3)) == rat(5, 9));
}

TEST_CASE("conditional probabilities") {
    CHECK(conditional_subset_prob(hg(2, {{0, 1}}), rat(1, 2), VertexSet(2, {0})) == rat(1, 3));
    CHECK(conditional_subset_prob(Hypergraph(4), rat(1, 3), VertexSet(4, {1, 2})) == rat(1, 9));
    Hypergraph star = hg(4, {{0, 1}, {0, 2}, {0, 3}});
    CHECK(conditional_subset_prob(star, rat(1, 2), VertexSet(4, {0})) == rat(1, 9));

    CHECK(conditional_expected_size(hg(2, {{0, 1}}), rat(1, 2)) == rat(2, 3));
    CHECK(conditional_expected_size(Hypergraph(6), rat(1, 3)) == 2);
    CHECK(conditional_expected_size(hg(3, {{0}, {1}, {2}}), rat(1, 2)) == 0);

    // marginal batch matches the one-at-a-time path
    Hypergraph h = gen_random_uniform(8, 2, 9, 5);
    auto marg = conditional_marginals(h, rat(1, 3));
    for (int v = 0; v < 8; ++v)
        CHECK(marg[v] == conditional_subset_prob(h, rat(1, 3), VertexSet(8, {v})));
}

TEST_CASE("superset joint table") {
    Hypergraph h = gen_random_uniform(7, 2, 6, 9);
    Rational p = rat(2, 5);
    auto table = superset_joint_table(h, p);
    mpz_class denom;
    mpz_pow_ui(denom.get_mpz_t(), p.get_den().get_mpz_t(), 7);
    for (uint64_t m = 0; m < 128; ++m) {
        VertexSet l = VertexSet::from_mask64(7, m);
        Rational joint = Rational(table[m]) / Rational(denom);
        joint.canonicalize();
        if (!is_independent(h, l)) {
            CHECK(table[m] == 0);
            continue;
        }
        CHECK(joint == conditional_subset_prob(h, p, l) * prob_independent(h, p));
    }
}

TEST_CASE("prob_union_independent") {
    Hypergraph star = hg(4, {{0, 1}, {0, 2}, {0, 3}});
    // S = {0}, W = V: independence requires 1,2,3 all absent
    CHECK(prob_union_independent(star, rat(1, 2), VertexSet(4, {0}), VertexSet::full(4)) == rat(1, 8));
    // S empty: plain independence probability
    CHECK(prob_union_independent(star, rat(1, 2), VertexSet(4), VertexSet::full(4)) ==
          prob_independent(star, rat(1, 2)));
}

TEST_CASE("oracle equivalence on random instances") {
    for (uint64_t seed = 0; seed < 25; ++seed) {
        std::vector<VertexSet> es = gen_random_uniform(8, 2, 4, seed).edges();
        Hypergraph extra = gen_random_uniform(8, 3, 3, seed + 50);
        for (const auto& e : extra.edges()) es.push_back(e);
        Hypergraph h(8, std::move(es));
        Rational lambda = rat(long(seed % 4) + 1, 3);
        CHECK(partition_function(h, lambda).z == brute_z(h, lambda));
        Rational p = rat(long(seed % 3) + 1, 5);
        CHECK(prob_independent(h, p) == brute_prob(h, p));
    }
}

TEST_CASE("monte carlo") {
    McEstimate one = mc_prob_independent(Hypergraph(6), rat(1, 2), 1000, 7);
    CHECK(one.estimate == 1.0);
    McEstimate a = mc_prob_independent(hg(2, {{0, 1}}), rat(1, 2), 100000, 7);
    McEstimate b = mc_prob_independent(hg(2, {{0, 1}}), rat(1, 2), 100000, 7);
    CHECK(a.estimate == b.estimate);  // determinism
    CHECK(std::abs(a.estimate - 0.75) < 4 * (a.half_width / 1.96) + 1e-9);
}

TEST_CASE("certified comparisons") {
    CHECK(cert_leq_exp_neg(rat(3, 4), rat(1, 8)));       // 0.75 <= e^{-1/8} ~ 0.8825
    CHECK_FALSE(cert_leq_exp_neg(rat(9, 10), rat(1, 8)));
    CHECK(cert_geq_exp_neg(rat(9, 10), rat(1, 8)));
    CHECK(cert_cmp_pow(rat(3, 4), 3, rat(1, 2), 2) > 0);  // 27/64 > 16/64
    CHECK(cert_cmp_pow(rat(1, 4), 1, rat(1, 2), 2) == 0);
    CHECK(cert_cmp_pow(rat(1, 3), 5, rat(1, 3), 4) < 0);
    // huge exponents resolve through the certified-log path
    CHECK(cert_cmp_pow(rat(99, 100), 1000000000000L, rat(98, 100), 999999999999L) > 0);
    CHECK(cert_cmp_pow(rat(98, 100), 999999999999L, rat(99, 100), 1000000000000L) < 0);
    Rational lo = log_lower_bound(rat(3), 40), hi = log_upper_bound(rat(3), 40);
    CHECK(lo < hi);
    CHECK(hi - lo < rat(1, 1L << 38));
    CHECK(exp_neg_upper_bound(rat(1, 8)) >= rat(3, 4));
}
