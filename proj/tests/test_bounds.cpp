#include <doctest.h>

#include "clab/bounds.hpp"
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
}  // namespace

TEST_CASE("harris bound") {
    CHECK(harris_bound(hg(2, {{0, 1}}), rat(1, 3)).product == rat(8, 9));
    CHECK(prob_independent(hg(2, {{0, 1}}), rat(1, 3)) == rat(8, 9));
    CHECK(harris_bound(hg(2, {{0}, {1}}), rat(1, 3)).product == rat(4, 9));
    CHECK(harris_bound(Hypergraph(3), rat(1, 3)).product == 1);
    CHECK_THROWS_AS(harris_bound(Hypergraph(2), rat(1, 2)), std::domain_error);

    // Harris never exceeds the exact probability
    for (uint64_t seed = 0; seed < 30; ++seed) {
        Hypergraph h = gen_random_uniform(9, 2, 8, seed);
        Rational p = rat(long(seed % 3) + 1, 7);
        CHECK(harris_bound(h, p).product <= prob_independent(h, p));
    }
}

TEST_CASE("constructive cover") {
    CHECK(construct_cover(Hypergraph(4), rat(1, 10)).edge_count() == 0);
    CHECK(construct_cover(hg(2, {{0, 1}}), rat(1, 10)) == hg(2, {{0}, {1}}));
    CHECK_THROWS_AS(construct_cover(gen_triangles(4), rat(1, 12)), std::domain_error);

    // postconditions (cover property + weight bound) are asserted internally;
    // exercise them across a small matrix
    std::vector<VertexSet> es;
    for (int a = 0; a < 5; ++a)
        for (int b = a + 1; b < 5; ++b)
            for (int c = b + 1; c < 5; ++c) es.push_back(VertexSet(5, {a, b, c}));
    Hypergraph k53(5, std::move(es));
    Hypergraph g3 = construct_cover(k53, rat(1, 20));
    CHECK(covers(g3, k53));
    for (uint64_t seed = 0; seed < 10; ++seed) {
        Hypergraph h = gen_random_uniform(10, 3, 8, seed);
        Hypergraph g = construct_cover(h, rat(1, 20));
        CHECK(covers(g, h));
        CHECK(is_antichain(g));
    }
}

TEST_CASE("janson bound") {
    JansonBound jb = janson_bound(hg(2, {{0, 1}}), rat(1, 2));
    CHECK(jb.mu == rat(1, 4));
    CHECK(jb.delta_star == rat(1, 4));
    CHECK(rat(3, 4) <= jb.bound);

    JansonBound jb2 = janson_bound(hg(2, {{0}, {1}}), rat(1, 3));
    CHECK(jb2.mu == rat(2, 3));
    CHECK(jb2.delta_star == rat(2, 3));
    CHECK(rat(4, 9) <= jb2.bound);

    CHECK(janson_bound(Hypergraph(5), rat(1, 2)).bound == 1);

    // Janson dominates the exact probability
    for (uint64_t seed = 0; seed < 30; ++seed) {
        Hypergraph h = gen_random_uniform(9, 3, 7, seed);
        Rational p = rat(long(seed % 3) + 1, 8);
        CHECK(prob_independent(h, p) <= janson_bound(h, p).bound);
    }
}

TEST_CASE("lymb sum") {
    CHECK(lymb_sum(hg(3, {{0}, {1, 2}})) == rat(2, 3));
    CHECK(lymb_sum(hg(4, {{0}, {1}, {2}, {3}})) == 1);
    CHECK(lymb_sum(Hypergraph(6)) == 0);
    CHECK_THROWS_AS(lymb_sum(hg(2, {{0}, {0, 1}})), std::invalid_argument);
}

TEST_CASE("supersaturation predicate") {
    CHECK_FALSE(supersaturation_holds(hg(3, {{0, 1, 2}}), 3, rat(1, 2)));
    CHECK_FALSE(supersaturation_holds(gen_complete_graph(65), 65, rat(1, 32)));
    std::vector<VertexSet> m;
    for (int i = 0; i < 10; ++i) m.push_back(VertexSet(20, {2 * i, 2 * i + 1}));
    CHECK_FALSE(supersaturation_holds(Hypergraph(20, std::move(m)), 20, rat(1, 2)));
    CHECK(supersaturation_holds(gen_complete_graph(100), 100, rat(1, 32)));
    CHECK_THROWS_AS(supersaturation_holds(Hypergraph(3), 3, rat(1, 2)), std::invalid_argument);
    CHECK_THROWS_AS(supersaturation_holds(hg(3, {{0}, {1, 2}}), 3, rat(1, 2)), std::invalid_argument);
}

TEST_CASE("efficiency assumptions and conclusion") {
    CHECK_FALSE(efficient_assumptions_hold(gen_complete_graph(10), EfficientParams{rat(1, 100), Rational(2)}));
    CHECK(efficient_assumptions_hold(gen_complete_graph(300), EfficientParams{rat(9, 10), Rational(2)}));
    CHECK_THROWS_AS(efficient_assumptions_hold(hg(3, {{0, 1, 2}}), EfficientParams{rat(1, 2), Rational(2)}),
                    std::invalid_argument);  // K below the rank

    VerificationReport rep = check_efficient_conclusion(gen_complete_graph(300), EfficientParams{rat(9, 10), Rational(2)});
    CHECK(rep.pass());
}

TEST_CASE("packaged conclusion") {
    CHECK(check_packaged_conclusion(gen_complete_graph(40), rat(1, 32), 25, 42).pass());
    CHECK(check_packaged_conclusion(Hypergraph(3), rat(1, 32), 10, 1).pass());
    CHECK(check_packaged_conclusion(gen_triangles(5), rat(1, 72), 25, 7).pass());
}

TEST_CASE("interpolating-implies-cover crosscheck") {
    CHECK(crosscheck_hcl4_implies_hcl1(Hypergraph(4), rat(1, 32)).pass());
    CHECK(crosscheck_hcl4_implies_hcl1(hg(2, {{0, 1}}), rat(1, 32)).pass());
    CHECK(crosscheck_hcl4_implies_hcl1(hg(3, {{0, 1, 2}}), rat(1, 72)).pass());
    for (uint64_t seed = 0; seed < 10; ++seed)
        CHECK(crosscheck_hcl4_implies_hcl1(gen_random_uniform(10, 2, 8, seed), rat(1, 32)).pass());
}

TEST_CASE("key inequality") {
    KeyInequalityResult k = key_inequality_check(hg(2, {{0, 1}}), rat(1, 2));
    CHECK(k.x == rat(2, 3));
    CHECK(k.holds);
    CHECK_FALSE(k.equality);

    KeyInequalityResult k0 = key_inequality_check(Hypergraph(3), rat(1, 3));
    CHECK(k0.x == 0);
    CHECK(k0.holds);
    CHECK(k0.equality);

    // decreasing family 2^U gives exact equality
    KeyInequalityResult ke = key_inequality_check(hg(4, {{1}, {3}}), rat(1, 3));
    CHECK(ke.holds);
    CHECK(ke.equality);

    for (uint64_t seed = 0; seed < 20; ++seed) {
        Hypergraph h = gen_random_uniform(8, 2, 6, seed);
        CHECK(key_inequality_check(h, rat(long(seed % 4) + 1, 5)).holds);
    }
}
