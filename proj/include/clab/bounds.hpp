#pragma once

#include <cstdint>

#include "clab/hypergraph.hpp"
#include "clab/report.hpp"

namespace clab {

// Correlation (Harris) lower bound material for Pr(V_p independent) when G
// covers the hypergraph under test: the weight w_p(G) and the exact product
// prod over A in G of (1 - p^|A|).  Requires 0 < p < 1/2.
struct HarrisBound {
    Rational w;        // w_p(G)
    Rational product;  // exact rational lower bound on the probability
};
HarrisBound harris_bound(const Hypergraph& g, const Rational& p);

// lambda_ell = 4^{-min(ell, r-ell)} weights of the constructive cover.
Rational cover_lambda(int ell, int r);

// Constructive cover of an r-uniform H for 0 < p < 1/(4r): greedily grows a
// maximal subgraph H' in canonical edge order subject to the degree caps
// Delta_ell(H') <= lambda_ell * C(r,ell)^{-1} * p^{ell-r}, then returns the
// minimal elements of the family of saturated subsets (those T with
// deg_{H'}(T) equal to the floored cap).  Postconditions asserted: the result
// covers H, and w_{p/(4r^2)}(result) <= 2 * e(H') * p^r.
Hypergraph construct_cover(const Hypergraph& h, const Rational& p);

// exp(-mu^2 / (2 delta_star)) upper bound on Pr(C_p independent in G).
// `bound` is a certified rational upper bound on that value, so exact
// comparisons against it are sound.
struct JansonBound {
    Rational mu = 0;
    Rational delta_star = 0;
    Rational bound = 1;  // certified upper bound; 1 for empty G
};
JansonBound janson_bound(const Hypergraph& g, const Rational& p);

// Sum over A in the antichain of 1 / C(n, |A|); errors when the edge set is
// not an antichain.  The LYMB inequality asserts the sum is at most 1.
Rational lymb_sum(const Hypergraph& a);

// Strict balanced-supersaturation test: Delta_ell(H_S) < p^{ell-1} e(H_S) /
// container_size for every ell in {2..r}.  H_S must be uniform and nonempty.
bool supersaturation_holds(const Hypergraph& h_s, long container_size, const Rational& p);

struct EfficientParams {
    Rational tau;  // in (0,1)
    Rational k;    // >= rank
};

// Delta_ell(H) <= K * (tau / (32 K r^2))^{ell-1} * e(H)/|V| for ell in {1..r}.
bool efficient_assumptions_hold(const Hypergraph& h, const EfficientParams& params);

// Runs the cover builder at p = tau/(8 r^2) over every independent set and
// checks the promised output sizes: |S| <= tau |V| and |C| <= (1 - 1/(2K))|V|
// for every entry of the family.  Requires efficient_assumptions_hold.
VerificationReport check_efficient_conclusion(const Hypergraph& h, const EfficientParams& params);

// For each (container, cover) pair of the cover-mode family: verifies the
// deterministic certificate (w_p(G) <= p|C|, G covers H[C], every member of
// G has at least two vertices), which rules out any subhypergraph of H[C]
// with the balanced-supersaturation property; additionally samples `trials`
// nonempty subhypergraphs of H[C] per distinct container and confirms each
// fails supersaturation_holds.
VerificationReport check_packaged_conclusion(const Hypergraph& h, const Rational& p, int trials, uint64_t seed);

// Runs the interpolating builder with density q = 2rp and delta = 1/(4r) on
// an r-uniform H with p <= 1/(8r^2), and checks that the minimal elements of
// each returned cover satisfy the cover-mode conclusions at the original p:
// covers H[C], all members of size >= 2, w_p <= p|C|, and |S| <= 8 r^2 p |V|.
VerificationReport crosscheck_hcl4_implies_hcl1(const Hypergraph& h, const Rational& p);

// One side of the key inequality, base^exponent, kept in factored form (the
// exponents can be far too large for exact expansion).
struct PowerCertificate {
    Rational base;
    mpz_class exponent;
};

struct KeyInequalityResult {
    PowerCertificate lhs;  // Pr(V_p independent)^d
    PowerCertificate rhs;  // (1-p)^u
    Rational x;            // |V| - E[|V_p|| independent]/p = u/d >= 0
    bool holds = false;    // lhs >= rhs
    bool equality = false;
};

// log Pr(V_p independent) >= x log(1-p) with x as above, verified exactly via
// the power-d transform Pr^d >= (1-p)^u.
KeyInequalityResult key_inequality_check(const Hypergraph& h, const Rational& p, int guard = -1);

}  // namespace clab
