#pragma once

#include "clab/builders.hpp"
#include "clab/report.hpp"

namespace clab {

// Per-instance verification suites.  Each runs the relevant construction and
// checks every promised invariant exactly, aggregating the results into a
// VerificationReport (pass/fail per check, with a witness on failure).
// `inputs` empty means "every independent set" (subject to the exact-engine
// guard); otherwise the given independent sets are used.

// Cover mode: per-round structure of the evolving hypergraph (antichain,
// strictly growing up-set, branch sets outside the up-set, uniform branch
// sets below the chosen slice, bounded link weights, stop-test soundness,
// input sandwich S_i <= I <= C_i) plus the output guarantees (cover
// property, edge sizes, weight and fingerprint bounds, determinism).
VerificationReport verify_cover_run(const Hypergraph& h, const AlgorithmParams& params,
                                    const std::vector<VertexSet>& inputs = {});

// Hardcore mode: input sandwich and independence-transfer invariant per
// round, fingerprint bound delta|S| <= p|V|, and the exact occupancy
// guarantee Pr(S union C_p independent) >= (1-p)^{delta |C\S|}.
VerificationReport verify_hardcore_run(const Hypergraph& h, const AlgorithmParams& params,
                                       const std::vector<VertexSet>& inputs = {});

// Interpolating mode: output cover disjoint from the fingerprint with edge
// sizes >= 2, cover property over H[C], fingerprint bound |S| <= p|V|/delta,
// and the conditional containment lower bound for every independent set of
// the output cover inside C.
VerificationReport verify_interpolating_run(const Hypergraph& h, const AlgorithmParams& params,
                                            const std::vector<VertexSet>& inputs = {});

// Constructive cover: construct_cover(h, p) covers h, and the certified
// probability chain Pr(V_p independent) <= exp(-w_{p/(4r^2)}(G)/8) holds.
VerificationReport verify_constructive_cover(const Hypergraph& h, const Rational& p);

// Harris product: Pr(V_p independent in h) >= Pr(V_p independent in g) >=
// prod over A in g of (1 - p^|A|), for a cover g of h.
VerificationReport verify_harris(const Hypergraph& h, const Hypergraph& g, const Rational& p);

// Janson: the certified upper bound dominates the exact probability.
VerificationReport verify_janson(const Hypergraph& g, const Rational& p);

// Antichain sum: lymb_sum(minimal_elements(h)) <= 1.
VerificationReport verify_lymb(const Hypergraph& h);

// Key inequality at the given p (exact, via the power transform).
VerificationReport verify_key_inequality(const Hypergraph& h, const Rational& p);

}  // namespace clab
