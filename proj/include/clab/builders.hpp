#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "clab/exact_prob.hpp"
#include "clab/hypergraph.hpp"

namespace clab {

enum class BuilderMode { Cover, Hardcore, Interpolating };

enum class StopRule { Standard, LogR };

enum class Branch { InsideI, OutsideI };

struct AlgorithmParams {
    Rational p;
    Rational delta;             // hardcore / interpolating only
    BuilderMode mode = BuilderMode::Cover;
    StopRule stop_rule = StopRule::Standard;  // cover mode only
    Rational stop_k;            // K of the log-r rule; requires K >= r
    int guard = -1;             // exact-engine override, -1 = default
};

struct TraceStep {
    int round = 0;
    VertexSet chosen;           // L_i or {v_i}
    std::optional<int> s;       // cover mode: chosen slice size s_i
    Branch branch = Branch::OutsideI;
    int fingerprint_size_after = 0;
};

struct ContainerOutput {
    VertexSet fingerprint;      // S
    VertexSet container;        // C
    std::optional<Hypergraph> cover;  // G (cover / interpolating modes)
    std::vector<TraceStep> trace;
    int rounds = 0;
};

// Cover-mode branch selection: smallest s in {2..r} admitting a nonempty
// L not in H_i with w_p of the s-slice link >= 1/(4r); L is the canonical
// inclusion-maximal witness (seeded by the (size,lex)-least, greedily
// extended by least-index vertices).
std::optional<std::pair<int, VertexSet>> select_cover_branch(const Hypergraph& h_i, const Rational& p, int r);

ContainerOutput build_cover_container(const Hypergraph& h, const AlgorithmParams& params, const VertexSet& input);

// Least-index v outside S_i with {v} not an edge and conditional occupancy
// below (1-delta)p; none when the stopping condition holds.
std::optional<int> select_hardcore_vertex(const Hypergraph& h_i, const Rational& p, const Rational& delta,
                                          const VertexSet& s_i, int guard = -1);

ContainerOutput build_hardcore_container(const Hypergraph& h, const AlgorithmParams& params, const VertexSet& input);

// (size,lex)-least inclusion-minimal independent L outside S_i whose
// conditional containment probability drops below ((1-delta)p)^{|L|}.
std::optional<VertexSet> select_interpolating_set(const Hypergraph& h_i, const Rational& p, const Rational& delta,
                                                  const VertexSet& s_i, int guard = -1);

ContainerOutput build_interpolating_container(const Hypergraph& h, const AlgorithmParams& params,
                                              const VertexSet& input);

ContainerOutput build_container(const Hypergraph& h, const AlgorithmParams& params, const VertexSet& input);

struct FamilyEntry {
    VertexSet fingerprint;
    VertexSet container;
    std::optional<Hypergraph> cover;
    long inputs = 0;  // number of independent sets mapping to this fingerprint
};

// Runs the chosen algorithm over the given independent sets (or, when
// `inputs` is empty, over all of them), deduplicating by fingerprint.
// Execution prefixes are shared across inputs, so the cost scales with the
// number of distinct fingerprints rather than |I(H)|.
// Asserts determinism: equal S implies equal (C, G), and
// rerunning with S as the input reproduces (C, G).
std::vector<FamilyEntry> build_family(const Hypergraph& h, const AlgorithmParams& params,
                                      const std::vector<VertexSet>& inputs = {});

// Per-round observer used by the verification suites: called once per
// distinct execution state with (round, H_i, S_i, selection or nullopt,
// inputs still following this state).  A nullopt selection marks the stop.
using RoundObserver =
    std::function<void(int, const Hypergraph&, const VertexSet&, const std::optional<std::pair<std::optional<int>, VertexSet>>&,
                       const std::vector<const VertexSet*>&)>;

std::vector<FamilyEntry> build_family_observed(const Hypergraph& h, const AlgorithmParams& params,
                                               const std::vector<VertexSet>& inputs, const RoundObserver& observer);

// Single run with the observer called once per round (and once at the stop).
ContainerOutput build_container_observed(const Hypergraph& h, const AlgorithmParams& params, const VertexSet& input,
                                         const RoundObserver& observer);

// Rational lower bound on log(r) used by the modified (2b') stopping rule.
Rational log_r_lower_bound(int r);
Rational log_r_upper_bound(int r);

}  // namespace clab
