#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "clab/rational.hpp"
#include "clab/vertex_set.hpp"

namespace clab {

// Finite hypergraph: vertex set {0..n-1} plus a canonical (sorted by
// cardinality, then lex; deduplicated) list of nonempty edges.  Empty edges
// are rejected at construction; duplicate edges are merged silently.
// Immutable after construction.
class Hypergraph {
public:
    Hypergraph() = default;
    explicit Hypergraph(int n) : n_(n) {}
    Hypergraph(int n, std::vector<VertexSet> edges);

    int vertex_count() const { return n_; }
    const std::vector<VertexSet>& edges() const { return edges_; }
    int edge_count() const { return int(edges_.size()); }
    bool has_edge(const VertexSet& e) const;

    // max edge size; 0 for the edgeless hypergraph
    int rank() const { return edges_.empty() ? 0 : edges_.back().size(); }
    int min_edge_size() const { return edges_.empty() ? 0 : edges_.front().size(); }
    bool is_uniform() const { return rank() == min_edge_size(); }

    bool operator==(const Hypergraph& o) const { return n_ == o.n_ && edges_ == o.edges_; }
    bool operator!=(const Hypergraph& o) const { return !(*this == o); }

private:
    friend Hypergraph cover_update(const Hypergraph& h, std::vector<VertexSet> f);
    friend Hypergraph cover_update(Hypergraph&& h, std::vector<VertexSet> f);

    int n_ = 0;
    std::vector<VertexSet> edges_;
};

// One round of the container update: (H \ <F>) union F, i.e. drop every edge
// that contains a member of F, then add F, in a single merged pass.  The
// rvalue overload recycles the argument's buffer, keeping long runs of
// updates allocation-free.
Hypergraph cover_update(const Hypergraph& h, std::vector<VertexSet> f);
Hypergraph cover_update(Hypergraph&& h, std::vector<VertexSet> f);

// w_p(H) = sum over edges of p^{|E|}.  Requires 0 <= p <= 1.
Rational weight(const Hypergraph& h, const Rational& p);

// Link of L: {E \ L : L subset of E in H}.
Hypergraph link(const Hypergraph& h, const VertexSet& l);

// Strip-link: {E \ L : E in H}, duplicates merged.  Edges contained in L
// would become empty; they are dropped and reported through the flag.
std::pair<Hypergraph, bool> strip_link(const Hypergraph& h, const VertexSet& l);

// Induced subhypergraph: edges of H entirely inside C (global indices kept).
Hypergraph restrict(const Hypergraph& h, const VertexSet& c);

// Edges E with lo <= |E| <= hi.
Hypergraph slice(const Hypergraph& h, int lo, int hi);

// True iff every edge of H contains some edge of G.
bool covers(const Hypergraph& g, const Hypergraph& h);

// Inclusion-minimal edges of G (an antichain generating the same up-set).
Hypergraph minimal_elements(const Hypergraph& g);

bool is_antichain(const Hypergraph& h);

// |{E in H : L subset of E}|
int degree(const Hypergraph& h, const VertexSet& l);

// max degree over all L of the given size
int max_degree(const Hypergraph& h, int ell);

// True iff no edge of H is contained in I.
bool is_independent(const Hypergraph& h, const VertexSet& i);

// {v in V : {v} not an edge of H}
VertexSet unblocked_vertices(const Hypergraph& h);

}  // namespace clab
