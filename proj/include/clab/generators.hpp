#pragma once

#include <cstdint>

#include "clab/hypergraph.hpp"

namespace clab {

// m distinct r-subsets of {0..n-1}, sampled without replacement,
// deterministic in the seed.
Hypergraph gen_random_uniform(int n, int r, long m, uint64_t seed);

// Triangle hypergraph of K_n: vertices are the C(n,2) edges of K_n (pair
// (a,b), a < b, gets index a*n - a(a+1)/2 + (b-a-1)), one 3-edge per
// triangle.  Independent sets = triangle-free subgraphs.
Hypergraph gen_triangles(int n);
int triangle_vertex_index(int n, int a, int b);

// k-term arithmetic progressions in {0..n-1} as k-edges; independent sets =
// k-AP-free subsets.
Hypergraph gen_aps(int n, int k);

// Random hypergraph (edges of size 1..3) whose independent-set family plays
// the decreasing family in the key-inequality checks.  density in [0,1]
// scales the number of edges drawn from the candidate pool; 0 gives the full
// power set 2^V.
Hypergraph gen_decreasing_family_instance(int n, const Rational& density, uint64_t seed);

// H = {{v} : v not in U} on U's universe, so the independent sets are
// exactly the subsets of U (the tight case of the key inequality).
Hypergraph gen_singleton_complement(const VertexSet& u);

// K_n as a 2-uniform hypergraph.
Hypergraph gen_complete_graph(int n);

}  // namespace clab
