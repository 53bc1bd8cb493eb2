#include "clab/generators.hpp"

#include <set>
#include <stdexcept>

namespace clab {

namespace {

// counter-based generator: stateless, reproducible, order-independent
struct Rng {
    uint64_t ctr;
    explicit Rng(uint64_t seed) : ctr(seed) {}
    uint64_t next() {
        uint64_t x = (ctr += 0x9e3779b97f4a7c15ULL);
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    }
    // unbiased bounded draw by rejection
    uint64_t below(uint64_t bound) {
        uint64_t limit = bound * (UINT64_MAX / bound);
        uint64_t x;
        do x = next();
        while (x >= limit);
        return x % bound;
    }
};

template <class T>
void shuffle(std::vector<T>& v, Rng& rng) {
    for (size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[rng.below(i)]);
}

void all_subsets_of_size(int n, int r, std::vector<VertexSet>& out) {
    std::vector<int> idx(r);
    for (int i = 0; i < r; ++i) idx[i] = i;
    if (r > n) return;
    while (true) {
        VertexSet s(n);
        for (int v : idx) s.add(v);
        out.push_back(std::move(s));
        int i = r - 1;
        while (i >= 0 && idx[i] == n - r + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace

Hypergraph gen_random_uniform(int n, int r, long m, uint64_t seed) {
    if (n < 0 || r < 1 || m < 0) throw std::invalid_argument("gen_random_uniform: bad parameters");
    mpz_class total;
    mpz_bin_uiui(total.get_mpz_t(), n, r);
    if (total < m) throw std::invalid_argument("gen_random_uniform: m exceeds the number of r-subsets");
    Rng rng(seed);
    if (total <= (1 << 22)) {
        // enumerate, shuffle, take a prefix
        std::vector<VertexSet> pool;
        pool.reserve(total.get_ui());
        all_subsets_of_size(n, r, pool);
        shuffle(pool, rng);
        pool.resize(m);
        return Hypergraph(n, std::move(pool));
    }
    // sparse regime: draw r-sets until m distinct ones accumulate
    std::set<VertexSet> chosen;
    while (long(chosen.size()) < m) {
        VertexSet s(n);
        while (s.size() < r) s.add(int(rng.below(n)));
        chosen.insert(std::move(s));
    }
    return Hypergraph(n, std::vector<VertexSet>(chosen.begin(), chosen.end()));
}

int triangle_vertex_index(int n, int a, int b) {
    if (!(0 <= a && a < b && b < n)) throw std::invalid_argument("triangle_vertex_index: need 0 <= a < b < n");
    return a * n - a * (a + 1) / 2 + (b - a - 1);
}

Hypergraph gen_triangles(int n) {
    if (n < 3) throw std::invalid_argument("gen_triangles: n < 3");
    int vertices = n * (n - 1) / 2;
    std::vector<VertexSet> edges;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                edges.push_back(VertexSet(vertices, {triangle_vertex_index(n, a, b), triangle_vertex_index(n, a, c),
                                                     triangle_vertex_index(n, b, c)}));
    return Hypergraph(vertices, std::move(edges));
}

Hypergraph gen_aps(int n, int k) {
    if (k < 3 || n < k) throw std::invalid_argument("gen_aps: requires k >= 3 and n >= k");
    std::vector<VertexSet> edges;
    for (int d = 1; (long(k) - 1) * d <= n - 1; ++d)
        for (int s = 0; s + (k - 1) * d <= n - 1; ++s) {
            VertexSet e(n);
            for (int i = 0; i < k; ++i) e.add(s + i * d);
            edges.push_back(std::move(e));
        }
    return Hypergraph(n, std::move(edges));
}

Hypergraph gen_decreasing_family_instance(int n, const Rational& density, uint64_t seed) {
    if (n < 0 || density < 0 || density > 1) throw std::invalid_argument("gen_decreasing_family_instance: bad parameters");
    std::vector<VertexSet> pool;
    for (int r = 1; r <= std::min(n, 3); ++r) all_subsets_of_size(n, r, pool);
    Rational count = density * long(pool.size());
    long m = long(mpz_class(count.get_num() / count.get_den()).get_si());
    Rng rng(seed);
    shuffle(pool, rng);
    pool.resize(m);
    return Hypergraph(n, std::move(pool));
}

Hypergraph gen_singleton_complement(const VertexSet& u) {
    std::vector<VertexSet> edges;
    for (int v = 0; v < u.universe(); ++v)
        if (!u.contains(v)) edges.push_back(VertexSet(u.universe(), {v}));
    return Hypergraph(u.universe(), std::move(edges));
}

Hypergraph gen_complete_graph(int n) {
    std::vector<VertexSet> edges;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) edges.push_back(VertexSet(n, {a, b}));
    return Hypergraph(n, std::move(edges));
}

}  // namespace clab
