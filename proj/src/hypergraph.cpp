#include "clab/hypergraph.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace clab {

Hypergraph::Hypergraph(int n, std::vector<VertexSet> edges) : n_(n), edges_(std::move(edges)) {
    for (const auto& e : edges_) {
        if (e.universe() != n_) throw std::invalid_argument("edge universe mismatch");
        if (e.empty()) throw std::invalid_argument("empty edge rejected");
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

bool Hypergraph::has_edge(const VertexSet& e) const {
    return std::binary_search(edges_.begin(), edges_.end(), e);
}

namespace {

// Shared core of cover_update: merge the surviving edges of src with F into
// dst.  Survivors never equal an F member (F members dominate themselves).
void cover_merge(const std::vector<VertexSet>& src, int n, std::vector<VertexSet>& f,
                 std::vector<VertexSet>& dst) {
    VertexSet singles(n);  // singleton members of F allow an O(1) containment test
    std::vector<const VertexSet*> big;
    for (const auto& fe : f) {
        if (fe.universe() != n) throw std::invalid_argument("cover_update: universe mismatch");
        if (fe.empty()) throw std::invalid_argument("cover_update: empty edge rejected");
        if (fe.size() == 1)
            singles.add(fe.min_element());
        else
            big.push_back(&fe);
    }
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());
    dst.clear();
    dst.reserve(src.size() + f.size());
    auto fit = f.begin();
    for (const auto& e : src) {
        if (e.intersects(singles)) continue;
        bool dominated = false;
        for (const VertexSet* fe : big)
            if (fe->subset_of(e)) { dominated = true; break; }
        if (dominated) continue;
        while (fit != f.end() && *fit < e) dst.push_back(std::move(*fit++));
        dst.push_back(e);
    }
    while (fit != f.end()) dst.push_back(std::move(*fit++));
}

}  // namespace

Hypergraph cover_update(const Hypergraph& h, std::vector<VertexSet> f) {
    Hypergraph out;
    out.n_ = h.n_;
    cover_merge(h.edges_, h.n_, f, out.edges_);
    return out;
}

Hypergraph cover_update(Hypergraph&& h, std::vector<VertexSet> f) {
    thread_local std::vector<VertexSet> scratch;
    cover_merge(h.edges_, h.n_, f, scratch);
    Hypergraph out;
    out.n_ = h.n_;
    out.edges_ = std::move(h.edges_);
    out.edges_.swap(scratch);
    scratch.clear();  // keep capacity, drop contents for the next call
    return out;
}

Rational weight(const Hypergraph& h, const Rational& p) {
    if (p < 0 || p > 1) throw std::domain_error("weight: p outside [0,1]");
    // edges are sorted by size, so group the powers
    Rational total = 0;
    size_t i = 0;
    while (i < h.edges().size()) {
        int s = h.edges()[i].size();
        size_t j = i;
        while (j < h.edges().size() && h.edges()[j].size() == s) ++j;
        total += Rational(long(j - i)) * rat_pow(p, s);
        i = j;
    }
    return total;
}

Hypergraph link(const Hypergraph& h, const VertexSet& l) {
    std::vector<VertexSet> out;
    for (const auto& e : h.edges())
        if (l.subset_of(e) && e != l) out.push_back(e.minus(l));
    return Hypergraph(h.vertex_count(), std::move(out));
}

std::pair<Hypergraph, bool> strip_link(const Hypergraph& h, const VertexSet& l) {
    std::vector<VertexSet> out;
    bool emitted_empty = false;
    for (const auto& e : h.edges()) {
        VertexSet r = e.minus(l);
        if (r.empty())
            emitted_empty = true;
        else
            out.push_back(r);
    }
    return {Hypergraph(h.vertex_count(), std::move(out)), emitted_empty};
}

Hypergraph restrict(const Hypergraph& h, const VertexSet& c) {
    std::vector<VertexSet> out;
    for (const auto& e : h.edges())
        if (e.subset_of(c)) out.push_back(e);
    return Hypergraph(h.vertex_count(), std::move(out));
}

Hypergraph slice(const Hypergraph& h, int lo, int hi) {
    if (lo < 0 || lo > hi) throw std::invalid_argument("slice: bad bounds");
    std::vector<VertexSet> out;
    for (const auto& e : h.edges()) {
        int s = e.size();
        if (s >= lo && s <= hi) out.push_back(e);
    }
    return Hypergraph(h.vertex_count(), std::move(out));
}

bool covers(const Hypergraph& g, const Hypergraph& h) {
    if (g.vertex_count() != h.vertex_count()) throw std::invalid_argument("covers: vertex count mismatch");
    for (const auto& f : h.edges()) {
        bool hit = false;
        for (const auto& e : g.edges()) {
            if (e.size() > f.size()) break;  // sorted by size
            if (e.subset_of(f)) { hit = true; break; }
        }
        if (!hit) return false;
    }
    return true;
}

Hypergraph minimal_elements(const Hypergraph& g) {
    std::vector<VertexSet> out;
    for (const auto& e : g.edges()) {
        bool minimal = true;
        for (const auto& f : out) {
            if (f.size() >= e.size()) break;
            if (f.subset_of(e)) { minimal = false; break; }
        }
        if (minimal) out.push_back(e);  // size-sorted input keeps out sorted
    }
    return Hypergraph(g.vertex_count(), std::move(out));
}

bool is_antichain(const Hypergraph& h) {
    const auto& es = h.edges();
    for (size_t i = 0; i < es.size(); ++i)
        for (size_t j = i + 1; j < es.size(); ++j) {
            if (es[i].size() == es[j].size()) continue;
            if (es[i].subset_of(es[j])) return false;
        }
    return true;
}

int degree(const Hypergraph& h, const VertexSet& l) {
    int d = 0;
    for (const auto& e : h.edges())
        if (l.subset_of(e)) ++d;
    return d;
}

int max_degree(const Hypergraph& h, int ell) {
    if (ell < 1) throw std::invalid_argument("max_degree: ell < 1");
    // count every ell-subset of every edge once; L outside all edges has degree 0
    std::unordered_map<VertexSet, int, VertexSetHash> deg;
    int best = 0;
    for (const auto& e : h.edges()) {
        if (e.size() < ell) continue;
        auto vs = e.elements();
        std::vector<int> idx(ell);
        for (int i = 0; i < ell; ++i) idx[i] = i;
        while (true) {
            VertexSet l(h.vertex_count());
            for (int i : idx) l.add(vs[i]);
            best = std::max(best, ++deg[l]);
            int i = ell - 1;
            while (i >= 0 && idx[i] == int(vs.size()) - ell + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < ell; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    return best;
}

bool is_independent(const Hypergraph& h, const VertexSet& i) {
    for (const auto& e : h.edges())
        if (e.subset_of(i)) return false;
    return true;
}

VertexSet unblocked_vertices(const Hypergraph& h) {
    VertexSet c = VertexSet::full(h.vertex_count());
    for (const auto& e : h.edges()) {
        if (e.size() > 1) break;
        c.remove(e.min_element());
    }
    return c;
}

}  // namespace clab
