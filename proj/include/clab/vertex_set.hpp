#pragma once

#include <bit>
#include <boost/container/small_vector.hpp>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <functional>
#include <string>
#include <vector>

namespace clab {

// Subset of {0,...,n-1} backed by 64-bit words.  Values are immutable by
// convention once handed to a Hypergraph; the mutators exist for construction.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int universe) : n_(universe), words_((universe + 63) / 64, 0) {}
    VertexSet(int universe, std::initializer_list<int> vs) : VertexSet(universe) {
        for (int v : vs) add(v);
    }
    static VertexSet full(int universe) {
        VertexSet s(universe);
        for (int v = 0; v < universe; ++v) s.add(v);
        return s;
    }

    int universe() const { return n_; }
    bool contains(int v) const { return v >= 0 && v < n_ && (words_[v >> 6] >> (v & 63)) & 1; }
    void add(int v) { check(v); words_[v >> 6] |= uint64_t(1) << (v & 63); }
    void remove(int v) { check(v); words_[v >> 6] &= ~(uint64_t(1) << (v & 63)); }

    int size() const {
        int c = 0;
        for (uint64_t w : words_) c += std::popcount(w);
        return c;
    }
    bool empty() const {
        for (uint64_t w : words_) if (w) return false;
        return true;
    }

    bool subset_of(const VertexSet& o) const {
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }
    bool intersects(const VertexSet& o) const {
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    VertexSet union_with(const VertexSet& o) const { return zip(o, [](uint64_t a, uint64_t b) { return a | b; }); }
    VertexSet intersect(const VertexSet& o) const { return zip(o, [](uint64_t a, uint64_t b) { return a & b; }); }
    VertexSet minus(const VertexSet& o) const { return zip(o, [](uint64_t a, uint64_t b) { return a & ~b; }); }
    VertexSet complement() const {
        VertexSet r = *this;
        for (auto& w : r.words_) w = ~w;
        r.trim();
        return r;
    }

    // Lowest set bit, or -1.
    int min_element() const {
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i]) return int(i * 64 + std::countr_zero(words_[i]));
        return -1;
    }

    // allocation-free iteration for hot paths
    template <class F>
    void for_each_element(F f) const {
        for (size_t i = 0; i < words_.size(); ++i) {
            uint64_t w = words_[i];
            while (w) {
                f(int(i * 64 + std::countr_zero(w)));
                w &= w - 1;
            }
        }
    }

    std::vector<int> elements() const {
        std::vector<int> out;
        out.reserve(size());
        for (size_t i = 0; i < words_.size(); ++i) {
            uint64_t w = words_[i];
            while (w) {
                out.push_back(int(i * 64 + std::countr_zero(w)));
                w &= w - 1;
            }
        }
        return out;
    }

    bool operator==(const VertexSet& o) const { return n_ == o.n_ && words_ == o.words_; }
    bool operator!=(const VertexSet& o) const { return !(*this == o); }

    // Canonical order: by cardinality, then lexicographic on the sorted vertex
    // sequence ({0,5} < {1,2}).  Fixes every tie-break in the algorithms.
    bool operator<(const VertexSet& o) const {
        int a = size(), b = o.size();
        if (a != b) return a < b;
        for (size_t i = 0; i < words_.size(); ++i) {
            uint64_t d = words_[i] ^ o.words_[i];
            if (d) {
                // first differing vertex; the side that has it is lex-smaller
                return (words_[i] >> std::countr_zero(d)) & 1;
            }
        }
        return false;
    }

    // Valid only for universes of at most 64 vertices (exact engine path).
    uint64_t as_mask64() const { return words_.empty() ? 0 : words_[0]; }
    static VertexSet from_mask64(int universe, uint64_t mask) {
        VertexSet s(universe);
        if (!s.words_.empty()) s.words_[0] = mask;
        return s;
    }

    size_t hash() const {
        size_t h = std::hash<int>()(n_);
        for (uint64_t w : words_) h = h * 1099511628211ULL ^ std::hash<uint64_t>()(w);
        return h;
    }

    std::string to_string() const {
        std::string s = "{";
        bool first = true;
        for (int v : elements()) {
            if (!first) s += ",";
            s += std::to_string(v);
            first = false;
        }
        return s + "}";
    }

private:
    void check(int v) const {
        if (v < 0 || v >= n_) throw std::out_of_range("vertex " + std::to_string(v) + " outside universe of size " + std::to_string(n_));
    }
    void trim() {
        if (n_ % 64 && !words_.empty()) words_.back() &= (uint64_t(1) << (n_ % 64)) - 1;
    }
    template <class F>
    VertexSet zip(const VertexSet& o, F f) const {
        VertexSet r(n_);
        for (size_t i = 0; i < words_.size(); ++i) r.words_[i] = f(words_[i], o.words_[i]);
        return r;
    }

    int n_ = 0;
    // inline storage keeps edge lists contiguous for universes up to 1024,
    // which is what the big streaming passes in the builders depend on
    boost::container::small_vector<uint64_t, 16> words_;
};

struct VertexSetHash {
    size_t operator()(const VertexSet& s) const { return s.hash(); }
};

}  // namespace clab
