#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <vector>

#include "arbor/graph.hpp"

namespace arbor::detail {

inline constexpr int kMaxSearchVertices = 128;

/// Fixed-capacity bitset over vertex ids 1..kMaxSearchVertices-1.
class VertexSet {
public:
    void set(int v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
    void reset(int v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
    bool test(int v) const { return words_[v >> 6] >> (v & 63) & 1; }

    bool empty() const
    {
        for (auto w : words_)
            if (w)
                return false;
        return true;
    }

    int count() const
    {
        int c = 0;
        for (auto w : words_)
            c += std::popcount(w);
        return c;
    }

    /// Smallest member, or -1.
    int first() const
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i])
                return static_cast<int>(i * 64) + std::countr_zero(words_[i]);
        return -1;
    }

    template <typename F>
    void for_each(F &&f) const
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            for (auto w = words_[i]; w; w &= w - 1)
                f(static_cast<int>(i * 64) + std::countr_zero(w));
    }

    VertexSet &operator|=(const VertexSet &o)
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] |= o.words_[i];
        return *this;
    }
    VertexSet &operator&=(const VertexSet &o)
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= o.words_[i];
        return *this;
    }
    VertexSet operator|(const VertexSet &o) const { return VertexSet(*this) |= o; }
    VertexSet operator&(const VertexSet &o) const { return VertexSet(*this) &= o; }
    VertexSet without(const VertexSet &o) const
    {
        VertexSet r;
        for (std::size_t i = 0; i < words_.size(); ++i)
            r.words_[i] = words_[i] & ~o.words_[i];
        return r;
    }
    bool intersects(const VertexSet &o) const
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i])
                return true;
        return false;
    }
    bool operator==(const VertexSet &) const = default;

private:
    std::array<std::uint64_t, kMaxSearchVertices / 64> words_{};
};

inline std::vector<VertexSet> adjacency_sets(const Graph &g)
{
    std::vector<VertexSet> adj(g.order() + 1);
    for (auto [u, v] : g.edges()) {
        adj[u].set(v);
        adj[v].set(u);
    }
    return adj;
}

/// Component of `start` in the graph given by `adj` restricted to `within`.
inline VertexSet flood(const std::vector<VertexSet> &adj, int start, const VertexSet &within)
{
    VertexSet comp, frontier;
    comp.set(start);
    frontier.set(start);
    while (!frontier.empty()) {
        VertexSet next;
        frontier.for_each([&](int x) { next |= adj[x]; });
        next &= within;
        next = next.without(comp);
        comp |= next;
        frontier = next;
    }
    return comp;
}

} // namespace arbor::detail
