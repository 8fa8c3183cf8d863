#pragma once

// Brute-force reference implementations. They share nothing with the library
// solvers except the Graph adjacency they read.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "bondagelab/domination.hpp"

namespace oracle {

using bondagelab::Edge;
using bondagelab::Graph;

inline std::vector<std::uint32_t> closed_masks(const Graph& g) {
    std::vector<std::uint32_t> m(g.num_vertices());
    for (int v = 0; v < g.num_vertices(); ++v) {
        m[v] = 1u << v;
        for (int u : g.neighbors(v)) m[v] |= 1u << u;
    }
    return m;
}

inline std::vector<int> members(std::uint32_t mask) {
    std::vector<int> out;
    for (int v = 0; mask; ++v, mask >>= 1)
        if (mask & 1u) out.push_back(v);
    return out;
}

struct Best {
    int value = -1;
    std::vector<int> witness;  // lexicographically smallest among optimal sets
};

/// Minimum over all 2^n subsets. Works for n <= 20.
inline Best exhaustive(const Graph& g, bool independent) {
    const int n = g.num_vertices();
    const auto closed = closed_masks(g);
    const std::uint32_t all = (1u << n) - 1;
    Best best;
    for (std::uint32_t s = 0; s <= all; ++s) {
        std::uint32_t covered = 0;
        bool indep = true;
        for (int v = 0; v < n; ++v) {
            if (!(s >> v & 1u)) continue;
            covered |= closed[v];
            if (independent && (closed[v] & s & ~(1u << v))) indep = false;
        }
        if (covered != all || !indep) continue;
        const int size = std::popcount(s);
        auto m = members(s);
        if (best.value < 0 || size < best.value || (size == best.value && m < best.witness)) {
            best.value = size;
            best.witness = std::move(m);
        }
    }
    return best;
}

inline Best gamma(const Graph& g) { return exhaustive(g, false); }
inline Best gamma_i(const Graph& g) { return exhaustive(g, true); }

/// Every maximal independent set, by Bron-Kerbosch on the complement.
inline std::vector<std::vector<int>> maximal_independent_sets(const Graph& g) {
    const int n = g.num_vertices();
    std::vector<std::vector<int>> out;
    std::vector<int> r;
    std::function<void(std::vector<int>, std::vector<int>)> grow = [&](std::vector<int> p, std::vector<int> x) {
        if (p.empty() && x.empty()) {
            auto s = r;
            std::sort(s.begin(), s.end());
            out.push_back(s);
            return;
        }
        while (!p.empty()) {
            const int v = p.back();
            p.pop_back();
            auto keep = [&](const std::vector<int>& xs) {
                std::vector<int> y;
                for (int w : xs)
                    if (w != v && !g.adjacent(v, w)) y.push_back(w);
                return y;
            };
            r.push_back(v);
            grow(keep(p), keep(x));
            r.pop_back();
            x.push_back(v);
        }
    };
    std::vector<int> all(n);
    for (int v = 0; v < n; ++v) all[v] = v;
    grow(all, {});
    return out;
}

inline int min_maximal_independent(const Graph& g) {
    int best = g.num_vertices();
    for (const auto& s : maximal_independent_sets(g)) best = std::min<int>(best, static_cast<int>(s.size()));
    return best;
}

/// Smallest number of deletions raising gamma_i, trying every subset of
/// every size up to `limit`.
inline std::optional<int> bondage_i(const Graph& g, int limit) {
    const int before = oracle::gamma_i(g).value;
    const int m = g.num_edges();
    for (int k = 1; k <= std::min(limit, m); ++k) {
        std::vector<char> pick(m, 0);
        std::fill(pick.end() - k, pick.end(), 1);
        do {
            std::vector<Edge> removed;
            for (int i = 0; i < m; ++i)
                if (pick[i]) removed.push_back(g.edges()[i]);
            if (oracle::gamma_i(g.without_edges(removed)).value > before) return k;
        } while (std::next_permutation(pick.begin(), pick.end()));
    }
    return std::nullopt;
}

}  // namespace oracle
