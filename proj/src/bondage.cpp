#include "bondagelab/bondage.hpp"

#include <algorithm>
#include <atomic>
#include <iterator>
#include <mutex>
#include <numeric>
#include <thread>

namespace bondagelab {

namespace {

constexpr std::size_t kFilterSets = 32;

}  // namespace

/// A raising deletion set must stop every minimum independent dominating
/// set S of G from dominating: some x outside S loses all its edges into S.
/// Deleting edges cannot break independence, so this is a necessary test
/// and skipping candidates that fail it keeps the scan exact.
struct RaisingSetSearch::Filter {
    struct Entry {
        std::vector<char> in;
        std::vector<int> need;
    };
    std::vector<Entry> entries;

    Filter(const Graph& g, const std::vector<std::vector<int>>& minimum_sets) {
        for (const auto& s : minimum_sets) {
            Entry e;
            e.in.assign(g.num_vertices(), 0);
            for (int v : s) e.in[v] = 1;
            e.need.assign(g.num_vertices(), 0);
            for (int x = 0; x < g.num_vertices(); ++x)
                if (!e.in[x])
                    for (int y : g.neighbors(x)) e.need[x] += e.in[y];
            entries.push_back(std::move(e));
        }
    }

    /// `scratch` has one zeroed slot per vertex and is left zeroed.
    bool passes(const Graph& g, std::span<const int> edges, std::vector<int>& scratch) const {
        for (const Entry& s : entries) {
            bool killed = false;
            for (int ei : edges) {
                const Edge& e = g.edges()[ei];
                int outside = -1;
                if (s.in[e.u] && !s.in[e.v]) outside = e.v;
                if (s.in[e.v] && !s.in[e.u]) outside = e.u;
                if (outside >= 0 && ++scratch[outside] == s.need[outside]) killed = true;
            }
            for (int ei : edges) {
                scratch[g.edges()[ei].u] = 0;
                scratch[g.edges()[ei].v] = 0;
            }
            if (!killed) return false;
        }
        return true;
    }
};

RaisingSetSearch::RaisingSetSearch(const Graph& g)
    : g_(g),
      before_(gamma_i(g).value),
      probe_(g),
      filter_(std::make_unique<Filter>(g, minimum_independent_dominating_sets(g, kFilterSets))) {}

RaisingSetSearch::~RaisingSetSearch() = default;

bool RaisingSetSearch::raises(std::span<const int> edges) const {
    std::vector<int> scratch(g_.num_vertices(), 0);
    return filter_->passes(g_, edges, scratch) && !probe_.at_most(edges, before_);
}

std::optional<std::vector<int>> RaisingSetSearch::first_of_size(const std::vector<int>& pool, int k,
                                                                const std::vector<int>& fixed, int jobs) const {
    const int p = static_cast<int>(pool.size());
    if (k < 0 || k > p) return std::nullopt;
    if (k == 0) {
        if (raises(fixed)) return fixed;
        return std::nullopt;
    }
    jobs = std::max(1, jobs);

    std::atomic<int> best_first{p};
    std::mutex mu;
    std::vector<int> best_combo;

    auto worker = [&](int t) {
        std::vector<int> scratch(g_.num_vertices(), 0);
        std::vector<int> combo(k);
        std::vector<int> edges(k + fixed.size());
        std::copy(fixed.begin(), fixed.end(), edges.begin() + k);
        for (int first = t; first + k <= p; first += jobs) {
            if (first >= best_first.load()) return;
            std::iota(combo.begin(), combo.end(), first);
            while (true) {
                for (int i = 0; i < k; ++i) edges[i] = pool[combo[i]];
                if (filter_->passes(g_, edges, scratch) && !probe_.at_most(edges, before_)) {
                    std::lock_guard lock(mu);
                    if (first < best_first.load()) {
                        best_first = first;
                        best_combo = combo;
                    }
                    break;
                }
                // Advance positions 1..k-1; position 0 stays at `first`.
                int i = k - 1;
                while (i >= 1 && combo[i] == p - k + i) --i;
                if (i < 1) break;
                ++combo[i];
                for (int j = i + 1; j < k; ++j) combo[j] = combo[j - 1] + 1;
            }
        }
    };

    if (jobs == 1) {
        worker(0);
    } else {
        std::vector<std::jthread> threads;
        for (int t = 0; t < jobs; ++t) threads.emplace_back(worker, t);
    }
    if (best_combo.empty()) return std::nullopt;
    std::vector<int> out;
    for (int i : best_combo) out.push_back(pool[i]);
    out.insert(out.end(), fixed.begin(), fixed.end());
    return out;
}

BondageResult bondage_i_within(const Graph& g, const std::vector<int>& pool, int limit, int jobs) {
    if (limit < 1) throw Error(Errc::BadParams, "bondage limit must be >= 1");
    const RaisingSetSearch search(g);
    BondageResult result;
    result.gamma_i_before = search.gamma_i_before();
    result.gamma_i_after = result.gamma_i_before;
    for (int k = 1; k <= std::min<int>(limit, pool.size()); ++k) {
        if (auto found = search.first_of_size(pool, k, {}, jobs)) {
            for (int e : *found) result.witness_edges.push_back(g.edges()[e]);
            result.value = k;
            result.gamma_i_after = gamma_i(g.without_edges(result.witness_edges)).value;
            return result;
        }
    }
    return result;
}

BondageResult bondage_i(const Graph& g, int limit, int jobs) {
    std::vector<int> pool(g.num_edges());
    std::iota(pool.begin(), pool.end(), 0);
    return bondage_i_within(g, pool, limit, jobs);
}

BondageResult bondage_i(const PlaneGraph& g, int limit, int jobs) { return bondage_i(Graph(g), limit, jobs); }

int priddy_wei_at(const Graph& g, const Edge& e) {
    const auto& a = g.neighbors(e.u);
    const auto& b = g.neighbors(e.v);
    std::vector<int> common;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
    return g.degree(e.u) + g.degree(e.v) - static_cast<int>(common.size()) - 1;
}

PriddyWeiBound priddy_wei_bound(const Graph& g) {
    if (g.num_edges() == 0) throw Error(Errc::EmptyGraph, "Priddy-Wei bound needs at least one edge");
    PriddyWeiBound best{kUnbounded, {}};
    for (const Edge& e : g.edges()) {
        const int v = priddy_wei_at(g, e);
        if (v < best.value) best = {v, e};
    }
    return best;
}

PriddyWeiBound priddy_wei_bound(const PlaneGraph& g) { return priddy_wei_bound(Graph(g)); }

}  // namespace bondagelab
