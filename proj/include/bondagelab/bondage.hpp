#pragma once

#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "bondagelab/domination.hpp"
#include "bondagelab/plane_graph.hpp"

namespace bondagelab {

struct BondageResult {
    /// Empty means no edge set of size <= limit raises gamma_i.
    std::optional<int> value;
    std::vector<Edge> witness_edges;
    int gamma_i_before = 0;
    int gamma_i_after = 0;

    bool exceeds_limit() const { return !value.has_value(); }
};

/// Scans edge subsets of a fixed graph G for sets whose deletion raises
/// gamma_i. Edge sets are given as indices into G.edges().
class RaisingSetSearch {
public:
    explicit RaisingSetSearch(const Graph& g);
    ~RaisingSetSearch();

    const Graph& graph() const { return g_; }
    int gamma_i_before() const { return before_; }

    bool raises(std::span<const int> edges) const;

    /// Lexicographically first k-subset of `pool` positions whose union with
    /// `fixed` raises gamma_i; returned as edge indices (pool picks, then fixed).
    std::optional<std::vector<int>> first_of_size(const std::vector<int>& pool, int k,
                                                  const std::vector<int>& fixed = {}, int jobs = 1) const;

private:
    struct Filter;
    Graph g_;
    int before_ = 0;
    IndependentDominationProbe probe_;
    std::unique_ptr<Filter> filter_;
};

/// Smallest k <= limit such that deleting some k edges raises gamma_i.
/// k-subsets are scanned in lexicographic order of sorted edge indices, so
/// the witness is the lexicographically first raising set. `jobs` > 1 splits
/// the scan by first edge across threads; the result does not depend on it.
BondageResult bondage_i(const Graph& g, int limit, int jobs = 1);
BondageResult bondage_i(const PlaneGraph& g, int limit, int jobs = 1);

/// Same scan restricted to subsets of `pool` (indices into g.edges()), in
/// lexicographic order of pool positions. Sizes run from 1 to limit.
BondageResult bondage_i_within(const Graph& g, const std::vector<int>& pool, int limit, int jobs = 1);

struct PriddyWeiBound {
    int value = 0;
    Edge edge;
};

/// d(u) + d(v) - |N(u) & N(v)| - 1 evaluated at one edge.
int priddy_wei_at(const Graph& g, const Edge& e);
/// Minimum over all edges, lexicographically smallest argmin edge.
PriddyWeiBound priddy_wei_bound(const Graph& g);
PriddyWeiBound priddy_wei_bound(const PlaneGraph& g);

}  // namespace bondagelab
