#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "bondagelab/plane_graph.hpp"

namespace bondagelab {

/// Abstract simple graph without an embedding. Used wherever edges are
/// deleted, since faces play no part in domination.
class Graph {
public:
    Graph() = default;
    Graph(int n, std::span<const Edge> edges);
    explicit Graph(const PlaneGraph& g);

    int num_vertices() const { return static_cast<int>(adj_.size()); }
    int num_edges() const { return static_cast<int>(edges_.size()); }
    int degree(int v) const { return static_cast<int>(adj_.at(v).size()); }
    const std::vector<int>& neighbors(int v) const { return adj_.at(v); }
    const std::vector<Edge>& edges() const { return edges_; }
    bool adjacent(int u, int v) const;

    Graph without_edges(std::span<const Edge> removed) const;

private:
    std::vector<std::vector<int>> adj_;  // sorted
    std::vector<Edge> edges_;            // sorted
};

struct DominatingSetWitness {
    std::vector<int> vertices;  // sorted ascending
    bool independent = false;
    bool dominating = false;

    int cardinality() const { return static_cast<int>(vertices.size()); }

    /// Flags are always recomputed against g.
    static DominatingSetWitness of(const Graph& g, std::vector<int> vertices);
};

struct DominationResult {
    int value = 0;
    DominatingSetWitness witness;
};

bool is_dominating(const Graph& g, std::span<const int> s);
bool is_independent(const Graph& g, std::span<const int> s);
bool is_dominating(const PlaneGraph& g, std::span<const int> s);
bool is_independent(const PlaneGraph& g, std::span<const int> s);

/// Largest vertex count the exact solvers accept.
inline constexpr int kSolverMaxVertices = 512;

/// Domination number with the lexicographically smallest minimum witness.
DominationResult gamma(const Graph& g);
DominationResult gamma(const PlaneGraph& g);

/// Independent domination number with the lexicographically smallest
/// minimum witness.
DominationResult gamma_i(const Graph& g);
DominationResult gamma_i(const PlaneGraph& g);

/// All minimum independent dominating sets in lexicographic order, at most
/// `cap` of them.
std::vector<std::vector<int>> minimum_independent_dominating_sets(const Graph& g, std::size_t cap);

/// Answers "is gamma_i(G - removed) <= k" for a fixed base graph G without
/// rebuilding adjacency per query. Thread-safe for concurrent queries.
class IndependentDominationProbe {
public:
    explicit IndependentDominationProbe(const Graph& g);
    ~IndependentDominationProbe();
    IndependentDominationProbe(IndependentDominationProbe&&) noexcept;
    IndependentDominationProbe& operator=(IndependentDominationProbe&&) noexcept;

    /// `removed` holds indices into the base graph's edges().
    bool at_most(std::span<const int> removed, int k) const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

}  // namespace bondagelab
