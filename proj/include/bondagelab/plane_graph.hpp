#pragma once

#include <compare>
#include <limits>
#include <span>
#include <utility>
#include <vector>

#include "bondagelab/error.hpp"

namespace bondagelab {

inline constexpr int kUnbounded = std::numeric_limits<int>::max();

/// Undirected edge, always stored with u < v.
struct Edge {
    int u = 0;
    int v = 0;

    Edge() = default;
    Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

    bool has(int x) const { return u == x || v == x; }
    int other(int x) const { return x == u ? v : u; }

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct Dart {
    int from = 0;
    int to = 0;
    friend bool operator==(const Dart&, const Dart&) = default;
};

struct Face {
    int id = 0;
    std::vector<Dart> boundary;  // closed walk, boundary[i].to == boundary[i+1].from
    int degree() const { return static_cast<int>(boundary.size()); }
};

/// Maximal run of consecutive triangular corners at `hub`.
struct FanWitness {
    int hub = 0;
    std::vector<int> rim;
    bool is_wheel = false;
};

/// Simple connected graph with a rotation system (clockwise neighbor order
/// per vertex). Faces are traced at build time: the face successor of dart
/// (u,v) is (v,w) where w immediately follows u in the rotation at v.
/// Immutable after build().
class PlaneGraph {
public:
    static PlaneGraph build(std::vector<std::vector<int>> rotations);

    int num_vertices() const { return static_cast<int>(rotation_.size()); }
    int num_edges() const { return static_cast<int>(edges_.size()); }
    int num_faces() const { return static_cast<int>(faces_.size()); }

    std::span<const int> rotation(int v) const;
    const std::vector<std::vector<int>>& rotations() const { return rotation_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<Face>& faces() const { return faces_; }
    const Face& face(int f) const;

    int degree(int v) const;
    int face_degree(int f) const { return face(f).degree(); }
    int min_degree() const;
    int max_degree() const;

    bool adjacent(int u, int v) const { return edge_index(u, v) >= 0; }
    /// Index into edges(), or -1 when u and v are not adjacent.
    int edge_index(int u, int v) const;
    /// Position of u in the rotation at v, or -1.
    int rotation_position(int v, int u) const;

    int face_of_dart(int from, int to) const;
    /// Face in the corner at v between rotation(v)[i] and rotation(v)[i+1].
    int corner_face(int v, int i) const;
    /// One entry per corner, so a face incident twice at a cut vertex appears twice.
    std::vector<int> corner_faces(int v) const;
    /// Number of distinct faces incident with v, |F(v)|.
    int distinct_face_count(int v) const;
    /// The two faces on either side of edge uv (equal for a bridge).
    std::pair<int, int> edge_faces(int u, int v) const;

    /// N(v) restricted to neighbors whose degree lies in [lo, hi].
    std::vector<int> neighbors_with_degree(int v, int lo = 0, int hi = kUnbounded) const;
    /// Distinct faces at v whose degree lies in [lo, hi], ascending by id.
    std::vector<int> faces_at(int v, int lo = 0, int hi = kUnbounded) const;
    /// Corner incidences at v whose face degree lies in [lo, hi].
    int face_incidences(int v, int lo, int hi = kUnbounded) const;

    /// The neighbor of u next to v in u's rotation, on the side of face f.
    /// Returns -1 if uv does not border f.
    int side_neighbor(int u, int v, int f) const;

    /// Rebuilds with the given edges removed from the rotation system.
    PlaneGraph without_edges(std::span<const Edge> removed) const;

private:
    void check_id(int v) const;

    std::vector<std::vector<int>> rotation_;
    std::vector<int> dart_offset_;
    std::vector<int> dart_face_;
    std::vector<std::vector<std::pair<int, int>>> edge_lookup_;  // sorted (neighbor, edge id)
    std::vector<Edge> edges_;
    std::vector<Face> faces_;
};

std::vector<FanWitness> find_fan(const PlaneGraph& g, int hub);

}  // namespace bondagelab
