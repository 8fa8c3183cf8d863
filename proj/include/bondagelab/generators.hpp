#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "bondagelab/plane_graph.hpp"

namespace bondagelab {

// Deterministic generators. Each returns a validated PlaneGraph.

PlaneGraph make_cycle(int n);
/// Hub is vertex n, rim 0..n-1.
PlaneGraph make_wheel(int n);
/// Hub is vertex n, path 0..n-1.
PlaneGraph make_fan(int n);
PlaneGraph make_k4();
PlaneGraph make_octahedron();
PlaneGraph make_icosahedron();
/// Two n-cycles joined by a matching; make_prism(4) is the cube Q3.
PlaneGraph make_prism(int n);
/// K4 with n-4 random face subdivisions; maximal planar, min degree 3.
PlaneGraph make_stacked_triangulation(int n, std::uint64_t seed);
/// Stacked triangulation with random non-bridge edges removed while keeping
/// minimum degree >= 3. Produces 4+-faces for the discharging rules.
PlaneGraph make_sparse_planar(int n, std::uint64_t seed, double removal_fraction = 0.25);

/// Dispatch by name: cycle, wheel, fan, k4, octahedron, icosahedron, prism,
/// cube, stacked, sparse. `params` holds size then seed where applicable.
PlaneGraph generate(const std::string& kind, const std::vector<std::int64_t>& params);

/// Rotation system of a straight-line drawing: neighbors sorted clockwise
/// by angle. Throws NotPlanarEmbedding if the drawing is not plane.
PlaneGraph from_plane_drawing(const std::vector<std::array<double, 2>>& points, const std::vector<Edge>& edges);

/// Rotation system of a convex polyhedron's skeleton, clockwise as seen
/// from outside. Vertices must surround the origin.
PlaneGraph from_convex_polyhedron(const std::vector<std::array<double, 3>>& points, const std::vector<Edge>& edges);

}  // namespace bondagelab
