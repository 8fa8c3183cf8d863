#include "bondagelab/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

namespace bondagelab {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw Error(Errc::BadParams, what);
}

std::vector<std::vector<int>> adjacency(int n, const std::vector<Edge>& edges) {
    std::vector<std::vector<int>> adj(n);
    for (const Edge& e : edges) {
        require(e.u >= 0 && e.v < n && e.u != e.v, "edge endpoint out of range");
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    return adj;
}

std::array<double, 2> on_circle(double radius, double angle) {
    return {radius * std::cos(angle), radius * std::sin(angle)};
}

}  // namespace

PlaneGraph from_plane_drawing(const std::vector<std::array<double, 2>>& points, const std::vector<Edge>& edges) {
    const int n = static_cast<int>(points.size());
    auto adj = adjacency(n, edges);
    for (int v = 0; v < n; ++v) {
        const auto p = points[v];
        auto angle = [&](int u) { return std::atan2(points[u][1] - p[1], points[u][0] - p[0]); };
        // Decreasing angle is clockwise.
        std::sort(adj[v].begin(), adj[v].end(), [&](int a, int b) { return angle(a) > angle(b); });
    }
    return PlaneGraph::build(std::move(adj));
}

PlaneGraph from_convex_polyhedron(const std::vector<std::array<double, 3>>& points, const std::vector<Edge>& edges) {
    const int n = static_cast<int>(points.size());
    auto adj = adjacency(n, edges);
    auto sub = [](std::array<double, 3> a, std::array<double, 3> b) {
        return std::array<double, 3>{a[0] - b[0], a[1] - b[1], a[2] - b[2]};
    };
    auto cross = [](std::array<double, 3> a, std::array<double, 3> b) {
        return std::array<double, 3>{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
    };
    auto dot = [](std::array<double, 3> a, std::array<double, 3> b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; };
    for (int v = 0; v < n; ++v) {
        const auto normal = points[v];
        const double nn = dot(normal, normal);
        // Directions to the neighbors, projected onto the tangent plane at v.
        auto tangent = [&](int u) {
            auto d = sub(points[u], points[v]);
            const double t = dot(d, normal) / nn;
            return std::array<double, 3>{d[0] - t * normal[0], d[1] - t * normal[1], d[2] - t * normal[2]};
        };
        const auto ref = tangent(adj[v].front());
        const auto ref2 = cross(normal, ref);
        auto angle = [&](int u) {
            const auto d = tangent(u);
            return std::atan2(dot(d, ref2), dot(d, ref));
        };
        // Same handedness at every vertex; the orientation itself is irrelevant.
        std::sort(adj[v].begin(), adj[v].end(), [&](int a, int b) { return angle(a) > angle(b); });
    }
    return PlaneGraph::build(std::move(adj));
}

PlaneGraph make_cycle(int n) {
    require(n >= 3, "cycle needs n >= 3");
    std::vector<std::array<double, 2>> pts;
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) {
        pts.push_back(on_circle(1.0, 2 * std::numbers::pi * i / n));
        edges.emplace_back(i, (i + 1) % n);
    }
    return from_plane_drawing(pts, edges);
}

PlaneGraph make_wheel(int n) {
    require(n >= 3, "wheel needs n >= 3");
    std::vector<std::array<double, 2>> pts;
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) {
        pts.push_back(on_circle(1.0, 2 * std::numbers::pi * i / n));
        edges.emplace_back(i, (i + 1) % n);
        edges.emplace_back(i, n);
    }
    pts.push_back({0.0, 0.0});
    return from_plane_drawing(pts, edges);
}

PlaneGraph make_fan(int n) {
    require(n >= 1, "fan needs n >= 1");
    std::vector<std::array<double, 2>> pts;
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) {
        pts.push_back({static_cast<double>(i), 0.0});
        if (i + 1 < n) edges.emplace_back(i, i + 1);
        edges.emplace_back(i, n);
    }
    pts.push_back({(n - 1) / 2.0, 1.0});
    return from_plane_drawing(pts, edges);
}

PlaneGraph make_k4() {
    std::vector<std::array<double, 2>> pts{on_circle(1, 0), on_circle(1, 2 * std::numbers::pi / 3),
                                           on_circle(1, 4 * std::numbers::pi / 3), {0, 0}};
    return from_plane_drawing(pts, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}

PlaneGraph make_octahedron() {
    std::vector<std::array<double, 3>> pts{{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}};
    std::vector<Edge> edges;
    for (int a = 0; a < 6; ++a)
        for (int b = a + 1; b < 6; ++b)
            if (a / 2 != b / 2) edges.emplace_back(a, b);
    return from_convex_polyhedron(pts, edges);
}

PlaneGraph make_icosahedron() {
    const double phi = std::numbers::phi;
    std::vector<std::array<double, 3>> pts;
    for (double s1 : {-1.0, 1.0}) {
        for (double s2 : {-1.0, 1.0}) {
            pts.push_back({0, s1, s2 * phi});
            pts.push_back({s1, s2 * phi, 0});
            pts.push_back({s2 * phi, 0, s1});
        }
    }
    std::vector<Edge> edges;
    for (int a = 0; a < 12; ++a) {
        for (int b = a + 1; b < 12; ++b) {
            double d2 = 0;
            for (int k = 0; k < 3; ++k) d2 += (pts[a][k] - pts[b][k]) * (pts[a][k] - pts[b][k]);
            if (std::abs(d2 - 4.0) < 1e-9) edges.emplace_back(a, b);
        }
    }
    return from_convex_polyhedron(pts, edges);
}

PlaneGraph make_prism(int n) {
    require(n >= 3, "prism needs n >= 3");
    std::vector<std::array<double, 2>> pts;
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) pts.push_back(on_circle(1.0, 2 * std::numbers::pi * i / n));
    for (int i = 0; i < n; ++i) pts.push_back(on_circle(2.0, 2 * std::numbers::pi * i / n));
    for (int i = 0; i < n; ++i) {
        edges.emplace_back(i, (i + 1) % n);
        edges.emplace_back(n + i, n + (i + 1) % n);
        edges.emplace_back(i, n + i);
    }
    return from_plane_drawing(pts, edges);
}

PlaneGraph make_stacked_triangulation(int n, std::uint64_t seed) {
    require(n >= 4, "stacked triangulation needs n >= 4");
    std::vector<std::vector<int>> rot = make_k4().rotations();
    // Triangles as dart-ordered triples (a,b,c): c follows a at b.
    std::vector<std::array<int, 3>> tris;
    {
        const PlaneGraph k4 = PlaneGraph::build(rot);
        for (const Face& f : k4.faces())
            tris.push_back({f.boundary[0].from, f.boundary[1].from, f.boundary[2].from});
    }
    std::mt19937_64 rng(seed);
    auto insert_after = [&](int at, int after, int x) {
        auto& r = rot[at];
        auto it = std::find(r.begin(), r.end(), after);
        r.insert(it + 1, x);
    };
    while (static_cast<int>(rot.size()) < n) {
        std::uniform_int_distribution<std::size_t> pick(0, tris.size() - 1);
        const std::size_t t = pick(rng);
        const auto [a, b, c] = tris[t];
        const int x = static_cast<int>(rot.size());
        insert_after(b, a, x);
        insert_after(c, b, x);
        insert_after(a, c, x);
        rot.push_back({a, c, b});
        tris[t] = {a, b, x};
        tris.push_back({b, c, x});
        tris.push_back({c, a, x});
    }
    return PlaneGraph::build(std::move(rot));
}

PlaneGraph make_sparse_planar(int n, std::uint64_t seed, double removal_fraction) {
    require(removal_fraction >= 0.0 && removal_fraction <= 1.0, "removal fraction must lie in [0,1]");
    PlaneGraph g = make_stacked_triangulation(n, seed);
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    std::vector<Edge> order = g.edges();
    std::shuffle(order.begin(), order.end(), rng);
    const int target = static_cast<int>(removal_fraction * g.num_edges());
    int removed = 0;
    for (const Edge& e : order) {
        if (removed >= target) break;
        if (g.degree(e.u) <= 3 || g.degree(e.v) <= 3) continue;
        auto [f1, f2] = g.edge_faces(e.u, e.v);
        if (f1 == f2) continue;  // bridge
        const Edge one[] = {e};
        g = g.without_edges(one);
        ++removed;
    }
    return g;
}

PlaneGraph generate(const std::string& kind, const std::vector<std::int64_t>& params) {
    auto param = [&](std::size_t i, const char* what) -> std::int64_t {
        require(params.size() > i, kind + " needs parameter " + what);
        return params[i];
    };
    auto size = [&](std::size_t i) {
        const std::int64_t v = param(i, "n");
        require(v > 0 && v <= 100000, "size out of range");
        return static_cast<int>(v);
    };
    if (kind == "cycle") return make_cycle(size(0));
    if (kind == "wheel") return make_wheel(size(0));
    if (kind == "fan") return make_fan(size(0));
    if (kind == "k4") return make_k4();
    if (kind == "octahedron") return make_octahedron();
    if (kind == "icosahedron") return make_icosahedron();
    if (kind == "prism") return make_prism(size(0));
    if (kind == "cube") return make_prism(4);
    if (kind == "stacked") return make_stacked_triangulation(size(0), static_cast<std::uint64_t>(param(1, "seed")));
    if (kind == "sparse") return make_sparse_planar(size(0), static_cast<std::uint64_t>(param(1, "seed")));
    throw Error(Errc::BadParams, "unknown generator '" + kind + "'");
}

}  // namespace bondagelab
