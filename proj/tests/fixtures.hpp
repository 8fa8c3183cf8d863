#pragma once

// Hand-drawn plane graphs realizing the vertex configurations, and bridge
// graphs for the lone-face 3-vertex property.

#include <array>
#include <cmath>
#include <numbers>
#include <vector>

#include "bondagelab/generators.hpp"

namespace fixture {

using bondagelab::Edge;
using bondagelab::PlaneGraph;

/// Center 0 of degree d with rim u_j = vertex j, drawn clockwise.
/// `big[j-1]` makes f_j (between u_j and u_{j+1}) a 4-face through a new
/// vertex y_j; otherwise u_j u_{j+1} is an edge. `rim_degree[j-1]` is the
/// target degree of u_j, reached with spokes to an outer cycle that also
/// picks up every y_j. All outer vertices end with degree 3.
inline PlaneGraph configuration(int d, const std::vector<bool>& big, const std::vector<int>& rim_degree) {
    using P = std::array<double, 2>;
    const double step = 2 * std::numbers::pi / d;
    auto at = [](double r, double a) { return P{r * std::cos(a), r * std::sin(a)}; };
    auto theta = [&](int j) { return std::numbers::pi / 2 - step * (j - 1); };

    std::vector<P> pts{{0, 0}};
    std::vector<Edge> edges;
    std::vector<int> deg(d + 1, 1);
    for (int j = 1; j <= d; ++j) {
        pts.push_back(at(1, theta(j)));
        edges.emplace_back(0, j);
    }
    struct Anchor {
        double angle;
        int vertex;
    };
    std::vector<Anchor> anchors;
    for (int j = 1; j <= d; ++j) {
        const int next = j % d + 1;
        if (big[j - 1]) {
            const int y = static_cast<int>(pts.size());
            pts.push_back(at(2, theta(j) - step / 2));
            edges.emplace_back(j, y);
            edges.emplace_back(next, y);
            anchors.push_back({theta(j) - step / 2, y});
        } else {
            edges.emplace_back(j, next);
        }
        ++deg[j];
        ++deg[next];
    }
    for (int j = 1; j <= d; ++j) {
        const int extra = rim_degree[j - 1] - deg[j];
        for (int k = 0; k < extra; ++k) anchors.push_back({theta(j) + step * 0.3 * (k - (extra - 1) / 2.0) / extra, j});
    }
    std::sort(anchors.begin(), anchors.end(), [](const Anchor& a, const Anchor& b) { return a.angle > b.angle; });
    const int first = static_cast<int>(pts.size());
    const int ring = static_cast<int>(anchors.size());
    for (int k = 0; k < ring; ++k) {
        pts.push_back(at(3, anchors[k].angle));
        edges.emplace_back(anchors[k].vertex, first + k);
        edges.emplace_back(first + k, first + (k + 1) % ring);
    }
    return bondagelab::from_plane_drawing(pts, edges);
}

inline std::vector<bool> big_at(int d, std::initializer_list<int> faces) {
    std::vector<bool> big(d, false);
    for (int j : faces) big[j - 1] = true;
    return big;
}

/// (h): d = 10, f_10 the only 4+-face, odd rim vertices of degree 3.
inline PlaneGraph config_h() { return configuration(10, big_at(10, {10}), {3, 5, 3, 5, 3, 5, 3, 5, 3, 5}); }

/// (g): d = 8, 4+-faces f_1, f_4, f_7, rim vertices 2, 4, 5, 7, 8 of degree 3.
inline PlaneGraph config_g() { return configuration(8, big_at(8, {1, 4, 7}), {5, 3, 5, 3, 3, 5, 3, 3}); }

/// (f): d = 8, 4+-faces f_1 and f_4, rim vertices 1, 2, 4, 5 of degree 3 and u_7 of degree 5.
inline PlaneGraph config_f() { return configuration(8, big_at(8, {1, 4}), {3, 3, 6, 3, 3, 6, 5, 6}); }

/// (e)(ii): d = 9, 4+-faces f_8 and f_9, rim 1, 3, 5, 7 of degree 3, u_9 of degree 6.
inline PlaneGraph config_e_ii() { return configuration(9, big_at(9, {8, 9}), {3, 6, 3, 6, 3, 6, 3, 6, 6}); }

/// (d)(i) on a 10-wheel with an outer cycle: odd rim of degree 3, u_9 of degree 5.
inline PlaneGraph config_d_i_10() { return configuration(10, big_at(10, {}), {3, 6, 3, 6, 3, 6, 3, 6, 5, 6}); }

/// One 3-vertex whose three edges are bridges to triangles a_i p_i q_i with
/// five more vertices inside, each joined to a_i, so d(a_i) = 8. The lone
/// face at the 3-vertex has length exactly 15.
inline PlaneGraph lone_face_tight() {
    using P = std::array<double, 2>;
    std::vector<P> pts{{0, 0}};
    std::vector<Edge> edges;
    for (int i = 0; i < 3; ++i) {
        const double phi = 2 * std::numbers::pi * i / 3;
        const double c = std::cos(phi), s = std::sin(phi);
        auto place = [&](double x, double y) {
            y += 5;
            pts.push_back({c * x - s * y, s * x + c * y});
            return static_cast<int>(pts.size()) - 1;
        };
        const int a = place(0, -2);
        const int p = place(-1, 0);
        std::vector<int> path{p};
        for (int k = 1; k <= 5; ++k) path.push_back(place(-1 + k / 3.0, -0.1));
        const int q = place(1, 0);
        path.push_back(q);
        edges.emplace_back(0, a);
        edges.emplace_back(p, q);
        for (std::size_t k = 0; k < path.size(); ++k) {
            edges.emplace_back(a, path[k]);
            if (k + 1 < path.size()) edges.emplace_back(path[k], path[k + 1]);
        }
    }
    return bondagelab::from_plane_drawing(pts, edges);
}

/// A 3-vertex hanging off three fans of seven rim vertices; hubs of degree 8.
inline PlaneGraph lone_face_fans() {
    using P = std::array<double, 2>;
    std::vector<P> pts{{0, 0}};
    std::vector<Edge> edges;
    for (int i = 0; i < 3; ++i) {
        const double phi = 2 * std::numbers::pi * i / 3;
        const int hub = static_cast<int>(pts.size());
        pts.push_back({3 * std::cos(phi), 3 * std::sin(phi)});
        edges.emplace_back(0, hub);
        for (int k = 0; k < 7; ++k) {
            const double a = phi - 1.2 + 2.4 * k / 6;
            pts.push_back({3 * std::cos(phi) + 2 * std::cos(a), 3 * std::sin(phi) + 2 * std::sin(a)});
            edges.emplace_back(hub, hub + 1 + k);
            if (k > 0) edges.emplace_back(hub + k, hub + 1 + k);
        }
    }
    return bondagelab::from_plane_drawing(pts, edges);
}

}  // namespace fixture
