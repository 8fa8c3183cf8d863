#include "bondagelab/plane_graph.hpp"

#include <algorithm>
#include <queue>
#include <string>

namespace bondagelab {

namespace {

std::string vname(int v) { return "vertex " + std::to_string(v); }

}  // namespace

PlaneGraph PlaneGraph::build(std::vector<std::vector<int>> rotations) {
    const int n = static_cast<int>(rotations.size());
    if (n == 0) throw Error(Errc::EmptyGraph, "graph has no vertices");

    for (int v = 0; v < n; ++v) {
        std::vector<int> seen;
        for (int u : rotations[v]) {
            if (u < 0 || u >= n)
                throw Error(Errc::InvalidId, vname(v) + " lists unknown id " + std::to_string(u), v);
            if (u == v) throw Error(Errc::SelfLoop, vname(v) + " lists itself", v);
            seen.push_back(u);
        }
        std::sort(seen.begin(), seen.end());
        if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
            throw Error(Errc::DuplicateNeighbor, vname(v) + " repeats a neighbor", v);
    }

    PlaneGraph g;
    g.rotation_ = std::move(rotations);
    g.edge_lookup_.resize(n);
    for (int v = 0; v < n; ++v) {
        for (int u : g.rotation_[v]) {
            const auto& ru = g.rotation_[u];
            if (std::find(ru.begin(), ru.end(), v) == ru.end())
                throw Error(Errc::AsymmetricAdjacency,
                            vname(v) + " lists " + std::to_string(u) + " but not vice versa", v);
            if (v < u) g.edges_.emplace_back(v, u);
        }
    }
    if (g.edges_.empty()) throw Error(Errc::EmptyGraph, "graph has no edges");
    std::sort(g.edges_.begin(), g.edges_.end());
    for (int e = 0; e < g.num_edges(); ++e) {
        g.edge_lookup_[g.edges_[e].u].emplace_back(g.edges_[e].v, e);
        g.edge_lookup_[g.edges_[e].v].emplace_back(g.edges_[e].u, e);
    }
    for (auto& l : g.edge_lookup_) std::sort(l.begin(), l.end());

    {
        std::vector<char> seen(n, 0);
        std::queue<int> q;
        q.push(0);
        seen[0] = 1;
        int reached = 1;
        while (!q.empty()) {
            const int v = q.front();
            q.pop();
            for (int u : g.rotation_[v]) {
                if (!seen[u]) {
                    seen[u] = 1;
                    ++reached;
                    q.push(u);
                }
            }
        }
        if (reached != n) {
            const int missing = static_cast<int>(std::find(seen.begin(), seen.end(), 0) - seen.begin());
            throw Error(Errc::NotConnected, vname(missing) + " is unreachable from vertex 0", missing);
        }
    }

    g.dart_offset_.resize(n + 1, 0);
    for (int v = 0; v < n; ++v)
        g.dart_offset_[v + 1] = g.dart_offset_[v] + static_cast<int>(g.rotation_[v].size());
    g.dart_face_.assign(g.dart_offset_[n], -1);

    for (int v = 0; v < n; ++v) {
        for (int i = 0; i < static_cast<int>(g.rotation_[v].size()); ++i) {
            if (g.dart_face_[g.dart_offset_[v] + i] >= 0) continue;
            Face f;
            f.id = g.num_faces();
            int from = v;
            int pos = i;
            while (g.dart_face_[g.dart_offset_[from] + pos] < 0) {
                g.dart_face_[g.dart_offset_[from] + pos] = f.id;
                const int to = g.rotation_[from][pos];
                f.boundary.push_back({from, to});
                const auto& rt = g.rotation_[to];
                const int back = g.rotation_position(to, from);
                pos = (back + 1) % static_cast<int>(rt.size());
                from = to;
            }
            g.faces_.push_back(std::move(f));
        }
    }

    if (n - g.num_edges() + g.num_faces() != 2)
        throw Error(Errc::NotPlanarEmbedding,
                    "Euler check failed: " + std::to_string(n) + " - " + std::to_string(g.num_edges()) +
                        " + " + std::to_string(g.num_faces()) + " != 2");
    return g;
}

void PlaneGraph::check_id(int v) const {
    if (v < 0 || v >= num_vertices()) throw Error(Errc::InvalidId, "no vertex " + std::to_string(v), v);
}

std::span<const int> PlaneGraph::rotation(int v) const {
    check_id(v);
    return rotation_[v];
}

const Face& PlaneGraph::face(int f) const {
    if (f < 0 || f >= num_faces()) throw Error(Errc::InvalidId, "no face " + std::to_string(f));
    return faces_[f];
}

int PlaneGraph::degree(int v) const {
    check_id(v);
    return static_cast<int>(rotation_[v].size());
}

int PlaneGraph::min_degree() const {
    int d = kUnbounded;
    for (const auto& r : rotation_) d = std::min(d, static_cast<int>(r.size()));
    return d;
}

int PlaneGraph::max_degree() const {
    int d = 0;
    for (const auto& r : rotation_) d = std::max(d, static_cast<int>(r.size()));
    return d;
}

int PlaneGraph::edge_index(int u, int v) const {
    check_id(u);
    check_id(v);
    const auto& l = edge_lookup_[u];
    auto it = std::lower_bound(l.begin(), l.end(), std::pair{v, -1});
    return (it != l.end() && it->first == v) ? it->second : -1;
}

int PlaneGraph::rotation_position(int v, int u) const {
    const auto& r = rotation_[v];
    auto it = std::find(r.begin(), r.end(), u);
    return it == r.end() ? -1 : static_cast<int>(it - r.begin());
}

int PlaneGraph::face_of_dart(int from, int to) const {
    check_id(from);
    const int p = rotation_position(from, to);
    if (p < 0) throw Error(Errc::InvalidId, "no dart " + std::to_string(from) + "->" + std::to_string(to));
    return dart_face_[dart_offset_[from] + p];
}

int PlaneGraph::corner_face(int v, int i) const {
    check_id(v);
    const int d = degree(v);
    const int next = ((i + 1) % d + d) % d;
    return dart_face_[dart_offset_[v] + next];
}

std::vector<int> PlaneGraph::corner_faces(int v) const {
    std::vector<int> out(degree(v));
    for (int i = 0; i < degree(v); ++i) out[i] = corner_face(v, i);
    return out;
}

int PlaneGraph::distinct_face_count(int v) const {
    auto fs = corner_faces(v);
    std::sort(fs.begin(), fs.end());
    return static_cast<int>(std::unique(fs.begin(), fs.end()) - fs.begin());
}

std::pair<int, int> PlaneGraph::edge_faces(int u, int v) const {
    return {face_of_dart(u, v), face_of_dart(v, u)};
}

std::vector<int> PlaneGraph::neighbors_with_degree(int v, int lo, int hi) const {
    check_id(v);
    std::vector<int> out;
    for (int u : rotation_[v]) {
        const int d = degree(u);
        if (d >= lo && d <= hi) out.push_back(u);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> PlaneGraph::faces_at(int v, int lo, int hi) const {
    std::vector<int> out;
    for (int f : corner_faces(v)) {
        const int d = face_degree(f);
        if (d >= lo && d <= hi) out.push_back(f);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

int PlaneGraph::face_incidences(int v, int lo, int hi) const {
    int count = 0;
    for (int f : corner_faces(v)) {
        const int d = face_degree(f);
        if (d >= lo && d <= hi) ++count;
    }
    return count;
}

int PlaneGraph::side_neighbor(int u, int v, int f) const {
    const int p = rotation_position(u, v);
    if (p < 0) return -1;
    const int d = degree(u);
    if (corner_face(u, p) == f) return rotation_[u][(p + 1) % d];
    if (corner_face(u, p - 1) == f) return rotation_[u][(p - 1 + d) % d];
    return -1;
}

PlaneGraph PlaneGraph::without_edges(std::span<const Edge> removed) const {
    auto rot = rotation_;
    for (const Edge& e : removed) {
        std::erase(rot[e.u], e.v);
        std::erase(rot[e.v], e.u);
    }
    return build(std::move(rot));
}

std::vector<FanWitness> find_fan(const PlaneGraph& g, int hub) {
    const auto rot = g.rotation(hub);
    const int d = static_cast<int>(rot.size());
    std::vector<char> tri(d);
    for (int i = 0; i < d; ++i) {
        // A 3-face in the corner is the triangle hub, rot[i], rot[i+1].
        tri[i] = g.face_degree(g.corner_face(hub, i)) == 3 && d > 1;
    }

    std::vector<FanWitness> fans;
    if (std::all_of(tri.begin(), tri.end(), [](char t) { return t; }) && d >= 3) {
        FanWitness w{hub, std::vector<int>(rot.begin(), rot.end()), true};
        fans.push_back(std::move(w));
        return fans;
    }

    // Start right after a non-triangular corner so that runs are not split.
    int start = 0;
    for (int i = 0; i < d; ++i) {
        if (!tri[i]) {
            start = (i + 1) % d;
            break;
        }
    }
    FanWitness cur{hub, {rot[start]}, false};
    for (int k = 0; k < d; ++k) {
        const int i = (start + k) % d;
        if (k + 1 < d && tri[i]) {
            cur.rim.push_back(rot[(i + 1) % d]);
        } else {
            if (cur.rim.size() >= 3) cur.is_wheel = g.adjacent(cur.rim.front(), cur.rim.back());
            fans.push_back(std::move(cur));
            cur = FanWitness{hub, {rot[(i + 1) % d]}, false};
        }
    }
    return fans;
}

}  // namespace bondagelab
