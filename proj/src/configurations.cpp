#include "bondagelab/configurations.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <sstream>

namespace bondagelab {

namespace {

constexpr std::array kAllKinds = {ConfigKind::A,       ConfigKind::B,       ConfigKind::C,       ConfigKind::DI,
                                  ConfigKind::DII,     ConfigKind::EIAlpha, ConfigKind::EIBeta,  ConfigKind::EIDelta,
                                  ConfigKind::EII,     ConfigKind::F,       ConfigKind::G,       ConfigKind::H};

constexpr std::array kVertexKinds = {ConfigKind::DI,      ConfigKind::DII, ConfigKind::EIAlpha,
                                     ConfigKind::EIBeta,  ConfigKind::EIDelta, ConfigKind::EII,
                                     ConfigKind::F,       ConfigKind::G,   ConfigKind::H};

TemplateSlot deg3(int p) { return {p, 3, 3}; }
TemplateSlot upto(int p, int k) { return {p, 0, k}; }

std::map<ConfigKind, std::vector<VertexTemplate>> build_templates() {
    using K = ConfigKind;
    std::map<K, std::vector<VertexTemplate>> t;
    const std::string all3_9(9, '3');
    const std::string all3_10(10, '3');
    const std::string fan9 = "33333333+";  // 4+-face between u_9 and u_1

    // (d): all faces at v are 3-faces, so I alternates around the rim. Every
    // assignment of the degree profile is listed up to the mirror symmetry
    // that the orientation search already covers.
    t[K::DI] = {
        {K::DI, 10, all3_10, {deg3(1), deg3(3), deg3(5), deg3(7), upto(9, 5)}, -1, -1, true},
        {K::DI, 9, all3_9, {deg3(1), deg3(3), deg3(5), upto(7, 5)}, -1, -1, true},
        {K::DI, 9, all3_9, {deg3(1), upto(3, 5), deg3(5), deg3(7)}, -1, -1, false},
    };
    t[K::DII] = {
        {K::DII, 10, all3_10, {deg3(1), deg3(3), deg3(5), upto(7, 4), upto(9, 4)}, -1, -1, true},
        {K::DII, 9, all3_9, {deg3(1), deg3(3), upto(5, 4), upto(7, 4)}, -1, -1, true},
        {K::DII, 10, all3_10, {deg3(1), deg3(3), upto(5, 4), deg3(7), upto(9, 4)}, -1, -1, false},
        {K::DII, 9, all3_9, {upto(1, 4), deg3(3), upto(5, 4), deg3(7)}, -1, -1, false},
        {K::DII, 9, all3_9, {upto(1, 4), deg3(3), deg3(5), upto(7, 4)}, -1, -1, false},
        {K::DII, 9, all3_9, {deg3(1), upto(3, 4), upto(5, 4), deg3(7)}, -1, -1, false},
    };
    // (e)(i): a 9-fan u_1..u_9 closed by one 4+-face.
    t[K::EIAlpha] = {
        {K::EIAlpha, 9, fan9, {deg3(2), deg3(4), deg3(6), upto(8, 5)}, -1, -1, true},
        {K::EIAlpha, 9, fan9, {deg3(2), upto(4, 5), deg3(6), deg3(8)}, -1, -1, false},
    };
    t[K::EIBeta] = {
        {K::EIBeta, 9, fan9, {deg3(1), deg3(3), deg3(5), deg3(7), upto(9, 7)}, -1, -1, true},
    };
    t[K::EIDelta] = {
        {K::EIDelta, 9, fan9, {deg3(1), deg3(3), deg3(5), deg3(8)}, -1, -1, true},
        {K::EIDelta, 9, fan9, {deg3(1), deg3(3), deg3(6), deg3(8)}, -1, -1, false},
        {K::EIDelta, 9, fan9, {deg3(1), deg3(4), deg3(6), deg3(8)}, -1, -1, false},
    };
    // (e)(ii): edge v u_9 lies on both 4+-faces.
    t[K::EII] = {
        {K::EII, 9, "3333333++", {deg3(1), deg3(3), deg3(5), deg3(7), upto(9, 6)}, -1, -1, true},
    };
    // (f): u_1u_2 and u_4u_5 are separated by the two 4+-faces.
    t[K::F] = {
        {K::F, 8, "+33+3333", {deg3(1), deg3(2), deg3(4), deg3(5), upto(7, 5)}, -1, -1, true},
    };
    // (g): only the face counts are fixed; independence of I forces 4+-faces
    // at f_4 and f_7, the third one is free.
    t[K::G] = {
        {K::G, 8, std::string(8, '*'), {deg3(2), deg3(4), deg3(5), deg3(7), deg3(8)}, 5, 3, true},
    };
    t[K::H] = {
        {K::H, 10, "333333333+", {deg3(1), deg3(3), deg3(5), deg3(7), deg3(9)}, -1, -1, true},
    };
    return t;
}

const std::map<ConfigKind, std::vector<VertexTemplate>>& templates() {
    static const auto table = build_templates();
    return table;
}

std::optional<ConfigKind> edge_label(const PlaneGraph& g, const Edge& e, int& f1deg, int& f2deg) {
    const int sum = g.degree(e.u) + g.degree(e.v);
    const auto [f1, f2] = g.edge_faces(e.u, e.v);
    f1deg = g.face_degree(f1);
    f2deg = g.face_degree(f2);
    const bool distinct = f1 != f2;
    const int threes = (f1deg == 3) + (distinct && f2deg == 3);
    if (sum <= 11 && threes == 2) return ConfigKind::A;
    if (sum <= 10 && threes >= 1) return ConfigKind::B;
    if (sum <= 9) return ConfigKind::C;
    return std::nullopt;
}

bool edge_clause_holds(const PlaneGraph& g, const Edge& e, ConfigKind kind) {
    const int sum = g.degree(e.u) + g.degree(e.v);
    const auto [f1, f2] = g.edge_faces(e.u, e.v);
    const int threes = (g.face_degree(f1) == 3) + (f1 != f2 && g.face_degree(f2) == 3);
    switch (kind) {
        case ConfigKind::A: return sum <= 11 && threes == 2;
        case ConfigKind::B: return sum <= 10 && threes >= 1;
        case ConfigKind::C: return sum <= 9;
        default: return false;
    }
}

ConfigurationWitness edge_witness(const PlaneGraph& g, const Edge& e, ConfigKind kind) {
    ConfigurationWitness w;
    w.kind = kind;
    w.edge = e;
    const auto [f1, f2] = g.edge_faces(e.u, e.v);
    w.face_pattern = {g.face_degree(f1), g.face_degree(f2)};
    w.rim_faces = {f1, f2};
    return w;
}

std::optional<ConfigurationWitness> match_layout(const PlaneGraph& g, int v, const VertexTemplate& t, int layout,
                                                 int offset, int orientation) {
    const int d = g.degree(v);
    if (d != t.degree) return std::nullopt;
    const auto rot = g.rotation(v);

    ConfigurationWitness w;
    w.kind = t.kind;
    w.center = v;
    w.offset = offset;
    w.orientation = orientation;
    w.layout = layout;
    w.rim.resize(d);
    w.rim_faces.resize(d);
    w.face_pattern.resize(d);
    int threes = 0;
    int bigs = 0;
    for (int j = 1; j <= d; ++j) {
        const int p = ((offset + orientation * (j - 1)) % d + d) % d;
        w.rim[j - 1] = rot[p];
        const int corner = orientation > 0 ? p : p - 1;
        const int f = g.corner_face(v, corner);
        const int fd = g.face_degree(f);
        w.rim_faces[j - 1] = f;
        w.face_pattern[j - 1] = fd;
        const char want = t.faces[j - 1];
        if (want == '3' && fd != 3) return std::nullopt;
        if (want == '+' && fd < 4) return std::nullopt;
        (fd == 3 ? threes : bigs) += 1;
    }
    if (t.three_faces >= 0 && threes != t.three_faces) return std::nullopt;
    if (t.big_faces >= 0 && bigs != t.big_faces) return std::nullopt;

    for (const TemplateSlot& s : t.slots) {
        const int u = w.rim[s.position - 1];
        const int du = g.degree(u);
        if (du < s.min_degree || du > s.max_degree) return std::nullopt;
        w.independent_set.push_back(u);
    }
    for (std::size_t i = 0; i < w.independent_set.size(); ++i)
        for (std::size_t j = i + 1; j < w.independent_set.size(); ++j)
            if (g.adjacent(w.independent_set[i], w.independent_set[j])) return std::nullopt;
    return w;
}

}  // namespace

std::string_view kind_name(ConfigKind k) {
    switch (k) {
        case ConfigKind::A: return "a";
        case ConfigKind::B: return "b";
        case ConfigKind::C: return "c";
        case ConfigKind::DI: return "d_i";
        case ConfigKind::DII: return "d_ii";
        case ConfigKind::EIAlpha: return "e_i_alpha";
        case ConfigKind::EIBeta: return "e_i_beta";
        case ConfigKind::EIDelta: return "e_i_delta";
        case ConfigKind::EII: return "e_ii";
        case ConfigKind::F: return "f";
        case ConfigKind::G: return "g";
        case ConfigKind::H: return "h";
    }
    return "?";
}

std::optional<ConfigKind> parse_kind(std::string_view name) {
    for (ConfigKind k : kAllKinds)
        if (kind_name(k) == name) return k;
    return std::nullopt;
}

bool is_edge_kind(ConfigKind k) { return k == ConfigKind::A || k == ConfigKind::B || k == ConfigKind::C; }

const std::vector<VertexTemplate>& vertex_templates(ConfigKind kind) {
    static const std::vector<VertexTemplate> none;
    auto it = templates().find(kind);
    return it == templates().end() ? none : it->second;
}

std::vector<ConfigurationWitness> detect_edge_configs(const PlaneGraph& g) {
    std::vector<ConfigurationWitness> out;
    for (const Edge& e : g.edges()) {
        int d1 = 0;
        int d2 = 0;
        if (auto k = edge_label(g, e, d1, d2)) out.push_back(edge_witness(g, e, *k));
    }
    return out;
}

std::optional<ConfigurationWitness> match_vertex_kind(const PlaneGraph& g, int v, ConfigKind kind) {
    const auto& ts = vertex_templates(kind);
    const int d = g.degree(v);
    for (std::size_t layout = 0; layout < ts.size(); ++layout) {
        if (ts[layout].degree != d) continue;
        for (int orientation : {1, -1})
            for (int offset = 0; offset < d; ++offset)
                if (auto w = match_layout(g, v, ts[layout], static_cast<int>(layout), offset, orientation)) return w;
    }
    return std::nullopt;
}

std::vector<ConfigurationWitness> detect_vertex_configs(const PlaneGraph& g) {
    std::vector<ConfigurationWitness> out;
    for (int v = 0; v < g.num_vertices(); ++v) {
        const int d = g.degree(v);
        if (d < 8 || d > 10) continue;
        for (ConfigKind k : kVertexKinds)
            if (auto w = match_vertex_kind(g, v, k)) out.push_back(std::move(*w));
    }
    return out;
}

std::optional<ConfigurationWitness> find_configuration(const PlaneGraph& g) {
    for (ConfigKind k : {ConfigKind::A, ConfigKind::B, ConfigKind::C}) {
        for (const Edge& e : g.edges()) {
            int d1 = 0;
            int d2 = 0;
            if (edge_label(g, e, d1, d2) == k) return edge_witness(g, e, k);
        }
    }
    for (ConfigKind k : kVertexKinds) {
        for (int v = 0; v < g.num_vertices(); ++v) {
            const int d = g.degree(v);
            if (d < 8 || d > 10) continue;
            if (auto w = match_vertex_kind(g, v, k)) return w;
        }
    }
    return std::nullopt;
}

bool validate(const PlaneGraph& g, const ConfigurationWitness& w) {
    if (is_edge_kind(w.kind)) {
        if (!w.edge || w.edge->u < 0 || w.edge->v >= g.num_vertices()) return false;
        if (!g.adjacent(w.edge->u, w.edge->v)) return false;
        return edge_clause_holds(g, *w.edge, w.kind);
    }
    if (w.center < 0 || w.center >= g.num_vertices()) return false;
    const auto& ts = vertex_templates(w.kind);
    if (w.layout < 0 || w.layout >= static_cast<int>(ts.size())) return false;
    if (w.orientation != 1 && w.orientation != -1) return false;
    const int d = g.degree(w.center);
    if (w.offset < 0 || w.offset >= d) return false;
    auto again = match_layout(g, w.center, ts[w.layout], w.layout, w.offset, w.orientation);
    return again && again->rim == w.rim && again->independent_set == w.independent_set &&
           again->face_pattern == w.face_pattern && again->rim_faces == w.rim_faces;
}

std::string to_string(const ConfigurationWitness& w) {
    auto join = [](const std::vector<int>& xs) {
        std::string s;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(xs[i]);
        }
        return s;
    };
    std::ostringstream out;
    out << "config " << kind_name(w.kind) << " center=";
    if (w.edge)
        out << w.edge->u << '-' << w.edge->v;
    else
        out << w.center;
    out << " I=" << join(w.independent_set) << " faces=" << join(w.face_pattern);
    return out.str();
}

}  // namespace bondagelab
