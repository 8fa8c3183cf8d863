#include <doctest.h>

#include "bondagelab/configurations.hpp"
#include "bondagelab/corpus.hpp"
#include "bondagelab/domination.hpp"
#include "bondagelab/generators.hpp"
#include "fixtures.hpp"

using namespace bondagelab;

namespace {

// Clause predicates restated from scratch for edge witnesses.
bool edge_clause_holds(const PlaneGraph& g, const ConfigurationWitness& w) {
    const Edge e = *w.edge;
    const int sum = g.degree(e.u) + g.degree(e.v);
    const auto [f1, f2] = g.edge_faces(e.u, e.v);
    const int threes = (g.face_degree(f1) == 3) + (f1 != f2 && g.face_degree(f2) == 3);
    switch (w.kind) {
        case ConfigKind::A: return sum <= 11 && threes == 2;
        case ConfigKind::B: return sum <= 10 && threes >= 1;
        case ConfigKind::C: return sum <= 9;
        default: return false;
    }
}

int count_kind(const std::vector<ConfigurationWitness>& ws, ConfigKind k) {
    return static_cast<int>(std::count_if(ws.begin(), ws.end(), [&](const auto& w) { return w.kind == k; }));
}

PlaneGraph mirrored(const PlaneGraph& g) {
    auto rot = g.rotations();
    for (auto& r : rot) std::reverse(r.begin(), r.end());
    return PlaneGraph::build(rot);
}

}  // namespace

TEST_CASE("kind names round trip") {
    for (ConfigKind k : {ConfigKind::A, ConfigKind::B, ConfigKind::C, ConfigKind::DI, ConfigKind::DII,
                         ConfigKind::EIAlpha, ConfigKind::EIBeta, ConfigKind::EIDelta, ConfigKind::EII, ConfigKind::F,
                         ConfigKind::G, ConfigKind::H})
        CHECK(parse_kind(kind_name(k)) == k);
    CHECK_FALSE(parse_kind("z").has_value());
    CHECK(is_edge_kind(ConfigKind::C));
    CHECK_FALSE(is_edge_kind(ConfigKind::H));
}

TEST_CASE("edge configurations on small solids") {
    auto k4 = detect_edge_configs(make_k4());
    CHECK(k4.size() == 6);
    CHECK(count_kind(k4, ConfigKind::A) == 6);

    auto ico = detect_edge_configs(make_icosahedron());
    CHECK(ico.size() == 30);
    CHECK(count_kind(ico, ConfigKind::A) == 30);

    auto cube = detect_edge_configs(make_prism(4));
    CHECK(cube.size() == 12);
    CHECK(count_kind(cube, ConfigKind::C) == 12);

    auto ico_first = find_configuration(make_icosahedron());
    REQUIRE(ico_first);
    CHECK(ico_first->kind == ConfigKind::A);
    auto k4_first = find_configuration(make_k4());
    REQUIRE(k4_first);
    CHECK(k4_first->kind == ConfigKind::A);
    CHECK(*k4_first->edge == Edge(0, 1));

    auto c5 = find_configuration(make_cycle(5));
    REQUIRE(c5);
    CHECK(c5->kind == ConfigKind::C);
    CHECK(to_string(*c5) == "config c center=0-1 I= faces=5,5");
}

TEST_CASE("octahedron: kind b needs a 3-face and sum at most 10") {
    // Every edge has sum 8 and two 3-faces, so every edge is kind a.
    auto w = detect_edge_configs(make_octahedron());
    CHECK(count_kind(w, ConfigKind::A) == 12);
    // The 5-wheel's rim edges lie on one 3-face and the outer 5-face.
    auto wheel = detect_edge_configs(make_wheel(5));
    CHECK(count_kind(wheel, ConfigKind::B) == 5);
    CHECK(count_kind(wheel, ConfigKind::A) == 5);
}

TEST_CASE("vertex configurations on wheels") {
    CHECK(detect_vertex_configs(make_icosahedron()).empty());

    auto w10 = make_wheel(10);
    auto di = match_vertex_kind(w10, 10, ConfigKind::DI);
    REQUIRE(di);
    CHECK(di->independent_set.size() == 5);
    CHECK(is_independent(w10, di->independent_set));
    for (int u : di->independent_set) CHECK(w10.degree(u) == 3);
    CHECK(std::vector<int>{di->u(1), di->u(3), di->u(5), di->u(7), di->u(9)} == di->independent_set);

    auto w9 = make_wheel(9);
    auto all9 = detect_vertex_configs(w9);
    REQUIRE_FALSE(all9.empty());
    for (const auto& w : all9) {
        CHECK(w.center == 9);
        CHECK((w.kind == ConfigKind::DI || w.kind == ConfigKind::DII));
        CHECK(w.face_pattern == std::vector<int>(9, 3));
        CHECK(validate(w9, w));
    }
    // A hub of degree 11 is out of range.
    CHECK(detect_vertex_configs(make_wheel(11)).empty());
}

TEST_CASE("hand-built vertex configurations are found") {
    struct Case {
        const char* name;
        PlaneGraph g;
        ConfigKind kind;
        std::vector<int> independent;
    };
    std::vector<Case> cases{
        {"h", fixture::config_h(), ConfigKind::H, {1, 3, 5, 7, 9}},
        {"g", fixture::config_g(), ConfigKind::G, {2, 4, 5, 7, 8}},
        {"f", fixture::config_f(), ConfigKind::F, {1, 2, 4, 5, 7}},
        {"e_ii", fixture::config_e_ii(), ConfigKind::EII, {1, 3, 5, 7, 9}},
        {"d_i", fixture::config_d_i_10(), ConfigKind::DI, {1, 3, 5, 7, 9}},
    };
    for (const auto& c : cases) {
        CAPTURE(c.name);
        CHECK(c.g.min_degree() >= 3);
        auto w = match_vertex_kind(c.g, 0, c.kind);
        REQUIRE(w);
        CHECK(w->layout == 0);
        CHECK(validate(c.g, *w));
        CHECK(is_independent(c.g, w->independent_set));
        // The fixtures label u_j = vertex j.
        std::vector<int> labels;
        for (int x : w->independent_set) labels.push_back(static_cast<int>(std::find(w->rim.begin(), w->rim.end(), x) - w->rim.begin()) + 1);
        CHECK(w->independent_set == c.independent);
        CHECK(labels == c.independent);

        auto m = mirrored(c.g);
        auto wm = match_vertex_kind(m, 0, c.kind);
        REQUIRE(wm);
        CHECK(validate(m, *wm));
    }
}

TEST_CASE("validate rejects tampered witnesses") {
    auto g = fixture::config_h();
    auto w = *match_vertex_kind(g, 0, ConfigKind::H);
    auto bad = w;
    bad.independent_set[0] = 2;
    CHECK_FALSE(validate(g, bad));
    bad = w;
    bad.face_pattern.back() = 3;
    CHECK_FALSE(validate(g, bad));
    bad = w;
    bad.center = 1;
    CHECK_FALSE(validate(g, bad));

    auto e = *find_configuration(make_k4());
    e.kind = ConfigKind::C;
    CHECK(validate(make_k4(), e));  // 6 <= 9 holds as well
    auto ico = *find_configuration(make_icosahedron());
    ico.kind = ConfigKind::C;
    CHECK_FALSE(validate(make_icosahedron(), ico));
}

TEST_CASE("witness text form") {
    auto g = fixture::config_h();
    auto w = *match_vertex_kind(g, 0, ConfigKind::H);
    CHECK(to_string(w) == "config h center=0 I=1,3,5,7,9 faces=3,3,3,3,3,3,3,3,3,4");
}

TEST_CASE("every witness on the corpus revalidates") {
    int found = 0;
    for (const auto& c : make_corpus(17, 80, 40)) {
        CAPTURE(c.id);
        const auto& g = c.graph;
        for (const auto& w : detect_edge_configs(g)) {
            CHECK(edge_clause_holds(g, w));
            CHECK(validate(g, w));
        }
        for (const auto& w : detect_vertex_configs(g)) {
            CHECK(validate(g, w));
            CHECK(is_independent(g, w.independent_set));
            CHECK(g.degree(w.center) == static_cast<int>(w.rim.size()));
        }
        found += find_configuration(g).has_value();
    }
    CHECK(found == 80);
}
