#include <doctest.h>

#include <numeric>
#include <sstream>

#include "bondagelab/error.hpp"
#include "bondagelab/generators.hpp"
#include "bondagelab/plane_graph.hpp"
#include "bondagelab/plg.hpp"
#include "fixtures.hpp"

using namespace bondagelab;

namespace {

Errc build_error(std::vector<std::vector<int>> rot) {
    try {
        PlaneGraph::build(std::move(rot));
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("build accepted an invalid rotation system");
    return Errc::BadParams;
}

void check_counts(const PlaneGraph& g) {
    CHECK(g.num_vertices() - g.num_edges() + g.num_faces() == 2);
    int face_sum = 0, degree_sum = 0, darts = 0;
    for (const Face& f : g.faces()) {
        face_sum += f.degree();
        darts += static_cast<int>(f.boundary.size());
    }
    for (int v = 0; v < g.num_vertices(); ++v) degree_sum += g.degree(v);
    CHECK(face_sum == 2 * g.num_edges());
    CHECK(degree_sum == 2 * g.num_edges());
    CHECK(darts == 2 * g.num_edges());
}

}  // namespace

TEST_CASE("triangle traces two 3-faces") {
    auto g = PlaneGraph::build({{1, 2}, {2, 0}, {0, 1}});
    CHECK(g.num_edges() == 3);
    REQUIRE(g.num_faces() == 2);
    CHECK(g.face_degree(0) == 3);
    CHECK(g.face_degree(1) == 3);
}

TEST_CASE("K4 has four triangular faces") {
    auto g = make_k4();
    CHECK(g.num_edges() == 6);
    CHECK(g.num_faces() == 4);
    for (const Face& f : g.faces()) CHECK(f.degree() == 3);
    check_counts(g);
}

TEST_CASE("successor rule follows the clockwise rotation") {
    auto g = make_k4();
    for (const Face& f : g.faces()) {
        for (std::size_t i = 0; i < f.boundary.size(); ++i) {
            const Dart d = f.boundary[i];
            const Dart next = f.boundary[(i + 1) % f.boundary.size()];
            const auto& rot = g.rotation(d.to);
            const int p = g.rotation_position(d.to, d.from);
            CHECK(next.from == d.to);
            CHECK(next.to == rot[(p + 1) % rot.size()]);
            CHECK(g.face_of_dart(d.from, d.to) == f.id);
        }
    }
}

TEST_CASE("build rejects malformed rotation systems") {
    CHECK(build_error({{1}, {}}) == Errc::AsymmetricAdjacency);
    CHECK(build_error({{0, 1}, {0}}) == Errc::SelfLoop);
    CHECK(build_error({{1, 1}, {0}}) == Errc::DuplicateNeighbor);
    CHECK(build_error({{1}, {0}, {3}, {2}}) == Errc::NotConnected);
    CHECK(build_error({{5}, {0}}) == Errc::InvalidId);
    CHECK(build_error({}) == Errc::EmptyGraph);
    CHECK(build_error({{}}) == Errc::EmptyGraph);
    // K4 with one rotation reversed is a torus embedding: 4 - 6 + 2 != 2.
    auto rot = make_k4().rotations();
    std::reverse(rot[0].begin(), rot[0].end());
    CHECK(build_error(rot) == Errc::NotPlanarEmbedding);
}

TEST_CASE("degree and face queries on regular solids") {
    auto ico = make_icosahedron();
    CHECK(ico.num_vertices() == 12);
    CHECK(ico.num_edges() == 30);
    CHECK(ico.num_faces() == 20);
    for (int v = 0; v < 12; ++v) {
        CHECK(ico.degree(v) == 5);
        CHECK(ico.faces_at(v, 3, 3).size() == 5);
    }
    auto k4 = make_k4();
    for (int v = 0; v < 4; ++v) CHECK(k4.neighbors_with_degree(v, 3, 3).size() == 3);
    auto cube = make_prism(4);
    for (int v = 0; v < 8; ++v) {
        CHECK(cube.faces_at(v, 4, 4).size() == 3);
        CHECK(cube.faces_at(v, 3, 3).empty());
    }
    auto oct = make_octahedron();
    CHECK(oct.num_faces() == 8);
    CHECK(oct.min_degree() == 4);
    CHECK(oct.max_degree() == 4);
    CHECK_THROWS_AS(k4.degree(4), Error);
    CHECK_THROWS_AS(k4.face_degree(9), Error);
}

TEST_CASE("cycle C5 has two 5-faces") {
    auto g = make_cycle(5);
    CHECK(g.num_edges() == 5);
    REQUIRE(g.num_faces() == 2);
    CHECK(g.face_degree(0) == 5);
    CHECK(g.face_degree(1) == 5);
}

TEST_CASE("a bridge counts twice on its face") {
    // Two triangles joined by the bridge 2-3.
    auto g = PlaneGraph::build({{1, 2}, {2, 0}, {0, 1, 3}, {5, 4, 2}, {3, 5}, {4, 3}});
    check_counts(g);
    REQUIRE(g.num_faces() == 3);
    const auto [f1, f2] = g.edge_faces(2, 3);
    CHECK(f1 == f2);
    CHECK(g.face_degree(f1) == 8);
    CHECK(g.distinct_face_count(2) == 2);
    CHECK(g.corner_faces(2).size() == 3);
}

TEST_CASE("find_fan") {
    SUBCASE("wheel hub gives one closed wheel") {
        auto w5 = make_wheel(5);
        auto fans = find_fan(w5, 5);
        REQUIRE(fans.size() == 1);
        CHECK(fans[0].is_wheel);
        CHECK(fans[0].rim.size() == 5);
    }
    SUBCASE("quadrilateral faces leave single-vertex fans") {
        auto cube = make_prism(4);
        auto fans = find_fan(cube, 0);
        CHECK(fans.size() == 3);
        for (const auto& f : fans) {
            CHECK(f.rim.size() == 1);
            CHECK_FALSE(f.is_wheel);
        }
    }
    SUBCASE("icosahedron") {
        auto ico = make_icosahedron();
        for (int v = 0; v < 12; ++v) {
            auto fans = find_fan(ico, v);
            REQUIRE(fans.size() == 1);
            CHECK(fans[0].is_wheel);
            CHECK(fans[0].rim.size() == 5);
        }
    }
    SUBCASE("reported fans satisfy their edge conditions") {
        for (std::uint64_t seed = 1; seed <= 5; ++seed) {
            auto g = make_sparse_planar(20, seed);
            for (int v = 0; v < g.num_vertices(); ++v) {
                for (const auto& f : find_fan(g, v)) {
                    CHECK(f.hub == v);
                    for (std::size_t i = 0; i < f.rim.size(); ++i) {
                        CHECK(g.adjacent(v, f.rim[i]));
                        if (i + 1 < f.rim.size()) CHECK(g.adjacent(f.rim[i], f.rim[i + 1]));
                    }
                    if (f.is_wheel) CHECK(g.adjacent(f.rim.front(), f.rim.back()));
                }
            }
        }
    }
}

TEST_CASE("generators") {
    auto st = make_stacked_triangulation(10, 1);
    CHECK(st.num_vertices() == 10);
    CHECK(st.num_edges() == 24);
    CHECK(st.num_faces() == 16);
    CHECK(to_plg(st) == to_plg(make_stacked_triangulation(10, 1)));
    CHECK(to_plg(st) != to_plg(make_stacked_triangulation(10, 2)));

    for (int n : {4, 5, 17, 60}) {
        for (std::uint64_t seed : {1u, 9u}) {
            auto g = make_stacked_triangulation(n, seed);
            check_counts(g);
            CHECK(g.num_edges() == 3 * n - 6);
            CHECK(g.min_degree() >= 3);
            for (const Face& f : g.faces()) CHECK(f.degree() == 3);
        }
    }
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        auto g = make_sparse_planar(30, seed);
        check_counts(g);
        CHECK(g.min_degree() >= 3);
        CHECK(g.num_edges() < 3 * 30 - 6);
    }
    for (int n = 3; n <= 9; ++n) {
        check_counts(make_prism(n));
        check_counts(make_wheel(n));
        check_counts(make_fan(n));
        check_counts(make_cycle(n));
    }
    check_counts(make_icosahedron());
    check_counts(make_octahedron());
    check_counts(fixture::lone_face_tight());
    check_counts(fixture::lone_face_fans());

    CHECK(generate("stacked", {10, 1}).num_edges() == 24);
    CHECK(generate("cube", {}).num_faces() == 6);
    CHECK_THROWS_AS(generate("dodecahedron", {}), Error);
    CHECK_THROWS_AS(generate("cycle", {2}), Error);
    CHECK_THROWS_AS(generate("stacked", {3, 1}), Error);
}

TEST_CASE("plg round trip and parse errors") {
    auto g = make_sparse_planar(15, 3);
    auto back = parse_plg(to_plg(g));
    CHECK(back.rotations() == g.rotations());

    auto parsed = parse_plg("# triangle\nplanegraph 3\nv 0: 1 2  # trailing\n\nv 1: 2 0\nv 2: 0 1\n");
    CHECK(parsed.num_faces() == 2);

    auto code_and_text = [](const std::string& text) {
        try {
            parse_plg(text);
        } catch (const Error& e) {
            return std::pair<Errc, std::string>(e.code(), e.what());
        }
        return std::pair<Errc, std::string>(Errc::BadParams, "accepted");
    };
    auto [c1, m1] = code_and_text("graph 3\n");
    CHECK(c1 == Errc::ParseError);
    auto [c2, m2] = code_and_text("planegraph 3\nv 0: 1 2\nv 1: 2\nv 2: 0 1\n");
    CHECK(c2 == Errc::AsymmetricAdjacency);
    CHECK(m2.find("line") != std::string::npos);
    auto [c3, m3] = code_and_text("planegraph 2\nv 0: 1\nv 0: 1\n");
    CHECK(c3 == Errc::ParseError);
    CHECK(m3.find("line 3") != std::string::npos);
    auto [c4, m4] = code_and_text("planegraph 2\nv 0: x\nv 1: 0\n");
    CHECK(c4 == Errc::ParseError);
}
