#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "test_util.hpp"
#include "tridom/triangulation.hpp"

using namespace tridom;

TEST_CASE("K4 basics") {
    auto g = testutil::k4();
    CHECK(g.vertex_count() == 4);
    CHECK(g.edge_count() == 6);
    CHECK(g.face_count() == 4);
    for (int v : g.active_vertices()) CHECK(g.degree(v) == 3);
    CHECK(g.adjacent(0, 3));
    CHECK_NOTHROW(g.validate(true));
    CHECK(g.faces().size() == 4);
}

TEST_CASE("octahedron basics") {
    auto g = testutil::octahedron();
    CHECK(g.vertex_count() == 6);
    CHECK(g.edge_count() == 12);
    CHECK(g.face_count() == 8);
    for (int v : g.active_vertices()) CHECK(g.degree(v) == 4);
    // antipodal pairs
    CHECK_FALSE(g.adjacent(0, 5));
    CHECK_FALSE(g.adjacent(1, 3));
    CHECK_FALSE(g.adjacent(2, 4));
    CHECK_NOTHROW(g.validate(true));
}

TEST_CASE("from_rotations rejects malformed input") {
    // loop
    CHECK_THROWS_AS(Triangulation::from_rotations({{0, 1, 2}, {0, 2, 0}, {0, 1, 1}}),
                    Error);
    // asymmetric occurrence counts
    CHECK_THROWS_AS(Triangulation::from_rotations({{1, 2, 3}, {0, 3, 2}, {0, 1, 3}, {0, 2, 2}}),
                    Error);
    // parallel edge in simple mode; the same rotations round-trip in multi mode
    auto gadget = gadget_family(testutil::k4());
    std::vector<std::vector<int>> rots;
    for (int v = 0; v < gadget.label_limit(); ++v) rots.push_back(gadget.rotation(v));
    CHECK_THROWS_AS(Triangulation::from_rotations(rots, true), Error);
    auto back = Triangulation::from_rotations(rots, false);
    CHECK(back.edge_count() == gadget.edge_count());
    CHECK(back.face_count() == gadget.face_count());
    // a rotation order whose faces are not triangles (cube-ish gluing)
    try {
        Triangulation::from_rotations({{1, 3, 2}, {0, 3, 2}, {0, 1, 3}, {0, 2, 1}});
        CHECK(false);
    } catch (const Error& e) {
        CHECK((e.code() == Errc::NonTriangularFace || e.code() == Errc::InconsistentRotation));
    }
}

TEST_CASE("labels are stable under deletion") {
    auto g = testutil::octahedron();
    auto h = g.remove_vertices({0});
    CHECK(h.vertex_count() == 5);
    CHECK(h.label_limit() == 6);
    CHECK_FALSE(h.is_active(0));
    CHECK(h.is_active(5));
    CHECK(h.edge_count() == 8);
    CHECK(h.degree(5) == 4);
    CHECK(h.degree(1) == 3);
}

TEST_CASE("delete_vertices reports the patch boundary") {
    auto g = testutil::octahedron();
    auto [h, patches] = g.delete_vertices({0});
    REQUIRE(patches.size() == 1);
    const PatchBoundary& pb = patches.front();
    CHECK(pb.shape == BoundaryShape::Cycle4);
    CHECK(pb.walk.size() == 4);
    std::set<int> walk(pb.walk.begin(), pb.walk.end());
    CHECK(walk == std::set<int>{1, 2, 3, 4});
    for (int b : pb.walk) {
        REQUIRE(pb.tri_neighbors.count(b));
        CHECK(pb.tri_neighbors.at(b) == std::vector<int>{1});
    }
    CHECK(pb.deleted_degree_sum == 4);
}

TEST_CASE("deleting a facial triangle counts edges once each") {
    auto g = testutil::octahedron();
    auto [h, patches] = g.delete_vertices({0, 1, 2});
    CHECK(h.vertex_count() == 3);
    CHECK(h.edge_count() == 3); // 12 - (3 internal + 6 outgoing)
    REQUIRE(patches.size() == 1);
    CHECK(patches.front().shape == BoundaryShape::Cycle3);
    CHECK_NOTHROW(h.validate(true));
}

TEST_CASE("disconnecting deletions are refused") {
    // stacking twice on the same face makes the shared face corner a cut set
    auto g = testutil::k4();
    int a = g.stack_on_face(0, 1, 2);
    CHECK(a == 4);
    CHECK_THROWS_AS(g.remove_vertices({0, 1, 2}), Error);
}

TEST_CASE("classify_walk recognizes all five shapes") {
    auto shape_of = [](std::vector<int> walk) {
        PatchBoundary pb;
        pb.walk = std::move(walk);
        classify_walk(pb);
        return pb;
    };
    CHECK(shape_of({4, 7, 9}).shape == BoundaryShape::Cycle3);
    CHECK(shape_of({4, 7, 9, 11}).shape == BoundaryShape::Cycle4);
    CHECK(shape_of({4, 7, 9, 11, 13}).shape == BoundaryShape::Cycle5);

    auto p3 = shape_of({4, 7, 9, 7});
    CHECK(p3.shape == BoundaryShape::Path3);

    auto pend = shape_of({3, 8, 5, 6, 8}); // 3 pendant on 8, triangle (8,5,6)
    CHECK(pend.shape == BoundaryShape::Cycle3Pendant);
    CHECK(pend.pendant == 3);
    CHECK(pend.parent == 8);

    PatchBoundary bad;
    bad.walk = {1, 2, 1, 3, 2};
    CHECK_THROWS_AS(classify_walk(bad), Error);
}

TEST_CASE("add_chord splits a face") {
    auto g = testutil::octahedron();
    auto [h, patches] = g.delete_vertices({0});
    const PatchBoundary& quad = patches.front();
    int u = quad.walk[0], v = quad.walk[2];
    if (h.adjacent(u, v)) {
        u = quad.walk[1];
        v = quad.walk[3];
    }
    REQUIRE_FALSE(h.adjacent(u, v));
    auto t = h.add_chord(quad, u, v);
    CHECK(t.edge_count() == 9);
    CHECK(t.adjacent(u, v));
    CHECK_NOTHROW(t.validate(true));

    // consecutive endpoints and repeat chords are refused
    CHECK_THROWS_AS(h.add_chord(quad, quad.walk[0], quad.walk[1]), Error);
    CHECK_THROWS_AS(t.add_chord(quad, u, v), Error);
}

TEST_CASE("stack_on_face adds a degree-3 vertex") {
    auto g = testutil::k4();
    int nl = g.stack_on_face(0, 1, 2);
    CHECK(nl == 4);
    CHECK(g.vertex_count() == 5);
    CHECK(g.edge_count() == 9);
    CHECK(g.degree(nl) == 3);
    CHECK(g.degree(3) == 3);
    CHECK(g.degree(0) == 4);
    CHECK_NOTHROW(g.validate(true));
}

TEST_CASE("flip rewires a diagonal") {
    auto g = testutil::octahedron();
    REQUIRE(g.flip(1, 2));
    CHECK(g.edge_count() == 12);
    CHECK_FALSE(g.adjacent(1, 2));
    CHECK(g.adjacent(0, 5)); // the two former face apexes of edge 1-2
    CHECK_NOTHROW(g.validate(true));
    std::multiset<int> degs;
    for (int v : g.active_vertices()) degs.insert(g.degree(v));
    CHECK(degs == std::multiset<int>{3, 3, 4, 4, 5, 5});

    // refused: would duplicate an existing edge
    auto h = testutil::k4();
    CHECK_FALSE(h.flip(0, 1));
}

TEST_CASE("find_forbidden_face") {
    // octahedron: every face is (4,4,4)
    auto oct = testutil::octahedron();
    auto f = oct.find_forbidden_face();
    REQUIRE(f.has_value());
    for (int v : *f) CHECK(oct.degree(v) == 4);

    // icosahedron: all degrees 5, nothing forbidden
    CHECK_FALSE(named("icosahedron").find_forbidden_face().has_value());

    // K4: degree 3 everywhere, nothing forbidden
    CHECK_FALSE(testutil::k4().find_forbidden_face().has_value());

    // flipped octahedron: contains a (4,4,5) facial triangle
    auto g = testutil::octahedron();
    REQUIRE(g.flip(1, 2));
    auto f2 = g.find_forbidden_face();
    REQUIRE(f2.has_value());
    CHECK(g.degree((*f2)[0]) == 4);
    CHECK(g.degree((*f2)[1]) == 4);
    CHECK(g.degree((*f2)[2]) == 5);
}

TEST_CASE("validate catches broken Euler counts") {
    auto g = testutil::octahedron();
    auto h = g.remove_vertices({0});
    // h has a quadrilateral face now
    CHECK_THROWS_AS(h.validate(true), Error);
    CHECK_NOTHROW(h.validate(false));
}

TEST_CASE("rotation order is preserved") {
    auto g = testutil::k4();
    auto rot = g.rotation(0);
    REQUIRE(rot.size() == 3);
    CHECK(std::set<int>(rot.begin(), rot.end()) == std::set<int>{1, 2, 3});
    // neighbors() sorts and deduplicates
    auto nb = g.neighbors(0);
    CHECK(nb == std::vector<int>{1, 2, 3});
}
