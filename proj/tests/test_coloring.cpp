#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "test_util.hpp"
#include "tridom/coloring.hpp"

using namespace tridom;

namespace {

bool proper(const SimpleGraph& g, const Coloring& c) {
    for (int v : g.vertices()) {
        if (c.color[v] < 1 || c.color[v] > 4) return false;
        for (int w : g.adj[v])
            if (c.color[w] == c.color[v]) return false;
    }
    return true;
}

} // namespace

TEST_CASE("collapse deduplicates parallel edges") {
    auto gadget = gadget_family(testutil::k4());
    auto sg = collapse(gadget);
    CHECK(sg.vertex_count() == 6);
    for (int v : sg.vertices()) {
        std::set<int> uniq(sg.adj[v].begin(), sg.adj[v].end());
        CHECK(uniq.size() == sg.adj[v].size());
        CHECK(std::is_sorted(sg.adj[v].begin(), sg.adj[v].end()));
    }
    // K4's matched pairs keep their (single) adjacency
    CHECK(sg.adjacent(0, 1));
}

TEST_CASE("four_color finds proper colorings") {
    for (const char* name : {"K4", "octahedron", "icosahedron"}) {
        auto sg = collapse(named(name));
        auto c = four_color(sg);
        CHECK(proper(sg, c));
    }
    auto big = collapse(flipmix(120, 11, 360));
    auto c = four_color(big);
    CHECK(proper(big, c));
    // deterministic for a fixed seed
    FourColorOptions opt;
    opt.seed = 42;
    CHECK(four_color(big, opt).color == four_color(big, opt).color);
}

TEST_CASE("four_color needs all four colors on K4-containing graphs") {
    auto sg = collapse(testutil::k4());
    auto c = four_color(sg);
    std::set<int> used(c.color.begin(), c.color.end());
    used.erase(0);
    CHECK(used.size() == 4);
}

TEST_CASE("select_I picks independent 4-vertices away from 3-vertices") {
    auto dw = named("doublewheel_6"); // rim 0..5 of degree 4, apexes 6,7 of degree 6
    auto I = select_I(dw);
    CHECK(I == std::vector<int>{0, 2, 4});

    auto g = flipmix(80, 5, 240);
    auto J = select_I(g);
    std::set<int> in(J.begin(), J.end());
    for (int v : J) {
        CHECK(g.degree(v) == 4);
        for (int w : g.neighbors(v)) {
            CHECK(g.degree(w) != 3);
            CHECK_FALSE(in.count(w)); // independence
        }
    }
    // maximality: every eligible 4-vertex is in I or adjacent to it
    for (int v : g.active_vertices()) {
        if (g.degree(v) != 4 || in.count(v)) continue;
        bool eligible = true;
        for (int w : g.neighbors(v))
            if (g.degree(w) == 3) eligible = false;
        if (!eligible) continue;
        bool touched = false;
        for (int w : g.neighbors(v))
            if (in.count(w)) touched = true;
        CHECK(touched);
    }

    CHECK(select_I(testutil::k4()).empty()); // all degree 3
}

TEST_CASE("build_Gprime adds one heavy diagonal per hole") {
    auto dw = named("doublewheel_6");
    auto I = select_I(dw);
    REQUIRE(I.size() == 3);
    auto gp = build_Gprime(dw, I);
    CHECK(gp.index.cycles.size() == 3);
    for (auto& sc : gp.index.cycles) {
        CHECK((sc.diagonal == std::pair<int, int>{6, 7}));
        CHECK(dw.degree(sc.diagonal.first) >= 6);
        CHECK(dw.degree(sc.diagonal.second) >= 6);
        // the diagonal endpoints sit opposite on the hole cycle
        auto pos_of = [&](int v) {
            for (int i = 0; i < 4; ++i)
                if (sc.cycle[i] == v) return i;
            return -1;
        };
        CHECK((pos_of(sc.diagonal.first) - pos_of(sc.diagonal.second)) % 2 == 0);
    }
    CHECK(gp.graph.adjacent(6, 7));
    CHECK_FALSE(gp.graph.is_active(0));
    CHECK(gp.graph.vertex_count() == 5);

    // octahedron hole has no 6+ pair at all
    CHECK_THROWS_AS(build_Gprime(testutil::octahedron(), {0}), Error);
}

TEST_CASE("psi satisfies all three guarantees on the double wheel") {
    auto dw = named("doublewheel_6");
    auto I = select_I(dw);
    auto gp = build_Gprime(dw, I);
    auto phi = four_color(gp.graph);
    optimize_special_cycles(dw, gp, phi);
    auto psi = build_psi(dw, I, phi, gp.index); // asserts (i)-(iii) internally
    for (int v : dw.active_vertices()) {
        auto pal = closed_palette(dw, psi, v);
        CHECK(pal.size() >= 3);
        if (dw.degree(v) <= 5) CHECK(pal.size() == 4);
        if (!psi.is_colored(v)) CHECK(dw.degree(v) == 4);
    }
    // classes partition the colored vertices
    size_t colored = 0;
    for (auto& cls : psi.classes) colored += cls.size();
    CHECK(colored + psi.uncolored.size() == static_cast<size_t>(dw.vertex_count()));
}

TEST_CASE("optimize_special_cycles keeps the coloring proper") {
    auto dw = named("doublewheel_6");
    auto gp = build_Gprime(dw, select_I(dw));
    auto phi = four_color(gp.graph);
    int moves = optimize_special_cycles(dw, gp, phi);
    CHECK(moves >= 0);
    CHECK(proper(gp.graph, phi));
}

TEST_CASE("closed_palette reads the embedding") {
    auto k4 = testutil::k4();
    PartialColoring psi;
    psi.color = {1, 2, 3, 0};
    psi.uncolored = {3};
    psi.classes[0] = {0};
    psi.classes[1] = {1};
    psi.classes[2] = {2};
    auto pal = closed_palette(k4, psi, 3);
    CHECK(pal == std::vector<int>{1, 2, 3});
    CHECK(closed_palette(k4, psi, 0).size() == 3);
}
