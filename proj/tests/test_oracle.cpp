#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "test_util.hpp"
#include "tridom/generators.hpp"
#include "tridom/oracle.hpp"

using namespace tridom;

namespace {

bool independent(const Triangulation& g, const std::vector<int>& s) {
    for (size_t i = 0; i < s.size(); ++i)
        for (size_t j = i + 1; j < s.size(); ++j)
            if (g.adjacent(s[i], s[j])) return false;
    return true;
}

bool dominating(const Triangulation& g, const std::vector<int>& s) {
    std::set<int> in(s.begin(), s.end());
    for (int v : g.active_vertices()) {
        if (in.count(v)) continue;
        bool hit = false;
        for (int w : g.neighbors(v))
            if (in.count(w)) hit = true;
        if (!hit) return false;
    }
    return true;
}

} // namespace

TEST_CASE("exact values on the named solids") {
    // computed independently by brute force over all vertex subsets
    auto k4 = testutil::k4();
    CHECK(iota_exact(k4).value == 1);
    CHECK(gamma_exact(k4).value == 1);
    CHECK(alpha_exact(k4).value == 1);

    auto oct = testutil::octahedron();
    CHECK(iota_exact(oct).value == 2);
    CHECK(gamma_exact(oct).value == 2);
    CHECK(alpha_exact(oct).value == 2);

    auto ico = named("icosahedron");
    CHECK(iota_exact(ico).value == 2);
    CHECK(gamma_exact(ico).value == 2);
    CHECK(alpha_exact(ico).value == 3);
}

TEST_CASE("witnesses have the stated properties") {
    for (uint64_t seed : {1, 2, 3, 4}) {
        auto g = flipmix(11, seed, 40);
        auto i = iota_exact(g);
        CHECK(static_cast<int>(i.witness.size()) == i.value);
        CHECK(independent(g, i.witness));
        CHECK(dominating(g, i.witness));

        auto d = gamma_exact(g);
        CHECK(static_cast<int>(d.witness.size()) == d.value);
        CHECK(dominating(g, d.witness));

        auto a = alpha_exact(g);
        CHECK(static_cast<int>(a.witness.size()) == a.value);
        CHECK(independent(g, a.witness));

        // gamma <= iota <= alpha always
        CHECK(d.value <= i.value);
        CHECK(i.value <= a.value);
    }
}

TEST_CASE("iota agrees with full enumeration") {
    for (int n : {6, 8, 10, 12}) {
        for (uint64_t seed : {5, 6}) {
            auto g = flipmix(n, seed, 3 * n);
            auto sg = collapse(g);
            auto all = all_maximal_independent_sets(sg);
            REQUIRE_FALSE(all.empty());
            size_t best = all.front().size();
            for (auto& s : all) best = std::min(best, s.size());
            CHECK(iota_exact(g).value == static_cast<int>(best));
            // alpha is the max over the same family
            size_t worst = 0;
            for (auto& s : all) worst = std::max(worst, s.size());
            CHECK(alpha_exact(g).value == static_cast<int>(worst));
        }
    }
}

TEST_CASE("gadget graphs need a vertex per gadget") {
    CHECK(gamma_exact(gadget_family(testutil::k4())).value >= 2);
    CHECK(gamma_exact(gadget_family(testutil::octahedron())).value >= 3);
}

TEST_CASE("large-degree independent sets stay under (n-2)/3") {
    for (const char* name : {"K4", "octahedron", "icosahedron", "doublewheel_6"}) {
        auto rep = check_obs1(named(name));
        CHECK(rep.ok);
        CHECK(3 * rep.max_size <= named(name).vertex_count() - 2);
    }
    auto g = flipmix(15, 9, 45);
    auto rep = check_obs1(g);
    CHECK(rep.ok);
    if (!rep.witness.empty()) {
        CHECK(rep.euler_lhs == rep.euler_rhs);
        CHECK(rep.double_count_ok);
        CHECK(rep.f6p == static_cast<int>(rep.witness.size()));
        for (int v : rep.witness) CHECK(g.degree(v) >= 6);
        CHECK(independent(g, rep.witness));
    }
}

TEST_CASE("size guards") {
    auto big = stacked(40, 1);
    CHECK_THROWS_AS(iota_exact(big, 32), Error);
    CHECK_THROWS_AS(gamma_exact(big, 32), Error);
    CHECK_THROWS_AS(all_maximal_independent_sets(collapse(big)), Error);
    CHECK_NOTHROW(alpha_exact(big, 40));
}
