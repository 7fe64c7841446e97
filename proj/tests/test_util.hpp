#pragma once

// Shared helpers for building small triangulations in tests.

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "tridom/generators.hpp"
#include "tridom/triangulation.hpp"

namespace testutil {

inline tridom::Triangulation from_faces(int n, std::vector<std::array<int, 3>> faces,
                                        bool simple = true) {
    return tridom::Triangulation::from_rotations(tridom::rotations_from_faces(n, faces), simple);
}

inline tridom::Triangulation k4() {
    return tridom::Triangulation::from_rotations({{1, 2, 3}, {0, 3, 2}, {0, 1, 3}, {0, 2, 1}});
}

inline tridom::Triangulation octahedron() {
    return from_faces(6, {{0, 1, 2},
                          {0, 2, 3},
                          {0, 3, 4},
                          {0, 4, 1},
                          {5, 2, 1},
                          {5, 3, 2},
                          {5, 4, 3},
                          {5, 1, 4}});
}

} // namespace testutil
