#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tridom/triangulation.hpp"

namespace tridom {

struct GenSpec {
    enum class Kind { Named, Stacked, Flipmix, Gadget };
    Kind kind = Kind::Stacked;
    int n = 0;
    uint64_t seed = 0;
    int flips = 0;
    std::string name;
};

/// Rotation system from an (unoriented) triangle list covering a sphere.
/// Orientations are made consistent by flood fill before chaining corners.
std::vector<std::vector<int>> rotations_from_faces(int n,
                                                   const std::vector<std::array<int, 3>>& faces);

/// name in {triangle, K4, stacked5, octahedron, icosahedron, doublewheel_<k>}.
Triangulation named(const std::string& name);

/// K4 plus n-4 random face stackings; deterministic under seed.
Triangulation stacked(int n, uint64_t seed);

/// stacked(n, seed) followed by `flips` random diagonal-flip attempts.
Triangulation flipmix(int n, uint64_t seed, int flips);

/// Exact perfect matching (lowest-label-first backtracking); throws
/// NoPerfectMatching.
std::vector<std::pair<int, int>> perfect_matching(const Triangulation& g);

/// Replace every matching edge xy by a 2-cycle with an interior path (x,z,y);
/// the result is a non-simple triangulation on 3k vertices.
Triangulation gadget_family(const Triangulation& t2k,
                            std::optional<std::vector<std::pair<int, int>>> matching = {});

Triangulation generate(const GenSpec& spec);

} // namespace tridom
