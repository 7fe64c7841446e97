#pragma once

#include <array>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "tridom/error.hpp"

namespace tridom {

enum class BoundaryShape { Cycle3, Cycle4, Cycle5, Path3, Cycle3Pendant };

const char* shape_name(BoundaryShape s);

/// Boundary of the face left behind by delete_vertices. `walk` is the closed
/// facial walk over surviving labels; `tri_neighbors[b]` records which of the
/// deleted vertices (by position in the deletion order, 1-based) b was
/// adjacent to before the deletion.
struct PatchBoundary {
    std::vector<int> walk;
    BoundaryShape shape = BoundaryShape::Cycle3;
    std::map<int, std::vector<int>> tri_neighbors;
    int pendant = -1; // x, only for Cycle3Pendant
    int parent = -1;  // y, the vertex visited twice
    int deleted_degree_sum = 0;
};

/// Classify a closed facial walk of length 3..5 and identify the pendant
/// vertex / its parent where applicable. Throws UnclassifiableWalk.
void classify_walk(PatchBoundary& pb);

/// Embedded planar (multi)graph given by per-vertex rotations, stored as a
/// combinatorial map. Vertex labels are stable: deleting vertices never
/// renumbers or reuses labels. Loops are rejected always; parallel edges are
/// permitted when simple() is false.
class Triangulation {
public:
    Triangulation() = default;

    /// Build and validate from per-vertex cyclic neighbor lists (clockwise or
    /// counterclockwise consistently; faces must all trace as triangles).
    static Triangulation from_rotations(const std::vector<std::vector<int>>& rotations,
                                        bool simple = true);

    int vertex_count() const { return nv_; }
    int edge_count() const { return ne_; }
    int face_count() const;
    /// Labels live in [0, label_limit()); inactive labels were deleted or never used.
    int label_limit() const { return static_cast<int>(alive_.size()); }
    bool is_active(int v) const { return v >= 0 && v < label_limit() && alive_[v]; }
    bool simple() const { return simple_; }

    int degree(int v) const;
    std::vector<int> rotation(int v) const;        // neighbor labels in embedding order
    std::vector<int> neighbors(int v) const;       // sorted, deduplicated
    bool adjacent(int u, int v) const;
    std::vector<int> active_vertices() const;

    /// Facial walks as label sequences, one per face orbit, in deterministic
    /// (lowest-dart-first) order.
    std::vector<std::vector<int>> faces() const;

    /// First facial triangle with sorted degree vector (4,4,4), (4,4,5) or
    /// (4,5,5); vertices ordered by ascending degree then label.
    std::optional<std::array<int, 3>> find_forbidden_face() const;

    /// Remove S (deletion order matters for tri_neighbors numbering); reports
    /// the newly created faces. Throws DisconnectingDeletion.
    std::pair<Triangulation, std::vector<PatchBoundary>>
    delete_vertices(const std::vector<int>& S) const;

    /// Restriction to the surviving vertices (embedding preserved), with no
    /// patch classification; survivors must stay connected.
    Triangulation remove_vertices(const std::vector<int>& S) const;

    /// Split the face bounded by `face` with the chord uv. u and v must be
    /// nonconsecutive on the walk.
    Triangulation add_chord(const PatchBoundary& face, int u, int v) const;

    /// Every face a triangle, Euler relation, connectivity, and (in simple
    /// mode) m = 3n-6. `require_triangles` is relaxed for transient states.
    void validate(bool require_triangles = true) const;

    // --- mutation used by generators (simple mode only) ---
    /// New vertex joined to the three corners of the facial triangle (a,b,c).
    int stack_on_face(int a, int b, int c);
    /// Diagonal flip of edge uv; returns false if rejected (would create a
    /// parallel edge or drop a degree below 3).
    bool flip(int u, int v);

private:
    struct Dart {
        int origin = -1;
        int twin = -1;
        int snext = -1; // next dart in the rotation at origin
    };

    std::vector<Dart> d_;
    std::vector<int> vstart_;  // label -> some dart id, -1 if isolated/deleted
    std::vector<char> alive_;
    bool simple_ = true;
    int nv_ = 0;
    int ne_ = 0;

    bool dart_alive(int i) const { return d_[i].origin >= 0; }
    int face_next(int i) const { return d_[d_[i].twin].snext; }
    int target(int i) const { return d_[d_[i].twin].origin; }
    int sprev(int i) const;
    int dart_from_to(int u, int v) const;
    void check_connected(Errc code) const;
    std::vector<std::vector<int>> face_orbits() const; // dart ids
    std::vector<int> rotation_darts(int v) const;
};

} // namespace tridom
