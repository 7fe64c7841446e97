#pragma once

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "tridom/coloring.hpp"
#include "tridom/triangulation.hpp"

namespace tridom {

enum class CaseTag { C1_Cycle3, C2_Path3, C2_Cycle4, C3_Cycle5, C3_Cycle3Pendant };

const char* case_name(CaseTag t);

/// One level of the reduction recursion: the deleted facial triangle
/// (v1,v2,v3) in ascending degree order, the boundary left behind, and the
/// chords added to re-triangulate it. `roles[b]` lists which of v1..v3 (as
/// indices 1..3) the boundary vertex b was adjacent to, which is what the
/// extension rules key on.
struct ReductionStep {
    CaseTag tag = CaseTag::C1_Cycle3;
    std::array<int, 3> tri{-1, -1, -1};
    int pendant = -1; // x, C3_Cycle3Pendant only
    int parent = -1;  // y, its neighbor on the boundary
    std::vector<int> walk; // boundary of the patch face (B, or B' for the pendant case)
    std::map<int, std::vector<int>> roles;
    std::vector<std::pair<int, int>> added_chords;
    std::vector<int> terminal_D; // nonempty for C2_Path3: the whole answer
};

struct ReduceResult {
    Triangulation reduced;
    ReductionStep step;
};

/// Delete the forbidden triangle (and the pendant boundary vertex when one
/// appears) and re-triangulate the patch. `face` must come from
/// find_forbidden_face. For the Path3 branch the graph is not reduced:
/// step.terminal_D holds the answer for the whole graph.
ReduceResult reduce_once(const Triangulation& g, const std::array<int, 3>& face);

/// Lift an independent dominating set of the reduced graph back through one
/// reduction step, adding at most one vertex of the deleted triangle. The
/// result is re-verified against `parent` (independence and domination);
/// throws ExtensionFailed.
std::vector<int> extend(const SimpleGraph& parent, const ReductionStep& step,
                        const std::vector<int>& Dprime);
std::vector<int> extend(const Triangulation& parent, const ReductionStep& step,
                        const std::vector<int>& Dprime);

struct VerifyResult {
    bool independent = false;
    bool dominating = false;
    bool within_bound = false;
    std::vector<std::pair<int, int>> adjacent_pairs; // independence violations
    std::vector<int> undominated;

    bool ok() const { return independent && dominating && within_bound; }
};

/// Check that D is independent, dominating, and of size at most floor(n/3).
VerifyResult verify(const SimpleGraph& g, const std::vector<int>& D);
VerifyResult verify(const Triangulation& g, const std::vector<int>& D);

/// U[i-1] = vertices neither colored i nor adjacent to color i. Asserts the
/// two structural facts: no uncolored vertex qualifies, the four sets are
/// disjoint, and every member has degree >= 6.
struct MissingSets {
    std::array<std::vector<int>, 4> U;
    std::vector<int> all;

    int missing_at(int v) const; // 1..4, or 0 if v is in no U_i
};

MissingSets missing_sets(const Triangulation& g, const PartialColoring& psi);

struct BadComponent {
    std::vector<int> vertices;
    std::vector<int> part0, part1; // bipartition, each a union of two color classes
};

struct BadSubgraph {
    std::vector<std::pair<int, int>> edges; // between distinct U_i, U_j
    std::vector<BadComponent> components;
    std::vector<int> cover; // J: one part per component, every bad edge hit
};

/// Build the subgraph spanned by edges joining different missing-color
/// classes, bipartition each component from the color pattern of its lowest
/// vertex, and take the smaller part per component as the cover. Also checks
/// that every bad edge lies on two 4-cycles around uncolored vertices.
/// Throws NotBipartite / CoverTooLarge on structural violations.
BadSubgraph bad_subgraph(const Triangulation& g, const PartialColoring& psi, const MissingSets& ms);

struct Assembly {
    std::array<std::vector<int>, 4> D; // D_i = C_i plus an independent cover of U_i
    std::array<std::vector<int>, 4> I; // the greedy sets over U_i \ J
    int best = 0;                      // index of the smallest D_i
    long total = 0;                    // sum of the four sizes
};

/// Build the four candidate sets and verify each; the smallest is the answer.
/// Asserts total <= (4n-2)/3. Throws AssemblyInvariantViolation.
Assembly assemble(const Triangulation& g, const PartialColoring& psi, const MissingSets& ms,
                  const std::vector<int>& J);

struct IdomCertificate {
    std::vector<int> D;
    int bound = 0;                  // floor(n/3)
    std::vector<std::string> trace; // one line per recursion level / stage
    std::vector<std::string> path;  // machine tags: case names, then "base" or "coloring"
    int uncolored = -1;             // coloring-stage stats, -1 when that stage never ran
    int cover = -1;
};

/// Instrumentation hook; every callback defaults to a no-op.
struct SolveObserver {
    virtual ~SolveObserver() = default;
    virtual void on_base_case(const Triangulation&, const std::vector<int>&) {}
    virtual void on_reduction(const Triangulation& parent, const ReductionStep&) {}
    virtual void on_coloring(const Triangulation& g, const PartialColoring& psi,
                             const MissingSets&, const BadSubgraph&, const Assembly&) {}
};

struct SolveOptions {
    FourColorOptions coloring;
    int oracle_cutoff = 12; // below this, answer by exhaustive search
    SolveObserver* observer = nullptr;
};

/// The full algorithm: exhaustive base case, reduction recursion while a
/// forbidden facial triangle exists, then the coloring/assembly pipeline.
/// The certificate is always re-verified; throws CertificationFailed.
IdomCertificate solve(const Triangulation& g, const SolveOptions& opts = {});

} // namespace tridom
