#include "tridom/pipeline.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "tridom/oracle.hpp"

namespace tridom {

const char* case_name(CaseTag t) {
    switch (t) {
        case CaseTag::C1_Cycle3: return "C1_Cycle3";
        case CaseTag::C2_Path3: return "C2_Path3";
        case CaseTag::C2_Cycle4: return "C2_Cycle4";
        case CaseTag::C3_Cycle5: return "C3_Cycle5";
        case CaseTag::C3_Cycle3Pendant: return "C3_Cycle3Pendant";
    }
    return "?";
}

VerifyResult verify(const SimpleGraph& g, const std::vector<int>& D) {
    VerifyResult r;
    std::set<int> in(D.begin(), D.end());
    for (int v : D)
        if (!g.is_active(v)) {
            r.undominated.push_back(v); // not even a vertex
            return r;
        }
    r.independent = true;
    for (size_t i = 0; i < D.size(); ++i)
        for (size_t j = i + 1; j < D.size(); ++j)
            if (g.adjacent(D[i], D[j])) {
                r.independent = false;
                r.adjacent_pairs.emplace_back(D[i], D[j]);
            }
    r.dominating = true;
    for (int v : g.vertices()) {
        if (in.count(v)) continue;
        bool dom = false;
        for (int w : g.adj[v])
            if (in.count(w)) {
                dom = true;
                break;
            }
        if (!dom) {
            r.dominating = false;
            r.undominated.push_back(v);
        }
    }
    r.within_bound = static_cast<int>(D.size()) <= g.vertex_count() / 3;
    return r;
}

VerifyResult verify(const Triangulation& g, const std::vector<int>& D) {
    return verify(collapse(g), D);
}

namespace {

// boundary walk of the residual quadrilateral after splitting a pentagon
// (w0..w4 in face order) with the chord {w[i], w[(i+2)%5]}
std::vector<int> residual_quad(const std::vector<int>& w, int i) {
    return {w[i], w[(i + 2) % 5], w[(i + 3) % 5], w[(i + 4) % 5]};
}

std::pair<int, int> sorted_pair(int a, int b) { return {std::min(a, b), std::max(a, b)}; }

// split a 4-walk with one of its diagonals, preferring an absent edge in
// lexicographic order; returns the triangulated graph or nullopt
std::optional<std::pair<Triangulation, std::pair<int, int>>>
split_quad(const Triangulation& g, const std::vector<int>& quad) {
    std::vector<std::pair<int, int>> diags = {sorted_pair(quad[0], quad[2]),
                                              sorted_pair(quad[1], quad[3])};
    std::sort(diags.begin(), diags.end());
    PatchBoundary face;
    face.walk = quad;
    for (auto [u, v] : diags) {
        if (g.adjacent(u, v)) continue;
        return std::make_pair(g.add_chord(face, u, v), std::make_pair(u, v));
    }
    return std::nullopt;
}

} // namespace

ReduceResult reduce_once(const Triangulation& g, const std::array<int, 3>& face) {
    ReductionStep step;
    step.tri = face;
    const int d3 = g.degree(face[2]);

    auto [g1, patches] = g.delete_vertices({face[0], face[1], face[2]});
    if (patches.size() != 1)
        fail(Errc::UnreducibleFace, "deletion produced " + std::to_string(patches.size()) + " patch faces");
    PatchBoundary& pb = patches.front();
    step.walk = pb.walk;
    step.roles = pb.tri_neighbors;

    switch (pb.shape) {
        case BoundaryShape::Cycle3:
            step.tag = CaseTag::C1_Cycle3;
            g1.validate(true);
            return {std::move(g1), std::move(step)};

        case BoundaryShape::Path3:
            // the whole graph has six vertices and the 5-vertex of the
            // triangle dominates all of them
            step.tag = CaseTag::C2_Path3;
            if (g.vertex_count() != 6 || d3 != 5)
                fail(Errc::UnreducibleFace, "path boundary outside the six-vertex case");
            step.terminal_D = {face[2]};
            return {g, std::move(step)};

        case BoundaryShape::Cycle4: {
            step.tag = CaseTag::C2_Cycle4;
            auto split = split_quad(g1, pb.walk);
            if (!split) fail(Errc::UnreducibleFace, "both diagonals of the 4-face are present");
            step.added_chords.push_back(split->second);
            split->first.validate(true);
            return {std::move(split->first), std::move(step)};
        }

        case BoundaryShape::Cycle5: {
            step.tag = CaseTag::C3_Cycle5;
            // first any absent chord (lexicographic), then a diagonal of the
            // remaining 4-face; backtrack over the first choice if needed
            std::vector<std::pair<std::pair<int, int>, int>> chords;
            for (int i = 0; i < 5; ++i)
                chords.push_back({sorted_pair(pb.walk[i], pb.walk[(i + 2) % 5]), i});
            std::sort(chords.begin(), chords.end());
            for (auto& [c, i] : chords) {
                if (g1.adjacent(c.first, c.second)) continue;
                Triangulation g2 = g1.add_chord(pb, c.first, c.second);
                auto split = split_quad(g2, residual_quad(pb.walk, i));
                if (!split) continue;
                step.added_chords.push_back(c);
                step.added_chords.push_back(split->second);
                split->first.validate(true);
                return {std::move(split->first), std::move(step)};
            }
            fail(Errc::UnreducibleFace, "5-face admits no chord pair");
        }

        case BoundaryShape::Cycle3Pendant: {
            step.tag = CaseTag::C3_Cycle3Pendant;
            step.pendant = pb.pendant;
            step.parent = pb.parent;
            auto [g2, patches2] = g.delete_vertices({face[0], face[1], face[2], pb.pendant});
            if (patches2.size() != 1 || patches2.front().shape != BoundaryShape::Cycle3)
                fail(Errc::UnreducibleFace, "pendant re-deletion did not leave a triangle");
            step.walk = patches2.front().walk;
            g2.validate(true);
            return {std::move(g2), std::move(step)};
        }
    }
    fail(Errc::UnreducibleFace, "unclassified boundary");
}

namespace {

// the deleted vertex the extension tables pick for the given pattern of
// boundary members of D', or -1 for "none required"
int pick_vsp(const SimpleGraph& parent, const ReductionStep& step,
             const std::set<int>& in, const std::vector<int>& undominated) {
    const auto& T = step.tri;
    auto role = [&](int b) {
        auto it = step.roles.find(b);
        return it == step.roles.end() ? std::vector<int>{} : it->second;
    };

    if (step.tag == CaseTag::C1_Cycle3) {
        for (int v : undominated)
            if (v == T[0] || v == T[1] || v == T[2]) return v;
        return -1;
    }

    std::vector<int> P; // D' on the boundary walk, deduplicated
    for (int b : step.walk)
        if (in.count(b) && std::find(P.begin(), P.end(), b) == P.end()) P.push_back(b);

    auto other_of = [&](const std::vector<int>& ij) {
        return T[6 - ij[0] - ij[1] - 1]; // v_k for role {i,j}
    };

    if (step.tag == CaseTag::C2_Cycle4 || step.tag == CaseTag::C3_Cycle5) {
        if (P.empty()) return T[0];
        if (P.size() == 1) {
            auto r = role(P[0]);
            if (r.size() == 2) return other_of(r);
            if (r == std::vector<int>{3}) return step.tag == CaseTag::C2_Cycle4 ? T[0] : T[1];
            if (r == std::vector<int>{2}) return T[2];
        }
        if (P.size() == 2 && step.tag == CaseTag::C3_Cycle5) {
            std::set<int> singles;
            for (int b : P) {
                auto r = role(b);
                if (r.size() == 1) singles.insert(r[0]);
            }
            if (singles == std::set<int>{2, 3}) return T[0];
        }
        fail(Errc::ExtensionFailed, "no rule for this boundary pattern");
    }

    // pendant: the boundary is the triangle left after deleting T and x
    auto rx = role(step.pendant);
    if (rx.size() != 2) fail(Errc::ExtensionFailed, "pendant vertex is not adjacent to exactly two of T");
    if (P.empty()) return T[std::min(rx[0], rx[1]) - 1];
    if (P.size() == 1) {
        if (P[0] == step.parent) {
            if (rx == std::vector<int>{2, 3}) return T[0];
            fail(Errc::ExtensionFailed, "parent in D' should already dominate everything");
        }
        auto r = role(P[0]);
        if (rx == std::vector<int>{2, 3}) {
            if (r == std::vector<int>{1, 2}) return T[2];
            if (r == std::vector<int>{1, 3}) return T[1];
        } else {
            return T[0];
        }
    }
    fail(Errc::ExtensionFailed, "no rule for this boundary pattern");
}

} // namespace

std::vector<int> extend(const SimpleGraph& parent, const ReductionStep& step,
                        const std::vector<int>& Dprime) {
    if (!step.terminal_D.empty()) return step.terminal_D;

    std::set<int> in(Dprime.begin(), Dprime.end());
    auto dominated = [&](int v) {
        if (in.count(v)) return true;
        for (int w : parent.adj[v])
            if (in.count(w)) return true;
        return false;
    };

    // only the deleted vertices and the boundary can have lost their
    // domination (the chords are gone, and T's neighbors are all here)
    std::vector<int> at_risk(step.tri.begin(), step.tri.end());
    if (step.pendant >= 0) at_risk.push_back(step.pendant);
    at_risk.insert(at_risk.end(), step.walk.begin(), step.walk.end());

    std::vector<int> undominated;
    for (int v : at_risk)
        if (!dominated(v)) undominated.push_back(v);
    std::sort(undominated.begin(), undominated.end());

    std::vector<int> D = Dprime;
    if (!undominated.empty()) {
        int vsp = pick_vsp(parent, step, in, undominated);
        if (vsp < 0)
            fail(Errc::ExtensionFailed,
                 "vertex " + std::to_string(undominated.front()) + " left undominated");
        D.push_back(vsp);
    }
    std::sort(D.begin(), D.end());

    VerifyResult check = verify(parent, D);
    if (!check.independent)
        fail(Errc::ExtensionFailed, "extension breaks independence at vertex " +
                                        std::to_string(check.adjacent_pairs.front().first));
    if (!check.dominating)
        fail(Errc::ExtensionFailed,
             "vertex " + std::to_string(check.undominated.front()) + " left undominated");
    return D;
}

std::vector<int> extend(const Triangulation& parent, const ReductionStep& step,
                        const std::vector<int>& Dprime) {
    return extend(collapse(parent), step, Dprime);
}

int MissingSets::missing_at(int v) const {
    for (int i = 0; i < 4; ++i)
        if (std::binary_search(U[i].begin(), U[i].end(), v)) return i + 1;
    return 0;
}

MissingSets missing_sets(const Triangulation& g, const PartialColoring& psi) {
    MissingSets ms;
    for (int v : g.active_vertices()) {
        auto palette = closed_palette(g, psi, v);
        for (int c = 1; c <= 4; ++c) {
            if (std::binary_search(palette.begin(), palette.end(), c)) continue;
            if (!psi.is_colored(v))
                fail(Errc::AssemblyInvariantViolation,
                     "uncolored vertex " + std::to_string(v) + " is missing a color");
            if (palette.size() < 3)
                fail(Errc::AssemblyInvariantViolation,
                     "vertex " + std::to_string(v) + " sees fewer than three colors");
            if (g.degree(v) < 6)
                fail(Errc::AssemblyInvariantViolation,
                     "low-degree vertex " + std::to_string(v) + " is missing a color");
            ms.U[c - 1].push_back(v);
            ms.all.push_back(v);
        }
    }
    std::sort(ms.all.begin(), ms.all.end());
    // |palette| >= 3 already forces the four sets to be disjoint
    return ms;
}

BadSubgraph bad_subgraph(const Triangulation& g, const PartialColoring& psi,
                         const MissingSets& ms) {
    BadSubgraph bs;
    std::map<int, int> missing;
    for (int i = 0; i < 4; ++i)
        for (int v : ms.U[i]) missing[v] = i + 1;

    // the two triangles on each edge, for the critical-cycle check
    std::map<std::pair<int, int>, std::vector<int>> apex;
    for (auto& f : g.faces())
        for (int i = 0; i < 3; ++i)
            apex[sorted_pair(f[i], f[(i + 1) % 3])].push_back(f[(i + 2) % 3]);

    std::map<int, std::vector<int>> adj;
    for (auto& [u, mu] : missing)
        for (int w : g.neighbors(u)) {
            auto it = missing.find(w);
            if (it == missing.end() || it->second == mu) continue;
            adj[u].push_back(w);
            if (u < w) {
                bs.edges.emplace_back(u, w);
                // both faces on a bad edge must be centered on an uncolored vertex
                for (int x : apex[{u, w}])
                    if (psi.is_colored(x))
                        fail(Errc::AssemblyInvariantViolation,
                             "bad edge " + std::to_string(u) + "-" + std::to_string(w) +
                                 " lies on a colored triangle");
            }
        }

    std::set<int> seen;
    for (auto& [start, ignored] : adj) {
        if (seen.count(start)) continue;
        BadComponent comp;
        std::vector<int> queue = {start};
        seen.insert(start);
        while (!queue.empty()) {
            int v = queue.back();
            queue.pop_back();
            comp.vertices.push_back(v);
            for (int w : adj[v])
                if (seen.insert(w).second) queue.push_back(w);
        }
        std::sort(comp.vertices.begin(), comp.vertices.end());

        // colors {a, c} of the lowest vertex split the component in two
        int anchor = comp.vertices.front();
        std::set<int> side0 = {psi.color[anchor], missing.at(anchor)};
        for (int v : comp.vertices) {
            bool in0 = side0.count(psi.color[v]) != 0;
            // membership must be consistent between the color and the missing color
            if (in0 != (side0.count(missing.at(v)) != 0))
                fail(Errc::NotBipartite, "vertex " + std::to_string(v) +
                                             " does not fit the two-class split");
            (in0 ? comp.part0 : comp.part1).push_back(v);
        }
        for (int v : comp.part0)
            for (int w : adj[v])
                if (side0.count(psi.color[w]))
                    fail(Errc::NotBipartite, "bad edge inside one part");

        auto& pick = comp.part1.size() < comp.part0.size() ||
                             (comp.part1.size() == comp.part0.size() &&
                              comp.part1.front() < comp.part0.front())
                         ? comp.part1
                         : comp.part0;
        bs.cover.insert(bs.cover.end(), pick.begin(), pick.end());
        bs.components.push_back(std::move(comp));
    }
    std::sort(bs.cover.begin(), bs.cover.end());

    if (bs.cover.size() > psi.uncolored.size())
        fail(Errc::CoverTooLarge, "cover of " + std::to_string(bs.cover.size()) +
                                      " exceeds " + std::to_string(psi.uncolored.size()) +
                                      " uncolored vertices");
    return bs;
}

Assembly assemble(const Triangulation& g, const PartialColoring& psi, const MissingSets& ms,
                  const std::vector<int>& J) {
    Assembly out;
    SimpleGraph sg = collapse(g);
    std::set<int> cover(J.begin(), J.end());

    for (int i = 0; i < 4; ++i) {
        auto independent_from = [&](int v, const std::vector<int>& S) {
            for (int w : S)
                if (sg.adjacent(v, w)) return false;
            return true;
        };
        std::vector<int> Iplus;
        for (int v : ms.U[i])
            if (!cover.count(v) && independent_from(v, Iplus)) Iplus.push_back(v);
        out.I[i] = Iplus;
        for (int v : ms.U[i])
            if (cover.count(v) && independent_from(v, Iplus)) Iplus.push_back(v);

        out.D[i] = psi.classes[i];
        out.D[i].insert(out.D[i].end(), Iplus.begin(), Iplus.end());
        std::sort(out.D[i].begin(), out.D[i].end());

        VerifyResult check = verify(sg, out.D[i]);
        if (!check.independent || !check.dominating)
            fail(Errc::AssemblyInvariantViolation,
                 "candidate set for color " + std::to_string(i + 1) + " is not independent dominating");
        out.total += static_cast<long>(out.D[i].size());
        if (out.D[i].size() < out.D[out.best].size()) out.best = i;
    }

    // across classes the greedy sets avoid the cover, so bad edges cannot join them
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            for (int u : out.I[i])
                for (int v : out.I[j])
                    if (sg.adjacent(u, v))
                        fail(Errc::AssemblyInvariantViolation, "greedy sets are not independent across classes");

    const long n = g.vertex_count();
    if (3 * out.total > 4 * n - 2)
        fail(Errc::AssemblyInvariantViolation,
             "total candidate size " + std::to_string(out.total) + " exceeds (4n-2)/3");
    return out;
}

IdomCertificate solve(const Triangulation& g, const SolveOptions& opts) {
    if (!g.simple()) fail(Errc::ValidationFailed, "solve expects a simple triangulation");
    g.validate(true);

    IdomCertificate cert;
    cert.bound = g.vertex_count() / 3;

    std::vector<std::pair<SimpleGraph, ReductionStep>> levels;
    Triangulation cur = g;
    std::vector<int> D;

    for (;;) {
        std::ostringstream line;
        if (cur.vertex_count() <= opts.oracle_cutoff) {
            OracleResult base = iota_exact(cur, std::max(opts.oracle_cutoff, 16));
            D = base.witness;
            if (static_cast<int>(D.size()) > cur.vertex_count() / 3)
                fail(Errc::CertificationFailed, "exhaustive base case exceeds the n/3 bound");
            if (opts.observer) opts.observer->on_base_case(cur, D);
            line << "base n=" << cur.vertex_count() << " size=" << D.size();
            cert.trace.push_back(line.str());
            cert.path.push_back("base");
            break;
        }

        auto face = cur.find_forbidden_face();
        if (face) {
            ReduceResult rr = reduce_once(cur, *face);
            if (opts.observer) opts.observer->on_reduction(cur, rr.step);
            line << case_name(rr.step.tag) << " tri=" << (*face)[0] << "," << (*face)[1] << ","
                 << (*face)[2] << " n=" << cur.vertex_count();
            cert.trace.push_back(line.str());
            cert.path.push_back(case_name(rr.step.tag));
            if (!rr.step.terminal_D.empty()) {
                D = rr.step.terminal_D;
                break;
            }
            levels.emplace_back(collapse(cur), std::move(rr.step));
            cur = std::move(rr.reduced);
            continue;
        }

        // no forbidden facial triangle left: color and assemble
        std::vector<int> I = select_I(cur);
        GPrime gp = build_Gprime(cur, I);
        Coloring phi = four_color(gp.graph, opts.coloring);
        optimize_special_cycles(cur, gp, phi);
        PartialColoring psi = build_psi(cur, I, phi, gp.index);
        MissingSets ms = missing_sets(cur, psi);
        BadSubgraph bs = bad_subgraph(cur, psi, ms);
        Assembly asmbl = assemble(cur, psi, ms, bs.cover);
        if (opts.observer) opts.observer->on_coloring(cur, psi, ms, bs, asmbl);
        D = asmbl.D[asmbl.best];
        cert.uncolored = static_cast<int>(psi.uncolored.size());
        cert.cover = static_cast<int>(bs.cover.size());
        line << "coloring n=" << cur.vertex_count() << " uncolored=" << cert.uncolored
             << " cover=" << cert.cover << " total=" << asmbl.total << " size=" << D.size();
        cert.trace.push_back(line.str());
        cert.path.push_back("coloring");
        break;
    }

    for (auto it = levels.rbegin(); it != levels.rend(); ++it) D = extend(it->first, it->second, D);

    std::sort(D.begin(), D.end());
    cert.D = D;
    VerifyResult check = verify(g, cert.D);
    if (!check.ok())
        fail(Errc::CertificationFailed,
             std::string("final check failed: ") +
                 (!check.independent ? "not independent"
                  : !check.dominating ? "not dominating"
                                      : "bound exceeded"));
    return cert;
}

} // namespace tridom
