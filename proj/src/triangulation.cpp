#include "tridom/triangulation.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <string>

namespace tridom {

const char* shape_name(BoundaryShape s) {
    switch (s) {
    case BoundaryShape::Cycle3: return "Cycle3";
    case BoundaryShape::Cycle4: return "Cycle4";
    case BoundaryShape::Cycle5: return "Cycle5";
    case BoundaryShape::Path3: return "Path3";
    case BoundaryShape::Cycle3Pendant: return "Cycle3Pendant";
    }
    return "?";
}

const char* errc_name(Errc c) {
    switch (c) {
    case Errc::NonTriangularFace: return "NonTriangularFace";
    case Errc::InconsistentRotation: return "InconsistentRotation";
    case Errc::MultiEdgeInSimpleMode: return "MultiEdgeInSimpleMode";
    case Errc::Disconnected: return "Disconnected";
    case Errc::DisconnectingDeletion: return "DisconnectingDeletion";
    case Errc::UnclassifiableWalk: return "UnclassifiableWalk";
    case Errc::MultiEdgeCreated: return "MultiEdgeCreated";
    case Errc::NotOnFace: return "NotOnFace";
    case Errc::BadHeader: return "BadHeader";
    case Errc::TruncatedStream: return "TruncatedStream";
    case Errc::VertexCountTooLarge: return "VertexCountTooLarge";
    case Errc::ValidationFailed: return "ValidationFailed";
    case Errc::ParseError: return "ParseError";
    case Errc::DigestMismatch: return "DigestMismatch";
    case Errc::UnknownName: return "UnknownName";
    case Errc::NoPerfectMatching: return "NoPerfectMatching";
    case Errc::BudgetExhausted: return "BudgetExhausted";
    case Errc::NoHeavyDiagonal: return "NoHeavyDiagonal";
    case Errc::PsiInvariantViolation: return "PsiInvariantViolation";
    case Errc::UnreducibleFace: return "UnreducibleFace";
    case Errc::ExtensionFailed: return "ExtensionFailed";
    case Errc::NotBipartite: return "NotBipartite";
    case Errc::CoverTooLarge: return "CoverTooLarge";
    case Errc::AssemblyInvariantViolation: return "AssemblyInvariantViolation";
    case Errc::CertificationFailed: return "CertificationFailed";
    case Errc::TooLarge: return "TooLarge";
    }
    return "UnknownError";
}

void classify_walk(PatchBoundary& pb) {
    const auto& w = pb.walk;
    const int len = static_cast<int>(w.size());
    std::map<int, int> count;
    for (int v : w) count[v]++;
    const int distinct = static_cast<int>(count.size());
    pb.pendant = -1;
    pb.parent = -1;
    if (len == 3 && distinct == 3) {
        pb.shape = BoundaryShape::Cycle3;
        return;
    }
    if (len == 4) {
        if (distinct == 4) {
            pb.shape = BoundaryShape::Cycle4;
            return;
        }
        // the only other closed 4-walk bounding a face is along a P3: (x,y,z,y)
        if (distinct == 3) {
            int y = -1;
            for (auto& [v, c] : count)
                if (c == 2) y = v;
            if (y >= 0) {
                pb.shape = BoundaryShape::Path3;
                pb.parent = y;
                return;
            }
        }
    }
    if (len == 5) {
        if (distinct == 5) {
            pb.shape = BoundaryShape::Cycle5;
            return;
        }
        if (distinct == 4) {
            int y = -1;
            for (auto& [v, c] : count)
                if (c == 2) y = v;
            // pendant x: both walk-neighbors are y
            for (int i = 0; i < 5; ++i) {
                int prev = w[(i + 4) % 5], next = w[(i + 1) % 5];
                if (w[i] != y && prev == y && next == y) {
                    pb.shape = BoundaryShape::Cycle3Pendant;
                    pb.parent = y;
                    pb.pendant = w[i];
                    return;
                }
            }
        }
    }
    fail(Errc::UnclassifiableWalk, "walk of length " + std::to_string(len) + " with " +
                                       std::to_string(distinct) + " distinct vertices");
}

int Triangulation::sprev(int i) const {
    int j = i;
    while (d_[j].snext != i) j = d_[j].snext;
    return j;
}

int Triangulation::dart_from_to(int u, int v) const {
    if (!is_active(u)) return -1;
    int s = vstart_[u];
    if (s < 0) return -1;
    int j = s;
    do {
        if (target(j) == v) return j;
        j = d_[j].snext;
    } while (j != s);
    return -1;
}

std::vector<int> Triangulation::rotation_darts(int v) const {
    std::vector<int> out;
    if (!is_active(v) || vstart_[v] < 0) return out;
    int s = vstart_[v], j = s;
    do {
        out.push_back(j);
        j = d_[j].snext;
    } while (j != s);
    return out;
}

int Triangulation::degree(int v) const { return static_cast<int>(rotation_darts(v).size()); }

std::vector<int> Triangulation::rotation(int v) const {
    std::vector<int> out;
    for (int dd : rotation_darts(v)) out.push_back(target(dd));
    return out;
}

std::vector<int> Triangulation::neighbors(int v) const {
    auto out = rotation(v);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool Triangulation::adjacent(int u, int v) const { return dart_from_to(u, v) >= 0; }

std::vector<int> Triangulation::active_vertices() const {
    std::vector<int> out;
    for (int v = 0; v < label_limit(); ++v)
        if (alive_[v]) out.push_back(v);
    return out;
}

std::vector<std::vector<int>> Triangulation::face_orbits() const {
    std::vector<std::vector<int>> orbits;
    std::vector<char> seen(d_.size(), 0);
    for (int i = 0; i < static_cast<int>(d_.size()); ++i) {
        if (!dart_alive(i) || seen[i]) continue;
        std::vector<int> orbit;
        int j = i;
        do {
            seen[j] = 1;
            orbit.push_back(j);
            j = face_next(j);
        } while (j != i);
        orbits.push_back(std::move(orbit));
    }
    return orbits;
}

std::vector<std::vector<int>> Triangulation::faces() const {
    std::vector<std::vector<int>> out;
    for (auto& orbit : face_orbits()) {
        std::vector<int> walk;
        for (int dd : orbit) walk.push_back(d_[dd].origin);
        out.push_back(std::move(walk));
    }
    return out;
}

int Triangulation::face_count() const { return static_cast<int>(face_orbits().size()); }

void Triangulation::check_connected(Errc code) const {
    auto verts = active_vertices();
    if (verts.empty()) fail(code, "no vertices");
    std::vector<char> seen(label_limit(), 0);
    std::vector<int> stack{verts[0]};
    seen[verts[0]] = 1;
    int reached = 0;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        ++reached;
        for (int w : neighbors(v))
            if (!seen[w]) {
                seen[w] = 1;
                stack.push_back(w);
            }
    }
    if (reached != nv_) fail(code, "graph is not connected");
}

void Triangulation::validate(bool require_triangles) const {
    if (nv_ < 3) fail(Errc::ValidationFailed, "fewer than 3 vertices");
    check_connected(Errc::Disconnected);
    int nd = 0;
    for (int i = 0; i < static_cast<int>(d_.size()); ++i) {
        if (!dart_alive(i)) continue;
        ++nd;
        if (d_[d_[i].twin].twin != i) fail(Errc::ValidationFailed, "twin involution broken");
        if (target(i) == d_[i].origin) fail(Errc::ValidationFailed, "loop edge");
    }
    if (nd != 2 * ne_) fail(Errc::ValidationFailed, "dart/edge count mismatch");
    int f = 0;
    for (auto& orbit : face_orbits()) {
        ++f;
        if (require_triangles && orbit.size() != 3)
            fail(Errc::NonTriangularFace,
                 "face of length " + std::to_string(orbit.size()) + " at vertex " +
                     std::to_string(d_[orbit[0]].origin));
    }
    if (nv_ - ne_ + f != 2) fail(Errc::ValidationFailed, "Euler relation violated");
    if (simple_) {
        for (int v : active_vertices()) {
            auto rot = rotation(v);
            std::set<int> uniq(rot.begin(), rot.end());
            if (uniq.size() != rot.size()) fail(Errc::MultiEdgeInSimpleMode, "parallel edge at " + std::to_string(v));
        }
        if (require_triangles && ne_ != 3 * nv_ - 6)
            fail(Errc::ValidationFailed, "edge count != 3n-6");
    }
}

Triangulation Triangulation::from_rotations(const std::vector<std::vector<int>>& rotations,
                                            bool simple) {
    const int n = static_cast<int>(rotations.size());
    Triangulation t;
    t.simple_ = simple;
    t.alive_.assign(n, 1);
    t.vstart_.assign(n, -1);
    t.nv_ = n;

    // occurrence counts for consistency checking
    std::map<std::pair<int, int>, int> occ;
    int ndarts = 0;
    for (int v = 0; v < n; ++v) {
        for (int w : rotations[v]) {
            if (w < 0 || w >= n)
                fail(Errc::InconsistentRotation,
                     "vertex " + std::to_string(v) + " lists out-of-range neighbor " + std::to_string(w));
            if (w == v) fail(Errc::InconsistentRotation, "loop at vertex " + std::to_string(v));
            occ[{v, w}]++;
            ++ndarts;
        }
    }
    for (auto& [uv, c] : occ) {
        auto it = occ.find({uv.second, uv.first});
        int back = (it == occ.end()) ? 0 : it->second;
        if (back != c)
            fail(Errc::InconsistentRotation, "asymmetric adjacency between " +
                                                 std::to_string(uv.first) + " and " +
                                                 std::to_string(uv.second));
        if (simple && c > 1)
            fail(Errc::MultiEdgeInSimpleMode, "parallel edge " + std::to_string(uv.first) + "-" +
                                                  std::to_string(uv.second));
    }

    t.d_.resize(ndarts);
    t.ne_ = ndarts / 2;
    // darts in rotation-list order, snext cyclic per vertex
    {
        int id = 0;
        for (int v = 0; v < n; ++v) {
            const int deg = static_cast<int>(rotations[v].size());
            if (deg == 0) fail(Errc::Disconnected, "isolated vertex " + std::to_string(v));
            t.vstart_[v] = id;
            for (int k = 0; k < deg; ++k) {
                t.d_[id + k].origin = v;
                t.d_[id + k].snext = id + (k + 1) % deg;
            }
            id += deg;
        }
    }

    // collect darts per ordered pair, in rotation-list order
    std::map<std::pair<int, int>, std::vector<int>> slots;
    {
        int id = 0;
        for (int v = 0; v < n; ++v)
            for (int w : rotations[v]) slots[{v, w}].push_back(id++);
    }

    std::vector<std::pair<std::vector<int>, std::vector<int>>> multi; // unresolved classes
    for (auto& [uv, us] : slots) {
        if (uv.first > uv.second) continue;
        auto& vs = slots[{uv.second, uv.first}];
        if (us.size() == 1) {
            t.d_[us[0]].twin = vs[0];
            t.d_[vs[0]].twin = us[0];
        } else {
            multi.push_back({us, vs});
        }
    }

    auto faces_triangular = [&t]() {
        for (auto& orbit : t.face_orbits())
            if (orbit.size() != 3) return false;
        return true;
    };

    if (multi.empty()) {
        t.validate(true);
        return t;
    }
    if (multi.size() > 16)
        fail(Errc::ValidationFailed, "too many parallel edge classes to infer an embedding");

    // DFS over per-class matchings, accept the first one with all-triangle faces
    std::function<bool(size_t)> dfs = [&](size_t k) -> bool {
        if (k == multi.size()) return faces_triangular();
        auto& [us, vs] = multi[k];
        std::vector<int> perm(vs.size());
        std::iota(perm.begin(), perm.end(), 0);
        do {
            for (size_t i = 0; i < us.size(); ++i) {
                t.d_[us[i]].twin = vs[perm[i]];
                t.d_[vs[perm[i]]].twin = us[i];
            }
            if (dfs(k + 1)) return true;
        } while (std::next_permutation(perm.begin(), perm.end()));
        return false;
    };
    if (!dfs(0))
        fail(Errc::NonTriangularFace, "no parallel-edge pairing yields a triangulation");
    t.validate(true);
    return t;
}

std::optional<std::array<int, 3>> Triangulation::find_forbidden_face() const {
    for (auto& orbit : face_orbits()) {
        if (orbit.size() != 3) continue;
        std::array<int, 3> vs{d_[orbit[0]].origin, d_[orbit[1]].origin, d_[orbit[2]].origin};
        std::array<std::pair<int, int>, 3> dv; // (degree, label)
        for (int i = 0; i < 3; ++i) dv[i] = {degree(vs[i]), vs[i]};
        std::sort(dv.begin(), dv.end());
        if (dv[0].first == 4 && dv[1].first <= 5 && dv[2].first <= 5)
            return std::array<int, 3>{dv[0].second, dv[1].second, dv[2].second};
    }
    return std::nullopt;
}

std::pair<Triangulation, std::vector<PatchBoundary>>
Triangulation::delete_vertices(const std::vector<int>& S) const {
    std::vector<char> in_s(label_limit(), 0);
    for (int v : S) {
        if (!is_active(v)) fail(Errc::ValidationFailed, "deleting inactive vertex " + std::to_string(v));
        in_s[v] = 1;
    }

    int degree_sum = 0;
    for (int v : S) degree_sum += degree(v);

    // record adjacency of survivors to the deleted set (1-based deletion index)
    std::map<int, std::vector<int>> tri_adj;
    for (size_t i = 0; i < S.size(); ++i)
        for (int w : neighbors(S[i]))
            if (!in_s[w]) tri_adj[w].push_back(static_cast<int>(i) + 1);

    // darts whose old face orbit touches S: their new faces are the patches
    std::vector<char> patch_mark(d_.size(), 0);
    for (auto& orbit : face_orbits()) {
        bool touches = false;
        for (int dd : orbit)
            if (in_s[d_[dd].origin]) {
                touches = true;
                break;
            }
        if (touches)
            for (int dd : orbit)
                if (!in_s[d_[dd].origin] && !in_s[target(dd)]) patch_mark[dd] = 1;
    }

    Triangulation r = remove_vertices(S);

    std::vector<PatchBoundary> patches;
    for (auto& orbit : r.face_orbits()) {
        bool marked = false;
        for (int dd : orbit)
            if (patch_mark[dd]) {
                marked = true;
                break;
            }
        if (!marked) continue;
        PatchBoundary pb;
        for (int dd : orbit) pb.walk.push_back(r.d_[dd].origin);
        pb.deleted_degree_sum = degree_sum;
        for (int v : pb.walk)
            if (tri_adj.count(v)) pb.tri_neighbors[v] = tri_adj[v];
        classify_walk(pb);
        patches.push_back(std::move(pb));
    }
    return {std::move(r), std::move(patches)};
}

Triangulation Triangulation::remove_vertices(const std::vector<int>& S) const {
    std::vector<char> in_s(label_limit(), 0);
    for (int v : S) {
        if (!is_active(v)) fail(Errc::ValidationFailed, "removing inactive vertex " + std::to_string(v));
        in_s[v] = 1;
    }
    Triangulation r = *this;
    for (int v : S) {
        r.alive_[v] = 0;
        r.vstart_[v] = -1;
        --r.nv_;
    }
    // drop darts incident to S and resew rotations of survivors
    for (int i = 0; i < static_cast<int>(d_.size()); ++i) {
        if (!dart_alive(i)) continue;
        if (in_s[d_[i].origin]) {
            r.d_[i].origin = -1;
            // count each dropped edge once, even when both ends are in S
            if (!in_s[target(i)] || i < d_[i].twin) --r.ne_;
        } else if (in_s[target(i)]) {
            r.d_[i].origin = -1;
        }
    }
    for (int v = 0; v < label_limit(); ++v) {
        if (!r.alive_[v]) continue;
        std::vector<int> keep;
        for (int dd : rotation_darts(v))
            if (r.d_[dd].origin >= 0) keep.push_back(dd);
        if (keep.empty()) fail(Errc::DisconnectingDeletion, "vertex " + std::to_string(v) + " isolated");
        for (size_t k = 0; k < keep.size(); ++k)
            r.d_[keep[k]].snext = keep[(k + 1) % keep.size()];
        r.vstart_[v] = keep[0];
    }
    r.check_connected(Errc::DisconnectingDeletion);
    return r;
}

Triangulation Triangulation::add_chord(const PatchBoundary& face, int u, int v) const {
    // locate the face orbit matching the walk
    const int len = static_cast<int>(face.walk.size());
    std::vector<int> orbit;
    for (auto& o : face_orbits()) {
        if (static_cast<int>(o.size()) != len) continue;
        // cyclic match of origins against face.walk
        for (int shift = 0; shift < len; ++shift) {
            bool ok = true;
            for (int i = 0; i < len && ok; ++i)
                if (d_[o[(shift + i) % len]].origin != face.walk[i]) ok = false;
            if (ok) {
                orbit.assign(len, -1);
                for (int i = 0; i < len; ++i) orbit[i] = o[(shift + i) % len];
                break;
            }
        }
        if (!orbit.empty()) break;
    }
    if (orbit.empty()) fail(Errc::NotOnFace, "no face matches the given walk");

    int iu = -1, iv = -1;
    for (int i = 0; i < len; ++i) {
        if (face.walk[i] == u && iu < 0) iu = i;
        if (face.walk[i] == v && iv < 0) iv = i;
    }
    if (iu < 0 || iv < 0) fail(Errc::NotOnFace, "chord endpoint not on face");
    int gap = std::abs(iu - iv);
    if (gap == 1 || gap == len - 1)
        fail(Errc::NotOnFace, "chord endpoints are consecutive on the walk");
    if (simple_ && adjacent(u, v))
        fail(Errc::MultiEdgeCreated, "chord " + std::to_string(u) + "-" + std::to_string(v) + " already present");

    Triangulation r = *this;
    const int a = static_cast<int>(r.d_.size());     // u -> v
    const int b = a + 1;                             // v -> u
    r.d_.push_back({u, b, -1});
    r.d_.push_back({v, a, -1});
    ++r.ne_;
    // insert a at u between twin(D[iu-1]) and D[iu]; likewise b at v
    auto splice = [&r](int newd, int after, int before) {
        r.d_[newd].snext = before;
        r.d_[after].snext = newd;
    };
    int pu = r.d_[orbit[(iu + len - 1) % len]].twin;
    int pv = r.d_[orbit[(iv + len - 1) % len]].twin;
    splice(a, pu, orbit[iu]);
    splice(b, pv, orbit[iv]);
    return r;
}

int Triangulation::stack_on_face(int a, int b, int c) {
    // locate the orbit of the facial triangle through a->b with third corner c,
    // accepting either orientation of the triple
    int e0 = -1;
    for (int attempt = 0; attempt < 2 && e0 < 0; ++attempt) {
        if (attempt == 1) std::swap(b, c);
        int s = vstart_[a], j = s;
        do {
            if (target(j) == b) {
                int f1 = face_next(j);
                int f2 = face_next(f1);
                if (face_next(f2) == j && d_[f2].origin == c) {
                    e0 = j;
                    break;
                }
            }
            j = d_[j].snext;
        } while (j != s);
    }
    if (e0 < 0) fail(Errc::NotOnFace, "no facial triangle " + std::to_string(a) + "," +
                                          std::to_string(b) + "," + std::to_string(c));
    int e1 = face_next(e0), e2 = face_next(e1);

    const int nl = label_limit();
    alive_.push_back(1);
    vstart_.push_back(-1);
    ++nv_;

    const int base = static_cast<int>(d_.size());
    // A: a->nl, A': nl->a, B: b->nl, B': nl->b, C: c->nl, C': nl->c
    const int A = base, Ap = base + 1, B = base + 2, Bp = base + 3, C = base + 4, Cp = base + 5;
    d_.push_back({a, Ap, -1});
    d_.push_back({nl, A, -1});
    d_.push_back({b, Bp, -1});
    d_.push_back({nl, B, -1});
    d_.push_back({c, Cp, -1});
    d_.push_back({nl, C, -1});
    ne_ += 3;

    auto insert_between = [this](int newd, int after) {
        d_[newd].snext = d_[after].snext;
        d_[after].snext = newd;
    };
    insert_between(A, d_[e2].twin);  // at a, before e0
    insert_between(B, d_[e0].twin);  // at b, before e1
    insert_between(C, d_[e1].twin);  // at c, before e2
    // rotation at the new vertex: A' -> C' -> B'
    d_[Ap].snext = Cp;
    d_[Cp].snext = Bp;
    d_[Bp].snext = Ap;
    vstart_[nl] = Ap;
    return nl;
}

bool Triangulation::flip(int u, int v) {
    int e = dart_from_to(u, v);
    if (e < 0) fail(Errc::NotOnFace, "no edge " + std::to_string(u) + "-" + std::to_string(v));
    int t = d_[e].twin;
    int a1 = face_next(e);  // v -> x
    int a2 = face_next(a1); // x -> u
    int b1 = face_next(t);  // u -> y
    int b2 = face_next(b1); // y -> v
    if (face_next(a2) != e || face_next(b2) != t)
        fail(Errc::NotOnFace, "edge not between two triangles");
    int x = d_[a2].origin, y = d_[b2].origin;
    if (x == y || adjacent(x, y)) return false;
    if (degree(u) <= 3 || degree(v) <= 3) return false;

    // detach e from u and t from v
    auto detach = [this](int dd) {
        int p = sprev(dd);
        int vv = d_[dd].origin;
        d_[p].snext = d_[dd].snext;
        if (vstart_[vv] == dd) vstart_[vv] = d_[dd].snext;
    };
    detach(e);
    detach(t);
    d_[e].origin = x; // e becomes x -> y
    d_[t].origin = y; // t becomes y -> x
    auto insert_between = [this](int newd, int after) {
        d_[newd].snext = d_[after].snext;
        d_[after].snext = newd;
    };
    insert_between(e, d_[a1].twin); // at x, before a2
    insert_between(t, d_[b1].twin); // at y, before b2
    return true;
}

} // namespace tridom
