#include "tridom/generators.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "tridom/prng.hpp"

namespace tridom {

std::vector<std::vector<int>> rotations_from_faces(int n,
                                                   const std::vector<std::array<int, 3>>& faces) {
    // orient consistently: each directed edge used exactly once
    std::map<std::pair<int, int>, std::vector<int>> edge_faces;
    for (size_t f = 0; f < faces.size(); ++f) {
        auto [a, b, c] = faces[f];
        for (auto [u, v] : {std::pair{a, b}, {b, c}, {c, a}}) {
            edge_faces[{std::min(u, v), std::max(u, v)}].push_back(static_cast<int>(f));
        }
    }
    for (auto& [e, fs] : edge_faces)
        if (fs.size() != 2)
            fail(Errc::ValidationFailed, "edge not on exactly two faces");

    std::vector<std::array<int, 3>> oriented(faces.begin(), faces.end());
    std::vector<int> state(faces.size(), 0); // 0 unseen, 1 oriented
    std::vector<int> stack{0};
    state[0] = 1;
    auto has_directed = [&](int f, int u, int v) {
        auto& t = oriented[f];
        return (t[0] == u && t[1] == v) || (t[1] == u && t[2] == v) || (t[2] == u && t[0] == v);
    };
    while (!stack.empty()) {
        int f = stack.back();
        stack.pop_back();
        auto [a, b, c] = oriented[f];
        for (auto [u, v] : {std::pair{a, b}, {b, c}, {c, a}}) {
            for (int g : edge_faces[{std::min(u, v), std::max(u, v)}]) {
                if (g == f) continue;
                if (state[g] == 0) {
                    // neighbor must use the edge in the opposite direction
                    if (has_directed(g, u, v)) std::swap(oriented[g][1], oriented[g][2]);
                    state[g] = 1;
                    stack.push_back(g);
                } else if (has_directed(g, u, v)) {
                    fail(Errc::ValidationFailed, "face list is not orientable");
                }
            }
        }
    }
    for (int s : state)
        if (s == 0) fail(Errc::ValidationFailed, "face list is not edge-connected");

    // at each corner (x, v, z) of an oriented face, z follows x at v
    std::vector<std::map<int, int>> succ(n);
    for (auto& t : oriented) {
        for (int i = 0; i < 3; ++i) {
            int x = t[i], v = t[(i + 1) % 3], z = t[(i + 2) % 3];
            if (succ[v].count(x)) fail(Errc::ValidationFailed, "inconsistent corner at vertex");
            succ[v][x] = z;
        }
    }
    std::vector<std::vector<int>> rot(n);
    for (int v = 0; v < n; ++v) {
        if (succ[v].empty()) fail(Errc::ValidationFailed, "vertex on no face");
        int start = succ[v].begin()->first, w = start;
        do {
            rot[v].push_back(w);
            auto it = succ[v].find(w);
            if (it == succ[v].end()) fail(Errc::ValidationFailed, "broken rotation at vertex");
            w = it->second;
        } while (w != start);
        if (rot[v].size() != succ[v].size())
            fail(Errc::ValidationFailed, "rotation at vertex is not a single cycle");
    }
    return rot;
}

namespace {

Triangulation k4() {
    return Triangulation::from_rotations({{1, 2, 3}, {0, 3, 2}, {0, 1, 3}, {0, 2, 1}});
}

Triangulation octahedron() {
    return Triangulation::from_rotations(rotations_from_faces(
        6, {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 1}, {5, 2, 1}, {5, 3, 2}, {5, 4, 3}, {5, 1, 4}}));
}

Triangulation icosahedron() {
    std::vector<std::array<int, 3>> fs;
    for (int i = 0; i < 5; ++i) {
        int u = 1 + i, un = 1 + (i + 1) % 5;
        int w = 6 + i, wn = 6 + (i + 1) % 5;
        fs.push_back({0, u, un});
        fs.push_back({11, wn, w});
        fs.push_back({u, w, un});
        fs.push_back({un, w, wn});
    }
    return Triangulation::from_rotations(rotations_from_faces(12, fs));
}

Triangulation doublewheel(int k) {
    if (k < 3) fail(Errc::UnknownName, "doublewheel rim must have at least 3 vertices");
    std::vector<std::array<int, 3>> fs;
    for (int i = 0; i < k; ++i) {
        int a = i, b = (i + 1) % k;
        fs.push_back({k, a, b});
        fs.push_back({k + 1, b, a});
    }
    return Triangulation::from_rotations(rotations_from_faces(k + 2, fs));
}

} // namespace

Triangulation named(const std::string& name) {
    if (name == "triangle")
        return Triangulation::from_rotations({{1, 2}, {2, 0}, {0, 1}});
    if (name == "K4") return k4();
    if (name == "stacked5") return stacked(5, 0);
    if (name == "octahedron") return octahedron();
    if (name == "icosahedron") return icosahedron();
    if (name.rfind("doublewheel_", 0) == 0) {
        try {
            return doublewheel(std::stoi(name.substr(12)));
        } catch (const std::invalid_argument&) {
        } catch (const std::out_of_range&) {
        }
    }
    fail(Errc::UnknownName, name);
}

Triangulation stacked(int n, uint64_t seed) {
    if (n < 4) fail(Errc::ValidationFailed, "stacked requires n >= 4");
    SplitMix64 rng(seed);
    Triangulation t = k4();
    std::vector<std::array<int, 3>> faces;
    for (auto& w : t.faces()) faces.push_back({w[0], w[1], w[2]});
    for (int v = 4; v < n; ++v) {
        size_t i = rng.below(faces.size());
        auto [a, b, c] = faces[i];
        int nl = t.stack_on_face(a, b, c);
        faces[i] = {a, b, nl};
        faces.push_back({b, c, nl});
        faces.push_back({c, a, nl});
    }
    return t;
}

Triangulation flipmix(int n, uint64_t seed, int flips) {
    Triangulation t = stacked(n, seed);
    SplitMix64 rng(seed ^ 0x5deece66dULL);
    std::vector<std::pair<int, int>> edges;
    for (int attempt = 0; attempt < flips; ++attempt) {
        edges.clear();
        for (int v : t.active_vertices())
            for (int w : t.neighbors(v))
                if (v < w) edges.push_back({v, w});
        auto [u, v] = edges[rng.below(edges.size())];
        t.flip(u, v);
    }
    return t;
}

namespace {

bool match_rec(const std::vector<std::vector<int>>& adj, const std::vector<int>& verts,
               std::map<int, int>& mate) {
    int u = -1;
    for (int v : verts)
        if (!mate.count(v)) {
            u = v;
            break;
        }
    if (u < 0) return true;
    for (int w : adj[u]) {
        if (mate.count(w)) continue;
        mate[u] = w;
        mate[w] = u;
        if (match_rec(adj, verts, mate)) return true;
        mate.erase(u);
        mate.erase(w);
    }
    return false;
}

} // namespace

std::vector<std::pair<int, int>> perfect_matching(const Triangulation& g) {
    auto verts = g.active_vertices();
    if (verts.size() % 2) fail(Errc::NoPerfectMatching, "odd vertex count");
    std::vector<std::vector<int>> adj(g.label_limit());
    for (int v : verts) adj[v] = g.neighbors(v);
    std::map<int, int> mate;
    if (!match_rec(adj, verts, mate)) fail(Errc::NoPerfectMatching, "no perfect matching exists");
    std::vector<std::pair<int, int>> m;
    for (auto& [u, w] : mate)
        if (u < w) m.push_back({u, w});
    return m;
}

Triangulation gadget_family(const Triangulation& t2k,
                            std::optional<std::vector<std::pair<int, int>>> matching) {
    if (!t2k.simple()) fail(Errc::ValidationFailed, "gadget base must be simple");
    auto m = matching ? *matching : perfect_matching(t2k);
    std::sort(m.begin(), m.end());
    std::vector<std::vector<int>> rot(t2k.label_limit() + m.size());
    for (int v : t2k.active_vertices()) rot[v] = t2k.rotation(v);
    int z = t2k.label_limit();
    for (auto [x, y] : m) {
        auto splice = [&](int at, int old_nb, int nz) {
            auto& r = rot[at];
            auto it = std::find(r.begin(), r.end(), old_nb);
            if (it == r.end()) fail(Errc::ValidationFailed, "matching edge not present");
            // old single edge becomes (old, z, old): a 2-cycle with z inside
            it = r.insert(it + 1, nz);
            r.insert(it + 1, old_nb);
        };
        splice(x, y, z);
        splice(y, x, z);
        rot[z] = {x, y};
        ++z;
    }
    return Triangulation::from_rotations(rot, /*simple=*/false);
}

Triangulation generate(const GenSpec& spec) {
    switch (spec.kind) {
    case GenSpec::Kind::Named: return named(spec.name);
    case GenSpec::Kind::Stacked: return stacked(spec.n, spec.seed);
    case GenSpec::Kind::Flipmix: return flipmix(spec.n, spec.seed, spec.flips);
    case GenSpec::Kind::Gadget: {
        if (!spec.name.empty()) return gadget_family(named(spec.name));
        if (spec.n % 2) fail(Errc::ValidationFailed, "gadget base needs even n");
        return gadget_family(stacked(spec.n, spec.seed));
    }
    }
    fail(Errc::ValidationFailed, "unknown generator kind");
}

} // namespace tridom
