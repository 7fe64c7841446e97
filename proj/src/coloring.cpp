#include "tridom/coloring.hpp"

#include <algorithm>
#include <set>

#include "tridom/prng.hpp"

namespace tridom {

bool SimpleGraph::adjacent(int u, int v) const {
    if (!is_active(u)) return false;
    return std::binary_search(adj[u].begin(), adj[u].end(), v);
}

std::vector<int> SimpleGraph::vertices() const {
    std::vector<int> out;
    for (int v = 0; v < label_limit(); ++v)
        if (active[v]) out.push_back(v);
    return out;
}

int SimpleGraph::vertex_count() const {
    return static_cast<int>(std::count(active.begin(), active.end(), 1));
}

SimpleGraph collapse(const Triangulation& g) {
    SimpleGraph s;
    s.adj.resize(g.label_limit());
    s.active.assign(g.label_limit(), 0);
    for (int v : g.active_vertices()) {
        s.active[v] = 1;
        s.adj[v] = g.neighbors(v);
    }
    return s;
}

namespace {

struct Dsatur {
    const SimpleGraph& g;
    std::vector<int> verts;
    std::vector<int> color;                    // 0 = unset
    std::vector<std::array<int, 5>> nbr_count; // per vertex, per color 1..4
    std::vector<int> sat;
    std::vector<uint64_t> prio; // random tie-break, fixed per restart
    uint64_t nodes = 0;
    uint64_t limit;

    struct TrailEntry {
        int vertex;
        int old_color;
    };
    std::vector<TrailEntry> trail;

    Dsatur(const SimpleGraph& graph, uint64_t node_limit, SplitMix64& rng)
        : g(graph), verts(graph.vertices()), color(graph.label_limit(), 0),
          nbr_count(graph.label_limit(), {0, 0, 0, 0, 0}), sat(graph.label_limit(), 0),
          prio(graph.label_limit(), 0), limit(node_limit) {
        for (int v : verts) prio[v] = rng.next();
    }

    void set_color(int v, int c, bool record) {
        if (record) trail.push_back({v, color[v]});
        int old = color[v];
        color[v] = c;
        for (int w : g.adj[v]) {
            if (old) {
                if (--nbr_count[w][old] == 0) --sat[w];
            }
            if (c) {
                if (nbr_count[w][c]++ == 0) ++sat[w];
            }
        }
    }

    int pick() const {
        int best = -1;
        for (int v : verts) {
            if (color[v]) continue;
            if (best < 0 || sat[v] > sat[best] ||
                (sat[v] == sat[best] &&
                 (g.adj[v].size() > g.adj[best].size() ||
                  (g.adj[v].size() == g.adj[best].size() && prio[v] < prio[best]))))
                best = v;
        }
        return best;
    }

    // (a,b)-Kempe component containing w over colored vertices
    std::vector<int> chain(int w, int a, int b) const {
        std::vector<int> comp{w};
        std::set<int> seen{w};
        for (size_t i = 0; i < comp.size(); ++i)
            for (int x : g.adj[comp[i]])
                if ((color[x] == a || color[x] == b) && seen.insert(x).second) comp.push_back(x);
        return comp;
    }

    // Try to free color a at v by swapping the (a,b)-chains of all a-colored
    // neighbors; chains may not touch a b-colored neighbor of v.
    bool kempe_free(int v, int a, int b) {
        std::set<int> b_nbrs;
        for (int w : g.adj[v])
            if (color[w] == b) b_nbrs.insert(w);
        std::set<int> to_swap;
        for (int w : g.adj[v]) {
            if (color[w] != a) continue;
            if (to_swap.count(w)) continue;
            for (int x : chain(w, a, b)) {
                if (b_nbrs.count(x)) return false;
                to_swap.insert(x);
            }
        }
        if (to_swap.empty()) return false;
        for (int x : to_swap) set_color(x, color[x] == a ? b : a, /*record=*/true);
        return true;
    }

    bool solve() {
        struct Frame {
            int vertex;
            int next_choice;        // index into color order
            std::array<int, 4> ord; // colors to try
            size_t trail_mark;
        };
        std::vector<Frame> stack;
        const int total = static_cast<int>(verts.size());

        auto push_vertex = [&]() -> bool {
            if (static_cast<int>(stack.size()) == total) return false;
            int v = pick();
            Frame f;
            f.vertex = v;
            f.next_choice = 0;
            f.ord = {1, 2, 3, 4};
            // least-constraining first, stable beyond that
            std::stable_sort(f.ord.begin(), f.ord.end(),
                             [&](int x, int y) { return nbr_count[v][x] < nbr_count[v][y]; });
            f.trail_mark = trail.size();
            stack.push_back(f);
            return true;
        };

        if (!push_vertex()) return true;
        while (true) {
            Frame& f = stack.back();
            // undo anything from a previously failed choice of this frame
            while (trail.size() > f.trail_mark) {
                auto e = trail.back();
                trail.pop_back();
                set_color(e.vertex, e.old_color, /*record=*/false);
            }
            int chosen = 0;
            while (f.next_choice < 4) {
                int c = f.ord[f.next_choice++];
                if (nbr_count[f.vertex][c] == 0) {
                    chosen = c;
                    break;
                }
            }
            if (!chosen && f.next_choice >= 4 && sat[f.vertex] == 4 && f.trail_mark == trail.size()) {
                // dead end: attempt Kempe repairs once per frame visit
                for (int a = 1; a <= 4 && !chosen; ++a)
                    for (int b = 1; b <= 4 && !chosen; ++b) {
                        if (a == b) continue;
                        if (kempe_free(f.vertex, a, b) && nbr_count[f.vertex][a] == 0) chosen = a;
                    }
            }
            if (!chosen) {
                stack.pop_back();
                if (stack.empty()) return false;
                continue;
            }
            if (++nodes > limit) return false;
            set_color(f.vertex, chosen, /*record=*/true);
            if (static_cast<int>(stack.size()) == total) return true;
            push_vertex();
        }
    }
};

} // namespace

Coloring four_color(const SimpleGraph& g, const FourColorOptions& opt) {
    const uint64_t limit =
        static_cast<uint64_t>(opt.nodes_per_vertex) * std::max(1, g.vertex_count());
    uint64_t total_nodes = 0;
    for (int r = 0; r < opt.restarts; ++r) {
        SplitMix64 rng(opt.seed + 0x9e37ULL * static_cast<uint64_t>(r));
        Dsatur solver(g, limit, rng);
        bool ok = solver.solve();
        total_nodes += solver.nodes;
        if (ok) {
            Coloring out;
            out.color = solver.color;
            out.nodes = total_nodes;
            out.restarts_used = r + 1;
            out.seed_used = opt.seed + 0x9e37ULL * static_cast<uint64_t>(r);
            for (int v : g.vertices())
                for (int w : g.adj[v])
                    if (out.color[v] == out.color[w])
                        fail(Errc::ValidationFailed, "four_color produced an improper coloring");
            return out;
        }
    }
    fail(Errc::BudgetExhausted, "coloring budget exhausted after " +
                                    std::to_string(opt.restarts) + " restarts");
}

std::vector<int> select_I(const Triangulation& g) {
    std::vector<int> I;
    std::vector<char> blocked(g.label_limit(), 0);
    for (int v : g.active_vertices()) {
        if (blocked[v] || g.degree(v) != 4) continue;
        bool near3 = false;
        for (int w : g.neighbors(v))
            if (g.degree(w) == 3) near3 = true;
        if (near3) continue;
        I.push_back(v);
        for (int w : g.neighbors(v)) blocked[w] = 1;
    }
    return I;
}

GPrime build_Gprime(const Triangulation& g, const std::vector<int>& I) {
    std::vector<char> in_i(g.label_limit(), 0);
    for (int u : I) in_i[u] = 1;

    GPrime out;
    out.graph.adj.resize(g.label_limit());
    out.graph.active.assign(g.label_limit(), 0);
    for (int v : g.active_vertices()) {
        if (in_i[v]) continue;
        out.graph.active[v] = 1;
        for (int w : g.neighbors(v))
            if (!in_i[w]) out.graph.adj[v].push_back(w);
    }

    for (int u : I) {
        auto cyc = g.rotation(u);
        if (cyc.size() != 4) fail(Errc::ValidationFailed, "I-vertex is not a 4-vertex");
        SpecialCycle sc;
        sc.center = u;
        std::copy(cyc.begin(), cyc.end(), sc.cycle.begin());
        auto heavy = [&](int a, int b) { return g.degree(a) >= 6 && g.degree(b) >= 6; };
        std::pair<int, int> d02{std::min(cyc[0], cyc[2]), std::max(cyc[0], cyc[2])};
        std::pair<int, int> d13{std::min(cyc[1], cyc[3]), std::max(cyc[1], cyc[3])};
        bool h02 = heavy(d02.first, d02.second), h13 = heavy(d13.first, d13.second);
        if (!h02 && !h13)
            fail(Errc::NoHeavyDiagonal,
                 "hole around " + std::to_string(u) + " has no 6+/6+ diagonal");
        if (h02 && h13)
            sc.diagonal = std::min(d02, d13);
        else
            sc.diagonal = h02 ? d02 : d13;
        auto [a, b] = sc.diagonal;
        out.graph.adj[a].push_back(b);
        out.graph.adj[b].push_back(a);
        int id = static_cast<int>(out.index.cycles.size());
        out.index.cycles.push_back(sc);
        for (int w : cyc) out.index.by_vertex[w].push_back(id);
    }
    for (int v = 0; v < out.graph.label_limit(); ++v) {
        auto& a = out.graph.adj[v];
        std::sort(a.begin(), a.end());
        a.erase(std::unique(a.begin(), a.end()), a.end());
    }
    return out;
}

namespace {

bool cycle_3colored(const Coloring& phi, const SpecialCycle& sc) {
    std::set<int> cols;
    for (int v : sc.cycle) cols.insert(phi.color[v]);
    return cols.size() == 3;
}

} // namespace

int optimize_special_cycles(const Triangulation& g, const GPrime& gp, Coloring& phi) {
    const auto& idx = gp.index;
    int moves = 0;
    bool progressed = true;
    while (progressed) {
        progressed = false;
        for (const auto& sc : idx.cycles) {
            if (cycle_3colored(phi, sc)) continue; // already 3-colored
            for (int pos = 0; pos < 4; ++pos) {
                int v = sc.cycle[pos];
                if (g.degree(v) > 5) continue;
                int c = phi.color[sc.cycle[(pos + 2) % 4]]; // the only candidate
                if (phi.color[v] == c) continue;
                bool seen = false;
                for (int w : gp.graph.adj[v])
                    if (phi.color[w] == c) seen = true;
                if (seen) continue;
                bool on_3colored = false;
                auto it = idx.by_vertex.find(v);
                if (it != idx.by_vertex.end())
                    for (int id : it->second)
                        if (cycle_3colored(phi, idx.cycles[id])) on_3colored = true;
                if (on_3colored) continue;
                phi.color[v] = c;
                ++moves;
                progressed = true;
                break;
            }
        }
    }
    return moves;
}

std::vector<int> closed_palette(const Triangulation& g, const PartialColoring& psi, int v) {
    std::set<int> cols;
    if (psi.color[v]) cols.insert(psi.color[v]);
    for (int w : g.neighbors(v))
        if (psi.color[w]) cols.insert(psi.color[w]);
    return {cols.begin(), cols.end()};
}

PartialColoring build_psi(const Triangulation& g, const std::vector<int>& I, const Coloring& phistar,
                          const SpecialCycleIndex& index) {
    (void)index;
    PartialColoring psi;
    psi.color.assign(g.label_limit(), 0);
    std::vector<char> in_i(g.label_limit(), 0);
    for (int u : I) in_i[u] = 1;
    for (int v : g.active_vertices())
        if (!in_i[v]) psi.color[v] = phistar.color[v];
    for (int u : I) {
        std::set<int> around;
        for (int w : g.neighbors(u)) around.insert(psi.color[w]);
        if (around.size() == 3) {
            for (int c = 1; c <= 4; ++c)
                if (!around.count(c)) psi.color[u] = c;
        } // else uncolored
    }
    for (int v : g.active_vertices()) {
        if (psi.color[v])
            psi.classes[psi.color[v] - 1].push_back(v);
        else
            psi.uncolored.push_back(v);
    }

    // the three guarantees, asserted before returning
    for (int v : g.active_vertices()) {
        if (psi.color[v]) {
            for (int w : g.neighbors(v))
                if (psi.color[w] == psi.color[v])
                    fail(Errc::PsiInvariantViolation, "improper at vertex " + std::to_string(v));
        } else if (g.degree(v) != 4) {
            fail(Errc::PsiInvariantViolation, "uncolored vertex " + std::to_string(v) +
                                                  " has degree " + std::to_string(g.degree(v)));
        }
        auto pal = closed_palette(g, psi, v);
        if (pal.size() < 3)
            fail(Errc::PsiInvariantViolation, "vertex " + std::to_string(v) + " sees under 3 colors");
        if (g.degree(v) <= 5 && pal.size() != 4)
            fail(Errc::PsiInvariantViolation, "5--vertex " + std::to_string(v) + " is not happy");
    }
    return psi;
}

} // namespace tridom
