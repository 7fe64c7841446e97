#include "tridom/oracle.hpp"

#include <algorithm>
#include <functional>

namespace tridom {

namespace {

// compact bitmask view, labels mapped to bit positions
struct BitGraph {
    std::vector<int> labels;          // position -> label
    std::vector<uint64_t> nbr;        // open neighborhoods
    std::vector<uint64_t> closed;     // N[v]
    int n = 0;

    static BitGraph build(const SimpleGraph& g, int max_n, const char* who) {
        BitGraph b;
        b.labels = g.vertices();
        b.n = static_cast<int>(b.labels.size());
        if (b.n > max_n)
            fail(Errc::TooLarge, std::string(who) + " limited to " + std::to_string(max_n) + " vertices");
        std::vector<int> pos(g.label_limit(), -1);
        for (int i = 0; i < b.n; ++i) pos[b.labels[i]] = i;
        b.nbr.assign(b.n, 0);
        b.closed.assign(b.n, 0);
        for (int i = 0; i < b.n; ++i) {
            for (int w : g.adj[b.labels[i]]) b.nbr[i] |= 1ULL << pos[w];
            b.closed[i] = b.nbr[i] | (1ULL << i);
        }
        return b;
    }

    std::vector<int> to_labels(uint64_t mask) const {
        std::vector<int> out;
        for (int i = 0; i < n; ++i)
            if (mask >> i & 1) out.push_back(labels[i]);
        return out;
    }
};

struct IdomSearch {
    const BitGraph& g;
    uint64_t best_mask = 0;
    int best = 0;
    uint64_t nodes = 0;
    bool independent; // false: plain domination

    void rec(uint64_t chosen, uint64_t dominated, int size) {
        ++nodes;
        if (size >= best) return;
        if (dominated == (g.n == 64 ? ~0ULL : (1ULL << g.n) - 1)) {
            best = size;
            best_mask = chosen;
            return;
        }
        int v = -1;
        for (int i = 0; i < g.n; ++i)
            if (!(dominated >> i & 1)) {
                v = i;
                break;
            }
        uint64_t cand = g.closed[v];
        while (cand) {
            int w = __builtin_ctzll(cand);
            cand &= cand - 1;
            if (independent && (g.nbr[w] & chosen)) continue;
            rec(chosen | (1ULL << w), dominated | g.closed[w], size + 1);
        }
    }
};

} // namespace

OracleResult iota_exact(const SimpleGraph& g, int max_n) {
    auto b = BitGraph::build(g, max_n, "iota_exact");
    IdomSearch s{b, 0, b.n + 1, 0, /*independent=*/true};
    s.rec(0, 0, 0);
    return {s.best, b.to_labels(s.best_mask), s.nodes};
}

OracleResult gamma_exact(const SimpleGraph& g, int max_n) {
    auto b = BitGraph::build(g, max_n, "gamma_exact");
    IdomSearch s{b, 0, b.n + 1, 0, /*independent=*/false};
    s.rec(0, 0, 0);
    return {s.best, b.to_labels(s.best_mask), s.nodes};
}

OracleResult alpha_exact(const SimpleGraph& g, int max_n) {
    auto b = BitGraph::build(g, max_n, "alpha_exact");
    uint64_t best_mask = 0;
    int best = -1;
    uint64_t nodes = 0;
    // branch on the lowest free vertex: include or discard
    std::function<void(uint64_t, uint64_t, int)> rec = [&](uint64_t chosen, uint64_t free, int size) {
        ++nodes;
        if (size + __builtin_popcountll(free) <= best) return;
        if (!free) {
            if (size > best) {
                best = size;
                best_mask = chosen;
            }
            return;
        }
        int v = __builtin_ctzll(free);
        rec(chosen | (1ULL << v), free & ~b.closed[v], size + 1);
        rec(chosen, free & ~(1ULL << v), size);
    };
    rec(0, b.n == 64 ? ~0ULL : (1ULL << b.n) - 1, 0);
    return {best, b.to_labels(best_mask), nodes};
}

OracleResult iota_exact(const Triangulation& g, int max_n) { return iota_exact(collapse(g), max_n); }
OracleResult gamma_exact(const Triangulation& g, int max_n) { return gamma_exact(collapse(g), max_n); }
OracleResult alpha_exact(const Triangulation& g, int max_n) { return alpha_exact(collapse(g), max_n); }

std::vector<std::vector<int>> all_maximal_independent_sets(const SimpleGraph& g, int max_n) {
    auto b = BitGraph::build(g, max_n, "all_maximal_independent_sets");
    std::vector<std::vector<int>> out;
    const uint64_t full = b.n == 64 ? ~0ULL : (1ULL << b.n) - 1;
    for (uint64_t s = 0; s <= full; ++s) {
        bool indep = true;
        uint64_t dominated = 0;
        for (int i = 0; i < b.n && indep; ++i)
            if (s >> i & 1) {
                if (b.nbr[i] & s) indep = false;
                dominated |= b.closed[i];
            }
        if (indep && dominated == full) out.push_back(b.to_labels(s));
    }
    return out;
}

Obs1Report check_obs1(const Triangulation& g, int max_n) {
    if (!g.simple()) fail(Errc::ValidationFailed, "check_obs1 expects a simple triangulation");
    if (g.vertex_count() > max_n)
        fail(Errc::TooLarge, "check_obs1 limited to " + std::to_string(max_n) + " vertices");
    g.validate(true);

    std::vector<int> heavy;
    for (int v : g.active_vertices())
        if (g.degree(v) >= 6) heavy.push_back(v);

    // exhaustive max independent subset of the 6+-vertices
    Obs1Report rep;
    std::vector<int> cur;
    std::function<void(size_t)> rec = [&](size_t i) {
        if (static_cast<int>(cur.size()) > rep.max_size) {
            rep.max_size = static_cast<int>(cur.size());
            rep.witness = cur;
        }
        for (size_t j = i; j < heavy.size(); ++j) {
            bool ok = true;
            for (int u : cur)
                if (g.adjacent(u, heavy[j])) ok = false;
            if (!ok) continue;
            cur.push_back(heavy[j]);
            rec(j + 1);
            cur.pop_back();
        }
    };
    rec(0);

    const int n = g.vertex_count();
    rep.ok = 3 * rep.max_size <= n - 2;

    // Euler identity on the deletion graph H of the witness
    Triangulation h = g.remove_vertices(rep.witness);
    long e = h.edge_count(), v = h.vertex_count();
    for (auto& f : h.faces()) {
        if (f.size() == 3)
            ++rep.f3;
        else if (f.size() >= 6)
            ++rep.f6p;
        else
            fail(Errc::ValidationFailed, "deletion graph has a 4- or 5-face");
    }
    rep.euler_lhs = v - 2;
    rep.euler_rhs = e - (rep.f3 + rep.f6p);
    rep.double_count_ok = 2 * e >= 3L * rep.f3 + 6L * rep.f6p;
    if (rep.f6p != static_cast<int>(rep.witness.size()))
        fail(Errc::ValidationFailed, "6+-face count does not match deleted set");
    rep.ok = rep.ok && rep.euler_lhs == rep.euler_rhs && rep.double_count_ok;
    return rep;
}

} // namespace tridom
