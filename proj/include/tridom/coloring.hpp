#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <vector>

#include "tridom/triangulation.hpp"

namespace tridom {

/// Adjacency view with parallel edges collapsed; indexed by stable label.
struct SimpleGraph {
    std::vector<std::vector<int>> adj; // sorted unique, empty for inactive labels
    std::vector<char> active;

    int label_limit() const { return static_cast<int>(adj.size()); }
    bool is_active(int v) const { return v >= 0 && v < label_limit() && active[v]; }
    bool adjacent(int u, int v) const;
    std::vector<int> vertices() const;
    int vertex_count() const;
};

SimpleGraph collapse(const Triangulation& g);

/// Total proper coloring, color[v] in 1..4 (0 on inactive labels).
struct Coloring {
    std::vector<int> color;
    uint64_t nodes = 0;
    int restarts_used = 0;
    uint64_t seed_used = 0;
};

struct FourColorOptions {
    uint64_t seed = 0;
    int restarts = 32;
    long nodes_per_vertex = 200; // backtrack-node budget per restart
};

/// DSATUR-ordered backtracking with Kempe-chain repair on dead ends and
/// seeded random restarts. Throws BudgetExhausted when every restart hits its
/// node limit (operational, never a disproof).
Coloring four_color(const SimpleGraph& g, const FourColorOptions& opt = {});

/// Maximal independent set (greedy, ascending label) of the 4-vertices with
/// no degree-3 neighbor.
std::vector<int> select_I(const Triangulation& g);

struct SpecialCycle {
    int center;                  // u in I
    std::array<int, 4> cycle;    // B_u in rotation order
    std::pair<int, int> diagonal; // the added 6+/6+ chord
};

struct SpecialCycleIndex {
    std::vector<SpecialCycle> cycles;
    std::map<int, std::vector<int>> by_vertex; // label -> indices into cycles
};

struct GPrime {
    SimpleGraph graph; // G - I plus one heavy diagonal per hole
    SpecialCycleIndex index;
};

/// Throws NoHeavyDiagonal when a hole has no diagonally opposite 6+ pair
/// (the caller failed to reduce a forbidden face first).
GPrime build_Gprime(const Triangulation& g, const std::vector<int>& I);

/// Local-search fixpoint of the one recoloring move the exchange argument
/// uses; returns the number of accepted moves. phi is updated in place and
/// stays proper on G'.
int optimize_special_cycles(const Triangulation& g, const GPrime& gp, Coloring& phi);

struct PartialColoring {
    std::vector<int> color; // 1..4, 0 = uncolored (or inactive label)
    std::vector<int> uncolored;
    std::array<std::vector<int>, 4> classes;

    bool is_colored(int v) const { return color[v] != 0; }
};

/// Extend phi* to the partial coloring psi of G and assert all three of its
/// guarantees; throws PsiInvariantViolation otherwise.
PartialColoring build_psi(const Triangulation& g, const std::vector<int>& I, const Coloring& phistar,
                          const SpecialCycleIndex& index);

/// Colors present in the closed neighborhood of v under psi.
std::vector<int> closed_palette(const Triangulation& g, const PartialColoring& psi, int v);

} // namespace tridom
