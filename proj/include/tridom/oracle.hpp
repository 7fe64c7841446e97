#pragma once

#include <cstdint>
#include <vector>

#include "tridom/coloring.hpp"
#include "tridom/triangulation.hpp"

namespace tridom {

struct OracleResult {
    int value = 0;
    std::vector<int> witness;
    uint64_t nodes_explored = 0;
};

/// Minimum maximal independent set, branch-and-bound over N[v] of the lowest
/// undominated vertex. Throws TooLarge above `max_n` vertices.
OracleResult iota_exact(const SimpleGraph& g, int max_n = 32);
OracleResult iota_exact(const Triangulation& g, int max_n = 32);

/// Minimum dominating set.
OracleResult gamma_exact(const SimpleGraph& g, int max_n = 32);
OracleResult gamma_exact(const Triangulation& g, int max_n = 32);

/// Maximum independent set.
OracleResult alpha_exact(const SimpleGraph& g, int max_n = 40);
OracleResult alpha_exact(const Triangulation& g, int max_n = 40);

/// Every maximal independent set, by full enumeration (cross-check oracle).
std::vector<std::vector<int>> all_maximal_independent_sets(const SimpleGraph& g, int max_n = 16);

struct Obs1Report {
    bool ok = false;
    int max_size = 0;             // largest independent set of 6+-vertices
    std::vector<int> witness;
    int f3 = 0, f6p = 0;          // face census of the deletion graph H
    long euler_lhs = 0, euler_rhs = 0;
    bool double_count_ok = false; // 2|E(H)| >= 3 f3 + 6 f6p
};

/// Exhaustively checks the (n-2)/3 bound for independent sets of 6+-vertices
/// and recomputes the Euler identity on the deletion graph of the witness.
Obs1Report check_obs1(const Triangulation& g, int max_n = 20);

} // namespace tridom
