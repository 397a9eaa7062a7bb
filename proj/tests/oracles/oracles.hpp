// Reference implementations that share no code with the library: plain
// containers of indices, textbook algorithms.

#ifndef REGBISIM_TESTS_ORACLES_HPP
#define REGBISIM_TESTS_ORACLES_HPP

#include <cstddef>
#include <cstdint>
#include <set>
#include <tuple>
#include <utility>
#include <vector>

namespace oracle {

using Pairs = std::set<std::pair<std::size_t, std::size_t>>;

struct Lts {
    std::size_t states = 0;
    std::size_t labels = 0;
    std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> edges;  // (source, label, target)
};

/// Strong bisimilarity between the states of a and b by naive partition
/// refinement on the disjoint union.
Pairs lts_bisimilarity(const Lts& a, const Lts& b);

/// Largest simulation: (p, q) such that q simulates p.
Pairs lts_simulation(const Lts& a, const Lts& b);

/// { (x, z) : exists y. (x, y) in r and (y, z) in s }
Pairs compose(const Pairs& r, const Pairs& s);

using Subset = std::set<int>;
/// { V subset of union(U) : V meets every W in U }
std::set<Subset> pow_delta(const std::set<Subset>& u);

struct Automaton {
    std::uint32_t p = 2;
    std::size_t dim = 0;
    std::vector<std::uint32_t> output;                 // length dim
    std::vector<std::vector<std::uint32_t>> matrices;  // row-major dim x dim, acting on row vectors
};

/// All vectors (x ++ y) in Z_p^(n+m) with x . M_w . o_a = y . N_w . o_b for
/// every word w, found by closing the set of observation functionals under
/// the letters and enumerating all vectors.
std::set<std::vector<std::uint32_t>> linear_bisimilarity(const Automaton& a, const Automaton& b);

/// A subspace of pairs (x ++ y) with equal outputs and closed under every letter.
bool is_linear_bisimulation(const Automaton& a, const Automaton& b, const std::set<std::vector<std::uint32_t>>& rel);

/// Every vector in the row span of the given rows.
std::set<std::vector<std::uint32_t>> span(std::uint32_t p, std::size_t width,
                                          const std::vector<std::vector<std::uint32_t>>& rows);

}  // namespace oracle

#endif
