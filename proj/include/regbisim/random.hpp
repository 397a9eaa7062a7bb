// Seeded random generators for objects, morphisms, relations and coalgebras
// on every backend. Used by the law suites, the acceptance runner and tests.

#ifndef REGBISIM_RANDOM_HPP
#define REGBISIM_RANDOM_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "regbisim/backend_relations.hpp"
#include "regbisim/coalgebra.hpp"

namespace regbisim {

using Rng = std::mt19937_64;

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi);  // inclusive
bool coin(Rng& rng, double p);

/// Finite set {prefix0, ..., prefix(n-1)}; over a nontrivial group, a
/// disjoint union of random coset spaces G/H with about n elements in total
/// (at least one orbit when n > 0).
ElemObject random_object(const ElemCategory& cat, Rng& rng, std::size_t n, const std::string& prefix = "x");

/// Disjoint union of the coset spaces G/H for the given subgroups
/// (as sorted element lists); elements are named prefix<orbit>_<coset>.
ElemObject orbit_sum(const ElemCategory& cat, const std::vector<std::vector<std::size_t>>& subgroups,
                     const std::string& prefix = "x");
/// One object per multiset of subgroups with at most max_size elements in total
/// (every isomorphism type, possibly with repeats).
std::vector<ElemObject> small_objects(const ElemCategory& cat, std::size_t max_size, const std::string& prefix = "x");
/// Every equivariant map X -> Y (brute force).
std::vector<ElemMorphism> all_morphisms(const ElemCategory& cat, const ElemObject& x, const ElemObject& y);

/// Equivariant map; nullopt when no equivariant map exists for some orbit
/// (only possible over a nontrivial group).
std::optional<ElemMorphism> random_morphism(const ElemCategory& cat, Rng& rng, const ElemObject& x,
                                            const ElemObject& y);
/// Union of random orbits of X x Y.
ElemRelation random_relation(const ElemCategory& cat, Rng& rng, const ElemObject& x, const ElemObject& y,
                             double density = 0.4);
/// Random equivariant structure map X -> FX (enumerates FX).
std::optional<Coalgebra<ElemCategory>> random_coalgebra(const ElemCategory& cat, Rng& rng, const ElemFunctor& f,
                                                        const ElemObject& x);

struct Lts {
    std::vector<std::string> states;
    std::vector<std::string> labels;
    std::vector<std::tuple<std::string, std::string, std::string>> transitions;  // (s, a, t)
};
Lts random_lts(Rng& rng, std::size_t states, std::size_t labels, double density, const std::string& prefix = "s");
/// LTS as a pow_labels coalgebra over finite sets.
Coalgebra<ElemCategory> lts_coalgebra(const ElemCategory& cat, const Lts& lts);

ZpMatrix random_matrix(Rng& rng, std::uint32_t p, std::size_t rows, std::size_t cols);
VectMorphism random_morphism(const VectCategory& cat, Rng& rng, const VectObject& x, const VectObject& y);
VectRelation random_relation(const VectCategory& cat, Rng& rng, const VectObject& x, const VectObject& y);

struct WeightedAutomaton {
    std::uint32_t p = 2;
    std::size_t dim = 0;
    std::vector<std::string> alphabet;
    std::vector<std::uint32_t> output;  // length dim
    std::vector<ZpMatrix> matrices;     // one dim x dim matrix per letter, acting on row vectors
};
WeightedAutomaton random_automaton(Rng& rng, std::uint32_t p, std::size_t dim, std::size_t letters);
/// alpha = [output ; M_a^T ; ...] as a linear(A) coalgebra (column vectors).
Coalgebra<VectCategory> automaton_coalgebra(const VectCategory& cat, const WeightedAutomaton& w);

}  // namespace regbisim

#endif
