// Lax coalgebra morphisms, AM-simulations and toposal AM-simulations.
//
// Orders are element-level preorders on F-values (ElementOrder), lifted
// pointwise to maps X -> FY. Simulation witnesses use the equality-left
// form: per pair (x, y) the fiber is
//
//     { t in FR : F pi1 (t) = alpha(x),  F pi2 (t) <= beta(y) }.
//
// The order on P(F-values) is the pointwise one: A <=_P B iff every a in A
// lies below some b in B.

#ifndef REGBISIM_SIMULATION_HPP
#define REGBISIM_SIMULATION_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "regbisim/coalgebra.hpp"
#include "regbisim/law_report.hpp"
#include "regbisim/random.hpp"

namespace regbisim {

struct SimWitnessReport {
    CheckKind kind = CheckKind::simulation;
    bool verdict = false;
    std::optional<ElemMorphism> witness_map;        // simulation: R -> FR; toposal: R -> P(FR)
    std::optional<ElemRelation> witness_relation;   // all fibers, W >-> FR x R
    std::vector<std::string> failing_pairs;
    std::vector<std::string> notes;
};

/// Named orders: "discrete", "subset", "cardinality".
ElementOrder order_by_name(const std::string& name);

/// The pointwise order on sets of F-values induced by ord.
ElementOrder pow_order(const ElementOrder& ord);

/// f(x) <= g(x) for every x.
bool leq_hom(const ElemMorphism& f, const ElemMorphism& g, const ElementOrder& ord);
/// F f . alpha <= beta . f
bool is_lax_coalgebra_hom(const ElemCategory& cat, const ElemMorphism& f, const Coalgebra<ElemCategory>& a,
                          const Coalgebra<ElemCategory>& b, const ElementOrder& ord);
/// f(x) <=_P g(x) for every x; f, g : X -> P(FY).
bool leq_pow(const ElemMorphism& f, const ElemMorphism& g, const ElementOrder& ord);

/// Canonical simulation fibers as a relation W >-> FR x R.
ElemRelation simulation_witnesses(const ElemCategory& cat, const ElemRelation& r, const Coalgebra<ElemCategory>& a,
                                  const Coalgebra<ElemCategory>& b, const ElementOrder& ord);

SimWitnessReport is_am_simulation(const ElemCategory& cat, const ElemRelation& r, const Coalgebra<ElemCategory>& a,
                                  const Coalgebra<ElemCategory>& b, const ElementOrder& ord);
/// alpha . pi1 <= F pi1 . W  and  F pi2 . W <= beta . pi2.
bool verify_simulation_witness(const ElemCategory& cat, const ElemRelation& r, const Coalgebra<ElemCategory>& a,
                               const Coalgebra<ElemCategory>& b, const ElementOrder& ord, const ElemMorphism& w);

SimWitnessReport is_toposal_am_simulation(const ElemCategory& cat, const ElemRelation& r,
                                          const Coalgebra<ElemCategory>& a, const Coalgebra<ElemCategory>& b,
                                          const ElementOrder& ord);
/// eta . alpha . pi1 <=_P P(F pi1) . W  and  P(F pi2) . W <=_P eta . beta . pi2.
bool verify_toposal_simulation_witness(const ElemCategory& cat, const ElemRelation& r,
                                       const Coalgebra<ElemCategory>& a, const Coalgebra<ElemCategory>& b,
                                       const ElementOrder& ord, const ElemMorphism& w);

/// Largest simulation from a to b.
ElemRelation similarity(const ElemCategory& cat, const Coalgebra<ElemCategory>& a, const Coalgebra<ElemCategory>& b,
                        const ElementOrder& ord);

/// For every pair of r, compares the existence of a t in FR with
/// alpha(x) <= F pi1 (t), F pi2 (t) <= beta(y) against the equality-left
/// fiber, by enumerating FR.
LawReport equality_left_reduction(const ElemCategory& cat, const ElemRelation& r, const Coalgebra<ElemCategory>& a,
                                  const Coalgebra<ElemCategory>& b, const ElementOrder& ord);

struct GoodOrderOptions {
    std::size_t trials = 200;
    std::size_t max_carrier = 3;
};

/// Preorder laws and the two good-order axioms for ord on F, then the same
/// for the pointwise order on P . F.
std::vector<LawReport> good_order_suite(const ElemFunctor& f, const ElementOrder& ord, Rng& rng,
                                        const GoodOrderOptions& opts = {});

}  // namespace regbisim

#endif
