// Power objects in the topos backends (finite sets and finite G-sets).
//
// P(X) is the lazily enumerated carrier of subsets of X, with the
// direct-image action; the membership relation E_X >-> X x P(X) is
// materialised on request. Kleisli composition, pseudo-inverses and the
// canonical laws delta_{F,X} : F(PX) -> P(FX) are built from the classifier
// xi, which sends a relation X -> Y to Y -> P(X).

#ifndef REGBISIM_POWER_HPP
#define REGBISIM_POWER_HPP

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "regbisim/backend_relations.hpp"
#include "regbisim/coalgebra.hpp"

namespace regbisim {

struct PowerObject {
    ElemObject base;
    ElemObject pow;
    ElemRelation membership;  // X -> P(X)
};

ElemObject pow_of(const ElemCategory& cat, const ElemObject& x);
PowerObject power_object(const ElemCategory& cat, const ElemObject& x);
/// Vect has no power objects.
[[noreturn]] void power_object(const VectCategory& cat, const VectObject& x);

/// r : X -> Y  gives  Y -> P(X), y |-> {x : x r y}.
ElemMorphism xi(const ElemCategory& cat, const ElemRelation& r);
/// Inverse of xi, as the pullback of membership along f : Y -> P(X).
ElemRelation relation_of(const ElemCategory& cat, const ElemMorphism& f, const ElemObject& x);

/// P(f) as the classifier of the image of (f x id) . E_X (enumerates P(X)).
ElemMorphism pow_map(const ElemCategory& cat, const ElemMorphism& f);
/// P(f) as the direct-image rule.
ElemMorphism pow_direct_image(const ElemCategory& cat, const ElemMorphism& f);

/// xi of the diagonal.
ElemMorphism eta(const ElemCategory& cat, const ElemObject& x);
/// Union, as a rule on P(P(X)).
ElemMorphism mu(const ElemCategory& cat, const ElemObject& x);
/// xi of E_X ; E_{P(X)} (enumerates P(P(X))).
ElemMorphism mu_via_relations(const ElemCategory& cat, const ElemObject& x);

/// mu . P(f) . g  for f : Y -> P(X), g : Z -> P(Y).
ElemMorphism kleisli_compose(const ElemCategory& cat, const ElemMorphism& f, const ElemMorphism& g);

/// f-dagger = xi(graph f) : Y -> P(X), the fibres of f.
ElemMorphism pseudo_inverse(const ElemCategory& cat, const ElemMorphism& f);

/// delta_{F,X}, evaluated pointwise: t |-> {s in FX : some u in F(E_X) has
/// F pi1 (u) = s and F pi2 (u) = t}.
ElemMorphism proto_dist(const ElemCategory& cat, const ElemFunctor& f, const ElemObject& x);
/// The same morphism built literally: factorise <F pi1, F pi2> . F E_X and
/// classify the image. Enumerates F(E_X).
ElemMorphism proto_dist_by_image(const ElemCategory& cat, const ElemFunctor& f, const ElemObject& x);

/// X x P(Y) -> P(X x Y), as delta for X x -.
ElemMorphism strength(const ElemCategory& cat, const ElemObject& x, const ElemObject& y);
/// P(X) x Y -> P(X x Y), as delta for - x Y.
ElemMorphism costrength(const ElemCategory& cat, const ElemObject& x, const ElemObject& y);

struct CommutativityResult {
    bool ok = true;
    std::size_t checked = 0;
    std::optional<std::pair<Value, Value>> counterexample;  // (U, V)
};
/// Compares mu . P(st) . cost and mu . P(cost) . st on the given (U, V).
CommutativityResult commutativity_check(const ElemCategory& cat, const ElemObject& x, const ElemObject& y,
                                        std::span<const std::pair<Value, Value>> inputs);
/// All (U, V) in P(X) x P(Y).
CommutativityResult commutativity_check(const ElemCategory& cat, const ElemObject& x, const ElemObject& y);

/// W(x, y) is the set of all witnesses in F(R) for the pair; the verdict
/// agrees with is_regular_am_bisimulation.
WitnessReport<ElemCategory> is_toposal_am_bisimulation(const ElemCategory& cat, const ElemRelation& r,
                                                       const Coalgebra<ElemCategory>& a,
                                                       const Coalgebra<ElemCategory>& b);
/// Checks P(F pi1) . W = eta . alpha . pi1 and the same on the right.
bool verify_toposal_witness(const ElemCategory& cat, const ElemRelation& r, const Coalgebra<ElemCategory>& a,
                            const Coalgebra<ElemCategory>& b, const ElemMorphism& w);

}  // namespace regbisim

#endif
