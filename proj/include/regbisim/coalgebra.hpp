// Coalgebras, homomorphisms and the four bisimulation notions.
//
// Every check is written against the RegularCategory interface. The witness
// relation for a regular AM-bisimulation r : X -> Y is the pullback of
//
//     <F pi1, F pi2> . F m_r : FR -> FX x FY
//     (alpha x beta) . m_r   :  R -> FX x FY
//
// (max_witness). On the element backends F(R) is usually too large to
// enumerate, so the checks use witness_core instead: per related pair, a
// canonical nonempty part of the fibre whenever the fibre is nonempty. It is
// a subrelation of max_witness with the same image in R.

#ifndef REGBISIM_COALGEBRA_HPP
#define REGBISIM_COALGEBRA_HPP

#include <optional>
#include <string>
#include <vector>

#include "regbisim/backend_relations.hpp"
#include "regbisim/category.hpp"
#include "regbisim/relation.hpp"

namespace regbisim {

template <RegularCategory C>
class Coalgebra {
public:
    using Object = typename C::Object;
    using Morphism = typename C::Morphism;
    using Functor = typename C::Functor;

    Coalgebra(const C& cat, Functor functor, Morphism structure)
        : functor_(std::move(functor)), structure_(std::move(structure)) {
        if (!(structure_.target() == cat.apply(functor_, structure_.source())))
            throw Error(ErrorCode::endpoint_mismatch, "coalgebra structure does not land in F(carrier)");
    }

    const Functor& functor() const noexcept { return functor_; }
    const Object& carrier() const noexcept { return structure_.source(); }
    const Morphism& structure() const noexcept { return structure_; }

private:
    Functor functor_;
    Morphism structure_;
};

enum class CheckKind { am, regular, hj, behavioural, toposal, simulation, toposal_simulation };

inline const char* to_string(CheckKind k) noexcept {
    switch (k) {
        case CheckKind::am: return "am";
        case CheckKind::regular: return "regular";
        case CheckKind::hj: return "hj";
        case CheckKind::behavioural: return "behavioural";
        case CheckKind::toposal: return "toposal";
        case CheckKind::simulation: return "simulation";
        case CheckKind::toposal_simulation: return "toposal-simulation";
    }
    return "?";
}

/// The cospan of homomorphisms (f, g) into (Z, gamma) and the relation it
/// induces by pullback.
template <RegularCategory C>
struct BehaviouralClosure {
    Relation<C> relation;
    Coalgebra<C> quotient;  // (Z, gamma)
    typename C::Morphism f;  // X -> Z
    typename C::Morphism g;  // Y -> Z
};

template <RegularCategory C>
struct WitnessReport {
    CheckKind kind = CheckKind::regular;
    bool verdict = false;
    std::optional<typename C::Morphism> witness_map;   // am: R -> FR, hj: R -> image of FR
    std::optional<Relation<C>> witness_relation;       // regular: W >-> FR x R
    std::optional<BehaviouralClosure<C>> closure;      // behavioural
    std::vector<std::string> failing_pairs;
    std::vector<std::string> notes;
};

template <RegularCategory C>
void require_same_functor(const Coalgebra<C>& a, const Coalgebra<C>& b) {
    if (!(a.functor() == b.functor()))
        throw Error(ErrorCode::functor_mismatch,
                    "coalgebras for different functors: " + functor_name(a.functor()) + " vs " + functor_name(b.functor()));
}

template <RegularCategory C>
void require_between(const Relation<C>& r, const Coalgebra<C>& a, const Coalgebra<C>& b) {
    require_same_functor(a, b);
    if (!(r.dom() == a.carrier()) || !(r.cod() == b.carrier()))
        throw Error(ErrorCode::endpoint_mismatch, "relation is not between the coalgebras' carriers");
}

/// <F pi1, F pi2> . F m_r : FR -> FX x FY
template <RegularCategory C>
typename C::Morphism lifted_pairing(const C& cat, const Relation<C>& r, const typename C::Functor& f) {
    return cat.pair(cat.apply(f, r.left()), cat.apply(f, r.right()));
}

/// (alpha x beta) . m_r : R -> FX x FY
template <RegularCategory C>
typename C::Morphism structure_pairing(const C& cat, const Relation<C>& r, const Coalgebra<C>& a,
                                       const Coalgebra<C>& b) {
    return cat.pair(cat.compose(a.structure(), r.left()), cat.compose(b.structure(), r.right()));
}

template <RegularCategory C>
bool is_coalgebra_hom(const C& cat, const typename C::Morphism& f, const Coalgebra<C>& a, const Coalgebra<C>& b) {
    require_same_functor(a, b);
    if (!(f.source() == a.carrier()) || !(f.target() == b.carrier()))
        throw Error(ErrorCode::endpoint_mismatch, "is_coalgebra_hom: map is not between the carriers");
    return cat.compose(cat.apply(a.functor(), f), a.structure()) == cat.compose(b.structure(), f);
}

/// The largest witness relation W >-> FR x R (materialises FR).
template <RegularCategory C>
Relation<C> max_witness(const C& cat, const Relation<C>& r, const Coalgebra<C>& a, const Coalgebra<C>& b) {
    require_between(r, a, b);
    auto pb = cat.pullback(lifted_pairing(cat, r, a.functor()), structure_pairing(cat, r, a, b));
    return Relation<C>::image_of(cat, pb.left, pb.right);
}

/// Backends without a cheaper presentation use the full witness.
template <RegularCategory C>
Relation<C> witness_core(const C& cat, const Relation<C>& r, const Coalgebra<C>& a, const Coalgebra<C>& b) {
    return max_witness(cat, r, a, b);
}

Relation<ElemCategory> witness_core(const ElemCategory& cat, const Relation<ElemCategory>& r,
                                    const Coalgebra<ElemCategory>& a, const Coalgebra<ElemCategory>& b);

/// Per related pair (x, y), the canonical lifts t in FR with F pi1 (t) = alpha(x)
/// and F pi2 (t) = beta(y), or F pi2 (t) <= beta(y) when an order is given.
Relation<ElemCategory> lifted_witnesses(const ElemCategory& cat, const Relation<ElemCategory>& r,
                                        const Coalgebra<ElemCategory>& a, const Coalgebra<ElemCategory>& b,
                                        const ElementOrder* order);

template <RegularCategory C>
WitnessReport<C> is_regular_am_bisimulation(const C& cat, const Relation<C>& r, const Coalgebra<C>& a,
                                            const Coalgebra<C>& b) {
    WitnessReport<C> rep;
    rep.kind = CheckKind::regular;
    auto w = witness_core(cat, r, a, b);
    rep.verdict = cat.is_regular_epi(w.right());
    if (!rep.verdict) rep.failing_pairs = uncovered(cat, w.right());
    rep.witness_relation = std::move(w);
    return rep;
}

/// A morphism witness R -> FR, when one exists in the backend.
template <RegularCategory C>
std::optional<typename C::Morphism> am_witness(const C& cat, const Relation<C>& r, const Coalgebra<C>& a,
                                               const Coalgebra<C>& b) {
    auto w = witness_core(cat, r, a, b);
    auto section = cat.solve_factorization(cat.identity(r.apex()), w.right());
    if (!section) return std::nullopt;
    return cat.compose(w.left(), *section);
}

template <RegularCategory C>
WitnessReport<C> is_am_bisimulation(const C& cat, const Relation<C>& r, const Coalgebra<C>& a,
                                    const Coalgebra<C>& b) {
    WitnessReport<C> rep;
    rep.kind = CheckKind::am;
    auto w = witness_core(cat, r, a, b);
    if (!cat.is_regular_epi(w.right())) {
        rep.failing_pairs = uncovered(cat, w.right());
        return rep;
    }
    auto section = cat.solve_factorization(cat.identity(r.apex()), w.right());
    if (!section) {
        rep.notes.push_back("every related pair has witnesses, but no structure-preserving choice of them exists");
        return rep;
    }
    rep.verdict = true;
    rep.witness_map = cat.compose(w.left(), *section);
    return rep;
}

template <RegularCategory C>
WitnessReport<C> is_hj_bisimulation(const C& cat, const Relation<C>& r, const Coalgebra<C>& a,
                                    const Coalgebra<C>& b) {
    require_between(r, a, b);
    WitnessReport<C> rep;
    rep.kind = CheckKind::hj;
    auto lifted = cat.factorize(lifted_pairing(cat, r, a.functor()));
    auto h = structure_pairing(cat, r, a, b);
    auto w = cat.solve_factorization(h, lifted.mono);
    rep.verdict = w.has_value();
    if (w)
        rep.witness_map = std::move(*w);
    else
        rep.failing_pairs = unliftable(cat, h, lifted.mono);
    return rep;
}

/// Pushout of the tabulation span, with the coalgebra structure induced on
/// it when the cocone (F f . alpha, F g . beta) commutes.
template <RegularCategory C>
std::optional<BehaviouralClosure<C>> behavioural_closure(const C& cat, const Relation<C>& r, const Coalgebra<C>& a,
                                                         const Coalgebra<C>& b) {
    require_between(r, a, b);
    auto po = cat.pushout(r.left(), r.right());
    auto d1 = cat.compose(cat.apply(a.functor(), po.left), a.structure());
    auto d2 = cat.compose(cat.apply(a.functor(), po.right), b.structure());
    if (!(cat.compose(d1, r.left()) == cat.compose(d2, r.right()))) return std::nullopt;
    auto gamma = cat.mediate_pushout(po, d1, d2);
    auto pb = cat.pullback(po.left, po.right);
    return BehaviouralClosure<C>{Relation<C>::image_of(cat, pb.left, pb.right), Coalgebra<C>(cat, a.functor(), gamma),
                                 po.left, po.right};
}

template <RegularCategory C>
WitnessReport<C> is_behavioural_equivalence(const C& cat, const Relation<C>& r, const Coalgebra<C>& a,
                                            const Coalgebra<C>& b) {
    WitnessReport<C> rep;
    rep.kind = CheckKind::behavioural;
    auto cl = behavioural_closure(cat, r, a, b);
    if (!cl) {
        rep.notes.push_back("no coalgebra structure is induced on the pushout of the relation's legs");
        return rep;
    }
    rep.verdict = cl->relation == r;
    if (!rep.verdict) rep.notes.push_back("the pullback of the induced cospan is strictly larger than the relation");
    rep.closure = std::move(*cl);
    return rep;
}

/// The regular check applied to r1 ; r2.
template <RegularCategory C>
WitnessReport<C> compose_bisimulations(const C& cat, const Relation<C>& r1, const Relation<C>& r2,
                                       const Coalgebra<C>& a, const Coalgebra<C>& b, const Coalgebra<C>& c) {
    require_between(r1, a, b);
    require_between(r2, b, c);
    auto rep = is_regular_am_bisimulation(cat, rel_compose(cat, r1, r2), a, c);
    if (!covers_pullbacks(a.functor()))
        rep.notes.push_back("warning: functor " + functor_name(a.functor()) +
                            " is not known to cover pullbacks; closure under composition is not guaranteed");
    return rep;
}

/// Largest regular AM-bisimulation contained in start: repeatedly drop the
/// pairs that have no witness with respect to the current relation.
template <RegularCategory C>
Relation<C> bisimilarity_within(const C& cat, const Coalgebra<C>& a, const Coalgebra<C>& b, Relation<C> start) {
    require_between(start, a, b);
    auto cur = std::move(start);
    while (true) {
        auto w = witness_core(cat, cur, a, b);
        auto next = Relation<C>::image_of(cat, cat.compose(cur.left(), w.right()), cat.compose(cur.right(), w.right()));
        if (next == cur) return cur;
        cur = std::move(next);
    }
}

/// Largest regular AM-bisimulation.
template <RegularCategory C>
Relation<C> bisimilarity(const C& cat, const Coalgebra<C>& a, const Coalgebra<C>& b) {
    require_same_functor(a, b);
    return bisimilarity_within(cat, a, b, rel_full(cat, a.carrier(), b.carrier()));
}

/// Is F(X xZ Y) -> FX xFZ FY a regular epi for the cospan (f, g)?
template <RegularCategory C>
bool check_covers_pullbacks_instance(const C& cat, const typename C::Functor& f, const typename C::Morphism& u,
                                     const typename C::Morphism& v) {
    auto pb = cat.pullback(u, v);
    auto fpb = cat.pullback(cat.apply(f, u), cat.apply(f, v));
    auto m = cat.mediate_pullback(fpb, cat.apply(f, pb.left), cat.apply(f, pb.right));
    return cat.is_regular_epi(m);
}

// --- witness verification ---------------------------------------------------

template <RegularCategory C>
bool verify_am_witness(const C& cat, const Relation<C>& r, const Coalgebra<C>& a, const Coalgebra<C>& b,
                       const typename C::Morphism& w) {
    require_between(r, a, b);
    const auto& f = a.functor();
    if (!(w.source() == r.apex()) || !(w.target() == cat.apply(f, r.apex()))) return false;
    return cat.compose(cat.apply(f, r.left()), w) == cat.compose(a.structure(), r.left()) &&
           cat.compose(cat.apply(f, r.right()), w) == cat.compose(b.structure(), r.right());
}

/// w : W >-> FR x R with pi2 . w a regular epi and both triangles commuting.
template <RegularCategory C>
bool verify_regular_witness(const C& cat, const Relation<C>& r, const Coalgebra<C>& a, const Coalgebra<C>& b,
                            const Relation<C>& w) {
    require_between(r, a, b);
    const auto& f = a.functor();
    if (!(w.cod() == r.apex()) || !(w.dom() == cat.apply(f, r.apex()))) return false;
    if (!cat.is_regular_epi(w.right())) return false;
    return cat.compose(cat.apply(f, r.left()), w.left()) == cat.compose(a.structure(), cat.compose(r.left(), w.right())) &&
           cat.compose(cat.apply(f, r.right()), w.left()) ==
               cat.compose(b.structure(), cat.compose(r.right(), w.right()));
}

template <RegularCategory C>
bool verify_hj_witness(const C& cat, const Relation<C>& r, const Coalgebra<C>& a, const Coalgebra<C>& b,
                       const typename C::Morphism& w) {
    require_between(r, a, b);
    auto lifted = cat.factorize(lifted_pairing(cat, r, a.functor()));
    if (!(w.source() == r.apex()) || !(w.target() == lifted.mono.source())) return false;
    return cat.compose(lifted.mono, w) == structure_pairing(cat, r, a, b);
}

template <RegularCategory C>
bool verify_behavioural(const C& cat, const Relation<C>& r, const Coalgebra<C>& a, const Coalgebra<C>& b,
                        const BehaviouralClosure<C>& cl) {
    require_between(r, a, b);
    if (!is_coalgebra_hom(cat, cl.f, a, cl.quotient) || !is_coalgebra_hom(cat, cl.g, b, cl.quotient)) return false;
    auto pb = cat.pullback(cl.f, cl.g);
    return Relation<C>::image_of(cat, pb.left, pb.right) == r;
}

}  // namespace regbisim

#endif
