// Relations in a regular category: subobjects of X x Y, kept as the
// canonical mono the backend's factorisation produces, so equal relations
// have equal representatives.

#ifndef REGBISIM_RELATION_HPP
#define REGBISIM_RELATION_HPP

#include <optional>
#include <utility>

#include "regbisim/category.hpp"
#include "regbisim/errors.hpp"

namespace regbisim {

template <RegularCategory C>
class Relation {
public:
    using Object = typename C::Object;
    using Morphism = typename C::Morphism;

    /// The relation represented by the jointly monic part of the span (f, g).
    static Relation image_of(const C& cat, const Morphism& f, const Morphism& g) {
        auto fac = cat.factorize(cat.pair(f, g));
        return Relation(cat, f.target(), g.target(), std::move(fac.mono));
    }

    /// From any mono m : R >-> X x Y.
    static Relation from_mono(const C& cat, const Object& dom, const Object& cod, const Morphism& m) {
        auto prod = cat.product(dom, cod);
        if (!(m.target() == prod.object))
            throw Error(ErrorCode::endpoint_mismatch, "relation mono does not land in dom x cod");
        if (!cat.is_mono(m)) throw Error(ErrorCode::invalid_argument, "relation is not represented by a mono");
        return image_of(cat, cat.compose(prod.pi1, m), cat.compose(prod.pi2, m));
    }

    const Object& dom() const noexcept { return dom_; }
    const Object& cod() const noexcept { return cod_; }
    /// Canonical representative R >-> dom x cod.
    const Morphism& mono() const noexcept { return mono_; }
    const Object& apex() const noexcept { return mono_.source(); }
    /// pi1 . m and pi2 . m
    const Morphism& left() const noexcept { return left_; }
    const Morphism& right() const noexcept { return right_; }

    friend bool operator==(const Relation& a, const Relation& b) {
        return a.dom_ == b.dom_ && a.cod_ == b.cod_ && a.mono_ == b.mono_;
    }

private:
    Relation(const C& cat, Object dom, Object cod, Morphism mono)
        : dom_(std::move(dom)),
          cod_(std::move(cod)),
          mono_(std::move(mono)),
          left_(mono_),
          right_(mono_) {
        auto prod = cat.product(dom_, cod_);
        left_ = cat.compose(prod.pi1, mono_);
        right_ = cat.compose(prod.pi2, mono_);
    }

    Object dom_;
    Object cod_;
    Morphism mono_;
    Morphism left_;
    Morphism right_;
};

template <RegularCategory C>
struct Tabulation {
    typename C::Morphism leg_f;  // Z -> X
    typename C::Morphism leg_g;  // Z -> Y
};

template <RegularCategory C>
Relation<C> rel_identity(const C& cat, const typename C::Object& x) {
    auto id = cat.identity(x);
    return Relation<C>::image_of(cat, id, id);
}

template <RegularCategory C>
Relation<C> rel_full(const C& cat, const typename C::Object& x, const typename C::Object& y) {
    auto p = cat.product(x, y);
    return Relation<C>::image_of(cat, p.pi1, p.pi2);
}

template <RegularCategory C>
Relation<C> rel_empty(const C& cat, const typename C::Object& x, const typename C::Object& y) {
    return Relation<C>::image_of(cat, cat.from_initial(x), cat.from_initial(y));
}

/// r ; s (diagrammatic order): r : X -> Y, s : Y -> Z.
template <RegularCategory C>
Relation<C> rel_compose(const C& cat, const Relation<C>& r, const Relation<C>& s) {
    if (!(r.cod() == s.dom())) throw Error(ErrorCode::endpoint_mismatch, "rel_compose: codomain of r is not domain of s");
    auto pb = cat.pullback(r.right(), s.left());
    return Relation<C>::image_of(cat, cat.compose(r.left(), pb.left), cat.compose(s.right(), pb.right));
}

template <RegularCategory C>
Relation<C> rel_dagger(const C& cat, const Relation<C>& r) {
    return Relation<C>::image_of(cat, r.right(), r.left());
}

template <RegularCategory C>
void require_parallel(const Relation<C>& r, const Relation<C>& s, const char* what) {
    if (!(r.dom() == s.dom()) || !(r.cod() == s.cod())) throw Error(ErrorCode::endpoint_mismatch, what);
}

template <RegularCategory C>
Relation<C> rel_meet(const C& cat, const Relation<C>& r, const Relation<C>& s) {
    require_parallel(r, s, "rel_meet: relations have different endpoints");
    auto pb = cat.pullback(r.mono(), s.mono());
    return Relation<C>::image_of(cat, cat.compose(r.left(), pb.left), cat.compose(r.right(), pb.left));
}

template <RegularCategory C>
bool rel_leq(const C& cat, const Relation<C>& r, const Relation<C>& s) {
    require_parallel(r, s, "rel_leq: relations have different endpoints");
    return cat.solve_factorization(r.mono(), s.mono()).has_value();
}

template <RegularCategory C>
Relation<C> graph(const C& cat, const typename C::Morphism& f) {
    return Relation<C>::image_of(cat, cat.identity(f.source()), f);
}

template <RegularCategory C>
Relation<C> cograph(const C& cat, const typename C::Morphism& f) {
    return Relation<C>::image_of(cat, f, cat.identity(f.source()));
}

/// f with r = graph(f), when r is total and single-valued.
template <RegularCategory C>
std::optional<typename C::Morphism> as_map(const C& cat, const Relation<C>& r) {
    if (!cat.is_mono(r.left()) || !cat.is_regular_epi(r.left())) return std::nullopt;
    auto inverse = cat.solve_factorization(cat.identity(r.dom()), r.left());
    if (!inverse) return std::nullopt;
    return cat.compose(r.right(), *inverse);
}

template <RegularCategory C>
Tabulation<C> tabulate(const C&, const Relation<C>& r) {
    return {r.left(), r.right()};
}

/// graph(g) . graph(f)^dagger
template <RegularCategory C>
Relation<C> recompose(const C& cat, const Tabulation<C>& t) {
    return rel_compose(cat, rel_dagger(cat, graph(cat, t.leg_f)), graph(cat, t.leg_g));
}

/// (r;s) meet t  <=  (r meet (t;s^dagger)) ; s
template <RegularCategory C>
bool check_modular_law(const C& cat, const Relation<C>& r, const Relation<C>& s, const Relation<C>& t) {
    auto lhs = rel_meet(cat, rel_compose(cat, r, s), t);
    auto rhs = rel_compose(cat, rel_meet(cat, r, rel_compose(cat, t, rel_dagger(cat, s))), s);
    return rel_leq(cat, lhs, rhs);
}

}  // namespace regbisim

#endif
