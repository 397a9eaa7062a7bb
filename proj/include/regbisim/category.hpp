// The capability interface every concrete regular category backend provides.
//
// A backend is a small value (it may carry context such as a group or a
// prime) whose member functions implement composition, finite limits,
// pushouts and (regular epi, mono)-factorisations. Relations, coalgebras and
// the bisimulation checkers are written once against this concept.

#ifndef REGBISIM_CATEGORY_HPP
#define REGBISIM_CATEGORY_HPP

#include <concepts>
#include <optional>
#include <string>

namespace regbisim {

template <class M>
struct Factorization {
    M epi;   // regular epi onto the image
    M mono;  // image inclusion, in canonical form
};

template <class O, class M>
struct ProductResult {
    O object;
    M pi1;
    M pi2;
};

template <class O, class M>
struct PullbackResult {
    O apex;
    M left;
    M right;
    M f;  // the cospan the square sits over
    M g;
};

template <class O, class M>
struct PushoutResult {
    O apex;
    M left;
    M right;
    M f;  // the span the square sits under
    M g;
};

template <class C>
concept RegularCategory = requires(const C& cat, const typename C::Object& x, const typename C::Morphism& m) {
    typename C::Functor;
    { cat.name() } -> std::convertible_to<std::string>;
    { cat.identity(x) } -> std::same_as<typename C::Morphism>;
    { cat.compose(m, m) } -> std::same_as<typename C::Morphism>;
    { cat.product(x, x) } -> std::same_as<ProductResult<typename C::Object, typename C::Morphism>>;
    { cat.pair(m, m) } -> std::same_as<typename C::Morphism>;
    { cat.pullback(m, m) } -> std::same_as<PullbackResult<typename C::Object, typename C::Morphism>>;
    { cat.pushout(m, m) } -> std::same_as<PushoutResult<typename C::Object, typename C::Morphism>>;
    { cat.factorize(m) } -> std::same_as<Factorization<typename C::Morphism>>;
    { cat.is_mono(m) } -> std::same_as<bool>;
    { cat.is_regular_epi(m) } -> std::same_as<bool>;
    { cat.solve_factorization(m, m) } -> std::same_as<std::optional<typename C::Morphism>>;
    { cat.initial() } -> std::same_as<typename C::Object>;
    { cat.from_initial(x) } -> std::same_as<typename C::Morphism>;
    { cat.terminal() } -> std::same_as<typename C::Object>;
    { m.source() } -> std::convertible_to<typename C::Object>;
    { m.target() } -> std::convertible_to<typename C::Object>;
    { m == m } -> std::same_as<bool>;
    { x == x } -> std::same_as<bool>;
};

/// f x g : X x Y -> X' x Y'
template <RegularCategory C>
typename C::Morphism parallel(const C& cat, const typename C::Morphism& f, const typename C::Morphism& g) {
    auto p = cat.product(f.source(), g.source());
    return cat.pair(cat.compose(f, p.pi1), cat.compose(g, p.pi2));
}

}  // namespace regbisim

#endif
