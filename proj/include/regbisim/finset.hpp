// Finite sets and finite G-sets as regular categories (both are toposes).
//
// FinSet is the G-set category over the trivial group, so both backends share
// one implementation. The difference shows up only in solve_factorization:
// with a nontrivial group an equivariant lift must respect stabilizers, and
// regular epis need not split.

#ifndef REGBISIM_FINSET_HPP
#define REGBISIM_FINSET_HPP

#include <optional>
#include <string>
#include <vector>

#include "regbisim/category.hpp"
#include "regbisim/elem_functor.hpp"
#include "regbisim/elem_object.hpp"
#include "regbisim/group.hpp"

namespace regbisim {

class ElemCategory {
public:
    using Object = ElemObject;
    using Morphism = ElemMorphism;
    using Functor = ElemFunctor;
    using Product = ProductResult<ElemObject, ElemMorphism>;
    using Pullback = PullbackResult<ElemObject, ElemMorphism>;
    using Pushout = PushoutResult<ElemObject, ElemMorphism>;

    /// Plain finite sets (the trivial group).
    ElemCategory() : ElemCategory(nullptr) {}
    explicit ElemCategory(GroupPtr group);

    const GroupPtr& group() const noexcept { return group_; }
    std::string name() const { return group_->order() == 1 ? "finset" : "gset"; }
    bool has_power_objects() const noexcept { return true; }

    // --- construction -----------------------------------------------------
    /// Objects with trivial action; elements are sorted and deduplicated.
    Object object(std::vector<Value> elements) const;
    Object atoms(const std::vector<std::string>& names) const;
    /// G-set from per-group-element permutations, action[g][i] = index of g.x_i
    /// in the sorted element list. Validates the action laws.
    Object gset_object(std::vector<Value> elements, const std::vector<std::vector<std::size_t>>& action) const;
    /// Table morphism; checks totality, targets and equivariance.
    Morphism morphism(const Object& source, const Object& target, std::vector<Value> images) const;
    Morphism morphism(const Object& source, const Object& target, const ValueFn& fn) const;

    // --- regular category interface ----------------------------------------
    Object terminal() const;
    Object initial() const;
    Morphism from_initial(const Object& x) const;
    Morphism to_terminal(const Object& x) const;
    Morphism identity(const Object& x) const;
    Morphism compose(const Morphism& g, const Morphism& f) const;
    Product product(const Object& x, const Object& y) const;
    Morphism pair(const Morphism& f, const Morphism& g) const;
    Pullback pullback(const Morphism& f, const Morphism& g) const;
    Pushout pushout(const Morphism& f, const Morphism& g) const;
    /// X + Y, as the pushout of the empty span.
    Pushout coproduct(const Object& x, const Object& y) const;
    Factorization<Morphism> factorize(const Morphism& f) const;
    bool is_mono(const Morphism& f) const;
    bool is_regular_epi(const Morphism& f) const;
    /// u with through . u = h, equivariant; smallest preimage of each orbit
    /// representative wins.
    std::optional<Morphism> solve_factorization(const Morphism& h, const Morphism& through) const;
    Morphism mediate_pullback(const Pullback& pb, const Morphism& c1, const Morphism& c2) const;
    Morphism mediate_pushout(const Pushout& po, const Morphism& d1, const Morphism& d2) const;

    Object apply(const Functor& f, const Object& x) const;
    Morphism apply(const Functor& f, const Morphism& m) const;

    // --- G-set structure ---------------------------------------------------
    bool check_equivariant(const Morphism& f) const;
    /// Orbits in canonical order (by least element), each sorted.
    std::vector<std::vector<Value>> orbits(const Object& x) const;
    std::vector<std::size_t> stabilizer(const Object& x, const Value& v) const;

private:
    void check_object(const Object& x) const;
    GroupPtr group_;
};

/// Spelled separately for readability; both are ElemCategory.
using FinSet = ElemCategory;
using GSet = ElemCategory;

static_assert(RegularCategory<ElemCategory>);

}  // namespace regbisim

#endif
