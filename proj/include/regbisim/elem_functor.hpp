// Endofunctors on the element-based backends.
//
// A functor is described at the level of elements: how to enumerate F(X)
// from the elements of X, how F(f) acts on one element, and how the group
// acts on F(X). Morphism and object maps on the backend are derived from
// these. Each functor can also solve the lifting problem behind the
// bisimulation and simulation checks: given a relation R with legs p, q and
// targets u in FX, v in FY, find the t in FR with Fp(t) = u and Fq(t) = v
// (or Fq(t) <= v for simulations).

#ifndef REGBISIM_ELEM_FUNCTOR_HPP
#define REGBISIM_ELEM_FUNCTOR_HPP

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "regbisim/elem_object.hpp"
#include "regbisim/value.hpp"

namespace regbisim {

struct FunctorFlags {
    bool preserves_weak_pullbacks = false;
    bool covers_pullbacks = false;
    bool element_enumerable = true;
};

/// A preorder on the elements of F-images, lifted pointwise to Hom-sets.
struct ElementOrder {
    enum class Kind { discrete, subset, custom };

    std::string name;
    Kind kind = Kind::discrete;
    std::function<bool(const Value&, const Value&)> leq;

    static ElementOrder discrete();
    /// Inclusion of set-valued elements (powerset-style functors).
    static ElementOrder subset();
    /// Compares set cardinalities. A preorder that is not a good order
    /// structure; kept as a negative control.
    static ElementOrder cardinality();
};

struct LiftProblem {
    std::span<const Value> relation;  // elements of R
    ValueFn left;                     // p : R -> X
    ValueFn right;                    // q : R -> Y
    Value target_left;                // u in FX
    Value target_right;               // v in FY
    const ElementOrder* order = nullptr;  // null: Fq(t) = v; otherwise Fq(t) <= v
};

class ElemFunctor {
public:
    using Contains = std::function<bool(const Value&)>;

    struct Ops {
        std::string name;
        FunctorFlags flags;
        std::function<std::vector<Value>(std::span<const Value>)> enumerate;
        std::function<bool(const Value&, const Contains&)> contains;
        std::function<Value(const Value&, const ValueFn&)> map;
        std::function<std::optional<std::size_t>(std::size_t)> count;
        /// Optional; defaults to map(t, g-action of the base).
        std::function<Value(std::size_t, const Value&, const ValueFn&)> act;
        /// Optional specialised lifting; nullopt falls back to enumeration.
        std::function<std::optional<std::vector<Value>>(const LiftProblem&)> lift;
    };

    explicit ElemFunctor(std::shared_ptr<const Ops> ops) : ops_(std::move(ops)) {}

    static ElemFunctor identity();
    /// X -> P(X)
    static ElemFunctor pow();
    /// X -> P(Sigma x X), labelled transition systems.
    static ElemFunctor pow_labels(std::vector<std::string> labels);
    /// X -> X^Sigma, deterministic systems.
    static ElemFunctor det(std::vector<std::string> labels);
    /// X -> unordered pairs {x, y} (x = y allowed).
    static ElemFunctor upair();
    /// Y -> X x Y
    static ElemFunctor const_product_left(const ElemObject& x);
    /// X -> X x Y
    static ElemFunctor const_product_right(const ElemObject& y);
    static ElemFunctor product(const ElemFunctor& f, const ElemFunctor& g);
    /// outer . inner
    static ElemFunctor composite(const ElemFunctor& outer, const ElemFunctor& inner);

    const std::string& name() const noexcept { return ops_->name; }
    bool is_identity() const noexcept { return ops_->name == "id"; }
    const FunctorFlags& flags() const noexcept { return ops_->flags; }

    std::vector<Value> enumerate(std::span<const Value> base) const;
    bool contains(const Value& t, const Contains& base) const { return ops_->contains(t, base); }
    Value map(const Value& t, const ValueFn& f) const { return ops_->map(t, f); }
    std::optional<std::size_t> count(std::size_t base_size) const { return ops_->count(base_size); }
    Value act(std::size_t g, const Value& t, const ValueFn& base_act) const;

    /// Canonical sub-fiber: empty iff the full fiber is empty, closed under
    /// every group element fixing the problem, and its members belong to
    /// the full fiber.
    std::vector<Value> lift(const LiftProblem& problem) const;
    /// The full fiber, by enumerating F(R).
    std::vector<Value> fiber(const LiftProblem& problem) const;

    friend bool operator==(const ElemFunctor& a, const ElemFunctor& b) { return a.name() == b.name(); }

private:
    std::shared_ptr<const Ops> ops_;
};

/// F(X) as a lazily enumerated object.
ElemObject functor_image(const ElemFunctor& f, const ElemObject& x);

}  // namespace regbisim

#endif
