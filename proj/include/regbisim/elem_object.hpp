// Objects and morphisms of the element-based backends (finite sets and
// finite G-sets).
//
// An object is a finite carrier of Values plus an action of a finite group
// (the trivial group for plain finite sets). Carriers are either explicit
// sorted element lists or lazily presented (a functor image F(X), or a
// product of lazy carriers); lazy carriers enumerate on demand, under a cap.
// A morphism is either a table indexed by the source's elements or, for lazy
// sources, an element-level rule.

#ifndef REGBISIM_ELEM_OBJECT_HPP
#define REGBISIM_ELEM_OBJECT_HPP

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "regbisim/group.hpp"
#include "regbisim/value.hpp"

namespace regbisim {

/// Upper bound on the number of elements any carrier is allowed to enumerate.
inline constexpr std::size_t kMaterializeLimit = std::size_t{1} << 18;

using ValueFn = std::function<Value(const Value&)>;

class Carrier {
public:
    virtual ~Carrier() = default;
    virtual bool contains(const Value& v) const = 0;
    /// Exact size when it fits in size_t.
    virtual std::optional<std::size_t> size() const = 0;
    /// Sorted elements; may throw Error(cap_exceeded).
    virtual std::span<const Value> elements() const = 0;
    /// Action of group element g on a member.
    virtual Value act(std::size_t g, const Value& v) const = 0;
    virtual bool is_explicit() const noexcept { return false; }
    /// Short structural description, used in messages.
    virtual std::string describe() const = 0;
    /// Structural comparison against a carrier of the same presentation;
    /// nullopt means "compare by enumeration".
    virtual std::optional<bool> structurally_equal(const Carrier&) const { return std::nullopt; }
};

class ElemObject {
public:
    ElemObject();  // empty finite set

    /// Explicit carrier; `elements` must be sorted and unique, `action` is the
    /// flattened |G| x n table of element indices (empty means trivial action).
    static ElemObject make_explicit(GroupPtr group, std::vector<Value> elements,
                                    std::vector<std::size_t> action = {});
    /// Explicit carrier whose action is given element-wise; closure is checked.
    static ElemObject make_explicit(GroupPtr group, std::vector<Value> elements,
                                    const std::function<Value(std::size_t, const Value&)>& act);
    static ElemObject from_carrier(GroupPtr group, std::shared_ptr<const Carrier> carrier);

    const GroupPtr& group() const noexcept { return group_; }
    const Carrier& carrier() const noexcept { return *carrier_; }
    const std::shared_ptr<const Carrier>& carrier_ptr() const noexcept { return carrier_; }

    bool contains(const Value& v) const { return carrier_->contains(v); }
    std::span<const Value> elements() const { return carrier_->elements(); }
    std::optional<std::size_t> size_hint() const { return carrier_->size(); }
    /// Size; throws cap_exceeded when the carrier is too large to count.
    std::size_t size() const;
    bool empty() const { return size_hint() == std::optional<std::size_t>{0}; }
    bool is_explicit() const noexcept { return carrier_->is_explicit(); }
    /// Position in elements(), npos when absent.
    std::size_t index_of(const Value& v) const;
    Value act(std::size_t g, const Value& v) const { return carrier_->act(g, v); }
    /// Index-level action (explicit and materialised carriers).
    std::size_t act_index(std::size_t g, std::size_t i) const;

    friend bool operator==(const ElemObject& a, const ElemObject& b);

private:
    ElemObject(GroupPtr g, std::shared_ptr<const Carrier> c) : group_(std::move(g)), carrier_(std::move(c)) {}
    GroupPtr group_;
    std::shared_ptr<const Carrier> carrier_;
};

class ElemMorphism {
public:
    /// Table form: images[i] is the image of source.elements()[i].
    ElemMorphism(ElemObject source, ElemObject target, std::vector<Value> images);
    /// Rule form, for sources that are too large (or unnecessary) to enumerate.
    ElemMorphism(ElemObject source, ElemObject target, ValueFn rule);

    const ElemObject& source() const noexcept { return source_; }
    const ElemObject& target() const noexcept { return target_; }

    Value operator()(const Value& x) const;
    /// Images aligned with source().elements(); materialises rules.
    std::span<const Value> images() const;
    bool is_rule() const noexcept;

    friend bool operator==(const ElemMorphism& a, const ElemMorphism& b);

private:
    struct Impl;
    ElemObject source_;
    ElemObject target_;
    std::shared_ptr<const Impl> impl_;
};

}  // namespace regbisim

#endif
