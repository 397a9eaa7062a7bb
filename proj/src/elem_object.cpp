#include "regbisim/elem_object.hpp"

#include <algorithm>
#include <mutex>

#include "regbisim/errors.hpp"

namespace regbisim {

namespace {

class ExplicitCarrier final : public Carrier {
public:
    ExplicitCarrier(std::vector<Value> elements, std::vector<std::size_t> action, std::size_t group_order)
        : elements_(std::move(elements)), action_(std::move(action)), group_order_(group_order) {}

    bool contains(const Value& v) const override { return index_in(elements_, v) != npos; }
    std::optional<std::size_t> size() const override { return elements_.size(); }
    std::span<const Value> elements() const override { return elements_; }
    bool is_explicit() const noexcept override { return true; }

    Value act(std::size_t g, const Value& v) const override {
        if (action_.empty()) return v;
        const std::size_t i = index_in(elements_, v);
        if (i == npos) throw Error(ErrorCode::endpoint_mismatch, "act: value " + v.str() + " not in carrier");
        return elements_[act_index(g, i)];
    }

    std::size_t act_index(std::size_t g, std::size_t i) const {
        return action_.empty() ? i : action_[g * elements_.size() + i];
    }

    std::string describe() const override { return "explicit[" + std::to_string(elements_.size()) + "]"; }

    std::optional<bool> structurally_equal(const Carrier& other) const override {
        auto* o = dynamic_cast<const ExplicitCarrier*>(&other);
        if (!o) return std::nullopt;
        if (elements_ != o->elements_) return false;
        if (action_ == o->action_) return true;
        for (std::size_t g = 0; g < group_order_; ++g)
            for (std::size_t i = 0; i < elements_.size(); ++i)
                if (act_index(g, i) != o->act_index(g, i)) return false;
        return true;
    }

private:
    std::vector<Value> elements_;
    std::vector<std::size_t> action_;
    std::size_t group_order_;
};

}  // namespace

ElemObject::ElemObject() : ElemObject(FiniteGroup::trivial(), std::make_shared<const ExplicitCarrier>(std::vector<Value>{}, std::vector<std::size_t>{}, 1)) {}

ElemObject ElemObject::make_explicit(GroupPtr group, std::vector<Value> elements, std::vector<std::size_t> action) {
    if (!group) group = FiniteGroup::trivial();
    for (std::size_t i = 1; i < elements.size(); ++i)
        if (!(elements[i - 1] < elements[i]))
            throw Error(ErrorCode::invalid_argument, "explicit carrier must be sorted and duplicate-free");
    const std::size_t n = elements.size();
    if (!action.empty()) {
        require(action.size() == group->order() * n, ErrorCode::invalid_action, "action table has wrong size");
        for (auto a : action) require(a < n, ErrorCode::invalid_action, "action table leaves the carrier");
        bool trivial = true;
        for (std::size_t g = 0; g < group->order() && trivial; ++g)
            for (std::size_t i = 0; i < n && trivial; ++i) trivial = action[g * n + i] == i;
        if (trivial) action.clear();
    }
    const std::size_t order = group->order();
    return ElemObject(std::move(group), std::make_shared<const ExplicitCarrier>(std::move(elements), std::move(action), order));
}

ElemObject ElemObject::make_explicit(GroupPtr group, std::vector<Value> elements,
                                     const std::function<Value(std::size_t, const Value&)>& act) {
    if (!group) group = FiniteGroup::trivial();
    std::vector<std::size_t> table;
    if (group->order() > 1) {
        const std::size_t n = elements.size();
        table.resize(group->order() * n);
        for (std::size_t g = 0; g < group->order(); ++g)
            for (std::size_t i = 0; i < n; ++i) {
                const std::size_t j = index_in(elements, act(g, elements[i]));
                if (j == npos) throw Error(ErrorCode::not_equivariant, "carrier is not closed under the action");
                table[g * n + i] = j;
            }
    }
    return make_explicit(std::move(group), std::move(elements), std::move(table));
}

ElemObject ElemObject::from_carrier(GroupPtr group, std::shared_ptr<const Carrier> carrier) {
    if (!group) group = FiniteGroup::trivial();
    return ElemObject(std::move(group), std::move(carrier));
}

std::size_t ElemObject::size() const {
    auto s = carrier_->size();
    if (!s) throw Error(ErrorCode::cap_exceeded, "carrier " + carrier_->describe() + " is too large to count");
    return *s;
}

std::size_t ElemObject::index_of(const Value& v) const { return index_in(carrier_->elements(), v); }

std::size_t ElemObject::act_index(std::size_t g, std::size_t i) const {
    if (auto* e = dynamic_cast<const ExplicitCarrier*>(carrier_.get())) return e->act_index(g, i);
    auto els = carrier_->elements();
    return index_in(els, carrier_->act(g, els[i]));
}

bool operator==(const ElemObject& a, const ElemObject& b) {
    if (!same_group(a.group_, b.group_)) return false;
    if (a.carrier_ == b.carrier_) return true;
    if (auto s = a.carrier_->structurally_equal(*b.carrier_)) return *s;
    auto sa = a.size_hint();
    auto sb = b.size_hint();
    if (sa && sb && *sa != *sb) return false;
    auto ea = a.elements();
    auto eb = b.elements();
    if (!std::equal(ea.begin(), ea.end(), eb.begin(), eb.end())) return false;
    for (std::size_t g = 0; g < a.group_->order(); ++g)
        for (const auto& v : ea)
            if (!(a.act(g, v) == b.act(g, v))) return false;
    return true;
}

struct ElemMorphism::Impl {
    std::vector<Value> table;
    ValueFn rule;
    mutable std::once_flag once;
    mutable std::vector<Value> cache;
};

ElemMorphism::ElemMorphism(ElemObject source, ElemObject target, std::vector<Value> images)
    : source_(std::move(source)), target_(std::move(target)) {
    if (!same_group(source_.group(), target_.group()))
        throw Error(ErrorCode::backend_mismatch, "morphism between objects over different groups");
    if (images.size() != source_.size())
        throw Error(ErrorCode::invalid_argument, "morphism table is not total on its source");
    auto impl = std::make_shared<Impl>();
    impl->table = std::move(images);
    impl_ = std::move(impl);
}

ElemMorphism::ElemMorphism(ElemObject source, ElemObject target, ValueFn rule)
    : source_(std::move(source)), target_(std::move(target)) {
    if (!same_group(source_.group(), target_.group()))
        throw Error(ErrorCode::backend_mismatch, "morphism between objects over different groups");
    auto impl = std::make_shared<Impl>();
    impl->rule = std::move(rule);
    impl_ = std::move(impl);
}

bool ElemMorphism::is_rule() const noexcept { return static_cast<bool>(impl_->rule); }

Value ElemMorphism::operator()(const Value& x) const {
    if (impl_->rule) return impl_->rule(x);
    const std::size_t i = source_.index_of(x);
    if (i == npos) throw Error(ErrorCode::endpoint_mismatch, "value " + x.str() + " is not in the morphism's source");
    return impl_->table[i];
}

std::span<const Value> ElemMorphism::images() const {
    if (!impl_->rule) return impl_->table;
    std::call_once(impl_->once, [this] {
        auto els = source_.elements();
        std::vector<Value> out;
        out.reserve(els.size());
        for (const auto& x : els) out.push_back(impl_->rule(x));
        impl_->cache = std::move(out);
    });
    return impl_->cache;
}

bool operator==(const ElemMorphism& a, const ElemMorphism& b) {
    if (!(a.source_ == b.source_) || !(a.target_ == b.target_)) return false;
    if (a.impl_ == b.impl_) return true;
    auto ia = a.images();
    auto ib = b.images();
    return std::equal(ia.begin(), ia.end(), ib.begin(), ib.end());
}

}  // namespace regbisim
