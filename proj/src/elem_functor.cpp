#include "regbisim/elem_functor.hpp"

#include <algorithm>
#include <mutex>

#include "regbisim/errors.hpp"

namespace regbisim {

namespace {

std::optional<std::size_t> checked_pow(std::size_t base, std::size_t exp) {
    std::size_t out = 1;
    for (std::size_t i = 0; i < exp; ++i) {
        if (base != 0 && out > static_cast<std::size_t>(-1) / base) return std::nullopt;
        out *= base;
    }
    return out;
}

std::optional<std::size_t> checked_mul(std::optional<std::size_t> a, std::optional<std::size_t> b) {
    if (!a || !b) return std::nullopt;
    if (*a != 0 && *b > static_cast<std::size_t>(-1) / *a) return std::nullopt;
    return *a * *b;
}

void check_cap(std::optional<std::size_t> n, const std::string& what) {
    if (!n || *n > kMaterializeLimit)
        throw Error(ErrorCode::cap_exceeded, "enumerating " + what + " exceeds the materialisation cap");
}

bool right_ok(const LiftProblem& p, const Value& fq) {
    return p.order ? p.order->leq(fq, p.target_right) : fq == p.target_right;
}

/// Equality mode, subset mode, or "use the generic fallback".
enum class LiftMode { eq, subset, fallback };

LiftMode mode_of(const LiftProblem& p) {
    if (!p.order || p.order->kind == ElementOrder::Kind::discrete) return LiftMode::eq;
    if (p.order->kind == ElementOrder::Kind::subset) return LiftMode::subset;
    return LiftMode::fallback;
}

std::vector<Value> all_subsets(std::span<const Value> base) {
    check_cap(base.size() < 63 ? std::optional<std::size_t>(std::size_t{1} << base.size()) : std::nullopt,
              "a powerset");
    std::vector<Value> out;
    const std::size_t n = base.size();
    out.reserve(std::size_t{1} << n);
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        std::vector<Value> items;
        for (std::size_t i = 0; i < n; ++i)
            if (mask >> i & 1u) items.push_back(base[i]);
        out.push_back(Value::sorted_set(std::move(items)));
    }
    return out;
}

std::optional<std::size_t> powerset_count(std::size_t n) {
    return n < 63 ? std::optional<std::size_t>(std::size_t{1} << n) : std::nullopt;
}

bool set_of(const Value& t, const ElemFunctor::Contains& item_ok) {
    if (!t.is_set()) return false;
    return std::all_of(t.items().begin(), t.items().end(), item_ok);
}

Value map_set(const Value& t, const ValueFn& f) {
    std::vector<Value> out;
    out.reserve(t.size());
    for (const auto& x : t.items()) out.push_back(f(x));
    return Value::set(std::move(out));
}

std::vector<Value> sorted_unique(std::vector<std::string> labels) {
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    std::vector<Value> out;
    for (auto& l : labels) out.push_back(Value::atom(std::move(l)));
    return out;
}

std::string join_names(std::span<const Value> labels) {
    std::string s;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (i) s += ',';
        s += labels[i].str();
    }
    return s;
}

std::vector<Value> cartesian(const std::vector<std::vector<Value>>& factors) {
    std::optional<std::size_t> total = 1;
    for (const auto& f : factors) total = checked_mul(total, f.size());
    check_cap(total, "a product of fibers");
    std::vector<Value> out;
    std::vector<std::size_t> idx(factors.size(), 0);
    if (*total == 0) return out;
    while (true) {
        std::vector<Value> items;
        for (std::size_t k = 0; k < factors.size(); ++k) items.push_back(factors[k][idx[k]]);
        out.push_back(Value::tuple(std::move(items)));
        std::size_t k = factors.size();
        while (k > 0) {
            --k;
            if (++idx[k] < factors[k].size()) break;
            idx[k] = 0;
            if (k == 0) return out;
        }
        if (factors.empty()) return out;
    }
}

class FunctorCarrier final : public Carrier {
public:
    FunctorCarrier(ElemFunctor f, ElemObject base) : f_(std::move(f)), base_(std::move(base)) {}

    bool contains(const Value& v) const override {
        return f_.contains(v, [this](const Value& x) { return base_.contains(x); });
    }
    std::optional<std::size_t> size() const override {
        auto n = base_.size_hint();
        if (!n) return std::nullopt;
        return f_.count(*n);
    }
    std::span<const Value> elements() const override {
        std::call_once(once_, [this] {
            check_cap(size(), describe());
            auto els = f_.enumerate(base_.elements());
            normalize(els);
            elements_ = std::move(els);
        });
        return elements_;
    }
    Value act(std::size_t g, const Value& v) const override {
        if (g == base_.group()->identity()) return v;
        return f_.act(g, v, [this, g](const Value& x) { return base_.act(g, x); });
    }
    std::string describe() const override { return f_.name() + "(" + base_.carrier().describe() + ")"; }
    std::optional<bool> structurally_equal(const Carrier& other) const override {
        auto* o = dynamic_cast<const FunctorCarrier*>(&other);
        if (!o) return std::nullopt;
        return f_ == o->f_ && base_ == o->base_;
    }

private:
    ElemFunctor f_;
    ElemObject base_;
    mutable std::once_flag once_;
    mutable std::vector<Value> elements_;
};

std::shared_ptr<ElemFunctor::Ops> blank(std::string name, FunctorFlags flags) {
    auto ops = std::make_shared<ElemFunctor::Ops>();
    ops->name = std::move(name);
    ops->flags = flags;
    return ops;
}

}  // namespace

ElementOrder ElementOrder::discrete() {
    return {"discrete", Kind::discrete, [](const Value& a, const Value& b) { return a == b; }};
}

ElementOrder ElementOrder::subset() {
    return {"subset", Kind::subset, [](const Value& a, const Value& b) {
                if (!a.is_set() || !b.is_set()) return a == b;
                return std::includes(b.items().begin(), b.items().end(), a.items().begin(), a.items().end());
            }};
}

ElementOrder ElementOrder::cardinality() {
    return {"cardinality", Kind::custom, [](const Value& a, const Value& b) { return a.size() <= b.size(); }};
}

std::vector<Value> ElemFunctor::enumerate(std::span<const Value> base) const {
    check_cap(count(base.size()), name() + " of a " + std::to_string(base.size()) + "-element carrier");
    return ops_->enumerate(base);
}

Value ElemFunctor::act(std::size_t g, const Value& t, const ValueFn& base_act) const {
    if (ops_->act) return ops_->act(g, t, base_act);
    return ops_->map(t, base_act);
}

std::vector<Value> ElemFunctor::fiber(const LiftProblem& p) const {
    std::vector<Value> out;
    for (const auto& t : enumerate(p.relation)) {
        if (!(map(t, p.left) == p.target_left)) continue;
        if (right_ok(p, map(t, p.right))) out.push_back(t);
    }
    normalize(out);
    return out;
}

std::vector<Value> ElemFunctor::lift(const LiftProblem& p) const {
    if (ops_->lift) {
        if (auto r = ops_->lift(p)) {
            normalize(*r);
            return std::move(*r);
        }
    }
    return fiber(p);
}

ElemFunctor ElemFunctor::identity() {
    auto ops = blank("id", {true, true, true});
    ops->enumerate = [](std::span<const Value> base) { return std::vector<Value>(base.begin(), base.end()); };
    ops->contains = [](const Value& t, const Contains& base) { return base(t); };
    ops->map = [](const Value& t, const ValueFn& f) { return f(t); };
    ops->count = [](std::size_t n) { return std::optional<std::size_t>(n); };
    ops->lift = [](const LiftProblem& p) -> std::optional<std::vector<Value>> {
        if (mode_of(p) == LiftMode::fallback) return std::nullopt;
        std::vector<Value> out;
        for (const auto& r : p.relation)
            if (p.left(r) == p.target_left && right_ok(p, p.right(r))) out.push_back(r);
        return out;
    };
    return ElemFunctor(std::move(ops));
}

ElemFunctor ElemFunctor::pow() {
    auto ops = blank("pow", {true, true, true});
    ops->enumerate = [](std::span<const Value> base) { return all_subsets(base); };
    ops->contains = [](const Value& t, const Contains& base) { return set_of(t, base); };
    ops->map = map_set;
    ops->count = powerset_count;
    ops->lift = [](const LiftProblem& p) -> std::optional<std::vector<Value>> {
        const auto mode = mode_of(p);
        if (mode == LiftMode::fallback || !p.target_left.is_set() || !p.target_right.is_set())
            return std::nullopt;
        std::vector<Value> m;
        for (const auto& r : p.relation)
            if (p.target_left.contains(p.left(r)) && p.target_right.contains(p.right(r))) m.push_back(r);
        Value cand = Value::sorted_set(m);
        if (!(map_set(cand, p.left) == p.target_left)) return std::vector<Value>{};
        if (mode == LiftMode::eq && !(map_set(cand, p.right) == p.target_right)) return std::vector<Value>{};
        return std::vector<Value>{cand};
    };
    return ElemFunctor(std::move(ops));
}

ElemFunctor ElemFunctor::pow_labels(std::vector<std::string> label_names) {
    auto labels = sorted_unique(std::move(label_names));
    auto ops = blank("pow_labels[" + join_names(labels) + "]", {true, true, true});
    ops->enumerate = [labels](std::span<const Value> base) {
        std::vector<Value> pairs;
        for (const auto& l : labels)
            for (const auto& x : base) pairs.push_back(Value::pair(l, x));
        return all_subsets(pairs);
    };
    ops->contains = [labels](const Value& t, const Contains& base) {
        return set_of(t, [&](const Value& it) {
            return it.is_tuple() && it.size() == 2 && std::binary_search(labels.begin(), labels.end(), it[0]) &&
                   base(it[1]);
        });
    };
    ops->map = [](const Value& t, const ValueFn& f) {
        std::vector<Value> out;
        out.reserve(t.size());
        for (const auto& it : t.items()) out.push_back(Value::pair(it[0], f(it[1])));
        return Value::set(std::move(out));
    };
    const std::size_t nl = labels.size();
    ops->count = [nl](std::size_t n) {
        auto k = checked_mul(nl, n);
        return k ? powerset_count(*k) : std::nullopt;
    };
    ops->lift = [labels](const LiftProblem& p) -> std::optional<std::vector<Value>> {
        const auto mode = mode_of(p);
        if (mode == LiftMode::fallback || !p.target_left.is_set() || !p.target_right.is_set())
            return std::nullopt;
        std::vector<Value> m, fp, fq;
        for (const auto& r : p.relation) {
            const Value x = p.left(r);
            const Value y = p.right(r);
            for (const auto& l : labels) {
                Value lx = Value::pair(l, x);
                Value ly = Value::pair(l, y);
                if (p.target_left.contains(lx) && p.target_right.contains(ly)) {
                    m.push_back(Value::pair(l, r));
                    fp.push_back(std::move(lx));
                    fq.push_back(std::move(ly));
                }
            }
        }
        if (!(Value::set(std::move(fp)) == p.target_left)) return std::vector<Value>{};
        if (mode == LiftMode::eq && !(Value::set(std::move(fq)) == p.target_right)) return std::vector<Value>{};
        return std::vector<Value>{Value::set(std::move(m))};
    };
    return ElemFunctor(std::move(ops));
}

ElemFunctor ElemFunctor::det(std::vector<std::string> label_names) {
    auto labels = sorted_unique(std::move(label_names));
    const std::size_t k = labels.size();
    auto ops = blank("det[" + join_names(labels) + "]", {true, true, true});
    ops->enumerate = [k](std::span<const Value> base) {
        std::vector<std::vector<Value>> factors(k, std::vector<Value>(base.begin(), base.end()));
        return cartesian(factors);
    };
    ops->contains = [k](const Value& t, const Contains& base) {
        return t.is_tuple() && t.size() == k && std::all_of(t.items().begin(), t.items().end(), base);
    };
    ops->map = [](const Value& t, const ValueFn& f) {
        std::vector<Value> out;
        for (const auto& x : t.items()) out.push_back(f(x));
        return Value::tuple(std::move(out));
    };
    ops->count = [k](std::size_t n) { return checked_pow(n, k); };
    ops->lift = [k](const LiftProblem& p) -> std::optional<std::vector<Value>> {
        if (mode_of(p) != LiftMode::eq) return std::nullopt;
        if (!p.target_left.is_tuple() || p.target_left.size() != k || !p.target_right.is_tuple() ||
            p.target_right.size() != k)
            return std::vector<Value>{};
        std::vector<std::vector<Value>> factors(k);
        for (std::size_t s = 0; s < k; ++s)
            for (const auto& r : p.relation)
                if (p.left(r) == p.target_left[s] && p.right(r) == p.target_right[s]) factors[s].push_back(r);
        return cartesian(factors);
    };
    return ElemFunctor(std::move(ops));
}

ElemFunctor ElemFunctor::upair() {
    auto ops = blank("upair", {true, true, true});
    ops->enumerate = [](std::span<const Value> base) {
        std::vector<Value> out;
        for (std::size_t i = 0; i < base.size(); ++i) {
            out.push_back(Value::sorted_set({base[i]}));
            for (std::size_t j = i + 1; j < base.size(); ++j) out.push_back(Value::sorted_set({base[i], base[j]}));
        }
        return out;
    };
    ops->contains = [](const Value& t, const Contains& base) {
        return set_of(t, base) && t.size() >= 1 && t.size() <= 2;
    };
    ops->map = map_set;
    ops->count = [](std::size_t n) { return std::optional<std::size_t>(n + n * (n - (n ? 1 : 0)) / 2); };
    ops->lift = [](const LiftProblem& p) -> std::optional<std::vector<Value>> {
        if (mode_of(p) != LiftMode::eq) return std::nullopt;
        if (!p.target_left.is_set() || !p.target_right.is_set()) return std::vector<Value>{};
        std::vector<Value> cand;
        for (const auto& r : p.relation)
            if (p.target_left.contains(p.left(r)) && p.target_right.contains(p.right(r))) cand.push_back(r);
        std::vector<Value> out;
        auto try_set = [&](Value s) {
            if (map_set(s, p.left) == p.target_left && map_set(s, p.right) == p.target_right)
                out.push_back(std::move(s));
        };
        for (std::size_t i = 0; i < cand.size(); ++i) {
            try_set(Value::sorted_set({cand[i]}));
            for (std::size_t j = i + 1; j < cand.size(); ++j) try_set(Value::sorted_set({cand[i], cand[j]}));
        }
        return out;
    };
    return ElemFunctor(std::move(ops));
}

namespace {

ElemFunctor const_product(const ElemObject& c, bool on_left) {
    auto cs = c.elements();
    auto ops = blank(std::string(on_left ? "prodL[" : "prodR[") + join_names(cs) + "]", {true, true, true});
    const std::size_t ci = on_left ? 0 : 1;  // position of the constant factor
    const std::size_t vi = 1 - ci;
    ops->enumerate = [c, on_left](std::span<const Value> base) {
        std::vector<Value> out;
        for (const auto& a : c.elements())
            for (const auto& x : base) out.push_back(on_left ? Value::pair(a, x) : Value::pair(x, a));
        return out;
    };
    ops->contains = [c, ci, vi](const Value& t, const ElemFunctor::Contains& base) {
        return t.is_tuple() && t.size() == 2 && c.contains(t[ci]) && base(t[vi]);
    };
    ops->map = [on_left](const Value& t, const ValueFn& f) {
        return on_left ? Value::pair(t[0], f(t[1])) : Value::pair(f(t[0]), t[1]);
    };
    const std::size_t n = cs.size();
    ops->count = [n](std::size_t m) { return checked_mul(n, m); };
    ops->act = [c, on_left](std::size_t g, const Value& t, const ValueFn& base_act) {
        return on_left ? Value::pair(c.act(g, t[0]), base_act(t[1])) : Value::pair(base_act(t[0]), c.act(g, t[1]));
    };
    ops->lift = [on_left, ci, vi](const LiftProblem& p) -> std::optional<std::vector<Value>> {
        if (mode_of(p) != LiftMode::eq) return std::nullopt;
        const auto& u = p.target_left;
        const auto& v = p.target_right;
        if (!u.is_tuple() || !v.is_tuple() || u.size() != 2 || v.size() != 2 || !(u[ci] == v[ci]))
            return std::vector<Value>{};
        std::vector<Value> out;
        for (const auto& r : p.relation)
            if (p.left(r) == u[vi] && p.right(r) == v[vi])
                out.push_back(on_left ? Value::pair(u[0], r) : Value::pair(r, u[1]));
        return out;
    };
    return ElemFunctor(std::move(ops));
}

}  // namespace

ElemFunctor ElemFunctor::const_product_left(const ElemObject& x) { return const_product(x, true); }
ElemFunctor ElemFunctor::const_product_right(const ElemObject& y) { return const_product(y, false); }

ElemFunctor ElemFunctor::product(const ElemFunctor& f, const ElemFunctor& g) {
    FunctorFlags flags{f.flags().preserves_weak_pullbacks && g.flags().preserves_weak_pullbacks,
                       f.flags().covers_pullbacks && g.flags().covers_pullbacks, true};
    auto ops = blank("(" + f.name() + "*" + g.name() + ")", flags);
    ops->enumerate = [f, g](std::span<const Value> base) {
        return cartesian({f.enumerate(base), g.enumerate(base)});
    };
    ops->contains = [f, g](const Value& t, const Contains& base) {
        return t.is_tuple() && t.size() == 2 && f.contains(t[0], base) && g.contains(t[1], base);
    };
    ops->map = [f, g](const Value& t, const ValueFn& fn) { return Value::pair(f.map(t[0], fn), g.map(t[1], fn)); };
    ops->count = [f, g](std::size_t n) { return checked_mul(f.count(n), g.count(n)); };
    ops->act = [f, g](std::size_t gi, const Value& t, const ValueFn& a) {
        return Value::pair(f.act(gi, t[0], a), g.act(gi, t[1], a));
    };
    ops->lift = [f, g](const LiftProblem& p) -> std::optional<std::vector<Value>> {
        if (mode_of(p) != LiftMode::eq) return std::nullopt;
        const auto& u = p.target_left;
        const auto& v = p.target_right;
        if (!u.is_tuple() || !v.is_tuple() || u.size() != 2 || v.size() != 2) return std::vector<Value>{};
        LiftProblem a = p, b = p;
        a.target_left = u[0];
        a.target_right = v[0];
        b.target_left = u[1];
        b.target_right = v[1];
        return cartesian({f.lift(a), g.lift(b)});
    };
    return ElemFunctor(std::move(ops));
}

ElemFunctor ElemFunctor::composite(const ElemFunctor& outer, const ElemFunctor& inner) {
    FunctorFlags flags{outer.flags().preserves_weak_pullbacks && inner.flags().preserves_weak_pullbacks,
                       outer.flags().preserves_weak_pullbacks && inner.flags().preserves_weak_pullbacks, true};
    auto ops = blank(outer.name() + "." + inner.name(), flags);
    ops->enumerate = [outer, inner](std::span<const Value> base) {
        auto mid = inner.enumerate(base);
        normalize(mid);
        return outer.enumerate(mid);
    };
    ops->contains = [outer, inner](const Value& t, const Contains& base) {
        return outer.contains(t, [&](const Value& v) { return inner.contains(v, base); });
    };
    ops->map = [outer, inner](const Value& t, const ValueFn& fn) {
        return outer.map(t, [&](const Value& v) { return inner.map(v, fn); });
    };
    ops->count = [outer, inner](std::size_t n) -> std::optional<std::size_t> {
        auto m = inner.count(n);
        return m ? outer.count(*m) : std::nullopt;
    };
    ops->act = [outer, inner](std::size_t g, const Value& t, const ValueFn& a) {
        return outer.act(g, t, [&](const Value& v) { return inner.act(g, v, a); });
    };
    return ElemFunctor(std::move(ops));
}

ElemObject functor_image(const ElemFunctor& f, const ElemObject& x) {
    return ElemObject::from_carrier(x.group(), std::make_shared<const FunctorCarrier>(f, x));
}

}  // namespace regbisim
