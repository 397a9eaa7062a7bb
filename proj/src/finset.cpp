#include "regbisim/finset.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <unordered_map>

#include "regbisim/errors.hpp"

namespace regbisim {

namespace {

/// X x Y when at least one factor is only lazily presented.
class ProductCarrier final : public Carrier {
public:
    ProductCarrier(ElemObject a, ElemObject b) : a_(std::move(a)), b_(std::move(b)) {}

    bool contains(const Value& v) const override {
        return v.is_tuple() && v.size() == 2 && a_.contains(v[0]) && b_.contains(v[1]);
    }
    std::optional<std::size_t> size() const override {
        auto x = a_.size_hint();
        auto y = b_.size_hint();
        if (!x || !y) return std::nullopt;
        if (*x != 0 && *y > kMaterializeLimit * 64 / *x) return std::nullopt;
        return *x * *y;
    }
    std::span<const Value> elements() const override {
        std::call_once(once_, [this] {
            auto n = size();
            if (!n || *n > kMaterializeLimit)
                throw Error(ErrorCode::cap_exceeded, "enumerating " + describe() + " exceeds the materialisation cap");
            std::vector<Value> out;
            for (const auto& x : a_.elements())
                for (const auto& y : b_.elements()) out.push_back(Value::pair(x, y));
            elements_ = std::move(out);
        });
        return elements_;
    }
    Value act(std::size_t g, const Value& v) const override { return Value::pair(a_.act(g, v[0]), b_.act(g, v[1])); }
    std::string describe() const override { return "(" + a_.carrier().describe() + "x" + b_.carrier().describe() + ")"; }
    std::optional<bool> structurally_equal(const Carrier& other) const override {
        auto* o = dynamic_cast<const ProductCarrier*>(&other);
        if (!o) return std::nullopt;
        return a_ == o->a_ && b_ == o->b_;
    }

private:
    ElemObject a_, b_;
    mutable std::once_flag once_;
    mutable std::vector<Value> elements_;
};

const Value& tag_left() {
    static const Value v = Value::atom("0");
    return v;
}
const Value& tag_right() {
    static const Value v = Value::atom("1");
    return v;
}

struct UnionFind {
    std::vector<std::size_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);  // root = least index
    }
};

}  // namespace

ElemCategory::ElemCategory(GroupPtr group) : group_(group ? std::move(group) : FiniteGroup::trivial()) {}

void ElemCategory::check_object(const Object& x) const {
    if (!same_group(x.group(), group_))
        throw Error(ErrorCode::backend_mismatch, "object belongs to a different " + name() + " backend");
}

ElemObject ElemCategory::object(std::vector<Value> elements) const {
    normalize(elements);
    return ElemObject::make_explicit(group_, std::move(elements));
}

ElemObject ElemCategory::atoms(const std::vector<std::string>& names) const {
    std::vector<Value> els;
    for (const auto& n : names) els.push_back(Value::atom(n));
    return object(std::move(els));
}

ElemObject ElemCategory::gset_object(std::vector<Value> elements,
                                     const std::vector<std::vector<std::size_t>>& action) const {
    for (std::size_t i = 1; i < elements.size(); ++i)
        require(elements[i - 1] < elements[i], ErrorCode::invalid_argument, "G-set carrier must be sorted and unique");
    const std::size_t n = elements.size();
    const std::size_t order = group_->order();
    require(action.size() == order, ErrorCode::invalid_action, "action needs one permutation per group element");
    std::vector<std::size_t> flat(order * n);
    for (std::size_t g = 0; g < order; ++g) {
        require(action[g].size() == n, ErrorCode::invalid_action, "action permutation has wrong length");
        std::vector<bool> seen(n, false);
        for (std::size_t i = 0; i < n; ++i) {
            require(action[g][i] < n, ErrorCode::invalid_action, "action leaves the carrier");
            require(!seen[action[g][i]], ErrorCode::invalid_action, "group element does not act bijectively");
            seen[action[g][i]] = true;
            flat[g * n + i] = action[g][i];
        }
    }
    for (std::size_t i = 0; i < n; ++i)
        require(flat[group_->identity() * n + i] == i, ErrorCode::invalid_action, "identity does not act trivially");
    for (std::size_t g = 0; g < order; ++g)
        for (std::size_t h = 0; h < order; ++h)
            for (std::size_t i = 0; i < n; ++i)
                require(flat[g * n + flat[h * n + i]] == flat[group_->mul(g, h) * n + i], ErrorCode::invalid_action,
                        "action is not compatible with the group multiplication");
    return ElemObject::make_explicit(group_, std::move(elements), std::move(flat));
}

ElemMorphism ElemCategory::morphism(const Object& source, const Object& target, std::vector<Value> images) const {
    check_object(source);
    check_object(target);
    for (const auto& v : images)
        if (!target.contains(v))
            throw Error(ErrorCode::endpoint_mismatch, "image " + v.str() + " is not in the target");
    ElemMorphism m(source, target, std::move(images));
    if (!check_equivariant(m)) throw Error(ErrorCode::not_equivariant, "morphism is not equivariant");
    return m;
}

ElemMorphism ElemCategory::morphism(const Object& source, const Object& target, const ValueFn& fn) const {
    std::vector<Value> images;
    for (const auto& x : source.elements()) images.push_back(fn(x));
    return morphism(source, target, std::move(images));
}

ElemObject ElemCategory::terminal() const { return object({Value()}); }

ElemObject ElemCategory::initial() const { return ElemObject::make_explicit(group_, {}); }

ElemMorphism ElemCategory::from_initial(const Object& x) const {
    check_object(x);
    return ElemMorphism(initial(), x, std::vector<Value>{});
}

ElemMorphism ElemCategory::to_terminal(const Object& x) const {
    check_object(x);
    return ElemMorphism(x, terminal(), [](const Value&) { return Value(); });
}

ElemMorphism ElemCategory::identity(const Object& x) const {
    check_object(x);
    if (x.is_explicit()) {
        auto els = x.elements();
        return ElemMorphism(x, x, std::vector<Value>(els.begin(), els.end()));
    }
    return ElemMorphism(x, x, [](const Value& v) { return v; });
}

ElemMorphism ElemCategory::compose(const Morphism& g, const Morphism& f) const {
    if (!(f.target() == g.source()))
        throw Error(ErrorCode::endpoint_mismatch, "compose: target of f differs from source of g");
    if (!f.is_rule()) {
        std::vector<Value> images;
        auto fi = f.images();
        images.reserve(fi.size());
        for (const auto& y : fi) images.push_back(g(y));
        return ElemMorphism(f.source(), g.target(), std::move(images));
    }
    return ElemMorphism(f.source(), g.target(), [f, g](const Value& x) { return g(f(x)); });
}

ElemCategory::Product ElemCategory::product(const Object& x, const Object& y) const {
    check_object(x);
    check_object(y);
    Object p;
    if (x.is_explicit() && y.is_explicit()) {
        std::vector<Value> els;
        els.reserve(x.size() * y.size());
        for (const auto& a : x.elements())
            for (const auto& b : y.elements()) els.push_back(Value::pair(a, b));
        p = ElemObject::make_explicit(group_, std::move(els), [&](std::size_t g, const Value& v) {
            return Value::pair(x.act(g, v[0]), y.act(g, v[1]));
        });
    } else {
        p = ElemObject::from_carrier(group_, std::make_shared<const ProductCarrier>(x, y));
    }
    auto first = [](const Value& v) { return v[0]; };
    auto second = [](const Value& v) { return v[1]; };
    if (p.is_explicit()) {
        std::vector<Value> a, b;
        for (const auto& v : p.elements()) {
            a.push_back(v[0]);
            b.push_back(v[1]);
        }
        return {p, ElemMorphism(p, x, std::move(a)), ElemMorphism(p, y, std::move(b))};
    }
    return {p, ElemMorphism(p, x, first), ElemMorphism(p, y, second)};
}

ElemMorphism ElemCategory::pair(const Morphism& f, const Morphism& g) const {
    if (!(f.source() == g.source())) throw Error(ErrorCode::endpoint_mismatch, "pair: sources differ");
    auto target = product(f.target(), g.target()).object;
    if (!f.is_rule() && !g.is_rule()) {
        auto fi = f.images();
        auto gi = g.images();
        std::vector<Value> images;
        images.reserve(fi.size());
        for (std::size_t i = 0; i < fi.size(); ++i) images.push_back(Value::pair(fi[i], gi[i]));
        return ElemMorphism(f.source(), target, std::move(images));
    }
    return ElemMorphism(f.source(), target, [f, g](const Value& x) { return Value::pair(f(x), g(x)); });
}

ElemCategory::Pullback ElemCategory::pullback(const Morphism& f, const Morphism& g) const {
    if (!(f.target() == g.target())) throw Error(ErrorCode::endpoint_mismatch, "pullback: codomains differ");
    std::unordered_map<Value, std::vector<Value>, ValueHash> by_image;
    {
        auto gs = g.source().elements();
        auto gi = g.images();
        for (std::size_t j = 0; j < gs.size(); ++j) by_image[gi[j]].push_back(gs[j]);
    }
    std::vector<Value> els;
    auto fs = f.source().elements();
    auto fi = f.images();
    for (std::size_t i = 0; i < fs.size(); ++i) {
        auto it = by_image.find(fi[i]);
        if (it == by_image.end()) continue;
        for (const auto& b : it->second) els.push_back(Value::pair(fs[i], b));
    }
    const auto& a_obj = f.source();
    const auto& b_obj = g.source();
    auto apex = ElemObject::make_explicit(group_, std::move(els), [&](std::size_t h, const Value& v) {
        return Value::pair(a_obj.act(h, v[0]), b_obj.act(h, v[1]));
    });
    std::vector<Value> l, r;
    for (const auto& v : apex.elements()) {
        l.push_back(v[0]);
        r.push_back(v[1]);
    }
    return {apex, ElemMorphism(apex, a_obj, std::move(l)), ElemMorphism(apex, b_obj, std::move(r)), f, g};
}

ElemCategory::Pushout ElemCategory::pushout(const Morphism& f, const Morphism& g) const {
    if (!(f.source() == g.source())) throw Error(ErrorCode::endpoint_mismatch, "pushout: domains differ");
    const auto& a_obj = f.target();
    const auto& b_obj = g.target();
    auto as = a_obj.elements();
    auto bs = b_obj.elements();
    const std::size_t na = as.size();
    UnionFind uf(na + bs.size());
    auto fi = f.images();
    auto gi = g.images();
    for (std::size_t c = 0; c < fi.size(); ++c) uf.unite(a_obj.index_of(fi[c]), na + b_obj.index_of(gi[c]));
    // Each class is named by its least member of the tagged disjoint union.
    auto tagged = [&](std::size_t k) {
        return k < na ? Value::pair(tag_left(), as[k]) : Value::pair(tag_right(), bs[k - na]);
    };
    std::vector<Value> rep(na + bs.size());
    std::vector<Value> els;
    for (std::size_t k = 0; k < rep.size(); ++k) {
        rep[k] = tagged(uf.find(k));
        if (uf.find(k) == k) els.push_back(rep[k]);
    }
    normalize(els);
    auto class_of = [&](const Value& tagged_value) {
        std::size_t k = tagged_value[0] == tag_left() ? a_obj.index_of(tagged_value[1])
                                                      : na + b_obj.index_of(tagged_value[1]);
        return rep[k];
    };
    auto apex = ElemObject::make_explicit(group_, std::move(els), [&](std::size_t h, const Value& v) {
        const auto& side = v[0] == tag_left() ? a_obj : b_obj;
        return class_of(Value::pair(v[0], side.act(h, v[1])));
    });
    std::vector<Value> l(rep.begin(), rep.begin() + static_cast<std::ptrdiff_t>(na));
    std::vector<Value> r(rep.begin() + static_cast<std::ptrdiff_t>(na), rep.end());
    return {apex, ElemMorphism(a_obj, apex, std::move(l)), ElemMorphism(b_obj, apex, std::move(r)), f, g};
}

ElemCategory::Pushout ElemCategory::coproduct(const Object& x, const Object& y) const {
    return pushout(from_initial(x), from_initial(y));
}

Factorization<ElemMorphism> ElemCategory::factorize(const Morphism& f) const {
    auto fi = f.images();
    std::vector<Value> img(fi.begin(), fi.end());
    normalize(img);
    const auto& t = f.target();
    auto image = ElemObject::make_explicit(group_, img, [&](std::size_t h, const Value& v) { return t.act(h, v); });
    ElemMorphism epi(f.source(), image, std::vector<Value>(fi.begin(), fi.end()));
    ElemMorphism mono(image, t, std::move(img));
    return {epi, mono};
}

bool ElemCategory::is_mono(const Morphism& f) const {
    auto fi = f.images();
    std::vector<Value> img(fi.begin(), fi.end());
    normalize(img);
    return img.size() == fi.size();
}

bool ElemCategory::is_regular_epi(const Morphism& f) const {
    auto fi = f.images();
    std::vector<Value> img(fi.begin(), fi.end());
    normalize(img);
    return img.size() == f.target().size();
}

std::optional<ElemMorphism> ElemCategory::solve_factorization(const Morphism& h, const Morphism& through) const {
    if (!(h.target() == through.target()))
        throw Error(ErrorCode::endpoint_mismatch, "solve_factorization: targets differ");
    std::unordered_map<Value, std::vector<std::size_t>, ValueHash> pre;
    auto ti = through.images();
    for (std::size_t j = 0; j < ti.size(); ++j) pre[ti[j]].push_back(j);  // ascending
    const auto& a = h.source();
    const auto& b = through.source();
    auto as = a.elements();
    auto bs = b.elements();
    auto hi = h.images();
    std::vector<std::optional<Value>> out(as.size());
    const std::size_t order = group_->order();
    for (std::size_t i = 0; i < as.size(); ++i) {
        if (out[i]) continue;  // i is the least element of a new orbit
        auto it = pre.find(hi[i]);
        if (it == pre.end()) return std::nullopt;
        std::vector<std::size_t> stab;
        for (std::size_t g = 0; g < order; ++g)
            if (a.act_index(g, i) == i) stab.push_back(g);
        std::optional<std::size_t> chosen;
        for (auto j : it->second) {
            bool fixed = std::all_of(stab.begin(), stab.end(), [&](std::size_t g) { return b.act_index(g, j) == j; });
            if (fixed) {
                chosen = j;
                break;
            }
        }
        if (!chosen) return std::nullopt;
        for (std::size_t g = 0; g < order; ++g) out[a.act_index(g, i)] = bs[b.act_index(g, *chosen)];
    }
    std::vector<Value> images;
    images.reserve(out.size());
    for (auto& v : out) images.push_back(std::move(*v));
    return ElemMorphism(a, b, std::move(images));
}

ElemMorphism ElemCategory::mediate_pullback(const Pullback& pb, const Morphism& c1, const Morphism& c2) const {
    if (!(c1.source() == c2.source()) || !(c1.target() == pb.left.target()) || !(c2.target() == pb.right.target()))
        throw Error(ErrorCode::endpoint_mismatch, "mediate_pullback: cone has the wrong shape");
    if (!(compose(pb.f, c1) == compose(pb.g, c2)))
        throw Error(ErrorCode::non_commuting, "mediate_pullback: cone does not commute");
    auto i1 = c1.images();
    auto i2 = c2.images();
    std::vector<Value> images;
    for (std::size_t k = 0; k < i1.size(); ++k) images.push_back(Value::pair(i1[k], i2[k]));
    return ElemMorphism(c1.source(), pb.apex, std::move(images));
}

ElemMorphism ElemCategory::mediate_pushout(const Pushout& po, const Morphism& d1, const Morphism& d2) const {
    if (!(d1.target() == d2.target()) || !(d1.source() == po.left.source()) || !(d2.source() == po.right.source()))
        throw Error(ErrorCode::endpoint_mismatch, "mediate_pushout: cocone has the wrong shape");
    if (!(compose(d1, po.f) == compose(d2, po.g)))
        throw Error(ErrorCode::non_commuting, "mediate_pushout: cocone does not commute");
    std::map<Value, Value> image_of;
    auto fill = [&](const Morphism& leg, const Morphism& d) {
        auto src = leg.source().elements();
        auto li = leg.images();
        for (std::size_t k = 0; k < src.size(); ++k) image_of.emplace(li[k], d(src[k]));
    };
    fill(po.left, d1);
    fill(po.right, d2);
    std::vector<Value> images;
    for (const auto& z : po.apex.elements()) images.push_back(image_of.at(z));
    return ElemMorphism(po.apex, d1.target(), std::move(images));
}

ElemObject ElemCategory::apply(const Functor& f, const Object& x) const {
    check_object(x);
    if (f.is_identity()) return x;
    return functor_image(f, x);
}

ElemMorphism ElemCategory::apply(const Functor& f, const Morphism& m) const {
    if (f.is_identity()) return m;
    auto src = apply(f, m.source());
    auto tgt = apply(f, m.target());
    return ElemMorphism(src, tgt, [f, m](const Value& t) { return f.map(t, m); });
}

bool ElemCategory::check_equivariant(const Morphism& f) const {
    if (!same_group(f.source().group(), group_) || !same_group(f.target().group(), group_))
        throw Error(ErrorCode::backend_mismatch, "check_equivariant: group mismatch");
    if (group_->order() == 1) return true;
    auto src = f.source().elements();
    auto fi = f.images();
    for (std::size_t g = 0; g < group_->order(); ++g)
        for (std::size_t i = 0; i < src.size(); ++i)
            if (!(fi[f.source().act_index(g, i)] == f.target().act(g, fi[i]))) return false;
    return true;
}

std::vector<std::vector<Value>> ElemCategory::orbits(const Object& x) const {
    check_object(x);
    auto els = x.elements();
    std::vector<bool> seen(els.size(), false);
    std::vector<std::vector<Value>> out;
    for (std::size_t i = 0; i < els.size(); ++i) {
        if (seen[i]) continue;
        std::vector<Value> orbit;
        for (std::size_t g = 0; g < group_->order(); ++g) {
            auto j = x.act_index(g, i);
            if (!seen[j]) {
                seen[j] = true;
                orbit.push_back(els[j]);
            }
        }
        normalize(orbit);
        out.push_back(std::move(orbit));
    }
    return out;
}

std::vector<std::size_t> ElemCategory::stabilizer(const Object& x, const Value& v) const {
    check_object(x);
    std::vector<std::size_t> out;
    for (std::size_t g = 0; g < group_->order(); ++g)
        if (x.act(g, v) == v) out.push_back(g);
    return out;
}

}  // namespace regbisim
