#include "regbisim/power.hpp"

#include <map>
#include <mutex>
#include <unordered_map>

namespace regbisim {

namespace {

const ValueFn first = [](const Value& v) { return v[0]; };
const ValueFn second = [](const Value& v) { return v[1]; };

ElemMorphism singleton_map(const ElemCategory& cat, const ElemObject& x) {
    return ElemMorphism(x, pow_of(cat, x), [](const Value& v) { return Value::sorted_set({v}); });
}

/// Union P(P(A)) -> P(A), where pa is P(A).
ElemMorphism union_map(const ElemCategory& cat, const ElemObject& pa) {
    return ElemMorphism(pow_of(cat, pa), pa, [](const Value& uu) {
        std::vector<Value> out;
        for (const auto& u : uu.items()) out.insert(out.end(), u.items().begin(), u.items().end());
        return Value::set(std::move(out));
    });
}

}  // namespace

ElemObject pow_of(const ElemCategory& cat, const ElemObject& x) { return cat.apply(ElemFunctor::pow(), x); }

PowerObject power_object(const ElemCategory& cat, const ElemObject& x) {
    auto px = pow_of(cat, x);
    std::vector<std::pair<Value, Value>> pairs;
    for (const auto& u : px.elements())
        for (const auto& v : u.items()) pairs.emplace_back(v, u);
    auto e = relation_from_pairs(cat, x, px, pairs);
    return {x, px, std::move(e)};
}

void power_object(const VectCategory&, const VectObject&) {
    throw Error(ErrorCode::capability, "vector spaces have no power objects");
}

ElemMorphism xi(const ElemCategory& cat, const ElemRelation& r) {
    std::unordered_map<Value, std::vector<Value>, ValueHash> fibre;
    for (const auto& [x, y] : pairs_of(r)) fibre[y].push_back(x);
    std::vector<Value> images;
    for (const auto& y : r.cod().elements()) {
        auto it = fibre.find(y);
        images.push_back(it == fibre.end() ? Value::sorted_set({}) : Value::set(it->second));
    }
    return cat.morphism(r.cod(), pow_of(cat, r.dom()), std::move(images));
}

ElemRelation relation_of(const ElemCategory& cat, const ElemMorphism& f, const ElemObject& x) {
    auto po = power_object(cat, x);
    if (!(f.target() == po.pow)) throw Error(ErrorCode::endpoint_mismatch, "relation_of: morphism does not land in P(X)");
    auto pb = cat.pullback(po.membership.right(), f);
    return ElemRelation::image_of(cat, cat.compose(po.membership.left(), pb.left), pb.right);
}

ElemMorphism pow_map(const ElemCategory& cat, const ElemMorphism& f) {
    auto po = power_object(cat, f.source());
    auto rel = ElemRelation::image_of(cat, cat.compose(f, po.membership.left()), po.membership.right());
    return xi(cat, rel);
}

ElemMorphism pow_direct_image(const ElemCategory& cat, const ElemMorphism& f) {
    return cat.apply(ElemFunctor::pow(), f);
}

ElemMorphism eta(const ElemCategory& cat, const ElemObject& x) { return xi(cat, rel_identity(cat, x)); }

ElemMorphism mu(const ElemCategory& cat, const ElemObject& x) { return union_map(cat, pow_of(cat, x)); }

ElemMorphism mu_via_relations(const ElemCategory& cat, const ElemObject& x) {
    auto e1 = power_object(cat, x);
    auto e2 = power_object(cat, e1.pow);
    return xi(cat, rel_compose(cat, e1.membership, e2.membership));
}

ElemMorphism kleisli_compose(const ElemCategory& cat, const ElemMorphism& f, const ElemMorphism& g) {
    auto pf = pow_direct_image(cat, f);
    return cat.compose(union_map(cat, f.target()), cat.compose(pf, g));
}

ElemMorphism pseudo_inverse(const ElemCategory& cat, const ElemMorphism& f) { return xi(cat, graph(cat, f)); }

ElemMorphism proto_dist(const ElemCategory& cat, const ElemFunctor& f, const ElemObject& x) {
    auto po = power_object(cat, x);
    auto fx = cat.apply(f, x);
    fx.elements();  // fail early if FX is too large to scan
    auto source = cat.apply(f, po.pow);
    auto target = pow_of(cat, fx);
    struct Memo {
        std::mutex m;
        std::unordered_map<Value, Value, ValueHash> values;
    };
    auto memo = std::make_shared<Memo>();
    auto e = po.membership.apex();
    return ElemMorphism(source, target, [f, fx, e, memo](const Value& t) {
        {
            std::lock_guard lock(memo->m);
            if (auto it = memo->values.find(t); it != memo->values.end()) return it->second;
        }
        std::vector<Value> out;
        for (const auto& s : fx.elements()) {
            LiftProblem prob{e.elements(), first, second, s, t, nullptr};
            if (!f.lift(prob).empty()) out.push_back(s);
        }
        Value v = Value::sorted_set(std::move(out));
        std::lock_guard lock(memo->m);
        memo->values.emplace(t, v);
        return v;
    });
}

ElemMorphism proto_dist_by_image(const ElemCategory& cat, const ElemFunctor& f, const ElemObject& x) {
    auto po = power_object(cat, x);
    auto e = po.membership.apex();
    auto fe = cat.apply(f, e);
    fe.elements();
    auto image = ElemRelation::image_of(cat, cat.apply(f, po.membership.left()), cat.apply(f, po.membership.right()));
    return xi(cat, image);
}

ElemMorphism strength(const ElemCategory& cat, const ElemObject& x, const ElemObject& y) {
    return proto_dist(cat, ElemFunctor::const_product_left(x), y);
}

ElemMorphism costrength(const ElemCategory& cat, const ElemObject& x, const ElemObject& y) {
    return proto_dist(cat, ElemFunctor::const_product_right(y), x);
}

CommutativityResult commutativity_check(const ElemCategory& cat, const ElemObject& x, const ElemObject& y,
                                        std::span<const std::pair<Value, Value>> inputs) {
    auto px = pow_of(cat, x);
    auto py = pow_of(cat, y);
    auto st = strength(cat, x, y);         // (x, V) |-> {x} x V
    auto cost = costrength(cat, x, y);     // (U, y) |-> U x {y}
    auto st_p = strength(cat, px, y);      // (U, V) |-> {(U, y) : y in V}
    auto cost_p = costrength(cat, x, py);  // (U, V) |-> {(x, V) : x in U}
    CommutativityResult res;
    for (const auto& [u, v] : inputs) {
        Value uv = Value::pair(u, v);
        // Union of images flattens P(P(X x Y)) to P(X x Y).
        auto flatten = [](const Value& s, const ElemMorphism& m) {
            std::vector<Value> out;
            for (const auto& e : s.items()) {
                auto part = m(e);
                out.insert(out.end(), part.items().begin(), part.items().end());
            }
            return Value::set(std::move(out));
        };
        Value lhs = flatten(cost_p(uv), st);
        Value rhs = flatten(st_p(uv), cost);
        ++res.checked;
        if (!(lhs == rhs)) {
            res.ok = false;
            res.counterexample = std::make_pair(u, v);
            return res;
        }
    }
    return res;
}

CommutativityResult commutativity_check(const ElemCategory& cat, const ElemObject& x, const ElemObject& y) {
    std::vector<std::pair<Value, Value>> inputs;
    const auto px = pow_of(cat, x);
    const auto py = pow_of(cat, y);
    for (const auto& u : px.elements())
        for (const auto& v : py.elements()) inputs.emplace_back(u, v);
    return commutativity_check(cat, x, y, inputs);
}

WitnessReport<ElemCategory> is_toposal_am_bisimulation(const ElemCategory& cat, const ElemRelation& r,
                                                       const Coalgebra<ElemCategory>& a,
                                                       const Coalgebra<ElemCategory>& b) {
    require_between(r, a, b);
    const auto& f = a.functor();
    const auto& rel = r.apex();
    auto pfr = pow_of(cat, cat.apply(f, rel));
    WitnessReport<ElemCategory> rep;
    rep.kind = CheckKind::toposal;
    std::vector<Value> images;
    for (const auto& p : rel.elements()) {
        LiftProblem prob{rel.elements(), first, second, a.structure()(p[0]), b.structure()(p[1]), nullptr};
        auto w = f.lift(prob);
        if (w.empty()) rep.failing_pairs.push_back(p.str());
        images.push_back(Value::sorted_set(std::move(w)));
    }
    auto w = cat.morphism(rel, pfr, std::move(images));
    rep.verdict = rep.failing_pairs.empty() && verify_toposal_witness(cat, r, a, b, w);
    rep.witness_map = std::move(w);
    return rep;
}

bool verify_toposal_witness(const ElemCategory& cat, const ElemRelation& r, const Coalgebra<ElemCategory>& a,
                            const Coalgebra<ElemCategory>& b, const ElemMorphism& w) {
    require_between(r, a, b);
    const auto& f = a.functor();
    if (!(w.source() == r.apex()) || !(w.target() == pow_of(cat, cat.apply(f, r.apex())))) return false;
    auto side = [&](const ElemMorphism& leg, const ElemMorphism& structure) {
        auto lhs = cat.compose(cat.apply(ElemFunctor::pow(), cat.apply(f, leg)), w);
        auto rhs = cat.compose(singleton_map(cat, structure.target()), cat.compose(structure, leg));
        return lhs == rhs;
    };
    return side(r.left(), a.structure()) && side(r.right(), b.structure());
}

}  // namespace regbisim
