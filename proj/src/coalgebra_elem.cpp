#include "regbisim/coalgebra.hpp"

namespace regbisim {

Relation<ElemCategory> lifted_witnesses(const ElemCategory& cat, const Relation<ElemCategory>& r,
                                        const Coalgebra<ElemCategory>& a, const Coalgebra<ElemCategory>& b,
                                        const ElementOrder* order) {
    require_between(r, a, b);
    const auto& f = a.functor();
    const auto& rel = r.apex();
    auto fr = cat.apply(f, rel);
    auto pairs = rel.elements();
    const ValueFn first = [](const Value& v) { return v[0]; };
    const ValueFn second = [](const Value& v) { return v[1]; };

    std::vector<Value> w;
    for (const auto& p : pairs) {
        LiftProblem prob{pairs, first, second, a.structure()(p[0]), b.structure()(p[1]), order};
        for (auto& t : f.lift(prob)) w.push_back(Value::pair(std::move(t), p));
    }
    normalize(w);
    auto wobj = ElemObject::make_explicit(cat.group(), w, [&](std::size_t g, const Value& v) {
        return Value::pair(fr.act(g, v[0]), rel.act(g, v[1]));
    });
    std::vector<Value> left, right;
    for (const auto& v : w) {
        left.push_back(v[0]);
        right.push_back(v[1]);
    }
    return Relation<ElemCategory>::image_of(cat, ElemMorphism(wobj, fr, std::move(left)),
                                            ElemMorphism(wobj, rel, std::move(right)));
}

Relation<ElemCategory> witness_core(const ElemCategory& cat, const Relation<ElemCategory>& r,
                                    const Coalgebra<ElemCategory>& a, const Coalgebra<ElemCategory>& b) {
    return lifted_witnesses(cat, r, a, b, nullptr);
}

}  // namespace regbisim
