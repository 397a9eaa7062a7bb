#include "regbisim/backend_relations.hpp"

#include <algorithm>
#include <unordered_set>

namespace regbisim {

ElemRelation relation_from_pairs(const ElemCategory& cat, const ElemObject& dom, const ElemObject& cod,
                                 const std::vector<std::pair<Value, Value>>& pairs) {
    std::vector<Value> els;
    els.reserve(pairs.size());
    for (const auto& [x, y] : pairs) {
        if (!dom.contains(x)) throw Error(ErrorCode::dangling_identifier, "relation mentions unknown state " + x.str());
        if (!cod.contains(y)) throw Error(ErrorCode::dangling_identifier, "relation mentions unknown state " + y.str());
        els.push_back(Value::pair(x, y));
    }
    normalize(els);
    const auto& g = *cat.group();
    for (const auto& v : els)
        for (std::size_t h = 0; h < g.order(); ++h) {
            Value moved = Value::pair(dom.act(h, v[0]), cod.act(h, v[1]));
            if (!std::binary_search(els.begin(), els.end(), moved)) {
                std::string orbit;
                for (std::size_t k = 0; k < g.order(); ++k) {
                    if (k) orbit += ", ";
                    orbit += Value::pair(dom.act(k, v[0]), cod.act(k, v[1])).str();
                }
                throw Error(ErrorCode::not_equivariant,
                            "relation is not closed under the group action; orbit {" + orbit + "} is only partly present");
            }
        }
    auto r = ElemObject::make_explicit(cat.group(), els, [&](std::size_t h, const Value& v) {
        return Value::pair(dom.act(h, v[0]), cod.act(h, v[1]));
    });
    std::vector<Value> left, right;
    for (const auto& v : els) {
        left.push_back(v[0]);
        right.push_back(v[1]);
    }
    return ElemRelation::image_of(cat, ElemMorphism(r, dom, std::move(left)), ElemMorphism(r, cod, std::move(right)));
}

std::vector<std::pair<Value, Value>> pairs_of(const ElemRelation& r) {
    std::vector<std::pair<Value, Value>> out;
    for (const auto& v : r.apex().elements()) out.emplace_back(v[0], v[1]);
    return out;
}

VectRelation relation_from_basis(const VectCategory& cat, const VectObject& dom, const VectObject& cod,
                                 const ZpMatrix& rows) {
    if (rows.cols() != dom.dim + cod.dim)
        throw Error(ErrorCode::endpoint_mismatch, "relation basis vectors have the wrong length");
    VectObject r = cat.object(rows.rows());
    auto t = rows.transposed();
    return VectRelation::image_of(cat, cat.morphism(r, dom, t.block(0, 0, dom.dim, rows.rows())),
                                  cat.morphism(r, cod, t.block(dom.dim, 0, cod.dim, rows.rows())));
}

ZpMatrix basis_of(const VectRelation& r) { return r.mono().matrix().transposed(); }

std::vector<std::string> uncovered(const ElemCategory&, const ElemMorphism& m) {
    auto im = m.images();
    std::unordered_set<Value, ValueHash> hit(im.begin(), im.end());
    std::vector<std::string> out;
    for (const auto& y : m.target().elements())
        if (!hit.count(y)) out.push_back(y.str());
    return out;
}

std::vector<std::string> uncovered(const VectCategory&, const VectMorphism& m) {
    const auto rank = m.matrix().rank();
    if (rank == m.target().dim) return {};
    return {"image has dimension " + std::to_string(rank) + " inside a space of dimension " +
            std::to_string(m.target().dim)};
}

std::vector<std::string> unliftable(const ElemCategory&, const ElemMorphism& h, const ElemMorphism& through) {
    auto ti = through.images();
    std::unordered_set<Value, ValueHash> hit(ti.begin(), ti.end());
    std::vector<std::string> out;
    auto src = h.source().elements();
    auto hi = h.images();
    for (std::size_t i = 0; i < src.size(); ++i)
        if (!hit.count(hi[i])) out.push_back(src[i].str());
    return out;
}

std::vector<std::string> unliftable(const VectCategory&, const VectMorphism& h, const VectMorphism& through) {
    auto both = through.matrix().hconcat(h.matrix()).rank();
    auto alone = through.matrix().rank();
    if (both == alone) return {};
    return {"image of h leaves the lifted subspace in " + std::to_string(both - alone) + " dimension(s)"};
}

}  // namespace regbisim
