// Backend-specific ways to build and inspect relations: pair lists for the
// element backends, basis matrices for Vect.

#ifndef REGBISIM_BACKEND_RELATIONS_HPP
#define REGBISIM_BACKEND_RELATIONS_HPP

#include <string>
#include <utility>
#include <vector>

#include "regbisim/finset.hpp"
#include "regbisim/relation.hpp"
#include "regbisim/vect.hpp"

namespace regbisim {

using ElemRelation = Relation<ElemCategory>;
using VectRelation = Relation<VectCategory>;

/// Validates membership and, over a nontrivial group, closure under the
/// diagonal action (Error not_equivariant names the offending orbit).
ElemRelation relation_from_pairs(const ElemCategory& cat, const ElemObject& dom, const ElemObject& cod,
                                 const std::vector<std::pair<Value, Value>>& pairs);
/// The related pairs in canonical order.
std::vector<std::pair<Value, Value>> pairs_of(const ElemRelation& r);

/// Row vectors of length dim(dom) + dim(cod) spanning the relation.
VectRelation relation_from_basis(const VectCategory& cat, const VectObject& dom, const VectObject& cod,
                                 const ZpMatrix& rows);
/// Reduced echelon basis, one row per generator.
ZpMatrix basis_of(const VectRelation& r);

/// Human-readable names of target points missed by m (elements), or a
/// dimension summary (Vect).
std::vector<std::string> uncovered(const ElemCategory& cat, const ElemMorphism& m);
std::vector<std::string> uncovered(const VectCategory& cat, const VectMorphism& m);

/// Source points of h whose image is not hit by `through`.
std::vector<std::string> unliftable(const ElemCategory& cat, const ElemMorphism& h, const ElemMorphism& through);
std::vector<std::string> unliftable(const VectCategory& cat, const VectMorphism& h, const VectMorphism& through);

inline bool covers_pullbacks(const ElemFunctor& f) { return f.flags().covers_pullbacks; }
inline bool covers_pullbacks(const VectFunctor& f) { return f.covers_pullbacks(); }
inline const std::string& functor_name(const ElemFunctor& f) { return f.name(); }
inline const std::string& functor_name(const VectFunctor& f) { return f.name(); }

}  // namespace regbisim

#endif
