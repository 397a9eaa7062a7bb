// Small builders shared by the unit tests and the acceptance runner.

#ifndef REGBISIM_TESTS_SUPPORT_HPP
#define REGBISIM_TESTS_SUPPORT_HPP

#include <initializer_list>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "oracles/oracles.hpp"
#include "regbisim/backend_relations.hpp"
#include "regbisim/random.hpp"

namespace support {

using namespace regbisim;
using NamePairs = std::set<std::pair<std::string, std::string>>;

inline Value A(const std::string& s) { return Value::atom(s); }
inline Value S(std::vector<Value> items) { return Value::set(std::move(items)); }

inline ElemMorphism fn(const ElemCategory& cat, const ElemObject& x, const ElemObject& y,
                       const std::map<std::string, std::string>& table) {
    std::vector<Value> images;
    for (const auto& e : x.elements()) images.push_back(A(table.at(e.name())));
    return cat.morphism(x, y, std::move(images));
}

inline ElemRelation rel(const ElemCategory& cat, const ElemObject& x, const ElemObject& y, const NamePairs& pairs) {
    std::vector<std::pair<Value, Value>> ps;
    for (const auto& [a, b] : pairs) ps.emplace_back(A(a), A(b));
    return relation_from_pairs(cat, x, y, ps);
}

inline NamePairs names(const ElemRelation& r) {
    NamePairs out;
    for (const auto& [a, b] : pairs_of(r)) out.emplace(a.name(), b.name());
    return out;
}

inline std::map<std::string, std::size_t> index_by_name(const std::vector<std::string>& names) {
    std::map<std::string, std::size_t> m;
    for (std::size_t i = 0; i < names.size(); ++i) m[names[i]] = i;
    return m;
}

inline oracle::Lts to_oracle(const Lts& l) {
    const auto st = index_by_name(l.states);
    const auto lb = index_by_name(l.labels);
    oracle::Lts o{l.states.size(), l.labels.size(), {}};
    for (const auto& [s, a, t] : l.transitions) o.edges.emplace_back(st.at(s), lb.at(a), st.at(t));
    return o;
}

/// Relation pairs as state indices of the two systems.
inline oracle::Pairs indices(const ElemRelation& r, const Lts& a, const Lts& b) {
    const auto ia = index_by_name(a.states);
    const auto ib = index_by_name(b.states);
    oracle::Pairs out;
    for (const auto& [x, y] : pairs_of(r)) out.emplace(ia.at(x.name()), ib.at(y.name()));
    return out;
}

inline oracle::Automaton to_oracle(const WeightedAutomaton& w) {
    oracle::Automaton o{w.p, w.dim, w.output, {}};
    for (const auto& m : w.matrices) o.matrices.emplace_back(m.data().begin(), m.data().end());
    return o;
}

inline std::set<std::vector<std::uint32_t>> vectors_of(const VectRelation& r) {
    const auto b = basis_of(r);
    std::vector<std::vector<std::uint32_t>> rows;
    for (std::size_t i = 0; i < b.rows(); ++i) {
        std::vector<std::uint32_t> row;
        for (std::size_t j = 0; j < b.cols(); ++j) row.push_back(b.at(i, j));
        rows.push_back(std::move(row));
    }
    return oracle::span(b.prime(), r.dom().dim + r.cod().dim, rows);
}

}  // namespace support

#endif
