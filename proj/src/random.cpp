#include "regbisim/random.hpp"

#include <algorithm>
#include <map>

namespace regbisim {

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

ElemObject orbit_sum(const ElemCategory& cat, const std::vector<std::vector<std::size_t>>& subgroups,
                     const std::string& prefix) {
    const auto& g = *cat.group();
    struct Point {
        Value name;
        std::size_t orbit;
        std::vector<std::size_t> coset;  // sorted group elements a.H
    };
    std::vector<Point> points;
    for (std::size_t o = 0; o < subgroups.size(); ++o) {
        std::vector<std::vector<std::size_t>> cosets;
        for (std::size_t a = 0; a < g.order(); ++a) {
            std::vector<std::size_t> c;
            for (auto x : subgroups[o]) c.push_back(g.mul(a, x));
            std::sort(c.begin(), c.end());
            if (std::find(cosets.begin(), cosets.end(), c) == cosets.end()) cosets.push_back(c);
        }
        for (std::size_t k = 0; k < cosets.size(); ++k)
            points.push_back({Value::atom(prefix + std::to_string(o) + "_" + std::to_string(k)), o, cosets[k]});
    }
    std::sort(points.begin(), points.end(), [](const Point& a, const Point& b) { return a.name < b.name; });
    std::vector<Value> els;
    for (const auto& p : points) els.push_back(p.name);
    std::vector<std::vector<std::size_t>> action(g.order(), std::vector<std::size_t>(points.size()));
    for (std::size_t x = 0; x < g.order(); ++x)
        for (std::size_t i = 0; i < points.size(); ++i) {
            std::vector<std::size_t> moved;
            for (auto c : points[i].coset) moved.push_back(g.mul(x, c));
            std::sort(moved.begin(), moved.end());
            for (std::size_t j = 0; j < points.size(); ++j)
                if (points[j].orbit == points[i].orbit && points[j].coset == moved) action[x][i] = j;
        }
    return cat.gset_object(std::move(els), action);
}

ElemObject random_object(const ElemCategory& cat, Rng& rng, std::size_t n, const std::string& prefix) {
    const auto& g = *cat.group();
    if (g.order() == 1) {
        std::vector<std::string> names;
        for (std::size_t i = 0; i < n; ++i) names.push_back(prefix + std::to_string(i));
        return cat.atoms(names);
    }
    const auto subgroups = g.subgroups();
    std::vector<std::vector<std::size_t>> chosen;
    std::size_t total = 0;
    for (std::size_t attempts = 0; total < n && attempts < 64; ++attempts) {
        const auto& h = subgroups[uniform(rng, 0, subgroups.size() - 1)];
        const std::size_t size = g.order() / h.size();
        if (total > 0 && total + size > n) continue;
        chosen.push_back(h);
        total += size;
    }
    return orbit_sum(cat, chosen, prefix);
}

std::vector<ElemObject> small_objects(const ElemCategory& cat, std::size_t max_size, const std::string& prefix) {
    const auto& g = *cat.group();
    const auto subgroups = g.subgroups();
    std::vector<ElemObject> out;
    std::vector<std::vector<std::size_t>> chosen;
    // Multisets as non-decreasing index sequences.
    auto rec = [&](auto&& self, std::size_t from, std::size_t total) -> void {
        out.push_back(orbit_sum(cat, chosen, prefix));
        for (std::size_t i = from; i < subgroups.size(); ++i) {
            const std::size_t size = g.order() / subgroups[i].size();
            if (total + size > max_size) continue;
            chosen.push_back(subgroups[i]);
            self(self, i, total + size);
            chosen.pop_back();
        }
    };
    rec(rec, 0, 0);
    return out;
}

std::vector<ElemMorphism> all_morphisms(const ElemCategory& cat, const ElemObject& x, const ElemObject& y) {
    std::vector<ElemMorphism> out;
    const auto xs = x.elements();
    const auto ys = y.elements();
    if (xs.empty()) return {ElemMorphism(x, y, std::vector<Value>{})};
    if (ys.empty()) return out;
    std::vector<std::size_t> idx(xs.size(), 0);
    while (true) {
        std::vector<Value> images;
        for (auto i : idx) images.push_back(ys[i]);
        ElemMorphism m(x, y, std::move(images));
        if (cat.check_equivariant(m)) out.push_back(std::move(m));
        std::size_t k = 0;
        while (k < idx.size() && ++idx[k] == ys.size()) idx[k++] = 0;
        if (k == idx.size()) break;
    }
    return out;
}

namespace {

/// Picks, for every orbit of X, a target compatible with the stabiliser.
std::optional<std::vector<Value>> equivariant_choice(const ElemCategory& cat, Rng& rng, const ElemObject& x,
                                                     std::span<const Value> candidates, const ElemObject& y) {
    const auto& g = *cat.group();
    auto xs = x.elements();
    std::vector<std::optional<Value>> out(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (out[i]) continue;
        std::vector<std::size_t> stab;
        for (std::size_t h = 0; h < g.order(); ++h)
            if (x.act_index(h, i) == i) stab.push_back(h);
        std::vector<Value> ok;
        for (const auto& b : candidates)
            if (std::all_of(stab.begin(), stab.end(), [&](std::size_t h) { return y.act(h, b) == b; }))
                ok.push_back(b);
        if (ok.empty()) return std::nullopt;
        const Value& b = ok[uniform(rng, 0, ok.size() - 1)];
        for (std::size_t h = 0; h < g.order(); ++h) out[x.act_index(h, i)] = y.act(h, b);
    }
    std::vector<Value> images;
    for (auto& v : out) images.push_back(std::move(*v));
    return images;
}

}  // namespace

std::optional<ElemMorphism> random_morphism(const ElemCategory& cat, Rng& rng, const ElemObject& x,
                                            const ElemObject& y) {
    auto images = equivariant_choice(cat, rng, x, y.elements(), y);
    if (!images) return std::nullopt;
    return cat.morphism(x, y, std::move(*images));
}

ElemRelation random_relation(const ElemCategory& cat, Rng& rng, const ElemObject& x, const ElemObject& y,
                             double density) {
    auto prod = cat.product(x, y).object;
    std::vector<std::pair<Value, Value>> pairs;
    for (const auto& orbit : cat.orbits(prod))
        if (coin(rng, density))
            for (const auto& v : orbit) pairs.emplace_back(v[0], v[1]);
    return relation_from_pairs(cat, x, y, pairs);
}

std::optional<Coalgebra<ElemCategory>> random_coalgebra(const ElemCategory& cat, Rng& rng, const ElemFunctor& f,
                                                        const ElemObject& x) {
    auto fx = cat.apply(f, x);
    auto images = equivariant_choice(cat, rng, x, fx.elements(), fx);
    if (!images) return std::nullopt;
    return Coalgebra<ElemCategory>(cat, f, cat.morphism(x, fx, std::move(*images)));
}

Lts random_lts(Rng& rng, std::size_t states, std::size_t labels, double density, const std::string& prefix) {
    Lts lts;
    for (std::size_t i = 0; i < states; ++i) lts.states.push_back(prefix + std::to_string(i));
    for (std::size_t i = 0; i < labels; ++i) lts.labels.push_back(std::string(1, static_cast<char>('a' + i)));
    for (const auto& s : lts.states)
        for (const auto& a : lts.labels)
            for (const auto& t : lts.states)
                if (coin(rng, density)) lts.transitions.emplace_back(s, a, t);
    return lts;
}

Coalgebra<ElemCategory> lts_coalgebra(const ElemCategory& cat, const Lts& lts) {
    auto f = ElemFunctor::pow_labels(lts.labels);
    auto x = cat.atoms(lts.states);
    std::map<Value, std::vector<Value>> succ;
    for (const auto& [s, a, t] : lts.transitions)
        succ[Value::atom(s)].push_back(Value::pair(Value::atom(a), Value::atom(t)));
    std::vector<Value> images;
    for (const auto& s : x.elements()) images.push_back(Value::set(succ[s]));
    return Coalgebra<ElemCategory>(cat, f, cat.morphism(x, cat.apply(f, x), std::move(images)));
}

ZpMatrix random_matrix(Rng& rng, std::uint32_t p, std::size_t rows, std::size_t cols) {
    std::vector<ZpMatrix::Entry> e(rows * cols);
    for (auto& v : e) v = static_cast<ZpMatrix::Entry>(uniform(rng, 0, p - 1));
    return ZpMatrix(p, rows, cols, std::move(e));
}

VectMorphism random_morphism(const VectCategory& cat, Rng& rng, const VectObject& x, const VectObject& y) {
    return cat.morphism(x, y, random_matrix(rng, cat.prime(), y.dim, x.dim));
}

VectRelation random_relation(const VectCategory& cat, Rng& rng, const VectObject& x, const VectObject& y) {
    const std::size_t n = x.dim + y.dim;
    return relation_from_basis(cat, x, y, random_matrix(rng, cat.prime(), uniform(rng, 0, n), n));
}

WeightedAutomaton random_automaton(Rng& rng, std::uint32_t p, std::size_t dim, std::size_t letters) {
    WeightedAutomaton w;
    w.p = p;
    w.dim = dim;
    for (std::size_t i = 0; i < letters; ++i) w.alphabet.push_back(std::string(1, static_cast<char>('a' + i)));
    for (std::size_t i = 0; i < dim; ++i) w.output.push_back(static_cast<std::uint32_t>(uniform(rng, 0, p - 1)));
    for (std::size_t i = 0; i < letters; ++i) w.matrices.push_back(random_matrix(rng, p, dim, dim));
    return w;
}

Coalgebra<VectCategory> automaton_coalgebra(const VectCategory& cat, const WeightedAutomaton& w) {
    auto f = VectFunctor::linear(w.alphabet.size());
    ZpMatrix alpha(w.p, 1, w.dim, std::vector<ZpMatrix::Entry>(w.output.begin(), w.output.end()));
    for (const auto& m : w.matrices) alpha = alpha.vconcat(m.transposed());
    auto x = cat.object(w.dim);
    return Coalgebra<VectCategory>(cat, f, cat.morphism(x, f(x), std::move(alpha)));
}

}  // namespace regbisim
