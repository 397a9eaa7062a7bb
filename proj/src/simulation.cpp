#include "regbisim/simulation.hpp"

#include <algorithm>

#include "regbisim/power.hpp"

namespace regbisim {

ElementOrder order_by_name(const std::string& name) {
    if (name == "discrete") return ElementOrder::discrete();
    if (name == "subset") return ElementOrder::subset();
    if (name == "cardinality") return ElementOrder::cardinality();
    throw Error(ErrorCode::invalid_argument, "unknown order '" + name + "' (expected discrete, subset or cardinality)");
}

ElementOrder pow_order(const ElementOrder& ord) {
    auto leq = ord.leq;
    return {"pow(" + ord.name + ")", ElementOrder::Kind::custom, [leq](const Value& a, const Value& b) {
                if (!a.is_set() || !b.is_set()) return false;
                return std::all_of(a.items().begin(), a.items().end(), [&](const Value& x) {
                    return std::any_of(b.items().begin(), b.items().end(), [&](const Value& y) { return leq(x, y); });
                });
            }};
}

namespace {

void require_parallel_maps(const ElemMorphism& f, const ElemMorphism& g) {
    if (!(f.source() == g.source()) || !(f.target() == g.target()))
        throw Error(ErrorCode::endpoint_mismatch, "order comparison needs parallel morphisms");
}

std::string pair_label(const Value& p) { return "(" + p[0].str() + ", " + p[1].str() + ")"; }

ValueFn as_fn(const ElemMorphism& m) {
    return [&m](const Value& v) { return m(v); };
}

}  // namespace

namespace {

/// Orders that compare sets only make sense for set-valued functors.
void require_order_fits(const ElemCategory& cat, const ElemFunctor& f, const ElementOrder& ord) {
    if (ord.kind != ElementOrder::Kind::subset && ord.name != "cardinality") return;
    const auto one = cat.apply(f, cat.terminal());
    for (const auto& t : one.elements())
        if (!t.is_set())
            throw Error(ErrorCode::invalid_argument,
                        "order '" + ord.name + "' compares sets, but functor " + f.name() + " has other values");
}

}  // namespace

bool leq_hom(const ElemMorphism& f, const ElemMorphism& g, const ElementOrder& ord) {
    require_parallel_maps(f, g);
    for (const auto& x : f.source().elements())
        if (!ord.leq(f(x), g(x))) return false;
    return true;
}

bool is_lax_coalgebra_hom(const ElemCategory& cat, const ElemMorphism& f, const Coalgebra<ElemCategory>& a,
                          const Coalgebra<ElemCategory>& b, const ElementOrder& ord) {
    require_same_functor(a, b);
    if (!(f.source() == a.carrier()) || !(f.target() == b.carrier()))
        throw Error(ErrorCode::endpoint_mismatch, "is_lax_coalgebra_hom: map is not between the carriers");
    return leq_hom(cat.compose(cat.apply(a.functor(), f), a.structure()), cat.compose(b.structure(), f), ord);
}

bool leq_pow(const ElemMorphism& f, const ElemMorphism& g, const ElementOrder& ord) {
    return leq_hom(f, g, pow_order(ord));
}

ElemRelation simulation_witnesses(const ElemCategory& cat, const ElemRelation& r, const Coalgebra<ElemCategory>& a,
                                  const Coalgebra<ElemCategory>& b, const ElementOrder& ord) {
    return lifted_witnesses(cat, r, a, b, &ord);
}

SimWitnessReport is_am_simulation(const ElemCategory& cat, const ElemRelation& r, const Coalgebra<ElemCategory>& a,
                                  const Coalgebra<ElemCategory>& b, const ElementOrder& ord) {
    require_order_fits(cat, a.functor(), ord);
    SimWitnessReport rep;
    rep.kind = CheckKind::simulation;
    auto w = simulation_witnesses(cat, r, a, b, ord);
    if (!cat.is_regular_epi(w.right())) {
        rep.failing_pairs = uncovered(cat, w.right());
    } else if (auto section = cat.solve_factorization(cat.identity(r.apex()), w.right())) {
        rep.verdict = true;
        rep.witness_map = cat.compose(w.left(), *section);
    } else {
        rep.notes.push_back("every related pair has simulation witnesses, but no equivariant choice of them exists");
    }
    rep.witness_relation = std::move(w);
    return rep;
}

bool verify_simulation_witness(const ElemCategory& cat, const ElemRelation& r, const Coalgebra<ElemCategory>& a,
                               const Coalgebra<ElemCategory>& b, const ElementOrder& ord, const ElemMorphism& w) {
    require_between(r, a, b);
    const auto& f = a.functor();
    if (!(w.source() == r.apex()) || !(w.target() == cat.apply(f, r.apex()))) return false;
    auto fl = cat.apply(f, r.left());
    auto fr = cat.apply(f, r.right());
    return leq_hom(cat.compose(a.structure(), r.left()), cat.compose(fl, w), ord) &&
           leq_hom(cat.compose(fr, w), cat.compose(b.structure(), r.right()), ord);
}

SimWitnessReport is_toposal_am_simulation(const ElemCategory& cat, const ElemRelation& r,
                                          const Coalgebra<ElemCategory>& a, const Coalgebra<ElemCategory>& b,
                                          const ElementOrder& ord) {
    require_order_fits(cat, a.functor(), ord);
    SimWitnessReport rep;
    rep.kind = CheckKind::toposal_simulation;
    auto w = simulation_witnesses(cat, r, a, b, ord);
    const auto& rel = r.apex();
    std::vector<std::vector<Value>> fibers(rel.size());
    for (std::size_t i = 0; i < w.apex().size(); ++i) {
        const Value& v = w.apex().elements()[i];
        fibers[index_in(rel.elements(), w.right()(v))].push_back(w.left()(v));
    }
    std::vector<Value> images;
    for (std::size_t i = 0; i < fibers.size(); ++i) {
        if (fibers[i].empty()) rep.failing_pairs.push_back(pair_label(rel.elements()[i]));
        images.push_back(Value::set(std::move(fibers[i])));
    }
    auto pfr = pow_of(cat, cat.apply(a.functor(), rel));
    auto wmap = cat.morphism(rel, pfr, std::move(images));
    rep.verdict = rep.failing_pairs.empty() && verify_toposal_simulation_witness(cat, r, a, b, ord, wmap);
    rep.witness_map = std::move(wmap);
    rep.witness_relation = std::move(w);
    return rep;
}

bool verify_toposal_simulation_witness(const ElemCategory& cat, const ElemRelation& r,
                                       const Coalgebra<ElemCategory>& a, const Coalgebra<ElemCategory>& b,
                                       const ElementOrder& ord, const ElemMorphism& w) {
    require_between(r, a, b);
    const auto& f = a.functor();
    const auto& rel = r.apex();
    auto fr = cat.apply(f, rel);
    if (!(w.source() == rel) || !(w.target() == pow_of(cat, fr))) return false;
    const auto le = pow_order(ord);
    const auto left = as_fn(r.left());
    const auto right = as_fn(r.right());
    for (const auto& p : rel.elements()) {
        std::vector<Value> ls, rs;
        const Value fiber = w(p);
        for (const auto& t : fiber.items()) {
            ls.push_back(f.map(t, left));
            rs.push_back(f.map(t, right));
        }
        const Value alpha_x = Value::set({a.structure()(r.left()(p))});
        const Value beta_y = Value::set({b.structure()(r.right()(p))});
        if (!le.leq(alpha_x, Value::set(std::move(ls))) || !le.leq(Value::set(std::move(rs)), beta_y)) return false;
    }
    return true;
}

ElemRelation similarity(const ElemCategory& cat, const Coalgebra<ElemCategory>& a, const Coalgebra<ElemCategory>& b,
                        const ElementOrder& ord) {
    require_same_functor(a, b);
    require_order_fits(cat, a.functor(), ord);
    auto cur = rel_full(cat, a.carrier(), b.carrier());
    while (true) {
        auto w = simulation_witnesses(cat, cur, a, b, ord);
        auto next = ElemRelation::image_of(cat, cat.compose(cur.left(), w.right()), cat.compose(cur.right(), w.right()));
        if (next == cur) return cur;
        cur = std::move(next);
    }
}

LawReport equality_left_reduction(const ElemCategory& cat, const ElemRelation& r, const Coalgebra<ElemCategory>& a,
                                  const Coalgebra<ElemCategory>& b, const ElementOrder& ord) {
    require_between(r, a, b);
    LawReport rep;
    rep.name = "equality-left reduction";
    const auto& f = a.functor();
    const auto& rel = r.apex();
    const auto all = f.enumerate(rel.elements());
    const auto left = as_fn(r.left());
    const auto right = as_fn(r.right());
    auto core = simulation_witnesses(cat, r, a, b, ord);
    for (const auto& p : rel.elements()) {
        const Value ax = a.structure()(r.left()(p));
        const Value by = b.structure()(r.right()(p));
        bool lax = false, strict = false;
        for (const auto& t : all) {
            const Value l = f.map(t, left);
            if (!ord.leq(f.map(t, right), by)) continue;
            if (ord.leq(ax, l)) lax = true;
            if (l == ax) strict = true;
        }
        bool covered = false;
        for (const auto& v : core.apex().elements())
            if (core.right()(v) == p) covered = true;
        ++rep.checked;
        if (lax != strict || strict != covered)
            rep.fail("pair " + pair_label(p) + ": <=-left " + (lax ? "yes" : "no") + ", =-left " +
                     (strict ? "yes" : "no") + ", canonical " + (covered ? "yes" : "no"));
    }
    return rep;
}

// --- good order probes -------------------------------------------------------

namespace {

constexpr std::size_t kProbeEnumerationLimit = 4096;

struct Probe {
    const ElemCategory& cat;
    const ElemFunctor& f;
    const ElementOrder& ord;
    Rng& rng;
    std::size_t max_carrier;

    /// Random carrier, small enough for F of it to be enumerated.
    ElemObject carrier(const std::string& prefix) const {
        std::size_t top = 1;
        for (std::size_t n = 2; n <= max_carrier; ++n)
            if (auto c = f.count(n); c && *c <= kProbeEnumerationLimit) top = n;
        return random_object(cat, rng, uniform(rng, 1, top), prefix);
    }

    std::optional<std::vector<Value>> image(const ElemObject& y) const {
        auto n = f.count(y.size());
        if (!n || *n > kProbeEnumerationLimit) return std::nullopt;
        return f.enumerate(y.elements());
    }

    const Value& pick(const std::vector<Value>& v) const { return v[uniform(rng, 0, v.size() - 1)]; }

    std::vector<Value> above(const std::vector<Value>& all, const Value& a) const {
        std::vector<Value> out;
        for (const auto& b : all)
            if (ord.leq(a, b)) out.push_back(b);
        return out;
    }
    std::vector<Value> below(const std::vector<Value>& all, const Value& a) const {
        std::vector<Value> out;
        for (const auto& b : all)
            if (ord.leq(b, a)) out.push_back(b);
        return out;
    }
};

std::string describe(const ElemMorphism& m) {
    std::string s = "{";
    for (const auto& x : m.source().elements()) s += (s.size() > 1 ? ", " : "") + x.str() + " -> " + m(x).str();
    return s + "}";
}

void preorder_laws(const Probe& pr, LawReport& rep, std::size_t trials) {
    for (std::size_t i = 0; i < trials; ++i) {
        auto y = pr.carrier("y");
        auto fy = pr.image(y);
        if (!fy) {
            ++rep.skipped;
            continue;
        }
        const Value& a = pr.pick(*fy);
        const Value& b = pr.pick(*fy);
        const Value& c = pr.pick(*fy);
        ++rep.checked;
        if (!pr.ord.leq(a, a)) rep.fail("not reflexive at " + a.str());
        if (pr.ord.leq(a, b) && pr.ord.leq(b, c) && !pr.ord.leq(a, c))
            rep.fail("not transitive: " + a.str() + " <= " + b.str() + " <= " + c.str());
    }
}

/// alpha <= beta : X -> FY implies F g . alpha . h <= F g . beta . h.
void axiom_one(const Probe& pr, LawReport& rep, std::size_t trials) {
    const auto& cat = pr.cat;
    for (std::size_t i = 0; i < trials; ++i) {
        auto x = pr.carrier("x");
        auto y = pr.carrier("y");
        auto z = pr.carrier("z");
        auto w = pr.carrier("w");
        auto fy = pr.image(y);
        if (!fy || !pr.image(w)) {
            ++rep.skipped;
            continue;
        }
        std::vector<Value> lo, hi;
        for (std::size_t k = 0; k < x.size(); ++k) {
            lo.push_back(pr.pick(*fy));
            hi.push_back(pr.pick(pr.above(*fy, lo.back())));
        }
        auto fyo = cat.apply(pr.f, y);
        ElemMorphism alpha(x, fyo, std::move(lo));
        ElemMorphism beta(x, fyo, std::move(hi));
        auto g = *random_morphism(cat, pr.rng, y, w);
        auto h = *random_morphism(cat, pr.rng, z, x);
        auto fg = cat.apply(pr.f, g);
        auto lhs = cat.compose(fg, cat.compose(alpha, h));
        auto rhs = cat.compose(fg, cat.compose(beta, h));
        ++rep.checked;
        if (!leq_hom(lhs, rhs, pr.ord))
            rep.fail("alpha = " + describe(alpha) + " <= beta = " + describe(beta) + " but not after g = " + describe(g) +
                     ": " + describe(lhs) + " vs " + describe(rhs));
    }
}

/// h <= F g . k implies some k' <= k with h = F g . k'.
void axiom_two(const Probe& pr, LawReport& rep, std::size_t trials) {
    const auto& cat = pr.cat;
    for (std::size_t i = 0; i < trials; ++i) {
        auto x = pr.carrier("x");
        auto y = pr.carrier("y");
        auto w = pr.carrier("w");
        auto fy = pr.image(y);
        auto fw = pr.image(w);
        if (!fy || !fw) {
            ++rep.skipped;
            continue;
        }
        auto g = *random_morphism(cat, pr.rng, y, w);
        const ValueFn gf = as_fn(g);
        ++rep.checked;
        for (const auto& xe : x.elements()) {
            (void)xe;
            const Value k = pr.pick(*fy);
            const Value h = pr.pick(pr.below(*fw, pr.f.map(k, gf)));
            const auto cands = pr.below(*fy, k);
            const bool found = std::any_of(cands.begin(), cands.end(),
                                           [&](const Value& kp) { return pr.f.map(kp, gf) == h; });
            if (!found) {
                rep.fail("g = " + describe(g) + ", k = " + k.str() + ", h = " + h.str() + ": no k' <= k with F g (k') = h");
                break;
            }
        }
    }
}

}  // namespace

std::vector<LawReport> good_order_suite(const ElemFunctor& f, const ElementOrder& ord, Rng& rng,
                                        const GoodOrderOptions& opts) {
    const ElemCategory cat;
    std::vector<LawReport> out;
    auto run = [&](const ElemFunctor& fun, const ElementOrder& o) {
        Probe pr{cat, fun, o, rng, opts.max_carrier};
        LawReport pre, one, two;
        pre.name = "preorder " + o.name + " on " + fun.name();
        one.name = "axiom 1 " + o.name + " on " + fun.name();
        two.name = "axiom 2 " + o.name + " on " + fun.name();
        preorder_laws(pr, pre, opts.trials);
        axiom_one(pr, one, opts.trials);
        axiom_two(pr, two, opts.trials);
        out.push_back(std::move(pre));
        out.push_back(std::move(one));
        out.push_back(std::move(two));
    };
    run(f, ord);
    const auto pf = ElemFunctor::composite(ElemFunctor::pow(), f);
    const auto pord = pow_order(ord);
    run(pf, pord);
    return out;
}

}  // namespace regbisim
