#include <algorithm>

#include "laws_common.hpp"
#include "regbisim/power.hpp"
#include "regbisim/simulation.hpp"

namespace regbisim {

using namespace detail;

namespace {

constexpr std::size_t kLiftEnumerationLimit = 4096;

template <class C>
struct Instance {
    Coalgebra<C> a;
    Coalgebra<C> b;
    Relation<C> r;
};

/// Drops random orbits until F(R) is small enough to enumerate.
ElemRelation shrink_for(const ElemCategory& cat, const ElemFunctor& f, ElemRelation r, Rng& rng) {
    while (true) {
        auto n = f.count(r.apex().size());
        if (n && *n <= kLiftEnumerationLimit) return r;
        auto orbits = cat.orbits(r.apex());
        auto drop = orbits[uniform(rng, 0, orbits.size() - 1)];
        std::vector<std::pair<Value, Value>> keep;
        for (const auto& v : r.apex().elements())
            if (std::find(drop.begin(), drop.end(), v) == drop.end()) keep.emplace_back(r.left()(v), r.right()(v));
        r = relation_from_pairs(cat, r.dom(), r.cod(), keep);
    }
}

std::vector<ElemFunctor> functors_for(const ElemBackend& b) {
    if (b.cat.group()->order() == 1)
        return {ElemFunctor::pow_labels({"a"}), ElemFunctor::pow_labels({"a", "b"}), ElemFunctor::det({"a", "b"}),
                ElemFunctor::upair(), ElemFunctor::pow()};
    return {ElemFunctor::upair(), ElemFunctor::pow(), ElemFunctor::det({"a", "b"})};
}

std::optional<Coalgebra<ElemCategory>> random_system(const ElemBackend& b, const ElemFunctor& f, Rng& rng,
                                                     const std::string& prefix) {
    const auto& cat = b.cat;
    if (cat.group()->order() == 1 && f.name().starts_with("pow_labels")) {
        const std::size_t labels = f.name() == "pow_labels[a]" ? 1 : 2;
        auto lts = random_lts(rng, uniform(rng, 1, 3), labels, std::bernoulli_distribution(0.5)(rng) ? 0.25 : 0.5, prefix);
        return lts_coalgebra(cat, lts);
    }
    auto x = random_object(cat, rng, uniform(rng, 1, std::min<std::size_t>(b.max_size, 4)), prefix);
    return random_coalgebra(cat, rng, f, x);
}

ElemRelation random_candidate(const ElemCategory& cat, const Coalgebra<ElemCategory>& a,
                              const Coalgebra<ElemCategory>& b, Rng& rng) {
    auto noise = random_relation(cat, rng, a.carrier(), b.carrier(), 0.5);
    switch (uniform(rng, 0, 3)) {
        case 0: return noise;
        case 1: return bisimilarity(cat, a, b);
        case 2: return bisimilarity_within(cat, a, b, noise);
        default: {
            // A bisimilarity with one orbit removed.
            auto full = bisimilarity(cat, a, b);
            auto orbits = cat.orbits(full.apex());
            if (orbits.empty()) return full;
            auto drop = orbits[uniform(rng, 0, orbits.size() - 1)];
            std::vector<std::pair<Value, Value>> keep;
            for (const auto& v : full.apex().elements())
                if (std::find(drop.begin(), drop.end(), v) == drop.end()) keep.emplace_back(v[0], v[1]);
            return relation_from_pairs(cat, a.carrier(), b.carrier(), keep);
        }
    }
}

std::optional<Instance<ElemCategory>> elem_instance(const ElemBackend& b, Rng& rng) {
    const auto fs = functors_for(b);
    const auto& f = fs[uniform(rng, 0, fs.size() - 1)];
    auto a = random_system(b, f, rng, "p");
    if (!a) return std::nullopt;
    auto c = std::bernoulli_distribution(0.25)(rng) ? a : random_system(b, f, rng, "q");
    if (!c) return std::nullopt;
    auto r = shrink_for(b.cat, f, random_candidate(b.cat, *a, *c, rng), rng);
    return Instance<ElemCategory>{*a, *c, r};
}

Instance<VectCategory> vect_instance(const VectBackend& b, Rng& rng) {
    const std::size_t letters = uniform(rng, 1, 2);
    auto a = automaton_coalgebra(b.cat, random_automaton(rng, b.cat.prime(), uniform(rng, 0, b.max_dim), letters));
    auto c = std::bernoulli_distribution(0.25)(rng)
                 ? a
                 : automaton_coalgebra(b.cat, random_automaton(rng, b.cat.prime(), uniform(rng, 0, b.max_dim), letters));
    auto noise = random_relation(b.cat, rng, a.carrier(), c.carrier());
    switch (uniform(rng, 0, 2)) {
        case 0: return {a, c, noise};
        case 1: return {a, c, bisimilarity(b.cat, a, c)};
        default: return {a, c, bisimilarity_within(b.cat, a, c, noise)};
    }
}

struct EquivalenceReports {
    LawReport reg_hj, closure, beh_reg, choice, toposal, witnesses;

    explicit EquivalenceReports(const std::string& backend) {
        reg_hj.name = "regular iff HJ on " + backend;
        closure.name = "regular implies inside the behavioural closure on " + backend;
        beh_reg.name = "behavioural implies regular (covering functors) on " + backend;
        choice.name = "regular iff a morphism witness exists on " + backend;
        toposal.name = "toposal iff regular on " + backend;
        witnesses.name = "extracted witnesses re-verify on " + backend;
    }
};

template <class C>
std::string instance_label(const Instance<C>& in) {
    return functor_name(in.a.functor()) + ", r = " + describe(in.r);
}

template <class C>
void check_equivalences(const C& cat, const Instance<C>& in, EquivalenceReports& rep, bool choice_backend) {
    const auto& [a, b, r] = in;
    const std::string ctx = instance_label(in);
    auto reg = is_regular_am_bisimulation(cat, r, a, b);
    auto hj = is_hj_bisimulation(cat, r, a, b);
    ++rep.reg_hj.checked;
    if (reg.verdict != hj.verdict) rep.reg_hj.fail("regular " + std::to_string(reg.verdict) + ", HJ " + std::to_string(hj.verdict) + " for " + ctx);

    ++rep.witnesses.checked;
    if (reg.verdict && !verify_regular_witness(cat, r, a, b, *reg.witness_relation)) rep.witnesses.fail("regular witness for " + ctx);
    if (hj.verdict && !verify_hj_witness(cat, r, a, b, *hj.witness_map)) rep.witnesses.fail("HJ witness for " + ctx);

    if (reg.verdict) {
        ++rep.closure.checked;
        auto cl = behavioural_closure(cat, r, a, b);
        if (!cl)
            rep.closure.fail("no closure for " + ctx);
        else if (!rel_leq(cat, r, cl->relation))
            rep.closure.fail("closure does not contain r for " + ctx);
    }

    auto beh = is_behavioural_equivalence(cat, r, a, b);
    if (beh.verdict && !verify_behavioural(cat, r, a, b, *beh.closure)) rep.witnesses.fail("behavioural cospan for " + ctx);
    if (covers_pullbacks(a.functor())) {
        ++rep.beh_reg.checked;
        if (beh.verdict && !reg.verdict) rep.beh_reg.fail(ctx);
    }

    if (choice_backend) {
        ++rep.choice.checked;
        auto w = am_witness(cat, r, a, b);
        if (w.has_value() != reg.verdict) rep.choice.fail("regular " + std::to_string(reg.verdict) + " but witness " + (w ? "present" : "absent") + " for " + ctx);
        if (w && !verify_am_witness(cat, r, a, b, *w)) rep.witnesses.fail("AM witness for " + ctx);
    }
}

}  // namespace

std::vector<LawReport> equivalence_suite(const LawOptions& opts) {
    std::vector<LawReport> out;
    auto rng = make_rng(opts, 16);
    auto flush = [&](EquivalenceReports& r, bool choice, bool toposal) {
        out.push_back(std::move(r.reg_hj));
        out.push_back(std::move(r.closure));
        out.push_back(std::move(r.beh_reg));
        if (choice) out.push_back(std::move(r.choice));
        if (toposal) out.push_back(std::move(r.toposal));
        out.push_back(std::move(r.witnesses));
    };

    for (const auto& b : elem_backends(opts, 3, 4)) {
        EquivalenceReports rep(b.name);
        const bool choice = b.cat.group()->order() == 1;
        LawReport comp;
        comp.name = "composites of regular bisimulations are regular on " + b.name;
        for (std::size_t i = 0; i < opts.trials; ++i) {
            auto in = elem_instance(b, rng);
            if (!in) {
                ++rep.reg_hj.skipped;
                continue;
            }
            check_equivalences(b.cat, *in, rep, choice);
            ++rep.toposal.checked;
            auto reg = is_regular_am_bisimulation(b.cat, in->r, in->a, in->b);
            auto top = is_toposal_am_bisimulation(b.cat, in->r, in->a, in->b);
            if (reg.verdict != top.verdict) rep.toposal.fail(instance_label(*in));

            // Composition: r1 ; r2 with both regular.
            auto c = random_system(b, in->a.functor(), rng, "s");
            if (!c || !covers_pullbacks(in->a.functor())) {
                ++comp.skipped;
                continue;
            }
            auto r1 = bisimilarity_within(b.cat, in->a, in->b, in->r);
            auto r2 = bisimilarity_within(b.cat, in->b, *c, random_relation(b.cat, rng, in->b.carrier(), c->carrier(), 0.7));
            auto composite = rel_compose(b.cat, r1, r2);
            if (auto n = in->a.functor().count(composite.apex().size()); !n || *n > kLiftEnumerationLimit) {
                ++comp.skipped;
                continue;
            }
            ++comp.checked;
            auto rep_c = compose_bisimulations(b.cat, r1, r2, in->a, in->b, *c);
            if (!rep_c.verdict) comp.fail(functor_name(in->a.functor()) + ": r1 = " + describe(r1) + ", r2 = " + describe(r2));
            auto top_c = is_toposal_am_bisimulation(b.cat, composite, in->a, *c);
            ++rep.toposal.checked;
            if (top_c.verdict != rep_c.verdict) rep.toposal.fail("composite " + describe(composite));
        }
        flush(rep, choice, true);
        out.push_back(std::move(comp));
    }

    for (const auto& b : vect_backends(opts, 3)) {
        EquivalenceReports rep(b.name);
        LawReport comp;
        comp.name = "composites of regular bisimulations are regular on " + b.name;
        for (std::size_t i = 0; i < opts.trials; ++i) {
            auto in = vect_instance(b, rng);
            check_equivalences(b.cat, in, rep, true);
            auto c = automaton_coalgebra(
                b.cat, random_automaton(rng, b.cat.prime(), uniform(rng, 0, b.max_dim), in.a.functor()(b.cat.object(1)).dim - 1));
            auto r1 = bisimilarity_within(b.cat, in.a, in.b, in.r);
            auto r2 = bisimilarity_within(b.cat, in.b, c, random_relation(b.cat, rng, in.b.carrier(), c.carrier()));
            ++comp.checked;
            auto rep_c = compose_bisimulations(b.cat, r1, r2, in.a, in.b, c);
            if (!rep_c.verdict) comp.fail("r1 = " + describe(r1) + ", r2 = " + describe(r2));
        }
        flush(rep, true, false);
        out.push_back(std::move(comp));
    }
    return out;
}

// --- orders and simulations ------------------------------------------------------

std::vector<LawReport> order_suite(const LawOptions& opts) {
    std::vector<LawReport> out;
    auto rng = make_rng(opts, 17);
    GoodOrderOptions go;
    go.trials = opts.trials;
    go.max_carrier = 3;

    struct Shipped {
        ElemFunctor f;
        ElementOrder ord;
    };
    for (const auto& s : {Shipped{ElemFunctor::pow_labels({"a", "b"}), ElementOrder::subset()},
                          Shipped{ElemFunctor::pow(), ElementOrder::subset()},
                          Shipped{ElemFunctor::det({"a", "b"}), ElementOrder::discrete()}}) {
        auto reps = good_order_suite(s.f, s.ord, rng, go);
        for (auto& r : reps) out.push_back(std::move(r));
    }

    {
        LawReport neg;
        neg.name = "cardinality order breaks axiom 1 (negative control)";
        auto reps = good_order_suite(ElemFunctor::pow(), ElementOrder::cardinality(), rng, go);
        const auto it = std::find_if(reps.begin(), reps.end(), [](const LawReport& r) { return r.name.starts_with("axiom 1") && !r.ok(); });
        neg.checked = 1;
        if (it == reps.end())
            neg.fail("no axiom 1 violation found for the cardinality order");
        else
            neg.notes.push_back("exhibit: " + it->exhibits.front());
        out.push_back(std::move(neg));
    }

    const ElemCategory cat;
    const auto subset = ElementOrder::subset();

    {
        // Pointwise <=_P against the existential form on micro instances:
        // f <=_P g iff some u : R_f -> R_g keeps the X-component and raises the
        // F-component, where R_f = {(a, x) : a in f(x)}.
        LawReport rep;
        rep.name = "pointwise <=_P agrees with the existential form";
        auto pw = ElemFunctor::pow();
        for (std::size_t i = 0; i < opts.trials; ++i) {
            auto x = random_object(cat, rng, uniform(rng, 1, 2), "x");
            auto y = random_object(cat, rng, uniform(rng, 1, 2), "y");
            auto fy = pw.enumerate(y.elements());
            auto pick = sample_subset(sample_from(fy), 3);
            std::vector<std::pair<Value, Value>> rf, rg;  // (a, x)
            std::vector<Value> fimg, gimg;
            for (const auto& e : x.elements()) {
                fimg.push_back(pick(rng));
                gimg.push_back(pick(rng));
                for (const auto& a : fimg.back().items()) rf.emplace_back(a, e);
                for (const auto& a : gimg.back().items()) rg.emplace_back(a, e);
            }
            auto target = pow_of(cat, cat.apply(pw, y));
            ElemMorphism f(x, target, fimg), g(x, target, gimg);
            // Exhaustive search for u.
            bool found = false;
            std::vector<std::size_t> idx(rf.size(), 0);
            if (rf.empty()) found = true;
            else if (!rg.empty()) {
                while (!found) {
                    bool ok = true;
                    for (std::size_t k = 0; k < rf.size() && ok; ++k)
                        ok = rf[k].second == rg[idx[k]].second && subset.leq(rf[k].first, rg[idx[k]].first);
                    found = ok;
                    std::size_t k = 0;
                    while (k < idx.size() && ++idx[k] == rg.size()) idx[k++] = 0;
                    if (k == idx.size()) break;
                }
            }
            ++rep.checked;
            if (found != leq_pow(f, g, subset)) rep.fail("f = " + describe(f) + ", g = " + describe(g));
        }
        out.push_back(std::move(rep));
    }

    {
        LawReport rep;
        rep.name = "<=_P on singletons is the element order";
        auto pl = ElemFunctor::pow_labels({"a"});
        for (std::size_t i = 0; i < opts.trials; ++i) {
            auto x = random_object(cat, rng, uniform(rng, 1, 3), "x");
            auto y = random_object(cat, rng, uniform(rng, 1, 2), "y");
            auto fy = pl.enumerate(y.elements());
            auto fyo = cat.apply(pl, y);
            std::vector<Value> fi, gi, ef, eg;
            for (std::size_t k = 0; k < x.size(); ++k) {
                fi.push_back(fy[uniform(rng, 0, fy.size() - 1)]);
                gi.push_back(fy[uniform(rng, 0, fy.size() - 1)]);
                ef.push_back(Value::set({fi.back()}));
                eg.push_back(Value::set({gi.back()}));
            }
            auto pfy = pow_of(cat, fyo);
            ElemMorphism f(x, fyo, fi), g(x, fyo, gi), etf(x, pfy, ef), etg(x, pfy, eg);
            ++rep.checked;
            if (leq_hom(f, g, subset) != leq_pow(etf, etg, subset)) rep.fail("f = " + describe(f) + ", g = " + describe(g));
        }
        out.push_back(std::move(rep));
    }

    {
        LawReport coh, wit, red, sim_bis;
        coh.name = "AM-simulation iff toposal AM-simulation on LTS";
        wit.name = "simulation witnesses re-verify";
        red.name = "equality-left witnesses suffice (|R| <= 3)";
        sim_bis.name = "similarity contains bisimilarity and is a simulation";
        for (std::size_t i = 0; i < opts.trials; ++i) {
            const std::size_t labels = uniform(rng, 1, std::min<std::size_t>(2, opts.max_labels));
            auto a = lts_coalgebra(cat, random_lts(rng, uniform(rng, 1, 4), labels, 0.35, "p"));
            auto b = lts_coalgebra(cat, random_lts(rng, uniform(rng, 1, 4), labels, 0.35, "q"));
            auto sim = similarity(cat, a, b, subset);
            ElemRelation r = uniform(rng, 0, 1) == 0 ? sim : random_relation(cat, rng, a.carrier(), b.carrier(), 0.4);
            auto am = is_am_simulation(cat, r, a, b, subset);
            auto top = is_toposal_am_simulation(cat, r, a, b, subset);
            ++coh.checked;
            if (am.verdict != top.verdict) coh.fail("r = " + describe(r));
            ++wit.checked;
            if (am.verdict && !verify_simulation_witness(cat, r, a, b, subset, *am.witness_map)) wit.fail("AM, r = " + describe(r));
            if (top.verdict && !verify_toposal_simulation_witness(cat, r, a, b, subset, *top.witness_map))
                wit.fail("toposal, r = " + describe(r));
            if (r.apex().size() <= 3) {
                auto rr = equality_left_reduction(cat, r, a, b, subset);
                red.checked += rr.checked;
                for (auto& e : rr.exhibits) red.fail(e);
            }
            ++sim_bis.checked;
            if (!rel_leq(cat, bisimilarity(cat, a, b), sim)) sim_bis.fail("bisimilarity not inside similarity");
            if (!is_am_simulation(cat, sim, a, b, subset).verdict) sim_bis.fail("similarity is not a simulation");
        }
        for (auto* r : {&coh, &wit, &red, &sim_bis}) out.push_back(std::move(*r));
    }

    {
        LawReport rep;
        rep.name = "toposal simulations on gset(Z2) need no equivariant choice";
        const ElemCategory z2(FiniteGroup::cyclic(2));
        std::size_t separated = 0;
        for (std::size_t i = 0; i < opts.trials; ++i) {
            auto x = random_object(z2, rng, uniform(rng, 1, 4), "p");
            auto y = random_object(z2, rng, uniform(rng, 1, 4), "q");
            auto a = random_coalgebra(z2, rng, ElemFunctor::upair(), x);
            auto b = random_coalgebra(z2, rng, ElemFunctor::upair(), y);
            if (!a || !b) {
                ++rep.skipped;
                continue;
            }
            auto r = similarity(z2, *a, *b, subset);
            auto top = is_toposal_am_simulation(z2, r, *a, *b, subset);
            ++rep.checked;
            if (!top.verdict) rep.fail("similarity rejected: " + describe(r));
            if (!is_am_simulation(z2, r, *a, *b, subset).verdict) ++separated;
        }
        rep.notes.push_back(std::to_string(separated) + " instances had no equivariant simulation witness map");
        out.push_back(std::move(rep));
    }
    return out;
}

}  // namespace regbisim
