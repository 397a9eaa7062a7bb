#include <algorithm>

#include "laws_common.hpp"
#include "regbisim/power.hpp"

namespace regbisim {

using namespace detail;

namespace {

// --- allegory -----------------------------------------------------------------

template <class C, class Obj, class Rel>
void probe_allegory(const C& cat, Rng& rng, std::size_t trials, Obj obj, Rel rel, LawReport& rep) {
    using R = Relation<C>;
    for (std::size_t i = 0; i < trials; ++i) {
        auto x = obj(rng, "x");
        auto y = obj(rng, "y");
        auto z = obj(rng, "z");
        auto w = obj(rng, "w");
        R r = rel(rng, x, y), r2 = rel(rng, x, y), q = rel(rng, x, y);
        R s = rel(rng, y, z), t = rel(rng, z, w), u = rel(rng, x, z);
        const std::string ctx = " with r = " + describe(r) + ", s = " + describe(s);
        ++rep.checked;
        if (!(rel_compose(cat, rel_compose(cat, r, s), t) == rel_compose(cat, r, rel_compose(cat, s, t))))
            rep.fail("associativity" + ctx + ", t = " + describe(t));
        if (!(rel_compose(cat, rel_identity(cat, x), r) == r) || !(rel_compose(cat, r, rel_identity(cat, y)) == r))
            rep.fail("unit" + ctx);
        if (!(rel_dagger(cat, rel_dagger(cat, r)) == r)) rep.fail("dagger involution" + ctx);
        if (!(rel_dagger(cat, rel_compose(cat, r, s)) == rel_compose(cat, rel_dagger(cat, s), rel_dagger(cat, r))))
            rep.fail("dagger reverses composition" + ctx);
        auto m = rel_meet(cat, r, r2);
        if (!rel_leq(cat, m, r) || !rel_leq(cat, m, r2)) rep.fail("meet is not a lower bound" + ctx);
        if (rel_leq(cat, q, r) && rel_leq(cat, q, r2) && !rel_leq(cat, q, m))
            rep.fail("meet is not greatest" + ctx + ", q = " + describe(q));
        if (!rel_leq(cat, m, m) || !rel_leq(cat, rel_meet(cat, m, q), m)) rep.fail("meet order" + ctx);
        if (!(rel_meet(cat, r, r2) == rel_meet(cat, r2, r))) rep.fail("meet commutes" + ctx);
        if (!check_modular_law(cat, r, s, u)) rep.fail("modular law" + ctx + ", t = " + describe(u));
    }
}

auto elem_objects(const ElemBackend& b) {
    return [&b](Rng& rng, const std::string& prefix) {
        return random_object(b.cat, rng, uniform(rng, 0, b.max_size), prefix);
    };
}

auto elem_relations(const ElemBackend& b) {
    return [&b](Rng& rng, const ElemObject& x, const ElemObject& y) {
        return random_relation(b.cat, rng, x, y, std::bernoulli_distribution(0.5)(rng) ? 0.3 : 0.6);
    };
}

auto vect_objects(const VectBackend& b) {
    return [&b](Rng& rng, const std::string&) { return b.cat.object(uniform(rng, 0, b.max_dim)); };
}

auto vect_relations(const VectBackend& b) {
    return [&b](Rng& rng, const VectObject& x, const VectObject& y) { return random_relation(b.cat, rng, x, y); };
}

// --- maps -----------------------------------------------------------------------

bool total_single_valued(const ElemCategory&, const ElemRelation& r) {
    auto pairs = pairs_of(r);
    for (const auto& x : r.dom().elements()) {
        auto n = std::count_if(pairs.begin(), pairs.end(), [&](const auto& p) { return p.first == x; });
        if (n != 1) return false;
    }
    return true;
}

bool total_single_valued(const VectCategory&, const VectRelation& r) {
    auto b = basis_of(r);
    const std::size_t n = r.dom().dim;
    std::vector<std::size_t> left(n);
    for (std::size_t i = 0; i < n; ++i) left[i] = i;
    const std::size_t rl = b.rows() == 0 ? 0 : b.select_cols(left).rank();
    return rl == n && b.rank() == rl;
}

template <class C, class Obj, class Rel, class Fn>
void probe_maps(const C& cat, Rng& rng, std::size_t trials, Obj obj, Rel rel, Fn fn, LawReport& graphs,
                LawReport& maps, LawReport& tabs) {
    for (std::size_t i = 0; i < trials; ++i) {
        auto x = obj(rng, "x");
        auto y = obj(rng, "y");
        // equivariant maps x -> y may not exist; redraw the target a few times
        auto f = fn(rng, x, y);
        for (int retry = 0; !f && retry < 20; ++retry) {
            x = obj(rng, "x");
            y = obj(rng, "y");
            f = fn(rng, x, y);
        }
        if (f) {
            ++graphs.checked;
            auto g = as_map(cat, graph(cat, *f));
            if (!g || !(*g == *f)) graphs.fail("as_map(graph(f)) != f for f = " + describe(*f));
        } else {
            ++graphs.skipped;
        }
        auto r = rel(rng, x, y);
        if (uniform(rng, 0, 2) == 0) {
            if (auto f = fn(rng, x, y)) r = graph(cat, *f);
        }
        ++maps.checked;
        const bool expect = total_single_valued(cat, r);
        auto m = as_map(cat, r);
        if (m.has_value() != expect)
            maps.fail("as_map " + std::string(m ? "succeeded" : "failed") + " on " + describe(r));
        else if (m && !(graph(cat, *m) == r))
            maps.fail("graph(as_map(r)) != r for " + describe(r));
        ++tabs.checked;
        if (!(recompose(cat, tabulate(cat, r)) == r)) tabs.fail("recomposed tabulation differs for " + describe(r));
    }
}

// --- P monad ---------------------------------------------------------------------

struct MonadProbe {
    const ElemCategory& cat;
    LawReport& rep;

    void unit_and_mono(const ElemObject& x, std::span<const Value> subsets) {
        auto px = pow_of(cat, x);
        auto m = mu(cat, x);
        auto eta_p = eta(cat, px);
        auto p_eta = pow_direct_image(cat, eta(cat, x));
        for (const auto& u : subsets) {
            ++rep.checked;
            if (!(m(eta_p(u)) == u)) rep.fail("mu . eta_P != id at " + u.str());
            if (!(m(p_eta(u)) == u)) rep.fail("mu . P(eta) != id at " + u.str());
        }
    }

    void associativity(const ElemObject& x, std::span<const Value> inputs) {
        auto m = mu(cat, x);
        auto m_p = mu(cat, pow_of(cat, x));
        auto p_m = pow_direct_image(cat, m);
        for (const auto& t : inputs) {
            ++rep.checked;
            if (!(m(p_m(t)) == m(m_p(t)))) rep.fail("mu . P(mu) != mu . mu_P at " + t.str());
        }
    }

    void morphism_laws(const ElemMorphism& f, std::span<const Value> subsets, std::span<const Value> subsubsets) {
        const auto& x = f.source();
        const auto& y = f.target();
        auto pf = pow_direct_image(cat, f);
        auto ppf = pow_direct_image(cat, pf);
        auto ex = eta(cat, x);
        auto ey = eta(cat, y);
        auto mx = mu(cat, x);
        auto my = mu(cat, y);
        const std::string ctx = " for f = " + describe(f);
        ++rep.checked;
        for (const auto& e : x.elements())
            if (!(pf(ex(e)) == ey(f(e)))) rep.fail("eta not natural at " + e.str() + ctx);
        for (const auto& s : subsubsets)
            if (!(pf(mx(s)) == my(ppf(s)))) rep.fail("mu not natural at " + s.str() + ctx);
        auto categorical = pow_map(cat, f);
        for (const auto& u : subsets)
            if (!(categorical(u) == pf(u))) rep.fail("P(f) by classifier differs from direct image at " + u.str() + ctx);

        auto fd = pseudo_inverse(cat, f);
        auto back = kleisli_compose(cat, fd, cat.identity(pow_of(cat, y)));  // mu . P(f-dagger)
        if (cat.is_mono(f)) {
            for (const auto& e : x.elements())
                if (!(fd(f(e)) == ex(e))) rep.fail("f-dagger . f != eta for mono" + ctx);
            for (const auto& u : subsets)
                if (!(back(pf(u)) == u)) rep.fail("P(f) has no retraction through f-dagger at " + u.str() + ctx);
            if (!cat.is_mono(pf)) rep.fail("P(f) not mono for mono" + ctx);
        }
        if (cat.is_regular_epi(f)) {
            for (const auto& e : y.elements())
                if (!(pf(fd(e)) == ey(e))) rep.fail("P(f) . f-dagger != eta for epi" + ctx);
            const auto py = pow_of(cat, y);
            for (const auto& v : py.elements())
                if (!(pf(back(v)) == v)) rep.fail("P(f) has no section through f-dagger at " + v.str() + ctx);
            if (!cat.is_regular_epi(pf)) rep.fail("P(f) not epi for epi" + ctx);
        }
    }
};

std::vector<Value> elements_of(const ElemObject& x) {
    auto e = x.elements();
    return {e.begin(), e.end()};
}

}  // namespace

std::vector<LawReport> allegory_suite(const LawOptions& opts) {
    std::vector<LawReport> out;
    auto rng = make_rng(opts, 11);
    for (const auto& b : elem_backends(opts, 4, 6)) {
        LawReport rep;
        rep.name = "allegory laws on " + b.name;
        probe_allegory(b.cat, rng, opts.trials, elem_objects(b), elem_relations(b), rep);
        out.push_back(std::move(rep));
    }
    for (const auto& b : vect_backends(opts, 3)) {
        LawReport rep;
        rep.name = "allegory laws on " + b.name;
        probe_allegory(b.cat, rng, opts.trials, vect_objects(b), vect_relations(b), rep);
        out.push_back(std::move(rep));
    }
    return out;
}

std::vector<LawReport> maps_suite(const LawOptions& opts) {
    std::vector<LawReport> out;
    auto rng = make_rng(opts, 12);
    auto run = [&](const std::string& name, auto&& cat, auto obj, auto rel, auto fn) {
        LawReport graphs, maps, tabs;
        graphs.name = "as_map inverts graph on " + name;
        maps.name = "as_map exactly on total single-valued relations on " + name;
        tabs.name = "tabulation recomposes on " + name;
        probe_maps(cat, rng, opts.trials, obj, rel, fn, graphs, maps, tabs);
        out.push_back(std::move(graphs));
        out.push_back(std::move(maps));
        out.push_back(std::move(tabs));
    };
    for (const auto& b : elem_backends(opts, 4, 6))
        run(b.name, b.cat, elem_objects(b), elem_relations(b),
            [&b](Rng& rng, const ElemObject& x, const ElemObject& y) { return random_morphism(b.cat, rng, x, y); });
    for (const auto& b : vect_backends(opts, 3))
        run(b.name, b.cat, vect_objects(b), vect_relations(b), [&b](Rng& rng, const VectObject& x, const VectObject& y) {
            return std::optional<VectMorphism>(random_morphism(b.cat, rng, x, y));
        });
    return out;
}

std::vector<LawReport> kleisli_suite(const LawOptions& opts) {
    std::vector<LawReport> out;
    auto rng = make_rng(opts, 13);
    for (const auto& b : elem_backends(opts, 4, 6)) {
        const auto& cat = b.cat;
        LawReport comp, unit, bij;
        comp.name = "xi(r;s) = kleisli(xi r, xi s) on " + b.name;
        unit.name = "xi(identity) = eta on " + b.name;
        bij.name = "xi and relation_of are inverse on " + b.name;
        auto obj = elem_objects(b);
        auto rel = elem_relations(b);
        for (std::size_t i = 0; i < opts.trials; ++i) {
            auto x = obj(rng, "x");
            auto y = obj(rng, "y");
            auto z = obj(rng, "z");
            auto r = rel(rng, x, y);
            auto s = rel(rng, y, z);
            ++comp.checked;
            if (!same_map(xi(cat, rel_compose(cat, r, s)), kleisli_compose(cat, xi(cat, r), xi(cat, s))))
                comp.fail("r = " + describe(r) + ", s = " + describe(s));
            ++unit.checked;
            if (!same_map(xi(cat, rel_identity(cat, x)), eta(cat, x))) unit.fail("at X = " + describe(cat.identity(x)));
            ++bij.checked;
            if (!(relation_of(cat, xi(cat, r), x) == r)) bij.fail("relation_of(xi r) != r for r = " + describe(r));
        }
        // Every map Y -> P(X) classifies exactly one relation (tiny carriers).
        for (const auto& x : small_objects(cat, 2, "x"))
            for (const auto& y : small_objects(cat, 2, "y"))
                for (const auto& f : all_morphisms(cat, y, pow_of(cat, x))) {
                    ++bij.checked;
                    if (!same_map(xi(cat, relation_of(cat, f, x)), f)) bij.fail("xi(relation_of f) != f for f = " + describe(f));
                }
        out.push_back(std::move(comp));
        out.push_back(std::move(unit));
        out.push_back(std::move(bij));
    }
    return out;
}

std::vector<LawReport> monad_suite(const LawOptions& opts) {
    std::vector<LawReport> out;
    auto rng = make_rng(opts, 14);
    for (const auto& b : elem_backends(opts, 6, 6)) {
        const auto& cat = b.cat;
        LawReport exhaustive, random, extra;
        exhaustive.name = "monad and pseudo-inverse laws, all carriers of size <= 3, on " + b.name;
        random.name = "monad and pseudo-inverse laws, random larger carriers, on " + b.name;
        extra.name = "eta mono, union agrees with the relational multiplication, on " + b.name;

        const auto objects = small_objects(cat, 3, "x");
        MonadProbe ex{cat, exhaustive};
        for (const auto& x : objects) {
            auto px = pow_of(cat, x);
            const auto subsets = elements_of(px);
            const auto subsub = elements_of(pow_of(cat, px));
            ex.unit_and_mono(x, subsets);
            ++extra.checked;
            if (!cat.is_mono(eta(cat, x))) extra.fail("eta not mono on " + describe(cat.identity(x)));
            if (x.size() <= 3) {
                auto rel_mu = mu_via_relations(cat, x);
                auto m = mu(cat, x);
                for (const auto& s : subsub)
                    if (!(rel_mu(s) == m(s))) extra.fail("relational mu differs at " + s.str());
            }
            if (x.size() <= 2) {
                ex.associativity(x, elements_of(pow_of(cat, pow_of(cat, px))));
            } else {
                auto sampler = sample_subset(sample_subset(sample_from(subsets), 4), 4);
                std::vector<Value> inputs;
                for (std::size_t i = 0; i < 200; ++i) inputs.push_back(sampler(rng));
                ex.associativity(x, inputs);
                const std::string note = "associativity sampled on P(P(P(X))) for |X| = " + std::to_string(x.size());
                if (std::find(exhaustive.notes.begin(), exhaustive.notes.end(), note) == exhaustive.notes.end())
                    exhaustive.notes.push_back(note);
            }
            for (const auto& y : objects)
                for (const auto& f : all_morphisms(cat, x, y)) ex.morphism_laws(f, subsets, subsub);
        }

        MonadProbe rp{cat, random};
        for (std::size_t i = 0; i < opts.trials; ++i) {
            auto x = random_object(cat, rng, uniform(rng, 4, std::max<std::size_t>(4, b.max_size)), "x");
            auto y = random_object(cat, rng, uniform(rng, 1, std::max<std::size_t>(1, b.max_size)), "y");
            auto f = random_morphism(cat, rng, x, y);
            if (!f) {
                ++random.skipped;
                continue;
            }
            auto s1 = sample_from(elements_of(pow_of(cat, x)));
            auto s2 = sample_subset(s1, 4);
            auto s3 = sample_subset(s2, 3);
            std::vector<Value> subsets, subsub, subsubsub;
            for (int k = 0; k < 8; ++k) {
                subsets.push_back(s1(rng));
                subsub.push_back(s2(rng));
                subsubsub.push_back(s3(rng));
            }
            rp.unit_and_mono(x, subsets);
            rp.associativity(x, subsubsub);
            rp.morphism_laws(*f, subsets, subsub);
        }
        out.push_back(std::move(exhaustive));
        out.push_back(std::move(random));
        out.push_back(std::move(extra));
    }
    return out;
}

}  // namespace regbisim
