#include <algorithm>

#include "laws_common.hpp"
#include "regbisim/power.hpp"

namespace regbisim {

using namespace detail;

namespace {

constexpr std::size_t kExhaustiveInputs = 512;
constexpr std::size_t kSampledInputs = 48;

/// A powerset-style functor with a sampler for F(base) built from a sampler
/// for base.
struct SetFunctor {
    ElemFunctor f;
    std::function<Sampler(Sampler)> lift;
    std::size_t max_carrier;       // naturality and unit
    std::size_t max_mult_carrier;  // the multiplication axiom
};

std::vector<SetFunctor> set_functors() {
    auto labelled = [](std::vector<std::string> names) {
        std::vector<Value> labels;
        for (auto& n : names) labels.push_back(Value::atom(n));
        return [labels](Sampler inner) { return sample_labelled(labels, std::move(inner), 4); };
    };
    return {
        {ElemFunctor::pow(), [](Sampler inner) { return sample_subset(std::move(inner), 4); }, 3, 2},
        {ElemFunctor::pow_labels({"a"}), labelled({"a"}), 3, 2},
        {ElemFunctor::pow_labels({"a", "b"}), labelled({"a", "b"}), 2, 1},
    };
}

std::vector<Value> elements_of(const ElemObject& x) {
    auto e = x.elements();
    return {e.begin(), e.end()};
}

/// All of F(base) when small, otherwise samples.
std::vector<Value> inputs(const SetFunctor& sf, const ElemObject& base, Sampler base_sampler, Rng& rng) {
    auto n = sf.f.count(base.size());
    if (n && *n <= kExhaustiveInputs) return sf.f.enumerate(base.elements());
    auto s = sf.lift(std::move(base_sampler));
    std::vector<Value> out;
    for (std::size_t i = 0; i < kSampledInputs; ++i) out.push_back(s(rng));
    return out;
}

void weak_law_axioms(const ElemCategory& cat, const SetFunctor& sf, const std::vector<ElemObject>& objects, Rng& rng,
                     LawReport& nat, LawReport& unit, LawReport& mult) {
    const auto& f = sf.f;
    for (const auto& x : objects) {
        if (x.size() > sf.max_carrier) continue;
        auto px = pow_of(cat, x);
        auto dx = proto_dist(cat, f, x);
        auto fx = cat.apply(f, x);

        // delta . F(eta) = eta_F
        auto f_eta = cat.apply(f, eta(cat, x));
        for (const auto& s : elements_of(fx)) {
            ++unit.checked;
            if (!(dx(f_eta(s)) == Value::set({s}))) unit.fail(f.name() + ": delta(F eta (" + s.str() + ")) = " + dx(f_eta(s)).str());
        }

        // P(F g) . delta_X = delta_Y . F(P g)
        const auto in = inputs(sf, px, sample_from(elements_of(px)), rng);
        for (const auto& y : objects) {
            if (y.size() > sf.max_carrier) continue;
            auto dy = proto_dist(cat, f, y);
            auto maps = all_morphisms(cat, x, y);
            if (maps.size() > 4) {
                std::shuffle(maps.begin(), maps.end(), rng);
                maps.erase(maps.begin() + 4, maps.end());
            }
            for (const auto& g : maps) {
                auto pfg = pow_direct_image(cat, cat.apply(f, g));
                auto fpg = cat.apply(f, pow_direct_image(cat, g));
                for (const auto& t : in) {
                    ++nat.checked;
                    if (!(pfg(dx(t)) == dy(fpg(t))))
                        nat.fail(f.name() + ": naturality fails at " + t.str() + " for g = " + describe(g));
                }
            }
        }

        // delta . F(mu) = mu_F . P(delta) . delta_P
        if (x.size() > sf.max_mult_carrier) continue;
        auto ppx = pow_of(cat, px);
        auto dpx = proto_dist(cat, f, px);
        auto f_mu = cat.apply(f, mu(cat, x));
        auto mu_f = mu(cat, fx);
        auto p_dx = pow_direct_image(cat, dx);
        auto pp_sampler = sample_subset(sample_from(elements_of(px)), 3);
        for (const auto& t : inputs(sf, ppx, pp_sampler, rng)) {
            ++mult.checked;
            if (!(dx(f_mu(t)) == mu_f(p_dx(dpx(t))))) mult.fail(f.name() + ": multiplication axiom fails at " + t.str());
        }
    }
}

}  // namespace

std::vector<LawReport> distributive_suite(const LawOptions& opts) {
    std::vector<LawReport> out;
    auto rng = make_rng(opts, 15);
    for (const auto& b : elem_backends(opts, 3, 3)) {
        if (b.name == "gset(S3)") continue;
        const auto& cat = b.cat;
        const auto objects = small_objects(cat, 3, "x");

        LawReport ident, literal, nat, unit, mult, tmult, full, comp;
        ident.name = "delta of the identity functor is the identity on " + b.name;
        literal.name = "pointwise delta equals the image construction on " + b.name;
        nat.name = "delta natural on " + b.name;
        unit.name = "delta . F(eta) = eta on " + b.name;
        mult.name = "delta . F(mu) = mu . P(delta) . delta on " + b.name;
        tmult.name = "weak law for P: delta . mu_P = P(mu) . delta . P(delta) on " + b.name;
        full.name = "unit axiom of a full law for P fails on " + b.name;
        comp.name = "delta of a composite is the composite of deltas on " + b.name;

        for (const auto& x : objects) {
            auto px = pow_of(cat, x);
            auto did = proto_dist(cat, ElemFunctor::identity(), x);
            for (const auto& u : elements_of(px)) {
                ++ident.checked;
                if (!(did(u) == u)) ident.fail("delta_Id(" + u.str() + ") = " + did(u).str());
            }
        }

        for (const auto& sf : set_functors()) {
            for (const auto& x : objects) {
                if (x.size() > std::min<std::size_t>(sf.max_carrier, 3)) continue;
                auto pointwise = proto_dist(cat, sf.f, x);
                auto literal_d = proto_dist_by_image(cat, sf.f, x);
                auto n = sf.f.count(pow_of(cat, x).size());
                if (!n || *n > 4096) {
                    ++literal.skipped;
                    continue;
                }
                for (const auto& t : sf.f.enumerate(pow_of(cat, x).elements())) {
                    ++literal.checked;
                    if (!(pointwise(t) == literal_d(t))) literal.fail(sf.f.name() + " at " + t.str());
                }
            }
            weak_law_axioms(cat, sf, objects, rng, nat, unit, mult);
        }

        // T = P: delta_X . mu_{PX} = P(mu_X) . delta_{PX} . P(delta_X), inputs in P(P(P(X))).
        const auto pw = ElemFunctor::pow();
        for (const auto& x : objects) {
            if (x.size() > 2) continue;
            auto px = pow_of(cat, x);
            auto dx = proto_dist(cat, pw, x);
            auto dpx = proto_dist(cat, pw, px);
            auto mu_p = mu(cat, px);
            auto p_mu = pow_direct_image(cat, mu(cat, x));
            auto p_dx = pow_direct_image(cat, dx);
            auto sampler = sample_subset(sample_subset(sample_from(elements_of(px)), 3), 3);
            for (std::size_t i = 0; i < kSampledInputs; ++i) {
                const Value t = sampler(rng);
                ++tmult.checked;
                if (!(dx(mu_p(t)) == p_mu(dpx(p_dx(t))))) tmult.fail("at " + t.str());
            }
        }

        // Full law unit axiom: delta . eta_P = P(eta); expected to fail.
        std::optional<std::string> exhibit;
        for (const auto& x : objects) {
            auto dx = proto_dist(cat, pw, x);
            auto eta_p = eta(cat, pow_of(cat, x));
            auto p_eta = pow_direct_image(cat, eta(cat, x));
            for (const auto& u : elements_of(pow_of(cat, x))) {
                ++full.checked;
                if (!(dx(eta_p(u)) == p_eta(u))) {
                    exhibit = "U = " + u.str() + ": delta(eta(U)) = " + dx(eta_p(u)).str() + " but P(eta)(U) = " + p_eta(u).str();
                    break;
                }
            }
            if (exhibit) break;
        }
        if (exhibit)
            full.notes.push_back("counterexample: " + *exhibit);
        else
            full.fail("no counterexample to the unit axiom among carriers of size <= 3");

        // delta_{P . pow_labels[a]} = delta_{P, F X} . P(delta_{F, X})
        const auto inner = ElemFunctor::pow_labels({"a"});
        const auto outer = ElemFunctor::pow();
        const auto gf = ElemFunctor::composite(outer, inner);
        for (const auto& x : objects) {
            if (x.size() > 1) continue;
            auto px = pow_of(cat, x);
            auto whole = proto_dist(cat, gf, x);
            auto d_outer = proto_dist(cat, outer, cat.apply(inner, x));
            auto g_inner = cat.apply(outer, proto_dist(cat, inner, x));
            for (const auto& t : gf.enumerate(px.elements())) {
                ++comp.checked;
                if (!(whole(t) == d_outer(g_inner(t)))) comp.fail("at " + t.str());
            }
        }

        for (auto* r : {&ident, &literal, &nat, &unit, &mult, &tmult, &full, &comp}) out.push_back(std::move(*r));
    }
    return out;
}

}  // namespace regbisim
