// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "regbisim/io.hpp"
#include "regbisim/laws.hpp"
#include "regbisim/power.hpp"
#include "support.hpp"

using namespace support;

namespace {

constexpr double kBudgetSeconds = 60.0;

struct Outcome {
    bool pass = true;
    std::vector<std::string> lines;

    void require(bool cond, const std::string& what) {
        if (!cond) {
            pass = false;
            lines.push_back("failed: " + what);
        }
    }
    void note(const std::string& s) { lines.push_back(s); }
};

bool starts_with(const std::string& s, const std::string& prefix) { return s.rfind(prefix, 0) == 0; }

/// Every report whose name starts with one of the prefixes must hold and have
/// checked at least `min_checked` cases.
void expect(Outcome& out, const std::vector<LawReport>& reports, const std::vector<std::string>& prefixes,
            std::size_t min_checked) {
    std::size_t matched = 0;
    for (const auto& r : reports) {
        bool hit = false;
        for (const auto& p : prefixes) hit = hit || starts_with(r.name, p);
        if (!hit) continue;
        ++matched;
        out.note(r.name + ": checked " + std::to_string(r.checked) + ", skipped " + std::to_string(r.skipped));
        for (const auto& n : r.notes) out.note("  " + n);
        out.require(r.ok(), r.name + (r.exhibits.empty() ? "" : " (" + r.exhibits.front() + ")"));
        out.require(r.checked >= min_checked, r.name + " checked only " + std::to_string(r.checked));
    }
    out.require(matched > 0, "no report matched " + prefixes.front());
}

LawOptions opts_with(std::size_t trials, std::uint64_t seed) {
    LawOptions o;
    o.seed = seed;
    o.trials = trials;
    return o;
}

// 1 -------------------------------------------------------------------------
Outcome allegory() {
    Outcome out;
    const auto reps = allegory_suite(opts_with(1000, 101));
    expect(out, reps, {"allegory laws on"}, 1000);
    out.require(reps.size() == 5, "expected finset, gset(Z2), gset(S3), vect(Z2), vect(Z3)");
    return out;
}

// 2 -------------------------------------------------------------------------
Outcome maps() {
    Outcome out;
    const auto reps = maps_suite(opts_with(200, 102));
    expect(out, reps, {"as_map inverts graph", "as_map exactly", "tabulation recomposes"}, 200);
    return out;
}

// 3 -------------------------------------------------------------------------
Outcome kleisli() {
    Outcome out;
    const auto reps = kleisli_suite(opts_with(500, 103));
    expect(out, reps, {"xi(r;s) = kleisli(xi r, xi s) on finset"}, 500);
    expect(out, reps, {"xi(r;s) = kleisli(xi r, xi s) on gset"}, 200);
    expect(out, reps, {"xi(identity)", "xi and relation_of"}, 1);
    return out;
}

// 4 -------------------------------------------------------------------------
Outcome monad() {
    Outcome out;
    const auto reps = monad_suite(opts_with(500, 104));
    expect(out, reps, {"monad and pseudo-inverse laws, all carriers"}, 1);
    expect(out, reps, {"monad and pseudo-inverse laws, random"}, 500);
    expect(out, reps, {"eta mono"}, 1);

    // P on the two halves of the image factorization of random maps.
    Rng rng(404);
    for (const auto& cat : {FinSet(), GSet(FiniteGroup::cyclic(2)), GSet(FiniteGroup::symmetric3())}) {
        std::size_t done = 0, attempts = 0;
        while (done < 500 && attempts < 20000) {
            ++attempts;
            auto x = random_object(cat, rng, uniform(rng, 1, 6), "x");
            auto y = random_object(cat, rng, uniform(rng, 1, 6), "y");
            auto f = random_morphism(cat, rng, x, y);
            if (!f) continue;
            ++done;
            const auto fact = cat.factorize(*f);
            const auto pe = pow_direct_image(cat, fact.epi);
            const auto pm = pow_direct_image(cat, fact.mono);
            if (!cat.is_regular_epi(pe) || !cat.is_mono(pm)) {
                out.require(false, "P breaks the factorization of a map on " + cat.name());
                break;
            }
        }
        out.note("P preserves epis and monos on " + cat.name() + " (" +
                 std::to_string(cat.group()->order()) + "-element group): " + std::to_string(done) + " maps");
        out.require(done >= 500, "too few random maps on " + cat.name());
    }
    return out;
}

// 5 -------------------------------------------------------------------------
oracle::Subset ints(const Value& s) {
    oracle::Subset out;
    for (const auto& v : s.items()) out.insert(std::stoi(v.name()));
    return out;
}

Outcome distributive() {
    Outcome out;
    FinSet cat;
    const auto pow = ElemFunctor::pow();
    std::size_t checked = 0, wrong = 0;
    for (std::size_t n = 0; n <= 3; ++n) {
        std::vector<std::string> els;
        for (std::size_t i = 1; i <= n; ++i) els.push_back(std::to_string(i));
        const auto x = cat.atoms(els);
        const auto d = proto_dist(cat, pow, x);
        const auto ppx = pow_of(cat, pow_of(cat, x));
        for (const auto& u : ppx.elements()) {
            std::set<oracle::Subset> uu;
            for (const auto& w : u.items()) uu.insert(ints(w));
            std::set<oracle::Subset> got;
            const auto du = d(u);
            for (const auto& v : du.items()) got.insert(ints(v));
            ++checked;
            if (got != oracle::pow_delta(uu)) ++wrong;
        }
    }
    out.note("delta for P against the closed formula: " + std::to_string(checked) + " inputs, " + std::to_string(wrong) +
             " mismatches");
    out.require(checked == 2 + 4 + 16 + 256 && wrong == 0, "delta for P differs from the closed formula");

    const auto reps = distributive_suite(opts_with(100, 105));
    expect(out, reps, {"delta of the identity", "pointwise delta", "delta natural", "delta . F(eta)", "delta . F(mu)",
                       "weak law for P", "delta of a composite"},
           1);
    expect(out, reps, {"unit axiom of a full law for P fails"}, 1);
    return out;
}

// 6, 7, 10 ---------------------------------------------------------------------
const std::vector<LawReport>& equivalence_reports() {
    static const auto reps = equivalence_suite(opts_with(500, 106));
    return reps;
}

Outcome equivalence() {
    Outcome out;
    const auto& reps = equivalence_reports();
    expect(out, reps, {"regular iff HJ on"}, 500);
    expect(out, reps, {"regular implies inside the behavioural closure", "extracted witnesses re-verify"}, 1);
    expect(out, reps, {"behavioural implies regular (covering functors)"}, 500);
    return out;
}

Outcome choice() {
    Outcome out;
    expect(out, equivalence_reports(), {"regular iff a morphism witness exists on finset"}, 500);
    expect(out, equivalence_reports(), {"regular iff a morphism witness exists on vect"}, 500);

    const std::filesystem::path dir = REGBISIM_FIXTURES_DIR;
    const auto left = std::get<ElemSystem>(load_system(dir / "separation_left.json"));
    const auto right = std::get<ElemSystem>(load_system(dir / "separation_right.json"));
    const auto r = parse_relation(read_json(dir / "separation_relation.json"), left, right);
    const auto& cat = left.cat;
    out.require(cat.group()->order() == 2 && left.functor == "upair", "separation instance is over Z/2 with upair");
    out.require(left.coalgebra.carrier().size() + right.coalgebra.carrier().size() <= 6, "carriers within 6 elements");
    const bool regular = is_regular_am_bisimulation(cat, r, left.coalgebra, right.coalgebra).verdict;
    const bool witness = am_witness(cat, r, left.coalgebra, right.coalgebra).has_value();
    const bool toposal = is_toposal_am_bisimulation(cat, r, left.coalgebra, right.coalgebra).verdict;
    out.note(std::string("separation instance: regular ") + (regular ? "true" : "false") + ", AM witness " +
             (witness ? "present" : "absent") + ", toposal " + (toposal ? "true" : "false"));
    out.require(regular && !witness && toposal, "separation instance does not separate");
    return out;
}

Outcome composition() {
    Outcome out;
    expect(out, equivalence_reports(), {"composites of regular bisimulations are regular"}, 300);
    expect(out, equivalence_reports(), {"toposal iff regular"}, 500);
    return out;
}

// 8 -------------------------------------------------------------------------
Outcome lts_oracle() {
    Outcome out;
    FinSet cat;
    const auto subset = ElementOrder::subset();
    Rng rng(108);
    std::size_t bis = 0, sim = 0;
    for (int i = 0; i < 300; ++i) {
        const auto labels = uniform(rng, 1, 3);
        const auto la = random_lts(rng, uniform(rng, 1, 8), labels, 0.15, "s");
        const auto lb = random_lts(rng, uniform(rng, 1, 8), labels, 0.15, "t");
        const auto a = lts_coalgebra(cat, la);
        const auto b = lts_coalgebra(cat, lb);
        if (indices(bisimilarity(cat, a, b), la, lb) == oracle::lts_bisimilarity(to_oracle(la), to_oracle(lb))) ++bis;
        if (indices(similarity(cat, a, b, subset), la, lb) == oracle::lts_simulation(to_oracle(la), to_oracle(lb))) ++sim;
    }
    out.note("bisimilarity matches partition refinement on " + std::to_string(bis) + "/300 pairs");
    out.note("similarity matches the simulation preorder on " + std::to_string(sim) + "/300 pairs");
    out.require(bis == 300 && sim == 300, "disagreement with the LTS oracles");
    return out;
}

// 9 -------------------------------------------------------------------------
Outcome linear_oracle() {
    Outcome out;
    Rng rng(109);
    std::size_t agree = 0, behavioural = 0, probes = 0;
    for (int i = 0; i < 100; ++i) {
        const std::uint32_t p = i % 2 ? 3 : 2;
        VectCategory v(p);
        const auto letters = uniform(rng, 1, 2);
        const auto wa = random_automaton(rng, p, uniform(rng, 1, 4), letters);
        const auto wb = random_automaton(rng, p, uniform(rng, 1, 4), letters);
        const auto a = automaton_coalgebra(v, wa);
        const auto b = automaton_coalgebra(v, wb);
        const auto expected = oracle::linear_bisimilarity(to_oracle(wa), to_oracle(wb));
        const auto r = bisimilarity(v, a, b);
        if (vectors_of(r) == expected) ++agree;
        // every subspace is the pullback of its own pushout, so behavioural
        // equivalences are exactly the linear bisimulations
        for (int k = 0; k < 4; ++k) {
            auto q = r;
            if (k == 1) q = rel_meet(v, r, random_relation(v, rng, a.carrier(), b.carrier()));
            if (k > 1) q = random_relation(v, rng, a.carrier(), b.carrier());
            const bool linear = oracle::is_linear_bisimulation(to_oracle(wa), to_oracle(wb), vectors_of(q));
            ++probes;
            if (is_behavioural_equivalence(v, q, a, b).verdict == linear) ++behavioural;
        }
    }
    out.note("bisimilarity matches kernel refinement on " + std::to_string(agree) + "/100 pairs");
    out.note("behavioural verdicts match on " + std::to_string(behavioural) + "/" + std::to_string(probes) + " relations");
    out.require(agree == 100 && behavioural == probes, "disagreement with the linear oracle");
    return out;
}

// 11 ------------------------------------------------------------------------
Outcome simulation_coherence() {
    Outcome out;
    const auto reps = order_suite(opts_with(500, 111));
    expect(out, reps, {"AM-simulation iff toposal AM-simulation on LTS", "simulation witnesses re-verify"}, 500);
    expect(out, reps, {"preorder", "axiom 1", "axiom 2"}, 500);
    expect(out, reps, {"pointwise <=_P agrees", "<=_P on singletons"}, 500);
    expect(out, reps, {"equality-left witnesses suffice (|R| <= 3)"}, 100);
    expect(out, reps, {"cardinality order breaks axiom 1"}, 1);
    return out;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"allegory laws", allegory},
        {"maps and tabulations", maps},
        {"Kleisli composition is relational composition", kleisli},
        {"monad laws, pseudo-inverses, epis and monos", monad},
        {"canonical distributive laws", distributive},
        {"regular, HJ and behavioural equivalence", equivalence},
        {"choice collapse and the G-set separation", choice},
        {"LTS bisimilarity and similarity oracles", lts_oracle},
        {"weighted automata linear oracle", linear_oracle},
        {"composition closure and toposal verdicts", composition},
        {"simulation coherence and good orders", simulation_coherence},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.require(false, std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        o.require(secs < kBudgetSeconds, "took longer than the time budget");
        if (!o.pass) ++failures;
        char timing[32];
        std::snprintf(timing, sizeof timing, "%.2fs", secs);
        std::cout << "criterion " << (i + 1) << ": " << (o.pass ? "PASS" : "FAIL") << "  " << criteria[i].first << "  ("
                  << timing << ")\n";
        for (const auto& line : o.lines)
            if (!o.pass || !starts_with(line, "failed")) std::cout << "    " << line << "\n";
    }
    std::cout << (failures ? std::to_string(failures) + " criteria failed\n" : "all criteria pass\n");
    return failures ? 1 : 0;
}
