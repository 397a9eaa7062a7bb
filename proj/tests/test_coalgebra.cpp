#include "doctest.h"
#include "support.hpp"

#include "regbisim/coalgebra.hpp"

using namespace support;

namespace {

struct System {
    Lts lts;
    Coalgebra<ElemCategory> c;
};

System lts(std::vector<std::string> states, std::vector<std::string> labels,
           std::vector<std::tuple<std::string, std::string, std::string>> edges) {
    Lts l{std::move(states), std::move(labels), std::move(edges)};
    FinSet cat;
    return {l, lts_coalgebra(cat, l)};
}

}  // namespace

TEST_SUITE("coalgebras") {

TEST_CASE("homomorphisms and their graphs") {
    FinSet cat;
    // two a-successors that are both deadlocked collapse onto one
    auto a = lts({"p", "q1", "q2"}, {"a"}, {{"p", "a", "q1"}, {"p", "a", "q2"}});
    auto b = lts({"u", "v"}, {"a"}, {{"u", "a", "v"}});
    const auto& x = a.c.carrier();
    const auto& y = b.c.carrier();
    auto quotient = fn(cat, x, y, {{"p", "u"}, {"q1", "v"}, {"q2", "v"}});
    auto broken = fn(cat, x, y, {{"p", "v"}, {"q1", "v"}, {"q2", "v"}});

    CHECK(is_coalgebra_hom(cat, cat.identity(x), a.c, a.c));
    CHECK(is_am_bisimulation(cat, graph(cat, cat.identity(x)), a.c, a.c).verdict);
    CHECK(is_coalgebra_hom(cat, quotient, a.c, b.c));
    CHECK(is_am_bisimulation(cat, graph(cat, quotient), a.c, b.c).verdict);
    CHECK_FALSE(is_coalgebra_hom(cat, broken, a.c, b.c));
    CHECK_FALSE(is_am_bisimulation(cat, graph(cat, broken), a.c, b.c).verdict);

    Rng rng(12);
    for (int i = 0; i < 100; ++i) {
        auto l1 = random_lts(rng, uniform(rng, 1, 3), 1, 0.5, "s");
        auto l2 = random_lts(rng, uniform(rng, 1, 3), 1, 0.5, "t");
        auto c1 = lts_coalgebra(cat, l1);
        auto c2 = lts_coalgebra(cat, l2);
        auto f = random_morphism(cat, rng, c1.carrier(), c2.carrier());
        REQUIRE(f);
        CHECK(is_coalgebra_hom(cat, *f, c1, c2) == is_am_bisimulation(cat, graph(cat, *f), c1, c2).verdict);
    }
}

TEST_CASE("maximal witnesses") {
    FinSet cat;
    auto cyc = lts({"s0", "s1"}, {"a"}, {{"s0", "a", "s1"}, {"s1", "a", "s0"}});
    auto loop = lts({"u"}, {"a"}, {{"u", "a", "u"}});
    auto d = rel_identity(cat, cyc.c.carrier());
    CHECK(cat.is_regular_epi(max_witness(cat, d, cyc.c, cyc.c).right()));
    auto e = rel_empty(cat, cyc.c.carrier(), loop.c.carrier());
    CHECK(max_witness(cat, e, cyc.c, loop.c).apex().size() == 0);
    auto full = rel_full(cat, cyc.c.carrier(), loop.c.carrier());
    auto w = max_witness(cat, full, cyc.c, loop.c);
    CHECK(cat.is_regular_epi(w.right()));
    CHECK(rel_leq(cat, witness_core(cat, full, cyc.c, loop.c), w));
}

TEST_CASE("a witness exists iff the maximal one covers the relation") {
    FinSet cat;
    Rng rng(13);
    const auto f = ElemFunctor::det({"a"});
    int searched = 0;
    for (int i = 0; i < 200 && searched < 60; ++i) {
        auto x = random_object(cat, rng, uniform(rng, 1, 3), "x");
        auto y = random_object(cat, rng, uniform(rng, 1, 3), "y");
        auto a = random_coalgebra(cat, rng, f, x);
        auto b = random_coalgebra(cat, rng, f, y);
        auto r = random_relation(cat, rng, x, y);
        if (!a || !b || r.apex().size() == 0 || r.apex().size() > 3) continue;
        ++searched;
        auto fr = cat.apply(f, r.apex());
        std::vector<std::pair<Value, Value>> cells;
        for (const auto& t : fr.elements())
            for (const auto& p : r.apex().elements()) cells.emplace_back(t, p);
        bool found = false;
        for (std::size_t mask = 0; mask < (std::size_t{1} << cells.size()) && !found; ++mask) {
            std::vector<std::pair<Value, Value>> pick;
            for (std::size_t k = 0; k < cells.size(); ++k)
                if (mask >> k & 1) pick.push_back(cells[k]);
            found = verify_regular_witness(cat, r, *a, *b, relation_from_pairs(cat, fr, r.apex(), pick));
        }
        CHECK(found == is_regular_am_bisimulation(cat, r, *a, *b).verdict);
    }
    CHECK(searched >= 30);
}

TEST_CASE("verdicts do not depend on the representing mono") {
    FinSet cat;
    Rng rng(14);
    for (int i = 0; i < 50; ++i) {
        auto l1 = random_lts(rng, uniform(rng, 1, 4), 2, 0.4, "s");
        auto l2 = random_lts(rng, uniform(rng, 1, 4), 2, 0.4, "t");
        auto a = lts_coalgebra(cat, l1);
        auto b = lts_coalgebra(cat, l2);
        auto r = random_relation(cat, rng, a.carrier(), b.carrier());
        // rename and reverse the apex, then rebuild from the mono
        std::vector<Value> apex(r.apex().elements().begin(), r.apex().elements().end());
        std::vector<std::string> fresh;
        std::map<Value, Value> back;
        for (std::size_t k = 0; k < apex.size(); ++k) {
            fresh.push_back("z" + std::to_string(apex.size() - k));
            back[A(fresh.back())] = r.mono()(apex[k]);
        }
        auto z = cat.atoms(fresh);
        auto m = cat.morphism(z, r.mono().target(), [&](const Value& v) { return back.at(v); });
        auto r2 = ElemRelation::from_mono(cat, a.carrier(), b.carrier(), m);
        CHECK(r2 == r);
        CHECK(is_regular_am_bisimulation(cat, r2, a, b).verdict == is_regular_am_bisimulation(cat, r, a, b).verdict);
    }
}

TEST_CASE("regular AM-bisimulations on labelled transition systems") {
    FinSet cat;
    auto dead = lts({"d"}, {"a"}, {});
    auto live = lts({"l"}, {"a"}, {{"l", "a", "l"}});
    auto r = rel(cat, dead.c.carrier(), live.c.carrier(), {{"d", "l"}});
    auto rep = is_regular_am_bisimulation(cat, r, dead.c, live.c);
    CHECK_FALSE(rep.verdict);
    REQUIRE(rep.failing_pairs.size() == 1);
    CHECK(rep.failing_pairs[0].find('d') != std::string::npos);
    CHECK(is_regular_am_bisimulation(cat, rel_identity(cat, live.c.carrier()), live.c, live.c).verdict);
    CHECK_FALSE(is_hj_bisimulation(cat, r, dead.c, live.c).verdict);
}

TEST_CASE("bisimilarity") {
    FinSet cat;
    auto cyc = lts({"s0", "s1"}, {"a"}, {{"s0", "a", "s1"}, {"s1", "a", "s0"}});
    auto loop = lts({"u"}, {"a"}, {{"u", "a", "u"}});
    CHECK(names(bisimilarity(cat, cyc.c, loop.c)) == NamePairs{{"s0", "u"}, {"s1", "u"}});
    CHECK(rel_leq(cat, rel_identity(cat, cyc.c.carrier()), bisimilarity(cat, cyc.c, cyc.c)));
    auto ta = lts({"p0", "p1"}, {"a", "b"}, {{"p0", "a", "p1"}});
    auto tb = lts({"q0", "q1"}, {"a", "b"}, {{"q0", "b", "q1"}});
    CHECK(names(bisimilarity(cat, ta.c, tb.c)) == NamePairs{{"p1", "q1"}});
    auto other = lts({"u"}, {"b"}, {{"u", "b", "u"}});
    CHECK_THROWS_AS(bisimilarity(cat, loop.c, other.c), Error);
}

TEST_CASE("bisimilarity agrees with partition refinement") {
    FinSet cat;
    Rng rng(51);
    for (int i = 0; i < 60; ++i) {
        auto la = random_lts(rng, uniform(rng, 1, 5), 2, 0.3, "s");
        auto lb = random_lts(rng, uniform(rng, 1, 5), 2, 0.3, "t");
        auto r = bisimilarity(cat, lts_coalgebra(cat, la), lts_coalgebra(cat, lb));
        CHECK(indices(r, la, lb) == oracle::lts_bisimilarity(to_oracle(la), to_oracle(lb)));
    }
}

TEST_CASE("behavioural closures and equivalences") {
    FinSet cat;
    auto cyc = lts({"s0", "s1"}, {"a"}, {{"s0", "a", "s1"}, {"s1", "a", "s0"}});
    auto loop = lts({"u"}, {"a"}, {{"u", "a", "u"}});
    auto d = rel_identity(cat, cyc.c.carrier());
    auto cl = behavioural_closure(cat, d, cyc.c, cyc.c);
    REQUIRE(cl);
    CHECK(rel_leq(cat, d, cl->relation));
    CHECK(cl->f == cl->g);
    CHECK(is_coalgebra_hom(cat, cl->f, cyc.c, cl->quotient));

    auto half = rel(cat, cyc.c.carrier(), loop.c.carrier(), {{"s0", "u"}, {"s1", "u"}});
    auto cl2 = behavioural_closure(cat, half, cyc.c, loop.c);
    REQUIRE(cl2);
    CHECK(names(cl2->relation) == NamePairs{{"s0", "u"}, {"s1", "u"}});

    // an isomorphic copy
    auto copy = lts({"t0", "t1"}, {"a"}, {{"t0", "a", "t1"}, {"t1", "a", "t0"}});
    auto iso = fn(cat, cyc.c.carrier(), copy.c.carrier(), {{"s0", "t0"}, {"s1", "t1"}});
    auto gi = graph(cat, iso);
    auto cl3 = behavioural_closure(cat, gi, cyc.c, copy.c);
    REQUIRE(cl3);
    CHECK(cl3->relation == gi);
    CHECK(cl3->quotient.carrier().size() == 2);
    CHECK(is_behavioural_equivalence(cat, gi, cyc.c, copy.c).verdict);

    // kernel pair of the collapse onto the loop, and a strict part of it
    auto h = fn(cat, cyc.c.carrier(), loop.c.carrier(), {{"s0", "u"}, {"s1", "u"}});
    auto kp = cat.pullback(h, h);
    auto kernel = ElemRelation::image_of(cat, kp.left, kp.right);
    CHECK(is_behavioural_equivalence(cat, kernel, cyc.c, cyc.c).verdict);
    auto swap = rel(cat, cyc.c.carrier(), cyc.c.carrier(), {{"s0", "s1"}, {"s1", "s0"}});
    CHECK(is_behavioural_equivalence(cat, swap, cyc.c, cyc.c).verdict);

    auto tri = lts({"t0", "t1", "t2"}, {"a"}, {{"t0", "a", "t1"}, {"t1", "a", "t2"}, {"t2", "a", "t0"}});
    auto part = rel(cat, tri.c.carrier(), tri.c.carrier(),
                    {{"t0", "t0"}, {"t1", "t1"}, {"t2", "t2"}, {"t0", "t1"}, {"t1", "t2"}, {"t2", "t0"}});
    CHECK(is_regular_am_bisimulation(cat, part, tri.c, tri.c).verdict);
    auto rep = is_behavioural_equivalence(cat, part, tri.c, tri.c);
    CHECK_FALSE(rep.verdict);
    REQUIRE(rep.closure);
    CHECK(rep.closure->relation == rel_full(cat, tri.c.carrier(), tri.c.carrier()));
}

TEST_CASE("composition of bisimulations") {
    FinSet cat;
    auto cyc = lts({"s0", "s1"}, {"a"}, {{"s0", "a", "s1"}, {"s1", "a", "s0"}});
    auto loop = lts({"u"}, {"a"}, {{"u", "a", "u"}});
    auto d = rel_identity(cat, cyc.c.carrier());
    CHECK(compose_bisimulations(cat, d, d, cyc.c, cyc.c, cyc.c).verdict);
    auto r = bisimilarity(cat, cyc.c, loop.c);
    auto composite = compose_bisimulations(cat, r, rel_dagger(cat, r), cyc.c, loop.c, cyc.c);
    CHECK(composite.verdict);
    CHECK(composite.notes.empty());

    VectCategory v(3);
    Rng rng(15);
    for (int i = 0; i < 20; ++i) {
        auto w1 = random_automaton(rng, 3, uniform(rng, 1, 3), 1);
        auto w2 = random_automaton(rng, 3, uniform(rng, 1, 3), 1);
        auto w3 = random_automaton(rng, 3, uniform(rng, 1, 3), 1);
        auto a = automaton_coalgebra(v, w1);
        auto b = automaton_coalgebra(v, w2);
        auto c = automaton_coalgebra(v, w3);
        auto rep = compose_bisimulations(v, bisimilarity(v, a, b), bisimilarity(v, b, c), a, b, c);
        CHECK(rep.verdict);
    }
}

TEST_CASE("choice: finite sets and vector spaces always have witness maps") {
    FinSet cat;
    Rng rng(16);
    for (int i = 0; i < 100; ++i) {
        auto a = lts_coalgebra(cat, random_lts(rng, uniform(rng, 1, 4), 2, 0.4, "s"));
        auto b = lts_coalgebra(cat, random_lts(rng, uniform(rng, 1, 4), 2, 0.4, "t"));
        auto r = bisimilarity(cat, a, b);
        auto w = am_witness(cat, r, a, b);
        REQUIRE(w);
        CHECK(verify_am_witness(cat, r, a, b, *w));
    }
    VectCategory v(2);
    for (int i = 0; i < 50; ++i) {
        auto a = automaton_coalgebra(v, random_automaton(rng, 2, uniform(rng, 1, 3), 2));
        auto b = automaton_coalgebra(v, random_automaton(rng, 2, uniform(rng, 1, 3), 2));
        auto r = bisimilarity(v, a, b);
        auto w = am_witness(v, r, a, b);
        REQUIRE(w);
        CHECK(verify_am_witness(v, r, a, b, *w));
    }
}

TEST_CASE("equivalent weighted automata") {
    VectCategory v(3);
    WeightedAutomaton two{3, 2, {"a"}, {1, 1}, {ZpMatrix::from_rows(3, {{0, 1}, {1, 0}})}};
    WeightedAutomaton one{3, 1, {"a"}, {2}, {ZpMatrix::from_rows(3, {{1}})}};
    auto a = automaton_coalgebra(v, two);
    auto b = automaton_coalgebra(v, one);
    // x ~ y iff 2 y = x1 + x2
    auto r = relation_from_basis(v, a.carrier(), b.carrier(), ZpMatrix::from_rows(3, {{1, 0, 2}, {0, 1, 2}}));
    CHECK(is_regular_am_bisimulation(v, r, a, b).verdict);
    CHECK(is_hj_bisimulation(v, r, a, b).verdict);
    CHECK(is_behavioural_equivalence(v, r, a, b).verdict);
    CHECK(bisimilarity(v, a, b) == r);
}

TEST_CASE("linear bisimilarity agrees with the kernel oracle") {
    Rng rng(52);
    for (int i = 0; i < 30; ++i) {
        const std::uint32_t p = i % 2 ? 3 : 2;
        VectCategory v(p);
        auto wa = random_automaton(rng, p, uniform(rng, 1, 3), uniform(rng, 1, 2));
        auto wb = random_automaton(rng, p, uniform(rng, 1, 3), wa.alphabet.size());
        auto a = automaton_coalgebra(v, wa);
        auto b = automaton_coalgebra(v, wb);
        auto r = bisimilarity(v, a, b);
        CHECK(vectors_of(r) == oracle::linear_bisimilarity(to_oracle(wa), to_oracle(wb)));
        CHECK(is_behavioural_equivalence(v, r, a, b).verdict);
    }
}

TEST_CASE("covering pullbacks") {
    FinSet cat;
    Rng rng(17);
    std::size_t upair_true = 0, upair_total = 0;
    for (int i = 0; i < 100; ++i) {
        auto x = random_object(cat, rng, uniform(rng, 0, 3), "x");
        auto y = random_object(cat, rng, uniform(rng, 0, 3), "y");
        auto z = random_object(cat, rng, uniform(rng, 1, 3), "z");
        auto u = random_morphism(cat, rng, x, z);
        auto w = random_morphism(cat, rng, y, z);
        CHECK(check_covers_pullbacks_instance(cat, ElemFunctor::identity(), *u, *w));
        CHECK(check_covers_pullbacks_instance(cat, ElemFunctor::pow_labels({"a"}), *u, *w));
        ++upair_total;
        upair_true += check_covers_pullbacks_instance(cat, ElemFunctor::upair(), *u, *w);
    }
    CHECK(upair_total == 100);
    CHECK(ElemFunctor::upair().flags().covers_pullbacks == (upair_true == upair_total));
}

}
