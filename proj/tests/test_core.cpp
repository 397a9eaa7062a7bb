#include "doctest.h"
#include "support.hpp"

using namespace support;

TEST_SUITE("finite sets") {

TEST_CASE("composition of tables and identities") {
    FinSet cat;
    auto x = cat.atoms({"1", "2"});
    auto y = cat.atoms({"a", "b"});
    auto z = cat.atoms({"u"});
    auto f = fn(cat, x, y, {{"1", "a"}, {"2", "a"}});
    auto g = fn(cat, y, z, {{"a", "u"}, {"b", "u"}});
    CHECK(cat.compose(cat.identity(y), f) == f);
    CHECK(cat.compose(f, cat.identity(x)) == f);
    CHECK(cat.compose(g, f) == fn(cat, x, z, {{"1", "u"}, {"2", "u"}}));
    CHECK_THROWS_AS(cat.compose(f, g), Error);
}

TEST_CASE("products") {
    FinSet cat;
    auto x = cat.atoms({"1", "2"});
    auto y = cat.atoms({"a", "b", "c"});
    auto p = cat.product(x, y);
    CHECK(p.object.size() == 6);
    CHECK(cat.pair(p.pi1, p.pi2) == cat.identity(p.object));
    auto t = cat.product(x, cat.terminal());
    CHECK(cat.is_mono(t.pi1));
    CHECK(cat.is_regular_epi(t.pi1));
    auto f = fn(cat, x, y, {{"1", "a"}, {"2", "c"}});
    auto h = cat.pair(cat.identity(x), f);
    CHECK(cat.compose(p.pi1, h) == cat.identity(x));
    CHECK(cat.compose(p.pi2, h) == f);
}

TEST_CASE("pullbacks") {
    FinSet cat;
    auto x = cat.atoms({"1", "2"});
    auto c = cat.atoms({"c", "d"});
    auto id = cat.pullback(cat.identity(x), cat.identity(x));
    CHECK(id.apex.size() == 2);
    CHECK(cat.is_mono(id.left));
    CHECK(cat.is_regular_epi(id.left));

    auto f = fn(cat, x, c, {{"1", "c"}, {"2", "c"}});
    auto a = cat.atoms({"a"});
    auto g = fn(cat, a, c, {{"a", "c"}});
    auto pb = cat.pullback(f, g);
    std::vector<Value> apex(pb.apex.elements().begin(), pb.apex.elements().end());
    CHECK(apex == std::vector<Value>{Value::pair(A("1"), A("a")), Value::pair(A("2"), A("a"))});

    auto g2 = fn(cat, a, c, {{"a", "d"}});
    CHECK(cat.pullback(f, g2).apex.size() == 0);
}

TEST_CASE("pushouts") {
    FinSet cat;
    auto x = cat.atoms({"1", "2"});
    auto po = cat.pushout(cat.identity(x), cat.identity(x));
    CHECK(po.apex.size() == 2);
    CHECK(po.left == po.right);

    auto y = cat.atoms({"a"});
    auto empty = cat.initial();
    auto copro = cat.pushout(cat.from_initial(x), cat.from_initial(y));
    CHECK(copro.apex.size() == 3);
    CHECK(empty.size() == 0);

    auto c = cat.atoms({"c"});
    auto po2 = cat.pushout(fn(cat, c, x, {{"c", "1"}}), fn(cat, c, y, {{"c", "a"}}));
    CHECK(po2.apex.size() == 2);
    CHECK(po2.left(A("1")) == po2.right(A("a")));
    CHECK(po2.left(A("2")) != po2.right(A("a")));
}

TEST_CASE("image factorization") {
    FinSet cat;
    auto x = cat.atoms({"1", "2", "3"});
    auto y = cat.atoms({"a", "b", "c"});
    auto f = fn(cat, x, y, {{"1", "a"}, {"2", "a"}, {"3", "b"}});
    auto fac = cat.factorize(f);
    std::vector<Value> image(fac.mono.source().elements().begin(), fac.mono.source().elements().end());
    CHECK(image == std::vector<Value>{A("a"), A("b")});
    CHECK(cat.compose(fac.mono, fac.epi) == f);
    CHECK(cat.is_regular_epi(fac.epi));
    CHECK(cat.is_mono(fac.mono));

    auto m = fn(cat, x, y, {{"1", "a"}, {"2", "b"}, {"3", "c"}});
    auto fm = cat.factorize(m);
    CHECK(cat.is_mono(fm.epi));
    CHECK(cat.is_regular_epi(fm.epi));

    auto k = fn(cat, x, y, {{"1", "c"}, {"2", "c"}, {"3", "c"}});
    CHECK(cat.factorize(k).mono.source().size() == 1);
}

TEST_CASE("monos and regular epis") {
    FinSet cat;
    auto x = cat.atoms({"1", "2"});
    auto y = cat.atoms({"a", "b"});
    CHECK(cat.is_mono(cat.identity(x)));
    CHECK(cat.is_regular_epi(cat.identity(x)));
    auto f = fn(cat, x, y, {{"1", "a"}, {"2", "a"}});
    CHECK_FALSE(cat.is_mono(f));
    CHECK_FALSE(cat.is_regular_epi(f));
    auto one = cat.atoms({"1"});
    auto inc = fn(cat, one, x, {{"1", "1"}});
    CHECK(cat.is_mono(inc));
    CHECK_FALSE(cat.is_regular_epi(inc));
}

TEST_CASE("solving factorizations") {
    FinSet cat;
    auto one = cat.atoms({"1"});
    auto ab = cat.atoms({"a", "b"});
    auto c = cat.atoms({"c", "d"});
    auto h = fn(cat, one, c, {{"1", "c"}});
    CHECK(cat.solve_factorization(h, cat.identity(c)) == h);
    auto through = fn(cat, ab, c, {{"a", "c"}, {"b", "c"}});
    auto u = cat.solve_factorization(h, through);
    REQUIRE(u);
    CHECK(*u == fn(cat, one, ab, {{"1", "a"}}));
    auto outside = fn(cat, one, c, {{"1", "d"}});
    CHECK_FALSE(cat.solve_factorization(outside, through));
}

TEST_CASE("mediating morphisms") {
    FinSet cat;
    auto x = cat.atoms({"1", "2"});
    auto c = cat.atoms({"c"});
    auto a = cat.atoms({"a", "b"});
    auto f = fn(cat, x, c, {{"1", "c"}, {"2", "c"}});
    auto g = fn(cat, a, c, {{"a", "c"}, {"b", "c"}});
    auto pb = cat.pullback(f, g);
    CHECK(cat.mediate_pullback(pb, pb.left, pb.right) == cat.identity(pb.apex));

    auto e = cat.initial();
    auto m = cat.mediate_pullback(pb, cat.from_initial(x), cat.from_initial(a));
    CHECK(m.source() == e);

    auto one = cat.atoms({"z"});
    auto c1 = fn(cat, one, x, {{"z", "2"}});
    auto c2 = fn(cat, one, a, {{"z", "a"}});
    auto med = cat.mediate_pullback(pb, c1, c2);
    CHECK(cat.compose(pb.left, med) == c1);
    CHECK(cat.compose(pb.right, med) == c2);

    auto y = cat.atoms({"p", "q"});
    auto bad = cat.pullback(fn(cat, x, y, {{"1", "p"}, {"2", "p"}}), fn(cat, a, y, {{"a", "p"}, {"b", "q"}}));
    CHECK_THROWS_AS(cat.mediate_pullback(bad, fn(cat, one, x, {{"z", "1"}}), fn(cat, one, a, {{"z", "b"}})), Error);
}

TEST_CASE("regular epis split in finite sets") {
    FinSet cat;
    Rng rng(7);
    for (int i = 0; i < 50; ++i) {
        auto x = random_object(cat, rng, uniform(rng, 1, 5), "x");
        auto y = random_object(cat, rng, uniform(rng, 1, 3), "y");
        auto f = random_morphism(cat, rng, x, y);
        REQUIRE(f);
        auto e = cat.factorize(*f).epi;
        auto s = cat.solve_factorization(cat.identity(e.target()), e);
        REQUIRE(s);
        CHECK(cat.compose(e, *s) == cat.identity(e.target()));
    }
}

TEST_CASE("regular epis are stable under pullback") {
    FinSet cat;
    Rng rng(11);
    for (int i = 0; i < 100; ++i) {
        auto x = random_object(cat, rng, uniform(rng, 1, 4), "x");
        auto y = random_object(cat, rng, uniform(rng, 0, 4), "y");
        auto z = random_object(cat, rng, uniform(rng, 1, 3), "z");
        auto e = cat.factorize(*random_morphism(cat, rng, x, z)).epi;
        auto g = random_morphism(cat, rng, y, e.target());
        if (!g) continue;
        auto pb = cat.pullback(e, *g);
        CHECK(cat.is_regular_epi(pb.right));
    }
}

}
