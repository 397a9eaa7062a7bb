#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "regbisim/io.hpp"
#include "support.hpp"

using namespace regbisim;
using support::A;
using support::S;

namespace {

const std::filesystem::path kFixtures = REGBISIM_FIXTURES_DIR;

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Json lts_json(Json transitions) {
    return Json{{"format", kSystemFormat},
                {"backend", "finset"},
                {"functor", {{"name", "pow_labels"}}},
                {"alphabet", {"a"}},
                {"states", {"s0", "s1"}},
                {"transitions", std::move(transitions)}};
}

Json z2_system(Json action, Json structure) {
    return Json{{"format", kSystemFormat},
                {"backend", "gset"},
                {"functor", {{"name", "upair"}}},
                {"group", {{"elements", {"e", "g"}}, {"table", Json::array({Json::array({"e", "g"}), Json::array({"g", "e"})})}}},
                {"states", {"u", "v"}},
                {"action", std::move(action)},
                {"structure", std::move(structure)}};
}

Json vect_json(std::uint32_t p, Json matrix) {
    return Json{{"format", kSystemFormat}, {"backend", "vect"}, {"functor", {{"name", "linear"}}},
                {"prime", p},           {"dimension", 2},    {"alphabet", {"a"}},
                {"output", {1, 0}},     {"matrices", {{"a", std::move(matrix)}}}};
}

template <class F>
InputError input_error(F&& f) {
    try {
        f();
    } catch (const InputError& e) {
        return e;
    }
    FAIL("no InputError raised");
    return InputError(ErrorCode::schema, "", "");
}

}  // namespace

TEST_CASE("a state without transitions has the empty successor set") {
    Json j = {{"format", kSystemFormat}, {"backend", "finset"}, {"functor", {{"name", "pow_labels"}}},
              {"alphabet", {"a"}},       {"states", {"s"}},      {"transitions", Json::array()}};
    const auto sys = std::get<ElemSystem>(parse_system(j));
    CHECK(sys.coalgebra.carrier().size() == 1);
    CHECK(sys.coalgebra.structure()(A("s")) == S({}));
}

TEST_CASE("the 2-cycle survives save and load byte for byte") {
    const auto sys = load_system(kFixtures / "lts_cycle2.json");
    const auto first = dump_canonical(system_to_json(sys));

    const auto tmp = std::filesystem::temp_directory_path() / "regbisim_roundtrip.json";
    write_json(tmp, system_to_json(sys));
    CHECK(slurp(tmp) == first);
    const auto again = load_system(tmp);
    CHECK(dump_canonical(system_to_json(again)) == first);
    std::filesystem::remove(tmp);

    const auto& a = std::get<ElemSystem>(sys).coalgebra.structure();
    CHECK(a(A("s0")) == S({Value::pair(A("a"), A("s1"))}));
}

TEST_CASE("every fixture is a fixed point of load then save") {
    for (const auto* name : {"lts_cycle2.json", "lts_loop1.json", "lts_a.json", "lts_a_or_b.json", "wa_two.json",
                             "wa_one.json", "separation_left.json", "separation_right.json"}) {
        CAPTURE(name);
        const auto once = system_to_json(load_system(kFixtures / name));
        const auto twice = system_to_json(parse_system(Json::parse(dump_canonical(once))));
        CHECK(dump_canonical(once) == dump_canonical(twice));
    }
}

TEST_CASE("random systems and relations round-trip") {
    Rng rng(11);
    for (int t = 0; t < 40; ++t) {
        const auto lts = random_lts(rng, uniform(rng, 1, 5), uniform(rng, 1, 3), 0.35);
        const auto sys = make_lts_system(lts);
        const auto j = system_to_json(sys);
        CHECK(dump_canonical(system_to_json(parse_system(j))) == dump_canonical(j));

        const auto& x = sys.coalgebra.carrier();
        const auto r = random_relation(sys.cat, rng, x, x);
        const auto rj = relation_to_json(r);
        CHECK(parse_relation(rj, sys, sys) == r);
    }
    for (int t = 0; t < 20; ++t) {
        const auto w = random_automaton(rng, t % 2 ? 3 : 2, uniform(rng, 1, 3), uniform(rng, 1, 2));
        const auto sys = make_vect_system(w);
        const auto j = system_to_json(sys);
        CHECK(dump_canonical(system_to_json(parse_system(j))) == dump_canonical(j));

        const auto& x = sys.coalgebra.carrier();
        const auto r = random_relation(sys.cat, rng, x, x);
        CHECK(parse_relation(relation_to_json(r), sys, sys) == r);
    }
}

TEST_CASE("weighted automata load with the output row on top") {
    const auto sys = std::get<VectSystem>(load_system(kFixtures / "wa_two.json"));
    CHECK(sys.automaton.p == 3);
    CHECK(sys.coalgebra.structure().matrix().rows() == 3);
    CHECK(sys.coalgebra.structure().matrix().at(0, 0) == 1);
    CHECK(sys.coalgebra.structure().matrix().at(0, 1) == 1);
    CHECK(sys.coalgebra.structure().matrix().at(1, 1) == 1);
}

TEST_CASE("a transition to a missing state names the file and the index") {
    const auto tmp = std::filesystem::temp_directory_path() / "regbisim_dangling.json";
    write_json(tmp, lts_json({{"s0", "a", "s1"}, {"s1", "a", "s7"}}));
    try {
        load_system(tmp);
        FAIL("accepted a dangling target");
    } catch (const InputError& e) {
        CHECK(e.code() == ErrorCode::dangling_identifier);
        const std::string msg = e.what();
        CHECK(msg.find(tmp.string()) != std::string::npos);
        CHECK(msg.find("/transitions/1/2") != std::string::npos);
        CHECK(msg.find("s7") != std::string::npos);
    }
    std::filesystem::remove(tmp);

    auto e = input_error([] { parse_system(lts_json({{"s0", "b", "s1"}})); });
    CHECK(e.code() == ErrorCode::dangling_identifier);
    CHECK(e.location() == "/transitions/0/1");
}

TEST_CASE("malformed systems get distinct codes") {
    SUBCASE("non-prime modulus") {
        auto e = input_error([] { parse_system(vect_json(4, {{0, 1}, {1, 0}})); });
        CHECK(e.code() == ErrorCode::non_prime);
        CHECK(e.location() == "/prime");
    }
    SUBCASE("entry not reduced") {
        auto e = input_error([] { parse_system(vect_json(3, {{0, 1}, {3, 0}})); });
        CHECK(e.code() == ErrorCode::non_reduced);
        CHECK(e.location() == "/matrices/a/1/0");
    }
    SUBCASE("duplicate states") {
        auto j = lts_json(Json::array());
        j["states"] = {"s0", "s0"};
        auto e = input_error([&] { parse_system(j); });
        CHECK(e.code() == ErrorCode::schema);
        CHECK(e.location() == "/states/1");
    }
    SUBCASE("unknown functor") {
        auto j = lts_json(Json::array());
        j["functor"]["name"] = "powerset";
        CHECK(input_error([&] { parse_system(j); }).code() == ErrorCode::schema);
    }
    SUBCASE("wrong format tag") {
        auto j = lts_json(Json::array());
        j["format"] = "regbisim-system/0";
        CHECK(input_error([&] { parse_system(j); }).location() == "/format");
    }
    SUBCASE("action that is not a group action") {
        // g acts as a constant map, which is not a permutation
        auto j = z2_system({{"e", {{"u", "u"}, {"v", "v"}}}, {"g", {{"u", "u"}, {"v", "u"}}}},
                           {{"u", {{"set", {"u"}}}}, {"v", {{"set", {"v"}}}}});
        auto e = input_error([&] { parse_system(j); });
        CHECK(e.code() == ErrorCode::invalid_action);
        CHECK(e.location() == "/action");
    }
    SUBCASE("structure that ignores the action") {
        // g swaps u and v but both point at u
        auto j = z2_system({{"e", {{"u", "u"}, {"v", "v"}}}, {"g", {{"u", "v"}, {"v", "u"}}}},
                           {{"u", {{"set", {"u"}}}}, {"v", {{"set", {"u"}}}}});
        auto e = input_error([&] { parse_system(j); });
        CHECK(e.code() == ErrorCode::not_equivariant);
        CHECK(e.location() == "/structure");
    }
}

TEST_CASE("relations are validated against both systems") {
    const auto left = std::get<ElemSystem>(load_system(kFixtures / "separation_left.json"));
    const auto right = std::get<ElemSystem>(load_system(kFixtures / "separation_right.json"));

    SUBCASE("half an orbit") {
        Json j = {{"format", kRelationFormat}, {"pairs", Json::array({Json::array({"x0_0", "y0_0"})})}};
        auto e = input_error([&] { parse_relation(j, left, right); });
        CHECK(e.code() == ErrorCode::not_equivariant);
        const std::string msg = e.what();
        CHECK(msg.find("x0_1") != std::string::npos);  // the missing partner is named
    }
    SUBCASE("unknown state") {
        Json j = {{"format", kRelationFormat}, {"pairs", Json::array({Json::array({"x0_0", "nope"})})}};
        auto e = input_error([&] { parse_relation(j, left, right); });
        CHECK(e.code() == ErrorCode::dangling_identifier);
        CHECK(e.location() == "/pairs/0/1");
    }
    SUBCASE("systems under different groups") {
        const auto plain = std::get<ElemSystem>(load_system(kFixtures / "lts_cycle2.json"));
        Json j = {{"format", kRelationFormat}, {"pairs", Json::array()}};
        CHECK(input_error([&] { parse_relation(j, left, plain); }).code() == ErrorCode::backend_mismatch);
    }
    SUBCASE("vect basis of the wrong width") {
        const auto two = std::get<VectSystem>(load_system(kFixtures / "wa_two.json"));
        const auto one = std::get<VectSystem>(load_system(kFixtures / "wa_one.json"));
        Json j = {{"format", kRelationFormat}, {"prime", 3}, {"dom", 1}, {"cod", 1}, {"basis", Json::array()}};
        CHECK(input_error([&] { parse_relation(j, two, one); }).code() == ErrorCode::endpoint_mismatch);
        j["prime"] = 2;
        CHECK(input_error([&] { parse_relation(j, two, one); }).code() == ErrorCode::backend_mismatch);
    }
    SUBCASE("errors from a relation file name the file") {
        try {
            load_relation(kFixtures / "rel_cycle_a.json", left, right);
            FAIL("accepted unknown states");
        } catch (const InputError& e) {
            CHECK(e.code() == ErrorCode::dangling_identifier);
            CHECK(e.location() == (kFixtures / "rel_cycle_a.json").string() + ":/pairs/0/0");
        }
    }
    SUBCASE("the committed relation loads") {
        const auto r = parse_relation(read_json(kFixtures / "separation_relation.json"), left, right);
        CHECK(support::names(r).size() == 5);
    }
}

TEST_CASE("reports carry format, kind and a re-readable witness") {
    const auto sys = std::get<ElemSystem>(load_system(kFixtures / "lts_cycle2.json"));
    const auto& x = sys.coalgebra.carrier();
    const auto diag = rel_identity(sys.cat, x);
    const auto rep = is_am_bisimulation(sys.cat, diag, sys.coalgebra, sys.coalgebra);
    const auto j = report_to_json(rep);
    CHECK(j["format"] == kReportFormat);
    CHECK(j["kind"] == "am");
    CHECK(j["verdict"] == true);
    REQUIRE(j["witness"].is_object());
    REQUIRE(rep.witness_map.has_value());
    const auto& w = *rep.witness_map;
    const auto m = parse_elem_map(j["witness"]["map"], sys.cat, w.source(), w.target(), "/witness/map");
    CHECK(m == w);
}
