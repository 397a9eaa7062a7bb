#include "regbisim/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "regbisim/power.hpp"

namespace regbisim {

namespace {

[[noreturn]] void schema(const std::string& loc, const std::string& what) {
    throw InputError(ErrorCode::schema, loc.empty() ? "/" : loc, what);
}

const Json& field(const Json& j, const std::string& key, const std::string& loc) {
    if (!j.is_object()) schema(loc, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) schema(loc, "missing field '" + key + "'");
    return *it;
}

std::string as_string(const Json& j, const std::string& loc) {
    if (!j.is_string()) schema(loc, "expected a string");
    return j.get<std::string>();
}

std::vector<std::string> string_list(const Json& j, const std::string& loc, bool unique = true) {
    if (!j.is_array()) schema(loc, "expected an array of strings");
    std::vector<std::string> out;
    std::set<std::string> seen;
    for (std::size_t i = 0; i < j.size(); ++i) {
        auto s = as_string(j[i], loc + "/" + std::to_string(i));
        if (unique && !seen.insert(s).second) schema(loc + "/" + std::to_string(i), "duplicate entry '" + s + "'");
        out.push_back(std::move(s));
    }
    return out;
}

std::uint64_t as_uint(const Json& j, const std::string& loc) {
    if (!j.is_number_integer() || j.get<long long>() < 0) schema(loc, "expected a non-negative integer");
    return j.get<std::uint64_t>();
}

ZpMatrix::Entry entry(const Json& j, std::uint32_t p, const std::string& loc) {
    const auto v = as_uint(j, loc);
    if (v >= p) throw InputError(ErrorCode::non_reduced, loc, std::to_string(v) + " is not reduced mod " + std::to_string(p));
    return static_cast<ZpMatrix::Entry>(v);
}

ZpMatrix matrix_from_json(const Json& j, std::uint32_t p, std::size_t rows, std::size_t cols, const std::string& loc) {
    if (!j.is_array() || j.size() != rows) schema(loc, "expected " + std::to_string(rows) + " rows");
    std::vector<ZpMatrix::Entry> e;
    for (std::size_t r = 0; r < rows; ++r) {
        const auto rl = loc + "/" + std::to_string(r);
        if (!j[r].is_array() || j[r].size() != cols) schema(rl, "expected " + std::to_string(cols) + " entries");
        for (std::size_t c = 0; c < cols; ++c) e.push_back(entry(j[r][c], p, rl + "/" + std::to_string(c)));
    }
    return ZpMatrix(p, rows, cols, std::move(e));
}

Json matrix_to_json(const ZpMatrix& m) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c));
        rows.push_back(std::move(row));
    }
    return rows;
}

/// Rethrows library errors raised while building objects from input as
/// located input errors.
template <class F>
auto located(const std::string& loc, F&& f) {
    try {
        return f();
    } catch (const InputError&) {
        throw;
    } catch (const Error& e) {
        throw InputError(e.code(), loc, e.what());
    }
}

std::uint32_t parse_prime(const Json& j, const std::string& loc) {
    const auto p = as_uint(j, loc);
    if (p >= (1u << 16) || !is_prime(static_cast<std::uint32_t>(p)))
        throw InputError(ErrorCode::non_prime, loc, std::to_string(p) + " is not a prime below 65536");
    return static_cast<std::uint32_t>(p);
}

GroupPtr parse_group(const Json& j) {
    const auto names = string_list(field(j, "elements", "/group"), "/group/elements");
    const auto& table = field(j, "table", "/group");
    if (!table.is_array() || table.size() != names.size()) schema("/group/table", "expected one row per element");
    std::vector<std::vector<std::size_t>> t;
    for (std::size_t a = 0; a < names.size(); ++a) {
        const auto loc = "/group/table/" + std::to_string(a);
        const auto row = string_list(table[a], loc, false);
        if (row.size() != names.size()) schema(loc, "expected one entry per element");
        std::vector<std::size_t> idx;
        for (std::size_t b = 0; b < row.size(); ++b) {
            auto it = std::find(names.begin(), names.end(), row[b]);
            if (it == names.end())
                throw InputError(ErrorCode::dangling_identifier, loc + "/" + std::to_string(b), "unknown group element '" + row[b] + "'");
            idx.push_back(static_cast<std::size_t>(it - names.begin()));
        }
        t.push_back(std::move(idx));
    }
    return located("/group", [&] { return std::make_shared<const FiniteGroup>(names, t); });
}

Json group_to_json(const FiniteGroup& g) {
    Json table = Json::array();
    for (std::size_t a = 0; a < g.order(); ++a) {
        Json row = Json::array();
        for (std::size_t b = 0; b < g.order(); ++b) row.push_back(g.name(g.mul(a, b)));
        table.push_back(std::move(row));
    }
    return {{"elements", g.names()}, {"table", std::move(table)}};
}

bool labelled(const std::string& functor) { return functor == "pow_labels" || functor == "det"; }

ElemFunctor make_functor(const std::string& name, const std::vector<std::string>& alphabet) {
    if (name == "pow_labels") return ElemFunctor::pow_labels(alphabet);
    if (name == "det") return ElemFunctor::det(alphabet);
    if (name == "pow") return ElemFunctor::pow();
    if (name == "upair") return ElemFunctor::upair();
    if (name == "identity") return ElemFunctor::identity();
    schema("/functor/name", "unknown functor '" + name + "' (expected pow_labels, det, pow, upair or identity)");
}

Json entries_to_json(const ElemMorphism& m) {
    Json out = Json::array();
    for (const auto& x : m.source().elements()) out.push_back(Json::array({value_to_json(x), value_to_json(m(x))}));
    return out;
}

Json pairs_to_json(const ElemRelation& r) {
    Json out = Json::array();
    for (const auto& [x, y] : pairs_of(r)) out.push_back(Json::array({value_to_json(x), value_to_json(y)}));
    return out;
}

ElemSystem parse_elem_system(const Json& j, const std::string& backend) {
    const auto functor = as_string(field(field(j, "functor", ""), "name", "/functor"), "/functor/name");
    GroupPtr group = backend == "gset" ? parse_group(field(j, "group", "")) : FiniteGroup::trivial();
    ElemCategory cat(group);
    const auto states = string_list(field(j, "states", ""), "/states");
    std::vector<std::string> alphabet;
    if (labelled(functor)) alphabet = string_list(field(j, "alphabet", ""), "/alphabet");
    const auto f = make_functor(functor, alphabet);

    ElemObject x = cat.atoms(states);
    if (backend == "gset") {
        const auto& action = field(j, "action", "");
        const auto els = x.elements();
        std::vector<std::vector<std::size_t>> table(group->order(), std::vector<std::size_t>(els.size()));
        for (std::size_t g = 0; g < group->order(); ++g) {
            const auto gl = "/action/" + group->name(g);
            const auto& row = field(action, group->name(g), "/action");
            for (std::size_t i = 0; i < els.size(); ++i) {
                const auto& s = els[i].name();
                const auto target = as_string(field(row, s, gl), gl + "/" + s);
                auto k = index_in(els, Value::atom(target));
                if (k == npos) throw InputError(ErrorCode::dangling_identifier, gl + "/" + s, "unknown state '" + target + "'");
                table[g][i] = k;
            }
        }
        x = located("/action", [&] { return cat.gset_object(std::vector<Value>(els.begin(), els.end()), table); });
    }

    std::map<Value, Value> images;
    std::string loc;
    if (j.contains("transitions")) {
        loc = "/transitions";
        if (functor != "pow_labels") schema(loc, "transitions are only meaningful for the pow_labels functor");
        const auto& ts = j["transitions"];
        if (!ts.is_array()) schema(loc, "expected an array of [source, label, target] triples");
        std::map<Value, std::vector<Value>> succ;
        for (std::size_t i = 0; i < ts.size(); ++i) {
            const auto tl = loc + "/" + std::to_string(i);
            const auto triple = string_list(ts[i], tl, false);
            if (triple.size() != 3) schema(tl, "expected [source, label, target]");
            if (!x.contains(Value::atom(triple[0])))
                throw InputError(ErrorCode::dangling_identifier, tl + "/0", "unknown state '" + triple[0] + "'");
            if (std::find(alphabet.begin(), alphabet.end(), triple[1]) == alphabet.end())
                throw InputError(ErrorCode::dangling_identifier, tl + "/1", "unknown label '" + triple[1] + "'");
            if (!x.contains(Value::atom(triple[2])))
                throw InputError(ErrorCode::dangling_identifier, tl + "/2", "unknown state '" + triple[2] + "'");
            succ[Value::atom(triple[0])].push_back(Value::pair(Value::atom(triple[1]), Value::atom(triple[2])));
        }
        for (const auto& s : x.elements()) images[s] = Value::set(succ[s]);
    } else {
        loc = "/structure";
        const auto& st = field(j, "structure", "");
        if (!st.is_object()) schema(loc, "expected an object mapping states to values");
        for (auto it = st.begin(); it != st.end(); ++it)
            if (!x.contains(Value::atom(it.key())))
                throw InputError(ErrorCode::dangling_identifier, loc + "/" + it.key(), "unknown state '" + it.key() + "'");
        for (const auto& s : x.elements()) images[s] = value_from_json(field(st, s.name(), loc), loc + "/" + s.name());
    }
    std::vector<Value> imgs;
    for (const auto& s : x.elements()) imgs.push_back(images[s]);
    auto structure = located(loc, [&] { return cat.morphism(x, cat.apply(f, x), std::move(imgs)); });
    return ElemSystem{cat, functor, alphabet, Coalgebra<ElemCategory>(cat, f, std::move(structure))};
}

VectSystem parse_vect_system(const Json& j) {
    const auto functor = as_string(field(field(j, "functor", ""), "name", "/functor"), "/functor/name");
    if (functor != "linear") schema("/functor/name", "the vect backend supports the linear functor only");
    WeightedAutomaton w;
    w.p = parse_prime(field(j, "prime", ""), "/prime");
    w.dim = as_uint(field(j, "dimension", ""), "/dimension");
    w.alphabet = string_list(field(j, "alphabet", ""), "/alphabet");
    const auto& out = field(j, "output", "");
    if (!out.is_array() || out.size() != w.dim) schema("/output", "expected " + std::to_string(w.dim) + " entries");
    for (std::size_t i = 0; i < w.dim; ++i) w.output.push_back(entry(out[i], w.p, "/output/" + std::to_string(i)));
    const auto& ms = field(j, "matrices", "");
    for (const auto& a : w.alphabet)
        w.matrices.push_back(matrix_from_json(field(ms, a, "/matrices"), w.p, w.dim, w.dim, "/matrices/" + a));
    if (ms.is_object())
        for (auto it = ms.begin(); it != ms.end(); ++it)
            if (std::find(w.alphabet.begin(), w.alphabet.end(), it.key()) == w.alphabet.end())
                throw InputError(ErrorCode::dangling_identifier, "/matrices/" + it.key(), "letter not in the alphabet");
    return make_vect_system(w);
}

}  // namespace

Json value_to_json(const Value& v) {
    switch (v.kind()) {
        case Value::Kind::atom: return v.name();
        case Value::Kind::tuple: {
            Json a = Json::array();
            for (const auto& x : v.items()) a.push_back(value_to_json(x));
            return a;
        }
        case Value::Kind::set: {
            Json a = Json::array();
            for (const auto& x : v.items()) a.push_back(value_to_json(x));
            return {{"set", std::move(a)}};
        }
    }
    return nullptr;
}

Value value_from_json(const Json& j, const std::string& loc) {
    if (j.is_string()) return Value::atom(j.get<std::string>());
    if (j.is_array()) {
        std::vector<Value> items;
        for (std::size_t i = 0; i < j.size(); ++i) items.push_back(value_from_json(j[i], loc + "/" + std::to_string(i)));
        return Value::tuple(std::move(items));
    }
    if (j.is_object() && j.size() == 1 && j.contains("set") && j["set"].is_array()) {
        std::vector<Value> items;
        for (std::size_t i = 0; i < j["set"].size(); ++i)
            items.push_back(value_from_json(j["set"][i], loc + "/set/" + std::to_string(i)));
        return Value::set(std::move(items));
    }
    schema(loc, "expected a value: a string, an array, or {\"set\": [...]}");
}

System parse_system(const Json& j) {
    if (!j.is_object()) schema("", "a system file must be a JSON object");
    if (as_string(field(j, "format", ""), "/format") != kSystemFormat)
        schema("/format", std::string("expected \"") + kSystemFormat + "\"");
    const auto backend = as_string(field(j, "backend", ""), "/backend");
    if (backend == "finset" || backend == "gset") return parse_elem_system(j, backend);
    if (backend == "vect") return parse_vect_system(j);
    schema("/backend", "unknown backend '" + backend + "' (expected finset, gset or vect)");
}

ElemSystem make_lts_system(const Lts& lts) {
    ElemCategory cat;
    auto c = lts_coalgebra(cat, lts);
    auto labels = lts.labels;
    std::sort(labels.begin(), labels.end());
    return ElemSystem{cat, "pow_labels", labels, c};
}

ElemSystem widen_alphabet(const ElemSystem& s, std::vector<std::string> alphabet) {
    if (s.functor != "pow_labels") throw Error(ErrorCode::functor_mismatch, "only pow_labels systems can change alphabet");
    std::sort(alphabet.begin(), alphabet.end());
    alphabet.erase(std::unique(alphabet.begin(), alphabet.end()), alphabet.end());
    for (const auto& l : s.alphabet)
        if (!std::binary_search(alphabet.begin(), alphabet.end(), l))
            throw Error(ErrorCode::invalid_argument, "label '" + l + "' missing from the wider alphabet");
    const auto f = ElemFunctor::pow_labels(alphabet);
    const auto& old = s.coalgebra.structure();
    const auto& x = old.source();
    std::vector<Value> imgs(old.images().begin(), old.images().end());
    auto structure = s.cat.morphism(x, s.cat.apply(f, x), std::move(imgs));
    return ElemSystem{s.cat, s.functor, alphabet, Coalgebra<ElemCategory>(s.cat, f, std::move(structure))};
}

VectSystem make_vect_system(const WeightedAutomaton& w) {
    VectCategory cat(w.p);
    return VectSystem{cat, w, automaton_coalgebra(cat, w)};
}

Json system_to_json(const System& s) {
    if (const auto* v = std::get_if<VectSystem>(&s)) {
        const auto& w = v->automaton;
        Json ms = Json::object();
        for (std::size_t i = 0; i < w.alphabet.size(); ++i) ms[w.alphabet[i]] = matrix_to_json(w.matrices[i]);
        return {{"format", kSystemFormat}, {"backend", "vect"},       {"functor", {{"name", "linear"}}},
                {"prime", w.p},            {"dimension", w.dim},      {"alphabet", w.alphabet},
                {"output", w.output},      {"matrices", std::move(ms)}};
    }
    const auto& e = std::get<ElemSystem>(s);
    const auto& x = e.coalgebra.carrier();
    const auto& group = *e.cat.group();
    Json j = {{"format", kSystemFormat},
              {"backend", group.order() == 1 ? "finset" : "gset"},
              {"functor", {{"name", e.functor}}}};
    Json states = Json::array();
    for (const auto& st : x.elements()) states.push_back(st.name());
    j["states"] = std::move(states);
    if (labelled(e.functor)) j["alphabet"] = e.alphabet;
    if (group.order() > 1) {
        j["group"] = group_to_json(group);
        Json action = Json::object();
        for (std::size_t g = 0; g < group.order(); ++g) {
            Json row = Json::object();
            for (const auto& st : x.elements()) row[st.name()] = x.act(g, st).name();
            action[group.name(g)] = std::move(row);
        }
        j["action"] = std::move(action);
    }
    const auto& alpha = e.coalgebra.structure();
    if (e.functor == "pow_labels") {
        Json ts = Json::array();
        for (const auto& st : x.elements()) {
            const Value succ = alpha(st);
            for (const auto& t : succ.items()) ts.push_back(Json::array({st.name(), t[0].name(), t[1].name()}));
        }
        j["transitions"] = std::move(ts);
    } else {
        Json st = Json::object();
        for (const auto& s0 : x.elements()) st[s0.name()] = value_to_json(alpha(s0));
        j["structure"] = std::move(st);
    }
    return j;
}

ElemRelation parse_relation(const Json& j, const ElemSystem& a, const ElemSystem& b) {
    if (!j.is_object()) schema("", "a relation file must be a JSON object");
    if (as_string(field(j, "format", ""), "/format") != kRelationFormat)
        schema("/format", std::string("expected \"") + kRelationFormat + "\"");
    const auto& ps = field(j, "pairs", "");
    if (!ps.is_array()) schema("/pairs", "expected an array of pairs");
    const auto& x = a.coalgebra.carrier();
    const auto& y = b.coalgebra.carrier();
    std::vector<std::pair<Value, Value>> pairs;
    for (std::size_t i = 0; i < ps.size(); ++i) {
        const auto loc = "/pairs/" + std::to_string(i);
        if (!ps[i].is_array() || ps[i].size() != 2) schema(loc, "expected [left, right]");
        Value l = value_from_json(ps[i][0], loc + "/0");
        Value r = value_from_json(ps[i][1], loc + "/1");
        if (!x.contains(l)) throw InputError(ErrorCode::dangling_identifier, loc + "/0", "unknown state " + l.str());
        if (!y.contains(r)) throw InputError(ErrorCode::dangling_identifier, loc + "/1", "unknown state " + r.str());
        pairs.emplace_back(std::move(l), std::move(r));
    }
    if (!(*a.cat.group() == *b.cat.group()))
        throw InputError(ErrorCode::backend_mismatch, "", "the two systems act under different groups");
    return located("/pairs", [&] { return relation_from_pairs(a.cat, x, y, pairs); });
}

VectRelation parse_relation(const Json& j, const VectSystem& a, const VectSystem& b) {
    if (!j.is_object()) schema("", "a relation file must be a JSON object");
    if (as_string(field(j, "format", ""), "/format") != kRelationFormat)
        schema("/format", std::string("expected \"") + kRelationFormat + "\"");
    const auto p = parse_prime(field(j, "prime", ""), "/prime");
    if (p != a.cat.prime() || p != b.cat.prime())
        throw InputError(ErrorCode::backend_mismatch, "/prime", "prime differs from the systems' prime");
    const auto n = a.coalgebra.carrier().dim;
    const auto m = b.coalgebra.carrier().dim;
    if (as_uint(field(j, "dom", ""), "/dom") != n) throw InputError(ErrorCode::endpoint_mismatch, "/dom", "dimension differs from the first system");
    if (as_uint(field(j, "cod", ""), "/cod") != m) throw InputError(ErrorCode::endpoint_mismatch, "/cod", "dimension differs from the second system");
    const auto& basis = field(j, "basis", "");
    if (!basis.is_array()) schema("/basis", "expected an array of rows");
    auto mat = matrix_from_json(basis, p, basis.size(), n + m, "/basis");
    return located("/basis", [&] { return relation_from_basis(a.cat, a.coalgebra.carrier(), b.coalgebra.carrier(), mat); });
}

Json relation_to_json(const ElemRelation& r) { return {{"format", kRelationFormat}, {"pairs", pairs_to_json(r)}}; }

Json relation_to_json(const VectRelation& r) {
    return {{"format", kRelationFormat},
            {"prime", r.dom().p},
            {"dom", r.dom().dim},
            {"cod", r.cod().dim},
            {"basis", matrix_to_json(basis_of(r))}};
}

namespace {

Json report_skeleton(CheckKind kind, bool verdict, const std::vector<std::string>& failing,
                     const std::vector<std::string>& notes) {
    return {{"format", kReportFormat}, {"kind", to_string(kind)}, {"verdict", verdict},
            {"failing_pairs", failing}, {"notes", notes}, {"witness", nullptr}};
}

}  // namespace

Json report_to_json(const WitnessReport<ElemCategory>& rep) {
    Json j = report_skeleton(rep.kind, rep.verdict, rep.failing_pairs, rep.notes);
    Json w = Json::object();
    if (rep.witness_map) w["map"] = entries_to_json(*rep.witness_map);
    if (rep.witness_relation) w["relation"] = pairs_to_json(*rep.witness_relation);
    if (rep.closure) {
        const auto& cl = *rep.closure;
        const auto& z = cl.quotient.carrier();
        Json states = Json::array();
        for (const auto& s : z.elements()) states.push_back(value_to_json(s));
        Json cospan = {{"states", std::move(states)},
                       {"structure", entries_to_json(cl.quotient.structure())},
                       {"f", entries_to_json(cl.f)},
                       {"g", entries_to_json(cl.g)},
                       {"relation", pairs_to_json(cl.relation)}};
        const auto& group = *z.group();
        if (group.order() > 1) {
            Json action = Json::object();
            for (std::size_t g = 0; g < group.order(); ++g) {
                Json rows = Json::array();
                for (const auto& s : z.elements()) rows.push_back(Json::array({value_to_json(s), value_to_json(z.act(g, s))}));
                action[group.name(g)] = std::move(rows);
            }
            cospan["action"] = std::move(action);
        }
        w["cospan"] = std::move(cospan);
    }
    if (!w.empty()) j["witness"] = std::move(w);
    return j;
}

Json report_to_json(const WitnessReport<VectCategory>& rep) {
    Json j = report_skeleton(rep.kind, rep.verdict, rep.failing_pairs, rep.notes);
    Json w = Json::object();
    if (rep.witness_map) w["map"] = matrix_to_json(rep.witness_map->matrix());
    if (rep.witness_relation) w["relation"] = relation_to_json(*rep.witness_relation)["basis"];
    if (rep.closure) {
        const auto& cl = *rep.closure;
        w["cospan"] = {{"dimension", cl.quotient.carrier().dim},
                       {"structure", matrix_to_json(cl.quotient.structure().matrix())},
                       {"f", matrix_to_json(cl.f.matrix())},
                       {"g", matrix_to_json(cl.g.matrix())},
                       {"relation", matrix_to_json(basis_of(cl.relation))}};
    }
    if (!w.empty()) j["witness"] = std::move(w);
    return j;
}

Json report_to_json(const SimWitnessReport& rep) {
    Json j = report_skeleton(rep.kind, rep.verdict, rep.failing_pairs, rep.notes);
    Json w = Json::object();
    if (rep.witness_map) w["map"] = entries_to_json(*rep.witness_map);
    if (rep.witness_relation) w["relation"] = pairs_to_json(*rep.witness_relation);
    if (!w.empty()) j["witness"] = std::move(w);
    return j;
}

Json law_report_to_json(const LawReport& rep) {
    return {{"name", rep.name},         {"ok", rep.ok()},       {"checked", rep.checked}, {"skipped", rep.skipped},
            {"exhibits", rep.exhibits}, {"notes", rep.notes},   {"suppressed", rep.suppressed}};
}

ElemMorphism parse_elem_map(const Json& j, const ElemCategory& cat, const ElemObject& source, const ElemObject& target,
                            const std::string& loc) {
    if (!j.is_array()) schema(loc, "expected an array of [element, image] entries");
    std::map<Value, Value> m;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const auto el = loc + "/" + std::to_string(i);
        if (!j[i].is_array() || j[i].size() != 2) schema(el, "expected [element, image]");
        m[value_from_json(j[i][0], el + "/0")] = value_from_json(j[i][1], el + "/1");
    }
    std::vector<Value> images;
    for (const auto& x : source.elements()) {
        auto it = m.find(x);
        if (it == m.end()) throw InputError(ErrorCode::dangling_identifier, loc, "no image given for " + x.str());
        images.push_back(it->second);
    }
    if (m.size() != source.size()) throw InputError(ErrorCode::dangling_identifier, loc, "entries for elements outside the source");
    return located(loc, [&] { return cat.morphism(source, target, std::move(images)); });
}

ElemRelation parse_elem_relation(const Json& j, const ElemCategory& cat, const ElemObject& dom, const ElemObject& cod,
                                 const std::string& loc) {
    if (!j.is_array()) schema(loc, "expected an array of pairs");
    std::vector<std::pair<Value, Value>> pairs;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const auto el = loc + "/" + std::to_string(i);
        if (!j[i].is_array() || j[i].size() != 2) schema(el, "expected [left, right]");
        pairs.emplace_back(value_from_json(j[i][0], el + "/0"), value_from_json(j[i][1], el + "/1"));
    }
    return located(loc, [&] { return relation_from_pairs(cat, dom, cod, pairs); });
}

VectMorphism parse_vect_map(const Json& j, const VectCategory& cat, const VectObject& source, const VectObject& target,
                            const std::string& loc) {
    return located(loc, [&] {
        return cat.morphism(source, target, matrix_from_json(j, cat.prime(), target.dim, source.dim, loc));
    });
}

Json read_json(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InputError(ErrorCode::schema, path.string(), "cannot open file");
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw InputError(ErrorCode::schema, path.string(), std::string("malformed JSON: ") + e.what());
    }
}

std::string dump_canonical(const Json& j) { return j.dump(2) + "\n"; }

void write_json(const std::filesystem::path& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorCode::invalid_argument, "cannot write " + path.string());
    out << dump_canonical(j);
}

namespace {

template <class F>
auto in_file(const std::filesystem::path& path, F&& parse) {
    auto j = read_json(path);
    try {
        return parse(j);
    } catch (const InputError& e) {
        throw InputError(e.code(), path.string() + ":" + e.location(), std::string(e.what()).substr(e.location().size() + 2));
    }
}

}  // namespace

System load_system(const std::filesystem::path& path) {
    return in_file(path, [](const Json& j) { return parse_system(j); });
}

ElemRelation load_relation(const std::filesystem::path& path, const ElemSystem& a, const ElemSystem& b) {
    return in_file(path, [&](const Json& j) { return parse_relation(j, a, b); });
}

VectRelation load_relation(const std::filesystem::path& path, const VectSystem& a, const VectSystem& b) {
    return in_file(path, [&](const Json& j) { return parse_relation(j, a, b); });
}

}  // namespace regbisim
