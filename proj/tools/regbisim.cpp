// Command-line front end: checks, fixpoints, witness re-verification and law suites.
//
// Exit codes: 0 verdict true / suite passed, 1 verdict false / law violated,
// 2 usage or validation error.

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "regbisim/io.hpp"
#include "regbisim/laws.hpp"
#include "regbisim/power.hpp"
#include "regbisim/simulation.hpp"

using namespace regbisim;

namespace {

constexpr int kTrue = 0;
constexpr int kFalse = 1;
constexpr int kUsage = 2;

struct Inputs {
    std::string sys_a, sys_b, relation, report;
    std::string kind = "regular";
    std::string order;
};

CheckKind parse_kind(const std::string& s) {
    for (auto k : {CheckKind::am, CheckKind::regular, CheckKind::hj, CheckKind::behavioural, CheckKind::toposal,
                   CheckKind::simulation, CheckKind::toposal_simulation})
        if (s == to_string(k)) return k;
    throw Error(ErrorCode::invalid_argument, "unknown kind '" + s + "'");
}

bool is_simulation(CheckKind k) { return k == CheckKind::simulation || k == CheckKind::toposal_simulation; }

std::string default_order(const ElemSystem& s) {
    return s.functor == "pow" || s.functor == "pow_labels" ? "subset" : "discrete";
}

void emit(const Json& j) { std::cout << dump_canonical(j) << std::flush; }

template <class Sys>
const Sys& same_backend(const System& s, const char* which) {
    if (const auto* p = std::get_if<Sys>(&s)) return *p;
    throw Error(ErrorCode::backend_mismatch, std::string(which) + " uses a different backend");
}

// Transition systems over different label sets are compared over the union.
std::pair<ElemSystem, ElemSystem> common_alphabet(const ElemSystem& a, const ElemSystem& b) {
    if (a.functor != "pow_labels" || b.functor != "pow_labels" || a.alphabet == b.alphabet) return {a, b};
    auto labels = a.alphabet;
    labels.insert(labels.end(), b.alphabet.begin(), b.alphabet.end());
    return {widen_alphabet(a, labels), widen_alphabet(b, labels)};
}

int check_elem(const ElemSystem& a, const ElemSystem& b, const Inputs& in) {
    const auto r = load_relation(in.relation, a, b);
    const auto kind = parse_kind(in.kind);
    const auto& cat = a.cat;
    if (is_simulation(kind)) {
        const auto order_name = in.order.empty() ? default_order(a) : in.order;
        const auto ord = order_by_name(order_name);
        require_same_functor(a.coalgebra, b.coalgebra);
        auto rep = kind == CheckKind::simulation ? is_am_simulation(cat, r, a.coalgebra, b.coalgebra, ord)
                                                 : is_toposal_am_simulation(cat, r, a.coalgebra, b.coalgebra, ord);
        auto j = report_to_json(rep);
        j["order"] = order_name;
        emit(j);
        return rep.verdict ? kTrue : kFalse;
    }
    if (!in.order.empty()) throw Error(ErrorCode::invalid_argument, "--order only applies to simulation kinds");
    WitnessReport<ElemCategory> rep;
    switch (kind) {
        case CheckKind::am: rep = is_am_bisimulation(cat, r, a.coalgebra, b.coalgebra); break;
        case CheckKind::regular: rep = is_regular_am_bisimulation(cat, r, a.coalgebra, b.coalgebra); break;
        case CheckKind::hj: rep = is_hj_bisimulation(cat, r, a.coalgebra, b.coalgebra); break;
        case CheckKind::behavioural: rep = is_behavioural_equivalence(cat, r, a.coalgebra, b.coalgebra); break;
        default: rep = is_toposal_am_bisimulation(cat, r, a.coalgebra, b.coalgebra); break;
    }
    emit(report_to_json(rep));
    return rep.verdict ? kTrue : kFalse;
}

int check_vect(const VectSystem& a, const VectSystem& b, const Inputs& in) {
    const auto r = load_relation(in.relation, a, b);
    const auto kind = parse_kind(in.kind);
    const auto& cat = a.cat;
    if (!in.order.empty()) throw Error(ErrorCode::invalid_argument, "--order only applies to simulation kinds");
    WitnessReport<VectCategory> rep;
    switch (kind) {
        case CheckKind::am: rep = is_am_bisimulation(cat, r, a.coalgebra, b.coalgebra); break;
        case CheckKind::regular: rep = is_regular_am_bisimulation(cat, r, a.coalgebra, b.coalgebra); break;
        case CheckKind::hj: rep = is_hj_bisimulation(cat, r, a.coalgebra, b.coalgebra); break;
        case CheckKind::behavioural: rep = is_behavioural_equivalence(cat, r, a.coalgebra, b.coalgebra); break;
        default:
            throw Error(ErrorCode::capability,
                        std::string("kind '") + to_string(kind) + "' needs power objects; the vect backend has none");
    }
    emit(report_to_json(rep));
    return rep.verdict ? kTrue : kFalse;
}

const Json& witness_part(const Json& report, const char* part) {
    const auto& w = report.at("witness");
    if (w.is_null()) throw InputError(ErrorCode::schema, "/witness", "the report has no witness to verify");
    if (!w.is_object() || !w.contains(part))
        throw InputError(ErrorCode::schema, std::string("/witness/") + part, "the report carries no such witness");
    return w.at(part);
}

ElemObject cospan_object(const ElemCategory& cat, const Json& c) {
    std::vector<Value> states;
    for (std::size_t i = 0; i < c.at("states").size(); ++i)
        states.push_back(value_from_json(c["states"][i], "/witness/cospan/states/" + std::to_string(i)));
    if (!c.contains("action")) return cat.object(states);
    const auto plain = cat.object(states);
    const auto sorted = plain.elements();
    std::vector<Value> els(sorted.begin(), sorted.end());
    const auto& group = *cat.group();
    std::vector<std::vector<std::size_t>> table(group.order(), std::vector<std::size_t>(els.size()));
    for (std::size_t g = 0; g < group.order(); ++g) {
        const auto loc = "/witness/cospan/action/" + group.name(g);
        const auto& rows = c.at("action").at(group.name(g));
        for (std::size_t i = 0; i < rows.size(); ++i) {
            auto from = index_in(els, value_from_json(rows[i].at(0), loc));
            auto to = index_in(els, value_from_json(rows[i].at(1), loc));
            if (from == npos || to == npos) throw InputError(ErrorCode::dangling_identifier, loc, "unknown state");
            table[g][from] = to;
        }
    }
    return cat.gset_object(els, table);
}

bool verify_elem(const ElemSystem& a, const ElemSystem& b, const ElemRelation& r, const Json& report,
                 const std::string& order_flag) {
    const auto kind = parse_kind(report.at("kind").get<std::string>());
    const auto& cat = a.cat;
    const auto& f = a.coalgebra.functor();
    require_between(r, a.coalgebra, b.coalgebra);
    const auto fr = cat.apply(f, r.apex());
    switch (kind) {
        case CheckKind::am:
            return verify_am_witness(cat, r, a.coalgebra, b.coalgebra,
                                     parse_elem_map(witness_part(report, "map"), cat, r.apex(), fr, "/witness/map"));
        case CheckKind::regular:
            return verify_regular_witness(
                cat, r, a.coalgebra, b.coalgebra,
                parse_elem_relation(witness_part(report, "relation"), cat, fr, r.apex(), "/witness/relation"));
        case CheckKind::hj: {
            const auto target = cat.factorize(lifted_pairing(cat, r, f)).mono.source();
            return verify_hj_witness(cat, r, a.coalgebra, b.coalgebra,
                                     parse_elem_map(witness_part(report, "map"), cat, r.apex(), target, "/witness/map"));
        }
        case CheckKind::behavioural: {
            const auto& c = witness_part(report, "cospan");
            const auto z = cospan_object(cat, c);
            auto gamma = parse_elem_map(c.at("structure"), cat, z, cat.apply(f, z), "/witness/cospan/structure");
            auto fm = parse_elem_map(c.at("f"), cat, a.coalgebra.carrier(), z, "/witness/cospan/f");
            auto gm = parse_elem_map(c.at("g"), cat, b.coalgebra.carrier(), z, "/witness/cospan/g");
            BehaviouralClosure<ElemCategory> cl{r, Coalgebra<ElemCategory>(cat, f, gamma), fm, gm};
            return verify_behavioural(cat, r, a.coalgebra, b.coalgebra, cl);
        }
        case CheckKind::toposal:
            return verify_toposal_witness(
                cat, r, a.coalgebra, b.coalgebra,
                parse_elem_map(witness_part(report, "map"), cat, r.apex(), pow_of(cat, fr), "/witness/map"));
        case CheckKind::simulation:
        case CheckKind::toposal_simulation: {
            auto order_name = order_flag;
            if (order_name.empty()) order_name = report.value("order", default_order(a));
            const auto ord = order_by_name(order_name);
            if (kind == CheckKind::simulation)
                return verify_simulation_witness(
                    cat, r, a.coalgebra, b.coalgebra, ord,
                    parse_elem_map(witness_part(report, "map"), cat, r.apex(), fr, "/witness/map"));
            return verify_toposal_simulation_witness(
                cat, r, a.coalgebra, b.coalgebra, ord,
                parse_elem_map(witness_part(report, "map"), cat, r.apex(), pow_of(cat, fr), "/witness/map"));
        }
    }
    return false;
}

bool verify_vect(const VectSystem& a, const VectSystem& b, const VectRelation& r, const Json& report) {
    const auto kind = parse_kind(report.at("kind").get<std::string>());
    const auto& cat = a.cat;
    const auto& f = a.coalgebra.functor();
    require_between(r, a.coalgebra, b.coalgebra);
    const auto fr = cat.apply(f, r.apex());
    switch (kind) {
        case CheckKind::am:
            return verify_am_witness(cat, r, a.coalgebra, b.coalgebra,
                                     parse_vect_map(witness_part(report, "map"), cat, r.apex(), fr, "/witness/map"));
        case CheckKind::regular: {
            const auto& basis = witness_part(report, "relation");
            std::vector<ZpMatrix::Entry> e;
            for (const auto& row : basis)
                for (const auto& x : row) e.push_back(x.get<ZpMatrix::Entry>());
            ZpMatrix m(cat.prime(), basis.size(), fr.dim + r.apex().dim, std::move(e));
            return verify_regular_witness(cat, r, a.coalgebra, b.coalgebra, relation_from_basis(cat, fr, r.apex(), m));
        }
        case CheckKind::hj: {
            const auto target = cat.factorize(lifted_pairing(cat, r, f)).mono.source();
            return verify_hj_witness(cat, r, a.coalgebra, b.coalgebra,
                                     parse_vect_map(witness_part(report, "map"), cat, r.apex(), target, "/witness/map"));
        }
        case CheckKind::behavioural: {
            const auto& c = witness_part(report, "cospan");
            const auto z = cat.object(c.at("dimension").get<std::size_t>());
            auto gamma = parse_vect_map(c.at("structure"), cat, z, cat.apply(f, z), "/witness/cospan/structure");
            auto fm = parse_vect_map(c.at("f"), cat, a.coalgebra.carrier(), z, "/witness/cospan/f");
            auto gm = parse_vect_map(c.at("g"), cat, b.coalgebra.carrier(), z, "/witness/cospan/g");
            BehaviouralClosure<VectCategory> cl{r, Coalgebra<VectCategory>(cat, f, gamma), fm, gm};
            return verify_behavioural(cat, r, a.coalgebra, b.coalgebra, cl);
        }
        default:
            throw Error(ErrorCode::capability, "the vect backend has no power objects");
    }
}

void apply_caps(LawOptions& opts, const std::string& list) {
    std::istringstream in(list);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty()) continue;
        const auto eq = item.find('=');
        if (eq == std::string::npos) throw Error(ErrorCode::invalid_argument, "REGBISIM_CAPS: expected key=value, got '" + item + "'");
        const auto key = item.substr(0, eq);
        std::size_t value = 0;
        try {
            value = std::stoull(item.substr(eq + 1));
        } catch (const std::exception&) {
            throw Error(ErrorCode::invalid_argument, "REGBISIM_CAPS: bad number in '" + item + "'");
        }
        if (key == "trials") opts.trials = value;
        else if (key == "seed") opts.seed = value;
        else if (key == "max_states") opts.max_states = value;
        else if (key == "max_labels") opts.max_labels = value;
        else if (key == "max_dim") opts.max_dim = value;
        else if (key == "max_group") opts.max_group = value;
        else if (key == "max_pow_carrier") opts.max_pow_carrier = value;
        else throw Error(ErrorCode::invalid_argument, "REGBISIM_CAPS: unknown key '" + key + "'");
    }
}

void print_law(const LawReport& rep) {
    std::cout << (rep.ok() ? "ok   " : "FAIL ") << rep.name << "  checked=" << rep.checked
              << " skipped=" << rep.skipped << "\n";
    for (const auto& e : rep.exhibits) std::cout << "       exhibit: " << e << "\n";
    if (rep.suppressed) std::cout << "       (" << rep.suppressed << " further exhibits suppressed)\n";
    for (const auto& n : rep.notes) std::cout << "       note: " << n << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bisimulation and simulation checks for coalgebras over finite sets, G-sets and Z/p vector spaces"};
    app.require_subcommand(1);

    Inputs in;
    LawOptions law;
    std::string suite = "all";
    bool as_json = false;

    if (const char* env = std::getenv("REGBISIM_CAPS")) {
        try {
            apply_caps(law, env);
        } catch (const Error& e) {
            std::cerr << "error [" << to_string(e.code()) << "]: " << e.what() << "\n";
            return kUsage;
        }
    }

    auto* check = app.add_subcommand("check", "Decide one notion of bisimulation or simulation for a relation");
    check->add_option("--kind", in.kind, "am | regular | hj | behavioural | toposal | simulation | toposal-simulation")
        ->capture_default_str();
    check->add_option("--order", in.order, "element order for simulations: discrete | subset | cardinality");
    check->add_option("first", in.sys_a, "first system file")->required();
    check->add_option("second", in.sys_b, "second system file")->required();
    check->add_option("relation", in.relation, "relation file")->required();

    auto* verify = app.add_subcommand("verify-witness", "Re-check the witness embedded in a check report");
    verify->add_option("--order", in.order, "override the order recorded in the report");
    verify->add_option("first", in.sys_a, "first system file")->required();
    verify->add_option("second", in.sys_b, "second system file")->required();
    verify->add_option("relation", in.relation, "relation file")->required();
    verify->add_option("report", in.report, "report written by `check`")->required();

    auto* bisim = app.add_subcommand("bisimilarity", "Print the largest bisimulation as a relation file");
    bisim->add_option("first", in.sys_a, "first system file")->required();
    bisim->add_option("second", in.sys_b, "second system file")->required();

    auto* sim = app.add_subcommand("similarity", "Print the largest simulation as a relation file");
    sim->add_option("--order", in.order, "element order: discrete | subset | cardinality");
    sim->add_option("first", in.sys_a, "first system file")->required();
    sim->add_option("second", in.sys_b, "second system file")->required();

    auto* laws = app.add_subcommand("laws", "Run randomized and exhaustive law suites");
    laws->add_option("--suite", suite, "all | allegory | maps | monad | kleisli | distributive | equivalence | order")
        ->capture_default_str();
    laws->add_option("--seed", law.seed, "64-bit seed")->capture_default_str();
    laws->add_option("--trials", law.trials, "random probes per backend and law")->capture_default_str();
    laws->add_option("--max-states", law.max_states)->capture_default_str();
    laws->add_option("--max-labels", law.max_labels)->capture_default_str();
    laws->add_option("--max-dim", law.max_dim)->capture_default_str();
    laws->add_option("--max-group", law.max_group)->capture_default_str();
    laws->add_option("--max-pow-carrier", law.max_pow_carrier)->capture_default_str();
    laws->add_flag("--json", as_json, "emit a JSON report instead of text");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kUsage;
    }

    try {
        if (*laws) {
            const auto reports = run_suite(suite, law);
            bool ok = true;
            for (const auto& r : reports) ok = ok && r.ok();
            if (as_json) {
                Json j = {{"format", kReportFormat}, {"suite", suite}, {"seed", law.seed}, {"ok", ok},
                          {"laws", Json::array()}};
                for (const auto& r : reports) j["laws"].push_back(law_report_to_json(r));
                emit(j);
            } else {
                for (const auto& r : reports) print_law(r);
                std::cout << (ok ? "all laws hold" : "law violations found") << "\n";
            }
            return ok ? kTrue : kFalse;
        }

        const auto a = load_system(in.sys_a);
        const auto b = load_system(in.sys_b);

        if (*check) {
            if (const auto* ea = std::get_if<ElemSystem>(&a)) return check_elem(*ea, same_backend<ElemSystem>(b, "second system"), in);
            return check_vect(std::get<VectSystem>(a), same_backend<VectSystem>(b, "second system"), in);
        }
        if (*verify) {
            const auto report = read_json(in.report);
            bool ok = false;
            if (const auto* ea = std::get_if<ElemSystem>(&a)) {
                const auto& eb = same_backend<ElemSystem>(b, "second system");
                ok = verify_elem(*ea, eb, load_relation(in.relation, *ea, eb), report, in.order);
            } else {
                const auto& va = std::get<VectSystem>(a);
                const auto& vb = same_backend<VectSystem>(b, "second system");
                ok = verify_vect(va, vb, load_relation(in.relation, va, vb), report);
            }
            emit({{"format", kReportFormat}, {"kind", report.at("kind")}, {"verified", ok}});
            return ok ? kTrue : kFalse;
        }
        if (*bisim) {
            if (const auto* ea = std::get_if<ElemSystem>(&a)) {
                const auto [x, y] = common_alphabet(*ea, same_backend<ElemSystem>(b, "second system"));
                emit(relation_to_json(bisimilarity(x.cat, x.coalgebra, y.coalgebra)));
            } else {
                const auto& va = std::get<VectSystem>(a);
                emit(relation_to_json(bisimilarity(va.cat, va.coalgebra, same_backend<VectSystem>(b, "second system").coalgebra)));
            }
            return kTrue;
        }
        if (*sim) {
            const auto* ea = std::get_if<ElemSystem>(&a);
            if (!ea) throw Error(ErrorCode::capability, "similarity needs an element backend");
            const auto [x, y] = common_alphabet(*ea, same_backend<ElemSystem>(b, "second system"));
            require_same_functor(x.coalgebra, y.coalgebra);
            const auto ord = order_by_name(in.order.empty() ? default_order(x) : in.order);
            emit(relation_to_json(similarity(x.cat, x.coalgebra, y.coalgebra, ord)));
            return kTrue;
        }
    } catch (const Error& e) {
        std::cerr << "error [" << to_string(e.code()) << "]: " << e.what() << "\n";
        return kUsage;
    } catch (const Json::exception& e) {
        std::cerr << "error [schema]: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
