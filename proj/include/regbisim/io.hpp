// JSON files for systems, relations and reports.
//
// Values are encoded as: atom -> string, tuple -> array, set -> {"set": [...]}.
// Emitted JSON has sorted keys and two-space indentation, so loading and
// saving a canonical file reproduces it byte for byte.

#ifndef REGBISIM_IO_HPP
#define REGBISIM_IO_HPP

#include <filesystem>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

#include "regbisim/coalgebra.hpp"
#include "regbisim/law_report.hpp"
#include "regbisim/random.hpp"
#include "regbisim/simulation.hpp"

namespace regbisim {

using Json = nlohmann::json;

inline constexpr const char* kSystemFormat = "regbisim-system/1";
inline constexpr const char* kRelationFormat = "regbisim-relation/1";
inline constexpr const char* kReportFormat = "regbisim-report/1";

struct ElemSystem {
    ElemCategory cat;
    std::string functor;                // pow_labels, det, pow, upair, identity
    std::vector<std::string> alphabet;  // labelled functors only
    Coalgebra<ElemCategory> coalgebra;
};

struct VectSystem {
    VectCategory cat;
    WeightedAutomaton automaton;
    Coalgebra<VectCategory> coalgebra;
};

using System = std::variant<ElemSystem, VectSystem>;

Json value_to_json(const Value& v);
Value value_from_json(const Json& j, const std::string& location);

System parse_system(const Json& j);
Json system_to_json(const System& s);
ElemSystem make_lts_system(const Lts& lts);
VectSystem make_vect_system(const WeightedAutomaton& w);
/// The same LTS read over a larger label set (pow_labels systems only).
ElemSystem widen_alphabet(const ElemSystem& s, std::vector<std::string> alphabet);

ElemRelation parse_relation(const Json& j, const ElemSystem& a, const ElemSystem& b);
VectRelation parse_relation(const Json& j, const VectSystem& a, const VectSystem& b);
Json relation_to_json(const ElemRelation& r);
Json relation_to_json(const VectRelation& r);

Json report_to_json(const WitnessReport<ElemCategory>& rep);
Json report_to_json(const WitnessReport<VectCategory>& rep);
Json report_to_json(const SimWitnessReport& rep);
Json law_report_to_json(const LawReport& rep);

/// Witness payloads read back from a report, for re-verification.
ElemMorphism parse_elem_map(const Json& j, const ElemCategory& cat, const ElemObject& source, const ElemObject& target,
                            const std::string& location);
ElemRelation parse_elem_relation(const Json& j, const ElemCategory& cat, const ElemObject& dom, const ElemObject& cod,
                                 const std::string& location);
VectMorphism parse_vect_map(const Json& j, const VectCategory& cat, const VectObject& source, const VectObject& target,
                            const std::string& location);

/// Reads and parses a JSON file; malformed JSON is a schema error.
Json read_json(const std::filesystem::path& path);
std::string dump_canonical(const Json& j);
void write_json(const std::filesystem::path& path, const Json& j);

/// As the parse_* functions, with error locations prefixed by the file name.
System load_system(const std::filesystem::path& path);
ElemRelation load_relation(const std::filesystem::path& path, const ElemSystem& a, const ElemSystem& b);
VectRelation load_relation(const std::filesystem::path& path, const VectSystem& a, const VectSystem& b);

}  // namespace regbisim

#endif
