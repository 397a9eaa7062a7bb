// Randomized and exhaustive law suites over every backend. The CLI's
// `laws` command and the acceptance runner both drive these.

#ifndef REGBISIM_LAWS_HPP
#define REGBISIM_LAWS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "regbisim/law_report.hpp"

namespace regbisim {

struct LawOptions {
    std::uint64_t seed = 1;
    std::size_t trials = 100;  // random probes per backend and law family
    std::size_t max_states = 8;
    std::size_t max_labels = 3;
    std::size_t max_dim = 5;
    std::size_t max_group = 6;
    std::size_t max_pow_carrier = 12;
};

/// Associativity, units, dagger, meets and the modular law.
std::vector<LawReport> allegory_suite(const LawOptions& opts);
/// Graphs of maps, as_map and tabulations.
std::vector<LawReport> maps_suite(const LawOptions& opts);
/// Monad laws of P, pseudo-inverses, P on epis and monos.
std::vector<LawReport> monad_suite(const LawOptions& opts);
/// xi turns relational composition into Kleisli composition.
std::vector<LawReport> kleisli_suite(const LawOptions& opts);
/// The canonical laws delta_F: weak-law axioms and the failing unit axiom.
std::vector<LawReport> distributive_suite(const LawOptions& opts);
/// Regular, HJ, AM, toposal and behavioural notions against each other.
std::vector<LawReport> equivalence_suite(const LawOptions& opts);
/// Good orders, the pointwise order on P, and simulations.
std::vector<LawReport> order_suite(const LawOptions& opts);

const std::vector<std::string>& suite_names();
/// Throws Error(invalid_argument) for an unknown name; "all" runs every suite.
std::vector<LawReport> run_suite(const std::string& name, const LawOptions& opts);

}  // namespace regbisim

#endif
