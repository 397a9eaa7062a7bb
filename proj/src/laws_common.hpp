// Shared plumbing for the law suites.

#ifndef REGBISIM_LAWS_COMMON_HPP
#define REGBISIM_LAWS_COMMON_HPP

#include <functional>
#include <string>
#include <vector>

#include "regbisim/backend_relations.hpp"
#include "regbisim/laws.hpp"
#include "regbisim/random.hpp"

namespace regbisim::detail {

struct ElemBackend {
    std::string name;
    ElemCategory cat;
    std::size_t max_size;  // carrier size for random objects
};

struct VectBackend {
    std::string name;
    VectCategory cat;
    std::size_t max_dim;
};

std::vector<ElemBackend> elem_backends(const LawOptions& opts, std::size_t finset_size, std::size_t gset_size);
std::vector<VectBackend> vect_backends(const LawOptions& opts, std::size_t max_dim);

std::string describe(const ElemRelation& r);
std::string describe(const VectRelation& r);
std::string describe(const ElemMorphism& m);
std::string describe(const VectMorphism& m);

/// f(x) == g(x) for every x of the (explicit) source.
bool same_map(const ElemMorphism& f, const ElemMorphism& g);

using Sampler = std::function<Value(Rng&)>;
Sampler sample_from(std::vector<Value> elements);
/// A set of at most max_items draws from inner.
Sampler sample_subset(Sampler inner, std::size_t max_items);
/// A set of (label, draw) pairs.
Sampler sample_labelled(std::vector<Value> labels, Sampler inner, std::size_t max_items);

Rng make_rng(const LawOptions& opts, std::uint64_t salt);

}  // namespace regbisim::detail

#endif
