#include "laws_common.hpp"

#include <algorithm>

namespace regbisim::detail {

std::vector<ElemBackend> elem_backends(const LawOptions& opts, std::size_t finset_size, std::size_t gset_size) {
    std::vector<ElemBackend> out;
    out.push_back({"finset", ElemCategory(), std::min(finset_size, opts.max_states)});
    if (opts.max_group >= 2) out.push_back({"gset(Z2)", ElemCategory(FiniteGroup::cyclic(2)), std::min(gset_size, opts.max_states)});
    if (opts.max_group >= 6) out.push_back({"gset(S3)", ElemCategory(FiniteGroup::symmetric3()), std::min(gset_size, opts.max_states)});
    return out;
}

std::vector<VectBackend> vect_backends(const LawOptions& opts, std::size_t max_dim) {
    const std::size_t d = std::min(max_dim, opts.max_dim);
    return {{"vect(Z2)", VectCategory(2), d}, {"vect(Z3)", VectCategory(3), d}};
}

std::string describe(const ElemRelation& r) {
    std::string s = "{";
    for (const auto& [x, y] : pairs_of(r)) s += (s.size() > 1 ? ", (" : "(") + x.str() + ", " + y.str() + ")";
    return s + "}";
}

std::string describe(const VectRelation& r) { return "span " + basis_of(r).str(); }

std::string describe(const ElemMorphism& m) {
    std::string s = "{";
    for (const auto& x : m.source().elements()) s += (s.size() > 1 ? ", " : "") + x.str() + " -> " + m(x).str();
    return s + "}";
}

std::string describe(const VectMorphism& m) { return m.matrix().str(); }

bool same_map(const ElemMorphism& f, const ElemMorphism& g) {
    if (!(f.source() == g.source())) return false;
    for (const auto& x : f.source().elements())
        if (!(f(x) == g(x))) return false;
    return true;
}

Sampler sample_from(std::vector<Value> elements) {
    return [els = std::move(elements)](Rng& rng) { return els[uniform(rng, 0, els.size() - 1)]; };
}

Sampler sample_subset(Sampler inner, std::size_t max_items) {
    return [inner = std::move(inner), max_items](Rng& rng) {
        std::vector<Value> out;
        const std::size_t k = uniform(rng, 0, max_items);
        for (std::size_t i = 0; i < k; ++i) out.push_back(inner(rng));
        return Value::set(std::move(out));
    };
}

Sampler sample_labelled(std::vector<Value> labels, Sampler inner, std::size_t max_items) {
    return [labels = std::move(labels), inner = std::move(inner), max_items](Rng& rng) {
        std::vector<Value> out;
        const std::size_t k = uniform(rng, 0, max_items);
        for (std::size_t i = 0; i < k; ++i)
            out.push_back(Value::pair(labels[uniform(rng, 0, labels.size() - 1)], inner(rng)));
        return Value::set(std::move(out));
    };
}

Rng make_rng(const LawOptions& opts, std::uint64_t salt) {
    std::seed_seq seq{static_cast<std::uint32_t>(opts.seed), static_cast<std::uint32_t>(opts.seed >> 32),
                      static_cast<std::uint32_t>(salt)};
    return Rng(seq);
}

}  // namespace regbisim::detail

namespace regbisim {

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"allegory", "maps",        "monad", "kleisli",
                                                "distributive", "equivalence", "order"};
    return names;
}

std::vector<LawReport> run_suite(const std::string& name, const LawOptions& opts) {
    if (name == "allegory") return allegory_suite(opts);
    if (name == "maps") return maps_suite(opts);
    if (name == "monad") return monad_suite(opts);
    if (name == "kleisli") return kleisli_suite(opts);
    if (name == "distributive") return distributive_suite(opts);
    if (name == "equivalence") return equivalence_suite(opts);
    if (name == "order") return order_suite(opts);
    if (name == "all") {
        std::vector<LawReport> out;
        for (const auto& n : suite_names())
            for (auto& r : run_suite(n, opts)) out.push_back(std::move(r));
        return out;
    }
    throw Error(ErrorCode::invalid_argument, "unknown suite '" + name + "'");
}

}  // namespace regbisim
