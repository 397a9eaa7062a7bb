// Finite-dimensional vector spaces over Z_p: a regular (indeed abelian)
// category that is not a topos, and in which every epi splits.
//
// Objects are dimensions with the standard basis; a morphism n -> m is an
// m x n matrix acting on column vectors. Subspaces are represented by the
// inclusion whose columns form a reduced echelon basis, so equal subobjects
// have equal representatives.

#ifndef REGBISIM_VECT_HPP
#define REGBISIM_VECT_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>

#include "regbisim/category.hpp"
#include "regbisim/zp_matrix.hpp"

namespace regbisim {

struct VectObject {
    std::uint32_t p = 2;
    std::size_t dim = 0;
    friend bool operator==(const VectObject&, const VectObject&) = default;
};

class VectMorphism {
public:
    VectMorphism(VectObject source, VectObject target, ZpMatrix matrix);

    const VectObject& source() const noexcept { return source_; }
    const VectObject& target() const noexcept { return target_; }
    const ZpMatrix& matrix() const noexcept { return matrix_; }

    friend bool operator==(const VectMorphism&, const VectMorphism&) = default;

private:
    VectObject source_;
    VectObject target_;
    ZpMatrix matrix_;
};

/// Endofunctors on Vect given by their action on dimensions and matrices.
class VectFunctor {
public:
    struct Ops {
        std::string name;
        bool preserves_weak_pullbacks = true;
        bool covers_pullbacks = true;
        std::function<std::size_t(std::size_t)> on_dim;
        std::function<ZpMatrix(const ZpMatrix&)> on_matrix;
    };
    explicit VectFunctor(std::shared_ptr<const Ops> ops) : ops_(std::move(ops)) {}

    static VectFunctor identity();
    /// X -> K x X^A, for |A| = letters.
    static VectFunctor linear(std::size_t letters);
    static VectFunctor composite(const VectFunctor& outer, const VectFunctor& inner);

    const std::string& name() const noexcept { return ops_->name; }
    bool preserves_weak_pullbacks() const noexcept { return ops_->preserves_weak_pullbacks; }
    bool covers_pullbacks() const noexcept { return ops_->covers_pullbacks; }
    VectObject operator()(const VectObject& x) const { return {x.p, ops_->on_dim(x.dim)}; }
    VectMorphism operator()(const VectMorphism& f) const;

    friend bool operator==(const VectFunctor& a, const VectFunctor& b) { return a.name() == b.name(); }

private:
    std::shared_ptr<const Ops> ops_;
};

class VectCategory {
public:
    using Object = VectObject;
    using Morphism = VectMorphism;
    using Functor = VectFunctor;
    using Product = ProductResult<VectObject, VectMorphism>;
    using Pullback = PullbackResult<VectObject, VectMorphism>;
    using Pushout = PushoutResult<VectObject, VectMorphism>;

    /// Throws Error(non_prime) unless p is prime (p < 2^16).
    explicit VectCategory(std::uint32_t p);

    std::uint32_t prime() const noexcept { return p_; }
    std::string name() const { return "vect"; }
    bool has_power_objects() const noexcept { return false; }

    Object object(std::size_t dim) const { return {p_, dim}; }
    Morphism morphism(const Object& source, const Object& target, ZpMatrix m) const;
    Morphism zero(const Object& source, const Object& target) const;

    Object terminal() const { return {p_, 0}; }
    Object initial() const { return {p_, 0}; }
    Morphism from_initial(const Object& x) const { return zero(initial(), x); }
    Morphism to_terminal(const Object& x) const { return zero(x, terminal()); }
    Morphism identity(const Object& x) const;
    Morphism compose(const Morphism& g, const Morphism& f) const;
    Product product(const Object& x, const Object& y) const;
    Morphism pair(const Morphism& f, const Morphism& g) const;
    /// Kernel of [f | -g], with a reduced echelon basis.
    Pullback pullback(const Morphism& f, const Morphism& g) const;
    /// Cokernel of [f ; -g], coordinatised by the non-pivot coordinates.
    Pushout pushout(const Morphism& f, const Morphism& g) const;
    Factorization<Morphism> factorize(const Morphism& f) const;
    bool is_mono(const Morphism& f) const { return f.matrix().rank() == f.source().dim; }
    bool is_regular_epi(const Morphism& f) const { return f.matrix().rank() == f.target().dim; }
    std::optional<Morphism> solve_factorization(const Morphism& h, const Morphism& through) const;
    Morphism mediate_pullback(const Pullback& pb, const Morphism& c1, const Morphism& c2) const;
    Morphism mediate_pushout(const Pushout& po, const Morphism& d1, const Morphism& d2) const;

    Object apply(const Functor& f, const Object& x) const { return f(x); }
    Morphism apply(const Functor& f, const Morphism& m) const { return f(m); }

private:
    void check(const Object& x) const;
    std::uint32_t p_;
};

static_assert(RegularCategory<VectCategory>);

}  // namespace regbisim

#endif
