#include "regbisim/vect.hpp"

#include "regbisim/errors.hpp"

namespace regbisim {

VectMorphism::VectMorphism(VectObject source, VectObject target, ZpMatrix matrix)
    : source_(source), target_(target), matrix_(std::move(matrix)) {
    if (source_.p != target_.p || matrix_.prime() != source_.p)
        throw Error(ErrorCode::backend_mismatch, "linear map between spaces over different primes");
    if (matrix_.rows() != target_.dim || matrix_.cols() != source_.dim)
        throw Error(ErrorCode::endpoint_mismatch, "matrix shape " + std::to_string(matrix_.rows()) + "x" +
                                                      std::to_string(matrix_.cols()) + " does not match " +
                                                      std::to_string(source_.dim) + " -> " +
                                                      std::to_string(target_.dim));
}

VectFunctor VectFunctor::identity() {
    auto ops = std::make_shared<Ops>();
    ops->name = "id";
    ops->on_dim = [](std::size_t n) { return n; };
    ops->on_matrix = [](const ZpMatrix& m) { return m; };
    return VectFunctor(std::move(ops));
}

VectFunctor VectFunctor::linear(std::size_t letters) {
    auto ops = std::make_shared<Ops>();
    ops->name = "linear[" + std::to_string(letters) + "]";
    ops->on_dim = [letters](std::size_t n) { return 1 + letters * n; };
    ops->on_matrix = [letters](const ZpMatrix& m) {
        const std::size_t r = m.rows(), c = m.cols();
        ZpMatrix out(m.prime(), 1 + letters * r, 1 + letters * c);
        out.set(0, 0, 1);
        for (std::size_t a = 0; a < letters; ++a)
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = 0; j < c; ++j) out.set(1 + a * r + i, 1 + a * c + j, m.at(i, j));
        return out;
    };
    return VectFunctor(std::move(ops));
}

VectFunctor VectFunctor::composite(const VectFunctor& outer, const VectFunctor& inner) {
    auto ops = std::make_shared<Ops>();
    ops->name = outer.name() + "." + inner.name();
    ops->preserves_weak_pullbacks = outer.preserves_weak_pullbacks() && inner.preserves_weak_pullbacks();
    ops->covers_pullbacks = ops->preserves_weak_pullbacks;
    ops->on_dim = [outer, inner](std::size_t n) { return outer.ops_->on_dim(inner.ops_->on_dim(n)); };
    ops->on_matrix = [outer, inner](const ZpMatrix& m) {
        return outer.ops_->on_matrix(inner.ops_->on_matrix(m));
    };
    return VectFunctor(std::move(ops));
}

VectMorphism VectFunctor::operator()(const VectMorphism& f) const {
    return {(*this)(f.source()), (*this)(f.target()), ops_->on_matrix(f.matrix())};
}

VectCategory::VectCategory(std::uint32_t p) : p_(p) {
    if (p >= (1u << 16) || !is_prime(p))
        throw Error(ErrorCode::non_prime, std::to_string(p) + " is not a supported prime");
}

void VectCategory::check(const Object& x) const {
    if (x.p != p_) throw Error(ErrorCode::backend_mismatch, "vector space over a different prime");
}

VectMorphism VectCategory::morphism(const Object& source, const Object& target, ZpMatrix m) const {
    check(source);
    check(target);
    return {source, target, std::move(m)};
}

VectMorphism VectCategory::zero(const Object& source, const Object& target) const {
    return morphism(source, target, ZpMatrix(p_, target.dim, source.dim));
}

VectMorphism VectCategory::identity(const Object& x) const {
    return morphism(x, x, ZpMatrix::identity(p_, x.dim));
}

VectMorphism VectCategory::compose(const Morphism& g, const Morphism& f) const {
    if (!(f.target() == g.source()))
        throw Error(ErrorCode::endpoint_mismatch, "compose: target of f differs from source of g");
    return {f.source(), g.target(), g.matrix() * f.matrix()};
}

VectCategory::Product VectCategory::product(const Object& x, const Object& y) const {
    check(x);
    check(y);
    Object xy{p_, x.dim + y.dim};
    auto id = ZpMatrix::identity(p_, x.dim + y.dim);
    return {xy, morphism(xy, x, id.block(0, 0, x.dim, xy.dim)), morphism(xy, y, id.block(x.dim, 0, y.dim, xy.dim))};
}

VectMorphism VectCategory::pair(const Morphism& f, const Morphism& g) const {
    if (!(f.source() == g.source())) throw Error(ErrorCode::endpoint_mismatch, "pair: sources differ");
    return {f.source(), Object{p_, f.target().dim + g.target().dim}, f.matrix().vconcat(g.matrix())};
}

VectCategory::Pullback VectCategory::pullback(const Morphism& f, const Morphism& g) const {
    if (!(f.target() == g.target())) throw Error(ErrorCode::endpoint_mismatch, "pullback: codomains differ");
    const std::size_t a = f.source().dim, b = g.source().dim;
    auto k = f.matrix().hconcat(g.matrix().negated()).kernel();
    Object apex{p_, k.cols()};
    return {apex, morphism(apex, f.source(), k.block(0, 0, a, k.cols())),
            morphism(apex, g.source(), k.block(a, 0, b, k.cols())), f, g};
}

VectCategory::Pushout VectCategory::pushout(const Morphism& f, const Morphism& g) const {
    if (!(f.source() == g.source())) throw Error(ErrorCode::endpoint_mismatch, "pushout: domains differ");
    const std::size_t a = f.target().dim, b = g.target().dim, n = a + b;
    // Image of [f; -g] in A (+) B, as reduced echelon rows.
    auto s = f.matrix().vconcat(g.matrix().negated()).transposed().rref();
    std::vector<bool> is_pivot(n, false);
    for (auto c : s.pivots) is_pivot[c] = true;
    std::vector<std::size_t> free;
    for (std::size_t c = 0; c < n; ++c)
        if (!is_pivot[c]) free.push_back(c);
    // q(v) = v_free - sum_i v_{pivot_i} * row_i|free
    ZpMatrix q(p_, free.size(), n);
    for (std::size_t j = 0; j < free.size(); ++j) {
        q.set(j, free[j], 1);
        for (std::size_t i = 0; i < s.pivots.size(); ++i) {
            auto v = s.basis.at(i, free[j]);
            q.set(j, s.pivots[i], v ? p_ - v : 0);
        }
    }
    Object apex{p_, free.size()};
    return {apex, morphism(f.target(), apex, q.block(0, 0, free.size(), a)),
            morphism(g.target(), apex, q.block(0, a, free.size(), b)), f, g};
}

Factorization<VectMorphism> VectCategory::factorize(const Morphism& f) const {
    auto e = f.matrix().transposed().rref();
    Object image{p_, e.pivots.size()};
    // The mono's columns are the echelon basis; it has the identity on the
    // pivot rows, so the epi is just those rows of f.
    return {morphism(f.source(), image, f.matrix().select_rows(e.pivots)),
            morphism(image, f.target(), e.basis.transposed())};
}

std::optional<VectMorphism> VectCategory::solve_factorization(const Morphism& h, const Morphism& through) const {
    if (!(h.target() == through.target()))
        throw Error(ErrorCode::endpoint_mismatch, "solve_factorization: targets differ");
    auto x = through.matrix().solve(h.matrix());
    if (!x) return std::nullopt;
    return morphism(h.source(), through.source(), std::move(*x));
}

VectMorphism VectCategory::mediate_pullback(const Pullback& pb, const Morphism& c1, const Morphism& c2) const {
    if (!(c1.source() == c2.source()) || !(c1.target() == pb.left.target()) || !(c2.target() == pb.right.target()))
        throw Error(ErrorCode::endpoint_mismatch, "mediate_pullback: cone has the wrong shape");
    if (!(compose(pb.f, c1) == compose(pb.g, c2)))
        throw Error(ErrorCode::non_commuting, "mediate_pullback: cone does not commute");
    auto u = solve_factorization(pair(c1, c2), pair(pb.left, pb.right));
    if (!u) throw Error(ErrorCode::non_commuting, "mediate_pullback: cone does not factor");
    return *u;
}

VectMorphism VectCategory::mediate_pushout(const Pushout& po, const Morphism& d1, const Morphism& d2) const {
    if (!(d1.target() == d2.target()) || !(d1.source() == po.left.source()) || !(d2.source() == po.right.source()))
        throw Error(ErrorCode::endpoint_mismatch, "mediate_pushout: cocone has the wrong shape");
    if (!(compose(d1, po.f) == compose(d2, po.g)))
        throw Error(ErrorCode::non_commuting, "mediate_pushout: cocone does not commute");
    // [left | right] is onto the apex; solve u [left | right] = [d1 | d2].
    auto q = po.left.matrix().hconcat(po.right.matrix());
    auto d = d1.matrix().hconcat(d2.matrix());
    auto ut = q.transposed().solve(d.transposed());
    if (!ut) throw Error(ErrorCode::non_commuting, "mediate_pushout: cocone does not factor");
    return morphism(po.apex, d1.target(), ut->transposed());
}

}  // namespace regbisim
