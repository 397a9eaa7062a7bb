#include "regbisim/zp_matrix.hpp"

#include <utility>

#include "regbisim/errors.hpp"

namespace regbisim {

bool is_prime(std::uint32_t p) noexcept {
    if (p < 2) return false;
    for (std::uint32_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

ZpMatrix::ZpMatrix(std::uint32_t p, std::size_t rows, std::size_t cols)
    : p_(p), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

ZpMatrix::ZpMatrix(std::uint32_t p, std::size_t rows, std::size_t cols, std::vector<Entry> entries)
    : p_(p), rows_(rows), cols_(cols), data_(std::move(entries)) {
    require(data_.size() == rows * cols, ErrorCode::invalid_argument, "matrix entry count does not match shape");
    for (auto e : data_) require(e < p, ErrorCode::non_reduced, "matrix entry is not reduced mod p");
}

ZpMatrix ZpMatrix::identity(std::uint32_t p, std::size_t n) {
    ZpMatrix m(p, n, n);
    for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = 1;
    return m;
}

ZpMatrix ZpMatrix::from_rows(std::uint32_t p, const std::vector<std::vector<long long>>& rows) {
    const std::size_t nc = rows.empty() ? 0 : rows[0].size();
    ZpMatrix m(p, rows.size(), nc);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        require(rows[r].size() == nc, ErrorCode::invalid_argument, "ragged matrix rows");
        for (std::size_t c = 0; c < nc; ++c) {
            long long v = rows[r][c] % static_cast<long long>(p);
            if (v < 0) v += p;
            m.data_[r * nc + c] = static_cast<Entry>(v);
        }
    }
    return m;
}

ZpMatrix ZpMatrix::operator*(const ZpMatrix& o) const {
    require(p_ == o.p_, ErrorCode::backend_mismatch, "matrix product over different primes");
    require(cols_ == o.rows_, ErrorCode::endpoint_mismatch, "matrix product with incompatible shapes");
    ZpMatrix out(p_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const std::uint64_t a = at(i, k);
            if (!a) continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                out.data_[i * o.cols_ + j] =
                    static_cast<Entry>((out.data_[i * o.cols_ + j] + a * o.at(k, j)) % p_);
        }
    return out;
}

ZpMatrix ZpMatrix::operator+(const ZpMatrix& o) const {
    require(p_ == o.p_ && rows_ == o.rows_ && cols_ == o.cols_, ErrorCode::endpoint_mismatch,
            "matrix sum with incompatible shapes");
    ZpMatrix out = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = (data_[i] + o.data_[i]) % p_;
    return out;
}

ZpMatrix ZpMatrix::operator-(const ZpMatrix& o) const { return *this + o.negated(); }

ZpMatrix ZpMatrix::negated() const {
    ZpMatrix out = *this;
    for (auto& e : out.data_) e = e ? p_ - e : 0;
    return out;
}

ZpMatrix ZpMatrix::transposed() const {
    ZpMatrix out(p_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out.data_[j * rows_ + i] = at(i, j);
    return out;
}

ZpMatrix ZpMatrix::hconcat(const ZpMatrix& right) const {
    require(rows_ == right.rows_, ErrorCode::endpoint_mismatch, "hconcat with different row counts");
    ZpMatrix out(p_, rows_, cols_ + right.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) out.data_[i * out.cols_ + j] = at(i, j);
        for (std::size_t j = 0; j < right.cols_; ++j) out.data_[i * out.cols_ + cols_ + j] = right.at(i, j);
    }
    return out;
}

ZpMatrix ZpMatrix::vconcat(const ZpMatrix& below) const {
    require(cols_ == below.cols_, ErrorCode::endpoint_mismatch, "vconcat with different column counts");
    ZpMatrix out = *this;
    out.rows_ += below.rows_;
    out.data_.insert(out.data_.end(), below.data_.begin(), below.data_.end());
    return out;
}

ZpMatrix ZpMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    ZpMatrix out(p_, nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nc; ++j) out.data_[i * nc + j] = at(r0 + i, c0 + j);
    return out;
}

ZpMatrix ZpMatrix::select_rows(const std::vector<std::size_t>& idx) const {
    ZpMatrix out(p_, idx.size(), cols_);
    for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t j = 0; j < cols_; ++j) out.data_[i * cols_ + j] = at(idx[i], j);
    return out;
}

ZpMatrix ZpMatrix::select_cols(const std::vector<std::size_t>& idx) const {
    ZpMatrix out(p_, rows_, idx.size());
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < idx.size(); ++j) out.data_[i * idx.size() + j] = at(i, idx[j]);
    return out;
}

ZpMatrix::Entry ZpMatrix::inv(Entry a) const {
    // Fermat: a^(p-2)
    std::uint64_t result = 1, base = a % p_;
    for (std::uint32_t e = p_ - 2; e; e >>= 1) {
        if (e & 1u) result = result * base % p_;
        base = base * base % p_;
    }
    return static_cast<Entry>(result);
}

ZpMatrix::Echelon ZpMatrix::rref() const {
    ZpMatrix m = *this;
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
        std::size_t piv = r;
        while (piv < rows_ && m.at(piv, c) == 0) ++piv;
        if (piv == rows_) continue;
        if (piv != r)
            for (std::size_t j = 0; j < cols_; ++j) std::swap(m.data_[piv * cols_ + j], m.data_[r * cols_ + j]);
        const std::uint64_t s = inv(m.at(r, c));
        for (std::size_t j = 0; j < cols_; ++j) m.data_[r * cols_ + j] = static_cast<Entry>(m.at(r, j) * s % p_);
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == r || m.at(i, c) == 0) continue;
            const std::uint64_t f = m.at(i, c);
            for (std::size_t j = 0; j < cols_; ++j)
                m.data_[i * cols_ + j] = static_cast<Entry>((m.at(i, j) + (p_ - f) * m.at(r, j)) % p_);
        }
        pivots.push_back(c);
        ++r;
    }
    m.rows_ = r;
    m.data_.resize(r * cols_);
    return {std::move(pivots), std::move(m)};
}

std::size_t ZpMatrix::rank() const { return rref().pivots.size(); }

ZpMatrix ZpMatrix::kernel() const {
    auto e = rref();
    std::vector<bool> is_pivot(cols_, false);
    for (auto c : e.pivots) is_pivot[c] = true;
    std::vector<std::size_t> free;
    for (std::size_t c = 0; c < cols_; ++c)
        if (!is_pivot[c]) free.push_back(c);
    ZpMatrix k(p_, cols_, free.size());
    for (std::size_t j = 0; j < free.size(); ++j) {
        k.data_[free[j] * free.size() + j] = 1;
        for (std::size_t i = 0; i < e.pivots.size(); ++i) {
            const Entry v = e.basis.at(i, free[j]);
            k.data_[e.pivots[i] * free.size() + j] = v ? p_ - v : 0;
        }
    }
    // Canonicalise: columns as a reduced echelon row basis.
    return canonical_row_basis(k.transposed()).transposed();
}

std::optional<ZpMatrix> ZpMatrix::solve(const ZpMatrix& b) const {
    require(b.rows_ == rows_ && b.p_ == p_, ErrorCode::endpoint_mismatch, "solve: right-hand side has wrong shape");
    auto e = hconcat(b).rref();
    ZpMatrix x(p_, cols_, b.cols_);
    for (std::size_t i = 0; i < e.pivots.size(); ++i) {
        if (e.pivots[i] >= cols_) return std::nullopt;  // inconsistent row 0 = b_i
        for (std::size_t j = 0; j < b.cols_; ++j) x.data_[e.pivots[i] * b.cols_ + j] = e.basis.at(i, cols_ + j);
    }
    return x;
}

bool ZpMatrix::is_zero() const {
    for (auto v : data_)
        if (v) return false;
    return true;
}

std::string ZpMatrix::str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        if (i) s += "; ";
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j) s += ' ';
            s += std::to_string(at(i, j));
        }
    }
    return s + "]";
}

ZpMatrix canonical_row_basis(const ZpMatrix& m) { return m.rref().basis; }

}  // namespace regbisim
