// Dense matrices over the prime field Z_p.

#ifndef REGBISIM_ZP_MATRIX_HPP
#define REGBISIM_ZP_MATRIX_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace regbisim {

bool is_prime(std::uint32_t p) noexcept;

class ZpMatrix {
public:
    using Entry = std::uint32_t;

    ZpMatrix() = default;
    /// Zero matrix.
    ZpMatrix(std::uint32_t p, std::size_t rows, std::size_t cols);
    /// Row-major entries; each must already be reduced mod p.
    ZpMatrix(std::uint32_t p, std::size_t rows, std::size_t cols, std::vector<Entry> entries);

    static ZpMatrix identity(std::uint32_t p, std::size_t n);
    /// Reduces arbitrary integers mod p.
    static ZpMatrix from_rows(std::uint32_t p, const std::vector<std::vector<long long>>& rows);

    std::uint32_t prime() const noexcept { return p_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    Entry at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, Entry v) { data_[r * cols_ + c] = v % p_; }
    const std::vector<Entry>& data() const noexcept { return data_; }

    ZpMatrix operator*(const ZpMatrix& o) const;
    ZpMatrix operator+(const ZpMatrix& o) const;
    ZpMatrix operator-(const ZpMatrix& o) const;
    ZpMatrix negated() const;
    ZpMatrix transposed() const;
    ZpMatrix hconcat(const ZpMatrix& right) const;
    ZpMatrix vconcat(const ZpMatrix& below) const;
    ZpMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    ZpMatrix select_rows(const std::vector<std::size_t>& idx) const;
    ZpMatrix select_cols(const std::vector<std::size_t>& idx) const;

    struct Echelon;
    /// Reduced row echelon form with zero rows dropped, plus pivot columns.
    Echelon rref() const;
    std::size_t rank() const;
    /// Basis of {x : A x = 0} as the columns of a cols x k matrix whose
    /// transpose is in reduced echelon form.
    ZpMatrix kernel() const;
    /// Some x with A x = b (free variables zero), column by column.
    std::optional<ZpMatrix> solve(const ZpMatrix& b) const;

    bool is_zero() const;
    std::string str() const;

    Entry inv(Entry a) const;

    friend bool operator==(const ZpMatrix&, const ZpMatrix&) = default;

private:
    std::uint32_t p_ = 2;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Entry> data_;
};

struct ZpMatrix::Echelon {
    std::vector<std::size_t> pivots;
    ZpMatrix basis;  // rank x cols
};

/// Row space basis in canonical (reduced echelon) form: equal spaces give
/// equal matrices.
ZpMatrix canonical_row_basis(const ZpMatrix& m);

}  // namespace regbisim

#endif
