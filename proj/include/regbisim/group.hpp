// Finite groups given by an explicit multiplication table.

#ifndef REGBISIM_GROUP_HPP
#define REGBISIM_GROUP_HPP

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

namespace regbisim {

class FiniteGroup {
public:
    /// Validates closure, associativity, identity and inverses; throws
    /// Error(invalid_group) otherwise. table[a][b] is the index of a*b.
    FiniteGroup(std::vector<std::string> names, std::vector<std::vector<std::size_t>> table);

    static std::shared_ptr<const FiniteGroup> trivial();
    static std::shared_ptr<const FiniteGroup> cyclic(std::size_t n);
    /// Symmetric group on three letters, elements named by one-line notation.
    static std::shared_ptr<const FiniteGroup> symmetric3();

    std::size_t order() const noexcept { return names_.size(); }
    std::size_t identity() const noexcept { return identity_; }
    std::size_t mul(std::size_t a, std::size_t b) const { return table_[a][b]; }
    std::size_t inverse(std::size_t a) const { return inverse_[a]; }
    const std::string& name(std::size_t a) const { return names_[a]; }
    const std::vector<std::string>& names() const noexcept { return names_; }
    const std::vector<std::vector<std::size_t>>& table() const noexcept { return table_; }
    std::size_t index_of(const std::string& name) const;  // npos when absent

    /// All subgroups, each as a sorted element list (brute force; tiny groups only).
    std::vector<std::vector<std::size_t>> subgroups() const;

    friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
        return a.names_ == b.names_ && a.table_ == b.table_;
    }

private:
    std::vector<std::string> names_;
    std::vector<std::vector<std::size_t>> table_;
    std::vector<std::size_t> inverse_;
    std::size_t identity_ = 0;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

inline bool same_group(const GroupPtr& a, const GroupPtr& b) {
    return a == b || (a && b && *a == *b);
}

}  // namespace regbisim

#endif
