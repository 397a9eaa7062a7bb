#include "regbisim/group.hpp"

#include <algorithm>
#include <array>

#include "regbisim/errors.hpp"
#include "regbisim/value.hpp"

namespace regbisim {

FiniteGroup::FiniteGroup(std::vector<std::string> names, std::vector<std::vector<std::size_t>> table)
    : names_(std::move(names)), table_(std::move(table)) {
    const std::size_t n = names_.size();
    require(n > 0, ErrorCode::invalid_group, "group must be nonempty");
    require(table_.size() == n, ErrorCode::invalid_group, "multiplication table has wrong row count");
    for (const auto& row : table_) {
        require(row.size() == n, ErrorCode::invalid_group, "multiplication table has wrong column count");
        for (auto c : row) require(c < n, ErrorCode::invalid_group, "multiplication table not closed");
    }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                require(table_[table_[a][b]][c] == table_[a][table_[b][c]], ErrorCode::invalid_group,
                        "multiplication is not associative");
    bool found = false;
    for (std::size_t e = 0; e < n && !found; ++e) {
        bool ok = true;
        for (std::size_t a = 0; a < n && ok; ++a) ok = table_[e][a] == a && table_[a][e] == a;
        if (ok) {
            identity_ = e;
            found = true;
        }
    }
    require(found, ErrorCode::invalid_group, "no identity element");
    inverse_.assign(n, n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (table_[a][b] == identity_ && table_[b][a] == identity_) inverse_[a] = b;
    for (auto i : inverse_) require(i < n, ErrorCode::invalid_group, "element without inverse");
    auto sorted = names_;
    std::sort(sorted.begin(), sorted.end());
    require(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end(), ErrorCode::invalid_group,
            "duplicate element names");
}

GroupPtr FiniteGroup::trivial() {
    static const GroupPtr g = std::make_shared<const FiniteGroup>(
        std::vector<std::string>{"e"}, std::vector<std::vector<std::size_t>>{{0}});
    return g;
}

GroupPtr FiniteGroup::cyclic(std::size_t n) {
    require(n > 0, ErrorCode::invalid_group, "cyclic group of order 0");
    std::vector<std::string> names;
    std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
    for (std::size_t a = 0; a < n; ++a) {
        names.push_back(a == 0 ? "e" : "g" + std::to_string(a));
        for (std::size_t b = 0; b < n; ++b) table[a][b] = (a + b) % n;
    }
    return std::make_shared<const FiniteGroup>(std::move(names), std::move(table));
}

GroupPtr FiniteGroup::symmetric3() {
    std::vector<std::array<std::size_t, 3>> perms;
    std::array<std::size_t, 3> p{0, 1, 2};
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    std::vector<std::string> names;
    for (const auto& q : perms) names.push_back(std::to_string(q[0]) + std::to_string(q[1]) + std::to_string(q[2]));
    std::vector<std::vector<std::size_t>> table(6, std::vector<std::size_t>(6));
    for (std::size_t a = 0; a < 6; ++a)
        for (std::size_t b = 0; b < 6; ++b) {
            std::array<std::size_t, 3> c{};
            for (std::size_t i = 0; i < 3; ++i) c[i] = perms[a][perms[b][i]];  // (a*b)(i) = a(b(i))
            table[a][b] = static_cast<std::size_t>(std::find(perms.begin(), perms.end(), c) - perms.begin());
        }
    return std::make_shared<const FiniteGroup>(std::move(names), std::move(table));
}

std::size_t FiniteGroup::index_of(const std::string& name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    return it == names_.end() ? npos : static_cast<std::size_t>(it - names_.begin());
}

std::vector<std::vector<std::size_t>> FiniteGroup::subgroups() const {
    const std::size_t n = order();
    require(n <= 16, ErrorCode::cap_exceeded, "subgroup enumeration limited to order 16");
    std::vector<std::vector<std::size_t>> out;
    for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
        if (!(mask >> identity_ & 1ul)) continue;
        bool closed = true;
        for (std::size_t a = 0; a < n && closed; ++a) {
            if (!(mask >> a & 1ul)) continue;
            for (std::size_t b = 0; b < n && closed; ++b)
                if ((mask >> b & 1ul) && !(mask >> table_[a][b] & 1ul)) closed = false;
        }
        if (!closed) continue;
        std::vector<std::size_t> h;
        for (std::size_t a = 0; a < n; ++a)
            if (mask >> a & 1ul) h.push_back(a);
        out.push_back(std::move(h));
    }
    return out;
}

}  // namespace regbisim
