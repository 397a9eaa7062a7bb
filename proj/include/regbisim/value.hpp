// Element identifiers for the element-based backends.
//
// A Value is an immutable tree: an opaque atom, an ordered tuple, or a finite
// set kept in sorted, duplicate-free form. Products produce tuples, power
// objects produce sets, so every element of every derived object has one
// canonical spelling and equal elements compare equal.

#ifndef REGBISIM_VALUE_HPP
#define REGBISIM_VALUE_HPP

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace regbisim {

class Value {
public:
    enum class Kind : unsigned char { atom = 0, tuple = 1, set = 2 };

    Value();  // the atom "*"

    static Value atom(std::string name);
    static Value tuple(std::vector<Value> items);
    static Value pair(Value first, Value second);
    /// Sorts and deduplicates.
    static Value set(std::vector<Value> items);
    /// Caller guarantees the items are already sorted and unique.
    static Value sorted_set(std::vector<Value> items);

    Kind kind() const noexcept { return node_->kind; }
    bool is_atom() const noexcept { return kind() == Kind::atom; }
    bool is_tuple() const noexcept { return kind() == Kind::tuple; }
    bool is_set() const noexcept { return kind() == Kind::set; }

    const std::string& name() const;
    std::span<const Value> items() const noexcept { return node_->items; }
    std::size_t size() const noexcept { return node_->items.size(); }
    const Value& operator[](std::size_t i) const { return node_->items[i]; }

    /// Membership for set values (binary search).
    bool contains(const Value& v) const;

    std::string str() const;
    std::size_t hash() const noexcept { return node_->hash; }

    friend std::strong_ordering operator<=>(const Value& a, const Value& b);
    friend bool operator==(const Value& a, const Value& b);

private:
    struct Node {
        Kind kind;
        std::string atom;
        std::vector<Value> items;
        std::size_t hash;
    };
    explicit Value(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    static Value make(Kind k, std::string atom, std::vector<Value> items);

    std::shared_ptr<const Node> node_;
};

struct ValueHash {
    std::size_t operator()(const Value& v) const noexcept { return v.hash(); }
};

/// Sort + unique in place.
void normalize(std::vector<Value>& values);

/// Index of v in a sorted vector, or npos.
inline constexpr std::size_t npos = static_cast<std::size_t>(-1);
std::size_t index_in(std::span<const Value> sorted, const Value& v);

}  // namespace regbisim

#endif
