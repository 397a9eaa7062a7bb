#include "regbisim/value.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace regbisim {

namespace {

std::size_t mix(std::size_t seed, std::size_t v) noexcept {
    return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

const Value& star() {
    static const Value v = Value::atom("*");
    return v;
}

}  // namespace

Value::Value() : node_(star().node_) {}

Value Value::make(Kind k, std::string atom, std::vector<Value> items) {
    std::size_t h = static_cast<std::size_t>(k) * 0x100000001b3ULL;
    if (k == Kind::atom) {
        h = mix(h, std::hash<std::string>{}(atom));
    } else {
        for (const auto& it : items) h = mix(h, it.hash());
        h = mix(h, items.size());
    }
    return Value(std::make_shared<const Node>(Node{k, std::move(atom), std::move(items), h}));
}

Value Value::atom(std::string name) { return make(Kind::atom, std::move(name), {}); }

Value Value::tuple(std::vector<Value> items) { return make(Kind::tuple, {}, std::move(items)); }

Value Value::pair(Value first, Value second) {
    std::vector<Value> items;
    items.reserve(2);
    items.push_back(std::move(first));
    items.push_back(std::move(second));
    return tuple(std::move(items));
}

Value Value::set(std::vector<Value> items) {
    normalize(items);
    return make(Kind::set, {}, std::move(items));
}

Value Value::sorted_set(std::vector<Value> items) { return make(Kind::set, {}, std::move(items)); }

const std::string& Value::name() const {
    if (!is_atom()) throw std::logic_error("Value::name on a non-atom");
    return node_->atom;
}

bool Value::contains(const Value& v) const {
    return std::binary_search(node_->items.begin(), node_->items.end(), v);
}

std::string Value::str() const {
    switch (kind()) {
        case Kind::atom:
            return node_->atom;
        case Kind::tuple:
        case Kind::set: {
            std::string out(1, is_tuple() ? '(' : '{');
            for (std::size_t i = 0; i < size(); ++i) {
                if (i) out += ',';
                out += (*this)[i].str();
            }
            out += is_tuple() ? ')' : '}';
            return out;
        }
    }
    return {};
}

std::strong_ordering operator<=>(const Value& a, const Value& b) {
    if (a.node_ == b.node_) return std::strong_ordering::equal;
    if (auto c = a.kind() <=> b.kind(); c != 0) return c;
    if (a.is_atom()) {
        int c = a.node_->atom.compare(b.node_->atom);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }
    const auto& x = a.node_->items;
    const auto& y = b.node_->items;
    const std::size_t n = std::min(x.size(), y.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (auto c = x[i] <=> y[i]; c != 0) return c;
    }
    return x.size() <=> y.size();
}

bool operator==(const Value& a, const Value& b) {
    if (a.node_ == b.node_) return true;
    if (a.hash() != b.hash()) return false;
    return (a <=> b) == 0;
}

void normalize(std::vector<Value>& values) {
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
}

std::size_t index_in(std::span<const Value> sorted, const Value& v) {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), v);
    if (it == sorted.end() || !(*it == v)) return npos;
    return static_cast<std::size_t>(it - sorted.begin());
}

}  // namespace regbisim
