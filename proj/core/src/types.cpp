#include "nmvkit/types.hpp"

#include <algorithm>
#include <unordered_set>

namespace nmvkit {

Carrier Carrier::make(std::vector<std::string> names) {
    if (names.empty()) throw std::invalid_argument("carrier must have at least one element");
    std::unordered_set<std::string_view> seen;
    for (const auto& n : names) {
        if (!seen.insert(n).second)
            throw std::invalid_argument("duplicate element label '" + n + "'");
    }
    return Carrier(std::move(names));
}

Carrier Carrier::indexed(int size, std::string_view prefix) {
    std::vector<std::string> names;
    names.reserve(static_cast<std::size_t>(size));
    for (int i = 0; i < size; ++i) names.push_back(std::string(prefix) + std::to_string(i));
    return make(std::move(names));
}

Elem Carrier::index_of(std::string_view label) const noexcept {
    auto it = std::find(names_.begin(), names_.end(), label);
    return it == names_.end() ? -1 : static_cast<Elem>(it - names_.begin());
}

FiniteUnaryOp::FiniteUnaryOp(std::vector<Elem> table) : table_(std::move(table)) {
    const auto n = static_cast<Elem>(table_.size());
    if (n == 0) throw std::invalid_argument("unary table must be nonempty");
    for (Elem v : table_)
        if (v < 0 || v >= n) throw std::invalid_argument("unary table entry out of range");
}

FiniteBinaryOp::FiniteBinaryOp(int size, std::vector<Elem> table)
    : size_(size), table_(std::move(table)) {
    if (size_ <= 0) throw std::invalid_argument("binary table size must be positive");
    if (table_.size() != static_cast<std::size_t>(size_) * static_cast<std::size_t>(size_))
        throw std::invalid_argument("binary table has wrong number of entries");
    for (Elem v : table_)
        if (v < 0 || v >= size_) throw std::invalid_argument("binary table entry out of range");
}

}  // namespace nmvkit
