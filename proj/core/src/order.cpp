#include "nmvkit/order.hpp"

#include <algorithm>

namespace nmvkit {

PartialOrder::PartialOrder(int n, std::vector<char> leq) : n_(n), leq_(std::move(leq)) {
    for (Elem c = 0; c < n_; ++c) {
        bool below_all = true, above_all = true;
        for (Elem x = 0; x < n_; ++x) {
            below_all = below_all && leq(c, x);
            above_all = above_all && leq(x, c);
        }
        if (below_all) least_ = c;
        if (above_all) greatest_ = c;
    }
}

int PartialOrder::pair_count() const noexcept {
    return static_cast<int>(std::count_if(leq_.begin(), leq_.end(), [](char c) { return c != 0; }));
}

PartialOrder validate_partial_order(int n, const std::vector<char>& leq) {
    if (n <= 0) throw std::invalid_argument("order must have a positive size");
    if (leq.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n))
        throw std::invalid_argument("relation matrix has wrong number of entries");
    auto at = [&](Elem x, Elem y) {
        return leq[static_cast<std::size_t>(x) * static_cast<std::size_t>(n) +
                   static_cast<std::size_t>(y)] != 0;
    };
    for (Elem x = 0; x < n; ++x)
        if (!at(x, x))
            throw validation_error("order.reflexive", {x}, "relation is not reflexive");
    for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y)
            if (x != y && at(x, y) && at(y, x))
                throw validation_error("order.antisymmetric", {x, y},
                                       "relation is not antisymmetric");
    for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y) {
            if (!at(x, y)) continue;
            for (Elem z = 0; z < n; ++z)
                if (at(y, z) && !at(x, z))
                    throw validation_error("order.transitive", {x, y, z},
                                           "relation is not transitive");
        }
    std::vector<char> normalized(leq.size());
    std::transform(leq.begin(), leq.end(), normalized.begin(),
                   [](char c) { return c ? char{1} : char{0}; });
    return PartialOrder(n, std::move(normalized));
}

std::vector<Elem> upper_bounds(const PartialOrder& order, Elem x, Elem y) {
    if (x < 0 || y < 0 || x >= order.size() || y >= order.size())
        throw std::invalid_argument("upper_bounds: index out of range");
    std::vector<Elem> out;
    for (Elem z = 0; z < order.size(); ++z)
        if (order.leq(x, z) && order.leq(y, z)) out.push_back(z);
    return out;
}

Directoid Directoid::make(FiniteBinaryOp join) {
    const int n = join.size();
    for (Elem x = 0; x < n; ++x)
        if (join(x, x) != x)
            throw validation_error("directoid.idempotency", {x}, "x⊔x ≠ x");
    for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y)
            if (join(x, y) != join(y, x))
                throw validation_error("directoid.commutativity", {x, y}, "x⊔y ≠ y⊔x");
    for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y) {
            const Elem xy = join(x, y);
            for (Elem z = 0; z < n; ++z)
                if (join(x, join(xy, z)) != join(xy, z))
                    throw validation_error("directoid.weak_associativity", {x, y, z},
                                           "x⊔((x⊔y)⊔z) ≠ (x⊔y)⊔z");
        }
    return Directoid(std::move(join));
}

namespace {

// Default rule: smallest-index minimal element of U(x,y). Deterministic, so
// repeated builds give identical tables.
Elem smallest_minimal_upper(const PartialOrder& order, std::span<const Elem> upper) {
    for (Elem z : upper) {
        bool minimal = true;
        for (Elem w : upper)
            if (w != z && order.leq(w, z)) {
                minimal = false;
                break;
            }
        if (minimal) return z;
    }
    return upper.front();  // unreachable for a valid order
}

}  // namespace

Directoid build_directoid(const PartialOrder& order, const JoinChoice& choice) {
    const int n = order.size();
    std::vector<Elem> table(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    auto set = [&](Elem x, Elem y, Elem v) {
        table[static_cast<std::size_t>(x) * static_cast<std::size_t>(n) +
              static_cast<std::size_t>(y)] = v;
    };
    for (Elem x = 0; x < n; ++x)
        for (Elem y = x; y < n; ++y) {
            Elem v;
            if (order.leq(x, y)) {
                v = y;
            } else if (order.leq(y, x)) {
                v = x;
            } else {
                const auto upper = upper_bounds(order, x, y);
                if (upper.empty())
                    throw validation_error("order.directed", {x, y},
                                           "order is not directed: U(x,y) is empty");
                v = choice ? choice(x, y, upper) : smallest_minimal_upper(order, upper);
                if (std::find(upper.begin(), upper.end(), v) == upper.end())
                    throw std::invalid_argument("join choice returned an element outside U(x,y)");
            }
            set(x, y, v);
            set(y, x, v);
        }
    return Directoid::make(FiniteBinaryOp(n, std::move(table)));
}

PartialOrder directoid_order(const Directoid& d) {
    const int n = d.size();
    std::vector<char> leq(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y)
            leq[static_cast<std::size_t>(x) * static_cast<std::size_t>(n) +
                static_cast<std::size_t>(y)] = d.join()(x, y) == y ? 1 : 0;
    return validate_partial_order(n, leq);
}

CheckResult is_monotone(const FiniteBinaryOp& op, const PartialOrder& order) {
    const int n = op.size();
    if (n != order.size()) throw std::invalid_argument("is_monotone: size mismatch");
    for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y) {
            if (!order.leq(x, y)) continue;
            for (Elem z = 0; z < n; ++z)
                if (!order.leq(op(x, z), op(y, z))) return CheckResult::fail({x, y, z});
        }
    return CheckResult::ok();
}

CheckResult is_antitone_involution(const FiniteUnaryOp& op, const PartialOrder& order) {
    const int n = op.size();
    if (n != order.size()) throw std::invalid_argument("is_antitone_involution: size mismatch");
    for (Elem x = 0; x < n; ++x)
        if (op(op(x)) != x) return CheckResult::fail({x});
    for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y)
            if (order.leq(x, y) && !order.leq(op(y), op(x))) return CheckResult::fail({x, y});
    return CheckResult::ok();
}

}  // namespace nmvkit
