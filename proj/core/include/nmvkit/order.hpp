#pragma once

#include <functional>
#include <optional>
#include <span>

#include "nmvkit/types.hpp"

namespace nmvkit {

/// Reflexive, antisymmetric, transitive relation over carrier indices,
/// with least/greatest element detected at validation time.
class PartialOrder {
  public:
    bool leq(Elem x, Elem y) const {
        return leq_[static_cast<std::size_t>(x) * static_cast<std::size_t>(n_) +
                    static_cast<std::size_t>(y)] != 0;
    }
    bool lt(Elem x, Elem y) const { return x != y && leq(x, y); }
    int size() const noexcept { return n_; }
    std::optional<Elem> least() const noexcept { return least_; }
    std::optional<Elem> greatest() const noexcept { return greatest_; }
    const std::vector<char>& matrix() const noexcept { return leq_; }

    /// Number of related pairs (x, y) with x ≤ y, reflexive pairs included.
    int pair_count() const noexcept;

    bool operator==(const PartialOrder& other) const {
        return n_ == other.n_ && leq_ == other.leq_;
    }

    friend PartialOrder validate_partial_order(int n, const std::vector<char>& leq);

  private:
    PartialOrder(int n, std::vector<char> leq);
    int n_;
    std::vector<char> leq_;
    std::optional<Elem> least_, greatest_;
};

/// Validates an n×n row-major boolean matrix as a partial order.
/// Throws validation_error with law id "order.reflexive" (witness x),
/// "order.antisymmetric" (witness x,y) or "order.transitive" (witness x,y,z).
PartialOrder validate_partial_order(int n, const std::vector<char>& leq);

/// U(x,y) = {z | x≤z and y≤z}, ascending by index.
std::vector<Elem> upper_bounds(const PartialOrder& order, Elem x, Elem y);

/// Commutative groupoid satisfying x⊔x≈x, x⊔y≈y⊔x and
/// x⊔((x⊔y)⊔z) ≈ (x⊔y)⊔z.
class Directoid {
  public:
    /// Checks the three identities exhaustively; throws validation_error
    /// ("directoid.idempotency" / ".commutativity" / ".weak_associativity").
    static Directoid make(FiniteBinaryOp join);

    const FiniteBinaryOp& join() const noexcept { return join_; }
    int size() const noexcept { return join_.size(); }

  private:
    explicit Directoid(FiniteBinaryOp join) : join_(std::move(join)) {}
    FiniteBinaryOp join_;
};

/// Selection rule used for incomparable pairs: given x, y and the nonempty
/// ascending set U(x,y), return one of its members.
using JoinChoice = std::function<Elem(Elem x, Elem y, std::span<const Elem> upper)>;

/// Converts a directed order into a directoid: x⊔y = max(x,y) when
/// comparable, otherwise the chosen fixed element of U(x,y). The default
/// rule picks the smallest-index minimal element of U(x,y). Throws
/// validation_error "order.directed" when some U(x,y) is empty, and
/// std::invalid_argument when a custom rule returns a non-member.
Directoid build_directoid(const PartialOrder& order, const JoinChoice& choice = {});

/// Order encoded by a directoid: x ≤ y iff x⊔y = y.
PartialOrder directoid_order(const Directoid& d);

/// x≤y implies op(x,z) ≤ op(y,z), all triples; witness (x, y, z).
CheckResult is_monotone(const FiniteBinaryOp& op, const PartialOrder& order);

/// op∘op = id and x≤y implies op(y) ≤ op(x); witness (x) for a broken
/// involution, (x, y) for a broken order reversal.
CheckResult is_antitone_involution(const FiniteUnaryOp& op, const PartialOrder& order);

}  // namespace nmvkit
