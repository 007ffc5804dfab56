#pragma once

#include "nmvkit/order.hpp"
#include "nmvkit/report.hpp"

namespace nmvkit {

/// Checks the seven defining identities of an NMV-algebra (A,⊕,¬,0) with
/// 1 := ¬0: commutativity, neutral 0, involutive ¬, absorbing 1, the
/// Łukasiewicz axiom, the relative-bound identity and x ≤ x⊕y. Every law
/// gets a verdict; failures carry the first lexicographic witness.
CheckReport check_nmv_axioms(const FiniteBinaryOp& oplus, const FiniteUnaryOp& neg, Elem zero);

/// Non-associative MV-algebra. The constructor validates all seven axioms
/// eagerly; invalid tables never become NmvAlgebra values.
class NmvAlgebra {
  public:
    static NmvAlgebra make(Carrier carrier, FiniteBinaryOp oplus, FiniteUnaryOp neg, Elem zero);

    int size() const noexcept { return oplus_.size(); }
    Elem zero() const noexcept { return zero_; }
    Elem one() const noexcept { return neg_(zero_); }
    const Carrier& carrier() const noexcept { return carrier_; }
    const FiniteBinaryOp& oplus() const noexcept { return oplus_; }
    const FiniteUnaryOp& neg() const noexcept { return neg_; }

    /// x→y := ¬x⊕y
    Elem imp(Elem x, Elem y) const { return oplus_(neg_(x), y); }

    /// Same ⊕/¬ tables and zero; labels are ignored.
    bool same_tables(const NmvAlgebra& other) const {
        return zero_ == other.zero_ && oplus_ == other.oplus_ && neg_ == other.neg_;
    }

  private:
    NmvAlgebra(Carrier carrier, FiniteBinaryOp oplus, FiniteUnaryOp neg, Elem zero)
        : carrier_(std::move(carrier)), oplus_(std::move(oplus)), neg_(std::move(neg)),
          zero_(zero) {}
    Carrier carrier_;
    FiniteBinaryOp oplus_;
    FiniteUnaryOp neg_;
    Elem zero_;
};

/// The maps x ↦ x^a = x→a, one per section [a,1]. Partial: defined only
/// for a ≤ x; lookups outside a section are errors, not defaults.
class SectionFamily {
  public:
    SectionFamily(const PartialOrder& order, const FiniteBinaryOp& imp);

    /// x^a. Throws std::out_of_range unless a ≤ x.
    Elem apply(Elem a, Elem x) const;
    bool in_section(Elem a, Elem x) const;
    /// Members of [a,1], ascending by index.
    const std::vector<Elem>& section(Elem a) const { return members_.at(static_cast<std::size_t>(a)); }
    int size() const noexcept { return n_; }

  private:
    int n_;
    std::vector<Elem> map_;  // n*n, -1 outside the section
    std::vector<std::vector<Elem>> members_;
};

/// Term operations of an NMV-algebra, as tables.
struct DerivedOps {
    FiniteBinaryOp imp;      // x→y := ¬x⊕y
    FiniteBinaryOp sqcup;    // x⊔y := (x→y)→y
    FiniteBinaryOp otimes;   // x⊗y := ¬(¬x⊕¬y)
    FiniteBinaryOp sqcap;    // x⊓y := ¬(¬x⊔¬y)
    SectionFamily sections;  // x^a := x→a on [a,1]
};

/// x ≤ y iff x→y = 1. For a valid algebra this is a partial order with
/// least 0 and greatest 1; anything else raises an internal error.
PartialOrder induced_order(const NmvAlgebra& alg);

DerivedOps derive_ops(const NmvAlgebra& alg);

/// The ten identities every NMV-algebra satisfies on top of its axioms
/// (e.g. ((x→y)→y)→y ≈ x→y, x⊗(x→y) ≈ x⊓y), each checked over all tuples.
CheckReport check_derived_identities(const NmvAlgebra& alg);

/// Structural facts: bounded-above poset, ⊔ a commutative directoid, each
/// ^a a switching involution, and the four order bounds on ⊕, ⊔, ⊓, →.
CheckReport check_structure_facts(const NmvAlgebra& alg);

/// True iff every section involution is antitone on its section;
/// witness (a, x, y) with x,y ∈ [a,1], x ≤ y, y^a ≰ x^a.
CheckResult check_sai(const NmvAlgebra& alg);

/// Exhaustive associativity check; witness (x, y, z).
CheckResult is_associative(const FiniteBinaryOp& op);

}  // namespace nmvkit
