#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace nmvkit {

/// Index of an element within a Carrier. Elements are referenced by index
/// everywhere inside the library; labels matter only at I/O boundaries.
using Elem = int;

/// Thrown when a structure fails one of its defining laws. Carries the law
/// id (e.g. "nmv.ax5") and the first lexicographic witness tuple.
class validation_error : public std::runtime_error {
  public:
    validation_error(std::string law_id, std::vector<Elem> witness, const std::string& what_arg)
        : std::runtime_error(what_arg), law_id_(std::move(law_id)), witness_(std::move(witness)) {}

    const std::string& law_id() const noexcept { return law_id_; }
    const std::vector<Elem>& witness() const noexcept { return witness_; }

  private:
    std::string law_id_;
    std::vector<Elem> witness_;
};

/// Ordered list of distinct element labels.
class Carrier {
  public:
    /// Throws std::invalid_argument on an empty list or duplicate labels.
    static Carrier make(std::vector<std::string> names);

    /// Carrier {prefix0, prefix1, ...}; handy for generated algebras.
    static Carrier indexed(int size, std::string_view prefix = "e");

    int size() const noexcept { return static_cast<int>(names_.size()); }
    const std::string& name(Elem x) const { return names_.at(static_cast<std::size_t>(x)); }
    const std::vector<std::string>& names() const noexcept { return names_; }

    /// Index of a label, or -1 when absent.
    Elem index_of(std::string_view label) const noexcept;

    bool operator==(const Carrier&) const = default;

  private:
    explicit Carrier(std::vector<std::string> names) : names_(std::move(names)) {}
    std::vector<std::string> names_;
};

/// Total unary operation table over carrier indices.
class FiniteUnaryOp {
  public:
    /// Throws std::invalid_argument unless every entry is an index < table size.
    FiniteUnaryOp(std::vector<Elem> table);

    Elem operator()(Elem x) const { return table_[static_cast<std::size_t>(x)]; }
    int size() const noexcept { return static_cast<int>(table_.size()); }
    const std::vector<Elem>& table() const noexcept { return table_; }

    bool operator==(const FiniteUnaryOp&) const = default;

  private:
    std::vector<Elem> table_;
};

/// Total binary operation table over carrier indices, row major.
class FiniteBinaryOp {
  public:
    /// table must hold size*size entries, each a valid index.
    FiniteBinaryOp(int size, std::vector<Elem> table);

    Elem operator()(Elem x, Elem y) const {
        return table_[static_cast<std::size_t>(x) * static_cast<std::size_t>(size_) +
                      static_cast<std::size_t>(y)];
    }
    int size() const noexcept { return size_; }
    const std::vector<Elem>& table() const noexcept { return table_; }

    bool operator==(const FiniteBinaryOp&) const = default;

  private:
    int size_;
    std::vector<Elem> table_;
};

/// Outcome of a universally quantified predicate: either it holds, or the
/// first lexicographic counterexample tuple.
struct CheckResult {
    bool holds = true;
    std::vector<Elem> witness;

    explicit operator bool() const noexcept { return holds; }

    static CheckResult ok() { return {}; }
    static CheckResult fail(std::vector<Elem> witness) { return {false, std::move(witness)}; }
};

}  // namespace nmvkit
