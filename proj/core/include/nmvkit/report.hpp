#pragma once

#include <string_view>

#include "nmvkit/types.hpp"

namespace nmvkit {

enum class Verdict { pass, fail, skipped };

/// One law of a check suite: stable id, human-readable statement, verdict,
/// and the first lexicographic counterexample when it failed.
struct LawResult {
    std::string id;
    std::string statement;
    Verdict verdict = Verdict::pass;
    std::vector<Elem> witness;
};

class CheckReport {
  public:
    /// Throws std::logic_error on a duplicate law id.
    void add(std::string id, std::string statement, Verdict verdict,
             std::vector<Elem> witness = {});
    void add(std::string id, std::string statement, const CheckResult& result);

    /// No law failed (skipped laws do not count as failures).
    bool ok() const noexcept;
    /// Every law passed outright.
    bool all_passed() const noexcept;
    int failed_count() const noexcept;

    const LawResult* find(std::string_view id) const noexcept;
    const std::vector<LawResult>& laws() const noexcept { return laws_; }

  private:
    std::vector<LawResult> laws_;
};

}  // namespace nmvkit
