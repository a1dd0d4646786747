#pragma once

// The causality law C as a map on subsets, and the exhaustive checkers for
// the axioms stated directly on C.
//
// Two representations are supported. A RuleSystem maps A to the union of the
// conclusions of every rule whose premise is contained in A; it is monotone by
// construction and scales past the sweep guard. A DenseTable lists C(A) for
// all 2^n arguments and can express arbitrary, including broken, laws.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "fixlat/lattice.hpp"

namespace fixlat {

struct Rule {
  Subset premise;
  Subset conclusion;
};

class RuleSystem {
 public:
  RuleSystem(std::shared_ptr<const Universe> universe, std::vector<Rule> rules);

  const Universe& universe() const noexcept { return *universe_; }
  const std::shared_ptr<const Universe>& universe_ptr() const noexcept {
    return universe_;
  }
  const std::vector<Rule>& rules() const noexcept { return rules_; }

  std::uint64_t apply_bits(std::uint64_t a) const noexcept;

 private:
  std::shared_ptr<const Universe> universe_;
  std::vector<Rule> rules_;
  std::vector<std::uint64_t> premises_;
  std::vector<std::uint64_t> conclusions_;
};

class DenseTable {
 public:
  // entries[i] is C of the subset whose bit value is i; exactly 2^n entries.
  DenseTable(std::shared_ptr<const Universe> universe,
             std::vector<Subset> entries);

  const Universe& universe() const noexcept { return *universe_; }
  const std::shared_ptr<const Universe>& universe_ptr() const noexcept {
    return universe_;
  }
  const std::vector<Subset>& entries() const noexcept { return entries_; }

  std::uint64_t apply_bits(std::uint64_t a) const noexcept {
    return entries_[a].bits();
  }

 private:
  std::shared_ptr<const Universe> universe_;
  std::vector<Subset> entries_;
};

class CausalityMap {
 public:
  CausalityMap(RuleSystem rules) : repr_(std::move(rules)) {}   // NOLINT
  CausalityMap(DenseTable table) : repr_(std::move(table)) {}   // NOLINT

  const Universe& universe() const noexcept;
  const std::shared_ptr<const Universe>& universe_ptr() const noexcept;

  bool is_rule_system() const noexcept {
    return std::holds_alternative<RuleSystem>(repr_);
  }
  const RuleSystem* rule_system() const noexcept {
    return std::get_if<RuleSystem>(&repr_);
  }
  const DenseTable* table() const noexcept {
    return std::get_if<DenseTable>(&repr_);
  }

  // Throws UsageError if `a` is over another universe.
  Subset apply(const Subset& a) const;
  // Unchecked fast path; `a` must be a valid mask for this universe.
  std::uint64_t apply_bits(std::uint64_t a) const noexcept;

 private:
  std::variant<RuleSystem, DenseTable> repr_;
};

struct Witness {
  // Names the violated clause.
  std::string tag;
  // Counterexample sets, in the order documented by the producing check.
  std::vector<Subset> sets;
  // Time instants involved, if the clause is time-indexed.
  std::vector<double> times;
};

struct CheckResult {
  bool passed = true;
  std::optional<Witness> witness;
  // Free-form remark on a pass (e.g. a vacuous implication).
  std::string note;

  static CheckResult pass(std::string note = {}) {
    return CheckResult{true, std::nullopt, std::move(note)};
  }
  static CheckResult fail(Witness w) {
    return CheckResult{false, std::move(w), {}};
  }
};

// Witness tags shared by producers and tests.
namespace tags {
inline constexpr const char* kEmptyCause = "C(A) is empty";
inline constexpr const char* kNotMonotone = "A <= B but C(A) not <= C(B)";
inline constexpr const char* kFirstCauseEmpty = "C(e) is empty";
inline constexpr const char* kFirstCauseNotContained = "C(e) not <= C(A)";
}  // namespace tags

// Returns apply(C, empty set).
Subset first_cause(const CausalityMap& c);

// Passes iff C(A) is non-empty for every A. Witness: smallest failing A.
CheckResult check_A1(const CausalityMap& c);

// Passes iff C is monotone, checked on cover pairs (A, A + x). Witness:
// (A, A + x), smallest by A's bit value then x's index.
CheckResult check_A2(const CausalityMap& c);

// Passes iff C(empty) is non-empty. Witness: the empty set.
CheckResult check_prop_2_1(const CausalityMap& c);

// Passes iff C(empty) <= C(A) for every A. Witness: smallest failing A.
CheckResult check_prop_2_2(const CausalityMap& c);

}  // namespace fixlat
