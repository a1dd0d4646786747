#include "fixlat/causality.hpp"

#include "fixlat/errors.hpp"

namespace fixlat {

namespace {

void require_member(const Universe& u, const Subset& s, const char* what) {
  if (s.universe_id() != u.id() || s.width() != u.size()) {
    throw UsageError(std::string(what) + " is over a different universe");
  }
}

}  // namespace

RuleSystem::RuleSystem(std::shared_ptr<const Universe> universe,
                       std::vector<Rule> rules)
    : universe_(std::move(universe)), rules_(std::move(rules)) {
  if (!universe_) throw UsageError("rule system without a universe");
  premises_.reserve(rules_.size());
  conclusions_.reserve(rules_.size());
  for (const auto& r : rules_) {
    require_member(*universe_, r.premise, "rule premise");
    require_member(*universe_, r.conclusion, "rule conclusion");
    premises_.push_back(r.premise.bits());
    conclusions_.push_back(r.conclusion.bits());
  }
}

std::uint64_t RuleSystem::apply_bits(std::uint64_t a) const noexcept {
  std::uint64_t out = 0;
  for (std::size_t i = 0; i < premises_.size(); ++i) {
    if ((premises_[i] & ~a) == 0) out |= conclusions_[i];
  }
  return out;
}

DenseTable::DenseTable(std::shared_ptr<const Universe> universe,
                       std::vector<Subset> entries)
    : universe_(std::move(universe)), entries_(std::move(entries)) {
  if (!universe_) throw UsageError("dense table without a universe");
  universe_->require_sweepable();
  const std::size_t expected = std::size_t{1} << universe_->size();
  if (entries_.size() != expected) {
    throw UsageError("dense table has " + std::to_string(entries_.size()) +
                     " entries, expected " + std::to_string(expected));
  }
  for (const auto& e : entries_) require_member(*universe_, e, "table entry");
}

const Universe& CausalityMap::universe() const noexcept {
  return *universe_ptr();
}

const std::shared_ptr<const Universe>& CausalityMap::universe_ptr()
    const noexcept {
  return std::visit(
      [](const auto& r) -> const std::shared_ptr<const Universe>& {
        return r.universe_ptr();
      },
      repr_);
}

Subset CausalityMap::apply(const Subset& a) const {
  require_member(universe(), a, "argument");
  return a.with_bits(apply_bits(a.bits()));
}

std::uint64_t CausalityMap::apply_bits(std::uint64_t a) const noexcept {
  if (const auto* r = std::get_if<RuleSystem>(&repr_)) return r->apply_bits(a);
  return std::get<DenseTable>(repr_).apply_bits(a);
}

Subset first_cause(const CausalityMap& c) {
  return c.apply(c.universe().empty_set());
}

CheckResult check_A1(const CausalityMap& c) {
  const Universe& u = c.universe();
  u.require_sweepable();
  auto hit = find_first_subset(u.full_mask(), [&c](std::uint64_t a) {
    return c.apply_bits(a) == 0;
  });
  if (!hit) return CheckResult::pass();
  return CheckResult::fail({tags::kEmptyCause, {u.from_bits(*hit)}, {}});
}

CheckResult check_A2(const CausalityMap& c) {
  const Universe& u = c.universe();
  u.require_sweepable();
  const std::uint64_t full = u.full_mask();
  const std::size_t n = u.size();
  // Smallest added index x (or n) for which (a, a + x) violates monotonicity.
  auto first_bad_cover = [&c, full, n](std::uint64_t a) -> std::size_t {
    const std::uint64_t ca = c.apply_bits(a);
    for (std::size_t x = 0; x < n; ++x) {
      const std::uint64_t bit = std::uint64_t{1} << x;
      if ((a & bit) != 0 || (bit & full) == 0) continue;
      if ((ca & ~c.apply_bits(a | bit)) != 0) return x;
    }
    return n;
  };
  auto hit = find_first_subset(full, [&](std::uint64_t a) {
    return first_bad_cover(a) != n;
  });
  if (!hit) return CheckResult::pass();
  const std::size_t x = first_bad_cover(*hit);
  return CheckResult::fail(
      {tags::kNotMonotone,
       {u.from_bits(*hit), u.from_bits(*hit | (std::uint64_t{1} << x))},
       {}});
}

CheckResult check_prop_2_1(const CausalityMap& c) {
  if (!first_cause(c).empty()) return CheckResult::pass();
  return CheckResult::fail(
      {tags::kFirstCauseEmpty, {c.universe().empty_set()}, {}});
}

CheckResult check_prop_2_2(const CausalityMap& c) {
  const Universe& u = c.universe();
  u.require_sweepable();
  const std::uint64_t base = c.apply_bits(0);
  auto hit = find_first_subset(u.full_mask(), [&c, base](std::uint64_t a) {
    return (base & ~c.apply_bits(a)) != 0;
  });
  if (!hit) return CheckResult::pass();
  return CheckResult::fail(
      {tags::kFirstCauseNotContained, {u.from_bits(*hit)}, {}});
}

}  // namespace fixlat
