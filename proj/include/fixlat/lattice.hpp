#pragma once

// Finite powerset lattice over a named universe.
//
// A Subset is a bit vector whose bit i stands for the i-th declared name of
// its Universe. Subsets carry the identity of the universe they were built
// from so that mixing two universes is caught instead of silently producing
// garbage.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fixlat {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

class Universe;

class Subset {
 public:
  Subset() = default;

  std::uint64_t bits() const noexcept { return bits_; }
  std::size_t width() const noexcept { return width_; }
  std::uint64_t universe_id() const noexcept { return universe_id_; }

  bool contains(std::size_t index) const noexcept {
    return index < width_ && ((bits_ >> index) & 1u) != 0;
  }
  std::size_t count() const noexcept;
  bool empty() const noexcept { return bits_ == 0; }

  // Indices of set bits, ascending.
  std::vector<std::size_t> elements() const;

  // Same universe, different bits. Bits above the width are rejected.
  Subset with_bits(std::uint64_t bits) const;

  friend bool operator==(const Subset&, const Subset&) = default;

 private:
  friend class Universe;
  Subset(std::uint64_t bits, std::size_t width, std::uint64_t id)
      : bits_(bits), width_(width), universe_id_(id) {}

  std::uint64_t bits_ = 0;
  std::size_t width_ = 0;
  std::uint64_t universe_id_ = 0;
};

class Universe {
 public:
  static constexpr std::size_t kMaxElements = 64;
  static constexpr std::size_t kDefaultSweepLimit = 16;
  // Absolute ceiling for anything that enumerates 2^n subsets.
  static constexpr std::size_t kHardSweepLimit = 30;

  // births defaults to 0.0 for every element when empty.
  explicit Universe(std::vector<std::string> names,
                    std::vector<double> births = {},
                    std::size_t sweep_limit = kDefaultSweepLimit);

  std::size_t size() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::vector<double>& births() const noexcept { return births_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  double birth(std::size_t i) const { return births_.at(i); }
  std::optional<std::size_t> index_of(std::string_view name) const;

  std::uint64_t id() const noexcept { return id_; }
  std::size_t sweep_limit() const noexcept { return sweep_limit_; }

  // Throws SizeGuardError if 2^size() subsets may not be enumerated.
  void require_sweepable() const;

  // Copy with the same names (hence the same id) and new birth data.
  Universe with_births(std::vector<double> births) const;

  std::uint64_t full_mask() const noexcept;

  Subset empty_set() const { return Subset(0, size(), id_); }
  Subset full_set() const { return Subset(full_mask(), size(), id_); }
  Subset from_bits(std::uint64_t bits) const;
  Subset singleton(std::size_t index) const;
  // Throws UsageError on unknown names.
  Subset of(std::initializer_list<std::string_view> names) const;
  Subset of(std::span<const std::string> names) const;

  // Names of the set bits in declaration order.
  std::vector<std::string> names_of(const Subset& s) const;
  // "{s,a}" style rendering, declaration order.
  std::string format(const Subset& s) const;

 private:
  std::vector<std::string> names_;
  std::vector<double> births_;
  std::size_t sweep_limit_;
  std::uint64_t id_;
};

// Inclusion order and binary bounds. All throw UsageError on mismatched
// universes.
bool subset_leq(const Subset& a, const Subset& b);
Subset join(const Subset& a, const Subset& b);
Subset meet(const Subset& a, const Subset& b);

// inf / sup of an arbitrary (possibly empty) family. The empty meet is the
// full set of `universe`, the empty join is the empty set.
Subset big_meet(std::span<const Subset> family, const Universe& universe);
Subset big_join(std::span<const Subset> family, const Universe& universe);

void require_same_universe(const Subset& a, const Subset& b);

// ---------------------------------------------------------------------------
// Subset sweeps over raw masks.

// k-th subset of `top` in increasing numeric order (software bit deposit).
std::uint64_t deposit_bits(std::uint64_t k, std::uint64_t top) noexcept;

// Next subset of `top` after `current` in increasing order; wraps to 0.
inline std::uint64_t next_subset(std::uint64_t current,
                                 std::uint64_t top) noexcept {
  return ((current | ~top) + 1) & top;
}

// Visits every subset of `top` in increasing numeric order.
void for_each_subset(std::uint64_t top,
                     const std::function<void(std::uint64_t)>& visit);

// Smallest subset of `top` (numerically) satisfying `pred`. Large sweeps are
// split across sweep_workers() threads; `pred` must be safe to call
// concurrently. The result does not depend on the worker count.
std::optional<std::uint64_t> find_first_subset(
    std::uint64_t top, const std::function<bool(std::uint64_t)>& pred);

// Worker count for find_first_subset. 0 or 1 means single-threaded.
void set_sweep_workers(unsigned workers) noexcept;
unsigned sweep_workers() noexcept;

}  // namespace fixlat
