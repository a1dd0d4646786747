#pragma once

// Seeded model generation.
//
// All randomness comes from std::mt19937_64 (its output sequence is fixed by
// the C++ standard) seeded with GenConfig::seed. Bounded draws use rejection
// sampling on the raw 64-bit output rather than std::uniform_int_distribution,
// whose algorithm is implementation-defined. Identical configs therefore give
// identical models on every platform.

#include <cstddef>
#include <cstdint>
#include <random>

#include "fixlat/causality.hpp"
#include "fixlat/substance.hpp"

namespace fixlat {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound);
  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

struct GenConfig {
  std::uint64_t seed = 1;
  std::size_t n = 4;           // universe size, 2..12
  std::size_t rule_count = 4;  // includes the empty-premise rule if forced
  std::size_t time_count = 2;  // finite instants; +inf is always appended
  bool force_A1 = true;
};

inline constexpr std::size_t kMinGenSize = 2;
inline constexpr std::size_t kMaxGenSize = 12;

// Elements e0..e(n-1). Rule premises and conclusions are uniform over the
// non-top subsets; with force_A1 the first rule has an empty premise and a
// non-empty conclusion. Births are drawn from {-inf, 0, 1, ..., n-1} and then
// lowered until every rule P -> X satisfies birth(x) <= max birth(P) for x in
// X (-inf for empty P), which makes every slice closed and the least fixed
// point eternal. Times are distinct integers in [0, n+1] plus +inf.
// Throws UsageError on an invalid config.
SpinozaModel random_model(const GenConfig& cfg);

// entry[A] = apply(rules, A) for every A.
DenseTable densify(const RuleSystem& rules);

// Table with every entry drawn uniformly; almost never monotone.
DenseTable random_table(std::shared_ptr<const Universe> universe,
                        std::uint64_t seed);

// Copy of `table` with one bit of one entry flipped, both chosen by `seed`.
DenseTable mutate_table(const DenseTable& table, std::uint64_t seed);

}  // namespace fixlat
