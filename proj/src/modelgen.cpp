#include "fixlat/modelgen.hpp"

#include <algorithm>
#include <string>

#include "fixlat/errors.hpp"

namespace fixlat {

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw UsageError("Rng::below with zero bound");
  // 2^64 mod bound; values below it would bias the low residues.
  const std::uint64_t threshold = (std::uint64_t{0} - bound) % bound;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x < threshold);
  return x % bound;
}

namespace {

// Greatest birth assignment below `births` with birth(x) <= max birth(P) for
// every rule P -> X and x in X (-inf for empty P). Values only ever move to
// another existing value, so the loop terminates.
void lower_births(std::vector<double>& births,
                  const std::vector<std::uint64_t>& premises,
                  const std::vector<std::uint64_t>& conclusions) {
  const auto n = births.size();
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t r = 0; r < premises.size(); ++r) {
      double cap = -kInf;
      for (std::size_t p = 0; p < n; ++p) {
        if ((premises[r] >> p) & 1u) cap = std::max(cap, births[p]);
      }
      for (std::size_t x = 0; x < n; ++x) {
        if (((conclusions[r] >> x) & 1u) == 0 || births[x] <= cap) continue;
        births[x] = cap;
        changed = true;
      }
    }
  }
}

}  // namespace

SpinozaModel random_model(const GenConfig& cfg) {
  if (cfg.n < kMinGenSize || cfg.n > kMaxGenSize) {
    throw UsageError("generator universe size must be in [2, 12], got " +
                     std::to_string(cfg.n));
  }
  if (cfg.force_A1 && cfg.rule_count == 0) {
    throw UsageError("force_A1 needs at least one rule");
  }
  if (cfg.time_count > cfg.n + 2) {
    throw UsageError("time_count exceeds the n + 2 available integer instants");
  }

  Rng rng(cfg.seed);
  const std::size_t n = cfg.n;
  const std::uint64_t top = (std::uint64_t{1} << n) - 1;

  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("e" + std::to_string(i));

  std::vector<std::uint64_t> premises;
  std::vector<std::uint64_t> conclusions;
  for (std::size_t r = 0; r < cfg.rule_count; ++r) {
    if (r == 0 && cfg.force_A1) {
      premises.push_back(0);
      conclusions.push_back(1 + rng.below(top - 1));  // non-empty, non-top
    } else {
      premises.push_back(rng.below(top));
      conclusions.push_back(rng.below(top));
    }
  }

  std::vector<double> births;
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint64_t v = rng.below(n + 1);
    births.push_back(v == 0 ? -kInf : static_cast<double>(v - 1));
  }
  lower_births(births, premises, conclusions);

  std::vector<double> pool;
  for (std::size_t t = 0; t < n + 2; ++t) pool.push_back(static_cast<double>(t));
  std::vector<double> times;
  for (std::size_t k = 0; k < cfg.time_count; ++k) {
    const auto pick = static_cast<std::size_t>(rng.below(pool.size()));
    times.push_back(pool[pick]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pick));
  }
  times.push_back(kInf);

  auto universe = std::make_shared<const Universe>(names, births);
  std::vector<Rule> rules;
  for (std::size_t r = 0; r < premises.size(); ++r) {
    rules.push_back({universe->from_bits(premises[r]),
                     universe->from_bits(conclusions[r])});
  }
  return SpinozaModel(CausalityMap(RuleSystem(universe, std::move(rules))),
                      std::move(times));
}

DenseTable densify(const RuleSystem& rules) {
  const Universe& u = rules.universe();
  u.require_sweepable();
  std::vector<Subset> entries;
  entries.reserve(std::size_t{1} << u.size());
  for_each_subset(u.full_mask(), [&](std::uint64_t a) {
    entries.push_back(u.from_bits(rules.apply_bits(a)));
  });
  return DenseTable(rules.universe_ptr(), std::move(entries));
}

DenseTable random_table(std::shared_ptr<const Universe> universe,
                        std::uint64_t seed) {
  universe->require_sweepable();
  Rng rng(seed);
  const std::uint64_t count = std::uint64_t{1} << universe->size();
  std::vector<Subset> entries;
  entries.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) {
    entries.push_back(universe->from_bits(rng.below(count)));
  }
  return DenseTable(std::move(universe), std::move(entries));
}

DenseTable mutate_table(const DenseTable& table, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Subset> entries = table.entries();
  const auto which = static_cast<std::size_t>(rng.below(entries.size()));
  const auto flip = rng.below(table.universe().size());
  entries[which] = entries[which].with_bits(entries[which].bits() ^
                                            (std::uint64_t{1} << flip));
  return DenseTable(table.universe_ptr(), std::move(entries));
}

}  // namespace fixlat
