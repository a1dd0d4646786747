#include "fixlat/lattice.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <thread>
#include <unordered_set>

#include "fixlat/errors.hpp"

namespace fixlat {

namespace {

std::uint64_t fnv1a(const std::vector<std::string>& names) {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&h](unsigned char c) {
    h ^= c;
    h *= 1099511628211ULL;
  };
  for (const auto& name : names) {
    for (char c : name) mix(static_cast<unsigned char>(c));
    mix(0);
  }
  return h;
}

std::atomic<unsigned> g_sweep_workers{1};

// Below this many subsets a sweep stays on the calling thread.
constexpr std::uint64_t kParallelThreshold = 1024;

}  // namespace

std::size_t Subset::count() const noexcept {
  return static_cast<std::size_t>(std::popcount(bits_));
}

std::vector<std::size_t> Subset::elements() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < width_; ++i) {
    if (contains(i)) out.push_back(i);
  }
  return out;
}

Subset Subset::with_bits(std::uint64_t bits) const {
  const std::uint64_t mask =
      width_ == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << width_) - 1);
  if ((bits & ~mask) != 0) {
    throw UsageError("subset bits exceed universe width");
  }
  return Subset(bits, width_, universe_id_);
}

Universe::Universe(std::vector<std::string> names, std::vector<double> births,
                   std::size_t sweep_limit)
    : names_(std::move(names)),
      births_(std::move(births)),
      sweep_limit_(sweep_limit) {
  if (names_.empty()) throw UsageError("universe must have at least one element");
  if (names_.size() > kMaxElements) {
    throw SizeGuardError("universe has " + std::to_string(names_.size()) +
                         " elements; at most " + std::to_string(kMaxElements) +
                         " are representable");
  }
  if (sweep_limit_ > kHardSweepLimit) {
    throw UsageError("sweep limit above " + std::to_string(kHardSweepLimit));
  }
  std::unordered_set<std::string> seen;
  for (const auto& name : names_) {
    if (name.empty()) throw UsageError("empty element name");
    if (!seen.insert(name).second) {
      throw UsageError("duplicate element name '" + name + "'");
    }
  }
  if (births_.empty()) births_.assign(names_.size(), 0.0);
  if (births_.size() != names_.size()) {
    throw UsageError("birth count does not match universe size");
  }
  for (double b : births_) {
    if (std::isnan(b)) throw UsageError("birth time is NaN");
  }
  id_ = fnv1a(names_);
}

std::optional<std::size_t> Universe::index_of(std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

void Universe::require_sweepable() const {
  const std::size_t limit = std::min(sweep_limit_, kHardSweepLimit);
  if (size() > limit) {
    throw SizeGuardError("universe size " + std::to_string(size()) +
                         " exceeds the sweep guard of " +
                         std::to_string(limit));
  }
}

Universe Universe::with_births(std::vector<double> births) const {
  return Universe(names_, std::move(births), sweep_limit_);
}

std::uint64_t Universe::full_mask() const noexcept {
  return size() == 64 ? ~std::uint64_t{0}
                      : ((std::uint64_t{1} << size()) - 1);
}

Subset Universe::from_bits(std::uint64_t bits) const {
  return empty_set().with_bits(bits);
}

Subset Universe::singleton(std::size_t index) const {
  if (index >= size()) throw UsageError("element index out of range");
  return Subset(std::uint64_t{1} << index, size(), id_);
}

Subset Universe::of(std::initializer_list<std::string_view> names) const {
  std::uint64_t bits = 0;
  for (auto name : names) {
    auto idx = index_of(name);
    if (!idx) throw UsageError("unknown element '" + std::string(name) + "'");
    bits |= std::uint64_t{1} << *idx;
  }
  return Subset(bits, size(), id_);
}

Subset Universe::of(std::span<const std::string> names) const {
  std::uint64_t bits = 0;
  for (const auto& name : names) {
    auto idx = index_of(name);
    if (!idx) throw UsageError("unknown element '" + name + "'");
    bits |= std::uint64_t{1} << *idx;
  }
  return Subset(bits, size(), id_);
}

std::vector<std::string> Universe::names_of(const Subset& s) const {
  if (s.universe_id() != id_ || s.width() != size()) {
    throw UsageError("subset belongs to a different universe");
  }
  std::vector<std::string> out;
  for (std::size_t i : s.elements()) out.push_back(names_[i]);
  return out;
}

std::string Universe::format(const Subset& s) const {
  std::string out = "{";
  bool first = true;
  for (const auto& name : names_of(s)) {
    if (!first) out += ',';
    out += name;
    first = false;
  }
  out += '}';
  return out;
}

void require_same_universe(const Subset& a, const Subset& b) {
  if (a.universe_id() != b.universe_id() || a.width() != b.width()) {
    throw UsageError("subsets belong to different universes");
  }
}

bool subset_leq(const Subset& a, const Subset& b) {
  require_same_universe(a, b);
  return (a.bits() & ~b.bits()) == 0;
}

Subset join(const Subset& a, const Subset& b) {
  require_same_universe(a, b);
  return a.with_bits(a.bits() | b.bits());
}

Subset meet(const Subset& a, const Subset& b) {
  require_same_universe(a, b);
  return a.with_bits(a.bits() & b.bits());
}

Subset big_meet(std::span<const Subset> family, const Universe& universe) {
  Subset acc = universe.full_set();
  for (const auto& s : family) acc = meet(acc, s);
  return acc;
}

Subset big_join(std::span<const Subset> family, const Universe& universe) {
  Subset acc = universe.empty_set();
  for (const auto& s : family) acc = join(acc, s);
  return acc;
}

std::uint64_t deposit_bits(std::uint64_t k, std::uint64_t top) noexcept {
  std::uint64_t out = 0;
  while (top != 0 && k != 0) {
    const std::uint64_t low = top & (~top + 1);
    if (k & 1u) out |= low;
    k >>= 1;
    top &= top - 1;
  }
  return out;
}

void for_each_subset(std::uint64_t top,
                     const std::function<void(std::uint64_t)>& visit) {
  std::uint64_t s = 0;
  do {
    visit(s);
    s = next_subset(s, top);
  } while (s != 0);
}

std::optional<std::uint64_t> find_first_subset(
    std::uint64_t top, const std::function<bool(std::uint64_t)>& pred) {
  const int k = std::popcount(top);
  if (k > static_cast<int>(Universe::kHardSweepLimit)) {
    throw SizeGuardError("sweep over 2^" + std::to_string(k) + " subsets");
  }
  const std::uint64_t total = std::uint64_t{1} << k;
  const unsigned workers = std::max(1u, sweep_workers());

  if (workers == 1 || total < kParallelThreshold) {
    std::uint64_t s = 0;
    do {
      if (pred(s)) return s;
      s = next_subset(s, top);
    } while (s != 0);
    return std::nullopt;
  }

  // Contiguous index chunks; deposit_bits is order preserving, so the lowest
  // hit index is the numerically smallest subset.
  const std::uint64_t chunk = (total + workers - 1) / workers;
  std::atomic<std::uint64_t> best{total};
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      const std::uint64_t begin = chunk * w;
      if (begin >= total) break;
      const std::uint64_t end = std::min(total, begin + chunk);
      pool.emplace_back([&, begin, end] {
        std::uint64_t s = deposit_bits(begin, top);
        for (std::uint64_t i = begin; i < end; ++i) {
          if (best.load(std::memory_order_relaxed) < begin) return;
          if (pred(s)) {
            std::uint64_t cur = best.load();
            while (i < cur && !best.compare_exchange_weak(cur, i)) {
            }
            return;
          }
          s = next_subset(s, top);
        }
      });
    }
  }
  const std::uint64_t hit = best.load();
  if (hit == total) return std::nullopt;
  return deposit_bits(hit, top);
}

void set_sweep_workers(unsigned workers) noexcept {
  g_sweep_workers.store(workers == 0 ? 1 : workers);
}

unsigned sweep_workers() noexcept { return g_sweep_workers.load(); }

}  // namespace fixlat
