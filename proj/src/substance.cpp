#include "fixlat/substance.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "fixlat/errors.hpp"
#include "fixlat/fixpoint.hpp"

namespace fixlat {

namespace {

std::vector<double> normalize_times(std::vector<double> times) {
  if (times.empty()) times.push_back(kInf);
  for (double t : times) {
    if (std::isnan(t)) throw UsageError("time instant is NaN");
    if (t == -kInf) throw UsageError("time instant -inf has an empty slice");
  }
  std::sort(times.begin(), times.end());
  times.erase(std::unique(times.begin(), times.end()), times.end());
  return times;
}

std::uint64_t bit(std::size_t i) { return std::uint64_t{1} << i; }

}  // namespace

SpinozaModel::SpinozaModel(std::shared_ptr<const Universe> universe,
                           CausalityMap map, std::vector<double> times)
    : universe_(std::move(universe)),
      map_(std::move(map)),
      times_(normalize_times(std::move(times))) {
  if (!universe_) throw UsageError("model without a universe");
  if (universe_->id() != map_.universe().id() ||
      universe_->size() != map_.universe().size()) {
    throw UsageError("model universe differs from the map's universe");
  }
}

SpinozaModel::SpinozaModel(CausalityMap map, std::vector<double> times)
    : SpinozaModel(map.universe_ptr(), map, std::move(times)) {}

Subset SpinozaModel::slice(double t) const {
  std::uint64_t bits = 0;
  for (std::size_t i = 0; i < universe_->size(); ++i) {
    if (universe_->birth(i) < t) bits |= bit(i);
  }
  return universe_->from_bits(bits);
}

Subset SpinozaModel::nature(double t) const {
  const Subset e = slice(t);
  std::uint64_t bits = 0;
  for (std::size_t x : e.elements()) {
    if (map_.apply_bits(bit(x)) != bit(x)) bits |= bit(x);
  }
  return universe_->from_bits(bits);
}

SpinozaModel SpinozaModel::with_births(std::vector<double> births) const {
  return SpinozaModel(
      std::make_shared<const Universe>(universe_->with_births(std::move(births))),
      map_, times_);
}

SpinozaModel SpinozaModel::with_times(std::vector<double> times) const {
  return SpinozaModel(universe_, map_, std::move(times));
}

SpinozaModel SpinozaModel::with_map(CausalityMap map) const {
  return SpinozaModel(universe_, std::move(map), times_);
}

CheckResult check_slice_closure(const SpinozaModel& model) {
  const Universe& u = model.universe();
  u.require_sweepable();
  const CausalityMap& c = model.map();
  for (double t : model.times()) {
    const std::uint64_t e = model.slice(t).bits();
    auto hit = find_first_subset(
        e, [&c, e](std::uint64_t a) { return (c.apply_bits(a) & ~e) != 0; });
    if (hit) {
      return CheckResult::fail({tags::kSliceNotClosed, {u.from_bits(*hit)}, {t}});
    }
  }
  return CheckResult::pass();
}

SubstanceResult compute_substance(const SpinozaModel& model) {
  const CausalityMap& c = model.map();
  SubstanceResult out;

  for (double t : model.times()) {
    const Subset e = model.slice(t);
    Chain up;
    Chain down;
    try {
      up = kleene_lfp(c);
      down = kleene_gfp(c, e);
    } catch (const CycleError&) {
      out.verdict = CheckResult::fail({tags::kNoStabilization, {}, {t}});
      return out;
    }
    for (const auto& step : up.steps) {
      if (!subset_leq(step, e)) {
        out.verdict = CheckResult::fail({tags::kLeavesSlice, {step}, {t}});
        return out;
      }
    }
    for (const auto& step : down.steps) {
      if (!subset_leq(step, e)) {
        out.verdict = CheckResult::fail({tags::kLeavesSlice, {step}, {t}});
        return out;
      }
    }
    out.per_time.push_back({t, up.fixed_point});
    out.gfp_per_time.push_back({t, down.fixed_point});
  }

  for (const auto& [t, s] : out.per_time) {
    if (s.empty()) {
      out.verdict = CheckResult::fail({tags::kSubstanceEmpty, {s}, {t}});
      return out;
    }
  }
  const auto& first = out.per_time.front();
  for (const auto& other : out.per_time) {
    if (other.set != first.set) {
      out.verdict = CheckResult::fail({tags::kSubstanceTimeDependent,
                                       {first.set, other.set},
                                       {first.time, other.time}});
      return out;
    }
  }
  const Subset cause = first_cause(c);
  if (!subset_leq(cause, first.set)) {
    out.verdict =
        CheckResult::fail({tags::kFirstCauseOutsideS, {cause, first.set}, {}});
    return out;
  }
  out.substance = first.set;
  out.verdict = CheckResult::pass();
  return out;
}

CheckResult check_A3(const SpinozaModel& model) {
  const auto fixed = enumerate_fixed_points(model.map(), model.largest_slice());
  for (std::size_t i = 0; i < fixed.size(); ++i) {
    for (std::size_t j = i + 1; j < fixed.size(); ++j) {
      if (!meet(fixed[i], fixed[j]).empty()) {
        return CheckResult::fail({tags::kSharedSubstance, {fixed[i], fixed[j]}, {}});
      }
    }
  }
  return CheckResult::pass();
}

CheckResult check_uniqueness(const SpinozaModel& model) {
  for (double t : model.times()) {
    const auto fixed = enumerate_fixed_points(model.map(), model.slice(t));
    const auto non_empty = std::count_if(fixed.begin(), fixed.end(),
                                         [](const Subset& s) { return !s.empty(); });
    if (non_empty == 1) continue;
    return CheckResult::fail(
        {non_empty == 0 ? tags::kNoSubstance : tags::kMultipleSubstances, fixed, {t}});
  }
  return CheckResult::pass();
}

CheckResult check_partition(const SpinozaModel& model, const Subset& substance) {
  const Universe& u = model.universe();
  for (double t : model.times()) {
    const Subset e = model.slice(t);
    const Subset covered = join(model.nature(t), substance);
    if (covered == e) continue;
    const std::uint64_t missing = e.bits() & ~covered.bits();
    if (missing != 0) {
      const auto x = static_cast<std::size_t>(std::countr_zero(missing));
      return CheckResult::fail({tags::kUncovered, {u.singleton(x)}, {t}});
    }
    return CheckResult::fail({tags::kSubstanceOutsideSlice, {substance, e}, {t}});
  }
  return CheckResult::pass();
}

CheckResult check_indivisibility(const SpinozaModel& model,
                                 const Subset& substance) {
  const Universe& u = model.universe();
  const CausalityMap& c = model.map();
  const std::uint64_t whole = substance.bits();
  require_same_universe(substance, u.empty_set());
  auto hit = find_first_subset(whole, [&c, whole](std::uint64_t part) {
    return part != 0 && part != whole && c.apply_bits(part) == part;
  });
  if (!hit) return CheckResult::pass();
  return CheckResult::fail({tags::kDivisible, {u.from_bits(*hit)}, {}});
}

CheckResult check_eternity(const SpinozaModel& model, const Subset& substance) {
  const Universe& u = model.universe();
  for (double t : model.times()) {
    if (!subset_leq(substance, model.slice(t))) {
      return CheckResult::fail(
          {tags::kSubstanceOutsideSlice, {substance, model.slice(t)}, {t}});
    }
  }
  for (std::size_t x : substance.elements()) {
    if (u.birth(x) != -kInf) {
      return CheckResult::fail({tags::kMortal, {u.singleton(x)}, {}});
    }
  }
  const Subset cause = first_cause(model.map());
  if (!subset_leq(cause, substance)) {
    return CheckResult::fail({tags::kFirstCauseOutsideS, {cause, substance}, {}});
  }
  return CheckResult::pass();
}

CheckResult check_property_P(const SpinozaModel& model) {
  const Universe& u = model.universe();
  u.require_sweepable();
  const CausalityMap& c = model.map();
  auto hit = find_first_subset(model.largest_slice().bits(), [&c](std::uint64_t a) {
    const std::uint64_t ca = c.apply_bits(a);
    return (a & ~ca) == 0 && a != 0 && a != ca;
  });
  if (!hit) return CheckResult::pass();
  return CheckResult::fail({tags::kPropertyP, {u.from_bits(*hit)}, {}});
}

CheckResult check_atom_theorem(const SpinozaModel& model,
                               const Subset& substance,
                               const CheckResult& property_p) {
  if (!property_p.passed) {
    return CheckResult::pass("vacuous: property (P) does not hold");
  }
  if (substance.count() != 1) {
    return CheckResult::fail({tags::kNotSingleton, {substance}, {}});
  }
  const Subset cause = first_cause(model.map());
  if (cause != substance) {
    return CheckResult::fail({tags::kNotFirstCause, {substance, cause}, {}});
  }
  return CheckResult::pass();
}

CheckResult check_temporal_consistency(const SpinozaModel& model,
                                       const Subset& substance) {
  const Universe& u = model.universe();
  const CausalityMap& c = model.map();
  for (std::size_t x = 0; x < u.size(); ++x) {
    const bool inside = substance.contains(x);
    const Subset cause = u.from_bits(c.apply_bits(bit(x)));
    for (std::size_t y : cause.elements()) {
      const double cb = u.birth(y);
      const double xb = u.birth(x);
      if (cb > xb) {
        return CheckResult::fail(
            {tags::kEffectPrecedesCause, {u.singleton(x), u.singleton(y)}, {}});
      }
      if (!inside && !(cb < xb)) {
        return CheckResult::fail(
            {tags::kNotStrictlyEarlier, {u.singleton(x), u.singleton(y)}, {}});
      }
    }
  }
  return CheckResult::pass();
}

}  // namespace fixlat
