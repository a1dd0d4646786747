#pragma once

// Time-indexed world model and the checks built on its least fixed point.
//
// Time is sampled at a finite list of instants. The slice E_t holds the
// elements born strictly before t; the law C is evaluated on subsets of a
// slice only after check_slice_closure has shown it never leaves the slice.

#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "fixlat/causality.hpp"
#include "fixlat/lattice.hpp"

namespace fixlat {

struct TimedSubset {
  double time;
  Subset set;

  friend bool operator==(const TimedSubset&, const TimedSubset&) = default;
};

class SpinozaModel {
 public:
  // `universe` supplies births and must have the same names as the map's
  // universe. Times are sorted and deduplicated; an empty list means {+inf}.
  SpinozaModel(std::shared_ptr<const Universe> universe, CausalityMap map,
               std::vector<double> times = {});
  // Uses the map's own universe for births.
  explicit SpinozaModel(CausalityMap map, std::vector<double> times = {});

  const Universe& universe() const noexcept { return *universe_; }
  const std::shared_ptr<const Universe>& universe_ptr() const noexcept {
    return universe_;
  }
  const CausalityMap& map() const noexcept { return map_; }
  const std::vector<double>& times() const noexcept { return times_; }

  // Elements with birth < t.
  Subset slice(double t) const;
  // Elements x of E_t with C({x}) != {x}.
  Subset nature(double t) const;
  // Slice at the latest listed instant.
  Subset largest_slice() const { return slice(times_.back()); }

  SpinozaModel with_births(std::vector<double> births) const;
  SpinozaModel with_times(std::vector<double> times) const;
  SpinozaModel with_map(CausalityMap map) const;

 private:
  std::shared_ptr<const Universe> universe_;
  CausalityMap map_;
  std::vector<double> times_;
};

namespace tags {
inline constexpr const char* kSliceNotClosed = "C(A) not <= E_t";
inline constexpr const char* kSubstanceEmpty = "S = e";
inline constexpr const char* kSubstanceTimeDependent = "S_t differs between instants";
inline constexpr const char* kFirstCauseOutsideS = "C(e) not <= S";
inline constexpr const char* kLeavesSlice = "Kleene iterate leaves E_t";
inline constexpr const char* kNoStabilization = "Kleene iteration did not stabilize";
inline constexpr const char* kSharedSubstance = "distinct substances share elements";
inline constexpr const char* kMultipleSubstances = "more than one non-empty fixed point";
inline constexpr const char* kNoSubstance = "no non-empty fixed point";
inline constexpr const char* kUncovered = "element in neither N_t nor S";
inline constexpr const char* kSubstanceOutsideSlice = "S not <= E_t";
inline constexpr const char* kDivisible = "proper part of S is a fixed point";
inline constexpr const char* kMortal = "element of S has finite birth";
inline constexpr const char* kPropertyP = "A <= C(A) with A != e and A != C(A)";
inline constexpr const char* kNotSingleton = "|S| != 1";
inline constexpr const char* kNotFirstCause = "S != C(e)";
inline constexpr const char* kEffectPrecedesCause = "cause born after its effect";
inline constexpr const char* kNotStrictlyEarlier = "cause not strictly earlier than effect";
}  // namespace tags

// Passes iff C(A) <= E_t for every listed t and every A <= E_t.
// Witness: times {t}, sets {A}.
CheckResult check_slice_closure(const SpinozaModel& model);

struct SubstanceResult {
  CheckResult verdict;
  // Present iff the verdict passed.
  std::optional<Subset> substance;
  std::vector<TimedSubset> per_time;      // S_t
  std::vector<TimedSubset> gfp_per_time;  // D_t
};

// Least fixed point on every slice, then S_t != e, S_t constant over t and
// C(e) <= S.
SubstanceResult compute_substance(const SpinozaModel& model);

// Fixed points on the largest slice pairwise disjoint. Witness: {A, B}.
CheckResult check_A3(const SpinozaModel& model);

// Exactly one non-empty fixed point on every listed slice. Witness on
// failure: times {t}, sets = all fixed points of that slice.
CheckResult check_uniqueness(const SpinozaModel& model);

// E_t = N_t u S for every listed t. Witness: times {t}, sets {{x}}.
CheckResult check_partition(const SpinozaModel& model, const Subset& substance);

// No proper non-empty part of `substance` is a fixed point. Witness: {part}.
CheckResult check_indivisibility(const SpinozaModel& model,
                                 const Subset& substance);

// S inside every slice, every element of S born at -inf, C(e) <= S.
CheckResult check_eternity(const SpinozaModel& model, const Subset& substance);

// A <= C(A) implies A = e or A = C(A), for every A in the largest slice.
// Witness: smallest violating A.
CheckResult check_property_P(const SpinozaModel& model);

// If property (P) holds then S = C(e) and |S| = 1. A failing (P) gives a
// vacuous pass carrying a note.
CheckResult check_atom_theorem(const SpinozaModel& model,
                               const Subset& substance,
                               const CheckResult& property_p);

// For each x and each c in C({x}): birth(c) <= birth(x), strictly when x is
// outside S. Witness: sets {{x}, {c}}.
CheckResult check_temporal_consistency(const SpinozaModel& model,
                                       const Subset& substance);

}  // namespace fixlat
