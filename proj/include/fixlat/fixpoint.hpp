#pragma once

// Least and greatest fixed points of a causality map.
//
// Kleene iteration from the bottom (resp. top) of the lattice is exact on a
// finite lattice when the map is monotone. The sweep-based routines below
// (enumeration, pre/post-fixpoint sets) are brute-force cross-checks and
// require the universe to be within its sweep guard.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "fixlat/causality.hpp"
#include "fixlat/lattice.hpp"

namespace fixlat {

// Iterates of a Kleene solve. `steps` starts at the seed and ends with the
// fixed point repeated once, so steps.size() - 1 map applications were made.
struct Chain {
  Subset fixed_point;
  std::vector<Subset> steps;

  std::size_t applications() const noexcept {
    return steps.empty() ? 0 : steps.size() - 1;
  }
};

// Ascending iteration from the empty set. Throws CycleError when no fixed
// point is reached within n + 2 applications (impossible for monotone maps).
Chain kleene_lfp(const CausalityMap& c);

// Descending iteration from `top` (the full set by default).
Chain kleene_gfp(const CausalityMap& c);
Chain kleene_gfp(const CausalityMap& c, const Subset& top);

// Forward chaining over the rules. `order` is the initial worklist order as a
// permutation of rule indices; empty means 0, 1, ..., r-1.
Subset worklist_lfp(const RuleSystem& rules,
                    std::span<const std::size_t> order = {});

// Every A <= top with C(A) = A, ascending by bit value.
std::vector<Subset> enumerate_fixed_points(const CausalityMap& c);
std::vector<Subset> enumerate_fixed_points(const CausalityMap& c,
                                           const Subset& top);

struct PrePostSets {
  std::vector<Subset> pre_fixpoints;   // C(A) <= A
  std::vector<Subset> post_fixpoints;  // A <= C(A)
};

PrePostSets pre_post_sets(const CausalityMap& c);

// Rebuilds lfp as inf of the pre-fixpoints and gfp as sup of the
// post-fixpoints, and checks both against Kleene iteration plus the bracket
// lfp <= lambda <= gfp for every enumerated fixed point lambda.
CheckResult tarski_oracle(const CausalityMap& c);

struct FixpointReport {
  Subset lfp;
  Subset gfp;
  std::vector<Subset> ascending_chain;
  std::vector<Subset> descending_chain;
  std::optional<std::vector<Subset>> all_fixed_points;
  std::size_t lfp_applications = 0;
  std::size_t gfp_applications = 0;

  std::size_t applications() const noexcept {
    return lfp_applications + gfp_applications;
  }
};

// Both Kleene solves; enumerates all fixed points when `enumerate` is set.
FixpointReport solve(const CausalityMap& c, bool enumerate = true);

}  // namespace fixlat
