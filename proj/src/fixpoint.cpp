#include "fixlat/fixpoint.hpp"

#include <deque>
#include <string>

#include "fixlat/errors.hpp"

namespace fixlat {

namespace {

Chain iterate_from(const CausalityMap& c, const Subset& seed,
                   const char* direction) {
  const std::size_t limit = c.universe().size() + 2;
  Chain chain;
  chain.steps.push_back(seed);
  std::uint64_t cur = seed.bits();
  for (std::size_t apps = 1;; ++apps) {
    const std::uint64_t next = c.apply_bits(cur);
    chain.steps.push_back(seed.with_bits(next));
    if (next == cur) break;
    if (apps >= limit) {
      throw CycleError(std::string(direction) +
                       " Kleene iteration did not stabilize after " +
                       std::to_string(apps) +
                       " applications; the map is not monotone");
    }
    cur = next;
  }
  chain.fixed_point = chain.steps.back();
  return chain;
}

}  // namespace

Chain kleene_lfp(const CausalityMap& c) {
  return iterate_from(c, c.universe().empty_set(), "ascending");
}

Chain kleene_gfp(const CausalityMap& c) {
  return iterate_from(c, c.universe().full_set(), "descending");
}

Chain kleene_gfp(const CausalityMap& c, const Subset& top) {
  if (top.universe_id() != c.universe().id() ||
      top.width() != c.universe().size()) {
    throw UsageError("gfp seed is over a different universe");
  }
  return iterate_from(c, top, "descending");
}

Subset worklist_lfp(const RuleSystem& rules, std::span<const std::size_t> order) {
  const auto& rs = rules.rules();
  const std::size_t r = rs.size();
  const std::size_t n = rules.universe().size();

  std::deque<std::size_t> worklist;
  if (order.empty()) {
    for (std::size_t i = 0; i < r; ++i) worklist.push_back(i);
  } else {
    if (order.size() != r) throw UsageError("worklist order is not a permutation");
    std::vector<bool> seen(r, false);
    for (std::size_t i : order) {
      if (i >= r || seen[i]) throw UsageError("worklist order is not a permutation");
      seen[i] = true;
      worklist.push_back(i);
    }
  }

  // watchers[x]: rules whose premise mentions element x.
  std::vector<std::vector<std::size_t>> watchers(n);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t x : rs[i].premise.elements()) watchers[x].push_back(i);
  }

  std::vector<bool> queued(r, true);
  std::uint64_t current = 0;
  while (!worklist.empty()) {
    const std::size_t i = worklist.front();
    worklist.pop_front();
    queued[i] = false;
    const std::uint64_t premise = rs[i].premise.bits();
    const std::uint64_t added = rs[i].conclusion.bits() & ~current;
    if ((premise & ~current) != 0 || added == 0) continue;
    current |= added;
    for (std::size_t x = 0; x < n; ++x) {
      if (((added >> x) & 1u) == 0) continue;
      for (std::size_t w : watchers[x]) {
        if (!queued[w]) {
          queued[w] = true;
          worklist.push_back(w);
        }
      }
    }
  }
  return rules.universe().from_bits(current);
}

std::vector<Subset> enumerate_fixed_points(const CausalityMap& c) {
  return enumerate_fixed_points(c, c.universe().full_set());
}

std::vector<Subset> enumerate_fixed_points(const CausalityMap& c,
                                           const Subset& top) {
  const Universe& u = c.universe();
  u.require_sweepable();
  if (top.universe_id() != u.id() || top.width() != u.size()) {
    throw UsageError("sweep bound is over a different universe");
  }
  std::vector<Subset> out;
  for_each_subset(top.bits(), [&](std::uint64_t a) {
    if (c.apply_bits(a) == a) out.push_back(u.from_bits(a));
  });
  return out;
}

PrePostSets pre_post_sets(const CausalityMap& c) {
  const Universe& u = c.universe();
  u.require_sweepable();
  PrePostSets sets;
  for_each_subset(u.full_mask(), [&](std::uint64_t a) {
    const std::uint64_t ca = c.apply_bits(a);
    if ((ca & ~a) == 0) sets.pre_fixpoints.push_back(u.from_bits(a));
    if ((a & ~ca) == 0) sets.post_fixpoints.push_back(u.from_bits(a));
  });
  return sets;
}

CheckResult tarski_oracle(const CausalityMap& c) {
  const Universe& u = c.universe();
  const PrePostSets sets = pre_post_sets(c);
  const Subset omega = big_meet(sets.pre_fixpoints, u);
  const Subset theta = big_join(sets.post_fixpoints, u);

  Subset lfp;
  Subset gfp;
  try {
    lfp = kleene_lfp(c).fixed_point;
    gfp = kleene_gfp(c).fixed_point;
  } catch (const CycleError&) {
    return CheckResult::fail({"Kleene iteration did not stabilize", {}, {}});
  }

  if (omega != lfp) {
    return CheckResult::fail({"inf(I) != lfp", {omega, lfp}, {}});
  }
  if (theta != gfp) {
    return CheckResult::fail({"sup(J) != gfp", {theta, gfp}, {}});
  }
  for (const auto& lambda : enumerate_fixed_points(c)) {
    if (!subset_leq(lfp, lambda) || !subset_leq(lambda, gfp)) {
      return CheckResult::fail(
          {"fixed point outside [lfp, gfp]", {lambda, lfp, gfp}, {}});
    }
  }
  return CheckResult::pass();
}

FixpointReport solve(const CausalityMap& c, bool enumerate) {
  Chain up = kleene_lfp(c);
  Chain down = kleene_gfp(c);
  FixpointReport report;
  report.lfp = up.fixed_point;
  report.gfp = down.fixed_point;
  report.lfp_applications = up.applications();
  report.gfp_applications = down.applications();
  report.ascending_chain = std::move(up.steps);
  report.descending_chain = std::move(down.steps);
  if (enumerate) report.all_fixed_points = enumerate_fixed_points(c);
  return report;
}

}  // namespace fixlat
