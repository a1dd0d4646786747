#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "fixlat/errors.hpp"
#include "fixlat/fixpoint.hpp"
#include "fixlat/modelgen.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace fixlat;
using namespace fixlat::testing;

namespace {

std::vector<Subset> sets(const Universe& u, const std::vector<Names>& names) {
  std::vector<Subset> out;
  for (const auto& n : names) out.push_back(u.of(n));
  return out;
}

}  // namespace

TEST_CASE("kleene_lfp examples") {
  const SpinozaModel a = m1();
  const Chain c1 = kleene_lfp(a.map());
  CHECK(c1.fixed_point == a.universe().of({"s"}));
  CHECK(c1.steps == sets(a.universe(), {{}, {"s"}, {"s"}}));
  CHECK(c1.applications() == 2);

  const SpinozaModel b = m2();
  const Chain c2 = kleene_lfp(b.map());
  CHECK(c2.steps == sets(b.universe(), {{}, {"s1", "s2"}, {"s1", "s2"}}));

  CHECK(kleene_lfp(m3().map()).fixed_point == m3().universe().of({"s"}));
}

TEST_CASE("kleene_gfp examples") {
  const SpinozaModel a = m1();
  const Chain c1 = kleene_gfp(a.map());
  CHECK(c1.steps == sets(a.universe(), {{"s", "a", "b"}, {"s", "a"}, {"s"}, {"s"}}));
  CHECK(c1.fixed_point == a.universe().of({"s"}));

  CHECK(kleene_gfp(m3().map()).fixed_point == m3().universe().of({"s", "x"}));
  CHECK(kleene_gfp(m2().map()).fixed_point == m2().universe().of({"s1", "s2"}));
}

TEST_CASE("non-monotone iteration hits the cycle guard") {
  CHECK_THROWS_AS(kleene_lfp(m5().map()), CycleError);
}

TEST_CASE("worklist_lfp examples") {
  CHECK(worklist_lfp(*m1().map().rule_system()) == m1().universe().of({"s"}));
  CHECK(worklist_lfp(*m2().map().rule_system()) == m2().universe().of({"s1", "s2"}));

  auto u = make_universe({"a", "b", "c"});
  const RuleSystem chain = make_rules(u, {{{}, {"a"}}, {{"a"}, {"b"}}, {{"b"}, {"c"}}});
  CHECK(worklist_lfp(chain) == u->full_set());
  const std::vector<std::size_t> reversed{2, 1, 0};
  CHECK(worklist_lfp(chain, reversed) == u->full_set());
  const std::vector<std::size_t> bad{0, 0, 1};
  CHECK_THROWS_AS(worklist_lfp(chain, bad), UsageError);
}

TEST_CASE("enumerate_fixed_points examples") {
  CHECK(enumerate_fixed_points(m1().map()) == sets(m1().universe(), {{"s"}}));
  CHECK(enumerate_fixed_points(m3().map()) == sets(m3().universe(), {{"s"}, {"s", "x"}}));
  CHECK(enumerate_fixed_points(m4().map()) ==
        sets(m4().universe(), {{}, {"s"}, {"x"}, {"s", "x"}}));
}

TEST_CASE("tarski_oracle examples") {
  const SpinozaModel a = m1();
  CHECK(tarski_oracle(a.map()).passed);
  // Pre-fixpoints of m1 from the brute-force oracle: {s}, {s,a}, {s,a,b}.
  // {s,b} is not one since C({s,b}) = {s,a}.
  const PrePostSets pp = pre_post_sets(a.map());
  CHECK(pp.pre_fixpoints == sets(a.universe(), {{"s"}, {"s", "a"}, {"s", "a", "b"}}));
  CHECK(big_meet(pp.pre_fixpoints, a.universe()) == a.universe().of({"s"}));
  std::vector<Subset> oracle_pre;
  for (const auto& s : oracle::pre_fixpoints(oracle::law_of(a.map()), 3)) {
    oracle_pre.push_back(oracle::to_subset(a.universe(), s));
  }
  CHECK(pp.pre_fixpoints == oracle_pre);

  CHECK(tarski_oracle(m3().map()).passed);

  const SpinozaModel b = m2();
  CHECK(tarski_oracle(b.map()).passed);
  const PrePostSets pb = pre_post_sets(b.map());
  CHECK(pb.post_fixpoints == sets(b.universe(), {{}, {"s1"}, {"s2"}, {"s1", "s2"}}));
  CHECK(big_join(pb.post_fixpoints, b.universe()) == b.universe().of({"s1", "s2"}));
}

TEST_CASE("tarski_oracle reports non-monotone maps") {
  const auto r = tarski_oracle(m5().map());
  CHECK_FALSE(r.passed);
}

TEST_CASE("solve fills the report") {
  const FixpointReport r = solve(m1().map());
  CHECK(r.lfp == m1().universe().of({"s"}));
  CHECK(r.gfp == m1().universe().of({"s"}));
  CHECK(r.lfp_applications == 2);
  CHECK(r.gfp_applications == 3);
  REQUIRE(r.all_fixed_points.has_value());
  CHECK(r.all_fixed_points->size() == 1);
  CHECK_FALSE(solve(m1().map(), false).all_fixed_points.has_value());
}

TEST_CASE("solvers agree with the brute-force oracle on seeded models") {
  for (std::uint64_t seed = 1; seed <= 300; ++seed) {
    GenConfig cfg;
    cfg.seed = seed;
    cfg.n = 2 + seed % 7;
    cfg.rule_count = 1 + seed % 10;
    cfg.force_A1 = seed % 5 != 0;
    const SpinozaModel m = random_model(cfg);
    const CausalityMap& c = m.map();
    const Universe& u = m.universe();
    const int n = static_cast<int>(u.size());
    const auto law = oracle::law_of(c);

    const auto fixed = oracle::fixed_points(law, n);
    const auto lo = oracle::least(fixed);
    const auto hi = oracle::greatest(fixed);
    REQUIRE(lo.has_value());
    REQUIRE(hi.has_value());

    const Chain up = kleene_lfp(c);
    const Chain down = kleene_gfp(c);
    CHECK(oracle::to_set(up.fixed_point) == *lo);
    CHECK(oracle::to_set(down.fixed_point) == *hi);
    CHECK(oracle::inf(oracle::pre_fixpoints(law, n), n) == *lo);
    CHECK(oracle::sup(oracle::post_fixpoints(law, n)) == *hi);
    CHECK(tarski_oracle(c).passed);

    const auto all = enumerate_fixed_points(c);
    REQUIRE(all.size() == fixed.size());
    for (std::size_t i = 0; i < all.size(); ++i) {
      CHECK(oracle::to_set(all[i]) == fixed[i]);
      CHECK(subset_leq(up.fixed_point, all[i]));
      CHECK(subset_leq(all[i], down.fixed_point));
    }

    // chain shape and bound
    CHECK(up.applications() <= u.size() + 1);
    CHECK(down.applications() <= u.size() + 1);
    CHECK(up.steps.front().empty());
    CHECK(down.steps.front() == u.full_set());
    for (std::size_t i = 0; i + 2 < up.steps.size(); ++i) {
      CHECK(subset_leq(up.steps[i], up.steps[i + 1]));
      CHECK(up.steps[i] != up.steps[i + 1]);
    }
    for (std::size_t i = 0; i + 2 < down.steps.size(); ++i) {
      CHECK(subset_leq(down.steps[i + 1], down.steps[i]));
      CHECK(down.steps[i] != down.steps[i + 1]);
    }
  }
}

TEST_CASE("worklist order does not change the result") {
  std::mt19937_64 shuffle_rng(4242);
  for (std::uint64_t seed = 1; seed <= 300; ++seed) {
    GenConfig cfg;
    cfg.seed = seed;
    cfg.n = 2 + seed % 11;
    cfg.rule_count = 1 + seed % 14;
    cfg.force_A1 = seed % 4 != 0;
    const SpinozaModel m = random_model(cfg);
    const RuleSystem& rs = *m.map().rule_system();
    const Subset expected = kleene_lfp(m.map()).fixed_point;

    std::vector<std::size_t> order(rs.rules().size());
    std::iota(order.begin(), order.end(), 0);
    CHECK(worklist_lfp(rs, order) == expected);
    std::reverse(order.begin(), order.end());
    CHECK(worklist_lfp(rs, order) == expected);
    std::shuffle(order.begin(), order.end(), shuffle_rng);
    CHECK(worklist_lfp(rs, order) == expected);
  }
}

TEST_CASE("kleene handles universes beyond the sweep guard") {
  std::vector<std::string> names;
  for (int i = 0; i < 40; ++i) names.push_back("v" + std::to_string(i));
  auto u = std::make_shared<const Universe>(names);
  std::vector<Rule> rules{{u->empty_set(), u->singleton(0)}};
  for (std::size_t i = 0; i + 1 < 40; ++i) rules.push_back({u->singleton(i), u->singleton(i + 1)});
  const RuleSystem rs(u, rules);
  const Chain up = kleene_lfp(CausalityMap(rs));
  CHECK(up.fixed_point == u->full_set());
  CHECK(up.applications() == 41);
  CHECK(worklist_lfp(rs) == u->full_set());
  CHECK_THROWS_AS(enumerate_fixed_points(CausalityMap(rs)), SizeGuardError);
}
