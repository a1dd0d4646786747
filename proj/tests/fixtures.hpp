#pragma once

// Hand-built reference models shared by the unit and acceptance suites.
//
//   m1  universe s a b, births s=-inf a=1 b=2, times 1.5 inf,
//       rules {} -> s, a -> s, b -> s a
//   m2  universe s1 s2 x, births s1=s2=-inf, rule {} -> s1 s2
//   m3  table over {s,x}: {}->{s} {s}->{s} {x}->{s,x} {s,x}->{s,x}
//   m4  identity table over {s,x}
//   m5  table over {s,x}: {}->{s} {s}->{x} {x}->{s} {s,x}->{s}

#include <memory>
#include <string>
#include <vector>

#include "fixlat/causality.hpp"
#include "fixlat/lattice.hpp"
#include "fixlat/substance.hpp"

namespace fixlat::testing {

using Names = std::vector<std::string>;

inline std::shared_ptr<const Universe> make_universe(Names names,
                                                      std::vector<double> births = {}) {
  return std::make_shared<const Universe>(std::move(names), std::move(births));
}

struct RuleSpec {
  Names premise;
  Names conclusion;
};

inline RuleSystem make_rules(const std::shared_ptr<const Universe>& u,
                             const std::vector<RuleSpec>& specs) {
  std::vector<Rule> rules;
  for (const auto& s : specs) rules.push_back({u->of(s.premise), u->of(s.conclusion)});
  return RuleSystem(u, std::move(rules));
}

// entries listed in key order 0 .. 2^n - 1
inline DenseTable make_table(const std::shared_ptr<const Universe>& u,
                             const std::vector<Names>& entries) {
  std::vector<Subset> out;
  for (const auto& e : entries) out.push_back(u->of(e));
  return DenseTable(u, std::move(out));
}

inline SpinozaModel m1() {
  auto u = make_universe({"s", "a", "b"}, {-kInf, 1.0, 2.0});
  return SpinozaModel(
      CausalityMap(make_rules(u, {{{}, {"s"}}, {{"a"}, {"s"}}, {{"b"}, {"s", "a"}}})),
      {1.5, kInf});
}

inline SpinozaModel m2() {
  auto u = make_universe({"s1", "s2", "x"}, {-kInf, -kInf, 0.0});
  return SpinozaModel(CausalityMap(make_rules(u, {{{}, {"s1", "s2"}}})), {kInf});
}

inline std::shared_ptr<const Universe> sx_universe() {
  return make_universe({"s", "x"}, {-kInf, 0.0});
}

inline SpinozaModel m3() {
  auto u = sx_universe();
  return SpinozaModel(
      CausalityMap(make_table(u, {{"s"}, {"s"}, {"s", "x"}, {"s", "x"}})), {kInf});
}

inline SpinozaModel m4() {
  auto u = sx_universe();
  return SpinozaModel(CausalityMap(make_table(u, {{}, {"s"}, {"x"}, {"s", "x"}})),
                      {kInf});
}

inline SpinozaModel m5() {
  auto u = sx_universe();
  return SpinozaModel(CausalityMap(make_table(u, {{"s"}, {"x"}, {"s"}, {"s"}})),
                      {kInf});
}

}  // namespace fixlat::testing
