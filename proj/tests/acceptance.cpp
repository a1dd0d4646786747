// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <cstdio>
#include <fstream>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "fixlat/causality.hpp"
#include "fixlat/fixpoint.hpp"
#include "fixlat/model_file.hpp"
#include "fixlat/modelgen.hpp"
#include "fixlat/report.hpp"
#include "fixlat/substance.hpp"
#include "oracles.hpp"

using namespace fixlat;

namespace {

// Pinned limits.
constexpr double kGoldenSeconds = 0.1;
constexpr double kBracketSeconds = 10.0;
constexpr double kCoverSeconds = 5.0;
constexpr std::size_t kCorpusSize = 600;
constexpr std::size_t kCorpusMaxN = 8;
constexpr std::size_t kCorpusTimes = 3;  // finite instants, +inf is added
constexpr std::size_t kTableCount = 200;
constexpr std::size_t kTableMaxN = 5;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return {};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

SpinozaModel load(const std::string& name) {
  return parse_model(slurp(std::string(FIXLAT_TEST_DATA) + "/" + name));
}

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (cond) return;
    if (ok) detail = what;
    ok = false;
  }
};

int failures = 0;

void report(int id, const std::string& title, const Outcome& o) {
  std::printf("criterion %2d: %s  %s", id, o.ok ? "PASS" : "FAIL", title.c_str());
  if (!o.detail.empty()) std::printf("  [%s]", o.detail.c_str());
  std::printf("\n");
  std::fflush(stdout);
  if (!o.ok) ++failures;
}

Outcome guarded(const std::function<Outcome()>& body) {
  try {
    return body();
  } catch (const std::exception& e) {
    return Outcome{false, std::string("exception: ") + e.what()};
  }
}

std::vector<SpinozaModel> build_corpus() {
  std::vector<SpinozaModel> out;
  for (std::uint64_t seed = 1; seed <= kCorpusSize; ++seed) {
    GenConfig cfg;
    cfg.seed = seed;
    cfg.n = 2 + seed % (kCorpusMaxN - 1);
    cfg.rule_count = 1 + seed % 10;
    cfg.time_count = kCorpusTimes;
    cfg.force_A1 = seed % 6 != 0;
    out.push_back(random_model(cfg));
  }
  return out;
}

std::vector<std::size_t> shuffled(std::size_t count, std::uint64_t seed) {
  std::vector<std::size_t> order(count);
  std::iota(order.begin(), order.end(), 0);
  Rng rng(seed);
  for (std::size_t i = count; i > 1; --i) {
    std::swap(order[i - 1], order[rng.below(i)]);
  }
  return order;
}

Outcome golden_m1() {
  Outcome o;
  const auto start = Clock::now();
  const SpinozaModel m = load("m1.model");
  const Report r = run_report(m);
  const std::string json = report_json(r);
  const double elapsed = seconds_since(start);

  const Universe& u = m.universe();
  o.require(r.all_passed(), "not every check passed");
  o.require(r.unique_substance() == u.of({"s"}), "substance != {s}");
  o.require(r.property_p.passed(), "(P) failed");
  o.require(r.atom.passed() && r.atom.result->note.empty(), "atom theorem not confirmed");
  o.require(first_cause(m.map()) == u.of({"s"}), "C(e) != {s}");
  o.require(json == slurp(std::string(FIXLAT_GOLDEN) + "/m1.json"), "JSON differs from golden");
  o.require(elapsed < kGoldenSeconds, "runtime " + std::to_string(elapsed) + " s");
  o.detail = o.ok ? "runtime " + std::to_string(elapsed) + " s" : o.detail;
  return o;
}

Outcome bracket(const std::vector<SpinozaModel>& corpus) {
  Outcome o;
  const auto start = Clock::now();
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const CausalityMap& c = corpus[i].map();
    const Subset lfp = kleene_lfp(c).fixed_point;
    const Subset gfp = kleene_gfp(c).fixed_point;
    const auto all = enumerate_fixed_points(c);
    const std::string at = "model " + std::to_string(i);
    o.require(!all.empty(), at + ": no fixed point");
    if (all.empty()) continue;
    o.require(lfp == big_meet(all, corpus[i].universe()) &&
                  std::find(all.begin(), all.end(), lfp) != all.end(),
              at + ": lfp is not the minimum");
    o.require(gfp == big_join(all, corpus[i].universe()) &&
                  std::find(all.begin(), all.end(), gfp) != all.end(),
              at + ": gfp is not the maximum");
    for (const auto& fp : all) {
      o.require(subset_leq(lfp, fp) && subset_leq(fp, gfp), at + ": fixed point outside bracket");
    }
  }
  const double elapsed = seconds_since(start);
  o.require(elapsed < kBracketSeconds, "runtime " + std::to_string(elapsed) + " s");
  if (o.ok) {
    o.detail = std::to_string(corpus.size()) + " models, runtime " + std::to_string(elapsed) + " s";
  }
  return o;
}

Outcome proof_sets(const std::vector<SpinozaModel>& corpus) {
  Outcome o;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const CausalityMap& c = corpus[i].map();
    const Universe& u = corpus[i].universe();
    const PrePostSets pp = pre_post_sets(c);
    const std::string at = "model " + std::to_string(i);
    o.require(big_meet(pp.pre_fixpoints, u) == kleene_lfp(c).fixed_point, at + ": inf(I) != lfp");
    o.require(big_join(pp.post_fixpoints, u) == kleene_gfp(c).fixed_point, at + ": sup(J) != gfp");
    o.require(tarski_oracle(c).passed, at + ": tarski_oracle failed");
  }
  if (o.ok) o.detail = std::to_string(corpus.size()) + " models";
  return o;
}

Outcome first_cause_everywhere(const std::vector<SpinozaModel>& corpus) {
  Outcome o;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const CausalityMap& c = corpus[i].map();
    const std::string at = "model " + std::to_string(i);
    o.require(check_A2(c).passed, at + ": not monotone");
    o.require(check_prop_2_2(c).passed, at + ": C(e) not <= C(A)");
  }
  if (o.ok) o.detail = std::to_string(corpus.size()) + " models";
  return o;
}

Outcome a3_uniqueness(const std::vector<SpinozaModel>& corpus) {
  Outcome o;
  std::size_t qualifying = 0;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const SpinozaModel& m = corpus[i];
    if (!check_A1(m.map()).passed || !check_A3(m).passed) continue;
    ++qualifying;
    const auto law = oracle::law_of(m.map());
    std::size_t non_empty = 0;
    for (const auto& fp : oracle::fixed_points(law, static_cast<int>(m.universe().size()))) {
      non_empty += fp.empty() ? 0 : 1;
    }
    o.require(non_empty == 1, "model " + std::to_string(i) + ": " + std::to_string(non_empty) +
                                  " non-empty fixed points");
    o.require(check_uniqueness(m).passed, "model " + std::to_string(i) + ": uniqueness failed");
  }
  o.require(qualifying > 0, "no qualifying models");
  if (o.ok) o.detail = std::to_string(qualifying) + " qualifying models";
  return o;
}

Outcome p_implies_atom(const std::vector<SpinozaModel>& corpus) {
  Outcome o;
  std::size_t qualifying = 0;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const SpinozaModel& m = corpus[i];
    const CausalityMap& c = m.map();
    if (!check_A1(c).passed || !check_A2(c).passed) continue;
    const CheckResult p = check_property_P(m);
    if (!p.passed) continue;
    ++qualifying;
    const Subset s = kleene_lfp(c).fixed_point;
    const std::string at = "model " + std::to_string(i);
    o.require(s.count() == 1, at + ": |S| = " + std::to_string(s.count()));
    o.require(s == first_cause(c), at + ": S != C(e)");
    o.require(check_atom_theorem(m, s, p).passed, at + ": atom check failed");
  }
  o.require(qualifying > 0, "no qualifying models");
  if (o.ok) o.detail = std::to_string(qualifying) + " qualifying models";
  return o;
}

Outcome chain_bound(const std::vector<SpinozaModel>& corpus) {
  Outcome o;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const CausalityMap& c = corpus[i].map();
    const std::size_t n = corpus[i].universe().size();
    const std::string at = "model " + std::to_string(i);
    const Chain up = kleene_lfp(c);
    const Chain down = kleene_gfp(c);
    o.require(up.applications() <= n + 1, at + ": lfp used " + std::to_string(up.applications()));
    o.require(down.applications() <= n + 1,
              at + ": gfp used " + std::to_string(down.applications()));

    const RuleSystem& rs = *c.rule_system();
    const std::size_t k = rs.rules().size();
    std::vector<std::size_t> forward(k);
    std::iota(forward.begin(), forward.end(), 0);
    const std::vector<std::size_t> backward(forward.rbegin(), forward.rend());
    const std::vector<std::size_t> random = shuffled(k, i + 1);
    for (const std::vector<std::size_t>* order : {&std::as_const(forward), &backward, &random}) {
      o.require(worklist_lfp(rs, *order) == up.fixed_point, at + ": worklist disagrees");
    }
  }
  if (o.ok) o.detail = std::to_string(corpus.size()) + " models, 3 orderings";
  return o;
}

Outcome time_independence(const std::vector<SpinozaModel>& corpus) {
  Outcome o;
  std::size_t qualifying = 0;
  std::size_t with_finite_births = 0;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const SpinozaModel& m = corpus[i];
    if (m.times().size() < 3 || !check_slice_closure(m).passed) continue;
    ++qualifying;
    bool finite = false;
    for (double b : m.universe().births()) finite = finite || b != -kInf;
    with_finite_births += finite ? 1 : 0;
    const SubstanceResult r = compute_substance(m);
    const std::string at = "model " + std::to_string(i);
    o.require(r.per_time.size() == m.times().size(), at + ": slice computation incomplete");
    for (const auto& ts : r.per_time) {
      o.require(ts.set == r.per_time.front().set, at + ": S_t varies");
    }
  }
  o.require(qualifying > 0, "no qualifying models");
  if (o.ok) {
    o.detail = std::to_string(qualifying) + " qualifying models, " +
               std::to_string(with_finite_births) + " with finite births";
  }
  return o;
}

Outcome negative_fixtures() {
  Outcome o;
  const SpinozaModel m2 = load("m2.model");
  const SpinozaModel m3 = load("m3.model");
  const SpinozaModel m4 = load("m4.model");
  const SpinozaModel m5 = load("m5.model");

  const std::string a3 = check_json(m3.universe(), check_A3(m3));
  o.require(a3 == R"j({"status":"failed","witness":{"tag":"distinct substances share elements","sets":[["s"],["s","x"]]}})j",
            "M3 A3 " + a3);

  const std::string a1 = check_json(m4.universe(), check_A1(m4.map()));
  o.require(a1 == R"j({"status":"failed","witness":{"tag":"C(A) is empty","sets":[[]]}})j",
            "M4 A1 " + a1);

  const std::string a2 = check_json(m5.universe(), check_A2(m5.map()));
  o.require(a2 == R"j({"status":"failed","witness":{"tag":"A <= B but C(A) not <= C(B)","sets":[["s"],["s","x"]]}})j",
            "M5 A2 " + a2);

  const std::string p = check_json(m2.universe(), check_property_P(m2));
  o.require(p == R"j({"status":"failed","witness":{"tag":"A <= C(A) with A != e and A != C(A)","sets":[["s1"]]}})j",
            "M2 (P) " + p);
  const Subset s = kleene_lfp(m2.map()).fixed_point;
  o.require(s.count() == 2, "M2 |S| != 2");
  o.require(check_indivisibility(m2, s).passed, "M2 indivisibility failed");
  return o;
}

Outcome cover_soundness() {
  Outcome o;
  const auto start = Clock::now();
  std::size_t monotone = 0;
  for (std::uint64_t seed = 0; seed < kTableCount; ++seed) {
    const std::size_t n = 2 + seed % (kTableMaxN - 1);
    GenConfig cfg;
    cfg.seed = seed + 1;
    cfg.n = n;
    cfg.rule_count = 1 + seed % 6;
    const SpinozaModel base = random_model(cfg);
    const DenseTable dense = densify(*base.map().rule_system());
    const CausalityMap c = seed % 3 == 0   ? CausalityMap(dense)
                           : seed % 3 == 1 ? CausalityMap(mutate_table(dense, seed))
                                           : CausalityMap(random_table(base.universe_ptr(), seed));
    const bool cover = check_A2(c).passed;
    const bool all_pairs =
        !oracle::first_non_monotone_pair(oracle::law_of(c), static_cast<int>(n)).has_value();
    monotone += all_pairs ? 1 : 0;
    o.require(cover == all_pairs, "table " + std::to_string(seed) + ": verdicts differ");
  }
  const double elapsed = seconds_since(start);
  o.require(elapsed < kCoverSeconds, "runtime " + std::to_string(elapsed) + " s");
  if (o.ok) {
    o.detail = std::to_string(kTableCount) + " tables, " + std::to_string(monotone) +
               " monotone, runtime " + std::to_string(elapsed) + " s";
  }
  return o;
}

}  // namespace

int main() {
  if (const char* w = std::getenv("FIXLAT_WORKERS")) set_sweep_workers(std::stoul(w));

  report(1, "golden model M1", guarded(golden_m1));

  std::vector<SpinozaModel> corpus;
  try {
    corpus = build_corpus();
  } catch (const std::exception& e) {
    std::printf("corpus generation failed: %s\n", e.what());
    return 1;
  }

  report(2, "Knaster-Tarski bracket", guarded([&] { return bracket(corpus); }));
  report(3, "proof-set oracle", guarded([&] { return proof_sets(corpus); }));
  report(4, "first cause inside every cause", guarded([&] { return first_cause_everywhere(corpus); }));
  report(5, "A3 implies uniqueness", guarded([&] { return a3_uniqueness(corpus); }));
  report(6, "(P) implies atom", guarded([&] { return p_implies_atom(corpus); }));
  report(7, "chain bound and worklist agreement", guarded([&] { return chain_bound(corpus); }));
  report(8, "time independence", guarded([&] { return time_independence(corpus); }));
  report(9, "negative fixtures", guarded(negative_fixtures));
  report(10, "cover-check soundness", guarded(cover_soundness));

  std::printf("%d of 10 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
