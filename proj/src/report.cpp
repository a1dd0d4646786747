#include "fixlat/report.hpp"

#include <json.hpp>

#include <cmath>
#include <cstring>
#include <sstream>

#include "fixlat/errors.hpp"
#include "fixlat/model_file.hpp"

namespace fixlat {

namespace {

using Json = nlohmann::ordered_json;

Json time_json(double t) {
  if (std::isinf(t)) return format_number(t);
  return t;
}

Json set_json(const Universe& u, const Subset& s) { return u.names_of(s); }

Json sets_json(const Universe& u, const std::vector<Subset>& sets) {
  Json arr = Json::array();
  for (const auto& s : sets) arr.push_back(set_json(u, s));
  return arr;
}

Json result_json(const Universe& u, const CheckResult& r) {
  Json j;
  j["status"] = r.passed ? "passed" : "failed";
  if (!r.note.empty()) j["note"] = r.note;
  if (r.witness) {
    Json w;
    w["tag"] = r.witness->tag;
    if (!r.witness->times.empty()) {
      Json ts = Json::array();
      for (double t : r.witness->times) ts.push_back(time_json(t));
      w["times"] = ts;
    }
    w["sets"] = sets_json(u, r.witness->sets);
    j["witness"] = w;
  }
  return j;
}

Json verdict_json(const Universe& u, const Verdict& v) {
  if (v.result) return result_json(u, *v.result);
  Json j;
  j["status"] = "skipped";
  j["reason"] = v.reason;
  return j;
}

std::string status_name(Verdict::Status s) {
  switch (s) {
    case Verdict::Status::passed: return "passed";
    case Verdict::Status::failed: return "failed";
    case Verdict::Status::skipped: return "skipped";
  }
  return "?";
}

// "A1 failed, A2 failed" for the named verdicts that did not pass.
std::string failed_preconditions(
    std::initializer_list<std::pair<const char*, const Verdict*>> pre) {
  std::string out;
  for (const auto& [name, v] : pre) {
    if (v->passed()) continue;
    if (!out.empty()) out += ", ";
    out += name;
    out += v->failed() ? " failed" : " skipped";
  }
  return out;
}

}  // namespace

bool Report::all_passed() const {
  for (const Verdict* v : {&a1, &a2, &a3, &slice_closure, &p2_1, &p2_2,
                           &fixpoint, &uniqueness, &substance, &partition,
                           &indivisibility, &eternity, &temporal, &property_p,
                           &atom}) {
    if (!v->passed()) return false;
  }
  return true;
}

std::optional<Subset> Report::unique_substance() const {
  if (substance.passed() && uniqueness.passed()) return substance_set;
  return std::nullopt;
}

Report run_report(const SpinozaModel& model) {
  const CausalityMap& c = model.map();
  Report r;
  r.universe = model.universe_ptr();
  r.times = model.times();

  r.a1 = Verdict::of(check_A1(c));
  r.a2 = Verdict::of(check_A2(c));
  r.slice_closure = Verdict::of(check_slice_closure(model));
  r.p2_1 = Verdict::of(check_prop_2_1(c));
  r.p2_2 = Verdict::of(check_prop_2_2(c));

  if (r.a2.passed()) {
    r.fixpoints = solve(c, true);
    r.fixpoint = Verdict::of(tarski_oracle(c));
  } else {
    r.fixpoint = Verdict::skip("A2 failed");
  }

  r.a3 = Verdict::of(check_A3(model));
  if (r.a3.passed()) {
    r.uniqueness = Verdict::of(check_uniqueness(model));
  } else {
    r.uniqueness = Verdict::skip("A3 failed");
  }

  const std::string substance_pre = failed_preconditions(
      {{"A1", &r.a1}, {"A2", &r.a2}, {"slice_closure", &r.slice_closure}});
  if (substance_pre.empty()) {
    SubstanceResult s = compute_substance(model);
    r.substance = Verdict::of(s.verdict);
    r.substance_set = s.substance;
    r.substance_per_time = std::move(s.per_time);
    if (!s.gfp_per_time.empty()) r.gfp = s.gfp_per_time.back().set;
  } else {
    r.substance = Verdict::skip(substance_pre);
  }

  if (r.substance.passed()) {
    const Subset& s = *r.substance_set;
    r.partition = Verdict::of(check_partition(model, s));
    r.indivisibility = Verdict::of(check_indivisibility(model, s));
    r.eternity = Verdict::of(check_eternity(model, s));
    r.temporal = Verdict::of(check_temporal_consistency(model, s));
  } else {
    const std::string why = failed_preconditions({{"substance", &r.substance}});
    r.partition = Verdict::skip(why);
    r.indivisibility = Verdict::skip(why);
    r.eternity = Verdict::skip(why);
    r.temporal = Verdict::skip(why);
  }

  const CheckResult p = check_property_P(model);
  r.property_p = Verdict::of(p);

  const std::string atom_pre = failed_preconditions(
      {{"A1", &r.a1}, {"A2", &r.a2}, {"A3", &r.a3}, {"substance", &r.substance}});
  if (atom_pre.empty()) {
    r.atom = Verdict::of(check_atom_theorem(model, *r.substance_set, p));
  } else {
    r.atom = Verdict::skip(atom_pre);
  }
  return r;
}

std::string check_json(const Universe& universe, const CheckResult& result) {
  return result_json(universe, result).dump();
}

std::string report_json(const Report& r) {
  const Universe& u = *r.universe;
  Json doc;

  Json model;
  model["n"] = u.size();
  model["universe"] = u.names();
  Json times = Json::array();
  for (double t : r.times) times.push_back(time_json(t));
  model["times"] = times;
  doc["model"] = model;

  Json axioms;
  axioms["A1"] = verdict_json(u, r.a1);
  axioms["A2"] = verdict_json(u, r.a2);
  axioms["A3"] = verdict_json(u, r.a3);
  doc["axioms"] = axioms;

  Json props;
  props["P2_1"] = verdict_json(u, r.p2_1);
  props["P2_2"] = verdict_json(u, r.p2_2);
  props["slice_closure"] = verdict_json(u, r.slice_closure);

  Json substance = verdict_json(u, r.substance);
  substance["S"] = r.substance_set ? set_json(u, *r.substance_set) : Json(nullptr);
  Json per_time = Json::array();
  for (const auto& [t, s] : r.substance_per_time) {
    Json entry;
    entry["t"] = time_json(t);
    entry["S"] = set_json(u, s);
    per_time.push_back(entry);
  }
  substance["per_time"] = per_time;
  substance["gfp"] = r.gfp ? set_json(u, *r.gfp) : Json(nullptr);
  props["substance"] = substance;

  props["uniqueness"] = verdict_json(u, r.uniqueness);
  props["partition"] = verdict_json(u, r.partition);
  props["indivisibility"] = verdict_json(u, r.indivisibility);
  props["eternity"] = verdict_json(u, r.eternity);
  props["temporal"] = verdict_json(u, r.temporal);
  props["property_P"] = verdict_json(u, r.property_p);
  props["atom"] = verdict_json(u, r.atom);
  doc["propositions"] = props;

  Json fix = verdict_json(u, r.fixpoint);
  if (r.fixpoints) {
    const FixpointReport& f = *r.fixpoints;
    fix["lfp"] = set_json(u, f.lfp);
    fix["gfp"] = set_json(u, f.gfp);
    fix["ascending_chain"] = sets_json(u, f.ascending_chain);
    fix["descending_chain"] = sets_json(u, f.descending_chain);
    fix["all_fixed_points"] =
        f.all_fixed_points ? sets_json(u, *f.all_fixed_points) : Json(nullptr);
    Json apps;
    apps["lfp"] = f.lfp_applications;
    apps["gfp"] = f.gfp_applications;
    fix["applications"] = apps;
  }
  doc["fixpoint"] = fix;

  return doc.dump(2) + "\n";
}

std::string report_text(const Report& r) {
  const Universe& u = *r.universe;
  std::ostringstream out;
  out << "model: " << u.size() << " elements (";
  for (std::size_t i = 0; i < u.size(); ++i) out << (i ? " " : "") << u.name(i);
  out << "), times";
  for (double t : r.times) out << ' ' << format_number(t);
  out << '\n';

  auto line = [&](const char* name, const Verdict& v, const std::string& extra) {
    out << name << std::string(16 - std::min<std::size_t>(15, std::strlen(name)), ' ')
        << status_name(v.status);
    if (v.status == Verdict::Status::skipped) {
      out << "  (" << v.reason << ")";
    } else if (v.result && v.result->witness) {
      const Witness& w = *v.result->witness;
      out << "  " << w.tag;
      for (double t : w.times) out << " @t=" << format_number(t);
      for (const auto& s : w.sets) out << ' ' << u.format(s);
    } else if (v.result && !v.result->note.empty()) {
      out << "  (" << v.result->note << ")";
    }
    if (!extra.empty()) out << "  " << extra;
    out << '\n';
  };

  line("A1", r.a1, "");
  line("A2", r.a2, "");
  line("slice_closure", r.slice_closure, "");
  line("P2_1", r.p2_1, "");
  line("P2_2", r.p2_2, "");
  std::string fix_extra;
  if (r.fixpoints) {
    fix_extra = "lfp = " + u.format(r.fixpoints->lfp) +
                ", gfp = " + u.format(r.fixpoints->gfp);
    if (r.fixpoints->all_fixed_points) {
      fix_extra += ", " + std::to_string(r.fixpoints->all_fixed_points->size()) +
                   " fixed point(s)";
    }
  }
  line("fixpoint", r.fixpoint, fix_extra);
  line("A3", r.a3, "");
  line("uniqueness", r.uniqueness, "");
  line("substance", r.substance,
       r.substance_set ? "S = " + u.format(*r.substance_set) : "");
  line("partition", r.partition, "");
  line("indivisibility", r.indivisibility, "");
  line("eternity", r.eternity, "");
  line("temporal", r.temporal, "");
  line("property_P", r.property_p, "");
  line("atom", r.atom, "");

  std::size_t failed = 0;
  for (const Verdict* v : {&r.a1, &r.a2, &r.slice_closure, &r.p2_1, &r.p2_2,
                           &r.fixpoint, &r.a3, &r.uniqueness, &r.substance,
                           &r.partition, &r.indivisibility, &r.eternity,
                           &r.temporal, &r.property_p, &r.atom}) {
    if (v->failed()) ++failed;
  }
  if (r.all_passed()) {
    out << "result: all checks passed\n";
  } else {
    out << "result: " << failed << " check(s) failed\n";
  }
  return out.str();
}

}  // namespace fixlat
