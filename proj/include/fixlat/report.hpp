#pragma once

// The full checker pipeline and its canonical serializations.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fixlat/causality.hpp"
#include "fixlat/fixpoint.hpp"
#include "fixlat/substance.hpp"

namespace fixlat {

struct Verdict {
  enum class Status { passed, failed, skipped };

  Status status = Status::skipped;
  std::optional<CheckResult> result;  // absent when skipped
  std::string reason;                 // why it was skipped

  static Verdict of(CheckResult r) {
    const auto s = r.passed ? Status::passed : Status::failed;
    return Verdict{s, std::move(r), {}};
  }
  static Verdict skip(std::string why) {
    return Verdict{Status::skipped, std::nullopt, std::move(why)};
  }
  bool passed() const noexcept { return status == Status::passed; }
  bool failed() const noexcept { return status == Status::failed; }
};

struct Report {
  std::shared_ptr<const Universe> universe;
  std::vector<double> times;

  Verdict a1, a2, a3;
  Verdict slice_closure, p2_1, p2_2;

  Verdict fixpoint;  // skipped when A2 fails or iteration cycles
  std::optional<FixpointReport> fixpoints;

  Verdict uniqueness;
  Verdict substance;
  std::optional<Subset> substance_set;
  std::vector<TimedSubset> substance_per_time;
  std::optional<Subset> gfp;  // D_t for the largest slice

  Verdict partition, indivisibility, eternity, temporal, property_p, atom;

  bool all_passed() const;
  // Non-empty fixed point that is both the substance and unique, if any.
  std::optional<Subset> unique_substance() const;
};

// Runs A1, A2, slice closure, P2.1, P2.2, fixpoints, A3, uniqueness,
// substance, partition, indivisibility, eternity, temporal, (P), atom in that
// order. Checks whose preconditions failed are skipped with a reason.
Report run_report(const SpinozaModel& model);

// Canonical JSON document (fixed key order, two-space indent, trailing
// newline). Byte-stable for a given model.
std::string report_json(const Report& report);

// Human-readable summary, one line per check.
std::string report_text(const Report& report);

// JSON object for a single check result; used by report_json and by tests
// that pin witnesses.
std::string check_json(const Universe& universe, const CheckResult& result);

}  // namespace fixlat
