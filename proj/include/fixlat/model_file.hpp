#pragma once

// Line-oriented model files.
//
//   # comment
//   universe s a b          exactly once, first directive
//   birth s -inf            optional per element, default 0
//   time 1.5 inf            optional, default "inf"
//   rule -> s               premise names, "->", conclusion names
//   rule b -> s a
//   table {} -> {s}         alternative to rules; all 2^n keys required
//   table {s,a} -> {s}
//
// emit_model writes the canonical form: every birth spelled out, times
// sorted, rules in input order and table rows in key order.

#include <cstddef>
#include <string>
#include <string_view>

#include "fixlat/lattice.hpp"
#include "fixlat/substance.hpp"

namespace fixlat {

// Throws ParseError (with line and column) on malformed input and
// SizeGuardError when the universe has more than max_n elements.
SpinozaModel parse_model(std::string_view text,
                         std::size_t max_n = Universe::kDefaultSweepLimit);

std::string emit_model(const SpinozaModel& model);

// Shortest round-trip decimal, or "inf" / "-inf".
std::string format_number(double value);

}  // namespace fixlat
