#include "fixlat/model_file.hpp"

#include <charconv>
#include <cmath>
#include <map>
#include <optional>
#include <vector>

#include "fixlat/errors.hpp"

namespace fixlat {

namespace {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

struct Line {
  std::size_t number;
  std::vector<Token> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view raw = text.substr(pos, end - pos);
    ++number;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) {
      raw = raw.substr(0, hash);
    }
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t' || raw[i] == '\r')) ++i;
      const std::size_t start = i;
      while (i < raw.size() && raw[i] != ' ' && raw[i] != '\t' && raw[i] != '\r') ++i;
      if (i > start) line.tokens.push_back({raw.substr(start, i - start), start + 1});
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    if (end == text.size()) break;
    pos = end + 1;
  }
  return lines;
}

bool valid_name(std::string_view name) {
  if (name.empty()) return false;
  auto alpha = [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
  };
  auto digit = [](char c) { return c >= '0' && c <= '9'; };
  if (!alpha(name.front())) return false;
  for (char c : name) {
    if (!alpha(c) && !digit(c)) return false;
  }
  return true;
}

std::optional<double> parse_number(std::string_view s) {
  if (s == "inf" || s == "+inf") return kInf;
  if (s == "-inf") return -kInf;
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  if (!std::isfinite(value)) return std::nullopt;
  return value;
}

class Parser {
 public:
  Parser(std::string_view text, std::size_t max_n)
      : lines_(tokenize(text)), max_n_(max_n) {}

  SpinozaModel run() {
    if (max_n_ > Universe::kHardSweepLimit) {
      throw SizeGuardError("size guard " + std::to_string(max_n_) +
                           " exceeds the hard limit of " +
                           std::to_string(Universe::kHardSweepLimit));
    }
    if (lines_.empty()) throw ParseError(1, 1, "missing 'universe' directive");
    for (const auto& line : lines_) directive(line);
    return finish();
  }

 private:
  [[noreturn]] static void fail(const Line& line, const Token& tok,
                                const std::string& reason) {
    throw ParseError(line.number, tok.column, reason);
  }

  std::size_t lookup(const Line& line, const Token& tok) const {
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (names_[i] == tok.text) return i;
    }
    fail(line, tok, "unknown name '" + std::string(tok.text) + "'");
  }

  void directive(const Line& line) {
    const Token& head = line.tokens.front();
    if (names_.empty() && head.text != "universe") {
      fail(line, head, "expected 'universe' as the first directive");
    }
    if (head.text == "universe") {
      universe(line);
    } else if (head.text == "birth") {
      birth(line);
    } else if (head.text == "time") {
      time(line);
    } else if (head.text == "rule") {
      rule(line);
    } else if (head.text == "table") {
      table(line);
    } else {
      fail(line, head, "unknown directive '" + std::string(head.text) + "'");
    }
  }

  void universe(const Line& line) {
    if (!names_.empty()) fail(line, line.tokens[0], "duplicate 'universe' directive");
    if (line.tokens.size() < 2) fail(line, line.tokens[0], "universe needs at least one name");
    for (std::size_t i = 1; i < line.tokens.size(); ++i) {
      const Token& tok = line.tokens[i];
      if (!valid_name(tok.text)) fail(line, tok, "invalid name '" + std::string(tok.text) + "'");
      for (const auto& existing : names_) {
        if (existing == tok.text) fail(line, tok, "duplicate name '" + std::string(tok.text) + "'");
      }
      names_.emplace_back(tok.text);
    }
    if (names_.size() > max_n_) {
      throw SizeGuardError("universe has " + std::to_string(names_.size()) +
                           " elements; the size guard is " + std::to_string(max_n_));
    }
    births_.assign(names_.size(), std::nullopt);
  }

  void birth(const Line& line) {
    if (line.tokens.size() != 3) fail(line, line.tokens[0], "expected 'birth <name> <value>'");
    const std::size_t idx = lookup(line, line.tokens[1]);
    if (births_[idx]) fail(line, line.tokens[1], "duplicate birth for '" + names_[idx] + "'");
    auto value = parse_number(line.tokens[2].text);
    if (!value) fail(line, line.tokens[2], "invalid birth value '" + std::string(line.tokens[2].text) + "'");
    births_[idx] = *value;
  }

  void time(const Line& line) {
    if (times_) fail(line, line.tokens[0], "duplicate 'time' directive");
    if (line.tokens.size() < 2) fail(line, line.tokens[0], "time needs at least one instant");
    std::vector<double> values;
    for (std::size_t i = 1; i < line.tokens.size(); ++i) {
      const Token& tok = line.tokens[i];
      auto value = parse_number(tok.text);
      if (!value || *value == -kInf) {
        fail(line, tok, "invalid time value '" + std::string(tok.text) + "'");
      }
      for (double v : values) {
        if (v == *value) fail(line, tok, "duplicate time value '" + std::string(tok.text) + "'");
      }
      values.push_back(*value);
    }
    times_ = std::move(values);
  }

  void require_kind(const Line& line, bool want_table) {
    if (kind_ && *kind_ != want_table) {
      fail(line, line.tokens[0], "rule and table directives cannot be mixed");
    }
    kind_ = want_table;
  }

  void rule(const Line& line) {
    require_kind(line, false);
    std::optional<std::size_t> arrow;
    for (std::size_t i = 1; i < line.tokens.size(); ++i) {
      if (line.tokens[i].text != "->") continue;
      if (arrow) fail(line, line.tokens[i], "more than one '->'");
      arrow = i;
    }
    if (!arrow) fail(line, line.tokens[0], "rule is missing '->'");
    std::uint64_t premise = 0;
    std::uint64_t conclusion = 0;
    for (std::size_t i = 1; i < line.tokens.size(); ++i) {
      if (i == *arrow) continue;
      const std::uint64_t b = std::uint64_t{1} << lookup(line, line.tokens[i]);
      (i < *arrow ? premise : conclusion) |= b;
    }
    rules_.emplace_back(premise, conclusion);
  }

  std::uint64_t braced(const Line& line, const Token& tok) const {
    std::string_view s = tok.text;
    if (s.size() < 2 || s.front() != '{' || s.back() != '}') {
      fail(line, tok, "expected a braced name list like {a,b}");
    }
    s = s.substr(1, s.size() - 2);
    std::uint64_t bits = 0;
    if (s.empty()) return bits;
    std::size_t offset = 1;
    while (true) {
      const std::size_t comma = s.find(',');
      const std::string_view name = s.substr(0, comma);
      const Token part{name, tok.column + offset};
      if (!valid_name(name)) fail(line, part, "invalid name '" + std::string(name) + "'");
      bits |= std::uint64_t{1} << lookup(line, part);
      if (comma == std::string_view::npos) break;
      offset += comma + 1;
      s = s.substr(comma + 1);
    }
    return bits;
  }

  void table(const Line& line) {
    require_kind(line, true);
    if (line.tokens.size() != 4 || line.tokens[2].text != "->") {
      fail(line, line.tokens[0], "expected 'table {<names>} -> {<names>}'");
    }
    const std::uint64_t key = braced(line, line.tokens[1]);
    const std::uint64_t value = braced(line, line.tokens[3]);
    if (!table_.emplace(key, value).second) {
      fail(line, line.tokens[1], "duplicate table key " + std::string(line.tokens[1].text));
    }
    last_table_line_ = line.number;
  }

  SpinozaModel finish() {
    std::vector<double> births;
    for (const auto& b : births_) births.push_back(b.value_or(0.0));
    auto u = std::make_shared<const Universe>(names_, births, max_n_);

    if (kind_ && *kind_) {
      const std::uint64_t count = std::uint64_t{1} << names_.size();
      std::vector<Subset> entries;
      for (std::uint64_t key = 0; key < count; ++key) {
        auto it = table_.find(key);
        if (it == table_.end()) {
          throw ParseError(last_table_line_, 1,
                           "incomplete table: missing entry for " +
                               u->format(u->from_bits(key)));
        }
        entries.push_back(u->from_bits(it->second));
      }
      return SpinozaModel(CausalityMap(DenseTable(u, std::move(entries))),
                          times_.value_or(std::vector<double>{kInf}));
    }
    std::vector<Rule> rules;
    for (const auto& [p, c] : rules_) rules.push_back({u->from_bits(p), u->from_bits(c)});
    return SpinozaModel(CausalityMap(RuleSystem(u, std::move(rules))),
                        times_.value_or(std::vector<double>{kInf}));
  }

  std::vector<Line> lines_;
  std::size_t max_n_;
  std::vector<std::string> names_;
  std::vector<std::optional<double>> births_;
  std::optional<std::vector<double>> times_;
  std::optional<bool> kind_;  // true = table
  std::vector<std::pair<std::uint64_t, std::uint64_t>> rules_;
  std::map<std::uint64_t, std::uint64_t> table_;
  std::size_t last_table_line_ = 1;
};

std::string names_joined(const Universe& u, const Subset& s, const char* sep) {
  std::string out;
  bool first = true;
  for (const auto& name : u.names_of(s)) {
    if (!first) out += sep;
    out += name;
    first = false;
  }
  return out;
}

}  // namespace

std::string format_number(double value) {
  if (value == kInf) return "inf";
  if (value == -kInf) return "-inf";
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  if (ec != std::errc()) throw UsageError("unformattable number");
  return std::string(buf, ptr);
}

SpinozaModel parse_model(std::string_view text, std::size_t max_n) {
  return Parser(text, max_n).run();
}

std::string emit_model(const SpinozaModel& model) {
  const Universe& u = model.universe();
  std::string out = "universe";
  for (const auto& name : u.names()) out += " " + name;
  out += '\n';
  for (std::size_t i = 0; i < u.size(); ++i) {
    out += "birth " + u.name(i) + " " + format_number(u.birth(i)) + "\n";
  }
  out += "time";
  for (double t : model.times()) out += " " + format_number(t);
  out += '\n';

  const CausalityMap& c = model.map();
  if (const RuleSystem* rs = c.rule_system()) {
    for (const auto& r : rs->rules()) {
      out += "rule";
      if (!r.premise.empty()) out += " " + names_joined(u, r.premise, " ");
      out += " ->";
      if (!r.conclusion.empty()) out += " " + names_joined(u, r.conclusion, " ");
      out += '\n';
    }
  } else {
    const auto& entries = c.table()->entries();
    for (std::size_t key = 0; key < entries.size(); ++key) {
      out += "table {" + names_joined(u, u.from_bits(key), ",") + "} -> {" +
             names_joined(u, entries[key], ",") + "}\n";
    }
  }
  return out;
}

}  // namespace fixlat
