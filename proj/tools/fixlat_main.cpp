// fixlat: check causality models for a unique self-caused least fixed point.
//
// Exit codes: 0 all checks passed, 1 some check failed, 2 unreadable or
// malformed input, 3 universe larger than the size guard.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "fixlat/errors.hpp"
#include "fixlat/lattice.hpp"
#include "fixlat/model_file.hpp"
#include "fixlat/modelgen.hpp"
#include "fixlat/report.hpp"

namespace {

constexpr int kExitFailed = 1;
constexpr int kExitInput = 2;
constexpr int kExitGuard = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

void apply_worker_override() {
  if (const char* env = std::getenv("FIXLAT_WORKERS")) {
    try {
      fixlat::set_sweep_workers(static_cast<unsigned>(std::stoul(env)));
    } catch (const std::exception&) {
      std::cerr << "warning: ignoring invalid FIXLAT_WORKERS='" << env << "'\n";
    }
  }
}

// Loads a model and maps input problems onto the exit-code contract.
template <typename Fn>
int with_model(const std::string& path, std::size_t max_n, Fn&& fn) {
  std::string text;
  try {
    text = read_file(path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  try {
    return fn(fixlat::parse_model(text, max_n));
  } catch (const fixlat::ParseError& e) {
    std::cerr << path << ":" << e.line() << ":" << e.column()
              << ": parse error: " << e.reason() << "\n";
    return kExitInput;
  } catch (const fixlat::SizeGuardError& e) {
    std::cerr << path << ": size guard: " << e.what() << "\n";
    return kExitGuard;
  } catch (const fixlat::UsageError& e) {
    std::cerr << path << ": invalid model: " << e.what() << "\n";
    return kExitInput;
  }
}

}  // namespace

int main(int argc, char** argv) {
  apply_worker_override();

  CLI::App app{"Finite-lattice fixed-point engine and causality model checker"};
  app.require_subcommand(1);

  std::string file;
  std::size_t max_n = fixlat::Universe::kDefaultSweepLimit;
  bool as_json = false;
  std::string out_path;

  auto* check = app.add_subcommand("check", "Run every check and print a summary");
  check->add_option("file", file, "Model file")->required();
  check->add_flag("--json", as_json, "Print the canonical JSON report");
  check->add_option("--max-n", max_n, "Universe size guard")->capture_default_str();

  auto* substance = app.add_subcommand("substance", "Print the unique substance");
  substance->add_option("file", file, "Model file")->required();
  substance->add_option("--max-n", max_n, "Universe size guard")->capture_default_str();

  auto* report = app.add_subcommand("report", "Write the canonical JSON report");
  report->add_option("file", file, "Model file")->required();
  report->add_option("--out", out_path, "Output path")->required();
  report->add_option("--max-n", max_n, "Universe size guard")->capture_default_str();

  fixlat::GenConfig cfg;
  bool no_force = false;
  auto* gen = app.add_subcommand("gen", "Emit a seeded random rule-system model");
  gen->add_option("--seed", cfg.seed, "Generator seed")->required();
  gen->add_option("--n", cfg.n, "Universe size (2..12)")->required();
  gen->add_option("--rules", cfg.rule_count, "Number of rules")->required();
  gen->add_option("--times", cfg.time_count, "Finite time instants")->capture_default_str();
  gen->add_flag("--no-force-a1", no_force, "Do not force an empty-premise rule");
  gen->add_option("--out", out_path, "Output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  if (*check) {
    return with_model(file, max_n, [&](const fixlat::SpinozaModel& model) {
      const fixlat::Report r = fixlat::run_report(model);
      std::cout << (as_json ? fixlat::report_json(r) : fixlat::report_text(r));
      return r.all_passed() ? 0 : kExitFailed;
    });
  }
  if (*substance) {
    return with_model(file, max_n, [&](const fixlat::SpinozaModel& model) {
      const fixlat::Report r = fixlat::run_report(model);
      auto s = r.unique_substance();
      if (!s) {
        std::cout << "NO UNIQUE SUBSTANCE\n";
        return kExitFailed;
      }
      const auto names = model.universe().names_of(*s);
      for (std::size_t i = 0; i < names.size(); ++i) {
        std::cout << (i ? " " : "") << names[i];
      }
      std::cout << "\n";
      return 0;
    });
  }
  if (*report) {
    return with_model(file, max_n, [&](const fixlat::SpinozaModel& model) {
      const fixlat::Report r = fixlat::run_report(model);
      try {
        write_file(out_path, fixlat::report_json(r));
      } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
      }
      return r.all_passed() ? 0 : kExitFailed;
    });
  }
  if (*gen) {
    cfg.force_A1 = !no_force;
    try {
      const std::string text = fixlat::emit_model(fixlat::random_model(cfg));
      if (out_path.empty()) {
        std::cout << text;
      } else {
        write_file(out_path, text);
      }
    } catch (const fixlat::UsageError& e) {
      std::cerr << "error: " << e.what() << "\n";
      return kExitInput;
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      return kExitInput;
    }
    return 0;
  }
  return kExitInput;
}
