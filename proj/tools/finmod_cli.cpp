// command-line driver: classify | theorems | search | crosscheck
#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "finmod/instance.hpp"
#include "finmod/report.hpp"

namespace {

std::string read_spec_input(const std::string& arg) {
  if (arg.empty() || arg == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  if (arg.rfind("module ", 0) == 0 || arg.rfind("ring ", 0) == 0) return arg;
  std::ifstream f(arg);
  if (!f) throw finmod::ArgumentError("cannot open input file: " + arg);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

struct Out {
  std::ofstream file;
  std::ostream* os = &std::cout;
  void open(const std::string& path) {
    if (path.empty()) return;
    file.open(path);
    if (!file) throw finmod::ArgumentError("cannot open output file: " + path);
    os = &file;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-module Goldie torsion analyzer"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  finmod::HarnessConfig cfg;
  cfg.jobs = (int)std::max(1u, std::thread::hardware_concurrency());
  bool witnesses = false;
  std::string out_path;
  app.add_flag("--witnesses", witnesses, "include witness tables in reports");
  app.add_option("--jobs", cfg.jobs, "worker threads for the harness");
  app.add_option("--max-order", cfg.module_order_cap,
                 "module order cap for generated instances");
  app.add_option("--family", cfg.families,
                 "restrict to named families (repeatable)");
  app.add_option("--out", out_path, "write the report to a file");

  std::string spec_arg;
  auto* c_classify =
      app.add_subcommand("classify", "classify one instance description");
  c_classify->add_option("spec", spec_arg,
                         "instance text, a file path, or '-' for stdin");

  auto* c_theorems =
      app.add_subcommand("theorems", "replay the theorem registry");

  std::string target;
  auto* c_search =
      app.add_subcommand("search", "search catalogs for a verdict conjunction");
  c_search->add_option("target", target, "e.g. goldie_rickart&!rickart")
      ->required();

  auto* c_cross =
      app.add_subcommand("crosscheck", "run independent-route oracle checks");

  CLI11_PARSE(app, argc, argv);

  try {
    Out out;
    out.open(out_path);

    if (*c_classify) {
      finmod::ParsedInstance p =
          finmod::parse_spec(read_spec_input(spec_arg));
      finmod::PropertyReport r =
          finmod::classify(p.module, p.canonical, witnesses);
      *out.os << finmod::report_json(r, witnesses).dump() << "\n";
      return 0;
    }

    std::cerr << "generating families..." << std::endl;
    auto fams = finmod::generate_families(cfg);
    for (const auto& f : fams)
      std::cerr << "  " << f.name << ": " << f.instances.size()
                << " instances" << (f.truncated ? " (truncated)" : "")
                << std::endl;

    if (*c_theorems) {
      std::cerr << "replaying theorem registry..." << std::endl;
      auto checks = finmod::run_theorems(fams, cfg);
      bool any_fail = false;
      for (const auto& c : checks) {
        *out.os << finmod::report_json(c).dump() << "\n";
        if (c.status == finmod::CheckStatus::Fail) any_fail = true;
      }
      return any_fail ? 1 : 0;
    }
    if (*c_search) {
      auto r = finmod::search_counterexample(target, fams);
      *out.os << finmod::report_json(r, target).dump() << "\n";
      return 0;
    }
    if (*c_cross) {
      auto r = finmod::oracle_crosschecks(fams);
      *out.os << finmod::report_json(r).dump() << "\n";
      return r.all_pass() ? 0 : 1;
    }
  } catch (const finmod::SizeLimitError& e) {
    std::cerr << "size limit: " << e.what() << std::endl;
    return 3;
  } catch (const finmod::ParseError& e) {
    std::cerr << "parse error: " << e.what() << std::endl;
    return 2;
  } catch (const finmod::ValidationError& e) {
    std::cerr << "validation error: " << e.what() << std::endl;
    return 2;
  } catch (const finmod::ArgumentError& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return 2;
  }
  return 0;
}
