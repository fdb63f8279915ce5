//! \file qdi_main.cpp
//! \brief The `qdi` command line tool: synthesize dual-rail circuits
//!        from truth tables, simulate four-phase transactions, and lint
//!        netlists for gate orphans and indication class.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "qdi/qdi.hpp"

namespace {

int env_max_inputs() {
  if (const char* raw = std::getenv("QDI_MAX_INPUTS")) {
    try {
      const int cap = std::stoi(raw);
      if (cap >= 1) return cap;
    } catch (const std::exception&) {
    }
    std::cerr << "warning: ignoring invalid QDI_MAX_INPUTS='" << raw << "'\n";
  }
  return qdi::synth_options{}.max_inputs;
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "' for reading");
  return in;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dual-rail QDI circuit synthesis, simulation and orphan linting"};
  app.require_subcommand(1);

  std::string table_path, netlist_path, output_path, method = "dims", format = "text";
  std::string mode = "orphans", phase = "set", fixture = "fig4", codeword_text, rails_text;
  int or_fanin_cap = 0;
  int enumeration_cap = 10;
  qdi::cli::selfcheck_request selfcheck;

  auto* synth = app.add_subcommand(
      "synth", "synthesize a dual-rail netlist from a truth table "
               "(line 1: n=<k>, line 2: 2^k bits, index = value of Xn..X1)");
  synth->add_option("table", table_path, "truth table file")->required();
  synth->add_option("-m,--method", method, "dims | fdims | safe")->capture_default_str();
  synth->add_option("-o,--output", output_path, "netlist file (default stdout)");
  synth->add_option("--or-fanin-cap", or_fanin_cap, "split OR merges beyond this fan-in (0 = never)")
      ->capture_default_str();
  synth->add_option("--format", format, "cost summary format: text | json")->capture_default_str();

  auto* analyze = app.add_subcommand("analyze", "lint a netlist for gate orphans and indication class");
  analyze->add_option("netlist", netlist_path, "netlist file")->required();
  analyze->add_option("--mode", mode, "orphans | indication | all")->capture_default_str();
  analyze->add_option("--format", format, "text | json")->capture_default_str();
  analyze->add_option("--enum-cap", enumeration_cap, "largest n to enumerate (2^n codewords)")
      ->capture_default_str();

  auto* table1 = app.add_subcommand(
      "table1", "compare the bundled 3-input AND circuits over all 8 codewords");
  table1->add_option("--phase", phase, "set | reset")->capture_default_str();
  table1->add_option("--format", format, "text | json")->capture_default_str();
  table1->add_option("--or-fanin-cap", or_fanin_cap, "OR fan-in cap for the fixtures")
      ->capture_default_str();

  auto* simulate = app.add_subcommand("simulate", "run one four-phase transaction and dump the trace");
  simulate->add_option("netlist", netlist_path, "netlist file")->required();
  simulate->add_option("codeword", codeword_text,
                       "assignment over Xn..X1, e.g. 110; all '-' for the spacer");
  simulate->add_option("--rails", rails_text, "explicit rail list, e.g. X31,X20,X11");

  auto* fixture_cmd = app.add_subcommand("fixture", "write a bundled example netlist");
  fixture_cmd->add_option("name", fixture, "fig3 | fig4 | fig5")->required();
  fixture_cmd->add_option("-o,--output", output_path, "netlist file (default stdout)");
  fixture_cmd->add_option("--or-fanin-cap", or_fanin_cap, "OR fan-in cap")->capture_default_str();

  auto* check = app.add_subcommand("selfcheck", "seeded randomized property sweep");
  check->add_option("--seed", selfcheck.seed, "RNG seed")->capture_default_str();
  check->add_option("--count", selfcheck.count, "number of random functions")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (synth->parsed()) {
      qdi::cli::synth_request req;
      req.method = qdi::parse_synth_method(method);
      req.options.or_fanin_cap = or_fanin_cap;
      req.options.max_inputs = env_max_inputs();
      req.format = qdi::parse_report_format(format);
      auto in = open_input(table_path);
      if (output_path.empty()) {
        return qdi::cli::cmd_synth(in, req, std::cout, std::cerr);
      }
      auto out = open_output(output_path);
      return qdi::cli::cmd_synth(in, req, out, std::cout);
    }
    if (analyze->parsed()) {
      qdi::cli::analyze_request req;
      req.mode = qdi::cli::parse_analyze_mode(mode);
      req.format = qdi::parse_report_format(format);
      req.enumeration_cap = enumeration_cap;
      auto in = open_input(netlist_path);
      return qdi::cli::cmd_analyze(in, req, std::cout);
    }
    if (table1->parsed()) {
      qdi::cli::comparison_request req;
      req.phase = qdi::parse_phase(phase);
      req.format = qdi::parse_report_format(format);
      req.or_fanin_cap = or_fanin_cap;
      return qdi::cli::cmd_table1(req, std::cout);
    }
    if (simulate->parsed()) {
      auto in = open_input(netlist_path);
      return qdi::cli::cmd_simulate(in, codeword_text, rails_text, std::cout);
    }
    if (fixture_cmd->parsed()) {
      if (output_path.empty()) {
        return qdi::cli::cmd_fixture(fixture, or_fanin_cap, std::cout);
      }
      auto out = open_output(output_path);
      return qdi::cli::cmd_fixture(fixture, or_fanin_cap, out);
    }
    if (check->parsed()) {
      return qdi::cli::cmd_selfcheck(selfcheck, std::cout);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
