//! \file cli.hpp
//! \brief Command implementations behind the `qdi` tool. Every command
//!        works on streams so the test suite can drive it without a
//!        process boundary; `tools/qdi_main.cpp` only parses flags,
//!        opens files and maps exceptions to exit code 2.
//!
//! Exit codes: 0 clean, 1 orphans found (lint semantics), 2 usage or
//! parse errors (signalled by throwing).

#pragma once

#include <algorithm>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "qdi/analysis.hpp"
#include "qdi/boolean_function.hpp"
#include "qdi/cover.hpp"
#include "qdi/fixtures.hpp"
#include "qdi/netlist.hpp"
#include "qdi/netlist_json.hpp"
#include "qdi/report.hpp"
#include "qdi/sim.hpp"
#include "qdi/synth.hpp"

namespace qdi::cli {

//! Parses and validates a serialized netlist; all diagnostics are
//! reported at once.
inline netlist load_netlist(std::istream& in) {
  std::ostringstream buffer;
  buffer << in.rdbuf();
  netlist nl = netlist_from_json_text(buffer.str());
  const auto problems = validate(nl);
  if (!problems.empty()) {
    std::string msg = "netlist does not validate:";
    for (const auto& d : problems) msg += "\n  [" + d.code + "] " + d.message;
    throw std::runtime_error(msg);
  }
  return nl;
}

//! Turns an explicit rail list ("X31,X20,X11" or space-separated) into a
//! codeword: every variable must contribute exactly one rail; an empty
//! list is the spacer.
inline codeword codeword_from_rails(int n, const std::string& rails) {
  std::vector<int> value(static_cast<std::size_t>(n) + 1, -1);
  std::string token;
  std::istringstream in(rails);
  std::string normalized = rails;
  std::replace(normalized.begin(), normalized.end(), ',', ' ');
  std::istringstream tokens(normalized);
  bool any = false;
  while (tokens >> token) {
    any = true;
    const rail_literal lit = parse_rail_name(token);
    if (lit.var < 1 || lit.var > n) {
      throw std::invalid_argument("rail '" + token + "' names variable " + std::to_string(lit.var) +
                                  " outside 1.." + std::to_string(n));
    }
    if (value[static_cast<std::size_t>(lit.var)] != -1) {
      throw std::invalid_argument("variable " + std::to_string(lit.var) + " given more than one rail");
    }
    value[static_cast<std::size_t>(lit.var)] = lit.rail;
  }
  if (!any) return codeword::spacer(n);
  std::string assignment;
  for (int var = n; var >= 1; --var) {
    if (value[static_cast<std::size_t>(var)] == -1) {
      throw std::invalid_argument("rail list leaves variable " + std::to_string(var) + " undriven");
    }
    assignment += value[static_cast<std::size_t>(var)] ? '1' : '0';
  }
  return codeword::from_string(assignment);
}

struct synth_request {
  synth_method method = synth_method::dims;
  synth_options options;
  report_format format = report_format::text;
};

//! Reads a truth table, synthesizes a netlist onto `netlist_out`, and a
//! cost summary (naive and structural side by side) onto `report_out`.
inline int cmd_synth(std::istream& table_in, const synth_request& req, std::ostream& netlist_out,
                     std::ostream& report_out) {
  const boolean_function f = parse_truth_table(table_in);
  const netlist nl = synthesize(f, req.method, req.options);

  cost_report cost = estimate_cost(nl);
  const cover_pair covers = dual_rail_cover(f);
  switch (req.method) {
    case synth_method::dims:
      cost = combine(cost, estimate_cost(covers));
      break;
    case synth_method::fdims:
      cost = combine(cost, estimate_cost(fdims_factorize(covers.rail1), fdims_factorize(covers.rail0)));
      break;
    case synth_method::safe:
      cost = combine(cost, estimate_cost(safe_decompose(covers.rail1), safe_decompose(covers.rail0)));
      break;
  }

  netlist_out << to_json_text(nl);
  report_out << render_cost(cost, req.format);
  return 0;
}

enum class analyze_mode { orphans, indication, all };

inline analyze_mode parse_analyze_mode(const std::string& s) {
  if (s == "orphans") return analyze_mode::orphans;
  if (s == "indication") return analyze_mode::indication;
  if (s == "all") return analyze_mode::all;
  throw std::invalid_argument("unknown analyze mode '" + s + "' (expected orphans, indication or all)");
}

struct analyze_request {
  analyze_mode mode = analyze_mode::orphans;
  report_format format = report_format::text;
  int enumeration_cap = 10;
};

//! Renders the requested reports; returns 1 when any gate orphan was
//! found (so the command lints), 0 otherwise.
inline int cmd_analyze(std::istream& netlist_in, const analyze_request& req, std::ostream& out) {
  const netlist nl = load_netlist(netlist_in);
  int exit_code = 0;

  if (req.mode == analyze_mode::orphans || req.mode == analyze_mode::all) {
    const auto rows = orphan_summary(nl, req.enumeration_cap);
    out << render_orphan_summary(nl, rows, req.format);
    for (const auto& row : rows) {
      if (!row.clean()) exit_code = 1;
    }
  }
  if (req.mode == analyze_mode::indication || req.mode == analyze_mode::all) {
    std::vector<std::string> names;
    for (const auto& op : nl.outputs) names.push_back(op.name);
    out << render_indication(classify_indication(nl), names, req.format);
  }
  if (req.mode == analyze_mode::all) {
    out << render_cost(estimate_cost(nl), req.format);
  }
  return exit_code;
}

struct comparison_request {
  phase_kind phase = phase_kind::set;
  report_format format = report_format::text;
  int or_fanin_cap = 0;
};

//! The headline report: the three bundled 3-input AND circuits side by
//! side over all 8 codewords, with orphan annotations.
inline int cmd_table1(const comparison_request& req, std::ostream& out) {
  const std::vector<std::string> names = fixture_names();
  std::vector<std::vector<orphan_report>> summaries;
  int n = 0;
  for (const auto& name : names) {
    const netlist nl = build_fixture(name, req.or_fanin_cap);
    n = nl.n;
    summaries.push_back(orphan_summary(nl));
  }
  out << render_comparison(names, summaries, n, req.phase, req.format);
  return 0;
}

//! Simulates one full transaction and dumps both phase traces.
inline int cmd_simulate(std::istream& netlist_in, const std::string& codeword_text,
                        const std::string& rails_text, std::ostream& out) {
  const netlist nl = load_netlist(netlist_in);
  codeword cw = codeword::spacer(nl.n);
  if (!rails_text.empty()) {
    if (!codeword_text.empty()) {
      throw std::invalid_argument("give either an assignment string or --rails, not both");
    }
    cw = codeword_from_rails(nl.n, rails_text);
  } else {
    if (codeword_text.empty()) throw std::invalid_argument("missing codeword");
    cw = codeword::from_string(codeword_text);
    if (cw.n() != nl.n) {
      throw std::invalid_argument("codeword '" + codeword_text + "' has " + std::to_string(cw.n()) +
                                  " variables but the netlist has " + std::to_string(nl.n));
    }
  }
  out << render(simulate_transaction(nl, cw));
  return 0;
}

//! Writes one bundled fixture as netlist JSON.
inline int cmd_fixture(const std::string& name, int or_fanin_cap, std::ostream& out) {
  out << to_json_text(build_fixture(name, or_fanin_cap));
  return 0;
}

struct selfcheck_request {
  std::uint32_t seed = 12345;
  int count = 50;  // random functions at n = 4
};

//! Seeded randomized property sweep: DIMS and safe netlists must be
//! orphan-free on every codeword in both phases, and all three methods
//! must agree with the truth table (spacer included). Mirrors the test
//! suite's property runs so the check is available in the field.
inline int cmd_selfcheck(const selfcheck_request& req, std::ostream& out) {
  std::mt19937 rng(req.seed);
  std::uniform_int_distribution<std::uint32_t> dist(1, (1u << 16) - 2);  // skip constants
  const int n = 4;
  int failures = 0;

  for (int k = 0; k < req.count; ++k) {
    std::vector<bool> bits;
    const std::uint32_t word = dist(rng);
    for (int i = 0; i < 16; ++i) bits.push_back((word >> i) & 1u);
    const boolean_function f(n, bits);

    for (const auto method : {synth_method::dims, synth_method::fdims, synth_method::safe}) {
      const netlist nl = synthesize(f, method);
      bool ok = true;

      for (std::uint32_t index = 0; index < f.size() && ok; ++index) {
        const codeword cw = codeword::from_index(n, index);
        const auto outs = eval_netlist(nl, cw);
        if (outs.size() != 1 || outs[0] != rail_pair{f.value(index), !f.value(index)}) ok = false;
      }
      const auto spacer_outs = eval_netlist(nl, codeword::spacer(n));
      if (spacer_outs.size() != 1 || spacer_outs[0] != rail_pair{false, false}) ok = false;

      if (method != synth_method::fdims) {
        for (const auto& row : orphan_summary(nl)) {
          if (!row.clean()) ok = false;
        }
      }

      if (!ok) {
        ++failures;
        out << "FAIL " << to_string(method) << " function 0x" << std::hex << word << std::dec << "\n";
      }
    }
  }

  out << "selfcheck: " << req.count << " random functions at n=" << n << ", seed " << req.seed
      << ": " << (failures == 0 ? "all checks passed" : std::to_string(failures) + " failure(s)")
      << "\n";
  return failures == 0 ? 0 : 1;
}

}  // namespace qdi::cli
