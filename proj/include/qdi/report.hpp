//! \file report.hpp
//! \brief Text and JSON renderers for orphan summaries, circuit
//!        comparisons, cost figures and indication classes.
//!
//! Every renderer is a pure function of its inputs and emits rows in a
//! fixed order (ascending codeword index, rail columns Xn1 Xn0 .. X11
//! X10), so repeated runs are byte-identical. Rising transitions render
//! as `gate^`, falling ones as `gatev`.

#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "qdi/analysis.hpp"
#include "qdi/netlist.hpp"
#include "qdi/sim.hpp"

namespace qdi {

enum class report_format { text, json };

inline report_format parse_report_format(const std::string& s) {
  if (s == "text") return report_format::text;
  if (s == "json") return report_format::json;
  throw std::invalid_argument("unknown report format '" + s + "' (expected text or json)");
}

namespace detail {

//! Left-aligned column layout with two-space gutters.
inline std::string format_table(const std::vector<std::string>& header,
                                const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  std::ostringstream out;
  auto emit = [&](const std::vector<std::string>& row) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      out << row[c];
      if (c + 1 < row.size()) out << std::string(width[c] - row[c].size() + 2, ' ');
    }
    out << '\n';
  };
  emit(header);
  for (const auto& row : rows) emit(row);
  return std::move(out).str();
}

inline std::vector<std::string> rail_headers(int n) {
  std::vector<std::string> h;
  for (int var = n; var >= 1; --var) {
    h.push_back(rail_name(rail_literal{var, 1}));
    h.push_back(rail_name(rail_literal{var, 0}));
  }
  return h;
}

inline std::vector<std::string> rail_bits(const codeword& cw) {
  std::vector<std::string> bits;
  for (int var = cw.n(); var >= 1; --var) {
    bits.push_back(cw.value(var) ? "1" : "0");
    bits.push_back(cw.value(var) ? "0" : "1");
  }
  return bits;
}

inline std::vector<std::string> active_rail_names(const codeword& cw) {
  std::vector<std::string> names;
  for (int var = cw.n(); var >= 1; --var) {
    names.push_back(rail_name(rail_literal{var, cw.value(var) ? 1 : 0}));
  }
  return names;
}

inline std::string transition_token(const gate_transition& tr) {
  return tr.gate_id + (tr.dir == edge::rise ? "^" : "v");
}

inline std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

inline std::string path_string(const std::vector<gate_transition>& chain) {
  std::vector<std::string> ids;
  for (const auto& tr : chain) ids.push_back(tr.gate_id);
  return ids.empty() ? "-" : join(ids, "-");
}

inline std::string orphan_string(const std::vector<gate_transition>& orphans) {
  std::vector<std::string> tokens;
  for (const auto& tr : orphans) tokens.push_back(transition_token(tr));
  return tokens.empty() ? "-" : join(tokens, ", ");
}

inline nlohmann::ordered_json transition_json(const gate_transition& tr) {
  nlohmann::ordered_json j;
  j["gate"] = tr.gate_id;
  j["dir"] = tr.dir == edge::rise ? "rise" : "fall";
  j["phase"] = to_string(tr.phase);
  j["time"] = tr.time;
  return j;
}

}  // namespace detail

//! Per-codeword orphan table for one circuit. Text columns: the rail
//! pattern, the first gate to switch, the acknowledged set-phase chain,
//! and the orphans of each phase.
inline std::string render_orphan_summary(const netlist& nl, const std::vector<orphan_report>& rows,
                                         report_format format) {
  if (format == report_format::json) {
    nlohmann::ordered_json j;
    j["format"] = "qdi-orphan-summary";
    j["version"] = 1;
    j["n"] = nl.n;
    j["rows"] = nlohmann::ordered_json::array();
    int orphan_rows = 0;
    for (const auto& report : rows) {
      nlohmann::ordered_json row;
      row["codeword"] = report.cw.to_string();
      row["rails"] = detail::active_rail_names(report.cw);
      row["first_gate"] = report.first_gate;
      row["acknowledged"] = nlohmann::ordered_json::array();
      for (const auto& tr : report.acknowledged) row["acknowledged"].push_back(detail::transition_json(tr));
      row["orphans"] = nlohmann::ordered_json::array();
      for (const auto& tr : report.orphans) row["orphans"].push_back(detail::transition_json(tr));
      j["rows"].push_back(std::move(row));
      if (!report.clean()) ++orphan_rows;
    }
    j["orphan_rows"] = orphan_rows;
    j["orphan_free"] = orphan_rows == 0;
    return j.dump(2) + "\n";
  }

  std::vector<std::string> header = detail::rail_headers(nl.n);
  header.push_back("first");
  header.push_back("acknowledged (set)");
  header.push_back("orphans (set)");
  header.push_back("orphans (reset)");
  std::vector<std::vector<std::string>> body;
  int orphan_rows = 0;
  for (const auto& report : rows) {
    auto row = detail::rail_bits(report.cw);
    row.push_back(report.first_gate.empty() ? "-" : report.first_gate);
    row.push_back(detail::path_string(report.phase_acknowledged(phase_kind::set)));
    row.push_back(detail::orphan_string(report.phase_orphans(phase_kind::set)));
    row.push_back(detail::orphan_string(report.phase_orphans(phase_kind::reset)));
    body.push_back(std::move(row));
    if (!report.clean()) ++orphan_rows;
  }
  std::string out = detail::format_table(header, body);
  out += "orphan rows: " + std::to_string(orphan_rows) + " of " + std::to_string(rows.size()) + "\n";
  return out;
}

//! Side-by-side comparison of several circuits over every valid
//! codeword: one column per circuit showing the acknowledged chain of
//! the chosen phase plus any orphan annotations.
inline std::string render_comparison(const std::vector<std::string>& names,
                                     const std::vector<std::vector<orphan_report>>& summaries,
                                     int n, phase_kind phase, report_format format) {
  if (names.size() != summaries.size()) {
    throw std::invalid_argument("comparison needs one name per summary");
  }
  const std::size_t rows = summaries.empty() ? 0 : summaries.front().size();
  for (const auto& s : summaries) {
    if (s.size() != rows) throw std::invalid_argument("comparison summaries disagree on row count");
  }

  if (format == report_format::json) {
    nlohmann::ordered_json j;
    j["format"] = "qdi-comparison";
    j["version"] = 1;
    j["phase"] = to_string(phase);
    j["n"] = n;
    j["circuits"] = names;
    j["rows"] = nlohmann::ordered_json::array();
    for (std::size_t r = 0; r < rows; ++r) {
      nlohmann::ordered_json row;
      row["codeword"] = summaries.front()[r].cw.to_string();
      row["rails"] = detail::active_rail_names(summaries.front()[r].cw);
      nlohmann::ordered_json per;
      for (std::size_t c = 0; c < names.size(); ++c) {
        const auto& report = summaries[c][r];
        nlohmann::ordered_json cell;
        cell["path"] = nlohmann::ordered_json::array();
        for (const auto& tr : report.phase_acknowledged(phase)) cell["path"].push_back(tr.gate_id);
        cell["orphans"] = nlohmann::ordered_json::array();
        for (const auto& tr : report.phase_orphans(phase)) cell["orphans"].push_back(detail::transition_json(tr));
        per[names[c]] = std::move(cell);
      }
      row["paths"] = std::move(per);
      j["rows"].push_back(std::move(row));
    }
    return j.dump(2) + "\n";
  }

  std::vector<std::string> header = detail::rail_headers(n);
  header.insert(header.end(), names.begin(), names.end());
  std::vector<std::vector<std::string>> body;
  for (std::size_t r = 0; r < rows; ++r) {
    auto row = detail::rail_bits(summaries.front()[r].cw);
    for (std::size_t c = 0; c < names.size(); ++c) {
      const auto& report = summaries[c][r];
      std::string cell = detail::path_string(report.phase_acknowledged(phase));
      const auto orphans = report.phase_orphans(phase);
      if (!orphans.empty()) cell += " (orphans: " + detail::orphan_string(orphans) + ")";
      row.push_back(std::move(cell));
    }
    body.push_back(std::move(row));
  }
  return "phase: " + to_string(phase) + "\n" + detail::format_table(header, body);
}

inline std::string render_cost(const cost_report& r, report_format format) {
  if (format == report_format::json) {
    nlohmann::ordered_json j;
    j["format"] = "qdi-cost";
    j["version"] = 1;
    if (r.minterm_count) j["minterm_count"] = *r.minterm_count;
    if (r.naive_top_level_terms) {
      j["naive_top_level_terms"] = *r.naive_top_level_terms;
      j["naive_underestimates"] = r.naive_underestimates;
    }
    if (r.literal_count) j["literal_count"] = *r.literal_count;
    if (r.has_netlist) {
      j["c_elements"] = r.c_element_count;
      j["or_gates"] = r.or_gate_count;
      j["gate_inputs"] = r.total_gate_inputs;
      j["logic_depth"] = r.logic_depth;
      j["gates"] = nlohmann::ordered_json::array();
      for (const auto& gc : r.gate_counts) {
        nlohmann::ordered_json g;
        g["kind"] = to_string(gc.kind);
        g["arity"] = gc.arity;
        g["count"] = gc.count;
        j["gates"].push_back(std::move(g));
      }
    }
    return j.dump(2) + "\n";
  }

  std::ostringstream out;
  if (r.minterm_count) out << "product terms: " << *r.minterm_count << "\n";
  if (r.naive_top_level_terms) {
    out << "top-level terms: " << *r.naive_top_level_terms;
    if (r.naive_underestimates) {
      out << " (underestimates the real cost: a product of sums hides expanded terms)";
    }
    out << "\n";
  }
  if (r.literal_count) out << "literals: " << *r.literal_count << "\n";
  if (r.has_netlist) {
    out << "c-elements: " << r.c_element_count << "\n";
    out << "or-gates: " << r.or_gate_count << "\n";
    out << "gate inputs: " << r.total_gate_inputs << "\n";
    out << "logic depth: " << r.logic_depth << "\n";
    std::vector<std::string> tokens;
    for (const auto& gc : r.gate_counts) {
      tokens.push_back(to_string(gc.kind) + std::to_string(gc.arity) + " x" + std::to_string(gc.count));
    }
    out << "gate histogram: " << detail::join(tokens, ", ") << "\n";
  }
  return std::move(out).str();
}

inline std::string render_indication(const indication_report& r,
                                     const std::vector<std::string>& output_names,
                                     report_format format) {
  auto output_label = [&output_names](int index) {
    if (index >= 0 && static_cast<std::size_t>(index) < output_names.size()) {
      return output_names[static_cast<std::size_t>(index)];
    }
    return "#" + std::to_string(index);
  };

  if (format == report_format::json) {
    nlohmann::ordered_json j;
    j["format"] = "qdi-indication";
    j["version"] = 1;
    j["class"] = to_string(r.cls);
    j["early_set"] = r.early_set;
    j["early_reset"] = r.early_reset;
    j["witnesses"] = nlohmann::ordered_json::array();
    for (const auto& w : r.witnesses) {
      nlohmann::ordered_json wj;
      wj["output"] = output_label(w.output_index);
      wj["phase"] = to_string(w.phase);
      wj["codeword"] = w.cw.to_string();
      wj["subset"] = w.subset;
      j["witnesses"].push_back(std::move(wj));
    }
    return j.dump(2) + "\n";
  }

  std::ostringstream out;
  out << "indication: " << to_string(r.cls) << "\n";
  if (r.cls != io_class::strong) {
    out << "early set: " << (r.early_set ? "yes" : "no")
        << ", early reset: " << (r.early_reset ? "yes" : "no") << "\n";
    for (const auto& w : r.witnesses) {
      std::vector<std::string> vars;
      for (int var : w.subset) vars.push_back("X" + std::to_string(var));
      out << "witness: output " << output_label(w.output_index) << " "
          << (w.phase == phase_kind::set ? "produced" : "reset") << " at codeword "
          << w.cw.to_string() << " from subset {" << detail::join(vars, ", ") << "}\n";
    }
  }
  return std::move(out).str();
}

}  // namespace qdi
