//! \file analysis.hpp
//! \brief Verification passes over simulated transactions: gate-orphan
//!        detection, input/output indication classification, and cost
//!        estimation.
//!
//! A gate-output transition is acknowledged when it provably leads to a
//! primary-output transition within the same phase: either its net is a
//! primary output, or a consumer of the net switches strictly later and
//! that consumer's transition is itself acknowledged. On a fork the
//! isochronic flag decides whether one acknowledged branch suffices (the
//! branches may assume matched delays) or every branch must answer.
//! Primary-input forks are exempt: the environment only observes the
//! function's outputs, and input transitions are validated by the
//! protocol itself. An unacknowledged transition is a gate orphan: the
//! handshake can complete while that gate is still switching, so the
//! next transaction may race it.

#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "qdi/cover.hpp"
#include "qdi/factored_expr.hpp"
#include "qdi/netlist.hpp"
#include "qdi/sim.hpp"

namespace qdi {

struct gate_transition {
  std::string gate_id;
  edge dir = edge::rise;
  phase_kind phase = phase_kind::set;
  int time = 0;

  friend bool operator==(const gate_transition&, const gate_transition&) = default;
};

struct orphan_report {
  codeword cw;
  std::vector<gate_transition> acknowledged;  // set phase then reset phase, by (time, gate id)
  std::vector<gate_transition> orphans;       // same ordering
  std::string first_gate;                     // earliest set-phase gate to switch ("" if none)

  bool clean() const { return orphans.empty(); }

  std::vector<gate_transition> phase_orphans(phase_kind ph) const {
    std::vector<gate_transition> out;
    for (const auto& tr : orphans) {
      if (tr.phase == ph) out.push_back(tr);
    }
    return out;
  }

  std::vector<gate_transition> phase_acknowledged(phase_kind ph) const {
    std::vector<gate_transition> out;
    for (const auto& tr : acknowledged) {
      if (tr.phase == ph) out.push_back(tr);
    }
    return out;
  }
};

namespace detail {

struct observed_transition {
  int gate = -1;
  int time = 0;
  edge dir = edge::rise;
};

inline void classify_phase(const netlist_view& view, const phase_trace& trace, phase_kind ph,
                           std::vector<gate_transition>& acknowledged,
                           std::vector<gate_transition>& orphans) {
  std::map<int, observed_transition> switched;  // gate index -> transition
  for (const auto& ev : trace.events) {
    const int ni = view.net_index(ev.net);
    const int gi = view.driver_gate(ni);
    if (gi < 0) continue;  // primary input rail
    if (switched.count(gi)) {
      throw std::logic_error("gate '" + ev.net + "' switched twice in one phase");
    }
    switched[gi] = observed_transition{gi, ev.time, ev.dir};
  }

  std::vector<observed_transition> order;
  for (const auto& [gi, tr] : switched) order.push_back(tr);
  std::sort(order.begin(), order.end(),
            [](const observed_transition& a, const observed_transition& b) { return a.time > b.time; });

  std::map<int, bool> acked;
  for (const auto& tr : order) {  // latest first, so consumers are already decided
    const int out = view.output_of(tr.gate);
    bool ok = false;
    if (view.is_primary_output(out)) {
      ok = true;
    } else {
      const auto& consumers = view.consumers(out);
      auto branch_acked = [&](int gi) {
        auto it = switched.find(gi);
        return it != switched.end() && it->second.time > tr.time && acked.at(gi);
      };
      if (consumers.size() == 1) {
        ok = branch_acked(consumers.front());
      } else if (!consumers.empty() && view.isochronic(out)) {
        ok = std::any_of(consumers.begin(), consumers.end(), branch_acked);
      } else if (!consumers.empty()) {
        ok = std::all_of(consumers.begin(), consumers.end(), branch_acked);
      }
    }
    acked[tr.gate] = ok;
  }

  std::vector<observed_transition> report_order = order;
  std::sort(report_order.begin(), report_order.end(),
            [&view](const observed_transition& a, const observed_transition& b) {
              if (a.time != b.time) return a.time < b.time;
              return view.decl().gates[static_cast<std::size_t>(a.gate)].id <
                     view.decl().gates[static_cast<std::size_t>(b.gate)].id;
            });
  for (const auto& tr : report_order) {
    gate_transition out{view.decl().gates[static_cast<std::size_t>(tr.gate)].id, tr.dir, ph, tr.time};
    (acked.at(tr.gate) ? acknowledged : orphans).push_back(std::move(out));
  }
}

}  // namespace detail

//! Simulates one transaction and classifies every gate transition of
//! both phases as acknowledged or orphaned.
inline orphan_report detect_orphans(const netlist& nl, const codeword& cw) {
  const netlist_view view(nl);
  const transaction_trace tx = simulate_transaction(nl, cw);
  orphan_report report{cw, {}, {}, ""};
  detail::classify_phase(view, tx.set_phase, phase_kind::set, report.acknowledged, report.orphans);
  detail::classify_phase(view, tx.reset_phase, phase_kind::reset, report.acknowledged, report.orphans);

  const auto set_acks = report.phase_acknowledged(phase_kind::set);
  const auto set_orphans = report.phase_orphans(phase_kind::set);
  std::optional<gate_transition> first;
  for (const auto& list : {set_acks, set_orphans}) {
    for (const auto& tr : list) {
      if (!first || tr.time < first->time || (tr.time == first->time && tr.gate_id < first->gate_id)) {
        first = tr;
      }
    }
  }
  if (first) report.first_gate = first->gate_id;
  return report;
}

//! Orphan reports for every valid codeword, in ascending minterm order
//! (the order the comparison table prints). The enumeration is 2^n, so
//! n is capped.
inline std::vector<orphan_report> orphan_summary(const netlist& nl, int enumeration_cap = 10) {
  if (nl.n > enumeration_cap) {
    throw std::invalid_argument("orphan_summary would enumerate 2^" + std::to_string(nl.n) +
                                " codewords; the cap is n <= " + std::to_string(enumeration_cap));
  }
  std::vector<orphan_report> reports;
  for (std::uint32_t index = 0; index < (std::uint32_t{1} << nl.n); ++index) {
    reports.push_back(detect_orphans(nl, codeword::from_index(nl.n, index)));
  }
  return reports;
}

enum class io_class { strong, weak, early };

inline std::string to_string(io_class c) {
  switch (c) {
    case io_class::strong: return "strong";
    case io_class::weak: return "weak";
    case io_class::early: return "early";
  }
  throw std::logic_error("corrupt io_class");
}

enum class subset_mode {
  maximal,     // test only subsets missing exactly one variable; sound and
               // complete because produced outputs grow monotonically with
               // the applied subset
  exhaustive   // test every proper subset (kept for cross-checking)
};

struct early_witness {
  codeword cw;
  std::vector<int> subset;  // variables applied (set) or retracted (reset)
  int output_index = 0;
  phase_kind phase = phase_kind::set;
};

struct indication_report {
  io_class cls = io_class::strong;
  bool early_set = false;    // some codeword produces every output from a proper input subset
  bool early_reset = false;  // some codeword resets every output from a proper retraction subset
  std::vector<early_witness> witnesses;  // first witness found per (output, phase)
};

//! Classifies input/output indication by driving proper input subsets:
//! strong circuits never produce or reset an output before the final
//! input event, early circuits complete some codeword entirely from a
//! subset, weak circuits sit in between (some outputs early, at least
//! one always waits).
inline indication_report classify_indication(const netlist& nl,
                                             subset_mode mode = subset_mode::maximal) {
  const netlist_view view(nl);
  const int n = nl.n;
  const std::size_t outputs = view.output_pairs().size();

  std::vector<std::vector<int>> subsets;
  if (mode == subset_mode::maximal) {
    for (int skip = 1; skip <= n; ++skip) {
      std::vector<int> s;
      for (int var = 1; var <= n; ++var) {
        if (var != skip) s.push_back(var);
      }
      if (!s.empty()) subsets.push_back(std::move(s));
    }
  } else {
    for (std::uint32_t mask = 1; mask + 1 < (std::uint32_t{1} << n); ++mask) {
      std::vector<int> s;
      for (int var = 1; var <= n; ++var) {
        if (mask & (std::uint32_t{1} << (var - 1))) s.push_back(var);
      }
      subsets.push_back(std::move(s));
    }
  }

  indication_report report;
  bool any_early = false;
  std::set<std::pair<std::size_t, phase_kind>> witnessed;

  for (std::uint32_t index = 0; index < (std::uint32_t{1} << n); ++index) {
    const codeword cw = codeword::from_index(n, index);
    for (const auto& subset : subsets) {
      const phase_trace applied = apply_partial(nl, cw, subset);
      std::size_t produced = 0;
      for (std::size_t o = 0; o < outputs; ++o) {
        const auto& [r1, r0] = view.output_pairs()[o];
        const bool up = applied.final_value(view.net_id(r1)) || applied.final_value(view.net_id(r0));
        if (!up) continue;
        ++produced;
        any_early = true;
        if (witnessed.emplace(o, phase_kind::set).second) {
          report.witnesses.push_back(
              early_witness{cw, subset, static_cast<int>(o), phase_kind::set});
        }
      }
      if (produced == outputs) report.early_set = true;

      const phase_trace retracted = retract_partial(nl, cw, subset);
      std::size_t reset_count = 0;
      for (std::size_t o = 0; o < outputs; ++o) {
        const auto& [r1, r0] = view.output_pairs()[o];
        const bool down =
            !retracted.final_value(view.net_id(r1)) && !retracted.final_value(view.net_id(r0));
        if (!down) continue;
        ++reset_count;
        any_early = true;
        if (witnessed.emplace(o, phase_kind::reset).second) {
          report.witnesses.push_back(
              early_witness{cw, subset, static_cast<int>(o), phase_kind::reset});
        }
      }
      if (reset_count == outputs) report.early_reset = true;
    }
  }

  if (!any_early) {
    report.cls = io_class::strong;
  } else if (report.early_set || report.early_reset) {
    report.cls = io_class::early;
  } else {
    report.cls = io_class::weak;
  }
  return report;
}

struct gate_count {
  gate_kind kind = gate_kind::c_element;
  int arity = 0;
  int count = 0;

  friend bool operator==(const gate_count&, const gate_count&) = default;
};

//! Cost figures. Sections are optional because covers, factored
//! expressions and netlists each support a different subset; combine()
//! assembles a full report from several artifacts.
struct cost_report {
  std::optional<int> minterm_count;           // cover pair: |rail1| + |rail0|
  std::optional<int> naive_top_level_terms;   // expression pair: visible sum terms
  bool naive_underestimates = false;          // a product of sums hides expanded terms
  std::optional<int> literal_count;
  bool has_netlist = false;
  std::vector<gate_count> gate_counts;        // by kind then arity
  int c_element_count = 0;
  int or_gate_count = 0;
  int total_gate_inputs = 0;
  int logic_depth = 0;
};

inline cost_report estimate_cost(const cover_pair& covers) {
  cost_report r;
  r.minterm_count = static_cast<int>(covers.rail1.terms.size() + covers.rail0.terms.size());
  int literals = 0;
  for (const auto* cover : {&covers.rail1, &covers.rail0}) {
    for (const auto& term : cover->terms) literals += static_cast<int>(term.size());
  }
  r.literal_count = literals;
  return r;
}

inline cost_report estimate_cost(const factored_expr& on1, const factored_expr& on0) {
  cost_report r;
  r.naive_top_level_terms = top_level_terms(on1) + top_level_terms(on0);
  r.naive_underestimates = contains_product_of_sums(on1) || contains_product_of_sums(on0);
  r.literal_count = literal_count(on1) + literal_count(on0);
  return r;
}

inline cost_report estimate_cost(const netlist& nl) {
  cost_report r;
  r.has_netlist = true;
  std::map<std::pair<int, int>, int> counts;  // (kind order, arity) -> count
  for (const auto& g : nl.gates) {
    const int kind_key = g.kind == gate_kind::c_element ? 0 : 1;
    ++counts[{kind_key, static_cast<int>(g.inputs.size())}];
    if (g.kind == gate_kind::c_element) {
      ++r.c_element_count;
    } else {
      ++r.or_gate_count;
    }
    r.total_gate_inputs += static_cast<int>(g.inputs.size());
  }
  for (const auto& [key, count] : counts) {
    r.gate_counts.push_back(
        gate_count{key.first == 0 ? gate_kind::c_element : gate_kind::or_gate, key.second, count});
  }

  const netlist_view view(nl);
  std::map<int, int> depth;  // net index -> gates on longest path from inputs
  for (const auto& [var, pair] : view.input_pairs()) {
    depth[pair.first] = 0;
    depth[pair.second] = 0;
  }
  bool progress = true;
  while (progress) {
    progress = false;
    for (std::size_t gi = 0; gi < nl.gates.size(); ++gi) {
      int best = -1;
      bool all_known = true;
      for (int ni : view.inputs_of(static_cast<int>(gi))) {
        auto it = depth.find(ni);
        if (it == depth.end()) {
          all_known = false;
          break;
        }
        best = std::max(best, it->second);
      }
      if (!all_known) continue;
      const int out = view.output_of(static_cast<int>(gi));
      auto it = depth.find(out);
      if (it == depth.end() || it->second < best + 1) {
        depth[out] = best + 1;
        progress = true;
      }
    }
  }
  for (const auto& [r1, r0] : view.output_pairs()) {
    for (int ni : {r1, r0}) {
      auto it = depth.find(ni);
      if (it != depth.end()) r.logic_depth = std::max(r.logic_depth, it->second);
    }
  }
  return r;
}

inline cost_report combine(cost_report base, const cost_report& extra) {
  if (extra.minterm_count) base.minterm_count = extra.minterm_count;
  if (extra.naive_top_level_terms) {
    base.naive_top_level_terms = extra.naive_top_level_terms;
    base.naive_underestimates = extra.naive_underestimates;
  }
  if (extra.literal_count && !base.literal_count) base.literal_count = extra.literal_count;
  if (extra.has_netlist) {
    base.has_netlist = true;
    base.gate_counts = extra.gate_counts;
    base.c_element_count = extra.c_element_count;
    base.or_gate_count = extra.or_gate_count;
    base.total_gate_inputs = extra.total_gate_inputs;
    base.logic_depth = extra.logic_depth;
  }
  return base;
}

}  // namespace qdi
