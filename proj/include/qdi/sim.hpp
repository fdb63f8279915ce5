//! \file sim.hpp
//! \brief Deterministic unit-delay event simulation of one four-phase
//!        return-to-zero transaction: a set phase that raises the
//!        codeword's active rails from the all-low state, and a reset
//!        phase that drops them again. Every gate output changes exactly
//!        one time unit after the inputs that caused it; fork branches
//!        see their net's transition in the same step.

#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qdi/dual_rail.hpp"
#include "qdi/netlist.hpp"

namespace qdi {

enum class edge { rise, fall };
enum class phase_kind { set, reset };

inline std::string to_string(edge e) { return e == edge::rise ? "rise" : "fall"; }
inline std::string to_string(phase_kind p) { return p == phase_kind::set ? "set" : "reset"; }

inline phase_kind parse_phase(const std::string& s) {
  if (s == "set") return phase_kind::set;
  if (s == "reset") return phase_kind::reset;
  throw std::invalid_argument("unknown phase '" + s + "' (expected set or reset)");
}

struct sim_event {
  int time = 0;
  std::string net;
  edge dir = edge::rise;
  phase_kind phase = phase_kind::set;

  friend bool operator==(const sim_event&, const sim_event&) = default;
};

struct phase_trace {
  codeword applied;  // the transaction's codeword (spacer included)
  phase_kind phase = phase_kind::set;
  std::vector<sim_event> events;            // time-ordered, ties by net id
  std::map<std::string, bool> final_nets;   // every declared net after quiescence
  bool quiescent = false;

  bool final_value(const std::string& net) const {
    auto it = final_nets.find(net);
    if (it == final_nets.end()) throw std::invalid_argument("no net '" + net + "' in trace");
    return it->second;
  }
};

struct transaction_trace {
  phase_trace set_phase;
  phase_trace reset_phase;
};

namespace detail {

//! Runs one phase to quiescence. `changes` lists the net values to apply
//! at time 0. During a set phase every transition must rise, during a
//! reset phase fall; anything else is a hazard. The step bound flags
//! oscillation, which a validated acyclic netlist cannot reach.
inline phase_trace run_phase(const netlist_view& view, std::vector<char>& state, codeword applied,
                             phase_kind phase, std::vector<std::pair<int, bool>> changes) {
  phase_trace trace{std::move(applied), phase, {}, {}, false};
  const int max_time = 4 * static_cast<int>(view.decl().gates.size()) + 2;

  int t = 0;
  while (!changes.empty()) {
    if (t > max_time) {
      throw std::runtime_error("oscillation: netlist still switching at t=" + std::to_string(t) +
                               " (bound " + std::to_string(max_time) + " steps)");
    }
    std::sort(changes.begin(), changes.end(), [&view](const auto& a, const auto& b) {
      return view.net_id(a.first) < view.net_id(b.first);
    });
    std::vector<int> switched;
    for (const auto& [ni, value] : changes) {
      if ((state[static_cast<std::size_t>(ni)] != 0) == value) continue;
      const edge dir = value ? edge::rise : edge::fall;
      if ((phase == phase_kind::set) != (dir == edge::rise)) {
        throw std::runtime_error("hazard: net '" + view.net_id(ni) + "' " + to_string(dir) +
                                 "s at t=" + std::to_string(t) + " during the " + to_string(phase) +
                                 " phase");
      }
      state[static_cast<std::size_t>(ni)] = value ? 1 : 0;
      trace.events.push_back(sim_event{t, view.net_id(ni), dir, phase});
      switched.push_back(ni);
    }
    std::vector<int> affected;
    for (int ni : switched) {
      for (int gi : view.consumers(ni)) affected.push_back(gi);
    }
    std::sort(affected.begin(), affected.end());
    affected.erase(std::unique(affected.begin(), affected.end()), affected.end());
    changes.clear();
    for (int gi : affected) {
      const bool next = view.eval_gate(gi, state);
      if ((state[static_cast<std::size_t>(view.output_of(gi))] != 0) != next) {
        changes.emplace_back(view.output_of(gi), next);
      }
    }
    ++t;
  }

  for (std::size_t ni = 0; ni < view.net_count(); ++ni) {
    trace.final_nets[view.net_id(static_cast<int>(ni))] = state[ni] != 0;
  }
  trace.quiescent = true;
  return trace;
}

inline std::vector<std::pair<int, bool>> rail_changes(const netlist_view& view, const codeword& cw,
                                                      bool value) {
  std::vector<std::pair<int, bool>> changes;
  for (int ni : view.active_rails(cw)) changes.emplace_back(ni, value);
  return changes;
}

}  // namespace detail

//! One full transaction: raise the codeword's rails at t=0 from the
//! all-low quiescent state, settle, then drop them at t=0 of the reset
//! phase and settle again. After reset every net (and with it every
//! C-element state) is back at 0; the spacer produces two empty phases.
inline transaction_trace simulate_transaction(const netlist& nl, const codeword& cw) {
  const netlist_view view(nl);
  std::vector<char> state(view.net_count(), 0);
  phase_trace set_trace =
      detail::run_phase(view, state, cw, phase_kind::set, detail::rail_changes(view, cw, true));
  phase_trace reset_trace =
      detail::run_phase(view, state, cw, phase_kind::reset, detail::rail_changes(view, cw, false));
  for (std::size_t ni = 0; ni < view.net_count(); ++ni) {
    if (state[ni]) {
      throw std::runtime_error("return-to-zero incomplete: net '" +
                               view.net_id(static_cast<int>(ni)) + "' still high after reset");
    }
  }
  return transaction_trace{std::move(set_trace), std::move(reset_trace)};
}

//! Set phase driven by only the rails of `subset_vars` (each 1..n, no
//! duplicates), from the all-low state. Shows what the circuit produces
//! before the remaining inputs arrive.
inline phase_trace apply_partial(const netlist& nl, const codeword& cw,
                                 const std::vector<int>& subset_vars) {
  if (cw.is_spacer()) throw std::invalid_argument("apply_partial requires a data codeword");
  const netlist_view view(nl);
  std::vector<bool> seen(static_cast<std::size_t>(cw.n()) + 1, false);
  std::vector<std::pair<int, bool>> changes;
  for (int var : subset_vars) {
    if (var < 1 || var > cw.n() || seen[static_cast<std::size_t>(var)]) {
      throw std::invalid_argument("bad variable subset entry " + std::to_string(var));
    }
    seen[static_cast<std::size_t>(var)] = true;
    for (const auto& [v, pair] : view.input_pairs()) {
      if (v == var) changes.emplace_back(cw.value(var) ? pair.first : pair.second, true);
    }
  }
  std::vector<char> state(view.net_count(), 0);
  return detail::run_phase(view, state, cw, phase_kind::set, std::move(changes));
}

//! Reset phase that retracts only the rails of `retract_vars`, starting
//! from the quiescent state after the full codeword was applied. Shows
//! what resets before the remaining inputs withdraw.
inline phase_trace retract_partial(const netlist& nl, const codeword& cw,
                                   const std::vector<int>& retract_vars) {
  if (cw.is_spacer()) throw std::invalid_argument("retract_partial requires a data codeword");
  const netlist_view view(nl);
  std::vector<char> state(view.net_count(), 0);
  detail::run_phase(view, state, cw, phase_kind::set, detail::rail_changes(view, cw, true));

  std::vector<bool> seen(static_cast<std::size_t>(cw.n()) + 1, false);
  std::vector<std::pair<int, bool>> changes;
  for (int var : retract_vars) {
    if (var < 1 || var > cw.n() || seen[static_cast<std::size_t>(var)]) {
      throw std::invalid_argument("bad variable subset entry " + std::to_string(var));
    }
    seen[static_cast<std::size_t>(var)] = true;
    for (const auto& [v, pair] : view.input_pairs()) {
      if (v == var) changes.emplace_back(cw.value(var) ? pair.first : pair.second, false);
    }
  }
  return detail::run_phase(view, state, cw, phase_kind::reset, std::move(changes));
}

//! One line per event: `t=<k> <net> <rise|fall> <phase>`.
inline std::string render(const phase_trace& trace) {
  std::string out;
  for (const auto& ev : trace.events) {
    out += "t=" + std::to_string(ev.time) + " " + ev.net + " " + to_string(ev.dir) + " " +
           to_string(ev.phase) + "\n";
  }
  return out;
}

inline std::string render(const transaction_trace& tx) {
  return render(tx.set_phase) + render(tx.reset_phase);
}

}  // namespace qdi
