//! \file netlist.hpp
//! \brief Gate-level netlists of Muller C-elements and OR gates over
//!        dual-rail nets, with structural validation and zero-delay
//!        fixpoint evaluation.
//!
//! A netlist is plain data: declared nets, gates, and the pairing of nets
//! into per-variable inputs and per-function outputs. Drivers and fanout
//! are derived, never stored, so a netlist cannot disagree with itself.
//! Netlists are treated as immutable once built; every evaluation and
//! analysis entry point works on const references and keeps its own
//! state, so concurrent analyses of the same netlist are safe.

#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "qdi/cover.hpp"
#include "qdi/dual_rail.hpp"

namespace qdi {

enum class gate_kind { c_element, or_gate };

inline std::string to_string(gate_kind kind) {
  return kind == gate_kind::c_element ? "C" : "OR";
}

//! A Muller C-element or an OR gate. The C-element drives 1 when all
//! inputs are 1, drives 0 when all are 0, and holds its output otherwise.
struct gate {
  std::string id;
  gate_kind kind = gate_kind::c_element;
  std::vector<std::string> inputs;  // net ids, ordered
  std::string output;               // net id

  friend bool operator==(const gate&, const gate&) = default;
};

struct net_decl {
  std::string id;
  bool isochronic = false;  // set on fork nets whose branches may assume
                            // equal delay; single-fanout nets ignore it

  friend bool operator==(const net_decl&, const net_decl&) = default;
};

struct input_pair {
  int var = 0;
  std::string rail1;
  std::string rail0;

  friend bool operator==(const input_pair&, const input_pair&) = default;
};

struct output_pair {
  std::string name;
  std::string rail1;
  std::string rail0;

  friend bool operator==(const output_pair&, const output_pair&) = default;
};

struct netlist {
  int n = 0;  // encoded input variables 1..n
  std::vector<input_pair> inputs;
  std::vector<output_pair> outputs;
  std::vector<net_decl> nets;
  std::vector<gate> gates;

  friend bool operator==(const netlist&, const netlist&) = default;
};

struct diagnostic {
  std::string code;
  std::string message;

  friend bool operator==(const diagnostic&, const diagnostic&) = default;
};

//! Structural checks. Returns an empty list when the netlist is sound;
//! otherwise one diagnostic per problem, in a deterministic order, each
//! naming the offending gate or net. Nothing is thrown: callers decide
//! how fatal a finding is.
inline std::vector<diagnostic> validate(const netlist& nl) {
  std::vector<diagnostic> out;
  auto add = [&out](std::string code, std::string message) {
    out.push_back(diagnostic{std::move(code), std::move(message)});
  };

  std::map<std::string, int> declared;  // net id -> index
  for (std::size_t i = 0; i < nl.nets.size(); ++i) {
    if (!declared.emplace(nl.nets[i].id, static_cast<int>(i)).second) {
      add("duplicate_net", "net '" + nl.nets[i].id + "' declared more than once");
    }
  }
  auto is_declared = [&declared](const std::string& id) { return declared.count(id) > 0; };

  if (nl.n < 1) add("malformed_io", "netlist must declare n >= 1 input variables");
  std::set<int> seen_vars;
  for (const auto& ip : nl.inputs) {
    if (ip.var < 1 || ip.var > nl.n) {
      add("malformed_io", "input pair declared for out-of-range variable " + std::to_string(ip.var));
    } else if (!seen_vars.insert(ip.var).second) {
      add("malformed_io", "variable " + std::to_string(ip.var) + " has more than one input pair");
    }
    for (const auto& rail : {ip.rail1, ip.rail0}) {
      if (!is_declared(rail)) add("undeclared_net", "input rail '" + rail + "' is not a declared net");
    }
  }
  for (int var = 1; var <= nl.n; ++var) {
    if (!seen_vars.count(var)) {
      add("malformed_io", "variable " + std::to_string(var) + " has no input pair");
    }
  }
  if (nl.outputs.empty()) add("malformed_io", "netlist declares no output pair");
  for (const auto& op : nl.outputs) {
    for (const auto& rail : {op.rail1, op.rail0}) {
      if (!is_declared(rail)) {
        add("undeclared_net", "output rail '" + rail + "' of '" + op.name + "' is not a declared net");
      }
    }
  }

  std::set<std::string> gate_ids;
  std::map<std::string, std::string> driver;  // net -> gate id
  std::set<std::string> input_rails;
  for (const auto& ip : nl.inputs) {
    input_rails.insert(ip.rail1);
    input_rails.insert(ip.rail0);
  }
  for (const auto& g : nl.gates) {
    if (!gate_ids.insert(g.id).second) {
      add("duplicate_gate", "gate '" + g.id + "' declared more than once");
    }
    if (g.inputs.size() < 2) {
      add("arity", "gate '" + g.id + "' has arity " + std::to_string(g.inputs.size()) +
                       " but gates require at least 2 inputs");
    }
    for (const auto& in : g.inputs) {
      if (!is_declared(in)) add("undeclared_net", "gate '" + g.id + "' reads undeclared net '" + in + "'");
    }
    if (!is_declared(g.output)) {
      add("undeclared_net", "gate '" + g.id + "' drives undeclared net '" + g.output + "'");
    } else if (input_rails.count(g.output)) {
      add("multiple_drivers", "gate '" + g.id + "' drives input rail '" + g.output + "'");
    } else {
      auto [it, fresh] = driver.emplace(g.output, g.id);
      if (!fresh) {
        add("multiple_drivers", "net '" + g.output + "' driven by both '" + it->second + "' and '" + g.id + "'");
      }
    }
  }

  std::set<std::string> output_rails;
  for (const auto& op : nl.outputs) {
    output_rails.insert(op.rail1);
    output_rails.insert(op.rail0);
  }
  std::map<std::string, int> fanout;
  for (const auto& g : nl.gates) {
    for (const auto& in : g.inputs) ++fanout[in];
  }
  for (const auto& nd : nl.nets) {
    const bool driven = input_rails.count(nd.id) || driver.count(nd.id);
    if (!driven) add("undriven_net", "net '" + nd.id + "' has no driver");
    if (fanout[nd.id] == 0 && !output_rails.count(nd.id)) {
      add("dangling_net", "net '" + nd.id + "' has no consumer and is not a primary output");
    }
  }

  // cycle check over the gate graph (gate -> gates reading its output)
  std::map<std::string, std::vector<std::string>> consumers_of_net;
  for (const auto& g : nl.gates) {
    for (const auto& in : g.inputs) consumers_of_net[in].push_back(g.id);
  }
  std::map<std::string, int> indegree;
  std::map<std::string, std::vector<std::string>> succ;
  for (const auto& g : nl.gates) indegree[g.id] = 0;
  for (const auto& g : nl.gates) {
    for (const auto& c : consumers_of_net[g.output]) {
      succ[g.id].push_back(c);
      ++indegree[c];
    }
  }
  std::vector<std::string> ready;
  for (const auto& g : nl.gates) {
    if (indegree[g.id] == 0) ready.push_back(g.id);
  }
  std::size_t visited = 0;
  while (!ready.empty()) {
    const std::string id = ready.back();
    ready.pop_back();
    ++visited;
    for (const auto& next : succ[id]) {
      if (--indegree[next] == 0) ready.push_back(next);
    }
  }
  if (visited != nl.gates.size()) {
    for (const auto& g : nl.gates) {
      if (indegree[g.id] > 0) {
        add("cycle", "gate '" + g.id + "' lies on a combinational cycle");
        break;
      }
    }
  }

  // reachability from the input rails (only meaningful when acyclic)
  if (visited == nl.gates.size()) {
    std::set<std::string> reachable = input_rails;
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& g : nl.gates) {
        if (reachable.count(g.output)) continue;
        bool all = !g.inputs.empty();
        for (const auto& in : g.inputs) all = all && reachable.count(in) > 0;
        if (all) {
          reachable.insert(g.output);
          changed = true;
        }
      }
    }
    for (const auto& nd : nl.nets) {
      if (!reachable.count(nd.id) && driver.count(nd.id)) {
        add("unreachable_net", "net '" + nd.id + "' is not reachable from the input rails");
      }
    }
  }

  return out;
}

//! Index structures shared by evaluation, simulation and analysis. Built
//! once per netlist use; construction throws on netlists that do not
//! validate cleanly enough to index (undeclared or multiply-driven nets).
class netlist_view {
public:
  explicit netlist_view(const netlist& nl) : nl_(&nl) {
    nets_.reserve(nl.nets.size());
    for (const auto& nd : nl.nets) {
      if (!index_.emplace(nd.id, static_cast<int>(nets_.size())).second) {
        throw std::invalid_argument("net '" + nd.id + "' declared more than once");
      }
      nets_.push_back(&nd);
    }
    driver_.assign(nets_.size(), -1);
    consumers_.assign(nets_.size(), {});
    gate_inputs_.resize(nl.gates.size());
    gate_output_.resize(nl.gates.size());
    for (std::size_t gi = 0; gi < nl.gates.size(); ++gi) {
      const auto& g = nl.gates[gi];
      for (const auto& in : g.inputs) {
        const int ni = net_index(in);
        gate_inputs_[gi].push_back(ni);
        consumers_[static_cast<std::size_t>(ni)].push_back(static_cast<int>(gi));
      }
      const int out = net_index(g.output);
      if (driver_[static_cast<std::size_t>(out)] != -1) {
        throw std::invalid_argument("net '" + g.output + "' has multiple drivers");
      }
      driver_[static_cast<std::size_t>(out)] = static_cast<int>(gi);
      gate_output_[gi] = out;
    }
    for (const auto& ip : nl.inputs) {
      input_pairs_.emplace_back(ip.var, std::pair<int, int>{net_index(ip.rail1), net_index(ip.rail0)});
    }
    std::sort(input_pairs_.begin(), input_pairs_.end());
    for (const auto& op : nl.outputs) {
      output_pairs_.push_back({net_index(op.rail1), net_index(op.rail0)});
      output_nets_.insert(net_index(op.rail1));
      output_nets_.insert(net_index(op.rail0));
    }
  }

  const netlist& decl() const { return *nl_; }
  std::size_t net_count() const { return nets_.size(); }

  int net_index(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) throw std::invalid_argument("reference to undeclared net '" + id + "'");
    return it->second;
  }

  const std::string& net_id(int index) const { return nets_[static_cast<std::size_t>(index)]->id; }
  bool isochronic(int index) const { return nets_[static_cast<std::size_t>(index)]->isochronic; }
  int driver_gate(int net) const { return driver_[static_cast<std::size_t>(net)]; }
  const std::vector<int>& consumers(int net) const { return consumers_[static_cast<std::size_t>(net)]; }
  const std::vector<int>& inputs_of(int gate) const { return gate_inputs_[static_cast<std::size_t>(gate)]; }
  int output_of(int gate) const { return gate_output_[static_cast<std::size_t>(gate)]; }
  bool is_primary_output(int net) const { return output_nets_.count(net) > 0; }

  //! (rail1, rail0) net indices per input variable, ascending variable.
  const std::vector<std::pair<int, std::pair<int, int>>>& input_pairs() const { return input_pairs_; }
  //! (rail1, rail0) net indices per output pair, declaration order.
  const std::vector<std::pair<int, int>>& output_pairs() const { return output_pairs_; }

  //! Net indices raised by a codeword (active rails; spacer raises none).
  std::vector<int> active_rails(const codeword& cw) const {
    if (cw.n() != nl_->n) {
      throw std::invalid_argument("codeword arity " + std::to_string(cw.n()) +
                                  " does not match netlist arity " + std::to_string(nl_->n));
    }
    std::vector<int> rails;
    if (cw.is_spacer()) return rails;
    for (const auto& [var, pair] : input_pairs_) {
      rails.push_back(cw.value(var) ? pair.first : pair.second);
    }
    return rails;
  }

  bool eval_gate(int gi, const std::vector<char>& state) const {
    const auto& ins = gate_inputs_[static_cast<std::size_t>(gi)];
    const bool current = state[static_cast<std::size_t>(gate_output_[static_cast<std::size_t>(gi)])] != 0;
    if (nl_->gates[static_cast<std::size_t>(gi)].kind == gate_kind::or_gate) {
      for (int ni : ins) {
        if (state[static_cast<std::size_t>(ni)]) return true;
      }
      return false;
    }
    bool all1 = true, all0 = true;
    for (int ni : ins) {
      if (state[static_cast<std::size_t>(ni)]) all0 = false; else all1 = false;
    }
    if (all1) return true;
    if (all0) return false;
    return current;  // C-element holds
  }

private:
  const netlist* nl_;
  std::unordered_map<std::string, int> index_;
  std::vector<const net_decl*> nets_;
  std::vector<int> driver_;
  std::vector<std::vector<int>> consumers_;
  std::vector<std::vector<int>> gate_inputs_;
  std::vector<int> gate_output_;
  std::vector<std::pair<int, std::pair<int, int>>> input_pairs_;
  std::vector<std::pair<int, int>> output_pairs_;
  std::set<int> output_nets_;
};

//! Zero-delay functional evaluation: input rails are pinned to the
//! codeword (spacer pins everything low), every other net and every
//! C-element state starts at 0, and gates are swept to a fixpoint.
//! Returns one rail pair per declared output. Acyclic monotone netlists
//! always converge; the sweep bound only guards corrupt inputs.
inline std::vector<rail_pair> eval_netlist(const netlist& nl, const codeword& cw) {
  const netlist_view view(nl);
  std::vector<char> state(view.net_count(), 0);
  for (int ni : view.active_rails(cw)) state[static_cast<std::size_t>(ni)] = 1;

  const std::size_t max_sweeps = 2 * nl.gates.size() + 2;
  bool changed = true;
  std::size_t sweeps = 0;
  while (changed) {
    if (sweeps++ > max_sweeps) {
      throw std::runtime_error("netlist evaluation did not converge within " +
                               std::to_string(max_sweeps) + " sweeps");
    }
    changed = false;
    for (std::size_t gi = 0; gi < nl.gates.size(); ++gi) {
      const bool next = view.eval_gate(static_cast<int>(gi), state);
      auto& slot = state[static_cast<std::size_t>(view.output_of(static_cast<int>(gi)))];
      if ((slot != 0) != next) {
        slot = next ? 1 : 0;
        changed = true;
      }
    }
  }

  std::vector<rail_pair> out;
  for (const auto& [r1, r0] : view.output_pairs()) {
    out.push_back(rail_pair{state[static_cast<std::size_t>(r1)] != 0,
                            state[static_cast<std::size_t>(r0)] != 0});
  }
  return out;
}

//! Incremental construction helper. Declares nets on first use, keeps
//! declaration order deterministic, and wires the standard X<var><rail>
//! input rails.
class netlist_builder {
public:
  explicit netlist_builder(int n) {
    nl_.n = n;
    for (int var = 1; var <= n; ++var) {
      const std::string r1 = rail_name(rail_literal{var, 1});
      const std::string r0 = rail_name(rail_literal{var, 0});
      declare_net(r1);
      declare_net(r0);
      nl_.inputs.push_back(input_pair{var, r1, r0});
    }
  }

  //! Adds a gate whose output net is named after the gate unless an
  //! explicit net id is given.
  std::string add_gate(gate_kind kind, const std::string& id, const std::vector<std::string>& inputs,
                       std::optional<std::string> output_net = std::nullopt) {
    const std::string out = output_net.value_or(id);
    declare_net(out);
    for (const auto& in : inputs) declare_net(in);
    nl_.gates.push_back(gate{id, kind, inputs, out});
    return out;
  }

  void mark_isochronic(const std::string& net_id) {
    for (auto& nd : nl_.nets) {
      if (nd.id == net_id) {
        nd.isochronic = true;
        return;
      }
    }
    throw std::invalid_argument("cannot mark undeclared net '" + net_id + "' isochronic");
  }

  void set_output(const std::string& name, const std::string& rail1, const std::string& rail0) {
    declare_net(rail1);
    declare_net(rail0);
    nl_.outputs.push_back(output_pair{name, rail1, rail0});
  }

  netlist build() && { return std::move(nl_); }

private:
  void declare_net(const std::string& id) {
    if (seen_.insert(id).second) nl_.nets.push_back(net_decl{id, false});
  }

  netlist nl_;
  std::set<std::string> seen_;
};

//! OR-merges `nets` into a single net, numbering gates OR<k> from
//! `or_counter`. A fan-in cap of 0 emits one wide gate; otherwise the
//! merge becomes a tree of gates with at most `fanin_cap` inputs each.
//! A single input is returned unchanged (no 1-input gates exist).
inline std::string or_merge(netlist_builder& b, std::vector<std::string> nets, int fanin_cap,
                            int& or_counter) {
  if (nets.empty()) throw std::invalid_argument("cannot OR-merge zero nets");
  if (fanin_cap == 1 || fanin_cap < 0) throw std::invalid_argument("OR fan-in cap must be 0 or >= 2");
  while (nets.size() > 1) {
    const std::size_t chunk = fanin_cap == 0 ? nets.size() : static_cast<std::size_t>(fanin_cap);
    std::vector<std::string> next;
    for (std::size_t i = 0; i < nets.size(); i += chunk) {
      const std::size_t end = std::min(i + chunk, nets.size());
      if (end - i == 1) {
        next.push_back(nets[i]);  // odd leftover passes through
        continue;
      }
      std::vector<std::string> group(nets.begin() + static_cast<std::ptrdiff_t>(i),
                                     nets.begin() + static_cast<std::ptrdiff_t>(end));
      next.push_back(b.add_gate(gate_kind::or_gate, "OR" + std::to_string(or_counter++), group));
    }
    nets = std::move(next);
  }
  return nets.front();
}

}  // namespace qdi
