//! \file fixtures.hpp
//! \brief The three built-in reference circuits for the dual-rail
//!        3-input AND, used throughout the analysis reports and tests:
//!
//!   fig3  full minterm form: one 3-input C-element per minterm, the
//!         false rail merged by OR. Indicating and orphan-free.
//!   fig4  factored form sharing OR gates across products. Smaller, but
//!         the OR outputs are not acknowledged on every codeword, so the
//!         circuit exhibits gate orphans.
//!   fig5  safe decomposition: paired minterms share a 2-input C-element
//!         whose output forks isochronically into per-rail C-elements.
//!         Orphan-free at roughly the factored cost.
//!
//! Gate ids follow the published figures so analysis output can be read
//! against them. The false-rail merge defaults to one wide OR gate; a
//! fan-in cap rebuilds it as a tree, which changes no orphan verdict.

#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "qdi/netlist.hpp"

namespace qdi {

namespace detail {

inline netlist build_fig3(int or_fanin_cap) {
  netlist_builder b(3);
  // C1 joins the rails of the single true minterm; C2..C8 walk the false
  // minterms in ascending index order.
  b.add_gate(gate_kind::c_element, "C1", {"X31", "X21", "X11"});
  b.add_gate(gate_kind::c_element, "C2", {"X30", "X20", "X10"});
  b.add_gate(gate_kind::c_element, "C3", {"X30", "X20", "X11"});
  b.add_gate(gate_kind::c_element, "C4", {"X30", "X21", "X10"});
  b.add_gate(gate_kind::c_element, "C5", {"X30", "X21", "X11"});
  b.add_gate(gate_kind::c_element, "C6", {"X31", "X20", "X10"});
  b.add_gate(gate_kind::c_element, "C7", {"X31", "X20", "X11"});
  b.add_gate(gate_kind::c_element, "C8", {"X31", "X21", "X10"});
  int or_counter = 1;
  const std::string f0 =
      or_merge(b, {"C2", "C3", "C4", "C5", "C6", "C7", "C8"}, or_fanin_cap, or_counter);
  b.set_output("f", "C1", f0);
  return std::move(b).build();
}

inline netlist build_fig4(int or_fanin_cap) {
  netlist_builder b(3);
  b.add_gate(gate_kind::or_gate, "OR1", {"X20", "X21"});
  // OR2's output forks to C2 and C3; the branches are assumed isochronic.
  b.add_gate(gate_kind::or_gate, "OR2", {"X30", "X31"}, "isf");
  b.mark_isochronic("isf");
  b.add_gate(gate_kind::c_element, "C1", {"X31", "X21", "X11"});
  b.add_gate(gate_kind::c_element, "C2", {"isf", "OR1", "X10"});
  b.add_gate(gate_kind::c_element, "C3", {"isf", "X20", "X11"});
  b.add_gate(gate_kind::c_element, "C4", {"X30", "X21", "X11"});
  int or_counter = 3;
  const std::string f0 = or_merge(b, {"C2", "C3", "C4"}, or_fanin_cap, or_counter);
  b.set_output("f", "C1", f0);
  return std::move(b).build();
}

inline netlist build_fig5(int or_fanin_cap) {
  netlist_builder b(3);
  b.add_gate(gate_kind::c_element, "C1", {"X31", "X21", "X11"});
  // Shared 2-input C-elements; each output is an isochronic fork feeding
  // one C-element per rail of the paired variable.
  b.add_gate(gate_kind::c_element, "C2", {"X30", "X20"}, "k1");
  b.add_gate(gate_kind::c_element, "C3", {"X30", "X21"}, "k2");
  b.add_gate(gate_kind::c_element, "C4", {"X31", "X20"}, "k3");
  b.mark_isochronic("k1");
  b.mark_isochronic("k2");
  b.mark_isochronic("k3");
  b.add_gate(gate_kind::c_element, "C5", {"X31", "X21", "X10"});
  b.add_gate(gate_kind::c_element, "C6", {"k1", "X10"});
  b.add_gate(gate_kind::c_element, "C7", {"k1", "X11"});
  b.add_gate(gate_kind::c_element, "C8", {"k2", "X10"});
  b.add_gate(gate_kind::c_element, "C9", {"k2", "X11"});
  b.add_gate(gate_kind::c_element, "C10", {"k3", "X10"});
  b.add_gate(gate_kind::c_element, "C11", {"k3", "X11"});
  int or_counter = 1;
  const std::string f0 =
      or_merge(b, {"C5", "C6", "C7", "C8", "C9", "C10", "C11"}, or_fanin_cap, or_counter);
  b.set_output("f", "C1", f0);
  return std::move(b).build();
}

}  // namespace detail

inline const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names = {"fig3", "fig4", "fig5"};
  return names;
}

inline netlist build_fixture(const std::string& name, int or_fanin_cap = 0) {
  if (name == "fig3") return detail::build_fig3(or_fanin_cap);
  if (name == "fig4") return detail::build_fig4(or_fanin_cap);
  if (name == "fig5") return detail::build_fig5(or_fanin_cap);
  throw std::invalid_argument("unknown fixture '" + name + "' (expected fig3, fig4 or fig5)");
}

}  // namespace qdi
