//! Shared fixtures for the test suite: canonical small functions, two
//! hand-built indication examples, and a seeded function generator.

#pragma once

#include <random>
#include <string>
#include <vector>

#include "qdi/qdi.hpp"

namespace qdi::testing {

inline boolean_function fn(int n, const std::string& bits) {
  return parse_truth_table("n=" + std::to_string(n) + "\n" + bits + "\n");
}

inline boolean_function and3() { return fn(3, "00000001"); }
inline boolean_function xor2() { return fn(2, "0110"); }
inline boolean_function maj3() { return fn(3, "00010111"); }

//! The classic non-indicating 2-input AND: the false rail is a bare OR,
//! so f completes from a single low input. Classifies early.
inline netlist early_and2() {
  netlist_builder b(2);
  b.add_gate(gate_kind::c_element, "C1", {"X11", "X21"});
  b.add_gate(gate_kind::or_gate, "OR1", {"X10", "X20"});
  b.set_output("f", "C1", "OR1");
  return std::move(b).build();
}

//! Two outputs over two inputs: g is a fully indicating AND, h an
//! early OR. Some output is always early (h) but g waits for every
//! input, so the pair classifies weak.
inline netlist weak_pair2() {
  netlist_builder b(2);
  b.add_gate(gate_kind::c_element, "Cg1", {"X11", "X21"});
  b.add_gate(gate_kind::c_element, "Cg2", {"X10", "X20"});
  b.add_gate(gate_kind::c_element, "Cg3", {"X10", "X21"});
  b.add_gate(gate_kind::c_element, "Cg4", {"X11", "X20"});
  b.add_gate(gate_kind::or_gate, "ORg", {"Cg2", "Cg3", "Cg4"});
  b.add_gate(gate_kind::or_gate, "ORh", {"X11", "X21"});
  b.add_gate(gate_kind::c_element, "Ch", {"X10", "X20"});
  b.set_output("g", "Cg1", "ORg");
  b.set_output("h", "ORh", "Ch");
  return std::move(b).build();
}

//! Uniform non-constant function on n inputs.
inline boolean_function random_function(std::mt19937& rng, int n) {
  const std::uint32_t size = 1u << n;
  std::uniform_int_distribution<std::uint64_t> dist(1, (std::uint64_t{1} << size) - 2);
  const std::uint64_t word = dist(rng);
  std::vector<bool> bits;
  for (std::uint32_t i = 0; i < size; ++i) bits.push_back((word >> i) & 1u);
  return boolean_function(n, bits);
}

//! All non-constant functions on n inputs (n <= 4).
inline std::vector<boolean_function> all_functions(int n) {
  const std::uint32_t size = 1u << n;
  std::vector<boolean_function> out;
  for (std::uint64_t word = 1; word + 1 < (std::uint64_t{1} << size); ++word) {
    std::vector<bool> bits;
    for (std::uint32_t i = 0; i < size; ++i) bits.push_back((word >> i) & 1u);
    out.emplace_back(n, bits);
  }
  return out;
}

//! True when `needle` appears inside `haystack` in order (not
//! necessarily contiguous).
inline bool is_subsequence(const std::vector<std::string>& needle,
                           const std::vector<std::string>& haystack) {
  std::size_t i = 0;
  for (const auto& item : haystack) {
    if (i < needle.size() && item == needle[i]) ++i;
  }
  return i == needle.size();
}

inline std::vector<std::string> acknowledged_gates(const orphan_report& report, phase_kind ph) {
  std::vector<std::string> ids;
  for (const auto& tr : report.phase_acknowledged(ph)) ids.push_back(tr.gate_id);
  return ids;
}

inline std::vector<std::string> orphan_tokens(const orphan_report& report, phase_kind ph) {
  std::vector<std::string> tokens;
  for (const auto& tr : report.phase_orphans(ph)) {
    tokens.push_back(tr.gate_id + (tr.dir == edge::rise ? "^" : "v"));
  }
  return tokens;
}

}  // namespace qdi::testing
