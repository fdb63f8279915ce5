//! \file netlist_json.hpp
//! \brief JSON serialization of netlists. Rendering is canonical (fixed
//!        key order, declaration order preserved) so that parse and
//!        render invert each other exactly.

#pragma once

#include <stdexcept>
#include <string>

#include "json.hpp"

#include "qdi/netlist.hpp"

namespace qdi {

inline constexpr const char* netlist_format_name = "qdi-netlist";
inline constexpr int netlist_format_version = 1;

inline std::string to_json_text(const netlist& nl) {
  nlohmann::ordered_json j;
  j["format"] = netlist_format_name;
  j["version"] = netlist_format_version;
  j["n"] = nl.n;
  j["inputs"] = nlohmann::ordered_json::array();
  for (const auto& ip : nl.inputs) {
    j["inputs"].push_back({{"var", ip.var}, {"rail1", ip.rail1}, {"rail0", ip.rail0}});
  }
  j["outputs"] = nlohmann::ordered_json::array();
  for (const auto& op : nl.outputs) {
    j["outputs"].push_back({{"name", op.name}, {"rail1", op.rail1}, {"rail0", op.rail0}});
  }
  j["nets"] = nlohmann::ordered_json::array();
  for (const auto& nd : nl.nets) {
    j["nets"].push_back({{"id", nd.id}, {"isochronic", nd.isochronic}});
  }
  j["gates"] = nlohmann::ordered_json::array();
  for (const auto& g : nl.gates) {
    j["gates"].push_back({{"id", g.id},
                          {"kind", to_string(g.kind)},
                          {"arity", g.inputs.size()},
                          {"inputs", g.inputs},
                          {"output", g.output}});
  }
  return j.dump(2) + "\n";
}

inline netlist netlist_from_json_text(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::runtime_error(std::string("netlist parse error: ") + e.what());
  }
  auto require = [&j](const char* key) -> const nlohmann::json& {
    if (!j.contains(key)) throw std::runtime_error(std::string("netlist is missing '") + key + "'");
    return j.at(key);
  };
  if (require("format").get<std::string>() != netlist_format_name) {
    throw std::runtime_error("unrecognized netlist format '" + require("format").get<std::string>() + "'");
  }
  if (require("version").get<int>() != netlist_format_version) {
    throw std::runtime_error("unsupported netlist format version");
  }

  netlist nl;
  nl.n = require("n").get<int>();
  for (const auto& e : require("inputs")) {
    nl.inputs.push_back(input_pair{e.at("var").get<int>(), e.at("rail1").get<std::string>(),
                                   e.at("rail0").get<std::string>()});
  }
  for (const auto& e : require("outputs")) {
    nl.outputs.push_back(output_pair{e.at("name").get<std::string>(), e.at("rail1").get<std::string>(),
                                     e.at("rail0").get<std::string>()});
  }
  for (const auto& e : require("nets")) {
    nl.nets.push_back(net_decl{e.at("id").get<std::string>(), e.at("isochronic").get<bool>()});
  }
  for (const auto& e : require("gates")) {
    gate g;
    g.id = e.at("id").get<std::string>();
    const std::string kind = e.at("kind").get<std::string>();
    if (kind == "C") {
      g.kind = gate_kind::c_element;
    } else if (kind == "OR") {
      g.kind = gate_kind::or_gate;
    } else {
      throw std::runtime_error("gate '" + g.id + "' has unknown kind '" + kind + "'");
    }
    g.inputs = e.at("inputs").get<std::vector<std::string>>();
    if (e.contains("arity") && e.at("arity").get<std::size_t>() != g.inputs.size()) {
      throw std::runtime_error("gate '" + g.id + "' declares arity " +
                               std::to_string(e.at("arity").get<std::size_t>()) + " but lists " +
                               std::to_string(g.inputs.size()) + " inputs");
    }
    g.output = e.at("output").get<std::string>();
    nl.gates.push_back(std::move(g));
  }
  return nl;
}

}  // namespace qdi
