//! \file synth.hpp
//! \brief The three synthesis routes from a truth table to a dual-rail
//!        netlist:
//!
//!   dims   one C-element per minterm on each rail, OR-merged. Always
//!          indicating and orphan-free, cost 2^n C-elements.
//!   fdims  factors each minterm cover by shared literals before mapping
//!          gates. Cheap, functionally correct, but the factoring OR
//!          gates fire on codewords that never acknowledge them, so the
//!          result generally has gate orphans.
//!   safe   pairs minterms that differ in a single variable and realizes
//!          each pair as a shared C-element forking isochronically into
//!          one 2-input C-element per rail. Keeps every transition
//!          acknowledged while still sharing logic.

#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "qdi/boolean_function.hpp"
#include "qdi/cover.hpp"
#include "qdi/factored_expr.hpp"
#include "qdi/netlist.hpp"

namespace qdi {

enum class synth_method { dims, fdims, safe };

inline std::string to_string(synth_method m) {
  switch (m) {
    case synth_method::dims: return "dims";
    case synth_method::fdims: return "fdims";
    case synth_method::safe: return "safe";
  }
  throw std::logic_error("corrupt synth_method");
}

inline synth_method parse_synth_method(const std::string& name) {
  if (name == "dims") return synth_method::dims;
  if (name == "fdims") return synth_method::fdims;
  if (name == "safe") return synth_method::safe;
  throw std::invalid_argument("unknown synthesis method '" + name + "' (expected dims, fdims or safe)");
}

struct synth_options {
  int or_fanin_cap = 0;  // 0 = single wide OR merge
  int max_inputs = boolean_function::max_inputs;
};

namespace detail {

inline void check_synthesizable(const boolean_function& f, const synth_options& opt) {
  if (f.n() > opt.max_inputs) {
    throw std::invalid_argument(
        "refusing to synthesize n=" + std::to_string(f.n()) + ": minterm enumeration needs 2^" +
        std::to_string(f.n()) + " = " + std::to_string(std::uint64_t{1} << f.n()) +
        " product terms and the configured cap is n <= " + std::to_string(opt.max_inputs));
  }
  if (f.is_constant()) {
    const char* which = f.value(std::uint32_t{0}) ? "false" : "true";
    throw std::invalid_argument(std::string("constant function rejected: its ") + which +
                                " rail has an empty cover and can never complete the four-phase "
                                "handshake");
  }
}

//! Requires every term to be a full minterm over variables 1..n (the
//! shape dual_rail_cover produces); returns that n.
inline int require_full_minterms(const dsop_cover& cover, const char* who) {
  if (cover.terms.empty()) {
    throw std::invalid_argument(std::string(who) + " requires a non-empty cover");
  }
  const int n = max_var(cover);
  for (const auto& term : cover.terms) {
    if (static_cast<int>(term.size()) != n) {
      throw std::invalid_argument(std::string(who) + " requires full-minterm terms; '" + render(term) +
                                  "' does not mention every variable up to " + std::to_string(n));
    }
  }
  return n;
}

//! Wire-alias netlist used when n = 1: each output rail is the input
//! rail of the corresponding single-literal cover term. No gates.
inline netlist alias_netlist(const boolean_function& f) {
  const cover_pair covers = dual_rail_cover(f);
  netlist_builder b(1);
  b.set_output("f", rail_name(covers.rail1.terms.front().literals().front()),
               rail_name(covers.rail0.terms.front().literals().front()));
  return std::move(b).build();
}

inline std::vector<std::string> rail_names_of(const product_term& term) {
  std::vector<std::string> names;
  names.reserve(term.size());
  for (const auto& lit : term.literals()) names.push_back(rail_name(lit));
  return names;
}

}  // namespace detail

//! Minterm synthesis: every cover term becomes one C-element joining its
//! rails, numbered C1.. with the true rail's terms first, and each rail
//! with more than one term gets an OR merge.
inline netlist synth_dims(const boolean_function& f, const synth_options& opt = {}) {
  detail::check_synthesizable(f, opt);
  if (f.n() == 1) return detail::alias_netlist(f);

  const cover_pair covers = dual_rail_cover(f);
  netlist_builder b(f.n());
  int c_counter = 1;
  int or_counter = 1;
  auto realize_rail = [&](const dsop_cover& cover) {
    std::vector<std::string> nets;
    for (const auto& term : cover.terms) {
      nets.push_back(b.add_gate(gate_kind::c_element, "C" + std::to_string(c_counter++),
                                detail::rail_names_of(term)));
    }
    return nets;
  };
  const std::vector<std::string> rail1_nets = realize_rail(covers.rail1);
  const std::vector<std::string> rail0_nets = realize_rail(covers.rail0);
  const std::string f1 = or_merge(b, rail1_nets, opt.or_fanin_cap, or_counter);
  const std::string f0 = or_merge(b, rail0_nets, opt.or_fanin_cap, or_counter);
  b.set_output("f", f1, f0);
  return std::move(b).build();
}

namespace detail {

using literal_product = std::vector<rail_literal>;  // sorted by descending var

inline literal_product strip_var(const literal_product& term, int var) {
  literal_product out;
  out.reserve(term.size() - 1);
  for (const auto& lit : term) {
    if (lit.var != var) out.push_back(lit);
  }
  return out;
}

inline factored_expr plain_product(const literal_product& term) {
  std::vector<factored_expr> lits;
  lits.reserve(term.size());
  for (const auto& lit : term) lits.push_back(make_literal(lit));
  return make_and(std::move(lits));
}

inline factored_expr or_pair(int var) {
  return make_or({make_literal(rail_literal{var, 0}), make_literal(rail_literal{var, 1})});
}

//! Greedy factoring of residual products that all range over the same
//! variables. A complete cross-product collapses to a product of
//! (Xv0 + Xv1) pairs; otherwise the most frequent literal is factored
//! out (ties: lowest variable, then rail 0) and its group is factored
//! recursively. Whatever never shares a literal stays a plain product.
//! Returns the factors whose disjunction equals the input sum.
inline std::vector<factored_expr> factor_products(std::vector<literal_product> work) {
  std::vector<factored_expr> out;
  while (!work.empty()) {
    if (work.size() == 1) {
      out.push_back(plain_product(work.front()));
      break;
    }
    const std::size_t width = work.front().size();
    if (width > 0 && work.size() == (std::size_t{1} << width)) {
      // all rail combinations present: sum == product of OR pairs
      std::vector<factored_expr> pairs;
      for (const auto& lit : work.front()) pairs.push_back(or_pair(lit.var));
      out.push_back(make_and(std::move(pairs)));
      break;
    }
    std::map<rail_literal, int> freq;
    for (const auto& term : work) {
      for (const auto& lit : term) ++freq[lit];
    }
    rail_literal best{};
    int best_count = 0;
    for (const auto& [lit, count] : freq) {
      if (count > best_count) {  // map order already breaks ties: lowest var, rail 0 first
        best = lit;
        best_count = count;
      }
    }
    if (best_count < 2) {
      for (const auto& term : work) out.push_back(plain_product(term));
      break;
    }
    std::vector<literal_product> group, rest;
    for (auto& term : work) {
      const bool has = std::find(term.begin(), term.end(), best) != term.end();
      (has ? group : rest).push_back(std::move(term));
    }
    std::vector<literal_product> stripped;
    stripped.reserve(group.size());
    for (const auto& term : group) stripped.push_back(strip_var(term, best.var));
    std::vector<factored_expr> sub = factor_products(std::move(stripped));
    factored_expr inner = sub.size() == 1 ? std::move(sub.front()) : make_or(std::move(sub));
    out.push_back(make_and({std::move(inner), make_literal(best)}));
    work = std::move(rest);
  }
  return out;
}

}  // namespace detail

//! Factors one rail's minterm cover the way the shared-OR form is
//! obtained from the minterm form: terms are grouped by their rail of
//! variable 1; each group's residuals either collapse to a product of
//! (Xv0 + Xv1) pairs (complete cross-product) or are factored greedily
//! by most frequent shared literal. Sum-term order follows the groups,
//! rail 0 before rail 1. The result is functionally equal to the cover
//! on every codeword; only its indication behavior is weaker.
inline factored_expr fdims_factorize(const dsop_cover& cover) {
  const int n = detail::require_full_minterms(cover, "fdims_factorize");
  std::vector<factored_expr> products;
  for (int rail : {0, 1}) {
    std::vector<detail::literal_product> residuals;
    for (const auto& term : cover.terms) {
      if (term.rail_of(1) != rail) continue;
      residuals.push_back(detail::strip_var(term.literals(), 1));
    }
    if (residuals.empty()) continue;
    const factored_expr group_lit = make_literal(rail_literal{1, rail});
    if (n == 1) {
      products.push_back(group_lit);
      continue;
    }
    for (auto& factor : detail::factor_products(std::move(residuals))) {
      products.push_back(make_and({std::move(factor), group_lit}));
    }
  }
  return make_or(std::move(products));
}

//! Direct gate mapping of a factored expression pair: and-nodes become
//! C-elements, or-nodes become OR gates, and structurally identical
//! subexpressions share one gate whose output net is then an isochronic
//! fork. The top-level sum of each rail is treated as that rail's output
//! merge, so the OR fan-in cap applies to it.
inline netlist factored_to_netlist(const factored_expr& on1, const factored_expr& on0, int n,
                                   const synth_options& opt = {}) {
  if (std::max(max_var(on1), max_var(on0)) > n) {
    throw std::invalid_argument("expression mentions a variable beyond n=" + std::to_string(n));
  }
  netlist_builder b(n);
  int c_counter = 1;
  int or_counter = 1;
  std::map<std::string, std::string> memo;  // structural key -> net id

  auto key_of = [](const factored_expr& e) {
    auto rec = [](auto&& self, const factored_expr& node) -> std::string {
      switch (node.kind) {
        case factored_expr::node_kind::literal:
          return "L" + std::to_string(node.lit.var) + "_" + std::to_string(node.lit.rail);
        case factored_expr::node_kind::and_node:
        case factored_expr::node_kind::or_node: {
          std::string s = node.kind == factored_expr::node_kind::and_node ? "A(" : "O(";
          for (std::size_t i = 0; i < node.children.size(); ++i) {
            if (i > 0) s += ",";
            s += self(self, node.children[i]);
          }
          return s + ")";
        }
      }
      throw std::logic_error("corrupt factored_expr node");
    };
    return rec(rec, e);
  };

  auto net_of = [&](auto&& self, const factored_expr& e) -> std::string {
    if (e.kind == factored_expr::node_kind::literal) return rail_name(e.lit);
    const std::string key = key_of(e);
    if (auto it = memo.find(key); it != memo.end()) {
      b.mark_isochronic(it->second);  // reused: the net is now a fork
      return it->second;
    }
    std::vector<std::string> child_nets;
    child_nets.reserve(e.children.size());
    for (const auto& c : e.children) child_nets.push_back(self(self, c));
    const bool is_and = e.kind == factored_expr::node_kind::and_node;
    const std::string id = (is_and ? "C" : "OR") +
                           std::to_string(is_and ? c_counter++ : or_counter++);
    b.add_gate(is_and ? gate_kind::c_element : gate_kind::or_gate, id, child_nets);
    memo.emplace(key, id);
    return id;
  };

  auto rail_net = [&](const factored_expr& e) -> std::string {
    if (e.kind != factored_expr::node_kind::or_node) return net_of(net_of, e);
    std::vector<std::string> term_nets;
    term_nets.reserve(e.children.size());
    for (const auto& c : e.children) term_nets.push_back(net_of(net_of, c));
    return or_merge(b, term_nets, opt.or_fanin_cap, or_counter);
  };

  const std::string f1 = rail_net(on1);
  const std::string f0 = rail_net(on0);
  b.set_output("f", f1, f0);
  return std::move(b).build();
}

inline netlist synth_fdims(const boolean_function& f, const synth_options& opt = {}) {
  detail::check_synthesizable(f, opt);
  const cover_pair covers = dual_rail_cover(f);
  return factored_to_netlist(fdims_factorize(covers.rail1), fdims_factorize(covers.rail0), f.n(), opt);
}

namespace detail {

//! One round of safe pairing over products that share a variable set:
//! two products identical except for the rail of one variable v merge
//! into a shared sub-product plus the (Xv0 + Xv1) pair. The pairing
//! variable maximizes the number of pairs; ties pick the lowest variable
//! index, which factors out the shared literals with the highest
//! indices. Pairs form in ascending product order.
struct pairing {
  int var = 0;                                   // 0 = no productive pairing
  std::vector<std::pair<std::size_t, std::size_t>> pairs;  // index pairs, ascending
  std::vector<std::size_t> unpaired;                       // ascending
};

inline pairing select_pairing(const std::vector<literal_product>& products) {
  pairing none;
  for (std::size_t i = 0; i < products.size(); ++i) none.unpaired.push_back(i);
  if (products.empty()) return none;
  const std::size_t width = products.front().size();
  if (width < 3) return none;  // a pair must share at least two literals

  std::vector<int> vars;
  for (const auto& lit : products.front()) vars.push_back(lit.var);

  pairing best = none;
  int best_count = 0;
  for (auto it = vars.rbegin(); it != vars.rend(); ++it) {  // lowest variable first
    const int v = *it;
    pairing cand;
    cand.var = v;
    std::vector<bool> used(products.size(), false);
    for (std::size_t i = 0; i < products.size(); ++i) {
      if (used[i]) continue;
      const literal_product shared = strip_var(products[i], v);
      bool matched = false;
      for (std::size_t j = i + 1; j < products.size() && !matched; ++j) {
        if (used[j]) continue;
        if (products[j].size() == products[i].size() && strip_var(products[j], v) == shared &&
            products[j] != products[i]) {
          cand.pairs.emplace_back(i, j);
          used[i] = used[j] = true;
          matched = true;
        }
      }
      if (!matched) cand.unpaired.push_back(i);
    }
    if (static_cast<int>(cand.pairs.size()) > best_count) {
      best = cand;
      best_count = static_cast<int>(cand.pairs.size());
    }
  }
  return best_count > 0 ? best : none;
}

//! Emits gates realizing each product and returns their nets in product
//! order. Shared sub-products are realized first (recursively), then
//! unpaired products as full-arity C-elements, then the per-rail pair
//! C-elements. Every net produced for a recursive level feeds exactly
//! two pair C-elements, so those nets are created as isochronic forks
//! named k<j>.
inline std::vector<std::string> realize_safe_products(netlist_builder& b,
                                                      const std::vector<literal_product>& products,
                                                      bool as_forks, int& c_counter, int& fork_counter,
                                                      std::vector<std::string>* emission_order) {
  std::vector<std::string> nets(products.size());
  auto emit_direct = [&](const literal_product& term) {
    std::vector<std::string> ins;
    ins.reserve(term.size());
    for (const auto& lit : term) ins.push_back(rail_name(lit));
    const std::string id = "C" + std::to_string(c_counter++);
    std::optional<std::string> out_net;
    if (as_forks) out_net = "k" + std::to_string(fork_counter++);
    const std::string net = b.add_gate(gate_kind::c_element, id, ins, out_net);
    if (as_forks) b.mark_isochronic(net);
    if (emission_order) emission_order->push_back(net);
    return net;
  };

  const pairing plan = select_pairing(products);
  if (plan.var == 0) {
    for (std::size_t i = 0; i < products.size(); ++i) nets[i] = emit_direct(products[i]);
    return nets;
  }

  std::vector<literal_product> shared;
  shared.reserve(plan.pairs.size());
  for (const auto& [i, j] : plan.pairs) {
    (void)j;
    shared.push_back(strip_var(products[i], plan.var));
  }
  const std::vector<std::string> shared_nets =
      realize_safe_products(b, shared, /*as_forks=*/true, c_counter, fork_counter, nullptr);

  for (std::size_t idx : plan.unpaired) nets[idx] = emit_direct(products[idx]);

  for (std::size_t p = 0; p < plan.pairs.size(); ++p) {
    const auto& [i, j] = plan.pairs[p];
    for (int rail : {0, 1}) {
      const std::string id = "C" + std::to_string(c_counter++);
      std::optional<std::string> out_net;
      if (as_forks) out_net = "k" + std::to_string(fork_counter++);
      const std::string net = b.add_gate(
          gate_kind::c_element, id, {shared_nets[p], rail_name(rail_literal{plan.var, rail})}, out_net);
      if (as_forks) b.mark_isochronic(net);
      if (emission_order) emission_order->push_back(net);
      const bool first_has_rail = std::find(products[i].begin(), products[i].end(),
                                            rail_literal{plan.var, rail}) != products[i].end();
      nets[first_has_rail ? i : j] = net;
    }
  }
  return nets;
}

}  // namespace detail

//! The decomposition safe synthesis realizes, in expression form: paired
//! minterms appear as shared-literal products times (Xv0 + Xv1), and
//! unpairable minterms stay plain. Pair groups come first (in cover
//! order of their first member), then the leftovers.
inline factored_expr safe_decompose(const dsop_cover& cover) {
  detail::require_full_minterms(cover, "safe_decompose");
  std::vector<detail::literal_product> products;
  products.reserve(cover.terms.size());
  for (const auto& term : cover.terms) products.push_back(term.literals());

  const detail::pairing plan = detail::select_pairing(products);
  std::vector<factored_expr> sum;
  for (const auto& [i, j] : plan.pairs) {
    (void)j;
    std::vector<factored_expr> factors;
    for (const auto& lit : detail::strip_var(products[i], plan.var)) {
      factors.push_back(make_literal(lit));
    }
    factors.push_back(detail::or_pair(plan.var));
    sum.push_back(make_and(std::move(factors)));
  }
  for (std::size_t idx : plan.unpaired) sum.push_back(detail::plain_product(products[idx]));
  return make_or(std::move(sum));
}

//! Safe synthesis of a whole function: both rails are pair-decomposed
//! (recursively on the shared sub-products), the true rail first so its
//! gates take the low C numbers.
inline netlist synth_safe(const boolean_function& f, const synth_options& opt = {}) {
  detail::check_synthesizable(f, opt);
  if (f.n() == 1) return detail::alias_netlist(f);

  const cover_pair covers = dual_rail_cover(f);
  netlist_builder b(f.n());
  int c_counter = 1;
  int or_counter = 1;
  int fork_counter = 1;
  auto realize_rail = [&](const dsop_cover& cover) {
    std::vector<detail::literal_product> products;
    products.reserve(cover.terms.size());
    for (const auto& term : cover.terms) products.push_back(term.literals());
    std::vector<std::string> emitted;
    detail::realize_safe_products(b, products, /*as_forks=*/false, c_counter, fork_counter, &emitted);
    return or_merge(b, emitted, opt.or_fanin_cap, or_counter);
  };
  const std::string f1 = realize_rail(covers.rail1);
  const std::string f0 = realize_rail(covers.rail0);
  b.set_output("f", f1, f0);
  return std::move(b).build();
}

inline netlist synthesize(const boolean_function& f, synth_method method, const synth_options& opt = {}) {
  switch (method) {
    case synth_method::dims: return synth_dims(f, opt);
    case synth_method::fdims: return synth_fdims(f, opt);
    case synth_method::safe: return synth_safe(f, opt);
  }
  throw std::logic_error("corrupt synth_method");
}

}  // namespace qdi
