//! \file factored_expr.hpp
//! \brief Factored Boolean expressions over rail literals: a tree of
//!        literal / and / or nodes kept flat (no and under and, no or
//!        under or) with every operator taking at least two children.

#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "qdi/cover.hpp"
#include "qdi/dual_rail.hpp"

namespace qdi {

struct factored_expr {
  enum class node_kind { literal, and_node, or_node };

  node_kind kind = node_kind::literal;
  rail_literal lit;                    // meaningful for literal nodes only
  std::vector<factored_expr> children; // meaningful for and/or nodes only

  friend bool operator==(const factored_expr&, const factored_expr&) = default;
};

inline factored_expr make_literal(rail_literal lit) {
  factored_expr e;
  e.kind = factored_expr::node_kind::literal;
  e.lit = lit;
  return e;
}

inline int max_var(const factored_expr& e) {
  if (e.kind == factored_expr::node_kind::literal) return e.lit.var;
  int result = 0;
  for (const auto& c : e.children) result = std::max(result, max_var(c));
  return result;
}

//! Conjunction. Nested and-nodes are flattened away and the children are
//! ordered by descending top variable, which reproduces the written
//! convention (factors for X3 before X2 before X1). A single child is
//! returned as-is so operator nodes always have arity >= 2.
inline factored_expr make_and(std::vector<factored_expr> children) {
  std::vector<factored_expr> flat;
  for (auto& c : children) {
    if (c.kind == factored_expr::node_kind::and_node) {
      for (auto& gc : c.children) flat.push_back(std::move(gc));
    } else {
      flat.push_back(std::move(c));
    }
  }
  if (flat.empty()) throw std::invalid_argument("and node requires at least one child");
  if (flat.size() == 1) return std::move(flat.front());
  std::stable_sort(flat.begin(), flat.end(),
                   [](const factored_expr& a, const factored_expr& b) { return max_var(a) > max_var(b); });
  factored_expr e;
  e.kind = factored_expr::node_kind::and_node;
  e.children = std::move(flat);
  return e;
}

//! Disjunction. Nested or-nodes are flattened; child order is preserved
//! because sum-term order is part of the canonical form.
inline factored_expr make_or(std::vector<factored_expr> children) {
  std::vector<factored_expr> flat;
  for (auto& c : children) {
    if (c.kind == factored_expr::node_kind::or_node) {
      for (auto& gc : c.children) flat.push_back(std::move(gc));
    } else {
      flat.push_back(std::move(c));
    }
  }
  if (flat.empty()) throw std::invalid_argument("or node requires at least one child");
  if (flat.size() == 1) return std::move(flat.front());
  factored_expr e;
  e.kind = factored_expr::node_kind::or_node;
  e.children = std::move(flat);
  return e;
}

inline bool eval_factored(const factored_expr& e, const rail_vector& rails) {
  switch (e.kind) {
    case factored_expr::node_kind::literal:
      return rails.get(e.lit);
    case factored_expr::node_kind::and_node:
      for (const auto& c : e.children) {
        if (!eval_factored(c, rails)) return false;
      }
      return true;
    case factored_expr::node_kind::or_node:
      for (const auto& c : e.children) {
        if (eval_factored(c, rails)) return true;
      }
      return false;
  }
  throw std::logic_error("corrupt factored_expr node");
}

inline bool eval_factored(const factored_expr& e, const codeword& cw) {
  if (max_var(e) > cw.n()) {
    throw std::invalid_argument("expression mentions variable " + std::to_string(max_var(e)) +
                                " but the codeword covers only " + std::to_string(cw.n()));
  }
  return eval_factored(e, cw.rails());
}

//! Canonical text form. Products concatenate their factors with or-factors
//! parenthesized; sums join with " + ".
inline std::string render(const factored_expr& e) {
  switch (e.kind) {
    case factored_expr::node_kind::literal:
      return rail_name(e.lit);
    case factored_expr::node_kind::and_node: {
      std::string out;
      for (const auto& c : e.children) {
        if (c.kind == factored_expr::node_kind::or_node) {
          out += "(" + render(c) + ")";
        } else {
          out += render(c);
        }
      }
      return out;
    }
    case factored_expr::node_kind::or_node: {
      std::string out;
      for (std::size_t i = 0; i < e.children.size(); ++i) {
        if (i > 0) out += " + ";
        out += render(e.children[i]);
      }
      return out;
    }
  }
  throw std::logic_error("corrupt factored_expr node");
}

//! Number of sum terms visible at the root: the count an area estimate
//! based on top-level terms alone would report.
inline int top_level_terms(const factored_expr& e) {
  return e.kind == factored_expr::node_kind::or_node ? static_cast<int>(e.children.size()) : 1;
}

//! True when an or-node sits below an and-node, i.e. the expression
//! contains a product of sums whose expansion the top level hides.
inline bool contains_product_of_sums(const factored_expr& e) {
  if (e.kind == factored_expr::node_kind::and_node) {
    for (const auto& c : e.children) {
      if (c.kind == factored_expr::node_kind::or_node || contains_product_of_sums(c)) return true;
    }
    return false;
  }
  if (e.kind == factored_expr::node_kind::or_node) {
    for (const auto& c : e.children) {
      if (contains_product_of_sums(c)) return true;
    }
  }
  return false;
}

inline int literal_count(const factored_expr& e) {
  if (e.kind == factored_expr::node_kind::literal) return 1;
  int total = 0;
  for (const auto& c : e.children) total += literal_count(c);
  return total;
}

//! Lifts a product term into expression form.
inline factored_expr to_expr(const product_term& term) {
  std::vector<factored_expr> lits;
  lits.reserve(term.size());
  for (const auto& lit : term.literals()) lits.push_back(make_literal(lit));
  return make_and(std::move(lits));
}

//! Lifts a cover into expression form (sum of its terms, in cover order).
inline factored_expr to_expr(const dsop_cover& cover) {
  if (cover.terms.empty()) throw std::invalid_argument("cannot lift an empty cover into an expression");
  std::vector<factored_expr> terms;
  terms.reserve(cover.terms.size());
  for (const auto& term : cover.terms) terms.push_back(to_expr(term));
  return make_or(std::move(terms));
}

}  // namespace qdi
