//! \file cover.hpp
//! \brief Product terms over rail literals and disjoint sum-of-products
//!        covers, including the dual-rail expansion of a truth table.

#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qdi/boolean_function.hpp"
#include "qdi/dual_rail.hpp"

namespace qdi {

//! Conjunction of rail literals, at most one per variable. Literals are
//! kept sorted by descending variable index, matching the usual written
//! order (X31X21X11).
class product_term {
public:
  explicit product_term(std::vector<rail_literal> literals) : literals_(std::move(literals)) {
    if (literals_.empty()) throw std::invalid_argument("product term must contain at least one literal");
    std::sort(literals_.begin(), literals_.end(),
              [](const rail_literal& a, const rail_literal& b) { return a.var > b.var; });
    for (std::size_t i = 0; i + 1 < literals_.size(); ++i) {
      if (literals_[i].var == literals_[i + 1].var) {
        throw std::invalid_argument("product term mentions variable " +
                                    std::to_string(literals_[i].var) + " more than once");
      }
    }
    for (const auto& lit : literals_) {
      if (lit.var < 1 || (lit.rail != 0 && lit.rail != 1)) {
        throw std::invalid_argument("ill-formed literal in product term");
      }
    }
  }

  const std::vector<rail_literal>& literals() const { return literals_; }
  std::size_t size() const { return literals_.size(); }

  std::optional<int> rail_of(int var) const {
    for (const auto& lit : literals_) {
      if (lit.var == var) return lit.rail;
    }
    return std::nullopt;
  }

  bool satisfied_by(const rail_vector& rails) const {
    for (const auto& lit : literals_) {
      if (!rails.get(lit)) return false;
    }
    return true;
  }

  friend bool operator==(const product_term&, const product_term&) = default;

private:
  std::vector<rail_literal> literals_;
};

//! Sum of product terms intended to be pairwise disjoint. Disjointness is
//! checked by is_disjoint, not enforced on construction, so that the
//! checker itself stays testable.
struct dsop_cover {
  std::vector<product_term> terms;

  friend bool operator==(const dsop_cover&, const dsop_cover&) = default;
};

//! Both rails of one encoded function output.
struct cover_pair {
  dsop_cover rail1;  // minterms where f = 1
  dsop_cover rail0;  // minterms where f = 0

  friend bool operator==(const cover_pair&, const cover_pair&) = default;
};

struct rail_pair {
  bool rail1 = false;
  bool rail0 = false;

  friend bool operator==(const rail_pair&, const rail_pair&) = default;
};

//! Expands a truth table into its two minterm covers. Every assignment
//! contributes exactly one full product term, placed on rail 1 when f is
//! true there and on rail 0 otherwise; terms appear in ascending minterm
//! order, so |rail1| + |rail0| = 2^n.
inline cover_pair dual_rail_cover(const boolean_function& f) {
  cover_pair result;
  for (std::uint32_t index = 0; index < f.size(); ++index) {
    std::vector<rail_literal> literals;
    literals.reserve(static_cast<std::size_t>(f.n()));
    for (int var = f.n(); var >= 1; --var) {
      literals.push_back(rail_literal{var, static_cast<int>((index >> (var - 1)) & 1u)});
    }
    auto& side = f.value(index) ? result.rail1 : result.rail0;
    side.terms.emplace_back(std::move(literals));
  }
  return result;
}

//! Two terms are disjoint when some variable appears in both with
//! opposite rails; then no rail valuation can satisfy both at once.
inline bool is_disjoint(const dsop_cover& cover) {
  for (std::size_t i = 0; i < cover.terms.size(); ++i) {
    for (std::size_t j = i + 1; j < cover.terms.size(); ++j) {
      bool opposed = false;
      for (const auto& lit : cover.terms[i].literals()) {
        auto other = cover.terms[j].rail_of(lit.var);
        if (other && *other != lit.rail) {
          opposed = true;
          break;
        }
      }
      if (!opposed) return false;
    }
  }
  return true;
}

inline int max_var(const dsop_cover& cover) {
  int result = 0;
  for (const auto& term : cover.terms) {
    for (const auto& lit : term.literals()) result = std::max(result, lit.var);
  }
  return result;
}

//! Evaluates both rails of a dual-rail cover pair at a codeword. The
//! spacer yields (0, 0); for valid data exactly one rail of a complete
//! disjoint pair comes up.
inline rail_pair eval_cover_pair(const dsop_cover& on1, const dsop_cover& on0, const codeword& cw) {
  const int need = std::max(max_var(on1), max_var(on0));
  if (need > cw.n()) {
    throw std::invalid_argument("cover mentions variable " + std::to_string(need) +
                                " but the codeword covers only " + std::to_string(cw.n()));
  }
  const rail_vector rails = cw.rails();
  auto any = [&rails](const dsop_cover& cover) {
    for (const auto& term : cover.terms) {
      if (term.satisfied_by(rails)) return true;
    }
    return false;
  };
  return rail_pair{any(on1), any(on0)};
}

inline std::string render(const product_term& term) {
  std::string out;
  for (const auto& lit : term.literals()) out += rail_name(lit);
  return out;
}

inline std::string render(const dsop_cover& cover) {
  if (cover.terms.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < cover.terms.size(); ++i) {
    if (i > 0) out += " + ";
    out += render(cover.terms[i]);
  }
  return out;
}

}  // namespace qdi
