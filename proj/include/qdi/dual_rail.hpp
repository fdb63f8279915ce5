//! \file dual_rail.hpp
//! \brief Dual-rail (1-of-2) encoding primitives: rail literals, rail
//!        valuations, and codewords with the distinguished spacer.

#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace qdi {

//! One rail of one encoded variable. Rail 1 carries "variable is true",
//! rail 0 carries "variable is false".
struct rail_literal {
  int var = 0;   // 1-based variable index
  int rail = 0;  // 0 or 1

  friend auto operator<=>(const rail_literal&, const rail_literal&) = default;
};

//! Wire name in the X<var><rail> convention, e.g. X31 is rail 1 of X3.
inline std::string rail_name(const rail_literal& lit) {
  return "X" + std::to_string(lit.var) + std::to_string(lit.rail);
}

//! Inverse of rail_name. The final digit is the rail, everything between
//! the leading 'X' and it is the variable index.
inline rail_literal parse_rail_name(const std::string& name) {
  if (name.size() < 3 || name[0] != 'X') {
    throw std::invalid_argument("malformed rail name '" + name + "' (expected X<var><rail>)");
  }
  const char rail_ch = name.back();
  if (rail_ch != '0' && rail_ch != '1') {
    throw std::invalid_argument("malformed rail name '" + name + "' (rail must be 0 or 1)");
  }
  const std::string var_part = name.substr(1, name.size() - 2);
  for (char c : var_part) {
    if (c < '0' || c > '9') {
      throw std::invalid_argument("malformed rail name '" + name + "'");
    }
  }
  const int var = std::stoi(var_part);
  if (var < 1) {
    throw std::invalid_argument("malformed rail name '" + name + "' (variable index must be >= 1)");
  }
  return rail_literal{var, rail_ch - '0'};
}

//! A value for every rail of variables 1..n. Unlike a codeword this may
//! hold any bit pattern, including illegal ones; analysis and property
//! tests need that generality.
class rail_vector {
public:
  explicit rail_vector(int n) : n_(n), bits_(static_cast<std::size_t>(2 * n), false) {
    if (n < 1) throw std::invalid_argument("rail_vector requires n >= 1");
  }

  int n() const { return n_; }

  bool get(int var, int rail) const { return bits_[index_of(var, rail)]; }
  bool get(const rail_literal& lit) const { return get(lit.var, lit.rail); }

  void set(int var, int rail, bool value) { bits_[index_of(var, rail)] = value; }
  void set(const rail_literal& lit, bool value) { set(lit.var, lit.rail, value); }

  friend bool operator==(const rail_vector&, const rail_vector&) = default;

private:
  std::size_t index_of(int var, int rail) const {
    if (var < 1 || var > n_ || rail < 0 || rail > 1) {
      throw std::out_of_range("rail (" + std::to_string(var) + "," + std::to_string(rail) +
                              ") out of range for n=" + std::to_string(n_));
    }
    return static_cast<std::size_t>((var - 1) * 2 + rail);
  }

  int n_;
  std::vector<bool> bits_;
};

//! A complete binary assignment to variables 1..n, or the spacer (all
//! rails low). Valid data raises exactly one rail per variable; the
//! spacer raises none and is kept distinct from every data word.
class codeword {
public:
  codeword(int n, std::vector<bool> assignment)
      : n_(n), spacer_(false), assignment_(std::move(assignment)) {
    if (n < 1) throw std::invalid_argument("codeword requires n >= 1");
    if (assignment_.size() != static_cast<std::size_t>(n)) {
      throw std::invalid_argument("codeword assignment must cover all " + std::to_string(n) + " variables");
    }
  }

  static codeword spacer(int n) {
    codeword cw(n, std::vector<bool>(static_cast<std::size_t>(n), false));
    cw.spacer_ = true;
    return cw;
  }

  //! Build the codeword whose minterm index is `index`; variable n is the
  //! most significant bit of the index.
  static codeword from_index(int n, std::uint32_t index) {
    if (n < 1 || n > 31) throw std::invalid_argument("codeword index form requires 1 <= n <= 31");
    if (index >= (std::uint32_t{1} << n)) {
      throw std::invalid_argument("minterm index " + std::to_string(index) +
                                  " out of range for n=" + std::to_string(n));
    }
    std::vector<bool> assignment(static_cast<std::size_t>(n));
    for (int var = 1; var <= n; ++var) {
      assignment[static_cast<std::size_t>(var - 1)] = (index >> (var - 1)) & 1u;
    }
    return codeword(n, std::move(assignment));
  }

  //! Parse an assignment string written Xn..X1 left to right ("110" means
  //! X3=1, X2=1, X1=0). A string of '-' characters denotes the spacer.
  static codeword from_string(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty codeword string");
    const int n = static_cast<int>(text.size());
    bool all_dash = true;
    for (char c : text) all_dash = all_dash && c == '-';
    if (all_dash) return spacer(n);
    std::vector<bool> assignment(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      const char c = text[static_cast<std::size_t>(i)];
      if (c != '0' && c != '1') {
        throw std::invalid_argument("malformed codeword '" + text + "' (expected 0/1 digits or all '-')");
      }
      // leftmost character is the highest-numbered variable
      assignment[static_cast<std::size_t>(n - 1 - i)] = c == '1';
    }
    return codeword(n, std::move(assignment));
  }

  int n() const { return n_; }
  bool is_spacer() const { return spacer_; }

  bool value(int var) const {
    require_data("value");
    if (var < 1 || var > n_) throw std::out_of_range("variable " + std::to_string(var) + " out of range");
    return assignment_[static_cast<std::size_t>(var - 1)];
  }

  std::uint32_t index() const {
    require_data("index");
    std::uint32_t idx = 0;
    for (int var = n_; var >= 1; --var) {
      idx = (idx << 1) | (assignment_[static_cast<std::size_t>(var - 1)] ? 1u : 0u);
    }
    return idx;
  }

  //! Rail view: rail v of variable i is high iff the assignment gives i
  //! the value v. The spacer maps to the all-low vector.
  rail_vector rails() const {
    rail_vector rv(n_);
    if (spacer_) return rv;
    for (int var = 1; var <= n_; ++var) {
      rv.set(var, assignment_[static_cast<std::size_t>(var - 1)] ? 1 : 0, true);
    }
    return rv;
  }

  std::string to_string() const {
    if (spacer_) return std::string(static_cast<std::size_t>(n_), '-');
    std::string s;
    s.reserve(static_cast<std::size_t>(n_));
    for (int var = n_; var >= 1; --var) {
      s.push_back(assignment_[static_cast<std::size_t>(var - 1)] ? '1' : '0');
    }
    return s;
  }

  friend bool operator==(const codeword&, const codeword&) = default;

private:
  void require_data(const char* what) const {
    if (spacer_) throw std::logic_error(std::string("codeword::") + what + " called on the spacer");
  }

  int n_;
  bool spacer_;
  std::vector<bool> assignment_;
};

}  // namespace qdi
