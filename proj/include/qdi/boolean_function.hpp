//! \file boolean_function.hpp
//! \brief Single-output Boolean functions as explicit truth tables, plus
//!        the two-line text format used by the command line tools.

#pragma once

#include <cstdint>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "qdi/dual_rail.hpp"

namespace qdi {

//! Truth table over n inputs. Bit i holds f at the assignment whose
//! integer value is i with variable n as the most significant bit.
class boolean_function {
public:
  static constexpr int max_inputs = 16;

  boolean_function(int n, std::vector<bool> bits) : n_(n), bits_(std::move(bits)) {
    if (n < 1 || n > max_inputs) {
      throw std::invalid_argument("boolean_function requires 1 <= n <= " + std::to_string(max_inputs) +
                                  ", got n=" + std::to_string(n));
    }
    const std::size_t expected = std::size_t{1} << n;
    if (bits_.size() != expected) {
      throw std::invalid_argument("truth table for n=" + std::to_string(n) + " requires " +
                                  std::to_string(expected) + " bits, got " + std::to_string(bits_.size()));
    }
  }

  int n() const { return n_; }
  std::uint32_t size() const { return std::uint32_t{1} << n_; }

  bool value(std::uint32_t index) const {
    if (index >= size()) {
      throw std::out_of_range("minterm index " + std::to_string(index) + " out of range for n=" +
                              std::to_string(n_));
    }
    return bits_[index];
  }

  bool value(const codeword& cw) const {
    if (cw.n() != n_) {
      throw std::invalid_argument("codeword arity " + std::to_string(cw.n()) +
                                  " does not match function arity " + std::to_string(n_));
    }
    if (cw.is_spacer()) throw std::invalid_argument("cannot evaluate a boolean_function at the spacer");
    return bits_[cw.index()];
  }

  bool is_constant() const {
    for (std::size_t i = 1; i < bits_.size(); ++i) {
      if (bits_[i] != bits_[0]) return false;
    }
    return true;
  }

  const std::vector<bool>& bits() const { return bits_; }

  friend bool operator==(const boolean_function&, const boolean_function&) = default;

private:
  int n_;
  std::vector<bool> bits_;
};

//! Parses the truth table text format:
//!   line 1: n=<k>
//!   line 2: 2^k characters of 0/1, index 0 first
//! Blank trailing lines are tolerated; anything else is an error that
//! names the offending line.
inline boolean_function parse_truth_table(std::istream& in) {
  auto next_line = [&in](int number, std::string& out) {
    if (!std::getline(in, out)) {
      throw std::runtime_error("line " + std::to_string(number) + ": unexpected end of input");
    }
    if (!out.empty() && out.back() == '\r') out.pop_back();
  };

  std::string line;
  next_line(1, line);
  if (line.rfind("n=", 0) != 0) {
    throw std::runtime_error("line 1: expected 'n=<k>', got '" + line + "'");
  }
  int n = 0;
  try {
    std::size_t pos = 0;
    n = std::stoi(line.substr(2), &pos);
    if (pos != line.size() - 2) throw std::invalid_argument("");
  } catch (const std::exception&) {
    throw std::runtime_error("line 1: malformed input count in '" + line + "'");
  }
  if (n < 1 || n > boolean_function::max_inputs) {
    throw std::runtime_error("line 1: n must be between 1 and " +
                             std::to_string(boolean_function::max_inputs) + ", got " + std::to_string(n));
  }

  next_line(2, line);
  const std::size_t expected = std::size_t{1} << n;
  if (line.size() != expected) {
    throw std::runtime_error("line 2: expected " + std::to_string(expected) +
                             " characters of 0/1, got " + std::to_string(line.size()));
  }
  std::vector<bool> bits(expected);
  for (std::size_t i = 0; i < expected; ++i) {
    if (line[i] != '0' && line[i] != '1') {
      throw std::runtime_error("line 2: invalid character '" + std::string(1, line[i]) +
                               "' at position " + std::to_string(i + 1));
    }
    bits[i] = line[i] == '1';
  }

  int extra_line = 3;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) {
      throw std::runtime_error("line " + std::to_string(extra_line) + ": unexpected trailing content");
    }
    ++extra_line;
  }
  return boolean_function(n, std::move(bits));
}

inline boolean_function parse_truth_table(const std::string& text) {
  std::istringstream in(text);
  return parse_truth_table(in);
}

inline std::string render_truth_table(const boolean_function& f) {
  std::string out = "n=" + std::to_string(f.n()) + "\n";
  for (std::uint32_t i = 0; i < f.size(); ++i) out.push_back(f.value(i) ? '1' : '0');
  out.push_back('\n');
  return out;
}

}  // namespace qdi
