#pragma once

#include <span>
#include <string>
#include <vector>

#include "refinery/algebra.hpp"

namespace refinery {

// Term tree over the signature symbols and variables x1..xk.
struct Term {
  int var = -1;  // >= 0: variable index (0-based); node is a leaf
  int op = -1;   // >= 0: symbol index; used when var < 0
  std::vector<Term> children;

  static Term variable(int index);
  static Term apply(int op, std::vector<Term> children);

  int eval(const FiniteAlgebra& a, std::span<const int> env) const;
  std::string to_sexpr(const Signature& sig) const;  // variables print as x1, x2, ...
};

}  // namespace refinery
