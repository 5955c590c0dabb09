#pragma once

// Finite test windows: deterministic, duplicate-free element enumerations
// used as sample sets for pointwise operator checks. Orderings are fixed
// (lex for boxes, length-lex for words, numeric for N^x, left-major for
// products) so that reports are byte-for-byte reproducible.
//
// Grammar (exact):
//   Nk:k=<int>,max=<int>
//   Free:n=<int>,len=<int>
//   NTimes:primes=<p1>,<p2>,...;maxexp=<int>
//   Prod:<spec>|<spec>          (n-ary: further | add factors)
//   Op:<spec>

#include <cstdint>
#include <string>
#include <vector>

#include "pisolab/semigroup.hpp"

namespace pisolab {

struct WindowSpec {
  enum class Kind { Nk, Free, NTimes, Prod, Op };
  Kind kind = Kind::Nk;
  int k = 1;                        // Nk
  int n = 2;                        // Free
  std::int64_t bound = 0;           // max | len | maxexp
  std::vector<std::int64_t> primes; // NTimes
  std::vector<WindowSpec> parts;    // Prod (>= 2), Op (1)

  Descriptor descriptor() const;
  // Same shape with every bound multiplied (window of size 2W etc.).
  WindowSpec scaled(std::int64_t factor) const;
  std::string to_string() const;
};

WindowSpec parse_window_spec(const std::string& text);

std::vector<Element> enumerate_window(const WindowSpec& spec);

// Elements of `spec` scaled by 2, unioned with all pairwise left and right
// LCMs of the unscaled window, in canonical order. This is the default basis
// window for covariance checks: the LCM points are where the conditions bite.
std::vector<Element> basis_window(const WindowSpec& spec);

}  // namespace pisolab
