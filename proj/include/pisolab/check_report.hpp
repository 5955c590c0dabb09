#pragma once

#include <string>
#include <vector>

namespace pisolab {

// Outcome of a pointwise check. A failing report always carries at least one
// witness; witness lists are capped (deterministically, in window order) so
// that sweeping failures stay readable.
struct Witness {
  std::vector<std::string> elements;  // the pair/triple being checked
  std::string basis_point;
  std::string lhs;  // "0" or "<coeff>*eps[<point>]"
  std::string rhs;
};

struct CheckReport {
  std::string check;
  std::string semigroup;
  bool pass = true;
  std::vector<Witness> witnesses;
};

inline constexpr std::size_t kWitnessCap = 8;

}  // namespace pisolab
