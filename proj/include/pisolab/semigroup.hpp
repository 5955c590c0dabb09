#pragma once

// Exact arithmetic and LCM calculus for concrete unital right-cancellative
// semigroups in which any two principal one-sided ideals intersect either
// trivially or in another principal ideal:
//
//   N^k   (componentwise addition; lcm = componentwise max)
//   N^x   (positive integers under multiplication; lcm = arithmetic lcm)
//   F_n^+ (free monoid on n letters; ideals are suffix/prefix sets)
//   direct products (componentwise) and opposites (reversed multiplication).
//
// Every implemented semigroup has trivial unit group, so LCMs and ideal
// quotients are unique elements, not merely unique up to an invertible.
// The API would need an "up to unit" caveat before admitting semigroups
// with nontrivial units.

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "pisolab/rational.hpp"

namespace pisolab {

struct Descriptor {
  enum class Kind { NaturalsK, NTimes, FreeMonoid, Product, Opposite };
  Kind kind = Kind::NaturalsK;
  int param = 1;                   // k for NaturalsK, n for FreeMonoid
  std::vector<Descriptor> parts;   // factors for Product, {inner} for Opposite

  bool operator==(const Descriptor&) const = default;
};

Descriptor naturals(int k);
Descriptor ntimes();
Descriptor free_monoid(int n);
Descriptor product(std::vector<Descriptor> parts);
Descriptor opposite(Descriptor inner);  // unwraps a double opposite

std::string descriptor_to_string(const Descriptor& d);

// Letters usable in free-monoid words; 'e' is reserved for the empty word.
extern const std::string kFreeLetters;

struct Element {
  using Vec = std::vector<std::int64_t>;
  using Word = std::string;
  using Tuple = std::vector<Element>;
  std::variant<Vec, Int, Word, Tuple> payload;

  bool operator==(const Element&) const = default;
};

// Descriptor-independent total order (used for canonical map keys and
// deterministic report output): vectors lexicographically, integers
// numerically, words length-lexicographically, tuples componentwise.
int compare(const Element& a, const Element& b);
struct ElementLess {
  bool operator()(const Element& a, const Element& b) const {
    return compare(a, b) < 0;
  }
};

Element identity(const Descriptor& d);
bool conforms(const Descriptor& d, const Element& x);
bool is_identity(const Descriptor& d, const Element& x);

Element multiply(const Descriptor& d, const Element& x, const Element& y);

// Which principal ideal the membership-with-witness question refers to.
enum class Side {
  LeftIdeal,   // r in Py: find s with r = s*y
  RightIdeal,  // r in yP: find s with r = y*s
};

// Unique witness by right (resp. left) cancellation, or absent.
std::optional<Element> ideal_quotient(const Descriptor& d, const Element& r,
                                      const Element& y, Side side);

// z with Px n Py = Pz (resp. xP n yP = zP), or absent when the ideals are
// disjoint. Opposite semigroups swap the two.
std::optional<Element> left_lcm(const Descriptor& d, const Element& x,
                                const Element& y);
std::optional<Element> right_lcm(const Descriptor& d, const Element& x,
                                 const Element& y);

// Iterated right LCM of a nonempty finite set; absent as soon as any partial
// fold is absent. Fold-order independent because units are trivial.
std::optional<Element> sigma(const Descriptor& d,
                             const std::vector<Element>& f);

std::string element_to_string(const Element& x);
Element parse_element(const Descriptor& d, const std::string& text);

// Splits "a,b,(1,2),c" at commas that are not nested inside parentheses.
std::vector<std::string> split_top_level(const std::string& text, char sep);

}  // namespace pisolab
