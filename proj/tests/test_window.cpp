#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "pisolab/window.hpp"

using namespace pisolab;

namespace {

std::vector<std::string> strings(const std::vector<Element>& els) {
  std::vector<std::string> out;
  for (const auto& x : els) out.push_back(element_to_string(x));
  return out;
}

}  // namespace

TEST_CASE("grammar round-trips") {
  for (const std::string text :
       {"Nk:k=2,max=4", "Free:n=2,len=3", "NTimes:primes=2,3,5;maxexp=2",
        "Prod:Nk:k=1,max=2|Free:n=2,len=1", "Op:Free:n=2,len=2"}) {
    CHECK(parse_window_spec(text).to_string() == text);
  }
  CHECK_THROWS_AS(parse_window_spec("Nk:k=1,max=banana"),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_window_spec("Weird:stuff"), std::invalid_argument);
  CHECK_THROWS_AS(parse_window_spec("Nk:k=0,max=3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_window_spec("NTimes:primes=4;maxexp=1"),
                  std::invalid_argument);
}

TEST_CASE("box enumeration is lexicographic") {
  const auto w = enumerate_window(parse_window_spec("Nk:k=2,max=1"));
  CHECK(strings(w) ==
        std::vector<std::string>{"(0,0)", "(0,1)", "(1,0)", "(1,1)"});
  CHECK(enumerate_window(parse_window_spec("Nk:k=1,max=6")).size() == 7);
}

TEST_CASE("word enumeration is length-lex") {
  const auto w = enumerate_window(parse_window_spec("Free:n=2,len=2"));
  CHECK(strings(w) ==
        std::vector<std::string>{"e", "a", "b", "aa", "ab", "ba", "bb"});
}

TEST_CASE("NTimes enumeration is numeric on the divisor lattice") {
  const auto w = enumerate_window(parse_window_spec("NTimes:primes=2,3;maxexp=1"));
  CHECK(strings(w) == std::vector<std::string>{"1", "2", "3", "6"});
  const auto big =
      enumerate_window(parse_window_spec("NTimes:primes=2,3,5;maxexp=2"));
  CHECK(big.size() == 27);
  CHECK(element_to_string(big.back()) == "900");
}

TEST_CASE("product windows are left-major") {
  const auto w = enumerate_window(
      parse_window_spec("Prod:Nk:k=1,max=1|Free:n=2,len=1"));
  CHECK(strings(w) == std::vector<std::string>{"(0|e)", "(0|a)", "(0|b)",
                                               "(1|e)", "(1|a)", "(1|b)"});
}

TEST_CASE("opposite windows enumerate the inner semigroup") {
  const auto w = enumerate_window(parse_window_spec("Op:Free:n=2,len=1"));
  CHECK(strings(w) == std::vector<std::string>{"e", "a", "b"});
  CHECK(parse_window_spec("Op:Free:n=2,len=1").descriptor() ==
        opposite(free_monoid(2)));
}

TEST_CASE("scaling multiplies bounds") {
  const WindowSpec s = parse_window_spec("Nk:k=2,max=3").scaled(2);
  CHECK(s.to_string() == "Nk:k=2,max=6");
  CHECK(parse_window_spec("Prod:Nk:k=1,max=2|Free:n=2,len=1")
            .scaled(3)
            .to_string() == "Prod:Nk:k=1,max=6|Free:n=2,len=3");
}

TEST_CASE("basis windows contain the scaled window and all pairwise LCMs") {
  const WindowSpec spec = parse_window_spec("Free:n=2,len=2");
  const auto basis = basis_window(spec);
  const auto names = strings(basis);
  const std::set<std::string> have(names.begin(), names.end());
  for (const auto& x : strings(enumerate_window(spec.scaled(2))))
    CHECK(have.count(x) == 1);
  const Descriptor d = spec.descriptor();
  const auto w = enumerate_window(spec);
  for (const auto& x : w)
    for (const auto& y : w) {
      if (const auto z = left_lcm(d, x, y))
        CHECK(have.count(element_to_string(*z)) == 1);
      if (const auto z = right_lcm(d, x, y))
        CHECK(have.count(element_to_string(*z)) == 1);
    }
  // No duplicates.
  CHECK(have.size() == basis.size());
}
