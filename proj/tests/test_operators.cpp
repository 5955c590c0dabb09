#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "pisolab/operators.hpp"
#include "pisolab/window.hpp"

using namespace pisolab;

namespace {

Element el(const Descriptor& d, const std::string& text) {
  return parse_element(d, text);
}

BasisPoint pt1(const Descriptor& d, const std::string& r) {
  return BasisPoint{{el(d, r)}};
}

BasisPoint pt2(const Descriptor& d, const std::string& r,
               const std::string& s) {
  return BasisPoint{{el(d, r), el(d, s)}};
}

std::string applied(const MonomialOp& op, const BasisPoint& b) {
  return apply_result_to_string(apply(op, b));
}

}  // namespace

TEST_CASE("shift and coshift atoms on l2(P)") {
  const Descriptor n = naturals(1);
  CHECK(applied(shift_op(n, el(n, "1")), pt1(n, "2")) == "1/1*eps[3]");
  CHECK(applied(coshift_op(n, el(n, "1")), pt1(n, "3")) == "1/1*eps[2]");
  CHECK(applied(coshift_op(n, el(n, "1")), pt1(n, "0")) == "0");
  CHECK(applied(identity_op(n, Carrier::LtwoP), pt1(n, "5")) ==
        "1/1*eps[5]");

  const Descriptor f2 = free_monoid(2);
  // Right translation: S_a eps_b = eps_{ba}.
  CHECK(applied(shift_op(f2, el(f2, "a")), pt1(f2, "b")) == "1/1*eps[ba]");
  CHECK(applied(coshift_op(f2, el(f2, "a")), pt1(f2, "ba")) == "1/1*eps[b]");
  CHECK(applied(coshift_op(f2, el(f2, "a")), pt1(f2, "ab")) == "0");
  CHECK(applied(coshift_op(f2, el(f2, "ba")), pt1(f2, "ba")) == "1/1*eps[e]");
}

TEST_CASE("diagonal atoms multiply by the function value") {
  const Descriptor n = naturals(1);
  const BpFunction f = bp_sub(BpFunction::indicator(n, el(n, "1")),
                              bp_scale(Rat(1, 2), BpFunction::unit(n)));
  // f(0) = -1/2, f(1) = 1/2.
  CHECK(applied(diag_op(f), pt1(n, "0")) == "-1/2*eps[0]");
  CHECK(applied(diag_op(f), pt1(n, "1")) == "1/2*eps[1]");
  CHECK(applied(diag_op(BpFunction::zero(n)), pt1(n, "1")) == "0");
}

TEST_CASE("compressed atoms act on constrained pairs") {
  const Descriptor n = naturals(1);
  const Element one = el(n, "1");
  // V_1: eps_(r',s') -> eps_(r,s') iff r' = r+1.
  CHECK(applied(comp_shift_op(n, one), pt2(n, "2", "3")) ==
        "1/1*eps[(1;3)]");
  CHECK(applied(comp_shift_op(n, one), pt2(n, "0", "2")) == "0");
  // V_1*: eps_(r,s) -> eps_(r+1,s) iff s >= r+1.
  CHECK(applied(comp_coshift_op(n, one), pt2(n, "1", "3")) ==
        "1/1*eps[(2;3)]");
  CHECK(applied(comp_coshift_op(n, one), pt2(n, "1", "1")) == "0");
  // rho(1_2) multiplies eps_(r,s) by [tau_r(1_2)](s) = [1_{r+2}](s).
  const MonomialOp rho = comp_diag_op(BpFunction::indicator(n, el(n, "2")));
  CHECK(applied(rho, pt2(n, "1", "3")) == "1/1*eps[(1;3)]");
  CHECK(applied(rho, pt2(n, "1", "2")) == "0");
}

TEST_CASE("pair constraint and point formatting") {
  const Descriptor f2 = free_monoid(2);
  CHECK(pair_constraint_ok(f2, el(f2, "a"), el(f2, "ab")));
  CHECK(!pair_constraint_ok(f2, el(f2, "a"), el(f2, "ba")));
  CHECK(basis_point_to_string(pt2(f2, "a", "ab")) == "(a;ab)");
  CHECK(basis_point_to_string(pt1(f2, "e")) == "e");

  const auto pts = basis_points_pairs(
      naturals(1),
      enumerate_window(parse_window_spec("Nk:k=1,max=2")),
      enumerate_window(parse_window_spec("Nk:k=1,max=2")));
  // r-major constrained pairs over {0,1,2}.
  REQUIRE(pts.size() == 6);
  CHECK(basis_point_to_string(pts[0]) == "(0;0)");
  CHECK(basis_point_to_string(pts[3]) == "(1;1)");
  CHECK(basis_point_to_string(pts[5]) == "(2;2)");
}

TEST_CASE("adjoint reverses words and swaps atom types") {
  const Descriptor n = naturals(1);
  const MonomialOp s = shift_op(n, el(n, "1"));
  const MonomialOp w = coshift_op(n, el(n, "1"));
  const auto window = basis_points_l2(
      enumerate_window(parse_window_spec("Nk:k=1,max=6")));
  CHECK(equal_on_window(adjoint(s), w, window).equal);
  CHECK(equal_on_window(adjoint(adjoint(compose(s, w))), compose(s, w),
                        window).equal);
  // (AB)* = B*A*.
  CHECK(equal_on_window(adjoint(compose(s, w)),
                        compose(adjoint(w), adjoint(s)), window).equal);
}

TEST_CASE("S_1 W_1 is a proper subprojection of the identity") {
  const Descriptor n = naturals(1);
  const MonomialOp sw =
      compose(shift_op(n, el(n, "1")), coshift_op(n, el(n, "1")));
  const auto window = basis_points_l2(
      enumerate_window(parse_window_spec("Nk:k=1,max=4")));
  const auto report = equal_on_window(sw, identity_op(n, Carrier::LtwoP),
                                      window);
  CHECK(!report.equal);
  REQUIRE(!report.witnesses.empty());
  // S_1 W_1 kills eps_0 while the identity keeps it.
  CHECK(report.witnesses[0].point == pt1(n, "0"));
  CHECK(report.witnesses[0].lhs == "0");
  CHECK(report.witnesses[0].rhs == "1/1*eps[0]");
  // W_1 S_1 = 1, by contrast.
  CHECK(equal_on_window(
            compose(coshift_op(n, el(n, "1")), shift_op(n, el(n, "1"))),
            identity_op(n, Carrier::LtwoP), window)
            .equal);
}

TEST_CASE("shift words satisfy the left-LCM exchange relation") {
  // S_x* S_y = S_r S_s* whenever the left LCM z = rx = sy exists.
  const Descriptor f2 = free_monoid(2);
  const auto window = basis_points_l2(
      enumerate_window(parse_window_spec("Free:n=2,len=4")));

  // left_lcm(a, ba) = ba = (b)a = (e)(ba): S_a* S_ba = S_b.
  CHECK(equal_on_window(
            compose(adjoint(shift_op(f2, el(f2, "a"))),
                    shift_op(f2, el(f2, "ba"))),
            shift_op(f2, el(f2, "b")), window)
            .equal);
  // left_lcm(ab, b) = ab = (e)(ab) = (a)b: S_ab* S_b = S_a*.
  CHECK(equal_on_window(
            compose(adjoint(shift_op(f2, el(f2, "ab"))),
                    shift_op(f2, el(f2, "b"))),
            adjoint(shift_op(f2, el(f2, "a"))), window)
            .equal);
  // Disjoint left ideals: S_a* S_b = 0 on the window.
  const MonomialOp zeroish =
      compose(adjoint(shift_op(f2, el(f2, "a"))), shift_op(f2, el(f2, "b")));
  for (const auto& b : window) CHECK(!apply(zeroish, b));
}

TEST_CASE("witness lists are capped deterministically") {
  const Descriptor n = naturals(1);
  const auto window = basis_points_l2(
      enumerate_window(parse_window_spec("Nk:k=1,max=20")));
  const auto report = equal_on_window(identity_op(n, Carrier::LtwoP),
                                      diag_op(BpFunction::zero(n)), window);
  CHECK(!report.equal);
  CHECK(report.witnesses.size() == kWitnessCap);
  CHECK(report.witnesses[0].point == pt1(n, "0"));

  const auto loose = equal_on_window(identity_op(n, Carrier::LtwoP),
                                     diag_op(BpFunction::zero(n)), window, 3);
  CHECK(loose.witnesses.size() == 3);
}

TEST_CASE("composition requires a common carrier") {
  const Descriptor n = naturals(1);
  CHECK_THROWS_AS(compose(shift_op(n, el(n, "1")),
                          comp_shift_op(n, el(n, "1"))),
                  std::invalid_argument);
  CHECK_THROWS_AS(compose(shift_op(n, el(n, "1")),
                          shift_op(naturals(2), el(naturals(2), "(1,0)"))),
                  std::invalid_argument);
}

TEST_CASE("canonical representations assign the advertised atoms") {
  const Descriptor f2 = free_monoid(2);
  const auto w_rep = build_representation(f2, RepKind::CanonicalW);
  CHECK(w_rep.element_descriptor == f2);
  CHECK(w_rep.carrier == Carrier::LtwoP);
  CHECK(applied(w_rep.assign(el(f2, "a")), pt1(f2, "ba")) == "1/1*eps[b]");

  const auto s_rep = build_representation(f2, RepKind::CanonicalS);
  CHECK(s_rep.element_descriptor == opposite(f2));
  CHECK(applied(s_rep.assign(el(f2, "a")), pt1(f2, "b")) == "1/1*eps[ba]");
  // S_x S_y = S_{yx}: a homomorphism out of the opposite semigroup.
  const auto window = basis_points_l2(
      enumerate_window(parse_window_spec("Free:n=2,len=3")));
  CHECK(equal_on_window(
            compose(s_rep.assign(el(f2, "a")), s_rep.assign(el(f2, "b"))),
            s_rep.assign(el(f2, "ba")), window)
            .equal);

  const auto c_rep = build_representation(naturals(1), RepKind::Compressed);
  CHECK(c_rep.carrier == Carrier::Pairs);
  CHECK(c_rep.has_diag());
  CHECK(!w_rep.has_diag());
}

TEST_CASE("the degenerate free representation factors through word length") {
  const Descriptor f2 = free_monoid(2);
  const auto rep = build_representation(f2, RepKind::DegenerateFree);
  const Descriptor n = rep.basis_descriptor;
  CHECK(rep.element_descriptor == f2);
  CHECK(n == naturals(1));
  // Every word acts as W_{|w|} on l2(N).
  CHECK(applied(rep.assign(el(f2, "ab")), pt1(n, "5")) == "1/1*eps[3]");
  CHECK(applied(rep.assign(el(f2, "ba")), pt1(n, "5")) == "1/1*eps[3]");
  CHECK(applied(rep.assign(el(f2, "ab")), pt1(n, "1")) == "0");
  CHECK(applied(rep.assign(el(f2, "e")), pt1(n, "1")) == "1/1*eps[1]");
  CHECK_THROWS_AS(build_representation(naturals(1), RepKind::DegenerateFree),
                  std::invalid_argument);
}

TEST_CASE("carrier points respect the representation's basis") {
  const Descriptor n = naturals(1);
  const auto window = enumerate_window(parse_window_spec("Nk:k=1,max=2"));
  const auto w_rep = build_representation(n, RepKind::CanonicalW);
  CHECK(carrier_points(w_rep, window).size() == 3);
  const auto c_rep = build_representation(n, RepKind::Compressed);
  const auto pts = carrier_points(c_rep, window);
  CHECK(pts.size() == 6);
  for (const auto& p : pts) {
    REQUIRE(p.coords.size() == 2);
    CHECK(pair_constraint_ok(n, p.coords[0], p.coords[1]));
  }
}

TEST_CASE("representation kind names round-trip") {
  for (const RepKind k : {RepKind::CanonicalW, RepKind::CanonicalS,
                          RepKind::Compressed, RepKind::DegenerateFree})
    CHECK(parse_rep_kind(rep_kind_name(k)) == k);
  CHECK(rep_kind_name(RepKind::CanonicalW) == "canonical_W");
  CHECK(rep_kind_name(RepKind::DegenerateFree) == "degenerate_free");
  CHECK_THROWS_AS(parse_rep_kind("banana"), std::invalid_argument);
}
