#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pisolab/covariance.hpp"
#include "pisolab/window.hpp"

using namespace pisolab;

namespace {

Element el(const Descriptor& d, const std::string& text) {
  return parse_element(d, text);
}

struct Setup {
  Descriptor d;
  std::vector<Element> elements;
  std::vector<BasisPoint> basis;
};

Setup l2_setup(const std::string& spec_text) {
  const WindowSpec spec = parse_window_spec(spec_text);
  return {spec.descriptor(), enumerate_window(spec),
          basis_points_l2(basis_window(spec))};
}

}  // namespace

TEST_CASE("the canonical coshift representation is right-Nica covariant") {
  for (const std::string text :
       {"Nk:k=2,max=3", "Free:n=2,len=3", "NTimes:primes=2,3;maxexp=2"}) {
    const Setup s = l2_setup(text);
    const auto rep = build_representation(s.d, RepKind::CanonicalW);
    const auto piso = check_piso_rep(rep, s.elements, s.basis);
    CHECK(piso.pass);
    const auto nica = check_right_nica(rep, s.elements, s.basis);
    CHECK(nica.pass);
    CHECK(nica.check == "right_nica");
    CHECK(nica.witnesses.empty());
  }
}

TEST_CASE("coshifts over the naturals are also left-Nica covariant") {
  const Setup s = l2_setup("Nk:k=1,max=4");
  const auto rep = build_representation(s.d, RepKind::CanonicalW);
  CHECK(check_left_nica(rep, s.elements, s.basis).pass);
}

TEST_CASE("coshifts over the free monoid violate the left condition") {
  // W_x W_x* = 1 for every x, but aP n bP is empty: the range-projection
  // product cannot vanish.
  const Setup s = l2_setup("Free:n=2,len=2");
  const auto rep = build_representation(s.d, RepKind::CanonicalW);
  const auto report = check_left_nica(rep, s.elements, s.basis);
  CHECK(!report.pass);
  REQUIRE(!report.witnesses.empty());
  CHECK(report.witnesses[0].elements == std::vector<std::string>{"a", "b"});
  CHECK(report.witnesses[0].rhs == "0");
}

TEST_CASE("the length-degenerate representation fails both Nica conditions") {
  const Descriptor f2 = free_monoid(2);
  const auto rep = build_representation(f2, RepKind::DegenerateFree);
  const auto elements = enumerate_window(parse_window_spec("Free:n=2,len=2"));
  const auto basis = basis_points_l2(
      enumerate_window(parse_window_spec("Nk:k=1,max=6")));

  CHECK(check_piso_rep(rep, elements, basis).pass);

  const auto right = check_right_nica(rep, elements, basis);
  CHECK(!right.pass);
  REQUIRE(!right.witnesses.empty());
  // First failure: initial projections of a and b both contain eps_1, yet
  // their left ideals are disjoint.
  CHECK(right.witnesses[0].elements == std::vector<std::string>{"a", "b"});
  CHECK(right.witnesses[0].basis_point == "1");
  CHECK(right.witnesses[0].lhs == "1/1*eps[1]");
  CHECK(right.witnesses[0].rhs == "0");

  const auto left = check_left_nica(rep, elements, basis);
  CHECK(!left.pass);
  REQUIRE(!left.witnesses.empty());
  CHECK(left.witnesses[0].elements == std::vector<std::string>{"a", "b"});
  CHECK(left.witnesses[0].basis_point == "0");
  CHECK(left.witnesses[0].lhs == "1/1*eps[0]");
  CHECK(left.witnesses[0].rhs == "0");
}

TEST_CASE("the isometric shift representation is left-Nica covariant") {
  for (const std::string text : {"Nk:k=1,max=4", "Free:n=2,len=2"}) {
    const Setup s = l2_setup(text);
    const auto rep = build_representation(s.d, RepKind::CanonicalS);
    // The representation acts for the opposite semigroup.
    std::vector<Element> elements = s.elements;
    CHECK(check_piso_rep(rep, elements, s.basis).pass);
    CHECK(check_left_nica(rep, elements, s.basis).pass);
  }
}

TEST_CASE("the compressed representation with its diagonal is a covariant pair") {
  for (const std::string text :
       {"Nk:k=1,max=3", "Nk:k=2,max=2", "Free:n=2,len=2"}) {
    const WindowSpec spec = parse_window_spec(text);
    const Descriptor d = spec.descriptor();
    const auto rep = build_representation(d, RepKind::Compressed);
    const auto elements = enumerate_window(spec);
    const auto basis = carrier_points(rep, basis_window(spec));
    std::vector<BpFunction> gens;
    for (const auto& x : elements)
      gens.push_back(BpFunction::indicator(d, x));

    CHECK(check_piso_rep(rep, elements, basis).pass);
    CHECK(check_right_nica(rep, elements, basis).pass);
    CHECK(check_left_nica(rep, elements, basis).pass);
    CHECK(check_covariant_pair(rep, elements, gens, basis).pass);
  }
}

TEST_CASE("covariant-pair checking requires a diagonal representation") {
  const Setup s = l2_setup("Nk:k=1,max=2");
  const auto rep = build_representation(s.d, RepKind::CanonicalW);
  CHECK_THROWS_AS(check_covariant_pair(rep, s.elements,
                                       {BpFunction::unit(s.d)}, s.basis),
                  std::invalid_argument);
}

TEST_CASE("free-monoid audits match criterion and direct verdicts") {
  const Setup s = l2_setup("Free:n=2,len=2");

  const auto w_rep = build_representation(s.d, RepKind::CanonicalW);
  const auto wr = criterion_equivalence_audit(w_rep, AuditKind::FreeRight,
                                              s.elements, s.basis);
  CHECK(wr.kind == "free_right");
  CHECK(wr.criterion_verdict);
  CHECK(wr.direct_verdict);
  CHECK(wr.agree);

  const auto wl = criterion_equivalence_audit(w_rep, AuditKind::FreeLeft,
                                              s.elements, s.basis);
  CHECK(wl.kind == "free_left");
  CHECK(!wl.criterion_verdict);
  CHECK(!wl.direct_verdict);
  CHECK(wl.agree);

  const auto d_rep = build_representation(s.d, RepKind::DegenerateFree);
  const auto d_basis = basis_points_l2(
      enumerate_window(parse_window_spec("Nk:k=1,max=6")));
  for (const AuditKind k : {AuditKind::FreeRight, AuditKind::FreeLeft}) {
    const auto audit =
        criterion_equivalence_audit(d_rep, k, s.elements, d_basis);
    CHECK(!audit.criterion_verdict);
    CHECK(!audit.direct_verdict);
    CHECK(audit.agree);
  }
}

TEST_CASE("coprime commutation audit over the multiplicative naturals") {
  const Setup s = l2_setup("NTimes:primes=2,3;maxexp=2");
  const auto rep = build_representation(s.d, RepKind::CanonicalW);
  const auto audit = criterion_equivalence_audit(rep, AuditKind::NTimesBicov,
                                                 s.elements, s.basis);
  CHECK(audit.kind == "ntimes_bicov");
  CHECK(audit.criterion_verdict);
  CHECK(audit.direct_verdict);
  CHECK(audit.agree);
}

TEST_CASE("star-commuting coordinate audit over N^2") {
  const Setup s = l2_setup("Nk:k=2,max=2");
  const auto rep = build_representation(s.d, RepKind::CanonicalW);
  const auto audit = criterion_equivalence_audit(rep, AuditKind::N2Bicov,
                                                 s.elements, s.basis);
  CHECK(audit.kind == "n2_bicov");
  CHECK(audit.criterion_verdict);
  CHECK(audit.direct_verdict);
  CHECK(audit.agree);
}

TEST_CASE("product representations from star-commuting coordinate factors") {
  const Descriptor n = naturals(1);
  const Descriptor n2 = naturals(2);
  auto coordinate_rep = [&](int coord) {
    Representation rep = build_representation(n2, RepKind::CanonicalW);
    rep.element_descriptor = n;
    rep.assign = [=](const Element& x) {
      const auto v = std::get<Element::Vec>(x.payload)[0];
      Element::Vec embedded{0, 0};
      embedded[coord] = v;
      return coshift_op(n2, Element{embedded});
    };
    return rep;
  };

  const auto line = enumerate_window(parse_window_spec("Nk:k=1,max=2"));
  const auto basis = basis_points_l2(
      enumerate_window(parse_window_spec("Nk:k=2,max=5")));
  const auto result =
      product_rep(coordinate_rep(0), coordinate_rep(1), line, line, basis);
  CHECK(result.precheck.pass);
  REQUIRE(result.rep.has_value());

  // U_{(p,q)} agrees with the canonical coshift at the merged coordinate.
  const auto w2 = build_representation(n2, RepKind::CanonicalW);
  for (const auto& p : line)
    for (const auto& q : line) {
      const Element pair{Element::Tuple{p, q}};
      const auto pv = std::get<Element::Vec>(p.payload)[0];
      const auto qv = std::get<Element::Vec>(q.payload)[0];
      const Element merged{Element::Vec{pv, qv}};
      CHECK(equal_on_window(result.rep->assign(pair), w2.assign(merged),
                            basis)
                .equal);
    }
  CHECK(check_piso_rep(*result.rep,
                       enumerate_window(parse_window_spec(
                           "Prod:Nk:k=1,max=2|Nk:k=1,max=2")),
                       basis)
            .pass);
}

TEST_CASE("product construction refuses non-star-commuting factors") {
  // S_1 and W_1 on the same line: S_1 W_1 is a proper projection while
  // W_1 S_1 = 1, so plain commutation already fails.
  const Descriptor n = naturals(1);
  const auto s_rep = build_representation(n, RepKind::CanonicalS);
  const auto w_rep = build_representation(n, RepKind::CanonicalW);
  Representation s_plain = s_rep;
  s_plain.element_descriptor = n;  // both factors indexed by N itself
  const auto line = enumerate_window(parse_window_spec("Nk:k=1,max=2"));
  const auto basis = basis_points_l2(
      enumerate_window(parse_window_spec("Nk:k=1,max=5")));
  const auto result = product_rep(s_plain, w_rep, line, line, basis);
  CHECK(!result.precheck.pass);
  CHECK(!result.rep.has_value());
  CHECK(!result.precheck.witnesses.empty());
}

TEST_CASE("checkers reject empty windows") {
  const Setup s = l2_setup("Nk:k=1,max=2");
  const auto rep = build_representation(s.d, RepKind::CanonicalW);
  CHECK_THROWS_AS(check_right_nica(rep, {}, s.basis), std::invalid_argument);
  CHECK_THROWS_AS(check_right_nica(rep, s.elements, {}),
                  std::invalid_argument);
}
