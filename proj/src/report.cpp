#include "pisolab/report.hpp"

#include <stdexcept>

namespace pisolab {

using nlohmann::json;

json check_report_json(const CheckReport& report) {
  json witnesses = json::array();
  for (const auto& w : report.witnesses) {
    witnesses.push_back(json{{"elements", w.elements},
                             {"basis_point", w.basis_point},
                             {"lhs", w.lhs},
                             {"rhs", w.rhs}});
  }
  return json{{"check", report.check},
              {"semigroup", report.semigroup},
              {"status", report.pass ? "pass" : "fail"},
              {"witnesses", witnesses}};
}

json audit_report_json(const AuditReport& audit) {
  json direct = json::array();
  for (const auto& c : audit.direct) direct.push_back(check_report_json(c));
  return json{{"kind", audit.kind},
              {"criterion", check_report_json(audit.criterion)},
              {"direct", direct},
              {"criterion_verdict", audit.criterion_verdict ? "pass" : "fail"},
              {"direct_verdict", audit.direct_verdict ? "pass" : "fail"},
              {"agree", audit.agree}};
}

json bp_function_json(const BpFunction& f) {
  json terms = json::array();
  for (const auto& [u, coeff] : f.terms)
    terms.push_back(
        json{{"u", element_to_string(u)}, {"coeff", rat_to_string(coeff)}});
  return terms;
}

BpFunction bp_function_from_json(const Descriptor& d, const json& j) {
  if (!j.is_array())
    throw std::invalid_argument("diagonal function JSON must be an array");
  BpFunction f = BpFunction::zero(d);
  for (const auto& term : j) {
    const Element u = parse_element(d, term.at("u").get<std::string>());
    const Rat coeff = parse_rat(term.at("coeff").get<std::string>());
    f = bp_add(f, bp_scale(coeff, BpFunction::indicator(d, u)));
  }
  return f;
}

json qa_report_json(const QaReport& report) {
  json f = json::array();
  for (const auto& x : report.f) f.push_back(element_to_string(x));
  json entries = json::array();
  for (const auto& e : report.entries) {
    json subset = json::array();
    for (const auto& x : e.subset) subset.push_back(element_to_string(x));
    entries.push_back(
        json{{"subset", subset},
             {"sigma", e.sigma_a ? json(element_to_string(*e.sigma_a))
                                 : json(nullptr)},
             {"nonzero", e.nonzero},
             {"q", bp_function_json(e.q)}});
  }
  return json{{"semigroup", descriptor_to_string(report.descriptor)},
              {"f", f},
              {"entries", entries}};
}

json cp_element_json(const CpElement& u) {
  json terms = json::array();
  for (const auto& [key, f] : u.terms)
    terms.push_back(json{{"x", element_to_string(key.x)},
                         {"y", element_to_string(key.y)},
                         {"f", bp_function_json(f)},
                         {"coeff", "1/1"}});
  return terms;
}

CpElement cp_element_from_json(const Descriptor& d, const json& j) {
  if (!j.is_array())
    throw std::invalid_argument("crossed-product JSON must be an array");
  CpElement u = CpElement::zero(d);
  for (const auto& term : j) {
    const Element x = parse_element(d, term.at("x").get<std::string>());
    const Element y = parse_element(d, term.at("y").get<std::string>());
    BpFunction f = bp_function_from_json(d, term.at("f"));
    if (term.contains("coeff"))
      f = bp_scale(parse_rat(term.at("coeff").get<std::string>()), f);
    u = cp_add(u, cp_monomial(d, x, f, y));
  }
  return u;
}

json bd_invariants_json(const BdInvariants& inv) {
  return json{{"p", inv.p.get_str()},
              {"q", inv.q.get_str()},
              {"ord", inv.ord.get_str()},
              {"L", inv.L},
              {"count", inv.count.get_str()},
              {"supernatural", supernatural_to_string(inv.supernatural)}};
}

std::string bd_invariants_csv(const BdInvariants& inv) {
  return "p,q,ord,L,count,supernatural\n" + inv.p.get_str() + "," +
         inv.q.get_str() + "," + inv.ord.get_str() + "," +
         std::to_string(inv.L) + "," + inv.count.get_str() + "," +
         supernatural_to_string(inv.supernatural) + "\n";
}

json ga_element_json(const GaElement& a) {
  json terms = json::array();
  for (const auto& [r, c] : a.coeffs)
    terms.push_back(json{{"s", r.get_str()}, {"coeff", rat_to_string(c)}});
  return json{{"modulus", a.modulus.get_str()}, {"terms", terms}};
}

json report_envelope(const json& config, const json& results) {
  return json{{"tool", kToolName},
              {"version", kToolVersion},
              {"config", config},
              {"results", results}};
}

}  // namespace pisolab
