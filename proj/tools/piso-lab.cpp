// piso-lab: exact checks and computations for left/right LCM semigroups,
// their partial-isometric representations, the diagonal projection calculus,
// crossed-product monomial arithmetic, and finite-level Bunce-Deddens data.
//
// Exit codes: 0 success / all checks pass, 1 check failure or domain error,
// 2 usage or config-parse error. Reports are deterministic functions of the
// configuration (sorted JSON keys, canonical rationals, no timestamps).
// PISO_LAB_THREADS caps internal parallelism.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "pisolab/covariance.hpp"
#include "pisolab/crossed_product.hpp"
#include "pisolab/padic.hpp"
#include "pisolab/report.hpp"
#include "pisolab/window.hpp"

namespace {

using namespace pisolab;
using nlohmann::json;

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text << "\n";
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write to '" + out_path + "'");
  out << text << "\n";
}

void emit_json(const std::string& out_path, const json& j) {
  emit(out_path, j.dump(2));
}

std::vector<Element> parse_element_list(const Descriptor& d,
                                        const std::string& text) {
  std::vector<Element> out;
  for (const auto& piece : split_top_level(text, ','))
    out.push_back(parse_element(d, piece));
  if (out.empty()) throw std::invalid_argument("empty element list");
  return out;
}

// Basis points matched to the representation: the scaled-and-LCM-closed
// window on the carrier's semigroup (the half line for degenerate_free).
std::vector<BasisPoint> default_basis(const Representation& rep,
                                      const WindowSpec& spec) {
  if (rep.kind == RepKind::DegenerateFree) {
    WindowSpec line;
    line.kind = WindowSpec::Kind::Nk;
    line.k = 1;
    line.bound = 2 * spec.bound + 2;
    return basis_points_l2(enumerate_window(line));
  }
  const std::vector<Element> window = basis_window(spec);
  if (rep.carrier == Carrier::LtwoP) return basis_points_l2(window);
  return basis_points_pairs(rep.basis_descriptor, window, window);
}

int cmd_lcm(const std::string& spec_text, const std::string& xs,
            const std::string& ys, const std::string& out_path) {
  const WindowSpec spec = parse_window_spec(spec_text);
  const Descriptor d = spec.descriptor();
  const Element x = parse_element(d, xs);
  const Element y = parse_element(d, ys);
  const auto zl = left_lcm(d, x, y);
  const auto zr = right_lcm(d, x, y);
  const json config{{"command", "lcm"},
                    {"semigroup", spec.to_string()},
                    {"x", xs},
                    {"y", ys}};
  const json results{
      {"x", element_to_string(x)},
      {"y", element_to_string(y)},
      {"left_lcm", zl ? json(element_to_string(*zl)) : json(nullptr)},
      {"right_lcm", zr ? json(element_to_string(*zr)) : json(nullptr)}};
  emit_json(out_path, report_envelope(config, results));
  return 0;
}

int cmd_sigma(const std::string& spec_text, const std::string& set_text,
              const std::string& out_path) {
  const WindowSpec spec = parse_window_spec(spec_text);
  const Descriptor d = spec.descriptor();
  const std::vector<Element> f = parse_element_list(d, set_text);
  const auto s = sigma(d, f);
  json set = json::array();
  for (const auto& x : f) set.push_back(element_to_string(x));
  const json config{{"command", "sigma"},
                    {"semigroup", spec.to_string()},
                    {"set", set_text}};
  const json results{
      {"set", set},
      {"sigma", s ? json(element_to_string(*s)) : json(nullptr)}};
  emit_json(out_path, report_envelope(config, results));
  return 0;
}

int cmd_check(const std::string& spec_text, const std::string& rep_name,
              const std::vector<std::string>& checks,
              const std::string& out_path) {
  const WindowSpec spec = parse_window_spec(spec_text);
  const Descriptor d = spec.descriptor();
  const Representation rep = build_representation(d, parse_rep_kind(rep_name));
  const std::vector<Element> elements = enumerate_window(spec);
  const std::vector<BasisPoint> basis = default_basis(rep, spec);

  json results = json::array();
  bool all_pass = true;
  for (const auto& name : checks) {
    CheckReport report;
    if (name == "piso") {
      report = check_piso_rep(rep, elements, basis);
    } else if (name == "right_nica") {
      report = check_right_nica(rep, elements, basis);
    } else if (name == "left_nica") {
      report = check_left_nica(rep, elements, basis);
    } else if (name == "covariant_pair") {
      std::vector<BpFunction> generators;
      for (const auto& x : elements)
        generators.push_back(
            BpFunction::indicator(rep.element_descriptor, x));
      report = check_covariant_pair(rep, elements, generators, basis);
    } else {
      throw std::invalid_argument("unknown check: '" + name + "'");
    }
    all_pass &= report.pass;
    results.push_back(check_report_json(report));
  }
  json checks_echo = json::array();
  for (const auto& name : checks) checks_echo.push_back(name);
  const json config{{"command", "check"},
                    {"semigroup", spec.to_string()},
                    {"rep", rep_name},
                    {"checks", checks_echo}};
  emit_json(out_path, report_envelope(config, results));
  return all_pass ? 0 : 1;
}

int cmd_qa(const std::string& spec_text, const std::string& set_text,
           const std::string& out_path) {
  const WindowSpec spec = parse_window_spec(spec_text);
  const Descriptor d = spec.descriptor();
  const QaReport report = qa_decomposition(d, parse_element_list(d, set_text));
  const json config{{"command", "qa"},
                    {"semigroup", spec.to_string()},
                    {"set", set_text}};
  emit_json(out_path, report_envelope(config, qa_report_json(report)));
  return 0;
}

int cmd_norm(const std::string& spec_text, const std::string& terms_text,
             const std::string& out_path) {
  const WindowSpec spec = parse_window_spec(spec_text);
  const Descriptor d = spec.descriptor();
  BpFunction f = BpFunction::zero(d);
  for (const auto& piece : split_top_level(terms_text, ';')) {
    const auto eq = piece.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("terms must look like '<element>=<p/q>'");
    const Element u = parse_element(d, piece.substr(0, eq));
    const Rat c = parse_rat(piece.substr(eq + 1));
    f = bp_add(f, bp_scale(c, BpFunction::indicator(d, u)));
  }
  const Rat formula = sup_norm_formula(f);
  // Evaluation window: the spec's window joined with every subset sigma, so
  // the sup is attained and the two methods must agree.
  std::vector<Element> window = basis_window(spec);
  std::vector<Element> support;
  for (const auto& [u, c] : f.terms) support.push_back(u);
  for (size_t mask = 1; mask < (size_t{1} << support.size()); ++mask) {
    std::vector<Element> subset;
    for (size_t i = 0; i < support.size(); ++i)
      if (mask >> i & 1) subset.push_back(support[i]);
    if (const auto s = sigma(d, subset)) window.push_back(*s);
  }
  const Rat windowed = sup_norm_window(f, window);
  const bool agree = formula == windowed;
  const json config{{"command", "norm"},
                    {"semigroup", spec.to_string()},
                    {"terms", terms_text}};
  const json results{{"f", bp_function_json(f)},
                     {"formula", rat_to_string(formula)},
                     {"window", rat_to_string(windowed)},
                     {"agree", agree}};
  emit_json(out_path, report_envelope(config, results));
  return agree ? 0 : 1;
}

// Shared by cp-mul --verify and the sampled mode: the represented product
// must match the composed representations pointwise.
bool oracle_agrees(const CpElement& u, const CpElement& v,
                   const std::vector<BasisPoint>& basis) {
  const CpElement uv = cp_multiply(u, v);
  for (const auto& b : basis) {
    if (cp_apply(uv, b) != cp_apply(u, cp_apply(v, {{b, make_rat(1)}})))
      return false;
  }
  return true;
}

int cmd_cp_mul(const std::string& spec_text, const std::string& u_text,
               const std::string& v_text, int sample, unsigned long seed,
               const std::string& out_path) {
  const WindowSpec spec = parse_window_spec(spec_text);
  const Descriptor d = spec.descriptor();
  const std::vector<Element> window = basis_window(spec);
  const std::vector<BasisPoint> basis = basis_points_pairs(d, window, window);

  if (sample > 0) {
    // Seeded self-test over random monomial pairs from the window.
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<size_t> pick(0, window.size() - 1);
    std::uniform_int_distribution<long> coeff(-3, 3);
    auto random_monomial = [&] {
      const BpFunction f = bp_scale(
          make_rat(coeff(rng) * 2 + 1, 2),
          BpFunction::indicator(d, window[pick(rng)]));
      return cp_monomial(d, window[pick(rng)], f, window[pick(rng)]);
    };
    int failures = 0;
    for (int i = 0; i < sample; ++i)
      if (!oracle_agrees(random_monomial(), random_monomial(), basis))
        ++failures;
    const json config{{"command", "cp-mul"},
                      {"semigroup", spec.to_string()},
                      {"sample", sample},
                      {"seed", seed}};
    const json results{{"pairs", sample},
                       {"failures", failures},
                       {"status", failures == 0 ? "pass" : "fail"}};
    emit_json(out_path, report_envelope(config, results));
    return failures == 0 ? 0 : 1;
  }

  const CpElement u = cp_element_from_json(d, json::parse(u_text));
  const CpElement v = cp_element_from_json(d, json::parse(v_text));
  const CpElement uv = cp_multiply(u, v);
  const bool oracle = oracle_agrees(u, v, basis);
  const json config{{"command", "cp-mul"},
                    {"semigroup", spec.to_string()},
                    {"u", json::parse(u_text)},
                    {"v", json::parse(v_text)}};
  const json results{{"product", cp_element_json(uv)},
                     {"oracle", oracle ? "pass" : "fail"}};
  emit_json(out_path, report_envelope(config, results));
  return oracle ? 0 : 1;
}

int cmd_bd(long p, long q, const std::string& format,
           const std::string& out_path) {
  const BdInvariants inv = bd_invariants(Int(p), Int(q));
  if (format == "csv") {
    std::string text = bd_invariants_csv(inv);
    text.pop_back();  // emit() appends the final newline
    emit(out_path, text);
    return 0;
  }
  const json config{{"command", "bd"}, {"p", p}, {"q", q}};
  emit_json(out_path, report_envelope(config, bd_invariants_json(inv)));
  return 0;
}

int cmd_odometer(long d, long p, int depth, int steps,
                 const std::string& start_text, const std::string& out_path) {
  OdometerPoint pt;
  if (start_text.empty()) {
    pt = odometer_zero(d, p, depth);
  } else {
    std::vector<std::int64_t> digits;
    for (const auto& piece : split_top_level(start_text, ','))
      digits.push_back(std::stoll(piece));
    if (static_cast<int>(digits.size()) != depth + 1)
      throw std::domain_error("start needs depth+1 digits");
    pt = odometer_point(d, p, digits);
  }
  json orbit = json::array();
  for (int i = 0; i < steps; ++i) {
    pt = odometer_step(pt);
    orbit.push_back(odometer_to_string(pt));
  }
  const json config{{"command", "odometer"}, {"d", d},
                    {"p", p},               {"depth", depth},
                    {"steps", steps},       {"start", start_text}};
  const json results{{"orbit", orbit}};
  emit_json(out_path, report_envelope(config, results));
  return 0;
}

int cmd_beta(long p, long q, unsigned k, unsigned l, unsigned m, unsigned n,
             long r, const std::string& out_path) {
  const GaContext ctx = make_ga_context(Int(p), Int(q), k, l);
  const GaElement image = beta_apply(ctx, m, n, ga_unit(ctx.modulus(), Int(r)));
  const json config{{"command", "beta"}, {"p", p}, {"q", q}, {"k", k},
                    {"l", l},            {"m", m}, {"n", n}, {"r", r}};
  emit_json(out_path, report_envelope(config, ga_element_json(image)));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact toolkit for LCM semigroups, partial-isometric "
               "representation checks, diagonal projection calculus, "
               "crossed-product monomials, and Bunce-Deddens invariants"};
  app.require_subcommand(1);
  std::string out_path;
  app.add_option("--out", out_path, "Write the report here instead of stdout");

  std::string spec_text, xs, ys, set_text, terms_text;
  std::string rep_name = "canonical_W";
  std::vector<std::string> checks{"piso", "right_nica"};
  std::string u_text, v_text;
  int sample = 0;
  unsigned long seed = 0;
  std::string format = "json";
  long bd_p = 0, bd_q = 0;
  long od_d = 2, od_p = 3;
  int od_depth = 0, od_steps = 1;
  std::string od_start;
  long ga_p = 0, ga_q = 0, ga_r = 0;
  unsigned ga_k = 1, ga_l = 1, ga_m = 0, ga_n = 0;

  auto* lcm_cmd = app.add_subcommand("lcm", "Left and right LCM of a pair");
  lcm_cmd->add_option("--semigroup", spec_text)->required();
  lcm_cmd->add_option("--x", xs)->required();
  lcm_cmd->add_option("--y", ys)->required();

  auto* sigma_cmd =
      app.add_subcommand("sigma", "Iterated right LCM of a finite set");
  sigma_cmd->add_option("--semigroup", spec_text)->required();
  sigma_cmd->add_option("--set", set_text)->required();

  auto* check_cmd =
      app.add_subcommand("check", "Run covariance checks on a representation");
  check_cmd->add_option("--semigroup", spec_text)->required();
  check_cmd->add_option("--rep", rep_name,
                        "canonical_W | canonical_S | compressed | "
                        "degenerate_free");
  check_cmd->add_option("--checks", checks,
                        "piso | right_nica | left_nica | covariant_pair")
      ->delimiter(',');

  auto* qa_cmd =
      app.add_subcommand("qa", "Projection decomposition of the identity");
  qa_cmd->add_option("--semigroup", spec_text)->required();
  qa_cmd->add_option("--set", set_text)->required();

  auto* norm_cmd =
      app.add_subcommand("norm", "Sup norm of a diagonal combination");
  norm_cmd->add_option("--semigroup", spec_text)->required();
  norm_cmd->add_option("--terms", terms_text, "e.g. \"1=1/1;2=-1/1\"")
      ->required();

  auto* cp_cmd = app.add_subcommand(
      "cp-mul", "Multiply crossed-product elements (or run a sampled "
                "oracle self-test with --sample)");
  cp_cmd->add_option("--semigroup", spec_text)->required();
  cp_cmd->add_option("--u", u_text, "JSON monomial list");
  cp_cmd->add_option("--v", v_text, "JSON monomial list");
  cp_cmd->add_option("--sample", sample, "Number of random pairs to verify");
  cp_cmd->add_option("--seed", seed, "RNG seed for --sample");

  auto* bd_cmd = app.add_subcommand("bd", "Bunce-Deddens invariants of (p,q)");
  bd_cmd->add_option("--p", bd_p)->required();
  bd_cmd->add_option("--q", bd_q)->required();
  bd_cmd->add_option("--format", format, "json | csv");

  auto* od_cmd = app.add_subcommand("odometer", "Truncated add-one orbit");
  od_cmd->add_option("--d", od_d)->required();
  od_cmd->add_option("--p", od_p)->required();
  od_cmd->add_option("--depth", od_depth)->required();
  od_cmd->add_option("--steps", od_steps)->required();
  od_cmd->add_option("--start", od_start, "Comma-separated digits");

  auto* beta_cmd =
      app.add_subcommand("beta", "Averaging action on the group algebra");
  beta_cmd->add_option("--p", ga_p)->required();
  beta_cmd->add_option("--q", ga_q)->required();
  beta_cmd->add_option("--k", ga_k)->required();
  beta_cmd->add_option("--l", ga_l)->required();
  beta_cmd->add_option("--m", ga_m)->required();
  beta_cmd->add_option("--n", ga_n)->required();
  beta_cmd->add_option("--r", ga_r)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (lcm_cmd->parsed()) return cmd_lcm(spec_text, xs, ys, out_path);
    if (sigma_cmd->parsed()) return cmd_sigma(spec_text, set_text, out_path);
    if (check_cmd->parsed())
      return cmd_check(spec_text, rep_name, checks, out_path);
    if (qa_cmd->parsed()) return cmd_qa(spec_text, set_text, out_path);
    if (norm_cmd->parsed()) return cmd_norm(spec_text, terms_text, out_path);
    if (cp_cmd->parsed())
      return cmd_cp_mul(spec_text, u_text, v_text, sample, seed, out_path);
    if (bd_cmd->parsed()) return cmd_bd(bd_p, bd_q, format, out_path);
    if (od_cmd->parsed())
      return cmd_odometer(od_d, od_p, od_depth, od_steps, od_start, out_path);
    if (beta_cmd->parsed())
      return cmd_beta(ga_p, ga_q, ga_k, ga_l, ga_m, ga_n, ga_r, out_path);
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
