#include "cli/run.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <memory>
#include <numbers>
#include <optional>

#include "CLI11.hpp"

#include "cli/report.hpp"
#include "cli/spec.hpp"
#include "flagphase/arith.hpp"
#include "flagphase/dhym.hpp"
#include "flagphase/errors.hpp"
#include "flagphase/flag.hpp"
#include "flagphase/rootsys.hpp"
#include "flagphase/stability.hpp"

namespace flagphase::cli {

namespace {

struct Options {
  std::string type;
  std::string parabolic;
  std::string omega;
  std::string psi;
  std::string bundle;
  std::string other;
  std::string cls;
  int rank = 1;
  std::string target = "whole";
  std::string root;
  int alpha = 0;
  std::string divisor_class;
  std::optional<double> theta;
  std::optional<int> n;
  std::string m0 = "0";
  std::string count;
  int gamma = 0;
  bool json = false;
};

ParabolicGeometry make_flag(const Options& o) {
  const FlagSpec spec = FlagSpec::parse(o.type, o.parabolic, o.omega);
  const CartanType ct = parse_cartan_type(spec.type);
  auto rs = std::make_shared<const RootSystem>(build_root_system(ct.series, ct.rank));
  std::vector<int> zero_based;
  for (int i : spec.parabolic) {
    if (i < 1 || i > rs->rank())
      fail(ErrorCode::IndexOutOfRange, "parabolic index " + std::to_string(i) + " outside 1.." + std::to_string(rs->rank()));
    zero_based.push_back(i - 1);
  }
  return build_flag(std::move(rs), std::move(zero_based));
}

WeightVector generator_weight(const ParabolicGeometry& flag, const std::vector<Rational>& coords, const char* what) {
  if (coords.size() != flag.picard_number())
    fail(ErrorCode::DimensionMismatch, std::string(what) + " needs " + std::to_string(flag.picard_number()) +
                                           " coordinates over Delta \\ I, got " + std::to_string(coords.size()));
  return flag.embed(coords);
}

KahlerClass make_omega(const ParabolicGeometry& flag, const Options& o) {
  if (o.omega.empty()) throw ParseError("--omega is required");
  return KahlerClass(flag, generator_weight(flag, parse_rational_list(o.omega), "--omega"));
}

InvariantClass make_class(const ParabolicGeometry& flag, const std::string& text, const char* what) {
  return InvariantClass(flag, generator_weight(flag, parse_rational_list(text), what));
}

SplitBundle make_bundle(const ParabolicGeometry& flag, const std::string& text, const char* what) {
  if (text.empty()) throw ParseError(std::string(what) + " is required");
  std::vector<WeightVector> summands;
  for (const auto& s : parse_bundle(text)) summands.push_back(generator_weight(flag, s, what));
  return SplitBundle(flag, std::move(summands));
}

std::vector<Rational> over_generators(const ParabolicGeometry& flag, const WeightVector& w) {
  return flag.restrict_to_generators(w);
}

std::string one_based(std::span<const int> xs) {
  std::vector<int> v;
  for (int x : xs) v.push_back(x + 1);
  return format_index_list(v);
}

int pivot(const ParabolicGeometry& flag, const Options& o) {
  if (o.gamma == 0) {
    if (flag.generators().empty()) fail(ErrorCode::IndexOutOfRange, "flag has no generators");
    return flag.generators().front();
  }
  return o.gamma - 1;
}

Target make_target(const ParabolicGeometry& flag, const Options& o) {
  if (o.target == "whole") return WholeSpace{};
  if (o.target == "curve") {
    if (o.root.empty()) throw ParseError("--target curve needs --root");
    std::vector<int> coeffs = parse_index_list(o.root);
    const auto idx = flag.rootsystem().index_of(coeffs);
    if (!idx) fail(ErrorCode::InvalidArgument, "[" + o.root + "] is not a positive root");
    return curve_target(flag, flag.rootsystem().positive_roots()[*idx]);
  }
  if (o.target == "divisor") {
    if (!o.divisor_class.empty()) return Divisor{make_class(flag, o.divisor_class, "--divisor-class")};
    if (o.alpha <= 0) throw ParseError("--target divisor needs --alpha or --divisor-class");
    return schubert_divisor_target(flag, o.alpha - 1);
  }
  throw ParseError("unknown target '" + o.target + "' (whole, curve, divisor)");
}

ChargeSource make_source(const ParabolicGeometry& flag, const Options& o) {
  if (!o.bundle.empty()) {
    if (!o.psi.empty()) throw ParseError("give either --psi or --bundle, not both");
    return ChargeSource::from_bundle(flag, make_bundle(flag, o.bundle, "--bundle"));
  }
  if (o.psi.empty()) throw ParseError("--psi or --bundle is required");
  return ChargeSource{make_class(flag, o.psi, "--psi"), o.rank};
}

std::string target_name(const ParabolicGeometry& flag, const Target& t) {
  if (std::holds_alternative<WholeSpace>(t)) return "X";
  if (const auto* c = std::get_if<Curve>(&t)) return "P1" + to_string(flag.phi_I_plus()[c->root]);
  return "D" + to_string(WeightVector(over_generators(flag, std::get<Divisor>(t).cls.weight())));
}

void add_flag_inputs(Report& r, const ParabolicGeometry& flag) {
  r.input("type", flag.rootsystem().name());
  r.input("parabolic", one_based(flag.parabolic()));
}

using Handler = std::function<int(const Options&, Report&)>;

int cmd_roots(const Options& o, Report& r) {
  const CartanType ct = parse_cartan_type(FlagSpec::parse(o.type, "", "").type);
  const RootSystem rs = build_root_system(ct.series, ct.rank);
  r.input("type", rs.name());
  std::vector<std::vector<Rational>> cartan;
  for (const auto& row : rs.cartan().matrix) cartan.emplace_back(row.begin(), row.end());
  r.rational_rows("cartan", cartan);
  r.rationals("symmetrizer", {rs.cartan().symmetrizer.begin(), rs.cartan().symmetrizer.end()});
  r.rational("count", static_cast<long>(rs.positive_roots().size()));
  std::vector<std::string> roots;
  for (const auto& root : rs.positive_roots()) roots.push_back(to_string(root));
  r.texts("positive_roots", roots);
  r.text("highest_root", to_string(rs.highest_root()));
  return kOk;
}

int cmd_flag_info(const Options& o, Report& r) {
  const auto flag = make_flag(o);
  add_flag_inputs(r, flag);
  r.rational("dimension", flag.dimension());
  r.rational("picard_number", static_cast<long>(flag.picard_number()));
  r.text("generators", one_based(flag.generators()));
  std::vector<std::string> roots;
  for (const auto& root : flag.phi_I_plus()) roots.push_back(to_string(root));
  r.texts("phi_I_plus", roots);
  r.rationals("delta_P", over_generators(flag, flag.delta_P()));
  r.rationals("anticanonical", over_generators(flag, anticanonical(flag).determinant_weight()));
  return kOk;
}

int cmd_volume(const Options& o, Report& r) {
  const auto flag = make_flag(o);
  const auto omega = make_omega(flag, o);
  add_flag_inputs(r, flag);
  r.input("omega", o.omega);
  r.rational("volume", volume(flag, omega));
  return kOk;
}

int cmd_degree(const Options& o, Report& r) {
  const auto flag = make_flag(o);
  const auto omega = make_omega(flag, o);
  add_flag_inputs(r, flag);
  r.input("omega", o.omega);
  if (!o.cls.empty() && o.bundle.empty()) {
    r.input("class", o.cls);
    r.rational("degree", degree(flag, omega, make_class(flag, o.cls, "--class")));
  } else {
    r.input("bundle", o.bundle);
    r.rational("degree", degree(flag, omega, make_bundle(flag, o.bundle, "--bundle")));
  }
  return kOk;
}

void fill_phase(const ParabolicGeometry& flag, const KahlerClass& omega, const InvariantClass& psi, Report& r,
                PhaseReport& rep) {
  rep = lifted_angle(flag, omega, psi);
  r.rationals("eigenvalues", rep.eigenvalues);
  r.rational("modulus_sq", rep.modulus_sq);
  r.rational("volume", volume(flag, omega));
  r.rational("n", rep.n);
  r.real("theta_hat", rep.theta_hat);
  r.real("boundary_distance", rep.boundary_distance);
}

int cmd_phase(const Options& o, Report& r) {
  const auto flag = make_flag(o);
  const auto omega = make_omega(flag, o);
  if (o.psi.empty()) throw ParseError("--psi is required");
  const auto psi = make_class(flag, o.psi, "--psi");
  add_flag_inputs(r, flag);
  r.input("omega", o.omega);
  r.input("psi", o.psi);
  PhaseReport rep;
  fill_phase(flag, omega, psi, r, rep);
  if (!rep.window) {
    r.verdict("window", "ambiguous");
    return kBoundaryAmbiguous;
  }
  r.verdict("window", std::string(to_string(*rep.window)));
  return kOk;
}

int cmd_classify(const Options& o, Report& r) {
  double theta = 0.0;
  int n = 0;
  if (o.theta) {
    if (!o.n) throw ParseError("--theta needs --n");
    theta = *o.theta;
    n = *o.n;
    r.input("theta", format_float(theta));
    r.input("n", std::to_string(n));
  } else {
    const auto flag = make_flag(o);
    const auto omega = make_omega(flag, o);
    if (o.psi.empty()) throw ParseError("--psi or --theta is required");
    add_flag_inputs(r, flag);
    r.input("omega", o.omega);
    r.input("psi", o.psi);
    const auto rep = lifted_angle(flag, omega, make_class(flag, o.psi, "--psi"));
    theta = rep.theta_hat;
    n = rep.n;
  }
  r.real("theta_hat", theta);
  r.real("boundary_distance", boundary_distance(theta, n));
  r.verdict("window", std::string(to_string(classify_window(theta, n))));
  return kOk;
}

void source_inputs(const Options& o, Report& r) {
  if (!o.bundle.empty()) {
    r.input("bundle", o.bundle);
  } else {
    r.input("psi", o.psi);
    r.input("rank", std::to_string(o.rank));
  }
  r.input("target", o.target);
}

int cmd_charge(const Options& o, Report& r) {
  const auto flag = make_flag(o);
  const auto omega = make_omega(flag, o);
  const auto source = make_source(flag, o);
  const auto target = make_target(flag, o);
  add_flag_inputs(r, flag);
  r.input("omega", o.omega);
  source_inputs(o, r);
  const auto z = central_charge(flag, omega, source, target);
  r.text("subvariety", target_name(flag, target));
  r.complex("Z", z.value);
  r.rational("norm_sq", z.value.norm());
  r.real("arg", z.arg);
  return kOk;
}

int cmd_cjy(const Options& o, Report& r) {
  const auto flag = make_flag(o);
  const auto omega = make_omega(flag, o);
  const auto source = make_source(flag, o);
  const auto target = make_target(flag, o);
  add_flag_inputs(r, flag);
  r.input("omega", o.omega);
  source_inputs(o, r);
  const auto c = cjy_ratio(flag, omega, source, target);
  r.text("subvariety", target_name(flag, target));
  r.complex("Z_Y", c.z_y);
  r.complex("Z_X", c.z_x);
  r.real("im_ratio", c.im_ratio);
  r.verdict("sign", c.sign);
  return kOk;
}

int cmd_defect(const Options& o, Report& r) {
  const auto flag = make_flag(o);
  const auto omega = make_omega(flag, o);
  if (o.psi.empty()) throw ParseError("--psi is required");
  const auto psi = make_class(flag, o.psi, "--psi");
  const auto target = make_target(flag, o);
  add_flag_inputs(r, flag);
  r.input("omega", o.omega);
  r.input("psi", o.psi);
  r.input("target", o.target);
  const double theta_y = subvariety_phase(flag, omega, psi, target);
  const double defect = phase_defect(flag, omega, psi, target);
  r.text("subvariety", target_name(flag, target));
  r.real("theta_hat", lifted_angle(flag, omega, psi).theta_hat);
  r.real("theta_y", theta_y);
  r.real("defect", defect);
  r.verdict("positive", defect > 0);
  return kOk;
}

int cmd_slope(const Options& o, Report& r) {
  const auto flag = make_flag(o);
  const auto omega = make_omega(flag, o);
  const auto e = make_bundle(flag, o.bundle, "--bundle");
  add_flag_inputs(r, flag);
  r.input("omega", o.omega);
  r.input("bundle", o.bundle);
  r.rational("slope", slope(flag, omega, e));
  r.rational("degree", degree(flag, omega, e));
  r.rational("rank", static_cast<long>(e.rank()));
  return kOk;
}

int cmd_muhat(const Options& o, Report& r) {
  const auto flag = make_flag(o);
  const auto omega = make_omega(flag, o);
  const auto e = make_bundle(flag, o.bundle, "--bundle");
  add_flag_inputs(r, flag);
  r.input("omega", o.omega);
  r.input("bundle", o.bundle);
  r.rational("mu_hat", mu_hat(flag, omega, e));
  r.rational("slope", slope(flag, omega, e));
  return kOk;
}

int cmd_stability(const Options& o, Report& r) {
  const auto flag = make_flag(o);
  const auto omega = make_omega(flag, o);
  const auto e = make_bundle(flag, o.bundle, "--bundle");
  add_flag_inputs(r, flag);
  r.input("omega", o.omega);
  r.input("bundle", o.bundle);
  const auto v = split_stability(flag, omega, e);
  const auto restriction = restriction_semistable(flag, e);
  r.rational("slope", slope(flag, omega, e));
  if (v.witness_slope) {
    std::vector<int> idx;
    for (auto j : v.witness) idx.push_back(static_cast<int>(j) + 1);
    r.text("witness", format_index_list(idx));
    r.rational("witness_slope", *v.witness_slope);
  }
  const auto gens = flag.generators();
  for (std::size_t g = 0; g < gens.size(); ++g)
    r.rationals("restriction_degrees_" + std::to_string(gens[g] + 1), restriction.degrees[g]);
  r.verdict("verdict", std::string(to_string(v.verdict)));
  r.verdict("restriction_semistable", restriction.semistable);
  return kOk;
}

int cmd_dominance(const Options& o, Report& r) {
  const auto flag = make_flag(o);
  const auto omega = make_omega(flag, o);
  const auto e = make_bundle(flag, o.bundle, "--bundle");
  const auto f = make_bundle(flag, o.other, "--other");
  add_flag_inputs(r, flag);
  r.input("omega", o.omega);
  r.input("bundle", o.bundle);
  r.input("other", o.other);
  r.verdict("dominates", arg_dominance(flag, omega, e, f));
  return kOk;
}

int cmd_hym(const Options& o, Report& r) {
  const auto flag = make_flag(o);
  const auto omega = make_omega(flag, o);
  const auto e = make_bundle(flag, o.bundle, "--bundle");
  add_flag_inputs(r, flag);
  r.input("omega", o.omega);
  r.input("bundle", o.bundle);
  const auto h = hym_constant(flag, omega, e);
  if (h.defined) {
    r.rational("lambda", *h.lambda);
    r.rational("constant_over_pi", *h.constant_over_pi);
    r.real("constant", to_double(*h.constant_over_pi) * std::numbers::pi);
  }
  r.rationals("summand_constants_over_pi", h.summand_constants_over_pi);
  r.verdict("defined", h.defined);
  return kOk;
}

int cmd_hr_matrix(const Options& o, Report& r) {
  const auto flag = make_flag(o);
  const auto omega = make_omega(flag, o);
  add_flag_inputs(r, flag);
  r.input("omega", o.omega);
  const auto hr = hodge_riemann_matrix(flag, omega);
  r.text("generators", one_based(hr.generators));
  r.rational_rows("entries", hr.entries);
  r.rationals("generator_degrees", generator_degrees(flag, omega));
  r.verdict("integral", hr.integral);
  return kOk;
}

int cmd_tau(const Options& o, Report& r) {
  const auto flag = make_flag(o);
  const auto omega = make_omega(flag, o);
  add_flag_inputs(r, flag);
  r.input("omega", o.omega);
  r.rationals("generator_degrees", generator_degrees(flag, omega));
  r.rational("tau", tau(flag, omega));
  return kOk;
}

int cmd_solve_slope(const Options& o, Report& r) {
  const auto flag = make_flag(o);
  const auto omega = make_omega(flag, o);
  const Integer m0 = parse_integer(o.m0);
  add_flag_inputs(r, flag);
  r.input("omega", o.omega);
  r.input("m0", o.m0);
  const auto s = solve_slope(flag, omega, m0);
  r.rational("tau", s.tau);
  if (s.solution) r.rationals("solution", over_generators(flag, *s.solution));
  r.verdict("solvable", s.solution.has_value());
  return kOk;
}

int cmd_pic0(const Options& o, Report& r) {
  const auto flag = make_flag(o);
  const auto omega = make_omega(flag, o);
  const int gamma = pivot(flag, o);
  add_flag_inputs(r, flag);
  r.input("omega", o.omega);
  r.input("gamma", std::to_string(gamma + 1));
  const auto basis = pic0_generators(flag, omega, gamma);
  std::vector<std::vector<Rational>> rows;
  for (const auto& xi : basis) rows.push_back(over_generators(flag, xi));
  r.rational("tau", tau(flag, omega));
  r.rational_rows("generators", rows);
  r.rational("index", pic0_index(flag, omega, gamma));
  return kOk;
}

int cmd_density(const Options& o, Report& r) {
  const auto flag = make_flag(o);
  const auto omega = make_omega(flag, o);
  if (o.count.empty()) throw ParseError("--n is required");
  const Integer n = parse_integer(o.count);
  add_flag_inputs(r, flag);
  r.input("omega", o.omega);
  r.input("n", o.count);
  const auto d = density(flag, omega, n);
  r.rational("count", d.count);
  r.rational("limit", d.limit);
  r.rational("bound", d.bound);
  r.verdict("bound_holds", d.bound_holds);
  return kOk;
}

int cmd_nef_solve(const Options& o, Report& r) {
  const auto flag = make_flag(o);
  const auto omega = make_omega(flag, o);
  const Integer m0 = parse_integer(o.m0);
  const int gamma = pivot(flag, o);
  add_flag_inputs(r, flag);
  r.input("omega", o.omega);
  r.input("m0", o.m0);
  r.input("gamma", std::to_string(gamma + 1));
  const auto s = nef_solve(flag, omega, m0, gamma);
  if (s.guarantee_bound) r.rational("guarantee_bound", *s.guarantee_bound);
  if (s.solution) r.rationals("solution", over_generators(flag, *s.solution));
  r.verdict("found", s.solution.has_value());
  r.verdict("guaranteed", s.guaranteed);
  return kOk;
}

int cmd_k0(const Options& o, Report& r) {
  const auto flag = make_flag(o);
  const auto omega = make_omega(flag, o);
  const int gamma = pivot(flag, o);
  add_flag_inputs(r, flag);
  r.input("omega", o.omega);
  r.input("gamma", std::to_string(gamma + 1));
  const auto k = k0_report(flag, omega, gamma);
  std::vector<std::vector<Rational>> rows;
  for (const auto& xi : k.pic0_basis) rows.push_back(over_generators(flag, xi));
  r.rational("tau", k.tau);
  r.rational_rows("pic0_generators", rows);
  r.rational("pic0_index", k.pic0_index);
  r.text("decomposition", k.statement);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact invariants of rational homogeneous varieties", "flagphase"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  struct Entry {
    const char* name;
    const char* help;
    Handler handler;
    bool flag;
  };
  const std::vector<Entry> entries = {
      {"roots", "Positive roots of a simple type", cmd_roots, false},
      {"flag-info", "Dimension, generators and phi_I_plus of G/P_I", cmd_flag_info, true},
      {"volume", "Volume of a Kahler class", cmd_volume, true},
      {"degree", "Degree of a bundle or class", cmd_degree, true},
      {"phase", "Eigenvalues, lifted angle and window", cmd_phase, true},
      {"classify", "Window of a lifted angle", cmd_classify, true},
      {"charge", "Central charge on X, a curve or a divisor", cmd_charge, true},
      {"cjy", "Sign of Im(Z_Y / Z_X)", cmd_cjy, true},
      {"defect", "Phase defect of a curve or divisor", cmd_defect, true},
      {"slope", "Slope of a split bundle", cmd_slope, true},
      {"muhat", "Normalized slope mu_hat", cmd_muhat, true},
      {"stability", "Stability verdict relative to split subbundles", cmd_stability, true},
      {"dominance", "Strict Arg dominance on every curve", cmd_dominance, true},
      {"hym", "Hermitian-Einstein constant of a split bundle", cmd_hym, true},
      {"hr-matrix", "Hodge-Riemann matrix on the generators", cmd_hr_matrix, true},
      {"tau", "gcd of the generator degrees", cmd_tau, true},
      {"solve-slope", "Line bundle with a prescribed slope", cmd_solve_slope, true},
      {"pic0", "Basis of the slope-zero lattice", cmd_pic0, true},
      {"density", "Density of realizable slopes up to n", cmd_density, true},
      {"nef-solve", "Nonnegative line bundle with a prescribed slope", cmd_nef_solve, true},
      {"k0", "K0 decomposition report", cmd_k0, true},
  };

  std::map<CLI::App*, const Entry*> dispatch;
  for (const auto& e : entries) {
    CLI::App* sub = app.add_subcommand(e.name, e.help);
    sub->add_option("--type", o.type, "Cartan type, e.g. A2");
    sub->add_flag("--json", o.json, "Emit JSON");
    const std::string name = e.name;
    if (e.flag) {
      sub->add_option("--parabolic", o.parabolic, "1-based simple roots in I (empty for Borel)");
      sub->add_option("--omega", o.omega, "Kahler class over Delta \\ I");
    }
    if (name == "phase" || name == "classify" || name == "charge" || name == "cjy" || name == "defect")
      sub->add_option("--psi", o.psi, "Invariant class over Delta \\ I");
    if (name == "degree") sub->add_option("--class", o.cls, "Invariant class over Delta \\ I");
    if (name == "degree" || name == "charge" || name == "cjy" || name == "slope" || name == "muhat" ||
        name == "stability" || name == "dominance" || name == "hym")
      sub->add_option("--bundle", o.bundle, "Split bundle, summands separated by ';'");
    if (name == "dominance") sub->add_option("--other", o.other, "Second split bundle");
    if (name == "charge" || name == "cjy" || name == "defect") {
      sub->add_option("--target", o.target, "whole, curve or divisor");
      sub->add_option("--root", o.root, "Curve root as simple-root coefficients, e.g. 1,1");
      sub->add_option("--alpha", o.alpha, "Schubert divisor index (1-based)");
      sub->add_option("--divisor-class", o.divisor_class, "Divisor class over Delta \\ I");
    }
    if (name == "charge" || name == "cjy") sub->add_option("--rank", o.rank, "Rank paired with --psi");
    if (name == "classify") {
      sub->add_option("--theta", o.theta, "Lifted angle");
      sub->add_option("--n", o.n, "Complex dimension");
    }
    if (name == "solve-slope" || name == "nef-solve") sub->add_option("--m0", o.m0, "Target slope");
    if (name == "density") sub->add_option("--n", o.count, "Upper end n of 1..n");
    if (name == "pic0" || name == "nef-solve" || name == "k0")
      sub->add_option("--gamma", o.gamma, "Pivot generator (1-based, default first)");
    dispatch[sub] = &e;
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParseError;
  }

  const Entry* entry = nullptr;
  for (const auto& [sub, e] : dispatch)
    if (sub->parsed()) entry = e;
  if (!entry) {
    err << "no subcommand\n";
    return kParseError;
  }

  Report report(entry->name);
  try {
    const int code = entry->handler(o, report);
    report.write(out, o.json);
    return code;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kParseError;
  } catch (const Error& e) {
    err << e.what() << '\n';
    return e.code() == ErrorCode::BoundaryAmbiguous ? kBoundaryAmbiguous : kDomainError;
  } catch (const std::exception& e) {
    err << "Internal: " << e.what() << '\n';
    return kDomainError;
  }
}

}  // namespace flagphase::cli
