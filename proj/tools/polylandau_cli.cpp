// Command-line front end: radius computation, verification batteries,
// parameter sweeps, reference constants, and plot-ready boundary data.
//
// Output contract: stdout carries JSON (single object or NDJSON stream) or
// CSV; stderr carries diagnostics. Exit codes: 0 success, 1 verification
// failure, 2 usage/parameter error. All numbers are printed with 17
// significant digits so that outputs are round-trip safe and byte-stable.

#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "polylandau/polyanalytic.hpp"
#include "polylandau/radii.hpp"
#include "polylandau/verify.hpp"

namespace {

using namespace polylandau;

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string num_list(const std::vector<double>& v, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += num(v[i]);
  }
  return out;
}

std::string json_array(const std::vector<double>& v) {
  return "[" + num_list(v, ",") + "]";
}

std::string json_complex(Cplx z) {
  return "[" + num(z.real()) + "," + num(z.imag()) + "]";
}

std::string json_witness(const std::optional<Witness>& w) {
  if (!w) return "null";
  return "{\"z1\":" + json_complex(w->z1) + ",\"z2\":" + json_complex(w->z2) +
         ",\"value1\":" + json_complex(w->value1) +
         ",\"value2\":" + json_complex(w->value2) + "}";
}

std::string report_line(const VerificationReport& rep,
                        const std::string& extra = "") {
  std::string out = "{\"type\":\"report\",\"check\":\"" + rep.check_name +
                    "\",\"passed\":" + (rep.passed ? "true" : "false") +
                    ",\"worst_margin\":" + num(rep.worst_margin) +
                    ",\"samples_used\":" + std::to_string(rep.samples_used) +
                    ",\"slack\":" + num(rep.slack);
  if (!extra.empty()) out += "," + extra;
  out += ",\"witness\":" + json_witness(rep.witness) + "}";
  return out;
}

struct RadiusRow {
  std::string class_name;
  int order = 1;
  double primary_bound = 0.0;
  std::vector<double> tail_bounds;
  double univalence_radius = 0.0;
  double schlicht_radius = 0.0;
  double residual = 0.0;
  int iterations = 0;
  bool whole_disc = false;
};

void print_radius(const RadiusRow& row, const std::string& format) {
  if (format == "csv") {
    std::cout << "class,order,primary_bound,tail_bounds,univalence_radius,"
                 "schlicht_radius,residual,iterations,whole_disc\n";
    std::cout << row.class_name << "," << row.order << ","
              << num(row.primary_bound) << "," << num_list(row.tail_bounds, ";")
              << "," << num(row.univalence_radius) << ","
              << num(row.schlicht_radius) << "," << num(row.residual) << ","
              << row.iterations << "," << (row.whole_disc ? "true" : "false")
              << "\n";
    return;
  }
  std::cout << "{\"class\":\"" << row.class_name
            << "\",\"order\":" << row.order
            << ",\"primary_bound\":" << num(row.primary_bound)
            << ",\"tail_bounds\":" << json_array(row.tail_bounds)
            << ",\"univalence_radius\":" << num(row.univalence_radius)
            << ",\"schlicht_radius\":" << num(row.schlicht_radius)
            << ",\"residual\":" << num(row.residual)
            << ",\"iterations\":" << row.iterations
            << ",\"whole_disc\":" << (row.whole_disc ? "true" : "false")
            << "}\n";
}

// ---- option holders ----------------------------------------------------

struct ClassArgs {
  std::string class_name;
  double lambda = 0.0;    // F1 / e-class bound
  double lambda0 = 0.0;   // F3 analytic-part bound
  double mod = 0.0;       // F2 / c-class modulus bound
  double lambda1 = 0.0;   // d-class tail bound
  double lambda2 = 0.0;   // d-class analytic-part bound
  int order = 2;          // c-class order
  std::vector<double> lambdas;  // F2/F3 tail derivative bounds
  std::vector<double> ms;       // F1 tail modulus bounds
};

ClassParams make_params(const ClassArgs& a) {
  if (a.class_name == "f1") return F1Params(a.lambda, a.ms);
  if (a.class_name == "f2") return F2Params(a.mod, a.lambdas);
  return F3Params(a.lambda0, a.lambdas);
}

// The f2 witness rescaled to a disc self-map, from its closed-form expansion
// z/M - sum_{i>=1} (M^2-1) M^{-i-1} z^{(n-1)i+1}. Truncated adaptively so the
// dropped tail is below 1e-13 on |z| <= 0.999.
std::vector<Cplx> self_map_series(double mod_bound, int index) {
  std::vector<Cplx> c{Cplx(0.0, 0.0), Cplx(1.0 / mod_bound, 0.0)};
  if (mod_bound <= 1.0) return c;  // identity witness
  double coef = (mod_bound * mod_bound - 1.0) / (mod_bound * mod_bound);
  const double ratio = std::pow(0.999, index - 1) / mod_bound;
  for (int i = 1; i <= (1 << 18); ++i) {
    const int degree = (index - 1) * i + 1;
    if (coef * std::pow(0.999, degree) / (1.0 - ratio) < 1e-13) break;
    c.resize(degree + 1, Cplx(0.0, 0.0));
    c[degree] = Cplx(-coef, 0.0);
    coef /= mod_bound;
  }
  return c;
}

// Witness function whose components attain the class bounds.
PolyAnalyticFunction make_witness(const ClassParams& p, int blaschke_index) {
  return std::visit(
      [&](const auto& q) {
        using T = std::decay_t<decltype(q)>;
        std::vector<AnalyticFunction> comps;
        if constexpr (std::is_same_v<T, F1Params>) {
          comps.emplace_back(LogDistortionExtremal(q.f0_deriv_bound));
          for (double m : q.tail_mod_bounds)
            comps.emplace_back(ScaledIdentity(Cplx(m, 0.0)));
        } else if constexpr (std::is_same_v<T, F2Params>) {
          if (q.f0_mod_bound > 1.0)
            comps.emplace_back(
                BlaschkeTypeExtremal(q.f0_mod_bound, blaschke_index));
          else
            comps.emplace_back(ScaledIdentity(Cplx(1.0, 0.0)));
          for (double l : q.tail_deriv_bounds)
            comps.emplace_back(ScaledIdentity(Cplx(l, 0.0)));
        } else {
          comps.emplace_back(LogDistortionExtremal(q.f0_deriv_bound));
          for (double l : q.tail_deriv_bounds)
            comps.emplace_back(ScaledIdentity(Cplx(-l, 0.0)));
        }
        return PolyAnalyticFunction(std::move(comps));
      },
      p);
}

// ---- radius ------------------------------------------------------------

int cmd_radius(const ClassArgs& a, double tol, const std::string& format) {
  RadiusRow row;
  row.class_name = a.class_name;
  RootFindConfig cfg;
  cfg.tol = tol;

  if (a.class_name == "d") {
    auto [rho, sigma] = bianalytic_radius(a.lambda1, a.lambda2);
    row.order = 2;
    row.primary_bound = a.lambda2;
    row.tail_bounds = {a.lambda1};
    row.univalence_radius = rho;
    row.schlicht_radius = sigma;
  } else if (a.class_name == "e") {
    auto [rho, sigma] = bianalytic_unit_radius(a.lambda);
    row.order = 2;
    row.primary_bound = 1.0;
    row.tail_bounds = {a.lambda};
    row.univalence_radius = rho;
    row.schlicht_radius = sigma;
    row.whole_disc = rho == 1.0;
  } else if (a.class_name == "c") {
    auto [rho, sigma] = uniform_modulus_radius(a.order, a.mod, cfg);
    row.order = a.order;
    row.primary_bound = a.mod;
    row.univalence_radius = rho;
    row.schlicht_radius = sigma;
  } else {
    const ClassParams p = make_params(a);
    const RadiusResult res = solve_radius(p, cfg);
    row.order = std::visit([](const auto& q) { return q.order(); }, p);
    row.primary_bound = a.class_name == "f1"   ? a.lambda
                        : a.class_name == "f2" ? a.mod
                                               : a.lambda0;
    row.tail_bounds = a.class_name == "f1" ? a.ms : a.lambdas;
    row.univalence_radius = res.univalence_radius;
    row.schlicht_radius = res.schlicht_radius;
    row.residual = res.residual;
    row.iterations = res.iterations;
    row.whole_disc = res.whole_disc;
  }
  print_radius(row, format);
  return 0;
}

// ---- verify ------------------------------------------------------------

struct VerifyArgs {
  ClassArgs cls;
  double rho_frac = 0.9;
  std::uint64_t seed = 42;
  int pairs = 100000;
  double slack = 1e-9;
  std::string check = "all";
  double r_offset = 0.05;
  int boundary_points = 720;
  int blaschke_index = 2;
  int hypothesis_samples = 2000;
};

int cmd_verify(const VerifyArgs& va) {
  const ClassArgs& a = va.cls;
  if (!(va.rho_frac > 0.0 && va.rho_frac < 1.0))
    throw std::invalid_argument("rho-frac must lie in (0, 1)");
  if (!(va.r_offset > 0.0))
    throw std::invalid_argument("r-offset must be positive");

  const ClassParams p = make_params(a);
  const RadiusResult res = solve_radius(p);
  const double rho = va.rho_frac * res.univalence_radius;
  const LipschitzBounds lb = bilipschitz(p, rho);
  const PolyAnalyticFunction F = make_witness(p, va.blaschke_index);

  const double primary = a.class_name == "f1"   ? a.lambda
                         : a.class_name == "f2" ? a.mod
                                                : a.lambda0;
  const std::vector<double>& tails = a.class_name == "f1" ? a.ms : a.lambdas;
  std::cout << "{\"type\":\"run\",\"class\":\"" << a.class_name
            << "\",\"order\":" << F.order()
            << ",\"primary_bound\":" << num(primary)
            << ",\"tail_bounds\":" << json_array(tails)
            << ",\"univalence_radius\":" << num(res.univalence_radius)
            << ",\"schlicht_radius\":" << num(res.schlicht_radius)
            << ",\"rho\":" << num(rho)
            << ",\"co_lipschitz\":" << num(lb.co_lipschitz)
            << ",\"lipschitz\":" << num(lb.lipschitz)
            << ",\"seed\":" << va.seed << ",\"pairs\":" << va.pairs
            << ",\"slack\":" << num(va.slack)
            << ",\"whole_disc\":" << (res.whole_disc ? "true" : "false")
            << "}\n";

  const bool all = va.check == "all";
  const auto wants = [&](const char* name) { return all || va.check == name; };
  bool ok = true;
  const auto emit = [&ok](const VerificationReport& rep,
                          const std::string& extra = "") {
    std::cout << report_line(rep, extra) << "\n";
    ok = ok && rep.passed;
  };

  if (wants("hypotheses"))
    emit(check_class_hypotheses(F, p, va.hypothesis_samples, va.slack));
  const PairSampler sampler(va.seed, va.pairs, rho);
  if (wants("colipschitz"))
    emit(check_colipschitz(F, sampler, lb.co_lipschitz, va.slack));
  if (wants("lipschitz"))
    emit(check_lipschitz(F, sampler, lb.lipschitz, va.slack));
  if (wants("schlicht")) {
    if (res.whole_disc) {
      if (!all)
        throw std::invalid_argument(
            "schlicht check needs a boundary radius below 1 (whole-disc case)");
    } else {
      const BoundarySampler boundary(res.univalence_radius, va.boundary_points);
      emit(check_schlicht(F, boundary, res.schlicht_radius, va.slack));
    }
  }
  if (wants("collision")) {
    if (a.class_name != "f3") {
      if (!all)
        throw std::invalid_argument("collision check applies to class f3 only");
    } else {
      const double r = std::min(1.0, res.univalence_radius + va.r_offset);
      const auto [x1, x2] = find_collision(a.lambda0, a.lambdas, r);
      const Cplx v1 = eval_poly(F, x1), v2 = eval_poly(F, x2);
      const double delta = std::abs(v1 - v2);
      VerificationReport rep;
      rep.check_name = "collision";
      rep.slack = va.slack;
      rep.samples_used = 1;
      rep.worst_margin = va.slack - delta;
      rep.witness = Witness{x1, x2, v1, v2};
      rep.passed = delta <= va.slack && std::abs(x1 - x2) >= 1e-3;
      emit(rep, "\"x1\":" + num(x1) + ",\"x2\":" + num(x2) +
                    ",\"delta\":" + num(delta));
    }
  }
  if (a.class_name == "f2") {
    if (wants("coefficients"))
      emit(check_coefficient_bounds(
          a.mod > 1.0
              ? AnalyticFunction(BlaschkeTypeExtremal(a.mod, va.blaschke_index))
              : AnalyticFunction(ScaledIdentity(Cplx(1.0, 0.0))),
          a.mod, 8, va.slack));
    if (wants("schwarz"))
      emit(check_schwarz_pick(
          PowerSeries(self_map_series(a.mod, va.blaschke_index)), 4096,
          va.slack));
  } else if (!all && (va.check == "coefficients" || va.check == "schwarz")) {
    throw std::invalid_argument("check applies to class f2 only");
  }

  return ok ? 0 : 1;
}

// ---- sweep -------------------------------------------------------------

struct Range {
  double start = 0.0, stop = 0.0;
  int steps = 1;
  double value(int i) const {
    return steps == 1 ? start : start + (stop - start) * i / (steps - 1);
  }
};

Range parse_range(const std::string& text) {
  Range r;
  const auto c1 = text.find(':');
  if (c1 == std::string::npos) {
    r.start = r.stop = std::stod(text);
    return r;
  }
  const auto c2 = text.find(':', c1 + 1);
  if (c2 == std::string::npos)
    throw std::invalid_argument("range must be <value> or <start:stop:steps>");
  r.start = std::stod(text.substr(0, c1));
  r.stop = std::stod(text.substr(c1 + 1, c2 - c1 - 1));
  r.steps = std::stoi(text.substr(c2 + 1));
  if (r.steps < 1) throw std::invalid_argument("range steps must be >= 1");
  return r;
}

struct SweepArgs {
  std::string class_name;
  std::string primary;   // lambda (f1/e), M (f2/c), lambda0 (f3), lambda2 (d)
  std::string secondary; // m1 (f1), lambda1 (f2/f3/d); empty = order 1
  int order = 2;         // c only
  std::string format = "csv";
};

int cmd_sweep(const SweepArgs& sa) {
  const Range pr = parse_range(sa.primary);
  const bool has_tail = !sa.secondary.empty();
  const Range sr = has_tail ? parse_range(sa.secondary) : Range{};

  struct Col {
    std::string name;
    double value = 0.0;
    bool present = true;
  };
  std::vector<std::vector<Col>> rows;

  for (int i = 0; i < pr.steps; ++i) {
    const double pv = pr.value(i);
    for (int j = 0; j < (has_tail ? sr.steps : 1); ++j) {
      const double sv = sr.value(j);
      std::vector<Col> row;
      if (sa.class_name == "d") {
        auto [rho, sigma] = bianalytic_radius(sv, pv);
        row = {{"lambda2", pv}, {"lambda1", sv, has_tail},
               {"univalence_radius", rho}, {"schlicht_radius", sigma}};
      } else if (sa.class_name == "e") {
        auto [rho, sigma] = bianalytic_unit_radius(pv);
        row = {{"lambda", pv}, {"univalence_radius", rho},
               {"schlicht_radius", sigma}};
      } else if (sa.class_name == "c") {
        auto [rho, sigma] = uniform_modulus_radius(sa.order, pv);
        row = {{"order", static_cast<double>(sa.order)}, {"M", pv},
               {"univalence_radius", rho}, {"schlicht_radius", sigma}};
      } else {
        ClassParams p = sa.class_name == "f1"
                            ? ClassParams(F1Params(
                                  pv, has_tail ? std::vector<double>{sv}
                                               : std::vector<double>{}))
                        : sa.class_name == "f2"
                            ? ClassParams(F2Params(
                                  pv, has_tail ? std::vector<double>{sv}
                                               : std::vector<double>{}))
                            : ClassParams(F3Params(
                                  pv, has_tail ? std::vector<double>{sv}
                                               : std::vector<double>{}));
        const RadiusResult res = solve_radius(p);
        const LipschitzBounds lb = bilipschitz(p, 0.9 * res.univalence_radius);
        const char* pname = sa.class_name == "f2" ? "M"
                            : sa.class_name == "f1" ? "lambda" : "lambda0";
        const char* sname = sa.class_name == "f1" ? "m1" : "lambda1";
        row = {{pname, pv},
               {sname, sv, has_tail},
               {"univalence_radius", res.univalence_radius},
               {"schlicht_radius", res.schlicht_radius},
               {"co_lipschitz", lb.co_lipschitz},
               {"lipschitz", lb.lipschitz}};
        if (sa.class_name == "f3") {
          // Independent closed-form route for the order-2 case.
          auto [rho, sigma] = bianalytic_radius(has_tail ? sv : 0.0, pv);
          row.push_back({"cross_univalence", rho});
          row.push_back({"cross_schlicht", sigma});
        }
      }
      rows.push_back(std::move(row));
    }
  }

  if (sa.format == "json") {
    std::cout << "[";
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i) std::cout << ",";
      std::cout << "{\"class\":\"" << sa.class_name << "\"";
      for (const auto& col : rows[i]) {
        std::cout << ",\"" << col.name << "\":";
        if (col.present)
          std::cout << num(col.value);
        else
          std::cout << "null";
      }
      std::cout << "}";
    }
    std::cout << "]\n";
  } else {
    std::cout << "class";
    for (const auto& col : rows.front()) std::cout << "," << col.name;
    std::cout << "\n";
    for (const auto& row : rows) {
      std::cout << sa.class_name;
      for (const auto& col : row) {
        std::cout << ",";
        if (col.present) std::cout << num(col.value);
      }
      std::cout << "\n";
    }
  }
  return 0;
}

// ---- constants ---------------------------------------------------------

int cmd_constants(double mod_bound, double deriv_bound,
                  const std::string& format) {
  const HarmonicLandauConstants hc =
      harmonic_landau_constants(mod_bound, deriv_bound);
  auto [r0, sigma0] = classical_landau(mod_bound);
  if (format == "csv") {
    std::cout << "M,lambda,m_const,r0,sigma0,rho_bounded,R_bounded,"
                 "rho_dilatation,R_dilatation\n";
    std::cout << num(mod_bound) << "," << num(deriv_bound) << ","
              << num(hc.min_distortion_coeff) << "," << num(r0) << ","
              << num(sigma0) << "," << num(hc.univalence_mod) << ","
              << num(hc.schlicht_mod) << "," << num(hc.univalence_deriv) << ","
              << num(hc.schlicht_deriv) << "\n";
  } else {
    std::cout << "{\"M\":" << num(mod_bound)
              << ",\"lambda\":" << num(deriv_bound)
              << ",\"m_const\":" << num(hc.min_distortion_coeff)
              << ",\"r0\":" << num(r0) << ",\"sigma0\":" << num(sigma0)
              << ",\"rho_bounded\":" << num(hc.univalence_mod)
              << ",\"R_bounded\":" << num(hc.schlicht_mod)
              << ",\"rho_dilatation\":" << num(hc.univalence_deriv)
              << ",\"R_dilatation\":" << num(hc.schlicht_deriv) << "}\n";
  }
  return 0;
}

// ---- plot-data ---------------------------------------------------------

int cmd_plotdata(const ClassArgs& a, int boundary_points) {
  if (a.class_name != "f3")
    throw std::invalid_argument("plot-data supports class f3 only");
  if (boundary_points < 8)
    throw std::invalid_argument("boundary-points must be at least 8");
  const ClassParams p = make_params(a);
  const RadiusResult res = solve_radius(p);
  const PolyAnalyticFunction F = make_extremal_F0(a.lambda0, a.lambdas);
  std::cout << "theta,re,im,abs,schlicht_radius\n";
  for (int j = 0; j < boundary_points; ++j) {
    const double theta = 2.0 * std::numbers::pi * j / boundary_points;
    const Cplx v = eval_poly(F, std::polar(res.univalence_radius, theta));
    std::cout << num(theta) << "," << num(v.real()) << "," << num(v.imag())
              << "," << num(std::abs(v)) << "," << num(res.schlicht_radius)
              << "\n";
  }
  return 0;
}

void add_class_options(CLI::App* sub, ClassArgs& a, bool with_c_d_e) {
  std::vector<std::string> classes = {"f1", "f2", "f3"};
  if (with_c_d_e) {
    classes.push_back("c");
    classes.push_back("d");
    classes.push_back("e");
  }
  sub->add_option("--class", a.class_name, "function class")
      ->required()
      ->check(CLI::IsMember(classes));
  sub->add_option("--lambda", a.lambda, "derivative bound (f1, e)");
  sub->add_option("--lambda0", a.lambda0, "analytic-part derivative bound (f3)");
  sub->add_option("--M", a.mod, "modulus bound (f2, c)");
  sub->add_option("--lambdas", a.lambdas,
                  "tail derivative bounds (f2, f3)")
      ->delimiter(',');
  sub->add_option("--ms", a.ms, "tail modulus bounds (f1)")->delimiter(',');
  if (with_c_d_e) {
    sub->add_option("--lambda1", a.lambda1, "tail derivative bound (d)");
    sub->add_option("--lambda2", a.lambda2, "analytic-part derivative bound (d)");
    sub->add_option("--order", a.order, "poly-analytic order (c)");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Landau-type univalence and schlicht radii for bounded "
               "poly-analytic functions"};
  app.require_subcommand(1);

  ClassArgs radius_args;
  double radius_tol = 1e-12;
  std::string radius_format = "json";
  CLI::App* radius = app.add_subcommand("radius", "compute class radii");
  add_class_options(radius, radius_args, true);
  radius->add_option("--tol", radius_tol, "root-finder tolerance");
  radius->add_option("--format", radius_format, "output format")
      ->check(CLI::IsMember({"json", "csv"}));

  VerifyArgs verify_args;
  CLI::App* verify = app.add_subcommand("verify", "run the certification battery");
  add_class_options(verify, verify_args.cls, false);
  verify->add_option("--rho-frac", verify_args.rho_frac,
                     "fraction of the univalence radius for pair sampling");
  verify->add_option("--seed", verify_args.seed, "sampler seed");
  verify->add_option("--pairs", verify_args.pairs, "number of sampled pairs");
  verify->add_option("--slack", verify_args.slack, "floating-point slack");
  verify->add_option("--check", verify_args.check, "single check to run")
      ->check(CLI::IsMember({"all", "hypotheses", "colipschitz", "lipschitz",
                             "schlicht", "collision", "coefficients",
                             "schwarz"}));
  verify->add_option("--r-offset", verify_args.r_offset,
                     "collision search offset past the univalence radius");
  verify->add_option("--boundary-points", verify_args.boundary_points,
                     "boundary sample count");
  verify->add_option("--blaschke-index", verify_args.blaschke_index,
                     "coefficient index of the f2 witness");

  SweepArgs sweep_args;
  CLI::App* sweep = app.add_subcommand("sweep", "tabulate radii over parameter grids");
  sweep->add_option("--class", sweep_args.class_name, "function class")
      ->required()
      ->check(CLI::IsMember({"f1", "f2", "f3", "c", "d", "e"}));
  sweep->add_option("--lambda", sweep_args.primary, "range for lambda (f1, e)");
  sweep->add_option("--lambda0", sweep_args.primary, "range for lambda0 (f3)");
  sweep->add_option("--M", sweep_args.primary, "range for M (f2, c)");
  sweep->add_option("--lambda2", sweep_args.primary, "range for lambda2 (d)");
  sweep->add_option("--m1", sweep_args.secondary, "range for the tail modulus bound (f1)");
  sweep->add_option("--lambda1", sweep_args.secondary,
                    "range for the tail derivative bound (f2, f3, d)");
  sweep->add_option("--order", sweep_args.order, "poly-analytic order (c)");
  sweep->add_option("--format", sweep_args.format, "output format")
      ->check(CLI::IsMember({"json", "csv"}));

  double const_mod = 1.0, const_deriv = 1.0;
  std::string const_format = "json";
  CLI::App* constants = app.add_subcommand("constants", "reference constants");
  constants->add_option("--M", const_mod, "modulus bound");
  constants->add_option("--lambda", const_deriv, "derivative bound");
  constants->add_option("--format", const_format, "output format")
      ->check(CLI::IsMember({"json", "csv"}));

  ClassArgs plot_args;
  int plot_points = 720;
  CLI::App* plot = app.add_subcommand("plot-data", "boundary scan of the extremal");
  add_class_options(plot, plot_args, false);
  plot->add_option("--boundary-points", plot_points, "number of boundary rows");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (radius->parsed()) return cmd_radius(radius_args, radius_tol, radius_format);
    if (verify->parsed()) return cmd_verify(verify_args);
    if (sweep->parsed()) {
      if (sweep_args.primary.empty())
        throw std::invalid_argument("sweep needs a primary parameter range");
      return cmd_sweep(sweep_args);
    }
    if (constants->parsed())
      return cmd_constants(const_mod, const_deriv, const_format);
    if (plot->parsed()) return cmd_plotdata(plot_args, plot_points);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
