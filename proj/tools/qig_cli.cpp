// Command-line front-end. Thin wrappers only: every number printed here is
// produced by a library call. Exit codes: 0 success, 1 physical-constraint
// failure, 2 input/domain error, 3 validation-tolerance breach.

#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "nlohmann/json.hpp"

#include "qig/charts.hpp"
#include "qig/divergences.hpp"
#include "qig/gaussian.hpp"
#include "qig/geometry.hpp"
#include "qig/metrics.hpp"
#include "qig/oracle.hpp"
#include "qig/sweep.hpp"
#include "qig/tomography.hpp"

namespace {

using nlohmann::json;

std::vector<double> parse_list(const std::string& csv) {
  std::vector<double> out;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(std::stod(tok));
  return out;
}

json matrix_json(const qig::RealMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(row);
  }
  return rows;
}

json metric_json(const qig::MetricTensor& g) {
  json out;
  out["schema"] = "qig/1";
  out["q"] = g.q;
  out["coframe"] = g.coframe_labels;
  out["components"] = matrix_json(g.components);
  json bp = json::array();
  for (int i = 0; i < g.basepoint.size(); ++i) bp.push_back(g.basepoint(i));
  out["basepoint"] = bp;
  return out;
}

json state_json(const qig::DensityMatrix& rho) {
  const auto& m = rho.matrix();
  json re = json::array(), im = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json r = json::array(), c = json::array();
    for (int j = 0; j < m.cols(); ++j) {
      r.push_back(m(i, j).real());
      c.push_back(m(i, j).imag());
    }
    re.push_back(r);
    im.push_back(c);
  }
  return json{{"re", re}, {"im", im}};
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

// ---- metric ----------------------------------------------------------------

int run_metric(const std::string& system, double q, double w,
               const std::string& klist) {
  if (system == "qubit") {
    emit(metric_json(qig::qubit_metric(q, w)));
    return 0;
  }
  std::vector<double> ks = parse_list(klist);
  qig::RealVector k(ks.size());
  for (size_t i = 0; i < ks.size(); ++i) k(i) = ks[i];
  if (system == "qutrit") {
    emit(metric_json(qig::qutrit_metric(q, qig::ProbabilityVector(k))));
    return 0;
  }
  if (system == "simplex") {
    emit(metric_json(qig::fisher_rao_simplex(qig::ProbabilityVector(k))));
    return 0;
  }
  throw qig::BadParameter("unknown system: " + system);
}

// ---- validate --------------------------------------------------------------

struct ValidateRow {
  double q;
  std::string point;
  std::string component;
  double closed;
  double oracle;
  double rel_err;
};

void print_rows(const std::string& target,
                const std::vector<ValidateRow>& rows) {
  std::printf("target,q,point,component,closed,oracle,rel_err\n");
  for (const auto& r : rows)
    std::printf("%s,%.6g,%s,%s,%.12g,%.12g,%.3e\n", target.c_str(), r.q,
                r.point.c_str(), r.component.c_str(), r.closed, r.oracle,
                r.rel_err);
}

double rel_err(double closed, double oracle) {
  return std::abs(closed - oracle) / std::max(1.0, std::abs(closed));
}

std::vector<ValidateRow> validate_qubit_metric() {
  struct Pt {
    double q, w;
  };
  std::vector<Pt> grid;
  for (double q : {0.25, 0.5, 0.75})
    for (double w = 0.1; w < 0.95; w += 0.1) grid.push_back({q, w});
  qig::Chart chart = qig::qubit_exp_chart();
  qig::FDScheme scheme = qig::default_scheme();
  std::function<std::vector<ValidateRow>(const Pt&)> eval =
      [&](const Pt& p) -> std::vector<ValidateRow> {
    qig::MetricTensor closed = qig::qubit_metric(p.q, p.w);
    auto d = qig::Divergence::make(qig::DivergenceKind::QuantumTsallisRescaled,
                                   p.q);
    qig::RealVector x(4);
    x << p.w, 0, 0, 0;
    qig::MetricTensor fd = qig::metric_fd(d, chart, x, scheme);
    std::string pt = "w=" + std::to_string(p.w);
    std::vector<ValidateRow> rows;
    rows.push_back({p.q, pt, "g_ww", closed.components(0, 0),
                    fd.components(0, 0),
                    rel_err(closed.components(0, 0), fd.components(0, 0))});
    rows.push_back({p.q, pt, "g_11", closed.components(1, 1),
                    fd.components(1, 1),
                    rel_err(closed.components(1, 1), fd.components(1, 1))});
    rows.push_back({p.q, pt, "g_22", closed.components(2, 2),
                    fd.components(2, 2),
                    rel_err(closed.components(2, 2), fd.components(2, 2))});
    return rows;
  };
  auto chunks = qig::sweep_parallel(grid, eval);
  std::vector<ValidateRow> rows;
  for (auto& c : chunks) rows.insert(rows.end(), c.begin(), c.end());
  return rows;
}

std::vector<ValidateRow> validate_qutrit_metric() {
  struct Pt {
    double q;
    std::array<double, 3> k;
  };
  std::vector<Pt> grid;
  for (double q : {0.3, 0.5, 0.7})
    for (auto k : {std::array<double, 3>{0.5, 0.3, 0.2},
                   std::array<double, 3>{0.6, 0.25, 0.15},
                   std::array<double, 3>{0.4, 0.35, 0.25}})
      grid.push_back({q, k});
  qig::Chart chart = qig::qutrit_exp_chart();
  qig::FDScheme scheme = qig::default_scheme();
  std::function<std::vector<ValidateRow>(const Pt&)> eval =
      [&](const Pt& p) -> std::vector<ValidateRow> {
    qig::RealVector kv(3);
    kv << p.k[0], p.k[1], p.k[2];
    qig::MetricTensor closed = qig::qutrit_metric(p.q, qig::ProbabilityVector(kv));
    auto d = qig::Divergence::make(qig::DivergenceKind::QuantumTsallisRescaled,
                                   p.q);
    qig::RealVector x = qig::RealVector::Zero(10);
    x(0) = p.k[0];
    x(1) = p.k[1];
    qig::MetricTensor fd = qig::metric_fd(d, chart, x, scheme);
    std::ostringstream pt;
    pt << "k=(" << p.k[0] << ";" << p.k[1] << ";" << p.k[2] << ")";
    std::vector<ValidateRow> rows;
    for (int i = 0; i < 10; ++i) {
      double c = closed.components(i, i);
      double o = fd.components(i, i);
      rows.push_back({p.q, pt.str(), closed.coframe_labels[i], c, o,
                      rel_err(c, o)});
    }
    return rows;
  };
  auto chunks = qig::sweep_parallel(grid, eval);
  std::vector<ValidateRow> rows;
  for (auto& c : chunks) rows.insert(rows.end(), c.begin(), c.end());
  return rows;
}

std::vector<ValidateRow> validate_qubit_connection() {
  qig::Chart chart = qig::qubit_polar_chart();
  qig::FDScheme scheme = qig::default_scheme();
  std::vector<ValidateRow> rows;
  const char* names[3] = {"w", "th", "ph"};
  for (double q : {0.3, 0.5, 0.7}) {
    for (double w : {0.3, 0.5, 0.7}) {
      qig::QubitGeometryPoint pt{q, w, 1.1, 0.7};
      qig::RealVector x(3);
      x << pt.w, pt.theta, pt.phi;
      auto d = qig::Divergence::make(
          qig::DivergenceKind::QuantumTsallisRescaled, q);
      for (qig::Which which : {qig::Which::Primal, qig::Which::Dual}) {
        auto closed = qig::qubit_connection_closed(pt, which);
        auto fd = qig::connection_fd(d, chart, x, scheme, which);
        std::string ptname = "w=" + std::to_string(w) +
                             (which == qig::Which::Primal ? ";primal" : ";dual");
        for (int l = 0; l < 3; ++l)
          for (int j = 0; j < 3; ++j)
            for (int k = j; k < 3; ++k) {
              double c = closed.gamma(l, j, k);
              double o = fd.gamma(l, j, k);
              std::string comp = std::string("G_") + names[l] + names[j] +
                                 names[k];
              rows.push_back({q, ptname, comp, c, o, rel_err(c, o)});
            }
      }
    }
  }
  return rows;
}

std::vector<ValidateRow> validate_curvature_limit() {
  qig::Chart chart = qig::qubit_polar_chart();
  qig::FDScheme scheme = qig::default_scheme();
  std::vector<ValidateRow> rows;
  auto d = qig::Divergence::make(
      qig::DivergenceKind::QuantumVonNeumannRelative, 1.0);
  for (double w : {0.4, 0.5, 0.6}) {
    qig::RealVector x(3);
    x << w, 1.2, 0.8;
    auto fd = qig::curvature_fd(d, chart, x, scheme, qig::Which::Primal);
    double closed = qig::scalar_curvature_limits(w, qig::ScalarLimit::Q1);
    rows.push_back({1.0, "w=" + std::to_string(w), "scalar", closed, fd.scalar,
                    std::abs(closed - fd.scalar)});
  }
  return rows;
}

std::vector<ValidateRow> validate_gaussian_divergence() {
  std::vector<ValidateRow> rows;
  qig::GaussianState a{0.5, 0.5, 0.0, 0.0, 0.0};
  qig::GaussianState b{0.8, 0.7, 0.1, 1.0, -0.5};
  qig::GaussianState c{1.2, 0.6, -0.2, 0.3, 0.4};
  for (double q : {0.25, 0.5, 0.75})
    for (double mu : {1.0, 0.6})
      for (const auto* pair : {&b, &c}) {
        qig::SymplecticFrame f{mu, mu == 1.0 ? 0.0 : 0.8};
        double closed = qig::gaussian_tsallis(a, *pair, f, q);
        double oracle = qig::gaussian_tsallis_quadrature(a, *pair, f, q);
        rows.push_back({q, "mu=" + std::to_string(mu), "S", closed, oracle,
                        rel_err(closed, oracle)});
      }
  return rows;
}

int run_validate(const std::string& target, double tol) {
  std::vector<ValidateRow> rows;
  double effective_tol = tol;
  if (target == "qubit-metric") {
    rows = validate_qubit_metric();
    if (tol <= 0) effective_tol = 1e-5;
  } else if (target == "qutrit-metric") {
    rows = validate_qutrit_metric();
    if (tol <= 0) effective_tol = 1e-5;
  } else if (target == "qubit-connection") {
    rows = validate_qubit_connection();
    if (tol <= 0) effective_tol = 1e-3;
  } else if (target == "curvature-limit") {
    rows = validate_curvature_limit();
    if (tol <= 0) effective_tol = 0.05;
  } else if (target == "gaussian-divergence") {
    rows = validate_gaussian_divergence();
    if (tol <= 0) effective_tol = 1e-8;
  } else {
    throw qig::BadParameter("unknown validate target: " + target);
  }
  print_rows(target, rows);
  double worst = 0.0;
  for (const auto& r : rows) worst = std::max(worst, r.rel_err);
  std::fprintf(stderr, "worst rel_err %.3e (tol %.3e)\n", worst,
               effective_tol);
  return worst <= effective_tol ? 0 : 3;
}

// ---- tomo ------------------------------------------------------------------

int run_tomo_forward(const std::string& system, double w, double theta,
                     double phi, const std::string& klist,
                     const std::string& tlist) {
  json out;
  out["schema"] = "qig/1";
  if (system == "qubit") {
    qig::Tomogram t =
        qig::qubit_tomogram(qig::qubit_state(w, theta, phi), qig::qubit_quorum());
    out["tomogram"] = json::parse(qig::tomogram_to_json(t));
  } else if (system == "qutrit") {
    auto ks = parse_list(klist);
    auto ts = parse_list(tlist);
    if (ks.size() != 3 || ts.size() != 8)
      throw qig::BadParameter("qutrit needs --k (3 values) and --t (8 values)");
    qig::RealVector kv(3), tv(8);
    for (int i = 0; i < 3; ++i) kv(i) = ks[i];
    for (int i = 0; i < 8; ++i) tv(i) = ts[i];
    qig::Tomogram t = qig::qutrit_tomogram(
        qig::qutrit_state(qig::ProbabilityVector(kv), tv), qig::qutrit_quorum());
    out["tomogram"] = json::parse(qig::tomogram_to_json(t));
  } else {
    throw qig::BadParameter("unknown system: " + system);
  }
  emit(out);
  return 0;
}

int run_tomo_invert(const std::string& system, const std::string& json_text,
                    double w1, double w2, double w3) {
  qig::DensityMatrix rho = [&] {
    if (system == "qutrit")
      return qig::qutrit_reconstruct(qig::tomogram_from_json(json_text),
                                     qig::qutrit_quorum());
    if (!json_text.empty())
      return qig::qubit_reconstruct(qig::tomogram_from_json(json_text));
    qig::Tomogram t;
    t.frames = {{"x", {w1, 1 - w1}}, {"y", {w2, 1 - w2}}, {"z", {w3, 1 - w3}}};
    return qig::qubit_reconstruct(t);
  }();
  json out;
  out["schema"] = "qig/1";
  out["state"] = state_json(rho);
  emit(out);
  return 0;
}

int run_tomo_check(double w1, double w2, double w3) {
  qig::UncertaintyReport r = qig::uncertainty_check(w1, w2, w3);
  json out;
  out["schema"] = "qig/1";
  out["lhs"] = r.lhs;
  out["bound"] = 0.25;
  out["holds"] = r.holds;
  emit(out);
  return r.holds ? 0 : 1;
}

int run_tomo_metric(double w, double theta, double phi, int frame) {
  qig::Quorum quorum = qig::qubit_quorum();
  if (frame < 1 || frame > 3)
    throw qig::BadParameter("--frame must be 1..3");
  qig::MetricTensor g = qig::qubit_tomographic_metric(
      qig::qubit_state(w, theta, phi), quorum.frames[frame - 1]);
  emit(metric_json(g));
  return 0;
}

// ---- gaussian --------------------------------------------------------------

int run_gaussian_tomogram(const std::string& state, double mu, double nu) {
  qig::TomogramParams p = qig::gaussian_tomogram_params(
      qig::gaussian_from_json(state), {mu, nu});
  emit(json{{"schema", "qig/1"}, {"mean", p.mean}, {"dispersion", p.dispersion}});
  return 0;
}

int run_gaussian_divergence(const std::string& state, const std::string& other,
                            double mu, double nu, double q, bool oracle) {
  qig::GaussianState a = qig::gaussian_from_json(state);
  qig::GaussianState b = qig::gaussian_from_json(other);
  qig::SymplecticFrame f{mu, nu};
  double v = oracle ? qig::gaussian_tsallis_quadrature(a, b, f, q)
                    : qig::gaussian_tsallis(a, b, f, q);
  emit(json{{"schema", "qig/1"}, {"q", q}, {"value", v}});
  return 0;
}

int run_gaussian_admissibility(const std::string& state) {
  qig::Admissibility a = qig::admissibility(qig::gaussian_from_json(state));
  emit(json{{"schema", "qig/1"},
            {"classical", a.classical},
            {"quantum", a.quantum},
            {"discriminant", a.discriminant}});
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"information-geometry computations for probability vectors, "
               "N-level states and Gaussian tomograms"};
  app.require_subcommand(1);

  std::string system = "qubit", klist, tlist, target, state, other, tomo_json;
  double q = 0.5, w = 0.5, theta = M_PI / 2, phi = 0.0;
  double mu = 1.0, nu = 0.0, tol = -1.0;
  double w1 = 0.5, w2 = 0.5, w3 = 0.5;
  int frame = 3;
  bool oracle = false;

  auto* metric = app.add_subcommand("metric", "closed-form metric at a point");
  metric->add_option("--system", system)->required();
  metric->add_option("--q", q);
  metric->add_option("--w", w);
  metric->add_option("--k", klist, "comma-separated probability vector");

  auto* validate =
      app.add_subcommand("validate", "closed form vs FD oracle sweep (CSV)");
  validate->add_option("--target", target)->required();
  validate->add_option("--tol", tol, "override the per-target tolerance");

  auto* tomo = app.add_subcommand("tomo", "spin tomography");
  tomo->require_subcommand(1);
  auto* tf = tomo->add_subcommand("forward", "state -> tomogram");
  tf->add_option("--system", system);
  tf->add_option("--w", w);
  tf->add_option("--theta", theta);
  tf->add_option("--phi", phi);
  tf->add_option("--k", klist);
  tf->add_option("--t", tlist);
  auto* ti = tomo->add_subcommand("invert", "tomogram -> state");
  ti->add_option("--system", system);
  ti->add_option("--json", tomo_json, "tomogram JSON");
  ti->add_option("--w1", w1);
  ti->add_option("--w2", w2);
  ti->add_option("--w3", w3);
  auto* tc = tomo->add_subcommand("check", "probability-cube uncertainty bound");
  tc->add_option("--w1", w1)->required();
  tc->add_option("--w2", w2)->required();
  tc->add_option("--w3", w3)->required();
  auto* tm = tomo->add_subcommand("metric", "per-frame tomographic metric");
  tm->add_option("--w", w);
  tm->add_option("--theta", theta);
  tm->add_option("--phi", phi);
  tm->add_option("--frame", frame, "quorum frame index 1..3");

  auto* gauss = app.add_subcommand("gaussian", "symplectic tomography");
  gauss->require_subcommand(1);
  auto* gt = gauss->add_subcommand("tomogram", "frame tomogram parameters");
  gt->add_option("--state", state)->required();
  gt->add_option("--mu", mu);
  gt->add_option("--nu", nu);
  auto* gd = gauss->add_subcommand("divergence", "Tsallis divergence of tomograms");
  gd->add_option("--state", state)->required();
  gd->add_option("--other", other)->required();
  gd->add_option("--mu", mu);
  gd->add_option("--nu", nu);
  gd->add_option("--q", q);
  gd->add_flag("--oracle", oracle, "use direct quadrature instead of closed form");
  auto* ga = gauss->add_subcommand("admissibility", "dispersion-matrix checks");
  ga->add_option("--state", state)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*metric) return run_metric(system, q, w, klist);
    if (*validate) return run_validate(target, tol);
    if (*tf) return run_tomo_forward(system, w, theta, phi, klist, tlist);
    if (*ti) return run_tomo_invert(system, tomo_json, w1, w2, w3);
    if (*tc) return run_tomo_check(w1, w2, w3);
    if (*tm) return run_tomo_metric(w, theta, phi, frame);
    if (*gt) return run_gaussian_tomogram(state, mu, nu);
    if (*gd) return run_gaussian_divergence(state, other, mu, nu, q, oracle);
    if (*ga) return run_gaussian_admissibility(state);
  } catch (const qig::NotAState& e) {
    std::cerr << "constraint violated: " << e.what() << "\n";
    return 1;
  } catch (const qig::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
