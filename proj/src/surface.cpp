#include "toriclift/surface.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>

namespace toriclift {

namespace {

std::string fmt_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// Ridders' extrapolation of central differences for a vector-valued f.
template <class F>
Eigen::VectorXd ridders_derivative(const F& f, double x, double h) {
  constexpr int kTable = 10;
  constexpr double kShrink = 1.4, kShrink2 = kShrink * kShrink, kSafe = 2.0;
  std::vector<std::vector<Eigen::VectorXd>> a(kTable, std::vector<Eigen::VectorXd>(kTable));
  a[0][0] = (f(x + h) - f(x - h)) / (2 * h);
  Eigen::VectorXd best = a[0][0];
  double err = std::numeric_limits<double>::infinity();
  for (int i = 1; i < kTable; ++i) {
    h /= kShrink;
    a[0][i] = (f(x + h) - f(x - h)) / (2 * h);
    double fac = kShrink2;
    for (int j = 1; j <= i; ++j) {
      a[j][i] = (a[j - 1][i] * fac - a[j - 1][i - 1]) / (fac - 1);
      fac *= kShrink2;
      double e = std::max((a[j][i] - a[j - 1][i]).norm(), (a[j][i] - a[j - 1][i - 1]).norm());
      if (e <= err) {
        err = e;
        best = a[j][i];
      }
    }
    if ((a[i][i] - a[i - 1][i - 1]).norm() >= kSafe * err) break;
  }
  return best;
}

double symplectic_pairing(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
  double w = 0;
  for (Eigen::Index p = 0; p + 1 < a.size(); p += 2) w += a(p) * b(p + 1) - a(p + 1) * b(p);
  return w;
}

}  // namespace

SurfaceProfile::SurfaceProfile(const CurveGraph& graph) {
  const int n = static_cast<int>(graph.g.size());
  k_.resize(n);
  for (int p = 0; p < n; ++p) {
    std::vector<double> c;
    for (const auto& q : graph.g[p].coeffs()) c.push_back(to_double(q));
    g_.emplace_back(std::move(c));
    k_(p) = graph.k(p).convert_to<int>();
  }
  x_max_ = std::sqrt(2 * to_double(graph.domain));
}

double SurfaceProfile::moment(int p, double x) const { return g_.at(p)(x * x / 2); }

double SurfaceProfile::radius(int p, double x) const {
  double m = moment(p, x);
  if (m < 0) {
    if (m > -1e-12) return 0;
    throw DomainError("negative radicand in coordinate " + std::to_string(p) + " at x1 = " + fmt_double(x));
  }
  return std::sqrt(2 * m);
}

Eigen::VectorXd SurfaceProfile::point(double x, double t) const {
  const int n = dimension();
  Eigen::VectorXd z(2 * n);
  for (int p = 0; p < n; ++p) {
    double r = radius(p, x);
    z(2 * p) = r * std::cos(k_(p) * t);
    z(2 * p + 1) = r * std::sin(k_(p) * t);
  }
  return z;
}

SurfaceSample sample_surface(const CurveGraph& graph, int nx, int nt, std::optional<double> x_max) {
  if (nx < 1 || nt < 1) throw DomainError("empty sampling grid");
  SurfaceProfile profile(graph);
  double top = x_max ? *x_max : profile.x_max();
  if (!(top > 0)) throw DomainError("sampling range is empty (unknown or zero graph domain)");
  SurfaceSample s;
  s.nx = nx;
  s.nt = nt;
  s.x.resize(nx);
  s.t.resize(nt);
  for (int i = 0; i < nx; ++i) s.x(i) = nx == 1 ? top : top * i / (nx - 1);
  for (int j = 0; j < nt; ++j) s.t(j) = 2 * std::numbers::pi * j / nt;
  s.points.resize(static_cast<Eigen::Index>(nx) * nt, 2 * profile.dimension());
  // Rows are independent; filled in grid order.
  for (int i = 0; i < nx; ++i)
    for (int j = 0; j < nt; ++j) s.points.row(i * nt + j) = profile.point(s.x(i), s.t(j)).transpose();
  s.weights = profile.weights();
  s.provenance = "graph at endpoint " + std::to_string(static_cast<int>(graph.endpoint)) +
                 ", chart coordinate " + std::to_string(graph.param_index) + " as x1";
  return s;
}

double pullback_density(const SurfaceProfile& profile, double x, double t) {
  double h = 0.05;
  h = std::min(h, 0.25 * x);
  if (profile.x_max() > x) h = std::min(h, 0.25 * (profile.x_max() - x));
  Eigen::VectorXd Fx = ridders_derivative([&](double y) { return profile.point(y, t); }, x, h);
  Eigen::VectorXd Ft = ridders_derivative([&](double s) { return profile.point(x, s); }, t, 0.05);
  return symplectic_pairing(Fx, Ft);
}

Rational exact_pullback_density(const CurveGraph& graph, const Rational& x) {
  const Rational s = x * x / 2;
  Rational total(0);
  for (std::size_t p = 0; p < graph.g.size(); ++p) {
    RatPoly d = graph.g[p].polynomial().derivative();
    total += Rational(graph.k(static_cast<Eigen::Index>(p))) * d(s) * x;
  }
  return total;
}

const char* to_string(ProbeResult::Kind k) {
  switch (k) {
    case ProbeResult::Kind::planar: return "planar";
    case ProbeResult::Kind::conelike: return "conelike";
    case ProbeResult::Kind::inconclusive: return "inconclusive";
  }
  return "?";
}

namespace {

struct LevelFit {
  bool ok = false;
  std::string why;
  double residual = 0;  // out-of-plane RMS / RMS norm
  double spread = 0;    // second / first principal variance
  double fit = 0;       // polynomial-graph residual RMS / scale
};

LevelFit analyse_level(const SurfaceSample& s, int degree) {
  LevelFit out;
  if (s.nx < 3 || s.nt < 4) {
    out.why = "too few sample points";
    return out;
  }
  const Eigen::Index dim = s.points.cols();
  Eigen::RowVectorXd center = s.points.row(0);
  for (int j = 1; j < s.nt; ++j)
    if ((s.points.row(j) - center).norm() > 1e-9) {
      out.why = "image of x1 = 0 is not a single point";
      return out;
    }
  const Eigen::Index rows = static_cast<Eigen::Index>(s.nx - 1) * s.nt;
  Eigen::MatrixXd Y = s.points.bottomRows(rows).rowwise() - center;
  Eigen::MatrixXd M = Y.transpose() * Y / static_cast<double>(rows);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(M);
  const Eigen::VectorXd& lambda = es.eigenvalues();  // ascending
  const double total = lambda.sum();
  if (!(total > 0)) {
    out.why = "degenerate sample";
    return out;
  }
  out.spread = lambda(dim - 2) / lambda(dim - 1);
  // Projected directly; summing small eigenvalues would lose half the digits.
  Eigen::MatrixXd normal = Y * es.eigenvectors().leftCols(dim - 2);
  out.residual = normal.norm() / Y.norm();

  // Graph of the normal components over the fitted plane.
  const double scale = s.x.maxCoeff();
  Eigen::MatrixXd plane = Y * es.eigenvectors().rightCols(2) / scale;
  std::vector<std::pair<int, int>> monomials;
  for (int d = 0; d <= degree; ++d)
    for (int a = 0; a <= d; ++a) monomials.emplace_back(a, d - a);
  Eigen::MatrixXd A(rows, static_cast<Eigen::Index>(monomials.size()));
  for (Eigen::Index r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < monomials.size(); ++c)
      A(r, static_cast<Eigen::Index>(c)) =
          std::pow(plane(r, 0), monomials[c].first) * std::pow(plane(r, 1), monomials[c].second);
  Eigen::MatrixXd coeffs = A.colPivHouseholderQr().solve(normal);
  out.fit = std::sqrt((A * coeffs - normal).squaredNorm() / static_cast<double>(rows)) / scale;
  out.ok = true;
  return out;
}

}  // namespace

ProbeResult smoothness_probe(const SurfaceSample& coarse, const SurfaceSample& fine, const ProbeThresholds& th) {
  ProbeResult r;
  LevelFit a = analyse_level(coarse, th.fit_degree), b = analyse_level(fine, th.fit_degree);
  if (!a.ok || !b.ok) {
    r.detail = !a.ok ? a.why : b.why;
    return r;
  }
  r.residual = a.residual;
  r.ratio = a.residual > 0 ? b.residual / a.residual : 0;
  r.aperture = std::atan2(a.residual, std::sqrt(std::max(0.0, 1 - a.residual * a.residual)));
  if (a.spread < th.spread) {
    r.detail = "sample has no two-dimensional spread";
    return r;
  }
  const bool flat = a.residual < th.flat;
  if (flat || (r.ratio <= th.planar_ratio && a.residual < th.planar_residual)) {
    // C^1 contact; confirm the graph over the plane is smooth to higher order.
    const bool fit_flat = a.fit < th.flat;
    const double fit_ratio = a.fit > 0 ? b.fit / a.fit : 0;
    if (fit_flat || fit_ratio <= th.fit_ratio) {
      r.kind = ProbeResult::Kind::planar;
      r.detail = flat ? "sample lies in a plane" : "residual shrinks with the scale";
    } else {
      r.detail = "tangent plane exists but the graph is not smooth to degree " + std::to_string(th.fit_degree) +
                 " (fit ratio " + fmt_double(fit_ratio) + ")";
    }
    return r;
  }
  if (a.residual > th.cone_residual && r.ratio >= th.cone_ratio) {
    r.kind = ProbeResult::Kind::conelike;
    r.detail = "residual does not shrink with the scale";
    return r;
  }
  r.detail = "between thresholds";
  return r;
}

ProbeResult probe_endpoint(const CurveGraph& graph, double eps, int nx, int nt, const ProbeThresholds& th) {
  SurfaceProfile profile(graph);
  if (profile.x_max() > 0) eps = std::min(eps, profile.x_max() / 2);
  try {
    SurfaceSample coarse = sample_surface(graph, nx, nt, eps);
    SurfaceSample fine = sample_surface(graph, nx, nt, eps / 2);
    return smoothness_probe(coarse, fine, th);
  } catch (const DomainError& e) {
    ProbeResult r;
    r.detail = e.what();
    return r;
  }
}

void export_mesh(const SurfaceSample& sample, MeshFormat format, const std::string& path,
                 std::array<int, 3> projection) {
  if (sample.nx < 1 || sample.nt < 1 || sample.count() == 0) throw DomainError("cannot export an empty sample");
  const Eigen::Index dim = sample.points.cols();
  for (int c : projection)
    if (c < 0 || c >= dim) throw DomainError("projection coordinate out of range");
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  if (format == MeshFormat::csv) {
    out << "x1,t";
    for (Eigen::Index c = 0; c < dim; ++c) out << ",p" << (c + 1);
    out << "\n";
    for (int i = 0; i < sample.nx; ++i)
      for (int j = 0; j < sample.nt; ++j) {
        out << fmt_double(sample.x(i)) << "," << fmt_double(sample.t(j));
        for (Eigen::Index c = 0; c < dim; ++c) out << "," << fmt_double(sample.points(i * sample.nt + j, c));
        out << "\n";
      }
  } else {
    out << "# " << sample.provenance << "\n";
    for (Eigen::Index r = 0; r < sample.count(); ++r)
      out << "v " << fmt_double(sample.points(r, projection[0])) << " " << fmt_double(sample.points(r, projection[1]))
          << " " << fmt_double(sample.points(r, projection[2])) << "\n";
    auto id = [&](int i, int j) { return i * sample.nt + (j % sample.nt) + 1; };
    for (int i = 0; i + 1 < sample.nx; ++i)
      for (int j = 0; j < sample.nt; ++j)
        out << "f " << id(i, j) << " " << id(i + 1, j) << " " << id(i + 1, j + 1) << " " << id(i, j + 1) << "\n";
  }
  if (!out) throw std::runtime_error("error writing " + path);
}

}  // namespace toriclift
