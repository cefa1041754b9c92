#pragma once

// Floating-point realization of the rotated surface
//
//   F(x, t) = (R_1(x) e^{i k_1 t}, ..., R_n(x) e^{i k_n t}),
//   R_p(x) = sqrt(2 g_p(x^2 / 2)),  g_1 = identity,
//
// built from a CurveGraph (positions in graph order, so R_1(x) = x). This
// module is a numeric cross-check only; nothing here certifies a verdict.

#include "toriclift/criterion.hpp"

#include <Eigen/Dense>

#include <array>
#include <string>

namespace toriclift {

struct SurfaceSample {
  int nx = 0, nt = 0;
  Eigen::VectorXd x;          ///< nx radial values
  Eigen::VectorXd t;          ///< nt angles in [0, 2pi)
  Eigen::MatrixXd points;     ///< (nx*nt) x 2n, row i*nt + j is F(x_i, t_j)
  Eigen::VectorXi weights;    ///< k per graph position
  std::string provenance;

  Eigen::Index count() const { return points.rows(); }
};

/// The radial profiles R_p as double-precision functions of x.
class SurfaceProfile {
 public:
  explicit SurfaceProfile(const CurveGraph& graph);

  int dimension() const { return static_cast<int>(g_.size()); }
  const Eigen::VectorXi& weights() const { return k_; }
  /// Largest x covered by the graph: sqrt(2 * domain).
  double x_max() const { return x_max_; }
  /// |z_p|^2 / 2 = g_p(x^2 / 2).
  double moment(int p, double x) const;
  double radius(int p, double x) const;
  Eigen::VectorXd point(double x, double t) const;

 private:
  std::vector<Polynomial<double>> g_;
  Eigen::VectorXi k_;
  double x_max_ = 0;
};

/// Uniform grid over [0, x_max] x [0, 2pi); x_max defaults to the whole graph.
/// Throws DomainError on an empty grid or a negative radicand.
SurfaceSample sample_surface(const CurveGraph& graph, int nx, int nt, std::optional<double> x_max = {});

/// omega_0(F_x, F_t) from Richardson-extrapolated central differences.
double pullback_density(const SurfaceProfile& profile, double x, double t = 0.3);
/// sum_p k_p d/dx[g_p(x^2 / 2)], exactly.
Rational exact_pullback_density(const CurveGraph& graph, const Rational& x);

struct ProbeResult {
  enum class Kind { planar, conelike, inconclusive };
  Kind kind = Kind::inconclusive;
  double residual = 0;       ///< normalized out-of-plane RMS at the coarse scale
  double ratio = 0;          ///< residual(eps/2) / residual(eps)
  double aperture = 0;       ///< half-angle estimate, radians (conelike)
  std::string detail;
};

const char* to_string(ProbeResult::Kind k);

/// Probe thresholds. Inconclusive is always a legitimate outcome.
struct ProbeThresholds {
  double planar_ratio = 0.6;
  double planar_residual = 0.05;
  double cone_residual = 0.15;
  double cone_ratio = 0.9;
  /// Residuals below this count as an exact plane.
  double flat = 1e-9;
  /// Second principal variance over the first below this: no 2D spread.
  double spread = 1e-3;
  /// Degree of the graph fit that confirms a planar answer.
  int fit_degree = 4;
  /// Largest acceptable fine/coarse ratio of the normalized fit residual;
  /// a smooth graph gives about 2^-fit_degree.
  double fit_ratio = 0.088;
};

/// Compares best-fit 2-planes through the image of x = 0 at two scales
/// (`coarse` sampled on [0, eps], `fine` on [0, eps/2]).
ProbeResult smoothness_probe(const SurfaceSample& coarse, const SurfaceSample& fine,
                             const ProbeThresholds& thresholds = {});

/// Samples the graph near x = 0 at eps and eps/2 and probes.
ProbeResult probe_endpoint(const CurveGraph& graph, double eps = 0.01, int nx = 24, int nt = 64,
                           const ProbeThresholds& thresholds = {});

enum class MeshFormat { csv, obj };

/// CSV: header x1,t,p1..p2n then one row per sample. OBJ: vertices projected
/// on the three coordinates in `projection` (0-based), quads wrapping in t.
void export_mesh(const SurfaceSample& sample, MeshFormat format, const std::string& path,
                 std::array<int, 3> projection = {0, 1, 2});

}  // namespace toriclift
