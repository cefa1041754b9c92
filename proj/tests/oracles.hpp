#pragma once

// Floating-point oracles used to cross-check exact decisions. They share no
// code with the library beyond Eigen.

#include <Eigen/Dense>

#include <cmath>
#include <functional>

namespace oracle {

enum class Smoothness { smooth_even, not_smooth, unbounded };

inline const char* name(Smoothness s) {
  switch (s) {
    case Smoothness::smooth_even: return "smooth_even";
    case Smoothness::not_smooth: return "not_smooth";
    case Smoothness::unbounded: return "unbounded";
  }
  return "?";
}

// Relative residual of a least-squares Chebyshev fit of degree `deg` to the
// even extension x -> h(|x|) on [-delta, delta].
inline double even_extension_residual(const std::function<double(double)>& h, double delta, int deg = 16,
                                      int samples = 401) {
  Eigen::MatrixXd A(samples, deg + 1);
  Eigen::VectorXd y(samples);
  for (int i = 0; i < samples; ++i) {
    double u = -1 + 2.0 * i / (samples - 1);
    y(i) = h(std::abs(u) * delta);
    double t0 = 1, t1 = u;
    A(i, 0) = 1;
    if (deg >= 1) A(i, 1) = u;
    for (int k = 2; k <= deg; ++k) {
      double t2 = 2 * u * t1 - t0;
      A(i, k) = t2;
      t0 = t1;
      t1 = t2;
    }
  }
  Eigen::VectorXd c = A.colPivHouseholderQr().solve(y);
  double scale = y.norm();
  return scale > 0 ? (A * c - y).norm() / scale : 0;
}

// Classifies h on (0, delta]: unbounded near 0, or whether its even
// extension is smooth (residual tiny, or shrinking fast with the scale).
inline Smoothness classify_even_smoothness(const std::function<double(double)>& h, double delta = 0.5) {
  if (std::abs(h(delta * 1e-5)) > 10 * std::abs(h(delta)) + 1e-300) return Smoothness::unbounded;
  double r1 = even_extension_residual(h, delta), r2 = even_extension_residual(h, delta / 2);
  if (r1 < 1e-9) return Smoothness::smooth_even;
  return r2 / r1 < 0.25 ? Smoothness::smooth_even : Smoothness::not_smooth;
}

}  // namespace oracle
