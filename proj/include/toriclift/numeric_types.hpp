#pragma once

#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>
#include <Eigen/Dense>

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace toriclift {

namespace mp = boost::multiprecision;

// Expression templates off: Eigen needs plain value semantics from its scalars.
using Integer = mp::number<mp::gmp_int, mp::et_off>;
using Rational = mp::number<mp::gmp_rational, mp::et_off>;

template <class Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = Matrix<Integer>;
using IntVector = Vector<Integer>;
using RatMatrix = Matrix<Rational>;
using RatVector = Vector<Rational>;

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses "p/q" or "p" (optional sign, decimal digits only). Decimal points
/// and exponents are rejected so that every literal is exact.
Rational parse_rational(std::string_view text);

/// "p/q", or "p" when q = 1.
std::string to_string(const Rational& r);
std::string to_string(const Integer& z);

inline Integer numerator(const Rational& r) { return mp::numerator(r); }
inline Integer denominator(const Rational& r) { return mp::denominator(r); }
inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

inline int sign(const Rational& r) { return r.sign(); }
inline int sign(const Integer& z) { return z.sign(); }

inline double to_double(const Rational& r) { return r.convert_to<double>(); }
inline double to_double(const Integer& z) { return z.convert_to<double>(); }

template <class Scalar>
RatMatrix to_rational(const Matrix<Scalar>& m) {
  return m.template cast<Rational>();
}
inline RatVector to_rational(const IntVector& v) { return v.cast<Rational>(); }

/// Floor of a rational as an Integer.
Integer floor(const Rational& r);

}  // namespace toriclift
