#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

namespace ncreal {

// Expression templates are disabled so the types behave as plain values
// inside Eigen containers.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

using Index = Eigen::Index;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using RationalMatrix = Matrix<Rational>;
using RationalVector = Vector<Rational>;

/// "p/q" or "p"; always in lowest terms.
std::string to_string(const Rational& r);

/// Accepts "p" or "p/q" with an optional leading sign. Throws
/// std::invalid_argument on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// Exact binary value of a double.
Rational from_double(double x);

inline int sign(const Rational& r) { return r.sign(); }

template <typename Scalar>
Scalar scalar_cast(const Rational& r) {
  if constexpr (std::is_same_v<Scalar, Rational>) {
    return r;
  } else {
    return r.template convert_to<Scalar>();
  }
}

template <typename Scalar>
Matrix<Scalar> cast_matrix(const RationalMatrix& m) {
  Matrix<Scalar> out(m.rows(), m.cols());
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) out(i, j) = scalar_cast<Scalar>(m(i, j));
  return out;
}

}  // namespace ncreal
