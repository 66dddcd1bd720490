#ifndef QTORUS_CYCLOTOMIC_HPP
#define QTORUS_CYCLOTOMIC_HPP

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "qtorus/rational.hpp"

namespace qtorus {

/// Exact element of the cyclotomic field Q(zeta_L), zeta_L = e^{2*pi*i/L}.
///
/// Stored canonically as a polynomial in zeta_L of degree < phi(L), reduced
/// modulo the L-th cyclotomic polynomial Phi_L.  Working modulo Phi_L (a
/// genuine field) rather than x^L - 1 keeps zero-testing exact.  Values of
/// different orders promote lazily to the lcm order when mixed.
class CycScalar {
 public:
  CycScalar() : coeffs_(1, Rational(0)) {}
  CycScalar(long long n) : coeffs_(1, Rational(n)) {}  // NOLINT: implicit scalar
  CycScalar(Rational r) : coeffs_(1, std::move(r)) {}  // NOLINT: implicit scalar

  /// The root of unity e^{2*pi*i*num/den}, stored at its minimal order.
  static CycScalar root_of_unity(long long num, long long den);
  /// The primitive root zeta_L.
  static CycScalar zeta(long long order) { return root_of_unity(1, order); }

  long long order() const { return order_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_one() const { return *this == CycScalar(1); }
  /// True when the value lies in Q (degree-0 part only, any order).
  bool is_rational() const;
  /// The rational value; throws unless is_rational().
  Rational rational_value() const;

  friend CycScalar operator+(const CycScalar& a, const CycScalar& b);
  friend CycScalar operator-(const CycScalar& a, const CycScalar& b);
  friend CycScalar operator*(const CycScalar& a, const CycScalar& b);
  friend CycScalar operator-(const CycScalar& a);
  CycScalar& operator+=(const CycScalar& o) { return *this = *this + o; }
  CycScalar& operator-=(const CycScalar& o) { return *this = *this - o; }
  CycScalar& operator*=(const CycScalar& o) { return *this = *this * o; }

  friend bool operator==(const CycScalar& a, const CycScalar& b);
  friend bool operator!=(const CycScalar& a, const CycScalar& b) { return !(a == b); }

  /// Multiplicative inverse via extended Euclid against Phi_L.
  /// Throws std::domain_error on zero.
  CycScalar inverse() const;
  friend CycScalar operator/(const CycScalar& a, const CycScalar& b) {
    return a * b.inverse();
  }

  /// Integer power (negative exponents through the inverse).
  CycScalar pow(long long e) const;

  /// Smallest m >= 1 with (*this)^m == 1, or nullopt if the value is not a
  /// root of unity.  Roots of unity in Q(zeta_L) have order dividing lcm(2, L).
  std::optional<long long> unity_order() const;

  /// This value viewed inside Q(zeta_M); requires order() | M.
  CycScalar promoted(long long m) const;

  /// Exponent pair (num, den) with *this == e^{2*pi*i*num/den}, den minimal,
  /// if the value is a root of unity.
  std::optional<std::pair<long long, long long>> as_root_exponent() const;

  /// Numeric evaluation, for diagnostics only.
  std::pair<double, double> to_complex() const;

  std::string str() const;

  /// Euler totient.
  static long long phi(long long n);
  /// Phi_n as a monic integer polynomial (ascending coefficients).
  static const std::vector<BigInt>& cyclotomic_polynomial(long long n);

 private:
  CycScalar(long long order, std::vector<Rational> coeffs)
      : order_(order), coeffs_(std::move(coeffs)) {}

  long long order_ = 1;
  std::vector<Rational> coeffs_;  // length phi(order_)
};

using CycMat = Eigen::Matrix<CycScalar, Eigen::Dynamic, Eigen::Dynamic>;
using CycVec = Eigen::Matrix<CycScalar, Eigen::Dynamic, 1>;
using RatMat = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using RatVec = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

}  // namespace qtorus

namespace Eigen {

template <>
struct NumTraits<qtorus::Rational> : GenericNumTraits<qtorus::Rational> {
  typedef qtorus::Rational Real;
  typedef qtorus::Rational NonInteger;
  typedef qtorus::Rational Nested;
  typedef qtorus::Rational Literal;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 60,
    MulCost = 60
  };
  static inline Real epsilon() { return qtorus::Rational(0); }
  static inline Real dummy_precision() { return qtorus::Rational(0); }
  static inline int digits10() { return 0; }
};

template <>
struct NumTraits<qtorus::CycScalar> : GenericNumTraits<qtorus::CycScalar> {
  typedef qtorus::CycScalar Real;
  typedef qtorus::CycScalar NonInteger;
  typedef qtorus::CycScalar Nested;
  typedef qtorus::CycScalar Literal;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 12,
    AddCost = 120,
    MulCost = 240
  };
  static inline Real epsilon() { return qtorus::CycScalar(0); }
  static inline Real dummy_precision() { return qtorus::CycScalar(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

#endif  // QTORUS_CYCLOTOMIC_HPP
