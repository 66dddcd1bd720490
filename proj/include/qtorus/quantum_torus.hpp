#ifndef QTORUS_QUANTUM_TORUS_HPP
#define QTORUS_QUANTUM_TORUS_HPP

#include <map>

#include "qtorus/cyclotomic.hpp"
#include "qtorus/lattice.hpp"

namespace qtorus {

/// The defining matrix of a rational quantum torus: q_ii = 1, q_ij = q_ji^{-1},
/// all entries roots of unity.  Also carries the integer exponent matrix A with
/// q_ij = zeta_L^{A(i,j)}, which makes sigma and f pure integer computations.
class QMatrix {
 public:
  /// Validates the defining constraints; throws std::invalid_argument.
  explicit QMatrix(CycMat entries);

  /// Normal-form builder: d coordinates, blocks (k_i, q_i) with
  /// q_{2i, 2i-1} = q_i = zeta_{k_i}; remaining entries 1.
  static QMatrix standard(long long d, const std::vector<long long>& ks);

  long long dim() const { return d_; }
  long long level() const { return level_; }  // L = lcm of entry orders
  const CycMat& entries() const { return entries_; }
  const IntMat& exponents() const { return expo_; }

  /// sigma(n, m) with t^n t^m = sigma(n, m) t^{n+m}.
  CycScalar sigma(const IntVec& n, const IntVec& m) const;
  /// f(n, m) = sigma(n, m) sigma(m, n)^{-1}, the commutator bicharacter.
  CycScalar f_form(const IntVec& n, const IntVec& m) const;

  /// Exponent e with sigma(n, m) = zeta_L^e, reduced mod L.
  long long sigma_exponent(const IntVec& n, const IntVec& m) const;
  long long f_exponent(const IntVec& n, const IntVec& m) const;

  /// True when q is in the symplectic block normal form (q_{2i,2i-1} and inverses on
  /// the first 2z coordinates, all other entries 1, orders descending).
  bool is_normal_form() const;

  const CycScalar& zeta() const { return zeta_; }

 private:
  QMatrix() = default;
  long long d_ = 0;
  long long level_ = 1;
  CycMat entries_;
  IntMat expo_;
  CycScalar zeta_;
  std::vector<CycScalar> zeta_pow_;  // zeta_L^k, 0 <= k < L
};

/// Finite Z^d-graded element of C_q: a map degree -> coefficient.
class TorusElement {
 public:
  TorusElement() = default;
  static TorusElement monomial(const IntVec& degree, CycScalar coeff = CycScalar(1));

  const std::map<IntVec, CycScalar, LexLess>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  long long dim() const;

  void add_term(const IntVec& degree, const CycScalar& coeff);

  friend TorusElement operator+(const TorusElement& a, const TorusElement& b);
  friend TorusElement operator-(const TorusElement& a, const TorusElement& b);
  friend TorusElement operator*(const CycScalar& c, const TorusElement& a);
  friend bool operator==(const TorusElement& a, const TorusElement& b) {
    return a.terms_ == b.terms_;
  }

 private:
  std::map<IntVec, CycScalar, LexLess> terms_;
};

/// Graded product: t^n t^m = sigma(n, m) t^{n+m}, extended bilinearly.
TorusElement qt_mul(const QMatrix& q, const TorusElement& a, const TorusElement& b);

/// [a, b] = ab - ba in C_q.
TorusElement qt_commutator(const QMatrix& q, const TorusElement& a, const TorusElement& b);

/// True iff support(a) is contained in Rad(f), i.e. a is central.
bool is_central(const TorusElement& a, const RadicalData& rad);

/// True iff support(a) avoids Rad(f), i.e. a lies in the derived subalgebra.
bool in_derived_subalgebra(const TorusElement& a, const RadicalData& rad);

}  // namespace qtorus

#endif  // QTORUS_QUANTUM_TORUS_HPP
