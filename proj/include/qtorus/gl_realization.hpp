#ifndef QTORUS_GL_REALIZATION_HPP
#define QTORUS_GL_REALIZATION_HPP

#include <map>
#include <utility>
#include <vector>

#include "qtorus/quantum_torus.hpp"

namespace qtorus {

/// Elements of gl_N are plain dense matrices over the cyclotomic field.
using GlElement = CycMat;

CycMat kron(const CycMat& a, const CycMat& b);

/// The two k x k block generators: X_odd = diag(1, q, ..., q^{k-1}),
/// X_even = cyclic shift; they satisfy X_even X_odd = q X_odd X_even and
/// X_odd^k = X_even^k = 1.  Throws unless q has order exactly k.
std::pair<GlElement, GlElement> block_generators(long long k, const CycScalar& qi);

/// X^n = tensor over blocks of X_odd^{n_{2i-1}} X_even^{n_{2i}}; requires q in
/// normal form.  Depends on n only through its class mod Rad(f); X^r = E for
/// r in Rad(f).
GlElement x_power(const QMatrix& q, const RadicalData& rad, const IntVec& n);

/// Image of a torus element under t^n -> (X^n, n); coefficients folded into
/// the matrix part.
std::vector<std::pair<GlElement, IntVec>> loop_embed(const QMatrix& q,
                                                     const RadicalData& rad,
                                                     const TorusElement& a);

/// A Gamma-graded gl_N-module: finitely many basis vectors, each assigned a
/// coset of Rad(f); one action matrix per coset representative degree.
struct GradedGlModule {
  long long n_size = 1;  // N
  long long dim = 1;
  std::vector<long long> grading;           // coset index per basis vector
  std::map<IntVec, CycMat, LexLess> action;  // keyed by canonical coset rep

  /// Action matrix of X^m for arbitrary m (reduced to its coset rep).
  const CycMat& act(const IntVec& m, const RadicalData& rad) const;

  long long component_dim(long long coset) const;

  /// Checks the graded-module law and that X^0 = E acts as the identity;
  /// throws std::invalid_argument on violation.
  void validate(const RadicalData& rad) const;
};

/// W = gl_N under left multiplication; basis X^delta per coset, W_nbar a line.
GradedGlModule left_regular_module(const QMatrix& q, const RadicalData& rad);

/// Brute force: every nonzero homogeneous basis vector generates all of W.
bool is_graded_irreducible(const GradedGlModule& w, const RadicalData& rad);

}  // namespace qtorus

#endif  // QTORUS_GL_REALIZATION_HPP
