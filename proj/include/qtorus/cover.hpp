#ifndef QTORUS_COVER_HPP
#define QTORUS_COVER_HPP

#include <optional>

#include "qtorus/weight_module.hpp"

namespace qtorus {

/// Element of C_q' tensor M: finite sum of t^n tensor v_n with every left
/// degree n outside Rad(f).
class TensorVector {
 public:
  TensorVector() = default;

  const std::map<IntVec, GradedVector, LexLess>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Throws std::invalid_argument when n is central.
  void add_term(const IntVec& n, const GradedVector& v, const RadicalData& rad);

  friend TensorVector operator+(const TensorVector& a, const TensorVector& b);
  friend TensorVector operator-(const TensorVector& a, const TensorVector& b);
  friend TensorVector operator*(const CycScalar& c, const TensorVector& a);
  friend bool operator==(const TensorVector& a, const TensorVector& b) {
    return a.terms_ == b.terms_;
  }

 private:
  std::map<IntVec, GradedVector, LexLess> terms_;
};

/// Z-action of the central t^r: shifts the left slot only.
TensorVector central_shift(const ModuleDescriptor& desc, const IntVec& r,
                           const TensorVector& v);

/// Lie action by Leibniz on both slots.
TensorVector tensor_act(const ModuleDescriptor& desc, const Derivation& x,
                        const TensorVector& v);

/// Torus element acting term by term: central monomials through the Z-action,
/// noncentral monomials as Lie elements.
TensorVector tensor_act(const ModuleDescriptor& desc, const TorusElement& x,
                        const TensorVector& v);

/// pi(t^n tensor w) = t^n w, valued in M.
GradedVector pi_map(const ModuleDescriptor& desc, const TensorVector& v);

struct JReport {
  bool member = false;
  bool stable = false;  // verdict unchanged at gamma_window + 1
};

/// v in J iff sum_n t^{n+gamma} v_n = 0 for every central gamma with
/// xi-norm <= gamma_window (windowed approximation of the infinite condition).
JReport j_membership(const ModuleDescriptor& desc, const TensorVector& v,
                     long long gamma_window);

/// All radical points with xi-coordinate 1-norm <= bound.
std::vector<IntVec> radical_points(const RadicalData& rad, long long bound);

/// Basis of the windowed J at total weight lambda: kernel vectors of the
/// stacked evaluation matrix over the generators t^m x (basis of M at
/// lambda - m), m noncentral in the window.
std::vector<TensorVector> j_kernel_basis(const ModuleDescriptor& desc,
                                         const IntVec& lambda, long long window,
                                         long long gamma_window);

/// Omega_r^{(l,h)} = sum_i (-1)^i binom(l,i) e_{r-ih} e_{ih} applied to v in M.
GradedVector differentiator_apply(const ModuleDescriptor& desc, const IntVec& r,
                                  const IntVec& h, long long l, const RatVec& u,
                                  const GradedVector& v);

/// Smallest 2 <= l <= l_max with Omega_r^{(l,xi_j)} annihilating every basis
/// vector of the window, over all windowed radical r and all j.
std::optional<long long> minimal_annihilating_l(const ModuleDescriptor& desc,
                                                long long window, long long l_max,
                                                const RatVec& u);

struct CoverDim {
  long long dim = 0;       // windowed cover weight-space dimension
  long long dim_prev = 0;  // same at window - 1
  bool stabilized = false;
  long long bound = 0;  // spanning-set cardinality bound
  bool bound_ok = false;
  bool boundary_term = false;  // the extra psi(t^{n_0+r_0}, M_0) summand
};

/// Dimension of the lambda weight space of (C_q' tensor M)/J, both computed
/// within the m-window and modulo the gamma-windowed J.
CoverDim cover_weight_space(const ModuleDescriptor& desc, const IntVec& lambda_degree,
                            long long window, long long gamma_window, long long l);

struct RewriteIdentity {
  bool applicable = false;  // preconditions met
  bool holds = false;       // difference passed the windowed J test
};

/// The rewriting identity: psi(t^{n+r}, e_0 w) equals the two alternating
/// binomial sums over xi_j-shifts, modulo J.  w is the basis vector of M at
/// degree w_deg; preconditions (nonzero weight, (u|n) != 0) reported via
/// `applicable`.
RewriteIdentity rewrite_identity_check(const ModuleDescriptor& desc, const IntVec& n,
                              const IntVec& r, long long l, long long j,
                              const IntVec& w_deg, long long w_index,
                              const RatVec& u, long long gamma_window);

}  // namespace qtorus

#endif  // QTORUS_COVER_HPP
