#ifndef QTORUS_WEIGHT_MODULE_HPP
#define QTORUS_WEIGHT_MODULE_HPP

#include <map>
#include <random>
#include <string>
#include <vector>

#include "qtorus/derivation.hpp"
#include "qtorus/gl_realization.hpp"

namespace qtorus {

/// Finite-dimensional gl_d-module: one action matrix per elementary matrix
/// E_ij, with the identity matrix acting by the scalar b.
struct GlDModule {
  long long d = 1;
  long long dim = 1;
  std::vector<long long> lambda;  // highest-weight partition label
  CycScalar b;                    // identity-action scalar
  std::vector<CycMat> action;     // E_ij at index i * d + j

  const CycMat& act_e(long long i, long long j) const { return action[i * d + j]; }
  /// Action of sum m_ij E_ij for a numeric d x d matrix m.
  CycMat act_mat(const CycMat& m) const;
};

long long weyl_dim(const std::vector<long long>& lambda, long long d);

/// Irreducible gl_d-module of highest weight lambda via Young symmetrization
/// of (C^d)^{tensor |lambda|}; the trace part is shifted so the identity acts
/// by b while the sl_d action is untouched.  Desk scale: |lambda| small.
GlDModule young_module(const std::vector<long long>& lambda, long long d,
                       const CycScalar& b);

/// The data of the graded module: V tensor W_nbar tensor t^n over all n.
struct ModuleDescriptor {
  QMatrix q;
  RadicalData rad;
  GlDModule v;
  GradedGlModule w;
  CycVec alpha;
  int fault = 0;  // nonzero injects a deliberate bug (negative controls)

  std::vector<std::vector<long long>> comp_basis;  // W basis indices per coset

  ModuleDescriptor(QMatrix q_in, GlDModule v_in, GradedGlModule w_in, CycVec alpha_in);

  long long comp_size(long long coset) const {
    return static_cast<long long>(comp_basis[coset].size());
  }
  /// dim(V) * dim(W_nbar), the weight-space dimension at degree n.
  long long weight_dim(const IntVec& n) const;
};

/// Finitely supported element of the graded module; component at degree n is
/// a coefficient vector over the (V basis) x (W_nbar basis) pairs, V-major.
class GradedVector {
 public:
  GradedVector() = default;

  const std::map<IntVec, CycVec, LexLess>& support() const { return support_; }
  bool is_zero() const { return support_.empty(); }

  void add_component(const IntVec& n, const CycVec& c);

  friend GradedVector operator+(const GradedVector& a, const GradedVector& b);
  friend GradedVector operator-(const GradedVector& a, const GradedVector& b);
  friend GradedVector operator*(const CycScalar& c, const GradedVector& a);
  friend bool operator==(const GradedVector& a, const GradedVector& b) {
    return a.support_ == b.support_;
  }

 private:
  std::map<IntVec, CycVec, LexLess> support_;
};

/// The basis vector (V basis a) tensor (W basis comp_basis[coset][tpos]) t^n.
GradedVector basis_vector(const ModuleDescriptor& desc, const IntVec& n, long long a,
                          long long tpos);

/// Action (1): t^s (v x w x t^n) = v x (X^s w) x t^{n+s}, bilinear in x.
GradedVector vw_act(const ModuleDescriptor& desc, const TorusElement& x,
                    const GradedVector& vec);

/// Actions (1)+(2): inner terms act like t^s, witt terms D(u,r) act by
/// ((u|n+alpha) + r u^T on V) with degree shift r.
GradedVector vw_act(const ModuleDescriptor& desc, const Derivation& x,
                    const GradedVector& vec);

struct RepReport {
  bool pass = true;
  long long checks = 0;
  std::string counterexample;  // empty when pass
};

/// Windowed verification: Lie representation law for homogeneous generator
/// pairs, plus the two center-compatibility identities.
RepReport verify_rep(const ModuleDescriptor& desc, long long window);

struct ProbeReport {
  bool window_reducible = false;
  long long radius = 0;
  long long margin = 0;
  // interior degree -> (generated dimension, full weight dimension)
  std::map<IntVec, std::pair<long long, long long>, LexLess> interior;
};

/// Closure of a seed under all window operators, truncated to the window;
/// an unfilled interior weight space marks the configuration window-reducible.
ProbeReport submodule_probe(const ModuleDescriptor& desc, const GradedVector& seed,
                            long long radius);

/// Deterministic candidate seeds for the probe at the given degree: random
/// coordinates from the rng plus structural candidates (the gradient line for
/// the natural V, the alpha-killed vector for one-dimensional V).
std::vector<GradedVector> probe_seeds(const ModuleDescriptor& desc, long long count,
                                      std::mt19937_64& rng);

}  // namespace qtorus

#endif  // QTORUS_WEIGHT_MODULE_HPP
