#ifndef QTORUS_SUITES_HPP
#define QTORUS_SUITES_HPP

#include <string>

#include "qtorus/cover.hpp"

namespace qtorus {

struct SuiteResult {
  std::string name;
  bool pass = false;
  long long checks = 0;
  std::string counterexample;  // empty when pass
};

/// Antisymmetry and the Jacobi identity for every homogeneous generator pair /
/// unordered triple with degrees in the window: ad(t^s) for noncentral s and
/// D(e_i, r) for central r.  Runs on an integer fast path (coefficients in
/// Z[x]/(x^L - 1), zero test modulo Phi_L); nonzero fault corrupts the cocycle
/// exponent as a negative control.
SuiteResult suite_jacobi(const QMatrix& q, long long window, int fault = 0);

/// The loop homomorphism law X^n X^m = sigma(n,m) X^{n+m}.  Matrix products
/// over coset representative pairs, the lattice-periodicity certificates that
/// extend them to the full window, and X^r = E on central window points.
SuiteResult suite_loop_hom(const QMatrix& q, long long window);

/// verify_rep on the descriptor: representation law plus the two
/// center-compatibility identities over the generator window.
SuiteResult suite_rep(const ModuleDescriptor& desc, long long window);

struct CoverSuiteParams {
  long long samples = 10;        // randomized checks per identity family
  long long identity_radius = 2; // n-window for the rewriting identity
  long long gamma_window = 2;
  long long l_max = 4;
  long long cover_window = 3;    // m-window for cover weight-space ranks
};

/// The tensor-cover suite: randomized compatibility / homomorphism / ideal
/// closure identities, the rewriting identity on all admissible inputs,
/// the minimal differentiator order, and cover weight-space stabilization
/// with the spanning bound.
SuiteResult suite_cover(const ModuleDescriptor& desc, const CoverSuiteParams& params,
                        unsigned long long seed);

/// Testing hook for the jacobi fast path: bracket of two single-generator
/// derivations (one inner term or one integer witt term) computed through the
/// integer representation.
Derivation fast_bracket(const QMatrix& q, const RadicalData& rad, const Derivation& x,
                        const Derivation& y);

}  // namespace qtorus

#endif  // QTORUS_SUITES_HPP
