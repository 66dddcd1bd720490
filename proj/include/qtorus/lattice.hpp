#ifndef QTORUS_LATTICE_HPP
#define QTORUS_LATTICE_HPP

#include <optional>
#include <vector>

#include <Eigen/Core>

#include "qtorus/rational.hpp"

namespace qtorus {

class QMatrix;  // quantum_torus.hpp

using IntMat = Eigen::Matrix<long long, Eigen::Dynamic, Eigen::Dynamic>;
using IntVec = Eigen::Matrix<long long, Eigen::Dynamic, 1>;

/// Lexicographic order on integer vectors, for use as a map key.
struct LexLess {
  bool operator()(const IntVec& a, const IntVec& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    for (Eigen::Index i = 0; i < a.size(); ++i) {
      if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
  }
};

struct SmithResult {
  IntMat s;  // diagonal, d_1 | d_2 | ..., nonnegative
  IntMat u;  // unimodular, u * a * v == s
  IntMat v;  // unimodular
};

/// Smith normal form by integer row/column reduction.
SmithResult smith_normal_form(const IntMat& a);

/// Column-style Hermite normal form of a full-rank square integer matrix:
/// returns lower-triangular H with positive diagonal, column span preserved,
/// off-diagonal row entries reduced into [0, H(i,i)).
IntMat hermite_normal_form(const IntMat& a);

long long det_lower_triangular(const IntMat& h);

/// The lattice Rad(f) together with the invariants of Gamma = Z^d / Rad(f).
struct RadicalData {
  long long d = 0;
  IntMat xi_basis;                      // columns generate Rad(f); canonical HNF
  std::vector<long long> invariants_k;  // k_1 >= k_2 >= ..., k_{i+1} | k_i
  long long z = 0;                      // number of symplectic blocks
  long long n_value = 1;                // N = prod k_i
  std::vector<IntVec> delta;            // coset representatives, delta[0] == 0

  long long gamma_order() const { return static_cast<long long>(delta.size()); }

  /// Membership of n in Rad(f).
  bool contains(const IntVec& n) const;
  /// Coordinates gamma with xi_basis * gamma == r; throws if r not in Rad(f).
  IntVec coords(const IntVec& r) const;
  /// Canonical coset representative of n (the one stored in delta).
  IntVec reduce(const IntVec& n) const;
  /// Index of the coset of n within delta.
  long long coset_index(const IntVec& n) const;
  /// Sum of |gamma_i| over the xi-basis coordinates of r in Rad(f).
  long long xi_norm(const IntVec& r) const;
};

/// Computes Rad(f) = { n : f(n, Z^d) = 1 } from a rational q-matrix, via the
/// Smith form of the exponent system A^T n == 0 (mod L).
RadicalData radical_basis(const QMatrix& q);

/// All coset representatives of Rad(f) in Z^d (delta of the RadicalData).
std::vector<IntVec> gamma_cosets(const RadicalData& rad);

long long xi_norm(const IntVec& r, const RadicalData& rad);

/// Brings q to the symplectic block normal form by an integer skew-symmetric
/// reduction of the exponent matrix: returns (q_std, P) with P unimodular and
/// f_{q_std}(n, m) == f_q(P n, P m) for all n, m.
std::pair<QMatrix, IntMat> normalize_q(const QMatrix& q);

/// True if f_{q_std}(n, m) == f_q(P n, P m) for all n, m with
/// |n|_inf, |m|_inf <= window.
bool check_f_conjugation(const QMatrix& q, const QMatrix& q_std, const IntMat& p,
                         long long window);

/// Iterates all integer vectors of dimension d with |n|_inf <= radius.
class BoxIterator {
 public:
  BoxIterator(long long d, long long radius);
  bool next(IntVec& out);  // false once exhausted

 private:
  long long d_;
  long long radius_;
  std::vector<long long> cur_;
  bool done_ = false;
  bool first_ = true;
};

std::vector<IntVec> box_points(long long d, long long radius);

}  // namespace qtorus

#endif  // QTORUS_LATTICE_HPP
