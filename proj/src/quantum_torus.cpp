#include "qtorus/quantum_torus.hpp"

#include <stdexcept>

namespace qtorus {

QMatrix::QMatrix(CycMat entries) : entries_(std::move(entries)) {
  if (entries_.rows() != entries_.cols())
    throw std::invalid_argument("QMatrix: square matrix required");
  d_ = entries_.rows();
  level_ = 1;
  for (long long i = 0; i < d_; ++i)
    for (long long j = 0; j < d_; ++j) {
      auto ord = entries_(i, j).unity_order();
      if (!ord) throw std::invalid_argument("QMatrix: entry is not a root of unity");
      level_ = lcm_ll(level_, *ord);
    }
  for (long long i = 0; i < d_; ++i) {
    if (!entries_(i, i).is_one()) throw std::invalid_argument("QMatrix: q_ii must be 1");
    for (long long j = 0; j < d_; ++j)
      if (!(entries_(i, j) * entries_(j, i)).is_one())
        throw std::invalid_argument("QMatrix: q_ij * q_ji must be 1");
  }
  zeta_ = CycScalar::zeta(level_);
  zeta_pow_.resize(level_);
  CycScalar p(1);
  for (long long k = 0; k < level_; ++k) {
    zeta_pow_[k] = p;
    p *= zeta_;
  }
  expo_.resize(d_, d_);
  for (long long i = 0; i < d_; ++i)
    for (long long j = 0; j < d_; ++j) {
      auto exp_pair = entries_(i, j).as_root_exponent();
      expo_(i, j) = mod_pos(exp_pair->first * (level_ / exp_pair->second), level_);
    }
}

QMatrix QMatrix::standard(long long d, const std::vector<long long>& ks) {
  CycMat entries(d, d);
  for (long long i = 0; i < d; ++i)
    for (long long j = 0; j < d; ++j) entries(i, j) = CycScalar(1);
  for (size_t b = 0; b < ks.size(); ++b) {
    long long i = 2 * static_cast<long long>(b);
    if (i + 1 >= d) throw std::invalid_argument("QMatrix::standard: too many blocks");
    entries(i + 1, i) = CycScalar::zeta(ks[b]);
    entries(i, i + 1) = CycScalar::zeta(ks[b]).inverse();
  }
  return QMatrix(entries);
}

long long QMatrix::sigma_exponent(const IntVec& n, const IntVec& m) const {
  long long e = 0;
  for (long long j = 1; j < d_; ++j) {
    if (n[j] == 0) continue;
    long long row = 0;
    for (long long i = 0; i < j; ++i) row += expo_(j, i) * mod_pos(m[i], level_);
    e += mod_pos(n[j], level_) * mod_pos(row, level_);
  }
  return mod_pos(e, level_);
}

long long QMatrix::f_exponent(const IntVec& n, const IntVec& m) const {
  long long e = 0;
  for (long long j = 0; j < d_; ++j) {
    if (n[j] == 0) continue;
    long long row = 0;
    for (long long i = 0; i < d_; ++i) row += expo_(j, i) * mod_pos(m[i], level_);
    e += mod_pos(n[j], level_) * mod_pos(row, level_);
  }
  return mod_pos(e, level_);
}

CycScalar QMatrix::sigma(const IntVec& n, const IntVec& m) const {
  return zeta_pow_[sigma_exponent(n, m)];
}

CycScalar QMatrix::f_form(const IntVec& n, const IntVec& m) const {
  return zeta_pow_[f_exponent(n, m)];
}

bool QMatrix::is_normal_form() const {
  long long prev_k = 0;
  long long blocks_end = 0;
  for (long long i = 0; i + 1 < d_; i += 2) {
    long long e = expo_(i + 1, i);
    if (e == 0) break;
    long long k = level_ / gcd_ll(e, level_);
    if (prev_k != 0 && (k > prev_k || prev_k % k != 0)) return false;
    prev_k = k;
    blocks_end = i + 2;
  }
  for (long long i = 0; i < d_; ++i)
    for (long long j = 0; j < d_; ++j) {
      bool in_block = i < blocks_end && j < blocks_end && (i / 2 == j / 2) && i != j;
      if (!in_block && expo_(i, j) != 0) return false;
    }
  return true;
}

TorusElement TorusElement::monomial(const IntVec& degree, CycScalar coeff) {
  TorusElement e;
  e.add_term(degree, coeff);
  return e;
}

long long TorusElement::dim() const {
  return terms_.empty() ? -1 : terms_.begin()->first.size();
}

void TorusElement::add_term(const IntVec& degree, const CycScalar& coeff) {
  if (coeff.is_zero()) return;
  auto it = terms_.find(degree);
  if (it == terms_.end()) {
    terms_.emplace(degree, coeff);
  } else {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

TorusElement operator+(const TorusElement& a, const TorusElement& b) {
  TorusElement out = a;
  for (const auto& [deg, c] : b.terms_) out.add_term(deg, c);
  return out;
}

TorusElement operator-(const TorusElement& a, const TorusElement& b) {
  TorusElement out = a;
  for (const auto& [deg, c] : b.terms_) out.add_term(deg, -c);
  return out;
}

TorusElement operator*(const CycScalar& c, const TorusElement& a) {
  TorusElement out;
  for (const auto& [deg, coeff] : a.terms_) out.add_term(deg, c * coeff);
  return out;
}

TorusElement qt_mul(const QMatrix& q, const TorusElement& a, const TorusElement& b) {
  TorusElement out;
  for (const auto& [n, cn] : a.terms())
    for (const auto& [m, cm] : b.terms())
      out.add_term(n + m, cn * cm * q.sigma(n, m));
  return out;
}

TorusElement qt_commutator(const QMatrix& q, const TorusElement& a, const TorusElement& b) {
  return qt_mul(q, a, b) - qt_mul(q, b, a);
}

bool is_central(const TorusElement& a, const RadicalData& rad) {
  for (const auto& [deg, c] : a.terms())
    if (!rad.contains(deg)) return false;
  return true;
}

bool in_derived_subalgebra(const TorusElement& a, const RadicalData& rad) {
  for (const auto& [deg, c] : a.terms())
    if (rad.contains(deg)) return false;
  return true;
}

}  // namespace qtorus
