#include "qtorus/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace qtorus {
namespace {

// Per-order tables: Phi_L, and x^k mod Phi_L for 0 <= k < max(L, 2*phi-1).
struct OrderTable {
  long long order = 1;
  long long phi = 1;
  std::vector<BigInt> phi_poly;                 // monic, ascending, degree phi
  std::vector<std::vector<Rational>> xpow;      // x^k mod Phi_L, each length phi
};

std::vector<BigInt> poly_mul_int(const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
  std::vector<BigInt> out(a.size() + b.size() - 1, BigInt(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

// Exact division of integer polynomials; remainder must vanish.
std::vector<BigInt> poly_div_int(std::vector<BigInt> a, const std::vector<BigInt>& b) {
  if (b.empty() || b.back() == 0) throw std::logic_error("poly_div_int: bad divisor");
  std::vector<BigInt> q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, BigInt(0));
  for (long long i = static_cast<long long>(a.size()) - 1;
       i >= static_cast<long long>(b.size()) - 1; --i) {
    if (a[i] == 0) continue;
    BigInt c = a[i] / b.back();
    if (c * b.back() != a[i]) throw std::logic_error("poly_div_int: not divisible");
    long long shift = i - (static_cast<long long>(b.size()) - 1);
    q[shift] = c;
    for (size_t j = 0; j < b.size(); ++j) a[shift + j] -= c * b[j];
  }
  for (const auto& r : a)
    if (r != 0) throw std::logic_error("poly_div_int: nonzero remainder");
  return q;
}

long long euler_phi_impl(long long n) {
  long long result = n;
  for (long long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

std::mutex g_table_mutex;
std::map<long long, OrderTable>& table_cache() {
  static std::map<long long, OrderTable> cache;
  return cache;
}

std::vector<BigInt> cyclotomic_poly_impl(long long n);

const std::vector<BigInt>& cached_phi_poly(long long n);

// Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d.
std::vector<BigInt> cyclotomic_poly_impl(long long n) {
  std::vector<BigInt> num(n + 1, BigInt(0));
  num[0] = -1;
  num[n] = 1;
  for (long long d = 1; d < n; ++d) {
    if (n % d == 0) num = poly_div_int(num, cached_phi_poly(d));
  }
  return num;
}

const OrderTable& order_table(long long n) {
  std::lock_guard<std::mutex> lock(g_table_mutex);
  auto it = table_cache().find(n);
  if (it != table_cache().end()) return it->second;

  OrderTable t;
  t.order = n;
  t.phi = euler_phi_impl(n);
  {
    // Build Phi_n without re-entering the lock.
    std::vector<BigInt> num(n + 1, BigInt(0));
    num[0] = -1;
    num[n] = 1;
    for (long long d = 1; d < n; ++d) {
      if (n % d != 0) continue;
      auto sub = table_cache().find(d);
      if (sub != table_cache().end()) {
        num = poly_div_int(num, sub->second.phi_poly);
      } else {
        num = poly_div_int(num, cyclotomic_poly_impl(d));
      }
    }
    t.phi_poly = std::move(num);
  }

  // x^k mod Phi_n, by iterated shift-and-reduce.
  long long count = std::max<long long>(n, 2 * t.phi);
  t.xpow.resize(count);
  std::vector<Rational> cur(t.phi, Rational(0));
  cur[0] = Rational(1);
  t.xpow[0] = cur;
  for (long long k = 1; k < count; ++k) {
    // Multiply by x.
    Rational top = cur[t.phi - 1];
    for (long long j = t.phi - 1; j > 0; --j) cur[j] = cur[j - 1];
    cur[0] = Rational(0);
    if (!top.is_zero()) {
      // x^phi = -(phi_poly[0] + ... + phi_poly[phi-1] x^{phi-1}) since monic.
      for (long long j = 0; j < t.phi; ++j) cur[j] -= top * Rational(t.phi_poly[j]);
    }
    t.xpow[k] = cur;
  }
  auto [pos, inserted] = table_cache().emplace(n, std::move(t));
  (void)inserted;
  return pos->second;
}

const std::vector<BigInt>& cached_phi_poly(long long n) {
  // Only called while holding the lock, on smaller orders; build recursively.
  auto it = table_cache().find(n);
  if (it != table_cache().end()) return it->second.phi_poly;
  static std::map<long long, std::vector<BigInt>> aux;
  auto a = aux.find(n);
  if (a != aux.end()) return a->second;
  auto [pos, ok] = aux.emplace(n, cyclotomic_poly_impl(n));
  (void)ok;
  return pos->second;
}

std::vector<Rational> reduce_mod_phi(const OrderTable& t, const std::vector<Rational>& raw) {
  std::vector<Rational> out(t.phi, Rational(0));
  for (size_t k = 0; k < raw.size(); ++k) {
    if (raw[k].is_zero()) continue;
    if (static_cast<long long>(k) < t.phi) {
      out[k] += raw[k];
    } else {
      const auto& row = t.xpow[k];
      for (long long j = 0; j < t.phi; ++j) out[j] += raw[k] * row[j];
    }
  }
  return out;
}

}  // namespace

long long CycScalar::phi(long long n) { return euler_phi_impl(n); }

const std::vector<BigInt>& CycScalar::cyclotomic_polynomial(long long n) {
  return order_table(n).phi_poly;
}

CycScalar CycScalar::root_of_unity(long long num, long long den) {
  if (den < 1) throw std::invalid_argument("root_of_unity: den must be >= 1");
  num = mod_pos(num, den);
  long long g = gcd_ll(num, den);
  if (g == 0) return CycScalar(1);  // num == 0: e^0 = 1
  num /= g;
  den /= g;
  const OrderTable& t = order_table(den);
  return CycScalar(den, t.xpow[num]);
}

bool CycScalar::is_zero() const {
  for (const auto& c : coeffs_)
    if (!c.is_zero()) return false;
  return true;
}

bool CycScalar::is_rational() const {
  for (size_t k = 1; k < coeffs_.size(); ++k)
    if (!coeffs_[k].is_zero()) return false;
  return true;
}

Rational CycScalar::rational_value() const {
  if (!is_rational()) throw std::domain_error("CycScalar: value is not rational");
  return coeffs_[0];
}

CycScalar CycScalar::promoted(long long m) const {
  if (m == order_) return *this;
  if (m % order_ != 0) throw std::invalid_argument("promoted: order must divide target");
  const OrderTable& t = order_table(m);
  long long stride = m / order_;
  std::vector<Rational> out(t.phi, Rational(0));
  for (size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k].is_zero()) continue;
    const auto& row = t.xpow[static_cast<long long>(k) * stride];
    for (long long j = 0; j < t.phi; ++j) out[j] += coeffs_[k] * row[j];
  }
  return CycScalar(m, std::move(out));
}

CycScalar operator+(const CycScalar& a, const CycScalar& b) {
  if (a.order_ == b.order_) {
    std::vector<Rational> out(a.coeffs_);
    for (size_t k = 0; k < out.size(); ++k) out[k] += b.coeffs_[k];
    return CycScalar(a.order_, std::move(out));
  }
  long long m = lcm_ll(a.order_, b.order_);
  return a.promoted(m) + b.promoted(m);
}

CycScalar operator-(const CycScalar& a, const CycScalar& b) { return a + (-b); }

CycScalar operator-(const CycScalar& a) {
  std::vector<Rational> out(a.coeffs_);
  for (auto& c : out) c = -c;
  return CycScalar(a.order_, std::move(out));
}

CycScalar operator*(const CycScalar& a, const CycScalar& b) {
  if (a.order_ != b.order_) {
    long long m = lcm_ll(a.order_, b.order_);
    return a.promoted(m) * b.promoted(m);
  }
  const OrderTable& t = order_table(a.order_);
  std::vector<Rational> raw(2 * t.phi - 1, Rational(0));
  for (long long i = 0; i < t.phi; ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (long long j = 0; j < t.phi; ++j) {
      if (b.coeffs_[j].is_zero()) continue;
      raw[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return CycScalar(a.order_, reduce_mod_phi(t, raw));
}

bool operator==(const CycScalar& a, const CycScalar& b) {
  if (a.order_ == b.order_) return a.coeffs_ == b.coeffs_;
  long long m = lcm_ll(a.order_, b.order_);
  return a.promoted(m).coeffs_ == b.promoted(m).coeffs_;
}

CycScalar CycScalar::inverse() const {
  if (is_zero()) throw std::domain_error("CycScalar: division by zero");
  const OrderTable& t = order_table(order_);
  // Extended Euclid over Q[x]: find s with s*a + t*Phi = gcd (a unit).
  using Poly = std::vector<Rational>;
  auto deg = [](const Poly& p) {
    for (long long i = static_cast<long long>(p.size()) - 1; i >= 0; --i)
      if (!p[i].is_zero()) return i;
    return static_cast<long long>(-1);
  };
  Poly r0(t.phi_poly.size());
  for (size_t i = 0; i < t.phi_poly.size(); ++i) r0[i] = Rational(t.phi_poly[i]);
  Poly r1 = coeffs_;
  Poly s0{Rational(0)}, s1{Rational(1)};
  while (deg(r1) > 0) {
    long long d0 = deg(r0), d1 = deg(r1);
    Poly q(d0 - d1 + 1, Rational(0));
    Poly rem = r0;
    for (long long i = d0; i >= d1; --i) {
      if (rem[i].is_zero()) continue;
      Rational c = rem[i] / r1[d1];
      q[i - d1] = c;
      for (long long j = 0; j <= d1; ++j) rem[i - d1 + j] -= c * r1[j];
    }
    // (r0, r1) <- (r1, rem), (s0, s1) <- (s1, s0 - q*s1)
    Poly snew(std::max(s0.size(), q.size() + s1.size()), Rational(0));
    for (size_t i = 0; i < s0.size(); ++i) snew[i] = s0[i];
    for (size_t i = 0; i < q.size(); ++i) {
      if (q[i].is_zero()) continue;
      for (size_t j = 0; j < s1.size(); ++j) snew[i + j] -= q[i] * s1[j];
    }
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(snew);
  }
  if (deg(r1) != 0) throw std::logic_error("CycScalar::inverse: gcd not a unit");
  Rational unit = r1[deg(r1)];
  std::vector<Rational> raw(s1.size(), Rational(0));
  for (size_t i = 0; i < s1.size(); ++i) raw[i] = s1[i] / unit;
  return CycScalar(order_, reduce_mod_phi(t, raw));
}

CycScalar CycScalar::pow(long long e) const {
  if (e < 0) return inverse().pow(-e);
  CycScalar result(1);
  CycScalar base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

std::optional<long long> CycScalar::unity_order() const {
  long long bound = lcm_ll(2, order_);
  CycScalar p = *this;
  for (long long m = 1; m <= bound; ++m) {
    if (p.is_one()) return m;
    p *= *this;
  }
  return std::nullopt;
}

std::optional<std::pair<long long, long long>> CycScalar::as_root_exponent() const {
  auto m = unity_order();
  if (!m) return std::nullopt;
  CycScalar z = zeta(*m);
  CycScalar p(1);
  for (long long e = 0; e < *m; ++e) {
    if (p == *this) return std::make_pair(e, *m);
    p *= z;
  }
  return std::nullopt;  // unreachable
}

std::pair<double, double> CycScalar::to_complex() const {
  double re = 0, im = 0;
  const double tau = 6.283185307179586476925286766559;
  for (size_t k = 0; k < coeffs_.size(); ++k) {
    double c = coeffs_[k].to_double();
    re += c * std::cos(tau * static_cast<double>(k) / static_cast<double>(order_));
    im += c * std::sin(tau * static_cast<double>(k) / static_cast<double>(order_));
  }
  return {re, im};
}

std::string CycScalar::str() const {
  if (is_rational()) return coeffs_[0].str();
  std::string s;
  bool first = true;
  for (size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k].is_zero()) continue;
    if (!first) s += " + ";
    first = false;
    s += coeffs_[k].str();
    if (k > 0) s += "*z" + std::to_string(order_) + "^" + std::to_string(k);
  }
  return s.empty() ? "0" : s;
}

}  // namespace qtorus
