#include "qtorus/derivation.hpp"

#include <stdexcept>

namespace qtorus {

void Derivation::add_inner(const IntVec& s, const CycScalar& c) {
  if (c.is_zero()) return;
  auto it = inner_.find(s);
  if (it == inner_.end()) {
    inner_.emplace(s, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) inner_.erase(it);
  }
}

void Derivation::add_witt(const IntVec& r, const CycVec& u) {
  bool zero = true;
  for (long long i = 0; i < u.size(); ++i)
    if (!u[i].is_zero()) zero = false;
  if (zero) return;
  auto it = witt_.find(r);
  if (it == witt_.end()) {
    witt_.emplace(r, u);
  } else {
    it->second += u;
    bool now_zero = true;
    for (long long i = 0; i < it->second.size(); ++i)
      if (!it->second[i].is_zero()) now_zero = false;
    if (now_zero) witt_.erase(it);
  }
}

Derivation operator+(const Derivation& a, const Derivation& b) {
  Derivation out = a;
  for (const auto& [s, c] : b.inner_) out.add_inner(s, c);
  for (const auto& [r, u] : b.witt_) out.add_witt(r, u);
  return out;
}

Derivation operator-(const Derivation& a, const Derivation& b) {
  Derivation out = a;
  for (const auto& [s, c] : b.inner_) out.add_inner(s, -c);
  for (const auto& [r, u] : b.witt_) out.add_witt(r, CycVec(-u));
  return out;
}

Derivation operator*(const CycScalar& c, const Derivation& a) {
  Derivation out;
  for (const auto& [s, coeff] : a.inner_) out.add_inner(s, c * coeff);
  for (const auto& [r, u] : a.witt_) out.add_witt(r, CycVec(c * u));
  return out;
}

Derivation ad_term(const IntVec& s, const CycScalar& c, const RadicalData& rad) {
  Derivation out;
  if (!rad.contains(s)) out.add_inner(s, c);
  return out;
}

Derivation witt_term(const CycVec& u, const IntVec& r, const RadicalData& rad) {
  if (!rad.contains(r)) throw std::invalid_argument("witt_term: degree not in Rad(f)");
  Derivation out;
  out.add_witt(r, u);
  return out;
}

CycScalar pair_us(const CycVec& u, const IntVec& s) {
  CycScalar out(0);
  for (long long i = 0; i < u.size(); ++i) out += u[i] * CycScalar(s[i]);
  return out;
}

Derivation der_bracket(const QMatrix& q, const RadicalData& rad, const Derivation& x,
                       const Derivation& y) {
  Derivation out;
  for (const auto& [s, cs] : x.inner())
    for (const auto& [sp, csp] : y.inner()) {
      IntVec sum = s + sp;
      if (rad.contains(sum)) continue;  // ad of a central element is zero
      out.add_inner(sum, cs * csp * (q.sigma(s, sp) - q.sigma(sp, s)));
    }
  for (const auto& [r, u] : x.witt())
    for (const auto& [s, cs] : y.inner())
      out.add_inner(r + s, cs * pair_us(u, s));
  for (const auto& [s, cs] : x.inner())
    for (const auto& [r, u] : y.witt())
      out.add_inner(r + s, -cs * pair_us(u, s));
  for (const auto& [r, u] : x.witt())
    for (const auto& [rp, up] : y.witt()) {
      CycVec w = pair_us(u, rp) * up - pair_us(up, r) * u;
      out.add_witt(r + rp, w);
    }
  return out;
}

Derivation z_act(const IntVec& r, const Derivation& x, const RadicalData& rad) {
  if (!rad.contains(r)) throw std::invalid_argument("z_act: degree not in Rad(f)");
  Derivation out;
  for (const auto& [s, c] : x.inner()) out.add_inner(s + r, c);
  for (const auto& [rp, u] : x.witt()) out.add_witt(rp + r, u);
  return out;
}

TorusElement der_apply(const QMatrix& q, const RadicalData& rad, const Derivation& x,
                       const TorusElement& a) {
  TorusElement out;
  for (const auto& [n, cn] : a.terms()) {
    for (const auto& [s, cs] : x.inner()) {
      CycScalar factor = cs * cn * (q.sigma(s, n) - q.sigma(n, s));
      out.add_term(s + n, factor);
    }
    for (const auto& [r, u] : x.witt()) out.add_term(n + r, cn * pair_us(u, n));
  }
  return out;
}

Derivation solenoidal_e(const IntVec& r, const RatVec& u, const RadicalData& rad) {
  return witt_term(to_cyc(u), r, rad);
}

RatVec window_generic_u(long long d, long long window) {
  for (long long c = 1;; ++c) {
    RatVec u(d);
    Rational p(1);
    for (long long i = 0; i < d; ++i) {
      u[i] = p;
      p = p * Rational(c);
    }
    bool good = true;
    BoxIterator box(d, window);
    IntVec r;
    while (box.next(r) && good) {
      if (r.isZero()) continue;
      Rational dot(0);
      for (long long i = 0; i < d; ++i) dot = dot + u[i] * Rational(r[i]);
      if (dot == Rational(0)) good = false;
    }
    if (good) return u;
  }
}

CycVec to_cyc(const RatVec& u) {
  CycVec out(u.size());
  for (long long i = 0; i < u.size(); ++i) out[i] = CycScalar(u[i]);
  return out;
}

}  // namespace qtorus
