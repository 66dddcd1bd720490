#ifndef QTORUS_DERIVATION_HPP
#define QTORUS_DERIVATION_HPP

#include <map>

#include "qtorus/quantum_torus.hpp"

namespace qtorus {

/// Element of Der(C_q): finite sum of inner terms ad(t^s) with s outside
/// Rad(f) and Witt-type terms D(u, r) with r inside Rad(f).  ad of a central
/// element is zero, so central inner degrees are never stored.
class Derivation {
 public:
  Derivation() = default;

  const std::map<IntVec, CycScalar, LexLess>& inner() const { return inner_; }
  const std::map<IntVec, CycVec, LexLess>& witt() const { return witt_; }
  bool is_zero() const { return inner_.empty() && witt_.empty(); }

  void add_inner(const IntVec& s, const CycScalar& c);
  void add_witt(const IntVec& r, const CycVec& u);

  friend Derivation operator+(const Derivation& a, const Derivation& b);
  friend Derivation operator-(const Derivation& a, const Derivation& b);
  friend Derivation operator*(const CycScalar& c, const Derivation& a);
  friend bool operator==(const Derivation& a, const Derivation& b) {
    return a.inner_ == b.inner_ && a.witt_ == b.witt_;
  }

 private:
  std::map<IntVec, CycScalar, LexLess> inner_;
  std::map<IntVec, CycVec, LexLess> witt_;
};

/// ad(t^s); the zero derivation when s is central.
Derivation ad_term(const IntVec& s, const CycScalar& c, const RadicalData& rad);

/// D(u, r); throws std::invalid_argument when r is not in Rad(f).
Derivation witt_term(const CycVec& u, const IntVec& r, const RadicalData& rad);

/// (u | s) = sum u_i s_i.
CycScalar pair_us(const CycVec& u, const IntVec& s);

/// The Lie bracket, by bilinear extension of:
///   [t^s, t^s'] = (sigma(s,s') - sigma(s',s)) t^{s+s'}  (dropped if central)
///   [D(u,r), t^s] = (u|s) t^{r+s}
///   [D(u,r), D(u',r')] = D((u|r')u' - (u'|r)u, r+r')
Derivation der_bracket(const QMatrix& q, const RadicalData& rad, const Derivation& x,
                       const Derivation& y);

/// Center action t^r . x : shifts every term's degree by r in Rad(f).
Derivation z_act(const IntVec& r, const Derivation& x, const RadicalData& rad);

/// The action on C_q itself: D(u,r) t^n = (u|n) t^{n+r}, ad(t^s) t^n = [t^s, t^n].
TorusElement der_apply(const QMatrix& q, const RadicalData& rad, const Derivation& x,
                       const TorusElement& a);

/// e_r = D(u, r) for the fixed vector u.
Derivation solenoidal_e(const IntVec& r, const RatVec& u, const RadicalData& rad);

/// Smallest u = (1, c, c^2, ..., c^{d-1}) with (u|r) != 0 for every nonzero
/// r with |r|_inf <= window, scanning c = 1, 2, ...
RatVec window_generic_u(long long d, long long window);

CycVec to_cyc(const RatVec& u);

}  // namespace qtorus

#endif  // QTORUS_DERIVATION_HPP
