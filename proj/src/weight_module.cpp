#include "qtorus/weight_module.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "qtorus/linalg.hpp"

namespace qtorus {

namespace {

long long ipow(long long base, long long e) {
  long long out = 1;
  while (e-- > 0) out *= base;
  return out;
}

// Permutation of tensor slots as a d^k x d^k 0/1 matrix: the vector at slot s
// moves to slot perm[s].
RatMat slot_perm_matrix(const std::vector<long long>& perm, long long d) {
  long long k = static_cast<long long>(perm.size());
  long long n = ipow(d, k);
  RatMat out = RatMat::Constant(n, n, Rational(0));
  std::vector<long long> digits(k);
  for (long long src = 0; src < n; ++src) {
    long long tmp = src;
    for (long long s = 0; s < k; ++s) {
      digits[s] = tmp % d;
      tmp /= d;
    }
    long long dst = 0;
    for (long long s = 0; s < k; ++s) dst += digits[s] * ipow(d, perm[s]);
    out(dst, src) = Rational(1);
  }
  return out;
}

int perm_sign(const std::vector<long long>& p) {
  int sign = 1;
  for (size_t i = 0; i < p.size(); ++i)
    for (size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) sign = -sign;
  return sign;
}

// All permutations of the slot set that move only within the given groups
// (cartesian product of symmetric groups); identity elsewhere.
std::vector<std::vector<long long>> group_perms(
    const std::vector<std::vector<long long>>& groups, long long k) {
  std::vector<std::vector<long long>> out;
  std::vector<long long> base(k);
  std::iota(base.begin(), base.end(), 0);
  out.push_back(base);
  for (const auto& g : groups) {
    std::vector<long long> arrangement = g;
    std::sort(arrangement.begin(), arrangement.end());
    std::vector<std::vector<long long>> next;
    do {
      for (const auto& prev : out) {
        std::vector<long long> p = prev;
        for (size_t i = 0; i < g.size(); ++i) p[g[i]] = prev[arrangement[i]];
        next.push_back(p);
      }
    } while (std::next_permutation(arrangement.begin(), arrangement.end()));
    out = std::move(next);
  }
  return out;
}

}  // namespace

CycMat GlDModule::act_mat(const CycMat& m) const {
  CycMat out = CycMat::Constant(dim, dim, CycScalar(0));
  for (long long i = 0; i < d; ++i)
    for (long long j = 0; j < d; ++j)
      if (!m(i, j).is_zero()) out += m(i, j) * act_e(i, j);
  return out;
}

long long weyl_dim(const std::vector<long long>& lambda, long long d) {
  std::vector<long long> lam(d, 0);
  for (size_t i = 0; i < lambda.size(); ++i) lam[i] = lambda[i];
  Rational out(1);
  for (long long i = 0; i < d; ++i)
    for (long long j = i + 1; j < d; ++j)
      out = out * Rational(lam[i] - lam[j] + j - i, j - i);
  if (out.den() != BigInt(1)) throw std::logic_error("weyl_dim: non-integer");
  return static_cast<long long>(out.num());
}

GlDModule young_module(const std::vector<long long>& lambda, long long d,
                       const CycScalar& b) {
  std::vector<long long> lam = lambda;
  while (!lam.empty() && lam.back() == 0) lam.pop_back();
  if (static_cast<long long>(lam.size()) > d)
    throw std::invalid_argument("young_module: more parts than d");
  for (size_t i = 0; i + 1 < lam.size(); ++i)
    if (lam[i] < lam[i + 1]) throw std::invalid_argument("young_module: not a partition");
  long long k = std::accumulate(lam.begin(), lam.end(), 0LL);

  GlDModule out;
  out.d = d;
  out.lambda = lam;
  out.b = b;

  if (k == 0) {
    out.dim = 1;
    out.action.assign(d * d, CycMat::Constant(1, 1, CycScalar(0)));
    CycScalar shift = b * CycScalar(Rational(1, d));
    for (long long i = 0; i < d; ++i) out.action[i * d + i](0, 0) = shift;
    return out;
  }

  // Slots numbered row by row in the Young diagram of lam.
  std::vector<std::vector<long long>> rows, cols;
  long long slot = 0;
  for (long long r = 0; r < static_cast<long long>(lam.size()); ++r) {
    std::vector<long long> row;
    for (long long c = 0; c < lam[r]; ++c) row.push_back(slot++);
    rows.push_back(row);
  }
  for (long long c = 0; c < lam[0]; ++c) {
    std::vector<long long> col;
    for (long long r = 0; r < static_cast<long long>(lam.size()); ++r)
      if (lam[r] > c) col.push_back(rows[r][c]);
    cols.push_back(col);
  }

  long long n = ipow(d, k);
  RatMat row_sym = RatMat::Constant(n, n, Rational(0));
  for (const auto& p : group_perms(rows, k)) row_sym += slot_perm_matrix(p, d);
  RatMat col_anti = RatMat::Constant(n, n, Rational(0));
  for (const auto& p : group_perms(cols, k))
    col_anti += Rational(perm_sign(p)) * slot_perm_matrix(p, d);
  RatMat symmetrizer = row_sym * col_anti;

  std::vector<long long> pivots;
  RatMat reduced = symmetrizer;
  long long m = rref_in_place(reduced, &pivots);
  if (m != weyl_dim(lam, d))
    throw std::logic_error("young_module: rank disagrees with the dimension formula");
  RatMat basis(n, m);
  for (long long c = 0; c < m; ++c) basis.col(c) = symmetrizer.col(pivots[c]);

  out.dim = m;
  out.action.assign(d * d, CycMat());
  CycScalar shift = (b - CycScalar(k)) * CycScalar(Rational(1, d));
  for (long long i = 0; i < d; ++i)
    for (long long j = 0; j < d; ++j) {
      // Derivation action of E_ij across tensor slots, restricted to basis.
      RatMat image(n, m);
      image.setConstant(Rational(0));
      for (long long c = 0; c < m; ++c) {
        for (long long idx = 0; idx < n; ++idx) {
          if (basis(idx, c) == Rational(0)) continue;
          long long tmp = idx;
          for (long long s = 0; s < k; ++s) {
            long long digit = tmp % d;
            if (digit == j)
              image(idx + (i - j) * ipow(d, s), c) += basis(idx, c);
            tmp /= d;
          }
        }
      }
      // Coordinates: solve basis * X = image.
      RatMat stacked(n, m + m);
      stacked << basis, image;
      long long r = rref_in_place(stacked);
      if (r != m) throw std::logic_error("young_module: E_ij image left the module");
      CycMat x = CycMat::Constant(m, m, CycScalar(0));
      for (long long a = 0; a < m; ++a)
        for (long long c = 0; c < m; ++c) {
          x(a, c) = CycScalar(stacked(a, m + c));
          if (i == j && a == c) x(a, c) += shift;
        }
      out.action[i * d + j] = x;
    }
  return out;
}

ModuleDescriptor::ModuleDescriptor(QMatrix q_in, GlDModule v_in, GradedGlModule w_in,
                                   CycVec alpha_in)
    : q(std::move(q_in)),
      rad(radical_basis(q)),
      v(std::move(v_in)),
      w(std::move(w_in)),
      alpha(std::move(alpha_in)) {
  if (v.d != rad.d) throw std::invalid_argument("ModuleDescriptor: V dimension vs d");
  if (alpha.size() != rad.d) throw std::invalid_argument("ModuleDescriptor: alpha size");
  w.validate(rad);  // includes E-acts-as-identity
  comp_basis.resize(rad.gamma_order());
  for (long long t = 0; t < w.dim; ++t) comp_basis[w.grading[t]].push_back(t);
}

long long ModuleDescriptor::weight_dim(const IntVec& n) const {
  return v.dim * comp_size(rad.coset_index(n));
}

void GradedVector::add_component(const IntVec& n, const CycVec& c) {
  bool zero = true;
  for (long long i = 0; i < c.size(); ++i)
    if (!c[i].is_zero()) zero = false;
  if (zero) return;
  auto it = support_.find(n);
  if (it == support_.end()) {
    support_.emplace(n, c);
    return;
  }
  it->second += c;
  bool now_zero = true;
  for (long long i = 0; i < it->second.size(); ++i)
    if (!it->second[i].is_zero()) now_zero = false;
  if (now_zero) support_.erase(it);
}

GradedVector operator+(const GradedVector& a, const GradedVector& b) {
  GradedVector out = a;
  for (const auto& [n, c] : b.support_) out.add_component(n, c);
  return out;
}

GradedVector operator-(const GradedVector& a, const GradedVector& b) {
  GradedVector out = a;
  for (const auto& [n, c] : b.support_) out.add_component(n, CycVec(-c));
  return out;
}

GradedVector operator*(const CycScalar& c, const GradedVector& a) {
  GradedVector out;
  for (const auto& [n, comp] : a.support_) out.add_component(n, CycVec(c * comp));
  return out;
}

GradedVector basis_vector(const ModuleDescriptor& desc, const IntVec& n, long long a,
                          long long tpos) {
  long long csize = desc.comp_size(desc.rad.coset_index(n));
  CycVec c = CycVec::Constant(desc.v.dim * csize, CycScalar(0));
  c[a * csize + tpos] = CycScalar(1);
  GradedVector out;
  out.add_component(n, c);
  return out;
}

namespace {

// One homogeneous t^s application on one component.
void act_monomial(const ModuleDescriptor& desc, const IntVec& s, const CycScalar& coeff,
                  const IntVec& n, const CycVec& comp, GradedVector& out) {
  long long c_src = desc.rad.coset_index(n);
  long long c_dst = desc.rad.coset_index(n + s);
  const auto& src = desc.comp_basis[c_src];
  const auto& dst = desc.comp_basis[c_dst];
  const CycMat& mat = desc.w.act(s, desc.rad);
  long long cs = static_cast<long long>(src.size());
  long long cd = static_cast<long long>(dst.size());
  CycVec res = CycVec::Constant(desc.v.dim * cd, CycScalar(0));
  for (long long a = 0; a < desc.v.dim; ++a)
    for (long long p = 0; p < cs; ++p) {
      const CycScalar& in = comp[a * cs + p];
      if (in.is_zero()) continue;
      for (long long pp = 0; pp < cd; ++pp) {
        const CycScalar& m = mat(dst[pp], src[p]);
        if (!m.is_zero()) res[a * cd + pp] += coeff * m * in;
      }
    }
  out.add_component(n + s, res);
}

// One D(u, r) application on one component.
void act_witt(const ModuleDescriptor& desc, const IntVec& r, const CycVec& u,
              const IntVec& n, const CycVec& comp, GradedVector& out) {
  long long csize = desc.comp_size(desc.rad.coset_index(n));
  CycScalar scalar = pair_us(u, n);
  for (long long i = 0; i < desc.rad.d; ++i) scalar += u[i] * desc.alpha[i];
  // Matrix term (r u^T) through V; fault 1 flips its sign (negative control).
  CycMat ru = CycMat::Constant(desc.rad.d, desc.rad.d, CycScalar(0));
  for (long long i = 0; i < desc.rad.d; ++i)
    for (long long j = 0; j < desc.rad.d; ++j) ru(i, j) = CycScalar(r[i]) * u[j];
  CycMat vmat = desc.v.act_mat(ru);
  if (desc.fault == 1) vmat = CycMat(-vmat);
  CycVec res = CycVec::Constant(comp.size(), CycScalar(0));
  for (long long a = 0; a < desc.v.dim; ++a)
    for (long long p = 0; p < csize; ++p) {
      const CycScalar& in = comp[a * csize + p];
      if (in.is_zero()) continue;
      res[a * csize + p] += scalar * in;
      for (long long ap = 0; ap < desc.v.dim; ++ap)
        if (!vmat(ap, a).is_zero()) res[ap * csize + p] += vmat(ap, a) * in;
    }
  out.add_component(n + r, res);
}

}  // namespace

GradedVector vw_act(const ModuleDescriptor& desc, const TorusElement& x,
                    const GradedVector& vec) {
  GradedVector out;
  for (const auto& [s, coeff] : x.terms())
    for (const auto& [n, comp] : vec.support()) act_monomial(desc, s, coeff, n, comp, out);
  return out;
}

GradedVector vw_act(const ModuleDescriptor& desc, const Derivation& x,
                    const GradedVector& vec) {
  GradedVector out;
  for (const auto& [s, coeff] : x.inner())
    for (const auto& [n, comp] : vec.support()) act_monomial(desc, s, coeff, n, comp, out);
  for (const auto& [r, u] : x.witt())
    for (const auto& [n, comp] : vec.support()) act_witt(desc, r, u, n, comp, out);
  return out;
}

namespace {

std::vector<Derivation> der_window_generators(const ModuleDescriptor& desc,
                                              long long window) {
  std::vector<Derivation> out;
  for (const IntVec& n : box_points(desc.rad.d, window)) {
    if (desc.rad.contains(n)) {
      for (long long i = 0; i < desc.rad.d; ++i) {
        CycVec u = CycVec::Constant(desc.rad.d, CycScalar(0));
        u[i] = CycScalar(1);
        out.push_back(witt_term(u, n, desc.rad));
      }
    } else {
      out.push_back(ad_term(n, CycScalar(1), desc.rad));
    }
  }
  return out;
}

std::vector<GradedVector> window_basis(const ModuleDescriptor& desc, long long window) {
  std::vector<GradedVector> out;
  for (const IntVec& n : box_points(desc.rad.d, window)) {
    long long csize = desc.comp_size(desc.rad.coset_index(n));
    for (long long a = 0; a < desc.v.dim; ++a)
      for (long long p = 0; p < csize; ++p) out.push_back(basis_vector(desc, n, a, p));
  }
  return out;
}

}  // namespace

RepReport verify_rep(const ModuleDescriptor& desc, long long window) {
  RepReport rep;
  auto gens = der_window_generators(desc, window);
  auto vecs = window_basis(desc, 1);
  auto fail = [&](const std::string& what, size_t i, size_t j, size_t vi) {
    rep.pass = false;
    std::ostringstream os;
    os << what << " generators " << i << "," << j << " vector " << vi;
    rep.counterexample = os.str();
  };
  for (size_t i = 0; i < gens.size() && rep.pass; ++i)
    for (size_t j = i; j < gens.size() && rep.pass; ++j) {
      Derivation br = der_bracket(desc.q, desc.rad, gens[i], gens[j]);
      for (size_t vi = 0; vi < vecs.size(); ++vi) {
        GradedVector lhs = vw_act(desc, br, vecs[vi]);
        GradedVector rhs = vw_act(desc, gens[i], vw_act(desc, gens[j], vecs[vi])) -
                           vw_act(desc, gens[j], vw_act(desc, gens[i], vecs[vi]));
        ++rep.checks;
        if (!(lhs == rhs)) {
          fail("representation law", i, j, vi);
          break;
        }
      }
    }
  // Center compatibility: for central r', D(u,r) t^{r'} - t^{r'} D(u,r)
  // acts as (u|r') t^{r+r'}; and central shifts commute with every t^s.
  std::vector<IntVec> central, all_degrees;
  for (const IntVec& n : box_points(desc.rad.d, window)) {
    all_degrees.push_back(n);
    if (desc.rad.contains(n)) central.push_back(n);
  }
  CycVec u = to_cyc(window_generic_u(desc.rad.d, window));
  for (const IntVec& rp : central) {
    TorusElement trp = TorusElement::monomial(rp);
    for (const IntVec& r : central) {
      if (!rep.pass) break;
      Derivation dur = witt_term(u, r, desc.rad);
      for (size_t vi = 0; vi < vecs.size(); ++vi) {
        GradedVector lhs = vw_act(desc, dur, vw_act(desc, trp, vecs[vi])) -
                           vw_act(desc, trp, vw_act(desc, dur, vecs[vi]));
        GradedVector rhs =
            pair_us(u, rp) * vw_act(desc, TorusElement::monomial(r + rp), vecs[vi]);
        ++rep.checks;
        if (!(lhs == rhs)) {
          fail("center compatibility (D,t)", 0, 0, vi);
          break;
        }
      }
    }
    for (const IntVec& s : all_degrees) {
      if (!rep.pass) break;
      TorusElement ts = TorusElement::monomial(s);
      for (size_t vi = 0; vi < vecs.size(); ++vi) {
        GradedVector lhs = vw_act(desc, ts, vw_act(desc, trp, vecs[vi]));
        GradedVector rhs = vw_act(desc, trp, vw_act(desc, ts, vecs[vi]));
        ++rep.checks;
        if (!(lhs == rhs)) {
          fail("center compatibility (t,t)", 0, 0, vi);
          break;
        }
      }
    }
  }
  return rep;
}

ProbeReport submodule_probe(const ModuleDescriptor& desc, const GradedVector& seed,
                            long long radius) {
  ProbeReport rep;
  rep.radius = radius;
  rep.margin = std::min(desc.q.level() * desc.rad.d, radius - 1);
  // Per-degree exact spans inside the window.
  std::map<IntVec, SpanTracker<CycMat>, LexLess> spans;
  auto tracker = [&](const IntVec& n) -> SpanTracker<CycMat>& {
    auto it = spans.find(n);
    if (it == spans.end())
      it = spans.emplace(n, SpanTracker<CycMat>(desc.weight_dim(n))).first;
    return it->second;
  };
  auto gens = der_window_generators(desc, 1);
  std::vector<GradedVector> frontier;
  auto absorb = [&](const GradedVector& vec) {
    // Split into homogeneous components and track what is new per degree.
    for (const auto& [n, comp] : vec.support()) {
      if (n.cwiseAbs().maxCoeff() > radius) continue;
      if (tracker(n).add(comp)) {
        GradedVector h;
        h.add_component(n, comp);
        frontier.push_back(h);
      }
    }
  };
  absorb(seed);
  while (!frontier.empty()) {
    std::vector<GradedVector> work = std::move(frontier);
    frontier.clear();
    for (const auto& vec : work)
      for (const Derivation& g : gens) absorb(vw_act(desc, g, vec));
  }
  long long interior = radius - rep.margin;
  for (const IntVec& n : box_points(desc.rad.d, interior)) {
    long long full = desc.weight_dim(n);
    long long got = spans.count(n) ? spans.at(n).dim() : 0;
    rep.interior.emplace(n, std::make_pair(got, full));
    if (got < full) rep.window_reducible = true;
  }
  return rep;
}

std::vector<GradedVector> probe_seeds(const ModuleDescriptor& desc, long long count,
                                      std::mt19937_64& rng) {
  std::vector<GradedVector> out;
  std::uniform_int_distribution<long long> coord(-1, 1);
  std::uniform_int_distribution<long long> val(1, 5);
  for (long long s = 0; s < count; ++s) {
    IntVec n(desc.rad.d);
    for (long long i = 0; i < desc.rad.d; ++i) n[i] = coord(rng);
    long long dim = desc.weight_dim(n);
    CycVec c(dim);
    for (long long i = 0; i < dim; ++i) c[i] = CycScalar(val(rng));
    GradedVector v;
    v.add_component(n, c);
    out.push_back(v);
  }
  // Structural candidate: the gradient line (alpha + n) x t^n for the
  // natural V over a one-dimensional W.
  if (desc.v.lambda == std::vector<long long>{1} && desc.w.dim == 1) {
    IntVec n = IntVec::Zero(desc.rad.d);
    CycVec c(desc.rad.d);
    bool zero = true;
    for (long long i = 0; i < desc.rad.d; ++i) {
      c[i] = desc.alpha[i] + CycScalar(n[i]);
      if (!c[i].is_zero()) zero = false;
    }
    if (zero) {
      n[0] = 1;
      for (long long i = 0; i < desc.rad.d; ++i) c[i] = desc.alpha[i] + CycScalar(n[i]);
    }
    GradedVector v;
    v.add_component(n, c);
    out.push_back(v);
  }
  // Structural candidate: the vector of degree -alpha for one-dimensional V
  // with integral alpha (killed by every D(u, r) when b = 0).
  if (desc.v.dim == 1 && desc.w.dim == 1) {
    bool integral = true;
    IntVec n(desc.rad.d);
    for (long long i = 0; i < desc.rad.d; ++i) {
      if (desc.alpha[i].is_rational() && desc.alpha[i].rational_value().den() == BigInt(1))
        n[i] = -static_cast<long long>(desc.alpha[i].rational_value().num());
      else
        integral = false;
    }
    if (integral) {
      CycVec c = CycVec::Constant(1, CycScalar(1));
      GradedVector v;
      v.add_component(n, c);
      out.push_back(v);
    }
  }
  return out;
}

}  // namespace qtorus
