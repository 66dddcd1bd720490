#include "qtorus/suites.hpp"

#include <array>
#include <random>
#include <sstream>

#include "qtorus/gl_realization.hpp"
#include "qtorus/linalg.hpp"

namespace qtorus {

namespace {

constexpr long long kMaxFastDim = 8;
constexpr long long kMaxFastLevel = 16;

std::string vec_str(const IntVec& v) {
  std::ostringstream os;
  os << "(";
  for (long long i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ")";
  return os.str();
}

// ---------------------------------------------------------------------------
// Integer fast path for the jacobi sweep.  A homogeneous element is either a
// torus term c(zeta) t^deg with c in Z[x]/(x^L - 1), or a witt term D(u, deg)
// with integer u; bracket targets that land on a central torus degree vanish.

using Deg = std::array<long long, kMaxFastDim>;
using Poly = std::array<long long, kMaxFastLevel>;

struct FastCtx {
  long long d = 0, level = 1;
  std::array<std::array<long long, kMaxFastDim>, kMaxFastDim> expo{};  // A(i,j)
  std::vector<long long> phi;  // cyclotomic polynomial, ascending, monic
  int fault = 0;

  explicit FastCtx(const QMatrix& q, int fault_in) : fault(fault_in) {
    d = q.dim();
    level = q.level();
    for (long long i = 0; i < d; ++i)
      for (long long j = 0; j < d; ++j) expo[i][j] = q.exponents()(i, j);
    for (const BigInt& c : CycScalar::cyclotomic_polynomial(level))
      phi.push_back(static_cast<long long>(c));
  }

  long long sexp(const Deg& n, const Deg& m) const {
    long long e = 0;
    for (long long j = 1; j < d; ++j)
      for (long long i = 0; i < j; ++i) e += expo[j][i] * n[j] * m[i];
    e %= level;
    if (e < 0) e += level;
    // Deliberate non-bilinear corruption: a bilinear shift would still be a
    // cocycle, so the perturbation must depend on the argument order.
    if (fault) {
      for (long long i = 0; i < d; ++i) {
        if (n[i] == m[i]) continue;
        if (n[i] < m[i]) e = (e + 1) % level;
        break;
      }
    }
    return e;
  }

  bool central(const Deg& n) const {
    // n in Rad(f) iff the exponent form pairs n to 0 mod L against every m.
    for (long long j = 0; j < d; ++j) {
      long long e = 0;
      for (long long i = 0; i < d; ++i) e += expo[i][j] * n[i];
      if (e % level != 0) return false;
    }
    return true;
  }

  bool poly_is_zero(Poly p) const {
    const long long deg_phi = static_cast<long long>(phi.size()) - 1;
    for (long long i = level - 1; i >= deg_phi; --i) {
      long long c = p[i];
      if (c == 0) continue;
      p[i] = 0;
      for (long long j = 0; j < deg_phi; ++j) p[i - deg_phi + j] -= c * phi[j];
    }
    for (long long i = 0; i < level; ++i)
      if (p[i] != 0) return false;
    return true;
  }
};

struct FastElem {
  int kind = 0;  // 0 zero, 1 torus, 2 witt
  Deg deg{};
  Poly poly{};
  Deg u{};
};

long long pair_ud(const Deg& u, const Deg& g, long long d) {
  long long s = 0;
  for (long long i = 0; i < d; ++i) s += u[i] * g[i];
  return s;
}

FastElem fast_bracket_impl(const FastCtx& ctx, const FastElem& a, const FastElem& b) {
  FastElem out;
  if (a.kind == 0 || b.kind == 0) return out;
  for (long long i = 0; i < ctx.d; ++i) out.deg[i] = a.deg[i] + b.deg[i];
  if (a.kind == 1 && b.kind == 1) {
    if (ctx.central(out.deg)) return out;  // sigma difference cancels
    long long s1 = ctx.sexp(a.deg, b.deg), s2 = ctx.sexp(b.deg, a.deg);
    Poly prod{};
    for (long long i = 0; i < ctx.level; ++i) {
      if (a.poly[i] == 0) continue;
      for (long long j = 0; j < ctx.level; ++j) {
        if (b.poly[j] == 0) continue;
        long long v = a.poly[i] * b.poly[j];
        prod[(i + j + s1) % ctx.level] += v;
        prod[(i + j + s2) % ctx.level] -= v;
      }
    }
    out.kind = 1;
    out.poly = prod;
    return out;
  }
  if (a.kind == 2 && b.kind == 2) {
    long long c1 = pair_ud(a.u, b.deg, ctx.d), c2 = pair_ud(b.u, a.deg, ctx.d);
    bool nonzero = false;
    for (long long i = 0; i < ctx.d; ++i) {
      out.u[i] = c1 * b.u[i] - c2 * a.u[i];
      // Antisymmetric corruption of the witt-witt block: antisymmetry still
      // holds, the Jacobi identity does not.
      if (ctx.fault) out.u[i] += c1 * a.u[i] - c2 * b.u[i];
      nonzero = nonzero || out.u[i] != 0;
    }
    out.kind = nonzero ? 2 : 0;
    return out;
  }
  // Mixed: D(u, r) against a torus term; the target degree stays noncentral.
  const FastElem& w = a.kind == 2 ? a : b;
  const FastElem& t = a.kind == 2 ? b : a;
  long long sign = a.kind == 2 ? 1 : -1;
  long long c = sign * pair_ud(w.u, t.deg, ctx.d);
  // Scaling one structure-constant block keeps antisymmetry but breaks the
  // Jacobi identity on (D, D, torus) triples regardless of the level.
  if (ctx.fault) c *= 2;
  out.kind = 1;
  for (long long i = 0; i < ctx.level; ++i) out.poly[i] = c * t.poly[i];
  return out;
}

bool fast_is_zero(const FastCtx& ctx, const FastElem& a) {
  if (a.kind == 0) return true;
  if (a.kind == 2) {
    for (long long i = 0; i < ctx.d; ++i)
      if (a.u[i] != 0) return false;
    return true;
  }
  return ctx.poly_is_zero(a.poly);
}

// Sum of homogeneous elements at a common degree; kinds never mix because a
// degree is either central (witt payloads) or not (torus payloads).
FastElem fast_sum3(const FastElem& a, const FastElem& b, const FastElem& c) {
  FastElem out;
  for (const FastElem* e : {&a, &b, &c}) {
    if (e->kind == 0) continue;
    if (out.kind == 0) {
      out = *e;
      continue;
    }
    if (e->kind == 1)
      for (size_t i = 0; i < out.poly.size(); ++i) out.poly[i] += e->poly[i];
    else
      for (size_t i = 0; i < out.u.size(); ++i) out.u[i] += e->u[i];
  }
  return out;
}

std::vector<FastElem> fast_generators(const QMatrix& q, const RadicalData& rad,
                                      long long window) {
  std::vector<FastElem> gens;
  for (const IntVec& n : box_points(q.dim(), window)) {
    FastElem e;
    for (long long i = 0; i < q.dim(); ++i) e.deg[i] = n[i];
    if (rad.contains(n)) {
      for (long long i = 0; i < q.dim(); ++i) {
        FastElem w = e;
        w.kind = 2;
        w.u.fill(0);
        w.u[i] = 1;
        gens.push_back(w);
      }
    } else {
      e.kind = 1;
      e.poly.fill(0);
      e.poly[0] = 1;
      gens.push_back(e);
    }
  }
  return gens;
}

std::string fast_gen_str(const FastElem& e, long long d) {
  std::ostringstream os;
  os << (e.kind == 2 ? "D(e_i, " : "t^") << "(";
  for (long long i = 0; i < d; ++i) os << (i ? "," : "") << e.deg[i];
  os << ")";
  if (e.kind == 2) os << ")";
  return os.str();
}

SuiteResult jacobi_exact(const QMatrix& q, const RadicalData& rad, long long window);

}  // namespace

SuiteResult suite_jacobi(const QMatrix& q, long long window, int fault) {
  SuiteResult out;
  out.name = "jacobi";
  RadicalData rad = radical_basis(q);
  if (q.dim() > kMaxFastDim || q.level() > kMaxFastLevel) return jacobi_exact(q, rad, window);
  FastCtx ctx(q, fault);
  auto gens = fast_generators(q, rad, window);
  const long long n = static_cast<long long>(gens.size());
  // Antisymmetry over all ordered pairs.
  for (long long i = 0; i < n; ++i)
    for (long long j = 0; j < n; ++j) {
      FastElem ab = fast_bracket_impl(ctx, gens[i], gens[j]);
      FastElem ba = fast_bracket_impl(ctx, gens[j], gens[i]);
      FastElem zero;
      ++out.checks;
      if (!fast_is_zero(ctx, fast_sum3(ab, ba, zero))) {
        out.counterexample = "antisymmetry: " + fast_gen_str(gens[i], ctx.d) + ", " +
                             fast_gen_str(gens[j], ctx.d);
        return out;
      }
    }
  // Jacobi over unordered triples: with antisymmetry verified, the jacobiator
  // is alternating, so unordered triples cover every ordered one.
  for (long long i = 0; i < n; ++i)
    for (long long j = i; j < n; ++j) {
      FastElem bij = fast_bracket_impl(ctx, gens[i], gens[j]);
      for (long long k = j; k < n; ++k) {
        FastElem t1 = fast_bracket_impl(ctx, gens[i], fast_bracket_impl(ctx, gens[j], gens[k]));
        FastElem t2 = fast_bracket_impl(ctx, gens[j], fast_bracket_impl(ctx, gens[k], gens[i]));
        FastElem t3 = fast_bracket_impl(ctx, gens[k], bij);
        ++out.checks;
        if (!fast_is_zero(ctx, fast_sum3(t1, t2, t3))) {
          out.counterexample = "jacobi: " + fast_gen_str(gens[i], ctx.d) + ", " +
                               fast_gen_str(gens[j], ctx.d) + ", " +
                               fast_gen_str(gens[k], ctx.d);
          return out;
        }
      }
    }
  out.pass = true;
  return out;
}

namespace {

std::vector<Derivation> exact_generators(const QMatrix& q, const RadicalData& rad,
                                         long long window) {
  std::vector<Derivation> gens;
  for (const IntVec& n : box_points(q.dim(), window)) {
    if (rad.contains(n)) {
      for (long long i = 0; i < q.dim(); ++i) {
        CycVec u = CycVec::Constant(q.dim(), CycScalar(0));
        u[i] = CycScalar(1);
        gens.push_back(witt_term(u, n, rad));
      }
    } else {
      gens.push_back(ad_term(n, CycScalar(1), rad));
    }
  }
  return gens;
}

// Generic fallback for q outside the fast-path size limits.
SuiteResult jacobi_exact(const QMatrix& q, const RadicalData& rad, long long window) {
  SuiteResult out;
  out.name = "jacobi";
  auto gens = exact_generators(q, rad, window);
  const long long n = static_cast<long long>(gens.size());
  for (long long i = 0; i < n; ++i)
    for (long long j = i; j < n; ++j) {
      ++out.checks;
      if (!(der_bracket(q, rad, gens[i], gens[j]) + der_bracket(q, rad, gens[j], gens[i]))
               .is_zero()) {
        out.counterexample = "antisymmetry at pair " + std::to_string(i) + "," +
                             std::to_string(j);
        return out;
      }
      for (long long k = j; k < n; ++k) {
        ++out.checks;
        Derivation sum =
            der_bracket(q, rad, gens[i], der_bracket(q, rad, gens[j], gens[k])) +
            der_bracket(q, rad, gens[j], der_bracket(q, rad, gens[k], gens[i])) +
            der_bracket(q, rad, gens[k], der_bracket(q, rad, gens[i], gens[j]));
        if (!sum.is_zero()) {
          out.counterexample = "jacobi at triple " + std::to_string(i) + "," +
                               std::to_string(j) + "," + std::to_string(k);
          return out;
        }
      }
    }
  out.pass = true;
  return out;
}

}  // namespace

Derivation fast_bracket(const QMatrix& q, const RadicalData& rad, const Derivation& x,
                        const Derivation& y) {
  FastCtx ctx(q, 0);
  auto convert = [&](const Derivation& der) {
    FastElem e;
    if (!der.inner().empty()) {
      const auto& [deg, c] = *der.inner().begin();
      e.kind = 1;
      for (long long i = 0; i < ctx.d; ++i) e.deg[i] = deg[i];
      auto re = c.as_root_exponent();
      if (!re) throw std::invalid_argument("fast_bracket: non-root coefficient");
      e.poly.fill(0);
      e.poly[(re->first % re->second + re->second) % re->second * (ctx.level / re->second)] = 1;
    } else {
      const auto& [deg, u] = *der.witt().begin();
      e.kind = 2;
      for (long long i = 0; i < ctx.d; ++i) {
        e.deg[i] = deg[i];
        e.u[i] = static_cast<long long>(u[i].rational_value().num());
      }
    }
    return e;
  };
  FastElem res = fast_bracket_impl(ctx, convert(x), convert(y));
  Derivation out;
  if (res.kind == 1) {
    IntVec deg(ctx.d);
    for (long long i = 0; i < ctx.d; ++i) deg[i] = res.deg[i];
    CycScalar c(0);
    for (long long i = 0; i < ctx.level; ++i)
      if (res.poly[i] != 0)
        c += CycScalar(res.poly[i]) * CycScalar::zeta(ctx.level).pow(i);
    out.add_inner(deg, c);
  } else if (res.kind == 2) {
    IntVec deg(ctx.d);
    CycVec u(ctx.d);
    for (long long i = 0; i < ctx.d; ++i) {
      deg[i] = res.deg[i];
      u[i] = CycScalar(res.u[i]);
    }
    out.add_witt(deg, u);
  }
  return out;
}

SuiteResult suite_loop_hom(const QMatrix& q, long long window) {
  SuiteResult out;
  out.name = "loop-hom";
  RadicalData rad = radical_basis(q);
  const long long L = q.level();
  // Lattice periodicity of the cocycle exponent: sigma(n + xi, m) == sigma(n, m)
  // and sigma(n, m + xi) == sigma(n, m) mod L for every radical basis vector.
  // The exponent is bilinear, so this one check extends the coset sweep below
  // to arbitrary n, m.
  for (long long c = 0; c < rad.xi_basis.cols(); ++c) {
    IntVec xi = rad.xi_basis.col(c);
    for (long long j = 0; j < q.dim(); ++j) {
      IntVec ej = IntVec::Zero(q.dim());
      ej[j] = 1;
      ++out.checks;
      if (q.sigma_exponent(xi, ej) % L != 0 || q.sigma_exponent(ej, xi) % L != 0) {
        out.counterexample = "cocycle exponent not Rad-periodic at xi column " +
                             std::to_string(c);
        return out;
      }
    }
  }
  // X^n X^m = sigma(n, m) X^{n+m} over all coset representative pairs.
  std::vector<CycMat> xs;
  xs.reserve(rad.delta.size());
  for (const IntVec& dlt : rad.delta) xs.push_back(x_power(q, rad, dlt));
  for (size_t i = 0; i < rad.delta.size(); ++i)
    for (size_t j = 0; j < rad.delta.size(); ++j) {
      CycMat lhs = xs[i] * xs[j];
      CycMat rhs = q.sigma(rad.delta[i], rad.delta[j]) *
                   x_power(q, rad, IntVec(rad.delta[i] + rad.delta[j]));
      ++out.checks;
      for (long long r = 0; r < lhs.rows(); ++r)
        for (long long cc = 0; cc < lhs.cols(); ++cc)
          if (!(lhs(r, cc) == rhs(r, cc))) {
            out.counterexample = "product law at " + vec_str(rad.delta[i]) + ", " +
                                 vec_str(rad.delta[j]);
            return out;
          }
    }
  // Exponent-level sweep over the full window against representatives, plus
  // X^r = E on central window points.
  for (const IntVec& n : box_points(q.dim(), window)) {
    IntVec nbar = rad.reduce(n);
    for (const IntVec& m : rad.delta) {
      ++out.checks;
      if (q.sigma_exponent(n, m) != q.sigma_exponent(nbar, m) ||
          q.sigma_exponent(m, n) != q.sigma_exponent(m, nbar)) {
        out.counterexample = "cocycle exponent differs across Rad at " + vec_str(n);
        return out;
      }
    }
    if (!rad.contains(n)) continue;
    CycMat xr = x_power(q, rad, n);
    ++out.checks;
    for (long long r = 0; r < xr.rows(); ++r)
      for (long long cc = 0; cc < xr.cols(); ++cc)
        if (!(xr(r, cc) == CycScalar(r == cc ? 1 : 0))) {
          out.counterexample = "X^r != E at central " + vec_str(n);
          return out;
        }
  }
  out.pass = true;
  return out;
}

SuiteResult suite_rep(const ModuleDescriptor& desc, long long window) {
  SuiteResult out;
  out.name = "rep";
  RepReport rep = verify_rep(desc, window);
  out.pass = rep.pass;
  out.checks = rep.checks;
  out.counterexample = rep.counterexample;
  return out;
}

namespace {

GradedVector random_m_vector(const ModuleDescriptor& desc, std::mt19937_64& rng) {
  std::uniform_int_distribution<long long> coord(-1, 1);
  std::uniform_int_distribution<long long> val(-3, 3);
  GradedVector out;
  for (int t = 0; t < 2; ++t) {
    IntVec n(desc.rad.d);
    for (long long i = 0; i < desc.rad.d; ++i) n[i] = coord(rng);
    long long dim = desc.weight_dim(n);
    CycVec c(dim);
    for (long long i = 0; i < dim; ++i) c[i] = CycScalar(val(rng));
    out.add_component(n, c);
  }
  return out;
}

// Nonempty only when noncentral degrees exist (C_q' != 0).
TensorVector random_tensor(const ModuleDescriptor& desc, std::mt19937_64& rng) {
  std::uniform_int_distribution<long long> coord(-1, 1);
  TensorVector out;
  for (int t = 0; t < 2; ++t) {
    IntVec n(desc.rad.d);
    bool found = false;
    for (int tries = 0; tries < 64 && !found; ++tries) {
      for (long long i = 0; i < desc.rad.d; ++i) n[i] = coord(rng);
      found = !desc.rad.contains(n);
    }
    if (!found) return out;
    out.add_term(n, random_m_vector(desc, rng), desc.rad);
  }
  return out;
}

}  // namespace

SuiteResult suite_cover(const ModuleDescriptor& desc, const CoverSuiteParams& params,
                        unsigned long long seed) {
  SuiteResult out;
  out.name = "cover";
  std::mt19937_64 rng(seed);
  const long long d = desc.rad.d;
  RatVec u = window_generic_u(d, 2 * params.identity_radius + 2);
  const bool torus_trivial = desc.rad.gamma_order() == 1;  // C_q' = 0

  if (!torus_trivial) {
    CycVec uc = to_cyc(u);
    for (long long s = 0; s < params.samples; ++s) {
      TensorVector v = random_tensor(desc, rng);
      // Center compatibility: D(u,m) t^r - t^r D(u,m) = (u|r) t^{m+r}.
      for (const IntVec& m : radical_points(desc.rad, 1))
        for (const IntVec& r : radical_points(desc.rad, 1)) {
          Derivation dum = witt_term(uc, m, desc.rad);
          TensorVector lhs = tensor_act(desc, dum, central_shift(desc, r, v)) -
                             central_shift(desc, r, tensor_act(desc, dum, v));
          TensorVector rhs = pair_us(uc, r) * central_shift(desc, IntVec(m + r), v);
          ++out.checks;
          if (!(lhs == rhs)) {
            out.counterexample = "center compatibility failed (sample " +
                                 std::to_string(s) + ")";
            return out;
          }
        }
      // Projection is a homomorphism for torus and derivation generators.
      for (const IntVec& r : radical_points(desc.rad, 1)) {
        Derivation dur = witt_term(uc, r, desc.rad);
        ++out.checks;
        if (!(pi_map(desc, tensor_act(desc, dur, v)) == vw_act(desc, dur, pi_map(desc, v)))) {
          out.counterexample = "projection not equivariant for D(u,r), sample " +
                               std::to_string(s);
          return out;
        }
      }
      IntVec e1 = IntVec::Zero(d);
      e1[0] = 1;
      if (!desc.rad.contains(e1)) {
        Derivation ad1 = ad_term(e1, CycScalar(1), desc.rad);
        ++out.checks;
        if (!(pi_map(desc, tensor_act(desc, ad1, v)) == vw_act(desc, ad1, pi_map(desc, v)))) {
          out.counterexample = "projection not equivariant for ad, sample " +
                               std::to_string(s);
          return out;
        }
      }
    }
    // Ideal closure: windowed kernel elements stay in the kernel under the
    // action (verified with a shrunken gamma window after the degree shift).
    IntVec lambda0 = IntVec::Zero(d);
    auto kernel = j_kernel_basis(desc, lambda0, 2, params.gamma_window);
    long long tested = 0;
    for (const TensorVector& eta : kernel) {
      if (++tested > params.samples) break;
      for (const IntVec& rp : radical_points(desc.rad, 1)) {
        ++out.checks;
        if (!j_membership(desc, central_shift(desc, rp, eta), params.gamma_window - 1)
                 .member ||
            !j_membership(desc, tensor_act(desc, witt_term(to_cyc(u), rp, desc.rad), eta),
                          params.gamma_window - 1)
                 .member) {
          out.counterexample = "kernel not closed under the central/derivation action";
          return out;
        }
      }
      IntVec e1 = IntVec::Zero(d);
      e1[0] = 1;
      if (!desc.rad.contains(e1)) {
        ++out.checks;
        if (!j_membership(desc, tensor_act(desc, ad_term(e1, CycScalar(1), desc.rad), eta),
                          params.gamma_window - 1)
                 .member) {
          out.counterexample = "kernel not closed under the torus action";
          return out;
        }
      }
    }
  }

  // Minimal differentiator order.
  auto l_min = minimal_annihilating_l(desc, 2, params.l_max, u);
  ++out.checks;
  if (!l_min) {
    out.counterexample = "no differentiator order <= " + std::to_string(params.l_max) +
                         " annihilates the module";
    return out;
  }

  // Rewriting identity on all admissible inputs in the window.
  if (!torus_trivial) {
    for (const IntVec& n : box_points(d, params.identity_radius)) {
      if (desc.rad.contains(n)) continue;
      for (const IntVec& r : radical_points(desc.rad, 1))
        for (long long j = 0; j < d; ++j) {
          RewriteIdentity res = rewrite_identity_check(desc, n, r, *l_min, j, IntVec::Zero(d), 0,
                                              u, params.gamma_window);
          if (!res.applicable) continue;
          ++out.checks;
          if (!res.holds) {
            out.counterexample = "rewriting identity failed at n=" + vec_str(n) +
                                 " r=" + vec_str(r) + " j=" + std::to_string(j);
            return out;
          }
        }
    }
  }

  // Cover weight-space dimensions: stabilization across consecutive windows
  // and the spanning-set cardinality bound.
  std::vector<IntVec> lambdas;
  lambdas.push_back(IntVec::Zero(d));
  IntVec l1 = IntVec::Zero(d);
  l1[0] = 1;
  lambdas.push_back(l1);
  for (const IntVec& lambda : lambdas) {
    CoverDim cd = cover_weight_space(desc, lambda, params.cover_window,
                                     params.gamma_window, *l_min);
    ++out.checks;
    if (torus_trivial && cd.dim != 0) {
      out.counterexample = "cover of the centerless case not zero at " + vec_str(lambda);
      return out;
    }
    if (!cd.stabilized || !cd.bound_ok) {
      out.counterexample = "cover dimension unstable or above bound at " + vec_str(lambda);
      return out;
    }
  }
  out.pass = true;
  return out;
}

}  // namespace qtorus
