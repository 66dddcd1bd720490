#include "qtorus/cover.hpp"

#include <stdexcept>

#include "qtorus/linalg.hpp"

namespace qtorus {

namespace {

long long binom(long long l, long long i) {
  long long out = 1;
  for (long long t = 0; t < i; ++t) out = out * (l - t) / (t + 1);
  return out;
}

bool graded_zero(const GradedVector& v) { return v.is_zero(); }

}  // namespace

void TensorVector::add_term(const IntVec& n, const GradedVector& v,
                            const RadicalData& rad) {
  if (rad.contains(n))
    throw std::invalid_argument("TensorVector: central left degree");
  if (v.is_zero()) return;
  auto it = terms_.find(n);
  if (it == terms_.end()) {
    terms_.emplace(n, v);
    return;
  }
  it->second = it->second + v;
  if (it->second.is_zero()) terms_.erase(it);
}

TensorVector operator+(const TensorVector& a, const TensorVector& b) {
  TensorVector out = a;
  for (const auto& [n, v] : b.terms_) {
    auto it = out.terms_.find(n);
    if (it == out.terms_.end()) {
      out.terms_.emplace(n, v);
    } else {
      it->second = it->second + v;
      if (it->second.is_zero()) out.terms_.erase(it);
    }
  }
  return out;
}

TensorVector operator-(const TensorVector& a, const TensorVector& b) {
  return a + CycScalar(-1) * b;
}

TensorVector operator*(const CycScalar& c, const TensorVector& a) {
  TensorVector out;
  if (c.is_zero()) return out;
  for (const auto& [n, v] : a.terms_) out.terms_.emplace(n, c * v);
  return out;
}

TensorVector central_shift(const ModuleDescriptor& desc, const IntVec& r,
                           const TensorVector& v) {
  if (!desc.rad.contains(r))
    throw std::invalid_argument("central_shift: degree not in Rad(f)");
  TensorVector out;
  for (const auto& [n, w] : v.terms()) out.add_term(n + r, w, desc.rad);
  return out;
}

TensorVector tensor_act(const ModuleDescriptor& desc, const Derivation& x,
                        const TensorVector& v) {
  TensorVector out;
  for (const auto& [n, w] : v.terms()) {
    // Leibniz: [x, t^n] tensor w + t^n tensor (x w).
    TorusElement lt = der_apply(desc.q, desc.rad, x, TorusElement::monomial(n));
    for (const auto& [m, c] : lt.terms()) out.add_term(m, c * w, desc.rad);
    out.add_term(n, vw_act(desc, x, w), desc.rad);
  }
  return out;
}

TensorVector tensor_act(const ModuleDescriptor& desc, const TorusElement& x,
                        const TensorVector& v) {
  TensorVector out;
  for (const auto& [s, c] : x.terms()) {
    if (desc.rad.contains(s)) {
      out = out + c * central_shift(desc, s, v);
      continue;
    }
    TorusElement mono = TorusElement::monomial(s, c);
    for (const auto& [n, w] : v.terms()) {
      TorusElement lt = qt_commutator(desc.q, mono, TorusElement::monomial(n));
      for (const auto& [m, cm] : lt.terms()) out.add_term(m, cm * w, desc.rad);
      out.add_term(n, vw_act(desc, mono, w), desc.rad);
    }
  }
  return out;
}

GradedVector pi_map(const ModuleDescriptor& desc, const TensorVector& v) {
  GradedVector out;
  for (const auto& [n, w] : v.terms())
    out = out + vw_act(desc, TorusElement::monomial(n), w);
  return out;
}

std::vector<IntVec> radical_points(const RadicalData& rad, long long bound) {
  std::vector<IntVec> out;
  for (const IntVec& g : box_points(rad.d, bound)) {
    long long norm = 0;
    for (long long i = 0; i < rad.d; ++i) norm += std::abs(g[i]);
    if (norm <= bound) out.push_back(rad.xi_basis * g);
  }
  return out;
}

namespace {

bool j_holds_upto(const ModuleDescriptor& desc, const TensorVector& v,
                  long long bound) {
  for (const IntVec& gamma : radical_points(desc.rad, bound)) {
    GradedVector sum;
    for (const auto& [n, w] : v.terms())
      sum = sum + vw_act(desc, TorusElement::monomial(n + gamma), w);
    if (!graded_zero(sum)) return false;
  }
  return true;
}

}  // namespace

JReport j_membership(const ModuleDescriptor& desc, const TensorVector& v,
                     long long gamma_window) {
  JReport rep;
  rep.member = j_holds_upto(desc, v, gamma_window);
  rep.stable = (rep.member == j_holds_upto(desc, v, gamma_window + 1));
  return rep;
}

GradedVector differentiator_apply(const ModuleDescriptor& desc, const IntVec& r,
                                  const IntVec& h, long long l, const RatVec& u,
                                  const GradedVector& v) {
  GradedVector out;
  for (long long i = 0; i <= l; ++i) {
    Derivation inner = solenoidal_e(IntVec(i * h), u, desc.rad);
    Derivation outer = solenoidal_e(IntVec(r - i * h), u, desc.rad);
    GradedVector term = vw_act(desc, outer, vw_act(desc, inner, v));
    CycScalar coeff((i % 2 == 0 ? 1 : -1) * binom(l, i));
    out = out + coeff * term;
  }
  return out;
}

std::optional<long long> minimal_annihilating_l(const ModuleDescriptor& desc,
                                                long long window, long long l_max,
                                                const RatVec& u) {
  std::vector<GradedVector> vecs;
  for (const IntVec& n : box_points(desc.rad.d, 1)) {
    long long csize = desc.comp_size(desc.rad.coset_index(n));
    for (long long a = 0; a < desc.v.dim; ++a)
      for (long long p = 0; p < csize; ++p) vecs.push_back(basis_vector(desc, n, a, p));
  }
  auto rs = radical_points(desc.rad, window);
  for (long long l = 2; l <= l_max; ++l) {
    bool kills = true;
    for (const IntVec& r : rs) {
      for (long long j = 0; j < desc.rad.d && kills; ++j) {
        IntVec h = desc.rad.xi_basis.col(j);
        for (const auto& v : vecs)
          if (!differentiator_apply(desc, r, h, l, u, v).is_zero()) {
            kills = false;
            break;
          }
      }
      if (!kills) break;
    }
    if (kills) return l;
  }
  return std::nullopt;
}

namespace {

struct TensorGen {
  IntVec m;
  long long a, p;
};

std::vector<TensorGen> tensor_generators(const ModuleDescriptor& desc,
                                         const IntVec& lambda, long long window) {
  std::vector<TensorGen> gens;
  for (const IntVec& m : box_points(desc.rad.d, window)) {
    if (desc.rad.contains(m)) continue;
    IntVec mdeg = lambda - m;
    long long csize = desc.comp_size(desc.rad.coset_index(mdeg));
    for (long long a = 0; a < desc.v.dim; ++a)
      for (long long p = 0; p < csize; ++p) gens.push_back({m, a, p});
  }
  return gens;
}

// Columns: basis of the windowed weight space of C_q' tensor M; rows:
// evaluation sum_n t^{n+gamma} v_n per windowed gamma.
CycMat evaluation_matrix(const ModuleDescriptor& desc, const IntVec& lambda,
                         const std::vector<TensorGen>& gens, long long gamma_window) {
  auto gammas = radical_points(desc.rad, gamma_window);
  std::vector<long long> row_offset;
  long long rows = 0;
  for (const IntVec& gamma : gammas) {
    row_offset.push_back(rows);
    rows += desc.weight_dim(lambda + gamma);
  }
  CycMat eval = CycMat::Constant(rows, static_cast<long long>(gens.size()), CycScalar(0));
  for (size_t c = 0; c < gens.size(); ++c) {
    GradedVector base = basis_vector(desc, IntVec(lambda - gens[c].m), gens[c].a, gens[c].p);
    for (size_t gi = 0; gi < gammas.size(); ++gi) {
      GradedVector img =
          vw_act(desc, TorusElement::monomial(gens[c].m + gammas[gi]), base);
      auto it = img.support().find(lambda + gammas[gi]);
      if (it == img.support().end()) continue;
      for (long long k = 0; k < it->second.size(); ++k)
        eval(row_offset[gi] + k, static_cast<long long>(c)) = it->second[k];
    }
  }
  return eval;
}

long long cover_rank(const ModuleDescriptor& desc, const IntVec& lambda,
                     long long window, long long gamma_window) {
  // The quotient by the windowed J is isomorphic to the image of the
  // evaluation map, so its dimension is the rank.
  auto gens = tensor_generators(desc, lambda, window);
  if (gens.empty()) return 0;
  return rank_of(evaluation_matrix(desc, lambda, gens, gamma_window));
}

}  // namespace

std::vector<TensorVector> j_kernel_basis(const ModuleDescriptor& desc,
                                         const IntVec& lambda, long long window,
                                         long long gamma_window) {
  auto gens = tensor_generators(desc, lambda, window);
  std::vector<TensorVector> out;
  if (gens.empty()) return out;
  CycMat ker = kernel_basis(evaluation_matrix(desc, lambda, gens, gamma_window));
  for (long long k = 0; k < ker.cols(); ++k) {
    TensorVector v;
    for (size_t c = 0; c < gens.size(); ++c) {
      if (ker(static_cast<long long>(c), k).is_zero()) continue;
      GradedVector base =
          basis_vector(desc, IntVec(lambda - gens[c].m), gens[c].a, gens[c].p);
      v.add_term(gens[c].m, ker(static_cast<long long>(c), k) * base, desc.rad);
    }
    out.push_back(v);
  }
  return out;
}

CoverDim cover_weight_space(const ModuleDescriptor& desc, const IntVec& lambda_degree,
                            long long window, long long gamma_window, long long l) {
  CoverDim out;
  out.dim = cover_rank(desc, lambda_degree, window, gamma_window);
  out.dim_prev = cover_rank(desc, lambda_degree, window - 1, gamma_window);
  out.stabilized = out.dim == out.dim_prev;
  // Spanning bound: nontrivial cosets x radical points of xi-norm <= l*d/2
  // x the largest weight-space dimension, plus the zero-weight boundary term.
  long long r_count = 0;
  for (const IntVec& g : box_points(desc.rad.d, l * desc.rad.d / 2)) {
    long long norm = 0;
    for (long long i = 0; i < desc.rad.d; ++i) norm += std::abs(g[i]);
    if (2 * norm <= l * desc.rad.d) ++r_count;
  }
  long long max_comp = 0;
  for (long long c = 0; c < desc.rad.gamma_order(); ++c)
    max_comp = std::max(max_comp, desc.comp_size(c));
  out.bound = (desc.rad.gamma_order() - 1) * r_count * desc.v.dim * max_comp;
  // M has a zero weight exactly when alpha is integral; the extra summand
  // applies when lambda sits over a nontrivial coset relative to that degree.
  bool alpha_integral = true;
  IntVec deg0(desc.rad.d);
  for (long long i = 0; i < desc.rad.d; ++i) {
    if (desc.alpha[i].is_rational() && desc.alpha[i].rational_value().is_integer())
      deg0[i] = -static_cast<long long>(desc.alpha[i].rational_value().num());
    else
      alpha_integral = false;
  }
  if (alpha_integral && !desc.rad.contains(IntVec(lambda_degree - deg0))) {
    out.boundary_term = true;
    out.bound += desc.weight_dim(deg0);
  }
  out.bound_ok = out.dim <= out.bound;
  return out;
}

RewriteIdentity rewrite_identity_check(const ModuleDescriptor& desc, const IntVec& n,
                              const IntVec& r, long long l, long long j,
                              const IntVec& w_deg, long long w_index,
                              const RatVec& u, long long gamma_window) {
  RewriteIdentity out;
  if (desc.rad.contains(n)) return out;
  CycVec uc = to_cyc(u);
  if (pair_us(uc, n).is_zero()) return out;
  // Weight of the slot vector must be nonzero so that v = e_0 w is invertible.
  CycScalar weight = pair_us(uc, w_deg);
  for (long long i = 0; i < desc.rad.d; ++i) weight += uc[i] * desc.alpha[i];
  if (weight.is_zero()) return out;
  out.applicable = true;

  long long csize = desc.comp_size(desc.rad.coset_index(w_deg));
  GradedVector w = basis_vector(desc, w_deg, w_index / csize, w_index % csize);
  Derivation e0 = solenoidal_e(IntVec::Zero(desc.rad.d), u, desc.rad);
  GradedVector v = vw_act(desc, e0, w);

  IntVec xi = desc.rad.xi_basis.col(j);
  TensorVector lhs;
  lhs.add_term(n + r, v, desc.rad);
  TensorVector rhs;
  for (long long i = 1; i <= l; ++i) {
    CycScalar coeff((i % 2 == 0 ? -1 : 1) * binom(l, i));  // -(-1)^i binom
    GradedVector ew = vw_act(desc, solenoidal_e(IntVec(i * xi), u, desc.rad), w);
    rhs.add_term(IntVec(n + r - i * xi), coeff * ew, desc.rad);
  }
  for (long long k = 0; k <= l; ++k) {
    CycScalar coeff((k % 2 == 0 ? -1 : 1) * binom(l, k));
    GradedVector ew = vw_act(desc, solenoidal_e(IntVec(r - k * xi), u, desc.rad), w);
    rhs.add_term(IntVec(n + k * xi), coeff * ew, desc.rad);
  }
  out.holds = j_membership(desc, lhs - rhs, gamma_window).member;
  return out;
}

}  // namespace qtorus
