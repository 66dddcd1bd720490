#include "qtorus/gl_realization.hpp"

#include <stdexcept>

#include "qtorus/linalg.hpp"

namespace qtorus {

CycMat kron(const CycMat& a, const CycMat& b) {
  CycMat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (long long i = 0; i < a.rows(); ++i)
    for (long long j = 0; j < a.cols(); ++j)
      for (long long p = 0; p < b.rows(); ++p)
        for (long long s = 0; s < b.cols(); ++s)
          out(i * b.rows() + p, j * b.cols() + s) = a(i, j) * b(p, s);
  return out;
}

std::pair<GlElement, GlElement> block_generators(long long k, const CycScalar& qi) {
  if (qi.unity_order() != std::optional<long long>(k))
    throw std::invalid_argument("block_generators: order(q_i) != k");
  CycMat x_odd = CycMat::Constant(k, k, CycScalar(0));
  CycMat x_even = CycMat::Constant(k, k, CycScalar(0));
  CycScalar p(1);
  for (long long i = 0; i < k; ++i) {
    x_odd(i, i) = p;
    p *= qi;
    x_even(i, (i + 1) % k) = CycScalar(1);
  }
  return {x_odd, x_even};
}

GlElement x_power(const QMatrix& q, const RadicalData& rad, const IntVec& n) {
  if (!q.is_normal_form()) throw std::invalid_argument("x_power: q not in normal form");
  CycMat out = CycMat::Constant(1, 1, CycScalar(1));
  for (long long b = 0; b < rad.z; ++b) {
    long long k = rad.invariants_k[b];
    auto [x_odd, x_even] = block_generators(k, q.entries()(2 * b + 1, 2 * b));
    long long e_odd = mod_pos(n[2 * b], k);
    long long e_even = mod_pos(n[2 * b + 1], k);
    CycMat factor = CycMat::Identity(k, k);
    for (long long t = 0; t < e_odd; ++t) factor = factor * x_odd;
    for (long long t = 0; t < e_even; ++t) factor = factor * x_even;
    out = kron(out, factor);
  }
  return out;
}

std::vector<std::pair<GlElement, IntVec>> loop_embed(const QMatrix& q,
                                                     const RadicalData& rad,
                                                     const TorusElement& a) {
  std::vector<std::pair<GlElement, IntVec>> out;
  for (const auto& [n, c] : a.terms()) out.emplace_back(c * x_power(q, rad, n), n);
  return out;
}

const CycMat& GradedGlModule::act(const IntVec& m, const RadicalData& rad) const {
  auto it = action.find(rad.reduce(m));
  if (it == action.end())
    throw std::invalid_argument("GradedGlModule::act: missing action matrix");
  return it->second;
}

long long GradedGlModule::component_dim(long long coset) const {
  long long out = 0;
  for (long long g : grading)
    if (g == coset) ++out;
  return out;
}

void GradedGlModule::validate(const RadicalData& rad) const {
  if (static_cast<long long>(grading.size()) != dim)
    throw std::invalid_argument("GradedGlModule: grading size != dim");
  if (static_cast<long long>(action.size()) != rad.gamma_order())
    throw std::invalid_argument("GradedGlModule: need one action matrix per coset");
  const CycMat& e = act(IntVec::Zero(rad.d), rad);
  for (long long i = 0; i < dim; ++i)
    for (long long j = 0; j < dim; ++j)
      if (!(e(i, j) == CycScalar(i == j ? 1 : 0)))
        throw std::invalid_argument("GradedGlModule: E does not act as identity");
  for (const auto& [deg, mat] : action) {
    if (mat.rows() != dim || mat.cols() != dim)
      throw std::invalid_argument("GradedGlModule: action matrix size mismatch");
    long long shift = rad.coset_index(deg);
    for (long long j = 0; j < dim; ++j) {
      IntVec target = rad.delta[shift] + rad.delta[grading[j]];
      long long expect = rad.coset_index(target);
      for (long long i = 0; i < dim; ++i)
        if (!(mat(i, j) == CycScalar(0)) && grading[i] != expect)
          throw std::invalid_argument("GradedGlModule: graded-module law violated");
    }
  }
}

GradedGlModule left_regular_module(const QMatrix& q, const RadicalData& rad) {
  GradedGlModule w;
  w.n_size = rad.n_value;
  w.dim = rad.gamma_order();  // N^2
  w.grading.resize(w.dim);
  for (long long c = 0; c < w.dim; ++c) w.grading[c] = c;
  // Basis vector c is X^{delta_c}; X^{delta'} X^{delta_c} =
  // sigma(delta', delta_c) X^{delta' + delta_c}, and X is Rad-periodic.
  for (long long cp = 0; cp < w.dim; ++cp) {
    const IntVec& dp = rad.delta[cp];
    CycMat mat = CycMat::Constant(w.dim, w.dim, CycScalar(0));
    for (long long c = 0; c < w.dim; ++c) {
      long long target = rad.coset_index(dp + rad.delta[c]);
      mat(target, c) = q.sigma(dp, rad.delta[c]);
    }
    w.action.emplace(dp, mat);
  }
  return w;
}

bool is_graded_irreducible(const GradedGlModule& w, const RadicalData& rad) {
  for (long long seed = 0; seed < w.dim; ++seed) {
    SpanTracker<CycMat> span(w.dim);
    CycVec v = CycVec::Constant(w.dim, CycScalar(0));
    v[seed] = CycScalar(1);
    span.add(v);
    std::vector<CycVec> frontier = {v};
    while (!frontier.empty() && span.dim() < w.dim) {
      std::vector<CycVec> next;
      for (const auto& [deg, mat] : w.action)
        for (const auto& f : frontier) {
          CycVec img = mat * f;
          if (span.add(img)) next.push_back(img);
        }
      frontier = std::move(next);
    }
    if (span.dim() < w.dim) return false;
  }
  return true;
}

}  // namespace qtorus
