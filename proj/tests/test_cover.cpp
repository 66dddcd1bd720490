#include "doctest.h"

#include <random>

#include "qtorus/cover.hpp"
#include "qtorus/linalg.hpp"

using namespace qtorus;

namespace {

IntVec vec2(long long a, long long b) {
  IntVec v(2);
  v << a, b;
  return v;
}

ModuleDescriptor make_desc(long long d, std::vector<long long> ks,
                           std::vector<long long> lambda, long long b,
                           std::vector<Rational> alpha) {
  QMatrix q = QMatrix::standard(d, ks);
  RadicalData rad = radical_basis(q);
  CycVec a(d);
  for (long long i = 0; i < d; ++i) a[i] = CycScalar(alpha[static_cast<size_t>(i)]);
  return ModuleDescriptor(q, young_module(lambda, d, CycScalar(b)),
                          left_regular_module(q, rad), a);
}

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

TensorVector random_tensor(const ModuleDescriptor& desc, std::mt19937_64& rng) {
  std::uniform_int_distribution<long long> coord(-1, 1);
  TensorVector out;
  for (int t = 0; t < 2; ++t) {
    IntVec n(desc.rad.d);
    do {
      for (long long i = 0; i < desc.rad.d; ++i) n[i] = coord(rng);
    } while (desc.rad.contains(n));
    out.add_term(n, random_m_vector(desc, rng), desc.rad);
  }
  return out;
}

}  // namespace

TEST_CASE("tensor action basics") {
  ModuleDescriptor desc = make_desc(2, {2}, {1}, 1, {Rational(1, 2), Rational(1, 3)});
  std::mt19937_64 rng(3);
  TensorVector v = random_tensor(desc, rng);
  CHECK(central_shift(desc, IntVec::Zero(2), v) == v);
  CHECK_THROWS_AS(central_shift(desc, vec2(1, 0), v), std::invalid_argument);
  // Leibniz on a homogeneous term: D(u,m)(t^n x w) = (u|n) t^{n+m} x w +
  // t^n x D(u,m) w.
  CycVec u(2);
  u << CycScalar(1), CycScalar(3);
  IntVec m = vec2(2, 0);  // xi_1
  Derivation dum = witt_term(u, m, desc.rad);
  GradedVector w = basis_vector(desc, vec2(0, 1), 0, 0);
  TensorVector tv;
  tv.add_term(vec2(1, 0), w, desc.rad);
  TensorVector got = tensor_act(desc, dum, tv);
  TensorVector expect;
  expect.add_term(vec2(3, 0), CycScalar(1) * w, desc.rad);  // (u | (1,0)) = 1
  expect.add_term(vec2(1, 0), vw_act(desc, dum, w), desc.rad);
  CHECK(got == expect);
}

TEST_CASE("compatibility identities on the tensor module") {
  ModuleDescriptor desc = make_desc(2, {2}, {1}, 1, {Rational(1, 2), Rational(1, 3)});
  std::mt19937_64 rng(5);
  CycVec u(2);
  u << CycScalar(1), CycScalar(4);
  for (int rep = 0; rep < 20; ++rep) {
    TensorVector v = random_tensor(desc, rng);
    for (const IntVec& m : radical_points(desc.rad, 1))
      for (const IntVec& r : radical_points(desc.rad, 1)) {
        // D(u,m) t^r v - t^r D(u,m) v = (u|r) t^{m+r} v.
        Derivation dum = witt_term(u, m, desc.rad);
        TensorVector lhs = tensor_act(desc, dum, central_shift(desc, r, v)) -
                           central_shift(desc, r, tensor_act(desc, dum, v));
        TensorVector rhs = pair_us(u, r) * central_shift(desc, IntVec(m + r), v);
        CHECK(lhs == rhs);
        // t^s t^r v = t^r t^s v.
        TorusElement ts = TorusElement::monomial(vec2(1, 0));
        CHECK(tensor_act(desc, ts, central_shift(desc, r, v)) ==
              central_shift(desc, r, tensor_act(desc, ts, v)));
      }
  }
}

TEST_CASE("pi is a module homomorphism") {
  ModuleDescriptor desc = make_desc(2, {2}, {1}, 1, {Rational(1, 2), Rational(1, 3)});
  std::mt19937_64 rng(7);
  CycVec u(2);
  u << CycScalar(1), CycScalar(4);
  for (int rep = 0; rep < 20; ++rep) {
    TensorVector v = random_tensor(desc, rng);
    for (const IntVec& r : radical_points(desc.rad, 1)) {
      Derivation dur = witt_term(u, r, desc.rad);
      CHECK(pi_map(desc, tensor_act(desc, dur, v)) ==
            vw_act(desc, dur, pi_map(desc, v)));
    }
    Derivation ad1 = ad_term(vec2(1, 0), CycScalar(1), desc.rad);
    CHECK(pi_map(desc, tensor_act(desc, ad1, v)) == vw_act(desc, ad1, pi_map(desc, v)));
  }
}

TEST_CASE("j membership basics") {
  ModuleDescriptor desc = make_desc(2, {2}, {1}, 1, {Rational(1, 2), Rational(1, 3)});
  TensorVector zero;
  JReport rep = j_membership(desc, zero, 2);
  CHECK(rep.member);
  CHECK(rep.stable);
  GradedVector w = basis_vector(desc, vec2(0, 0), 0, 0);
  TensorVector single;
  single.add_term(vec2(1, 0), w, desc.rad);
  CHECK(!j_membership(desc, single, 2).member);
}

TEST_CASE("kernel construction yields J elements closed under the action") {
  ModuleDescriptor desc = make_desc(2, {2}, {1}, 1, {Rational(1, 2), Rational(1, 3)});
  auto basis = j_kernel_basis(desc, vec2(0, 0), 2, 2);
  REQUIRE(!basis.empty());
  const TensorVector& eta = basis.front();
  CHECK(!eta.is_zero());
  JReport rep = j_membership(desc, eta, 2);
  CHECK(rep.member);
  CHECK(rep.stable);
  // Ideal closure: central shifts, D(u, r'), and t^s keep J membership
  // (tested with a smaller gamma window after the degree shift).
  CycVec u(2);
  u << CycScalar(1), CycScalar(4);
  for (const IntVec& rp : radical_points(desc.rad, 1)) {
    CHECK(j_membership(desc, central_shift(desc, rp, eta), 1).member);
    CHECK(j_membership(desc, tensor_act(desc, witt_term(u, rp, desc.rad), eta), 1).member);
  }
  CHECK(j_membership(desc, tensor_act(desc, ad_term(vec2(1, 0), CycScalar(1), desc.rad), eta), 1)
            .member);
}

TEST_CASE("differentiators annihilate according to the module shape") {
  RatVec u = window_generic_u(2, 6);
  // l = 1, h = 0 collapses to e_r e_0 - e_r e_0 = 0.
  {
    ModuleDescriptor desc = make_desc(2, {2}, {1}, 1, {Rational(1, 2), Rational(1, 3)});
    GradedVector w = basis_vector(desc, vec2(1, 0), 0, 0);
    CHECK(differentiator_apply(desc, vec2(2, 0), IntVec::Zero(2), 1, u, w).is_zero());
  }
  // Witt case, dim V = 1, b = 0: l = 2 annihilates.
  {
    ModuleDescriptor desc = make_desc(2, {}, {}, 0, {Rational(1, 2), Rational(1, 3)});
    for (const IntVec& n : box_points(2, 1)) {
      GradedVector w = basis_vector(desc, n, 0, 0);
      for (const IntVec& r : radical_points(desc.rad, 2))
        for (long long j = 0; j < 2; ++j) {
          IntVec h = desc.rad.xi_basis.col(j);
          CHECK(differentiator_apply(desc, r, h, 2, u, w).is_zero());
        }
    }
  }
  // Natural V: the operator product is a + i b with matrix part h u^T, and
  // (h u^T)^2 = (u|h) h u^T kills the quadratic term, so l = 2 already
  // annihilates.  The symmetric square lacks that cancellation: l = 2 is
  // generically nonzero and l = 3 annihilates.
  {
    ModuleDescriptor desc = make_desc(2, {2}, {1}, 1, {Rational(1, 2), Rational(1, 3)});
    for (const IntVec& r : radical_points(desc.rad, 2))
      for (long long j = 0; j < 2; ++j) {
        IntVec h = desc.rad.xi_basis.col(j);
        GradedVector w = basis_vector(desc, vec2(1, 0), 0, 0);
        CHECK(differentiator_apply(desc, r, h, 2, u, w).is_zero());
        CHECK(differentiator_apply(desc, r, h, 3, u, w).is_zero());
      }
  }
  {
    ModuleDescriptor desc = make_desc(2, {2}, {2}, 2, {Rational(1, 2), Rational(1, 3)});
    bool l2_nonzero = false;
    for (const IntVec& r : radical_points(desc.rad, 2))
      for (long long j = 0; j < 2; ++j) {
        IntVec h = desc.rad.xi_basis.col(j);
        GradedVector w = basis_vector(desc, vec2(1, 0), 0, 0);
        CHECK(differentiator_apply(desc, r, h, 3, u, w).is_zero());
        if (!differentiator_apply(desc, r, h, 2, u, w).is_zero()) l2_nonzero = true;
      }
    CHECK(l2_nonzero);
  }
}

TEST_CASE("minimal annihilating l") {
  RatVec u = window_generic_u(2, 6);
  ModuleDescriptor witt1 = make_desc(2, {}, {}, 0, {Rational(1, 2), Rational(1, 3)});
  CHECK(minimal_annihilating_l(witt1, 2, 4, u) == 2);
  // Natural V inherits the rank-one cancellation (h u^T)^2 = (u|h) h u^T, so
  // the minimum stays at 2; shapes without it need 3.
  ModuleDescriptor witt_nat = make_desc(2, {}, {1}, 1, {Rational(1, 2), Rational(1, 3)});
  CHECK(minimal_annihilating_l(witt_nat, 2, 4, u) == 2);
  ModuleDescriptor c1_nat = make_desc(2, {2}, {1}, 1, {Rational(1, 2), Rational(1, 3)});
  CHECK(minimal_annihilating_l(c1_nat, 2, 4, u) == 2);
  ModuleDescriptor witt_b5 = make_desc(2, {}, {}, 5, {Rational(1, 2), Rational(1, 3)});
  CHECK(minimal_annihilating_l(witt_b5, 2, 4, u) == 3);
  ModuleDescriptor c1_sym2 = make_desc(2, {2}, {2}, 2, {Rational(1, 2), Rational(1, 3)});
  CHECK(minimal_annihilating_l(c1_sym2, 2, 4, u) == 3);
  CHECK(minimal_annihilating_l(c1_sym2, 2, 1, u) == std::nullopt);
}

TEST_CASE("cover weight spaces: dimensions, stabilization, bound") {
  // Witt case: C_q' = 0, the cover vanishes.
  {
    ModuleDescriptor desc = make_desc(2, {}, {}, 0, {Rational(1, 2), Rational(1, 3)});
    CoverDim cd = cover_weight_space(desc, vec2(0, 0), 3, 2, 2);
    CHECK(cd.dim == 0);
    CHECK(cd.stabilized);
    CHECK(cd.bound_ok);
  }
  {
    ModuleDescriptor desc = make_desc(2, {2}, {1}, 1, {Rational(1, 2), Rational(1, 3)});
    CoverDim cd = cover_weight_space(desc, vec2(0, 0), 3, 2, 3);
    CHECK(cd.dim > 0);
    CHECK(cd.bound_ok);
    CHECK(!cd.boundary_term);  // alpha is fractional
  }
  {
    // Integral alpha turns on the boundary summand bookkeeping.
    ModuleDescriptor desc = make_desc(2, {2}, {1}, 1, {Rational(0), Rational(0)});
    CoverDim cd = cover_weight_space(desc, vec2(1, 0), 3, 2, 3);
    CHECK(cd.boundary_term);
    CHECK(cd.bound_ok);
  }
}

TEST_CASE("pi surjectivity onto a weight space") {
  // The psi(t^m, .) images under pi span M_lambda when C_q' M != 0.
  ModuleDescriptor desc = make_desc(2, {2}, {1}, 1, {Rational(1, 2), Rational(1, 3)});
  IntVec lambda = vec2(0, 0);
  long long full = desc.weight_dim(lambda);
  SpanTracker<CycMat> span(full);
  for (const IntVec& m : box_points(2, 2)) {
    if (desc.rad.contains(m)) continue;
    IntVec mdeg = lambda - m;
    long long csize = desc.comp_size(desc.rad.coset_index(mdeg));
    for (long long a = 0; a < desc.v.dim; ++a)
      for (long long p = 0; p < csize; ++p) {
        GradedVector img = vw_act(desc, TorusElement::monomial(m),
                                  basis_vector(desc, mdeg, a, p));
        auto it = img.support().find(lambda);
        if (it != img.support().end()) span.add(it->second);
      }
  }
  CHECK(span.dim() == full);
}

TEST_CASE("rewriting identity holds modulo the windowed J") {
  ModuleDescriptor desc = make_desc(2, {2}, {1}, 1, {Rational(1, 2), Rational(1, 3)});
  RatVec u = window_generic_u(2, 6);
  long long checked = 0, skipped = 0;
  for (const IntVec& n : {vec2(1, 0), vec2(0, 1), vec2(1, 1)}) {
    for (const IntVec& r : radical_points(desc.rad, 1)) {
      for (long long j = 0; j < 2; ++j) {
        RewriteIdentity res =
            rewrite_identity_check(desc, n, r, 3, j, vec2(0, 0), 0, u, 2);
        if (!res.applicable) {
          ++skipped;
          continue;
        }
        ++checked;
        CHECK(res.holds);
      }
    }
  }
  CHECK(checked > 0);
  // Zero-weight exclusion: with integral alpha the precondition fails.
  ModuleDescriptor zdesc = make_desc(2, {2}, {1}, 1, {Rational(0), Rational(0)});
  RewriteIdentity res = rewrite_identity_check(zdesc, vec2(1, 0), vec2(2, 0), 3, 0,
                                      vec2(0, 0), 0, u, 2);
  CHECK(!res.applicable);
}
