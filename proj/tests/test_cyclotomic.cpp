#include "doctest.h"

#include <cmath>
#include <random>

#include "qtorus/cyclotomic.hpp"

using qtorus::CycScalar;
using qtorus::Rational;

namespace {

// Float oracle: numeric evaluation must match the exact value.
void check_numeric(const CycScalar& v, double re, double im, double tol = 1e-9) {
  auto [vre, vim] = v.to_complex();
  CHECK(std::abs(vre - re) < tol);
  CHECK(std::abs(vim - im) < tol);
}

CycScalar random_cyc(std::mt19937_64& rng, long long order) {
  std::uniform_int_distribution<long long> coeff(-3, 3);
  CycScalar out(0);
  CycScalar z = CycScalar::zeta(order);
  CycScalar p(1);
  for (long long k = 0; k < order; ++k) {
    out += CycScalar(coeff(rng)) * p;
    p *= z;
  }
  return out;
}

}  // namespace

TEST_CASE("root_of_unity basic values") {
  CHECK(CycScalar::root_of_unity(0, 1) == CycScalar(1));
  CHECK(CycScalar::root_of_unity(1, 2) == CycScalar(-1));
  // e^{2 pi i/4} squared is e^{2 pi i/2}; float oracle confirms -1.
  CycScalar i4 = CycScalar::root_of_unity(1, 4);
  CHECK(i4 * i4 == CycScalar::root_of_unity(1, 2));
  check_numeric(i4 * i4, -1.0, 0.0);
  check_numeric(i4, 0.0, 1.0);
}

TEST_CASE("multiplication") {
  std::mt19937_64 rng(7);
  CycScalar x = random_cyc(rng, 12);
  CHECK(CycScalar(1) * x == x);
  CycScalar z3 = CycScalar::zeta(3);
  CHECK(z3 * z3 * z3 == CycScalar(1));
  CycScalar z4 = CycScalar::zeta(4);
  CycScalar prod = (CycScalar(1) + z4) * (CycScalar(1) - z4);
  CHECK(prod == CycScalar(2));
  check_numeric(prod, 2.0, 0.0);  // |1+i|^2
}

TEST_CASE("addition") {
  std::mt19937_64 rng(8);
  CycScalar x = random_cyc(rng, 8);
  CHECK(x + CycScalar(0) == x);
  CycScalar z3 = CycScalar::zeta(3);
  CHECK(z3 + z3 * z3 == CycScalar(-1));  // Phi_3 relation
  check_numeric(z3 + z3 * z3, -1.0, 0.0);
  CycScalar z4 = CycScalar::zeta(4);
  CHECK((z4 + z4.pow(3)).is_zero());
  check_numeric(z4 + z4.pow(3), 0.0, 0.0);
}

TEST_CASE("inverse") {
  CHECK(CycScalar(1).inverse() == CycScalar(1));
  for (long long k : {2, 3, 4, 5, 8, 12}) {
    CycScalar z = CycScalar::zeta(k);
    CHECK(z.inverse() == z.pow(k - 1));
  }
  CycScalar z4 = CycScalar::zeta(4);
  CycScalar a = CycScalar(1) + z4;
  CycScalar b = a.inverse();
  CHECK(a * b == CycScalar(1));
  CHECK(b == (CycScalar(1) - z4) * CycScalar(Rational(1, 2)));
  CHECK_THROWS_AS(CycScalar(0).inverse(), std::domain_error);
}

TEST_CASE("unity_order") {
  CHECK(CycScalar(1).unity_order() == 1);
  CHECK(CycScalar(-1).unity_order() == 2);
  CHECK(CycScalar::zeta(4).pow(3).unity_order() == 4);
  CHECK(!CycScalar(2).unity_order().has_value());
  CHECK(!(CycScalar(1) + CycScalar::zeta(4)).unity_order().has_value());
}

TEST_CASE("unity_order of zeta_L^j is L/gcd(L,j)") {
  for (long long L : {1, 2, 3, 4, 8, 12}) {
    CycScalar z = CycScalar::zeta(L);
    for (long long j = 0; j < L; ++j) {
      long long expect = j == 0 ? 1 : L / qtorus::gcd_ll(L, j);
      CHECK(z.pow(j).unity_order() == expect);
    }
  }
}

TEST_CASE("field axioms on randomized triples") {
  std::mt19937_64 rng(42);
  for (long long L : {1, 2, 3, 4, 8, 12}) {
    for (int rep = 0; rep < 50; ++rep) {
      CycScalar a = random_cyc(rng, L);
      CycScalar b = random_cyc(rng, L);
      CycScalar c = random_cyc(rng, L);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * b == b * a);
      CHECK(a + b == b + a);
      CHECK(a * (b + c) == a * b + a * c);
      if (!a.is_zero()) CHECK(a.inverse() * a == CycScalar(1));
    }
  }
}

TEST_CASE("Phi_L vanishes at zeta_L") {
  for (long long L : {1, 2, 3, 4, 5, 6, 8, 12}) {
    const auto& phi = CycScalar::cyclotomic_polynomial(L);
    CycScalar z = CycScalar::zeta(L);
    CycScalar acc(0);
    CycScalar p(1);
    for (const auto& coef : phi) {
      acc += CycScalar(Rational(coef)) * p;
      p *= z;
    }
    CHECK(acc.is_zero());
    CHECK(static_cast<long long>(phi.size()) == CycScalar::phi(L) + 1);
  }
}

TEST_CASE("order promotion is transparent") {
  // Same value represented at different orders compares equal.
  CycScalar a = CycScalar(-1);
  CycScalar b = CycScalar::zeta(4).pow(2);
  CycScalar c = CycScalar::zeta(12).pow(6);
  CHECK(a == b);
  CHECK(b == c);
  CHECK(a.order() != b.order());
  CHECK((a + b) == CycScalar(-2));
}

TEST_CASE("eigen matrices over CycScalar") {
  qtorus::CycMat m(2, 2);
  CycScalar z = CycScalar::zeta(4);
  m << CycScalar(1), z, -z, CycScalar(1);
  qtorus::CycMat p = m * m;
  CHECK(p(0, 0) == CycScalar(2));  // 1 - z^2 = 1 + 1
  CHECK(p(0, 1) == z * CycScalar(2));
}
