#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "tnn_cells/det.hpp"
#include "tnn_cells/laurent.hpp"
#include "tnn_cells/matrix.hpp"
#include "tnn_cells/rational.hpp"

using namespace tnn;

namespace {

const Registry kReg{2, 2};

LaurentPoly t(int i, int a) { return LaurentPoly::variable(kReg, i, a); }
LaurentPoly c(long v) { return LaurentPoly::constant(kReg, Rational(v)); }

LaurentPoly random_poly(std::mt19937_64& rng, const Registry& reg, int terms) {
  std::uniform_int_distribution<int> e(-2, 2);
  std::uniform_int_distribution<long> co(-4, 4);
  LaurentPoly out(reg);
  for (int k = 0; k < terms; ++k) {
    LaurentPoly::Exponents exp(static_cast<std::size_t>(reg.num_vars()));
    for (auto& x : exp) x = e(rng);
    out += LaurentPoly::monomial(reg, exp, Rational(co(rng)));
  }
  return out;
}

}  // namespace

TEST_CASE("rational canonical form") {
  CHECK(Rational::parse("6/4").str() == "3/2");
  CHECK(Rational::parse("-6/4").str() == "-3/2");
  CHECK(Rational::parse("0/7").str() == "0");
  CHECK(Rational::parse("0/7") == Rational(0));
  CHECK(Rational::parse(" 5 ").str() == "5");
  CHECK(Rational(mpz_class(4), mpz_class(-6)).str() == "-2/3");
  CHECK_THROWS_AS(Rational::parse("1/0"), std::domain_error);
  CHECK_THROWS_AS(Rational::parse("1/-2"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("abc"), std::invalid_argument);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
  CHECK(Rational(2) / Rational(3) < Rational(1));
}

TEST_CASE("rational parse-print round trip") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> d(-1000000, 1000000);
  for (int k = 0; k < 500; ++k) {
    long den = d(rng);
    if (den == 0) den = 1;
    const Rational q(mpz_class(d(rng)), mpz_class(den));
    const Rational back = Rational::parse(q.str());
    CHECK(back == q);
    CHECK(back.str() == q.str());
    CHECK(Rational::parse(back.str()) == back);
  }
}

TEST_CASE("laurent_mul examples") {
  const LaurentPoly inv = LaurentPoly::monomial(kReg, {-1, 0, 0, 0}, Rational(1));
  CHECK(laurent_mul(t(1, 1), inv) == c(1));
  CHECK(laurent_mul(t(1, 1) + t(1, 2), LaurentPoly(kReg)).is_zero());
  CHECK(laurent_mul(t(1, 1) + c(1), t(1, 1) - c(1)) == t(1, 1) * t(1, 1) - c(1));
  CHECK_THROWS_AS(laurent_mul(t(1, 1), LaurentPoly::variable(Registry{3, 3}, 1, 1)), RegistryMismatch);
}

TEST_CASE("laurent_mul matches schoolbook expansion") {
  // (t11 + 2 t12^-1)(3 t11 - t12) = 3 t11^2 - t11 t12 + 6 t11 t12^-1 - 2
  const LaurentPoly x = t(1, 1) + LaurentPoly::monomial(kReg, {0, -1, 0, 0}, Rational(2));
  const LaurentPoly y = t(1, 1).scaled(Rational(3)) - t(1, 2);
  const LaurentPoly want = LaurentPoly::monomial(kReg, {2, 0, 0, 0}, Rational(3)) -
                           LaurentPoly::monomial(kReg, {1, 1, 0, 0}, Rational(1)) +
                           LaurentPoly::monomial(kReg, {1, -1, 0, 0}, Rational(6)) - c(2);
  CHECK(x * y == want);
}

TEST_CASE("laurent_div_exact examples") {
  CHECK(laurent_div_exact(t(1, 1) * t(2, 2), t(1, 1)) == t(2, 2));
  CHECK(laurent_div_exact(t(1, 1) * t(1, 1) - c(1), t(1, 1) - c(1)) == t(1, 1) + c(1));
  CHECK_FALSE(try_div_exact(t(1, 2), t(1, 1) + c(1)).has_value());
  // In the Laurent ring a monomial divides anything.
  CHECK(laurent_div_exact(t(1, 2), t(1, 1)) == LaurentPoly::monomial(kReg, {-1, 1, 0, 0}, Rational(1)));
  CHECK_THROWS_AS(laurent_div_exact(t(1, 2), t(1, 1) + t(2, 2)), InexactDivision);
  CHECK_THROWS_AS(laurent_div_exact(t(1, 2), LaurentPoly(kReg)), std::domain_error);
}

TEST_CASE("laurent ring axioms on random triples") {
  std::mt19937_64 rng(3);
  for (int k = 0; k < 200; ++k) {
    const LaurentPoly a = random_poly(rng, kReg, 3);
    const LaurentPoly b = random_poly(rng, kReg, 3);
    const LaurentPoly d = random_poly(rng, kReg, 3);
    CHECK((a * b) * d == a * (b * d));
    CHECK(a * (b + d) == a * b + a * d);
    CHECK(a * b == b * a);
    CHECK(a + b == b + a);
    CHECK((a - a).is_zero());
  }
}

TEST_CASE("exact division undoes multiplication") {
  std::mt19937_64 rng(5);
  for (int k = 0; k < 200; ++k) {
    const LaurentPoly a = random_poly(rng, kReg, 3);
    LaurentPoly b = random_poly(rng, kReg, 2);
    if (b.is_zero()) b = c(1);
    CHECK(laurent_div_exact(a * b, b) == a);
  }
}

TEST_CASE("laurent text form") {
  const LaurentPoly p = LaurentPoly::monomial(kReg, {-1, 1, 1, 0}, Rational(1));
  CHECK(p.str() == "1 * t[1,1]^-1 * t[1,2]^1 * t[2,1]^1");
  CHECK(LaurentPoly(kReg).str() == "0");
  std::mt19937_64 rng(17);
  for (int k = 0; k < 100; ++k) {
    const LaurentPoly q = random_poly(rng, kReg, 4);
    CHECK(LaurentPoly::parse(kReg, q.str()) == q);
  }
}

TEST_CASE("formal derivative with negative exponents") {
  const LaurentPoly p = LaurentPoly::monomial(kReg, {-2, 1, 0, 0}, Rational(3));
  CHECK(p.derivative(0) == LaurentPoly::monomial(kReg, {-3, 1, 0, 0}, Rational(-6)));
  CHECK(p.derivative(3).is_zero());
}

TEST_CASE("det_exact examples") {
  CHECK(det_exact(rational_matrix({{0, 1}, {2, 3}})) == Rational(-2));
  for (int n = 1; n <= 6; ++n) {
    RationalMatrix id(n, n, Rational(0));
    for (int k = 0; k < n; ++k) id(k, k) = Rational(1);
    CHECK(det_exact(id) == Rational(1));
  }
  const LaurentMatrix g = generic_symbolic_matrix(2, 2);
  CHECK(det_exact(g) == t(1, 1) * t(2, 2) - t(1, 2) * t(2, 1));
}

TEST_CASE("det_exact agrees with the Leibniz oracle") {
  std::mt19937_64 rng(23);
  for (int n = 1; n <= 4; ++n) {
    for (int k = 0; k < 150; ++k) {
      const RationalMatrix a = oracle::random_int_matrix(rng, n, n, -3, 3);
      CHECK(det_exact(a) == oracle::leibniz_det(a));
      CHECK(det_cofactor(a) == oracle::leibniz_det(a));
    }
  }
}

TEST_CASE("symbolic det agrees with cofactor expansion") {
  std::mt19937_64 rng(29);
  const Registry reg{3, 3};
  for (int k = 0; k < 30; ++k) {
    std::vector<LaurentPoly> data;
    for (int e = 0; e < 9; ++e) data.push_back(random_poly(rng, reg, 2));
    const LaurentMatrix m(3, 3, data);
    CHECK(det_exact(m) == det_cofactor(m));
  }
  const LaurentMatrix g = generic_symbolic_matrix(3, 3);
  CHECK(det_exact(g) == det_cofactor(g));
}

TEST_CASE("rank by fraction-free elimination") {
  CHECK(rank(rational_matrix({{1, 2}, {2, 4}})) == 1);
  CHECK(rank(rational_matrix({{0, 0}, {0, 0}})) == 0);
  CHECK(rank(rational_matrix({{0, 1, 0}, {0, 0, 1}})) == 2);
  CHECK(rank(rational_matrix({{1, 1, 1}, {1, 2, 3}, {2, 3, 4}})) == 2);
}
