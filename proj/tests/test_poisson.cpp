#include <doctest.h>

#include <random>

#include "tnn_cells/cells.hpp"
#include "tnn_cells/poisson.hpp"
#include "tnn_cells/verify.hpp"

using namespace tnn;

namespace {

const Registry kReg{2, 2};

LaurentPoly t(int i, int a) { return LaurentPoly::variable(kReg, i, a); }

LaurentPoly random_poly(std::mt19937_64& rng, const Registry& reg, int terms) {
  std::uniform_int_distribution<int> e(-2, 2);
  std::uniform_int_distribution<long> co(-3, 3);
  LaurentPoly out(reg);
  for (int k = 0; k < terms; ++k) {
    LaurentPoly::Exponents exp(static_cast<std::size_t>(reg.num_vars()));
    for (auto& x : exp) x = e(rng);
    out += LaurentPoly::monomial(reg, exp, Rational(co(rng)));
  }
  return out;
}

}  // namespace

TEST_CASE("generator brackets") {
  const BracketTable ac = BracketTable::a_c(CauchonDiagram::all_white(2, 2));
  const BracketTable om = BracketTable::matrix_poisson(2, 2);
  CHECK(bracket(t(1, 1), t(1, 2), ac) == t(1, 1) * t(1, 2));
  CHECK(bracket(t(1, 2), t(1, 1), ac) == -(t(1, 1) * t(1, 2)));
  CHECK(bracket(t(1, 1), t(2, 1), ac) == t(1, 1) * t(2, 1));
  CHECK(bracket(t(1, 1), t(2, 2), ac).is_zero());
  CHECK(bracket(t(1, 2), t(2, 1), ac).is_zero());
  CHECK(bracket(t(1, 1), t(2, 2), om) == (t(1, 2) * t(2, 1)).scaled(Rational(2)));
  CHECK(bracket(t(1, 2), t(2, 1), om).is_zero());
  CHECK(bracket(t(1, 1), t(1, 1), om).is_zero());
}

TEST_CASE("black cells drop out of the A_C table") {
  const std::vector<Cell> black{{1, 1}};
  const BracketTable ac = BracketTable::a_c(CauchonDiagram::from_cells(2, 2, black));
  CHECK(bracket(t(1, 1), t(1, 2), ac).is_zero());
  CHECK(bracket(t(1, 2), t(2, 2), ac) == t(1, 2) * t(2, 2));
  for (const auto& [v, w] : ac.nonzero_pairs()) {
    CHECK(v != 0);
    CHECK(w != 0);
  }
}

TEST_CASE("bracket of Laurent monomials") {
  const BracketTable ac = BracketTable::a_c(CauchonDiagram::all_white(2, 2));
  const LaurentPoly inv = LaurentPoly::monomial(kReg, {-1, 0, 0, 0}, Rational(1));
  // {t11^-1, t12} = -t11^-2 {t11, t12} = -t11^-1 t12
  CHECK(bracket(inv, t(1, 2), ac) == -LaurentPoly::monomial(kReg, {-1, 1, 0, 0}, Rational(1)));
  CHECK(bracket(LaurentPoly::constant(kReg, Rational(5)), t(1, 2), ac).is_zero());
}

TEST_CASE("antisymmetry, Leibniz and Jacobi on random polynomials") {
  std::mt19937_64 rng(41);
  const std::vector<BracketTable> tables{BracketTable::a_c(CauchonDiagram::all_white(2, 2)),
                                         BracketTable::a_c(CauchonDiagram(2, 2, 0b0001)),
                                         BracketTable::matrix_poisson(2, 2)};
  for (const BracketTable& table : tables) {
    for (int k = 0; k < 40; ++k) {
      const LaurentPoly f = random_poly(rng, kReg, 2);
      const LaurentPoly g = random_poly(rng, kReg, 2);
      const LaurentPoly h = random_poly(rng, kReg, 2);
      CHECK(bracket(f, g, table) == -bracket(g, f, table));
      CHECK(bracket(f, g * h, table) == bracket(f, g, table) * h + g * bracket(f, h, table));
      CHECK(verify_jacobi(table, {f, g, h}));
    }
  }
}

TEST_CASE("verify_jacobi detects a non-Poisson table") {
  const Registry reg{1, 3};
  BracketTable bad(reg);
  auto x = [&](int a) { return LaurentPoly::variable(reg, 1, a); };
  // {x1,x2} = x3, {x2,x3} = x2: the Jacobi sum is x3.
  bad.set(0, 1, x(3));
  bad.set(1, 2, x(2));
  CHECK_FALSE(verify_jacobi(bad, {x(1), x(2), x(3)}));
}

TEST_CASE("bidegree") {
  CHECK(bidegree(t(1, 2)) == std::vector<int>{1, 0, 0, 1});
  CHECK(bidegree(t(1, 1) * t(2, 2) - t(1, 2) * t(2, 1)) == std::vector<int>{1, 1, 1, 1});
  CHECK_FALSE(bidegree(t(1, 1) + t(1, 2)).has_value());
  CHECK_FALSE(bidegree(LaurentPoly(kReg)).has_value());
  CHECK(bidegree(LaurentPoly::monomial(kReg, {-1, 0, 0, 0}, Rational(1))) == std::vector<int>{-1, 0, -1, 0});
}

TEST_CASE("expected step bracket") {
  const LaurentMatrix x = generic_symbolic_matrix(2, 2);
  CHECK(expected_step_bracket(x, {1, 2}, {1, 1}, {2, 2}).is_zero());
  CHECK(expected_step_bracket(x, {2, 3}, {1, 1}, {2, 2}) == (t(1, 2) * t(2, 1)).scaled(Rational(2)));
  CHECK(expected_step_bracket(x, {2, 3}, {2, 2}, {1, 1}) == -(t(1, 2) * t(2, 1)).scaled(Rational(2)));
  CHECK(expected_step_bracket(x, {2, 3}, {1, 2}, {2, 1}).is_zero());
  CHECK(expected_step_bracket(x, {1, 2}, {1, 1}, {1, 2}) == t(1, 1) * t(1, 2));
}

TEST_CASE("restored generators satisfy the step bracket identity") {
  const StepBracketReport last = verify_step_brackets(CauchonDiagram::all_white(2, 2), {2, 3});
  CHECK(last.passed());
  CHECK(last.pairs_checked == 6);
  for (auto [m, p] : std::vector<std::pair<int, int>>{{1, 2}, {2, 2}, {2, 3}, {3, 2}}) {
    for (const CauchonDiagram& c : enumerate_diagrams(m, p)) {
      for (const StepBracketReport& rep : verify_all_step_brackets(c)) {
        CHECK_MESSAGE(rep.passed(), "mask " << c.mask() << " step " << rep.step.str());
      }
    }
  }
}

TEST_CASE("fully restored generators carry the matrix bracket") {
  // At the last step every i < k, a < c pair picks up 2 y[i,c] y[k,a].
  const LaurentMatrix y = restored(symbolic_MC(CauchonDiagram::all_white(2, 3)));
  const BracketTable ac = BracketTable::a_c(CauchonDiagram::all_white(2, 3));
  CHECK(bracket(y(0, 0), y(1, 2), ac) == (y(0, 2) * y(1, 0)).scaled(Rational(2)));
  CHECK(bracket(y(0, 1), y(1, 2), ac) == (y(0, 2) * y(1, 1)).scaled(Rational(2)));
  CHECK(bracket(y(0, 0), y(0, 2), ac) == y(0, 0) * y(0, 2));
  CHECK(bracket(y(0, 2), y(1, 0), ac).is_zero());
}

TEST_CASE("bracket property suite") {
  const SuiteResult r = verify_bracket_properties(2, 2, 50, 5);
  CHECK_MESSAGE(r.passed, r.detail);
  CHECK(r.checked == 50);
}
