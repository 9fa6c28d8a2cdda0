#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "tnn_cells/minors.hpp"
#include "tnn_cells/restoration.hpp"

using namespace tnn;

namespace {

long binom(int n, int k) {
  long r = 1;
  for (int t = 1; t <= k; ++t) r = r * (n - k + t) / t;
  return r;
}

MinorFamily family_of(int m, int p, std::initializer_list<const char*> ids) {
  std::vector<MinorId> v;
  for (const char* s : ids) v.push_back(MinorId::parse(s));
  return MinorFamily(m, p, v);
}

}  // namespace

TEST_CASE("minor text form") {
  const MinorId id = MinorId::parse("[1,2|1,3]");
  CHECK(id.rows == IndexSet{1, 2});
  CHECK(id.cols == IndexSet{1, 3});
  CHECK(id.str() == "[1,2|1,3]");
  CHECK_THROWS_AS(MinorId::parse("[1,2|1]"), std::invalid_argument);
  CHECK_THROWS_AS(MinorId::parse("1|1"), std::invalid_argument);
  CHECK_THROWS_AS(MinorId::parse("[|]"), std::invalid_argument);
}

TEST_CASE("all_minor_ids counts and order") {
  CHECK(all_minor_ids(2, 2).size() == 5);
  CHECK(all_minor_ids(3, 3).size() == 19);
  CHECK(all_minor_ids(1, 1).size() == 1);
  for (int m = 1; m <= 5; ++m)
    for (int p = 1; p <= 5; ++p) CHECK(static_cast<long>(all_minor_ids(m, p).size()) == binom(m + p, m) - 1);
  const auto ids = all_minor_ids(3, 4);
  for (std::size_t k = 1; k < ids.size(); ++k) CHECK(ids[k - 1] < ids[k]);
  CHECK(ids.front().str() == "[1|1]");
  CHECK(ids.back().str() == "[1,2,3|2,3,4]");
}

TEST_CASE("eval_minor examples") {
  const RationalMatrix a = rational_matrix({{1, 1}, {1, 0}});
  CHECK(eval_minor(a, MinorId::parse("[1,2|1,2]")) == Rational(-1));
  std::mt19937_64 rng(1);
  const RationalMatrix r = oracle::random_int_matrix(rng, 3, 4, -9, 9);
  for (int i = 1; i <= 3; ++i)
    for (int c = 1; c <= 4; ++c) CHECK(eval_minor(r, MinorId({i}, {c})) == r(i - 1, c - 1));
  const RationalMatrix nbar = rational_matrix({{11, 7, 4, 1}, {7, 5, 3, 1}, {4, 3, 2, 1}, {1, 1, 1, 1}});
  const Rational full = eval_minor(nbar, MinorId::parse("[1,2,3,4|1,2,3,4]"));
  CHECK(full == oracle::leibniz_det(nbar));
  CHECK(full.sign() >= 0);
  CHECK_THROWS_AS(eval_minor(a, MinorId::parse("[3|1]")), std::out_of_range);
}

TEST_CASE("minor table matches the Leibniz oracle on every minor") {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 20; ++trial) {
    const RationalMatrix a = oracle::random_int_matrix(rng, 4, 4, -4, 4);
    const MinorTable<Rational> table(a);
    for (const MinorId& id : all_minor_ids(4, 4)) {
      CHECK(table(id) == oracle::minor_of(a, id.rows.values(), id.cols.values()));
      CHECK(table(id) == eval_minor(a, id));
    }
  }
}

TEST_CASE("vanishing_family examples") {
  CHECK(vanishing_family(RationalMatrix(3, 2, Rational(0))) == all_minors_family(3, 2));
  CHECK(vanishing_family(generic_symbolic_matrix(3, 3)).empty());
  CHECK(vanishing_family_symbolic(generic_symbolic_matrix(3, 3)).empty());
  const RationalMatrix a = rational_matrix({{1, 2}, {2, 4}});
  CHECK(vanishing_family(a) == family_of(2, 2, {"[1,2|1,2]"}));
}

TEST_CASE("symbolic and dense vanishing families agree") {
  const Registry reg{3, 3};
  auto t = [&](int i, int a) { return LaurentPoly::variable(reg, i, a); };
  const LaurentPoly z(reg);
  // Rank-one 2x2 block in the corner plus a zero row.
  const LaurentMatrix m(3, 3, std::vector<LaurentPoly>{t(1, 1), t(1, 1) * t(2, 2), z, t(2, 1), t(2, 1) * t(2, 2), z, z, z, t(3, 3)});
  CHECK(vanishing_family_symbolic(m) == vanishing_family(m));
  CHECK(vanishing_family(m).contains(MinorId::parse("[1,2|1,2]")));
}

TEST_CASE("vanishing family is transpose-symmetric") {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 40; ++trial) {
    const RationalMatrix a = oracle::random_int_matrix(rng, 3, 4, -1, 1);
    CHECK(vanishing_family(a.transposed()) == vanishing_family(a).transposed());
  }
}

TEST_CASE("totally positive restored matrix has no vanishing minor") {
  const RationalMatrix n = rational_matrix({{1, 1, 1}, {1, 1, 1}, {1, 1, 1}});
  CHECK(vanishing_family(restored(n)).empty());
}

TEST_CASE("family set semantics and hashing") {
  MinorFamily f(2, 2);
  f.insert(MinorId::parse("[2|1]"));
  f.insert(MinorId::parse("[1,2|1,2]"));
  f.insert(MinorId::parse("[1|2]"));
  f.insert(MinorId::parse("[2|1]"));
  CHECK(f.size() == 3);
  CHECK(f.str() == "{[1|2], [2|1], [1,2|1,2]}");
  const MinorFamily g = family_of(2, 2, {"[1,2|1,2]", "[2|1]", "[1|2]"});
  CHECK(f == g);
  CHECK(f.hash() == g.hash());
  CHECK(family_of(2, 2, {"[1|2]"}).is_subset_of(f));
  CHECK_THROWS_AS(f.insert(MinorId::parse("[3|1]")), std::out_of_range);
}

TEST_CASE("first-row Laplace expansion matches eval_minor on rational matrices") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> den(1, 5);
  auto id_text = [](const std::vector<int>& rows, const std::vector<int>& cols) {
    std::string s = "[";
    for (std::size_t k = 0; k < rows.size(); ++k) s += (k ? "," : "") + std::to_string(rows[k]);
    s += "|";
    for (std::size_t k = 0; k < cols.size(); ++k) s += (k ? "," : "") + std::to_string(cols[k]);
    return s + "]";
  };
  for (int trial = 0; trial < 10; ++trial) {
    RationalMatrix a = oracle::random_int_matrix(rng, 4, 4, -4, 4);
    for (int i = 0; i < 4; ++i)
      for (int k = 0; k < 4; ++k) a(i, k) = a(i, k) / Rational(den(rng));
    for (const MinorId& id : all_minor_ids(4, 4)) {
      if (id.size() < 2) continue;
      const std::vector<int> rows = id.rows.values();
      const std::vector<int> cols = id.cols.values();
      const std::vector<int> rest(rows.begin() + 1, rows.end());
      Rational sum(0);
      for (std::size_t k = 0; k < cols.size(); ++k) {
        std::vector<int> sub = cols;
        sub.erase(sub.begin() + static_cast<long>(k));
        const Rational term = a(rows[0] - 1, cols[k] - 1) * eval_minor(a, MinorId::parse(id_text(rest, sub)));
        sum = (k % 2 == 0) ? sum + term : sum - term;
      }
      CHECK(sum == eval_minor(a, id));
    }
  }
}
