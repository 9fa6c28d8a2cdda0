#include <doctest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "tnn_cells/cells.hpp"
#include "tnn_cells/errors.hpp"
#include "tnn_cells/families.hpp"
#include "tnn_cells/restoration.hpp"

using namespace tnn;

namespace {

MinorFamily family_of(int m, int p, std::initializer_list<const char*> ids) {
  std::vector<MinorId> v;
  for (const char* s : ids) v.push_back(MinorId::parse(s));
  return MinorFamily(m, p, v);
}

const RationalMatrix kNbar = rational_matrix({{11, 7, 4, 1}, {7, 5, 3, 1}, {4, 3, 2, 1}, {1, 1, 1, 1}});

CauchonDiagram figure4() {
  const std::vector<Cell> black{{1, 1}, {1, 3}, {2, 1}, {2, 2}};
  return CauchonDiagram::from_cells(3, 3, black);
}

}  // namespace

TEST_CASE("is_tnn examples") {
  const TnnVerdict bad = is_tnn(rational_matrix({{1, 1}, {1, 0}}));
  CHECK_FALSE(bad.is_tnn);
  REQUIRE(bad.witness.has_value());
  CHECK(bad.witness->str() == "[1,2|1,2]");
  CHECK(*bad.witness_value == Rational(-1));
  CHECK(is_tnn(kNbar).is_tnn);
  CHECK(is_tnn(RationalMatrix(3, 2, Rational(0))).is_tnn);
  CHECK_FALSE(is_tnn(rational_matrix({{1, -1}})).is_tnn);
  CHECK(is_tnn(rational_matrix({{1, -1}})).witness->str() == "[1|2]");
}

TEST_CASE("is_tnn agrees with the Leibniz oracle") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const RationalMatrix x = oracle::random_int_matrix(rng, 3, 3, -1, 3);
    bool want = true;
    for (const MinorId& id : all_minor_ids(3, 3))
      if (oracle::minor_of(x, id.rows.values(), id.cols.values()).sign() < 0) want = false;
    CHECK(is_tnn(x).is_tnn == want);
  }
}

TEST_CASE("compute_MC for the end-to-end diagram") {
  const MinorFamily want =
      family_of(3, 3, {"[1|3]", "[1,2|1,2]", "[1,3|1,2]", "[2,3|1,2]", "[2,3|1,3]", "[2,3|2,3]", "[1,2,3|1,2,3]"});
  CHECK(compute_MC(figure4()) == want);
  CHECK(compute_Mw(RestrictedPermutation(3, 3, {1, 4, 3, 2, 6, 5})) == want);
}

TEST_CASE("compute_MC extremes") {
  for (auto [m, p] : std::vector<std::pair<int, int>>{{1, 1}, {2, 2}, {2, 3}, {3, 2}}) {
    CHECK(compute_MC(CauchonDiagram::all_white(m, p)).empty());
    CHECK(compute_MC(CauchonDiagram::all_black(m, p)) == all_minors_family(m, p));
  }
}

TEST_CASE("build_NC") {
  const CauchonDiagram c = figure4();
  const RationalMatrix a = build_NC(c, 42);
  CHECK(a == build_NC(c, 42));
  CHECK_FALSE(a == build_NC(c, 43));
  for (int i = 1; i <= 3; ++i)
    for (int k = 1; k <= 3; ++k) CHECK((a(i - 1, k - 1).sign() == 0) == c.is_black(i, k));
  CHECK(diagram_of(a) == c);
}

TEST_CASE("restored N_C is tnn with vanishing family M(C)") {
  std::mt19937_64 rng(32);
  for (auto [m, p] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 2}}) {
    for (const CauchonDiagram& c : enumerate_diagrams(m, p)) {
      const RationalMatrix x = restored(build_NC(c, rng()));
      CHECK(is_tnn(x).is_tnn);
      CHECK(vanishing_family(x) == compute_MC(c));
    }
  }
}

TEST_CASE("classify") {
  const CellDescriptor d = classify(kNbar, true);
  CHECK(d.diagram.black_cells() == std::vector<Cell>{{1, 2}, {2, 1}, {2, 2}});
  CHECK(d.family == compute_MC(d.diagram));
  REQUIRE(d.matched_perm.has_value());
  CHECK(compute_Mw(*d.matched_perm) == d.family);

  const CellDescriptor tp = classify(restored(rational_matrix({{1, 1}, {1, 1}})));
  CHECK(tp.diagram.num_black() == 0);
  CHECK(tp.family.empty());
  CHECK_FALSE(tp.matched_perm.has_value());

  const CellDescriptor zero = classify(RationalMatrix(2, 3, Rational(0)));
  CHECK(zero.diagram == CauchonDiagram::all_black(2, 3));
  CHECK(zero.family == all_minors_family(2, 3));

  CHECK_THROWS_AS(classify(rational_matrix({{1, 1}, {1, 0}})), NotTotallyNonnegative);
  try {
    classify(rational_matrix({{1, 1}, {1, 0}}));
  } catch (const NotTotallyNonnegative& e) {
    CHECK(e.witness().str() == "[1,2|1,2]");
    CHECK(e.value() == Rational(-1));
  }
}

TEST_CASE("match_families at small sizes") {
  for (auto [m, p] : std::vector<std::pair<int, int>>{{1, 1}, {2, 2}, {2, 3}, {3, 2}}) {
    const auto pairs = match_families(m, p, 2);
    CHECK(pairs.size() == count_diagrams(m, p));
    std::set<std::uint64_t> masks;
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      CHECK(pairs[k].family == compute_Mw(pairs[k].perm));
      CHECK(pairs[k].family == compute_MC(pairs[k].diagram));
      if (k > 0) CHECK(pairs[k - 1].perm < pairs[k].perm);
      masks.insert(pairs[k].diagram.mask());
    }
    CHECK(masks.size() == pairs.size());
  }
  const auto p22 = match_families(2, 2, 1);
  CHECK(p22.front().perm == RestrictedPermutation::identity(2, 2));
  CHECK(p22.front().diagram.num_black() == 0);
  CHECK(p22.back().perm == RestrictedPermutation::w_max(2, 2));
  CHECK(p22.back().diagram == CauchonDiagram::all_black(2, 2));
}

TEST_CASE("thread count does not change the matching") {
  const auto a = match_families(2, 3, 1);
  const auto b = match_families(2, 3, 4);
  REQUIRE(a.size() == b.size());
  for (std::size_t k = 0; k < a.size(); ++k) {
    CHECK(a[k].perm == b[k].perm);
    CHECK(a[k].diagram == b[k].diagram);
  }
}

TEST_CASE("M(C) is injective and ordered like the matched permutations") {
  const auto pairs = match_families(2, 3, 1);
  for (const auto& x : pairs) {
    for (const auto& y : pairs) {
      if (x.diagram != y.diagram) CHECK(x.family != y.family);
      CHECK(x.family.is_subset_of(y.family) == bruhat_leq(x.perm, y.perm));
    }
  }
}
