#pragma once

#include <optional>
#include <vector>

#include "tnn_cells/combinat.hpp"
#include "tnn_cells/matrix.hpp"
#include "tnn_cells/minors.hpp"

namespace tnn {

/// Partial injection dom -> rows, dom a subset of [1, cols]. Equivalently a
/// rows x cols 0/1 matrix with at most one 1 in each row and column, with
/// w(j) = i iff entry (i, j) is 1.
class PartialPermutation {
 public:
  /// assignment[j-1] = w(j), or 0 when j is outside the domain.
  PartialPermutation(int rows, int cols, std::vector<int> assignment);

  static PartialPermutation from_matrix(const Matrix<int>& m);
  /// Every partial permutation of the given shape, in lexicographic order of
  /// the assignment vector.
  static std::vector<PartialPermutation> all(int rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool defined(int j) const { return a_[j - 1] != 0; }
  int operator()(int j) const { return a_[j - 1]; }
  std::vector<int> domain() const;
  std::vector<int> range() const;
  int rank() const;
  /// The transpose, i.e. the inverse bijection rng -> dom.
  PartialPermutation inverse() const;
  Matrix<int> matrix() const;
  RationalMatrix rational_matrix() const;
  const std::vector<int>& assignment() const { return a_; }
  std::string str() const;

  friend bool operator==(const PartialPermutation&, const PartialPermutation&) = default;

 private:
  int rows_;
  int cols_;
  std::vector<int> a_;
};

enum class BorelSide { plus, minus };

/// Whether [I|L] vanishes on B^+ w B^+ (plus) or B^- w B^- (minus), decided
/// combinatorially:
///   plus:  I !<= w(L') for all L' in dom(w) with L' <= L;
///   minus: L !<= w^{-1}(L') for all L' in rng(w) with L' <= I.
bool bruhat_cell_vanishes(const PartialPermutation& w, const MinorId& id, BorelSide side);

/// The equivalent range-side formulation:
///   plus:  L !>= w^{-1}(L') for all L' in rng(w) with L' >= I;
///   minus: I !>= w(L') for all L' in dom(w) with L' >= L.
bool bruhat_cell_vanishes_dual(const PartialPermutation& w, const MinorId& id, BorelSide side);

/// w_o^m w11 and w_o^m w22^T as partial permutations (both m x p).
PartialPermutation w11_flipped(const RestrictedPermutation& w);
PartialPermutation w22t_flipped(const RestrictedPermutation& w);

/// The four minor types of M(w); a minor may carry several types.
struct MwConditions {
  bool c1 = false;
  bool c2 = false;
  bool c3 = false;
  bool c4 = false;
  bool any() const { return c1 || c2 || c3 || c4; }
};

MwConditions mw_conditions(const RestrictedPermutation& w, const MinorId& id);

/// M(w): every nonempty minor meeting at least one of the four conditions.
MinorFamily compute_Mw(const RestrictedPermutation& w);
/// Minors meeting condition `type` (1..4).
MinorFamily compute_Mw_type(const RestrictedPermutation& w, int type);

/// Rank of the designated corner submatrices, 1-based tables.
struct RankProfile {
  Matrix<int> cond1;  // rank x[r..m; 1..s]
  Matrix<int> cond2;  // rank x[1..r; s..p]
  Matrix<int> cond3;  // rank x[1..m; r..s], r <= s <= p
  Matrix<int> cond4;  // rank x[r..s; 1..p], r <= s <= m
};

RankProfile rank_profile(const RationalMatrix& x);

/// The four rank inequalities (with the extended ranges of Conditions 3, 4).
bool closure_rank_conditions(const RestrictedPermutation& w, const RationalMatrix& x);

/// 0/1 m x p matrix with ones exactly at (i_k, l_k).
RationalMatrix witness_matrix(int m, int p, const MinorId& id);

}  // namespace tnn
