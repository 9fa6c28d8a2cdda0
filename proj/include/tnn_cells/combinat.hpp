#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "tnn_cells/matrix.hpp"

namespace tnn {

/// A grid position (i, alpha), 1-based.
struct Cell {
  int row = 0;
  int col = 0;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// m x p grid of black/white squares; every black square has all squares to
/// its left black or all squares above it black. Stored as a row-major
/// bitmask: bit (i-1)*p + (alpha-1) is set iff (i, alpha) is black.
class CauchonDiagram {
 public:
  static constexpr int kMaxSide = 8;

  /// Throws std::invalid_argument if the mask is not a Cauchon diagram or the
  /// grid exceeds 8 x 8.
  CauchonDiagram(int m, int p, std::uint64_t black_mask);

  static CauchonDiagram from_cells(int m, int p, std::span<const Cell> black);
  static CauchonDiagram all_white(int m, int p) { return {m, p, 0}; }
  static CauchonDiagram all_black(int m, int p);

  int m() const { return m_; }
  int p() const { return p_; }
  std::uint64_t mask() const { return mask_; }
  bool is_black(int i, int a) const { return (mask_ >> bit(p_, i, a)) & 1U; }
  int num_black() const { return __builtin_popcountll(mask_); }
  std::vector<Cell> black_cells() const;

  static int bit(int p, int i, int a) { return (i - 1) * p + (a - 1); }

  friend bool operator==(const CauchonDiagram&, const CauchonDiagram&) = default;
  friend auto operator<=>(const CauchonDiagram&, const CauchonDiagram&) = default;

 private:
  int m_;
  int p_;
  std::uint64_t mask_;
};

/// Throws std::invalid_argument unless 1 <= m, p <= 8.
void check_grid_size(int m, int p);

bool is_cauchon_mask(int m, int p, std::uint64_t black_mask);

/// Diagram condition on an explicit cell list; throws std::out_of_range for
/// cells outside the grid.
bool is_cauchon(int m, int p, std::span<const Cell> black);

/// Every m x p diagram exactly once, in ascending bitmask order.
void for_each_diagram(int m, int p, const std::function<void(const CauchonDiagram&)>& fn);
std::vector<CauchonDiagram> enumerate_diagrams(int m, int p);
std::uint64_t count_diagrams(int m, int p);

/// Sorted ascending list of distinct positive integers.
class IndexSet {
 public:
  IndexSet() = default;
  IndexSet(std::initializer_list<int> values) : IndexSet(std::vector<int>(values)) {}
  explicit IndexSet(std::vector<int> values);

  /// Sorts and validates arbitrary distinct values.
  static IndexSet from_unsorted(std::vector<int> values);

  std::size_t size() const { return v_.size(); }
  bool empty() const { return v_.empty(); }
  int operator[](std::size_t k) const { return v_[k]; }
  int front() const { return v_.front(); }
  int back() const { return v_.back(); }
  auto begin() const { return v_.begin(); }
  auto end() const { return v_.end(); }
  const std::vector<int>& values() const { return v_; }
  bool contains(int x) const;

  IndexSet without(int x) const;
  IndexSet with(int x) const;
  IndexSet replaced(int from, int to) const { return without(from).with(to); }

  std::string str() const;

  friend bool operator==(const IndexSet&, const IndexSet&) = default;
  friend auto operator<=>(const IndexSet&, const IndexSet&) = default;

 private:
  std::vector<int> v_;
};

/// I <= J componentwise after ascending sort. Throws on |I| != |J|.
bool index_set_leq(const IndexSet& I, const IndexSet& J);

/// Calls fn for every k-subset of `pool` (given ascending), in lexicographic order.
void for_each_subset(std::span<const int> pool, int k, const std::function<void(const IndexSet&)>& fn);

/// w in S_{m+p} with -p <= w(i) - i <= m for all i, in one-line notation.
class RestrictedPermutation {
 public:
  RestrictedPermutation(int m, int p, std::vector<int> one_line);

  static RestrictedPermutation identity(int m, int p);
  /// The Bruhat-maximal element [m+1, ..., m+p, 1, ..., m].
  static RestrictedPermutation w_max(int m, int p);

  int m() const { return m_; }
  int p() const { return p_; }
  int n() const { return m_ + p_; }
  /// w(j), 1-based.
  int operator()(int j) const { return w_[j - 1]; }
  /// w^{-1}(v), 1-based.
  int inverse(int v) const { return inv_[v - 1]; }
  const std::vector<int>& one_line() const { return w_; }
  std::string str() const;

  friend bool operator==(const RestrictedPermutation& a, const RestrictedPermutation& b) {
    return a.m_ == b.m_ && a.p_ == b.p_ && a.w_ == b.w_;
  }
  friend auto operator<=>(const RestrictedPermutation& a, const RestrictedPermutation& b) {
    return a.w_ <=> b.w_;
  }

 private:
  int m_;
  int p_;
  std::vector<int> w_;
  std::vector<int> inv_;
};

bool is_permutation(std::span<const int> one_line);
bool satisfies_shift_bounds(int m, int p, std::span<const int> one_line);

/// Every element of S, lexicographic in one-line notation.
void for_each_restricted_perm(int m, int p, const std::function<void(const RestrictedPermutation&)>& fn);
std::vector<RestrictedPermutation> enumerate_restricted_perms(int m, int p);

/// Bruhat order by the rank-matrix criterion:
/// w <= z iff #{k <= j : w(k) >= i} <= #{k <= j : z(k) >= i} for all i, j.
bool bruhat_leq(std::span<const int> w, std::span<const int> z);
bool bruhat_leq(const RestrictedPermutation& w, const RestrictedPermutation& z);

/// Permutation helpers on one-line notation (1-based values).
std::vector<int> compose(std::span<const int> a, std::span<const int> b);  // (a o b)(j) = a(b(j))
std::vector<int> inverse_permutation(std::span<const int> w);
std::vector<int> longest_element(int n);

/// The permutation matrix w_{ij} = delta_{i, w(j)} cut into blocks
/// [[w11 (m x p), w12 (m x m)], [w21 (p x p), w22 (p x m)]].
struct BlockDecomposition {
  Matrix<int> w11;
  Matrix<int> w12;
  Matrix<int> w21;
  Matrix<int> w22;

  Matrix<int> assemble() const;
};

BlockDecomposition block_decompose(std::span<const int> w, int m, int p);
Matrix<int> permutation_matrix(std::span<const int> w);

}  // namespace tnn
