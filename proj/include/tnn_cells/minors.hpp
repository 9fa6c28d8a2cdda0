#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tnn_cells/combinat.hpp"
#include "tnn_cells/det.hpp"
#include "tnn_cells/matrix.hpp"

namespace tnn {

/// Minor identifier [I|L] with |I| = |L| >= 1 (1-based rows and columns).
struct MinorId {
  IndexSet rows;
  IndexSet cols;

  MinorId() = default;
  MinorId(IndexSet r, IndexSet c);

  std::size_t size() const { return rows.size(); }
  /// `[1,2|1,3]`
  std::string str() const;
  static MinorId parse(std::string_view text);

  MinorId transposed() const { return {cols, rows}; }

  friend bool operator==(const MinorId&, const MinorId&) = default;
  /// Canonical order: size, then rows lexicographic, then cols lexicographic.
  friend std::strong_ordering operator<=>(const MinorId& a, const MinorId& b) {
    if (auto c = a.size() <=> b.size(); c != 0) return c;
    if (auto c = a.rows <=> b.rows; c != 0) return c;
    return a.cols <=> b.cols;
  }
};

/// Bitmask form used by the dense minor tables: bit k-1 set iff k is in the set.
std::uint32_t to_mask(const IndexSet& s);
IndexSet from_mask(std::uint32_t mask);

/// Canonically ordered set of minors of an m x p matrix.
class MinorFamily {
 public:
  MinorFamily(int m, int p) : m_(m), p_(p) {}
  MinorFamily(int m, int p, std::vector<MinorId> members);

  int m() const { return m_; }
  int p() const { return p_; }
  const std::vector<MinorId>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  bool contains(const MinorId& id) const;
  void insert(const MinorId& id);
  bool is_subset_of(const MinorFamily& other) const;
  MinorFamily transposed() const;

  /// `{[1|3], [1,2|1,2]}`
  std::string str() const;
  /// Byte-stable canonical serialization, used for hashing and comparison.
  std::string canonical() const;
  std::uint64_t hash() const;

  friend bool operator==(const MinorFamily&, const MinorFamily&) = default;

 private:
  void check(const MinorId& id) const;

  int m_;
  int p_;
  std::vector<MinorId> members_;
};

/// All C(m+p, m) - 1 nonempty minors in canonical order.
std::vector<MinorId> all_minor_ids(int m, int p);
MinorFamily all_minors_family(int m, int p);

void check_minor_bounds(int rows, int cols, const MinorId& id);

template <typename T>
Matrix<T> submatrix(const Matrix<T>& m, const MinorId& id) {
  check_minor_bounds(m.rows(), m.cols(), id);
  std::vector<T> data;
  data.reserve(id.size() * id.size());
  for (int r : id.rows)
    for (int c : id.cols) data.push_back(m(r - 1, c - 1));
  return Matrix<T>(static_cast<int>(id.size()), static_cast<int>(id.size()), std::move(data));
}

template <EntryDomain T>
T eval_minor(const Matrix<T>& m, const MinorId& id) {
  return det_exact(submatrix(m, id));
}

/// Every nonempty minor of m, computed by first-row Laplace expansion with
/// all smaller minors shared. Indexed by (row mask, column mask).
template <EntryDomain T>
class MinorTable {
 public:
  explicit MinorTable(const Matrix<T>& m) : rows_(m.rows()), cols_(m.cols()) {
    if (rows_ < 1 || cols_ < 1 || rows_ > 16 || cols_ > 16) throw std::invalid_argument("MinorTable: bad size");
    values_.resize(std::size_t{1} << (rows_ + cols_));
    const int k_max = std::min(rows_, cols_);
    for (int k = 1; k <= k_max; ++k) {
      for_masks(rows_, k, [&](std::uint32_t rm) {
        for_masks(cols_, k, [&](std::uint32_t cm) {
          const int r0 = __builtin_ctz(rm);
          if (k == 1) {
            values_[key(rm, cm)] = m(r0, __builtin_ctz(cm));
            return;
          }
          const std::uint32_t rest = rm & (rm - 1);
          T sum = zero_like(m(0, 0));
          int sign_pos = 0;
          for (std::uint32_t cs = cm; cs; cs &= cs - 1, ++sign_pos) {
            const int c = __builtin_ctz(cs);
            if (is_zero(m(r0, c))) continue;
            const T& sub = *values_[key(rest, cm & ~(1U << c))];
            if (is_zero(sub)) continue;
            T term = m(r0, c) * sub;
            if (sign_pos % 2 == 0) {
              sum = sum + term;
            } else {
              sum = sum - term;
            }
          }
          values_[key(rm, cm)] = std::move(sum);
        });
      });
    }
  }

  const T& operator()(const MinorId& id) const {
    check_minor_bounds(rows_, cols_, id);
    return *values_[key(to_mask(id.rows), to_mask(id.cols))];
  }
  const T& at_masks(std::uint32_t rm, std::uint32_t cm) const { return *values_[key(rm, cm)]; }

 private:
  std::size_t key(std::uint32_t rm, std::uint32_t cm) const { return (std::size_t{rm} << cols_) | cm; }

  template <typename Fn>
  static void for_masks(int n, int k, Fn&& fn) {
    // Gosper's hack over k-subsets of n bits.
    std::uint32_t s = (1U << k) - 1;
    const std::uint32_t limit = 1U << n;
    while (s < limit) {
      fn(s);
      const std::uint32_t c = s & -s;
      const std::uint32_t r = s + c;
      s = (((r ^ s) >> 2) / c) | r;
    }
  }

  int rows_;
  int cols_;
  std::vector<std::optional<T>> values_;
};

template <EntryDomain T>
MinorFamily vanishing_family(const Matrix<T>& m) {
  const MinorTable<T> table(m);
  std::vector<MinorId> out;
  for (MinorId& id : all_minor_ids(m.rows(), m.cols()))
    if (is_zero(table(id))) out.push_back(std::move(id));
  return MinorFamily(m.rows(), m.cols(), std::move(out));
}

/// Symbolic vanishing family. A minor whose value at a random nonzero point
/// is nonzero is certified nonzero; only the remaining candidates are
/// expanded symbolically. Exact: no minor is declared zero without symbolic
/// confirmation.
MinorFamily vanishing_family_symbolic(const LaurentMatrix& m, std::uint64_t seed = 0x5eed);

}  // namespace tnn
