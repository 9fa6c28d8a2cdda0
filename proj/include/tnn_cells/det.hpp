#pragma once

#include <stdexcept>
#include <utility>

#include "tnn_cells/matrix.hpp"

namespace tnn {

/// Laplace expansion along the first row. Exponential; used as a fallback and
/// as a test oracle.
template <EntryDomain T>
T det_cofactor(const Matrix<T>& m) {
  if (!m.is_square()) throw std::invalid_argument("determinant of non-square matrix");
  const int n = m.rows();
  if (n == 0) throw std::invalid_argument("determinant of empty matrix needs an explicit domain");
  if (n == 1) return m(0, 0);
  if (n == 2) return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  T sum = zero_like(m(0, 0));
  for (int c = 0; c < n; ++c) {
    if (is_zero(m(0, c))) continue;
    std::vector<T> sub;
    sub.reserve(static_cast<std::size_t>(n - 1) * (n - 1));
    for (int r = 1; r < n; ++r)
      for (int k = 0; k < n; ++k)
        if (k != c) sub.push_back(m(r, k));
    T term = m(0, c) * det_cofactor(Matrix<T>(n - 1, n - 1, std::move(sub)));
    if (c % 2 == 0) {
      sum = sum + term;
    } else {
      sum = sum - term;
    }
  }
  return sum;
}

/// Fraction-free (Bareiss) elimination. Every division is exact in an
/// integral domain; a zero pivot is handled by a row swap, and a column with
/// no nonzero pivot gives determinant zero. Throws InexactDivision if an
/// exact division fails (impossible over a field).
template <EntryDomain T>
T det_bareiss(Matrix<T> a) {
  if (!a.is_square()) throw std::invalid_argument("determinant of non-square matrix");
  const int n = a.rows();
  if (n == 0) throw std::invalid_argument("determinant of empty matrix needs an explicit domain");
  bool negate = false;
  T prev = one_like(a(0, 0));
  for (int k = 0; k < n - 1; ++k) {
    if (is_zero(a(k, k))) {
      int swap_row = -1;
      for (int r = k + 1; r < n; ++r) {
        if (!is_zero(a(r, k))) {
          swap_row = r;
          break;
        }
      }
      if (swap_row < 0) return zero_like(a(0, 0));
      for (int c = 0; c < n; ++c) std::swap(a(k, c), a(swap_row, c));
      negate = !negate;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        a(i, j) = div_exact(a(i, j) * a(k, k) - a(i, k) * a(k, j), prev);
      }
    }
    prev = a(k, k);
  }
  T d = a(n - 1, n - 1);
  return negate ? -d : d;
}

inline Rational det_exact(const RationalMatrix& m) { return det_bareiss(m); }

/// Bareiss first; cofactor expansion if a pivot division turns out inexact.
inline LaurentPoly det_exact(const LaurentMatrix& m) {
  try {
    return det_bareiss(m);
  } catch (const InexactDivision&) {
    return det_cofactor(m);
  }
}

/// Rank over Q by fraction-free elimination.
int rank(const RationalMatrix& m);

}  // namespace tnn
