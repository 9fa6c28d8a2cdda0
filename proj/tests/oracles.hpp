// Independent brute-force oracles. Nothing here calls the library's own
// enumeration, ordering or determinant code.
#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "tnn_cells/matrix.hpp"

namespace oracle {

// Left-or-above rule checked cell by cell on an explicit grid.
inline bool diagram_ok(int m, int p, const std::vector<std::vector<bool>>& black) {
  for (int i = 0; i < m; ++i) {
    for (int a = 0; a < p; ++a) {
      if (!black[i][a]) continue;
      bool left = true, above = true;
      for (int g = 0; g < a; ++g) left = left && black[i][g];
      for (int k = 0; k < i; ++k) above = above && black[k][a];
      if (!left && !above) return false;
    }
  }
  return true;
}

inline std::uint64_t count_diagrams_by_subsets(int m, int p) {
  const int cells = m * p;
  std::uint64_t n = 0;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << cells); ++s) {
    std::vector<std::vector<bool>> black(m, std::vector<bool>(p, false));
    for (int c = 0; c < cells; ++c) black[c / p][c % p] = (s >> c) & 1U;
    n += diagram_ok(m, p, black);
  }
  return n;
}

inline std::vector<std::vector<int>> restricted_perms_by_filter(int m, int p) {
  std::vector<int> w(m + p);
  std::iota(w.begin(), w.end(), 1);
  std::vector<std::vector<int>> out;
  do {
    bool ok = true;
    for (int i = 1; i <= m + p && ok; ++i) ok = (w[i - 1] - i >= -p) && (w[i - 1] - i <= m);
    if (ok) out.push_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

// Ryser's formula for the permanent of the 0/1 band matrix with
// A[i][j] = 1 iff -p <= j - i <= m.
inline long long band_permanent(int m, int p) {
  const int n = m + p;
  long long total = 0;
  for (std::uint32_t s = 1; s < (1U << n); ++s) {
    long long prod = 1;
    for (int i = 1; i <= n && prod; ++i) {
      long long row = 0;
      for (int j = 1; j <= n; ++j)
        if (((s >> (j - 1)) & 1U) && j - i >= -p && j - i <= m) ++row;
      prod *= row;
    }
    const int bits = __builtin_popcount(s);
    total += ((n - bits) % 2 == 0 ? 1 : -1) * prod;
  }
  return total;
}

// Bruhat order by the subword property: w <= z iff some subword of a fixed
// reduced word of z multiplies to w.
inline std::vector<int> reduced_word(std::vector<int> z) {
  // Bubble sort records adjacent transpositions s_k (swap positions k, k+1).
  std::vector<int> word;
  const int n = static_cast<int>(z.size());
  for (bool swapped = true; swapped;) {
    swapped = false;
    for (int k = 0; k + 1 < n; ++k) {
      if (z[k] > z[k + 1]) {
        std::swap(z[k], z[k + 1]);
        word.push_back(k);
        swapped = true;
      }
    }
  }
  std::reverse(word.begin(), word.end());
  return word;  // z = s_{word[0]} ... s_{word[last]} acting on positions
}

inline std::set<std::vector<int>> subword_products(const std::vector<int>& word, int n) {
  std::set<std::vector<int>> out;
  const std::size_t len = word.size();
  for (std::uint32_t s = 0; s < (1U << len); ++s) {
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    for (std::size_t t = 0; t < len; ++t)
      if ((s >> t) & 1U) std::swap(w[word[t]], w[word[t] + 1]);
    out.insert(w);
  }
  return out;
}

inline bool bruhat_leq_subword(const std::vector<int>& w, const std::vector<int>& z) {
  return subword_products(reduced_word(z), static_cast<int>(z.size())).count(w) > 0;
}

// Schoolbook determinant by the Leibniz permutation sum.
inline tnn::Rational leibniz_det(const tnn::RationalMatrix& a) {
  const int n = a.rows();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  tnn::Rational total(0);
  do {
    int inversions = 0;
    for (int x = 0; x < n; ++x)
      for (int y = x + 1; y < n; ++y) inversions += perm[x] > perm[y];
    tnn::Rational prod(1);
    for (int r = 0; r < n; ++r) prod *= a(r, perm[r]);
    total += inversions % 2 ? -prod : prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

inline tnn::Rational minor_of(const tnn::RationalMatrix& a, const std::vector<int>& rows, const std::vector<int>& cols) {
  std::vector<tnn::Rational> data;
  for (int r : rows)
    for (int c : cols) data.push_back(a(r - 1, c - 1));
  const int k = static_cast<int>(rows.size());
  return leibniz_det(tnn::RationalMatrix(k, k, std::move(data)));
}

inline tnn::RationalMatrix random_int_matrix(std::mt19937_64& rng, int rows, int cols, long lo, long hi) {
  std::uniform_int_distribution<long> d(lo, hi);
  tnn::RationalMatrix out(rows, cols, tnn::Rational(0));
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) out(r, c) = tnn::Rational(d(rng));
  return out;
}

// Matrix product a * b.
inline tnn::RationalMatrix mul(const tnn::RationalMatrix& a, const tnn::RationalMatrix& b) {
  tnn::RationalMatrix out(a.rows(), b.cols(), tnn::Rational(0));
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j)
      for (int k = 0; k < a.cols(); ++k) out(i, j) += a(i, k) * b(k, j);
  return out;
}

// Random invertible triangular matrix with nonzero diagonal.
inline tnn::RationalMatrix random_triangular(std::mt19937_64& rng, int n, bool upper) {
  std::uniform_int_distribution<long> d(-5, 5);
  std::uniform_int_distribution<long> diag(1, 5);
  tnn::RationalMatrix out(n, n, tnn::Rational(0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) {
        out(i, j) = tnn::Rational(diag(rng) * (d(rng) < 0 ? -1 : 1));
      } else if ((i < j) == upper) {
        out(i, j) = tnn::Rational(d(rng));
      }
    }
  }
  return out;
}

}  // namespace oracle
