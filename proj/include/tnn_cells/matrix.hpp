#pragma once

#include <concepts>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "tnn_cells/laurent.hpp"
#include "tnn_cells/rational.hpp"

namespace tnn {

/// Dense row-major matrix with value semantics. Indices are 0-based; the
/// minor and restoration APIs translate from the 1-based (i, alpha) labels.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols, const T& fill) : rows_(rows), cols_(cols), data_(checked_size(rows, cols), fill) {}
  Matrix(int rows, int cols, std::vector<T> data) : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != checked_size(rows, cols)) throw std::invalid_argument("matrix data size mismatch");
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  T& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  const T& operator()(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  T& at(int r, int c) {
    bounds(r, c);
    return (*this)(r, c);
  }
  const T& at(int r, int c) const {
    bounds(r, c);
    return (*this)(r, c);
  }

  const std::vector<T>& data() const { return data_; }

  Matrix transposed() const {
    std::vector<T> out;
    out.reserve(data_.size());
    for (int c = 0; c < cols_; ++c)
      for (int r = 0; r < rows_; ++r) out.push_back((*this)(r, c));
    return Matrix(cols_, rows_, std::move(out));
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  static std::size_t checked_size(int rows, int cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
    return static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols);
  }
  void bounds(int r, int c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_) {
      throw std::out_of_range("matrix index (" + std::to_string(r) + "," + std::to_string(c) + ") out of range");
    }
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<T> data_;
};

using RationalMatrix = Matrix<Rational>;
using LaurentMatrix = Matrix<LaurentPoly>;

// Entry-domain operations. Both domains are integral domains with a
// decidable zero test; generic algorithms go through these overloads only.

inline bool is_zero(const Rational& x) { return x.is_zero(); }
inline bool is_zero(const LaurentPoly& x) { return x.is_zero(); }

inline Rational zero_like(const Rational&) { return Rational(0); }
inline LaurentPoly zero_like(const LaurentPoly& x) { return LaurentPoly(x.registry()); }

inline Rational one_like(const Rational&) { return Rational(1); }
inline LaurentPoly one_like(const LaurentPoly& x) { return LaurentPoly::constant(x.registry(), Rational(1)); }

/// a / b where b is known to divide a. Over Rational this is field division.
inline Rational div_exact(const Rational& a, const Rational& b) { return a / b; }
inline LaurentPoly div_exact(const LaurentPoly& a, const LaurentPoly& b) { return laurent_div_exact(a, b); }

template <typename T>
concept EntryDomain = requires(const T& a, const T& b) {
  { a + b } -> std::convertible_to<T>;
  { a - b } -> std::convertible_to<T>;
  { a * b } -> std::convertible_to<T>;
  { -a } -> std::convertible_to<T>;
  { is_zero(a) } -> std::convertible_to<bool>;
  { zero_like(a) } -> std::convertible_to<T>;
  { one_like(a) } -> std::convertible_to<T>;
  { div_exact(a, b) } -> std::convertible_to<T>;
};

RationalMatrix rational_matrix(std::initializer_list<std::initializer_list<long>> rows);

/// All-symbolic matrix: entry (i,a) is the indeterminate t[i,a].
LaurentMatrix generic_symbolic_matrix(int rows, int cols);

/// Rational matrix with every entry of a Laurent matrix evaluated at `values`.
RationalMatrix evaluate(const LaurentMatrix& m, std::span<const Rational> values);

std::string to_string(const RationalMatrix& m);

}  // namespace tnn
