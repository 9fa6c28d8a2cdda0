#include "tnn_cells/matrix.hpp"

#include <sstream>

#include "tnn_cells/det.hpp"

namespace tnn {

RationalMatrix rational_matrix(std::initializer_list<std::initializer_list<long>> rows) {
  const int r = static_cast<int>(rows.size());
  const int c = r == 0 ? 0 : static_cast<int>(rows.begin()->size());
  std::vector<Rational> data;
  data.reserve(static_cast<std::size_t>(r) * c);
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != c) throw std::invalid_argument("ragged matrix literal");
    for (long v : row) data.emplace_back(v);
  }
  return RationalMatrix(r, c, std::move(data));
}

LaurentMatrix generic_symbolic_matrix(int rows, int cols) {
  const Registry reg{rows, cols};
  std::vector<LaurentPoly> data;
  data.reserve(static_cast<std::size_t>(rows) * cols);
  for (int i = 1; i <= rows; ++i)
    for (int a = 1; a <= cols; ++a) data.push_back(LaurentPoly::variable(reg, i, a));
  return LaurentMatrix(rows, cols, std::move(data));
}

RationalMatrix evaluate(const LaurentMatrix& m, std::span<const Rational> values) {
  std::vector<Rational> data;
  data.reserve(m.data().size());
  for (const LaurentPoly& p : m.data()) data.push_back(p.evaluate(values));
  return RationalMatrix(m.rows(), m.cols(), std::move(data));
}

std::string to_string(const RationalMatrix& m) {
  std::ostringstream os;
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) os << (c ? "," : "") << m(r, c).str();
    os << "\n";
  }
  return os.str();
}

int rank(const RationalMatrix& m) {
  RationalMatrix a = m;
  int rk = 0;
  Rational prev(1);
  for (int c = 0; c < a.cols() && rk < a.rows(); ++c) {
    int pivot = -1;
    for (int r = rk; r < a.rows(); ++r) {
      if (!a(r, c).is_zero()) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    for (int k = 0; k < a.cols(); ++k) std::swap(a(rk, k), a(pivot, k));
    for (int r = rk + 1; r < a.rows(); ++r) {
      for (int k = c + 1; k < a.cols(); ++k) a(r, k) = (a(r, k) * a(rk, c) - a(r, c) * a(rk, k)) / prev;
      a(r, c) = Rational(0);
    }
    prev = a(rk, c);
    ++rk;
  }
  return rk;
}

}  // namespace tnn
