#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tnn_cells/combinat.hpp"
#include "tnn_cells/matrix.hpp"
#include "tnn_cells/minors.hpp"

namespace tnn {

/// A step (j, beta) of the restoration / deletion algorithms, 1-based.
struct StepIndex {
  int j = 1;
  int beta = 2;

  std::string str() const { return "(" + std::to_string(j) + "," + std::to_string(beta) + ")"; }
  friend auto operator<=>(const StepIndex&, const StepIndex&) = default;
};

/// E in increasing lexicographic order: (1,2), ..., (m,p), (m,p+1).
std::vector<StepIndex> trace_steps(int m, int p);
/// E without its last element (the steps that actually act).
std::vector<StepIndex> active_steps(int m, int p);
/// The lexicographic successor of r inside E. Throws for r outside E without (m,p+1).
StepIndex successor(StepIndex r, int m, int p);
bool is_active_step(StepIndex r, int m, int p);

namespace detail {

template <EntryDomain T>
Matrix<T> apply_step(const Matrix<T>& x, StepIndex r, bool restore) {
  if (!is_active_step(r, x.rows(), x.cols())) {
    throw std::invalid_argument("step " + r.str() + " is not an active step for this size");
  }
  const int j = r.j - 1;
  const int b = r.beta - 1;
  const T& u = x(j, b);
  if (is_zero(u)) return x;
  Matrix<T> out = x;
  for (int i = 0; i < j; ++i) {
    if (is_zero(x(i, b))) continue;
    for (int a = 0; a < b; ++a) {
      if (is_zero(x(j, a))) continue;
      T corr = div_exact(x(i, b) * x(j, a), u);
      out(i, a) = restore ? x(i, a) + corr : x(i, a) - corr;
    }
  }
  return out;
}

}  // namespace detail

/// X^{(r)} -> X^{(r+)}: for i < j, a < beta, x_{i,a} += x_{i,beta} u^{-1} x_{j,a}
/// with pivot u = x_{j,beta}; identity when u = 0.
template <EntryDomain T>
Matrix<T> restore_step(const Matrix<T>& x, StepIndex r) {
  return detail::apply_step(x, r, true);
}

/// X^{(r+)} -> X^{(r)}: the same update with subtraction.
template <EntryDomain T>
Matrix<T> delete_step(const Matrix<T>& x, StepIndex r) {
  return detail::apply_step(x, r, false);
}

/// X^{(r)} for every r in E, stored in increasing step order.
template <typename T>
class MatrixTrace {
 public:
  MatrixTrace(int m, int p) : m_(m), p_(p), steps_(trace_steps(m, p)), mats_(steps_.size()) {}

  int m() const { return m_; }
  int p() const { return p_; }
  const std::vector<StepIndex>& steps() const { return steps_; }
  std::size_t size() const { return steps_.size(); }

  const Matrix<T>& at(StepIndex r) const { return mats_[position(r)]; }
  Matrix<T>& at(StepIndex r) { return mats_[position(r)]; }
  const Matrix<T>& by_position(std::size_t k) const { return mats_[k]; }

  /// X^{(1,2)}
  const Matrix<T>& initial() const { return mats_.front(); }
  /// X^{(m,p+1)}
  const Matrix<T>& final() const { return mats_.back(); }

  friend bool operator==(const MatrixTrace& a, const MatrixTrace& b) {
    return a.m_ == b.m_ && a.p_ == b.p_ && a.mats_ == b.mats_;
  }

 private:
  std::size_t position(StepIndex r) const {
    for (std::size_t k = 0; k < steps_.size(); ++k)
      if (steps_[k] == r) return k;
    throw std::out_of_range("step " + r.str() + " not in trace");
  }

  int m_;
  int p_;
  std::vector<StepIndex> steps_;
  std::vector<Matrix<T>> mats_;
};

template <EntryDomain T>
MatrixTrace<T> restore(const Matrix<T>& x) {
  MatrixTrace<T> trace(x.rows(), x.cols());
  trace.at(StepIndex{1, 2}) = x;
  const auto& steps = trace.steps();
  for (std::size_t k = 0; k + 1 < steps.size(); ++k) {
    trace.at(steps[k + 1]) = restore_step(trace.by_position(k), steps[k]);
  }
  return trace;
}

template <EntryDomain T>
MatrixTrace<T> delete_derivations(const Matrix<T>& x_bar) {
  MatrixTrace<T> trace(x_bar.rows(), x_bar.cols());
  const auto& steps = trace.steps();
  trace.at(steps.back()) = x_bar;
  for (std::size_t k = steps.size() - 1; k > 0; --k) {
    trace.at(steps[k - 1]) = delete_step(trace.by_position(k), steps[k - 1]);
  }
  return trace;
}

template <EntryDomain T>
Matrix<T> restored(const Matrix<T>& x) {
  return restore(x).final();
}

/// Bitmask of zero entries (row-major, same layout as CauchonDiagram).
template <EntryDomain T>
std::uint64_t zero_mask(const Matrix<T>& x) {
  check_grid_size(x.rows(), x.cols());
  std::uint64_t mask = 0;
  for (int i = 0; i < x.rows(); ++i)
    for (int a = 0; a < x.cols(); ++a)
      if (is_zero(x(i, a))) mask |= 1ULL << (i * x.cols() + a);
  return mask;
}

/// True iff the zero pattern of x is a Cauchon diagram.
template <EntryDomain T>
bool is_cauchon_matrix(const Matrix<T>& x) {
  return is_cauchon_mask(x.rows(), x.cols(), zero_mask(x));
}

/// The diagram of a Cauchon matrix; std::nullopt if the zero pattern is not one.
template <EntryDomain T>
std::optional<CauchonDiagram> diagram_of(const Matrix<T>& x) {
  const std::uint64_t mask = zero_mask(x);
  if (!is_cauchon_mask(x.rows(), x.cols(), mask)) return std::nullopt;
  return CauchonDiagram(x.rows(), x.cols(), mask);
}

/// Lower-right corner (i_l, alpha_l) of a minor, compared lexicographically.
inline StepIndex corner(const MinorId& id) { return {id.rows.back(), id.cols.back()}; }

struct HInvarianceViolation {
  StepIndex step;
  MinorId minor;
};

/// First (step, minor) where delta^{(r+)} = 0 but delta^{(r)} != 0 with
/// corner(delta) < r, scanning steps in increasing order and minors in
/// canonical order; std::nullopt when X is H-invariant.
template <EntryDomain T>
std::optional<HInvarianceViolation> find_h_invariance_violation(const MatrixTrace<T>& trace) {
  const auto& steps = trace.steps();
  const std::vector<MinorId> ids = all_minor_ids(trace.m(), trace.p());
  std::optional<MinorTable<T>> before(std::in_place, trace.by_position(0));
  for (std::size_t k = 0; k + 1 < steps.size(); ++k) {
    MinorTable<T> after(trace.by_position(k + 1));
    for (const MinorId& id : ids) {
      if (!(corner(id) < steps[k])) continue;
      if (is_zero(after(id)) && !is_zero((*before)(id))) return HInvarianceViolation{steps[k], id};
    }
    before.emplace(std::move(after));
  }
  return std::nullopt;
}

template <EntryDomain T>
bool is_h_invariant(const Matrix<T>& x) {
  return !find_h_invariance_violation(restore(x)).has_value();
}

std::string trace_to_string(const MatrixTrace<Rational>& trace);

}  // namespace tnn
