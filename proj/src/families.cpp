#include "tnn_cells/families.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "tnn_cells/det.hpp"

namespace tnn {

namespace {

// Is there a k-subset L of `pool` (ascending) whose t-th element passes
// allowed(t, value) and for which pred(L) holds? Elements are chosen in
// ascending order, so `allowed` prunes with the componentwise bound.
bool exists_subset(const std::vector<int>& pool, std::size_t k, const std::function<bool(std::size_t, int)>& allowed,
                   const std::function<bool(const std::vector<int>&)>& pred) {
  std::vector<int> pick;
  pick.reserve(k);
  std::function<bool(std::size_t)> go = [&](std::size_t from) -> bool {
    if (pick.size() == k) return pred(pick);
    const std::size_t need = k - pick.size();
    for (std::size_t idx = from; idx + need <= pool.size(); ++idx) {
      if (!allowed(pick.size(), pool[idx])) continue;
      pick.push_back(pool[idx]);
      if (go(idx + 1)) return true;
      pick.pop_back();
    }
    return false;
  };
  return go(0);
}

bool sorted_leq(const std::vector<int>& a, std::vector<int> b) {
  std::sort(b.begin(), b.end());
  for (std::size_t t = 0; t < a.size(); ++t)
    if (a[t] > b[t]) return false;
  return true;
}

bool sorted_geq(const std::vector<int>& a, std::vector<int> b) {
  std::sort(b.begin(), b.end());
  for (std::size_t t = 0; t < a.size(); ++t)
    if (a[t] < b[t]) return false;
  return true;
}

template <typename Fn>
std::vector<int> image(const std::vector<int>& L, Fn&& f) {
  std::vector<int> out;
  out.reserve(L.size());
  for (int l : L) out.push_back(f(l));
  return out;
}

int ones_in(const Matrix<int>& m, int r0, int r1, int c0, int c1) {
  int n = 0;
  for (int r = r0; r <= r1; ++r)
    for (int c = c0; c <= c1; ++c) n += m(r - 1, c - 1);
  return n;
}

RationalMatrix block(const RationalMatrix& x, int r0, int r1, int c0, int c1) {
  std::vector<Rational> data;
  for (int r = r0; r <= r1; ++r)
    for (int c = c0; c <= c1; ++c) data.push_back(x(r - 1, c - 1));
  return RationalMatrix(r1 - r0 + 1, c1 - c0 + 1, std::move(data));
}

}  // namespace

// ------------------------------------------------------- PartialPermutation

PartialPermutation::PartialPermutation(int rows, int cols, std::vector<int> assignment)
    : rows_(rows), cols_(cols), a_(std::move(assignment)) {
  if (rows < 0 || cols < 0 || static_cast<int>(a_.size()) != cols) {
    throw std::invalid_argument("partial permutation: assignment length must equal column count");
  }
  std::vector<bool> seen(static_cast<std::size_t>(rows) + 1, false);
  for (int v : a_) {
    if (v == 0) continue;
    if (v < 0 || v > rows || seen[v]) throw std::invalid_argument("partial permutation is not injective");
    seen[v] = true;
  }
}

PartialPermutation PartialPermutation::from_matrix(const Matrix<int>& m) {
  std::vector<int> a(static_cast<std::size_t>(m.cols()), 0);
  for (int c = 0; c < m.cols(); ++c) {
    for (int r = 0; r < m.rows(); ++r) {
      if (m(r, c) == 0) continue;
      if (m(r, c) != 1 || a[c] != 0) throw std::invalid_argument("not a partial permutation matrix");
      a[c] = r + 1;
    }
  }
  return {m.rows(), m.cols(), std::move(a)};
}

std::vector<PartialPermutation> PartialPermutation::all(int rows, int cols) {
  std::vector<PartialPermutation> out;
  std::vector<int> a(static_cast<std::size_t>(cols), 0);
  std::vector<bool> used(static_cast<std::size_t>(rows) + 1, false);
  std::function<void(int)> go = [&](int j) {
    if (j == cols) {
      out.emplace_back(rows, cols, a);
      return;
    }
    for (int v = 0; v <= rows; ++v) {
      if (v > 0 && used[v]) continue;
      a[j] = v;
      if (v > 0) used[v] = true;
      go(j + 1);
      if (v > 0) used[v] = false;
    }
    a[j] = 0;
  };
  go(0);
  return out;
}

std::vector<int> PartialPermutation::domain() const {
  std::vector<int> d;
  for (int j = 1; j <= cols_; ++j)
    if (defined(j)) d.push_back(j);
  return d;
}

std::vector<int> PartialPermutation::range() const {
  std::vector<int> r;
  for (int v : a_)
    if (v) r.push_back(v);
  std::sort(r.begin(), r.end());
  return r;
}

int PartialPermutation::rank() const {
  return static_cast<int>(std::count_if(a_.begin(), a_.end(), [](int v) { return v != 0; }));
}

PartialPermutation PartialPermutation::inverse() const {
  std::vector<int> inv(static_cast<std::size_t>(rows_), 0);
  for (int j = 1; j <= cols_; ++j)
    if (defined(j)) inv[a_[j - 1] - 1] = j;
  return {cols_, rows_, std::move(inv)};
}

Matrix<int> PartialPermutation::matrix() const {
  Matrix<int> m(rows_, cols_, 0);
  for (int j = 1; j <= cols_; ++j)
    if (defined(j)) m(a_[j - 1] - 1, j - 1) = 1;
  return m;
}

RationalMatrix PartialPermutation::rational_matrix() const {
  RationalMatrix m(rows_, cols_, Rational(0));
  for (int j = 1; j <= cols_; ++j)
    if (defined(j)) m(a_[j - 1] - 1, j - 1) = Rational(1);
  return m;
}

std::string PartialPermutation::str() const {
  std::ostringstream os;
  os << rows_ << "x" << cols_ << "[";
  for (std::size_t k = 0; k < a_.size(); ++k) os << (k ? "," : "") << a_[k];
  os << "]";
  return os.str();
}

// ------------------------------------------------------ Bruhat cell predicates

bool bruhat_cell_vanishes(const PartialPermutation& w, const MinorId& id, BorelSide side) {
  check_minor_bounds(w.rows(), w.cols(), id);
  const std::vector<int>& I = id.rows.values();
  const std::vector<int>& L = id.cols.values();
  if (side == BorelSide::plus) {
    return !exists_subset(
        w.domain(), I.size(), [&](std::size_t t, int v) { return v <= L[t]; },
        [&](const std::vector<int>& S) { return sorted_leq(I, image(S, [&](int j) { return w(j); })); });
  }
  const PartialPermutation inv = w.inverse();
  return !exists_subset(
      w.range(), I.size(), [&](std::size_t t, int v) { return v <= I[t]; },
      [&](const std::vector<int>& S) { return sorted_leq(L, image(S, [&](int i) { return inv(i); })); });
}

bool bruhat_cell_vanishes_dual(const PartialPermutation& w, const MinorId& id, BorelSide side) {
  check_minor_bounds(w.rows(), w.cols(), id);
  const std::vector<int>& I = id.rows.values();
  const std::vector<int>& L = id.cols.values();
  const PartialPermutation inv = w.inverse();
  if (side == BorelSide::plus) {
    return !exists_subset(
        w.range(), I.size(), [&](std::size_t t, int v) { return v >= I[t]; },
        [&](const std::vector<int>& S) { return sorted_geq(L, image(S, [&](int i) { return inv(i); })); });
  }
  return !exists_subset(
      w.domain(), I.size(), [&](std::size_t t, int v) { return v >= L[t]; },
      [&](const std::vector<int>& S) { return sorted_geq(I, image(S, [&](int j) { return w(j); })); });
}

PartialPermutation w11_flipped(const RestrictedPermutation& w) {
  const int m = w.m();
  std::vector<int> a(static_cast<std::size_t>(w.p()), 0);
  for (int j = 1; j <= w.p(); ++j)
    if (w(j) <= m) a[j - 1] = m + 1 - w(j);
  return {m, w.p(), std::move(a)};
}

PartialPermutation w22t_flipped(const RestrictedPermutation& w) {
  const int m = w.m();
  const int n = w.n();
  std::vector<int> a(static_cast<std::size_t>(w.p()), 0);
  for (int i = 1; i <= m; ++i) {
    const int v = w(n + 1 - i);
    if (v > m) a[v - m - 1] = i;
  }
  return {m, w.p(), std::move(a)};
}

// ---------------------------------------------------------------------- M(w)

MwConditions mw_conditions(const RestrictedPermutation& w, const MinorId& id) {
  const int m = w.m();
  const int p = w.p();
  const int n = w.n();
  check_minor_bounds(m, p, id);
  const std::vector<int>& I = id.rows.values();
  const std::vector<int>& L = id.cols.values();
  MwConditions out;

  std::vector<int> d1;
  for (int l = 1; l <= p; ++l)
    if (w(l) <= m) d1.push_back(l);
  out.c1 = !exists_subset(
      d1, I.size(), [&](std::size_t t, int v) { return v <= L[t]; },
      [&](const std::vector<int>& S) { return sorted_leq(I, image(S, [&](int l) { return m + 1 - w(l); })); });

  std::vector<int> d2;
  for (int l = 1; l <= m; ++l)
    if (w(n + 1 - l) >= m + 1) d2.push_back(l);
  std::vector<int> shifted;
  for (int v : L) shifted.push_back(m + v);
  out.c2 = !exists_subset(
      d2, L.size(), [&](std::size_t t, int v) { return v <= I[t]; },
      [&](const std::vector<int>& S) { return sorted_leq(shifted, image(S, [&](int l) { return w(n + 1 - l); })); });

  for (int r = 1; r <= p && !out.c3; ++r) {
    for (int s = r; s <= p && !out.c3; ++s) {
      int hit = 0;
      for (int v : L) hit += (v >= r && v <= s);
      int free_slots = 0;
      for (int j = r; j <= s; ++j) free_slots += !(w(j) >= m + r && w(j) <= m + s);
      out.c3 = hit > free_slots;
    }
  }

  for (int r = 1; r <= m && !out.c4; ++r) {
    for (int s = r; s <= m && !out.c4; ++s) {
      int hit = 0;
      for (int v : I) hit += (v >= r && v <= s);
      int free_slots = 0;
      for (int j = n + 1 - s; j <= n + 1 - r; ++j) free_slots += !(w(j) >= m + 1 - s && w(j) <= m + 1 - r);
      out.c4 = hit > free_slots;
    }
  }
  return out;
}

MinorFamily compute_Mw(const RestrictedPermutation& w) {
  std::vector<MinorId> out;
  for (MinorId& id : all_minor_ids(w.m(), w.p()))
    if (mw_conditions(w, id).any()) out.push_back(std::move(id));
  return MinorFamily(w.m(), w.p(), std::move(out));
}

MinorFamily compute_Mw_type(const RestrictedPermutation& w, int type) {
  if (type < 1 || type > 4) throw std::invalid_argument("minor type must be 1..4");
  std::vector<MinorId> out;
  for (MinorId& id : all_minor_ids(w.m(), w.p())) {
    const MwConditions c = mw_conditions(w, id);
    const bool hit = type == 1 ? c.c1 : type == 2 ? c.c2 : type == 3 ? c.c3 : c.c4;
    if (hit) out.push_back(std::move(id));
  }
  return MinorFamily(w.m(), w.p(), std::move(out));
}

// ---------------------------------------------------------- rank conditions

RankProfile rank_profile(const RationalMatrix& x) {
  const int m = x.rows();
  const int p = x.cols();
  RankProfile rp{Matrix<int>(m, p, 0), Matrix<int>(m, p, 0), Matrix<int>(p, p, 0), Matrix<int>(m, m, 0)};
  for (int r = 1; r <= m; ++r) {
    for (int s = 1; s <= p; ++s) {
      rp.cond1(r - 1, s - 1) = rank(block(x, r, m, 1, s));
      rp.cond2(r - 1, s - 1) = rank(block(x, 1, r, s, p));
    }
  }
  for (int r = 1; r <= p; ++r)
    for (int s = r; s <= p; ++s) rp.cond3(r - 1, s - 1) = rank(block(x, 1, m, r, s));
  for (int r = 1; r <= m; ++r)
    for (int s = r; s <= m; ++s) rp.cond4(r - 1, s - 1) = rank(block(x, r, s, 1, p));
  return rp;
}

bool closure_rank_conditions(const RestrictedPermutation& w, const RationalMatrix& x) {
  const int m = w.m();
  const int p = w.p();
  const int n = w.n();
  if (x.rows() != m || x.cols() != p) throw std::invalid_argument("closure_rank_conditions: x must be m x p");
  const RankProfile rp = rank_profile(x);
  const Matrix<int> f11 = w11_flipped(w).matrix();
  const Matrix<int> f22 = w22t_flipped(w).matrix();
  Matrix<int> w21(p, p, 0);
  for (int b = 1; b <= p; ++b)
    if (w(b) > m) w21(w(b) - m - 1, b - 1) = 1;
  Matrix<int> w12f(m, m, 0);  // (w_o^m w12 w_o^m)[a,b] = [w(N+1-b) = m+1-a]
  for (int b = 1; b <= m; ++b) {
    const int v = w(n + 1 - b);
    if (v <= m) w12f(m - v, b - 1) = 1;
  }

  for (int r = 1; r <= m; ++r) {
    for (int s = 1; s <= p; ++s) {
      if (rp.cond1(r - 1, s - 1) > ones_in(f11, r, m, 1, s)) return false;
      if (rp.cond2(r - 1, s - 1) > ones_in(f22, 1, r, s, p)) return false;
    }
  }
  for (int r = 1; r <= p; ++r)
    for (int s = r; s <= p; ++s)
      if (rp.cond3(r - 1, s - 1) > s + 1 - r - ones_in(w21, r, p, r, s)) return false;
  for (int r = 1; r <= m; ++r)
    for (int s = r; s <= m; ++s)
      if (rp.cond4(r - 1, s - 1) > s + 1 - r - ones_in(w12f, r, s, 1, s)) return false;
  return true;
}

RationalMatrix witness_matrix(int m, int p, const MinorId& id) {
  check_minor_bounds(m, p, id);
  RationalMatrix x(m, p, Rational(0));
  for (std::size_t k = 0; k < id.size(); ++k) x(id.rows[k] - 1, id.cols[k] - 1) = Rational(1);
  return x;
}

}  // namespace tnn
