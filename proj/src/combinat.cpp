#include "tnn_cells/combinat.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace tnn {

namespace {

struct GridMasks {
  std::vector<std::uint64_t> left;   // cells strictly left of each cell
  std::vector<std::uint64_t> above;  // cells strictly above each cell
};

GridMasks grid_masks(int m, int p) {
  GridMasks g;
  g.left.assign(static_cast<std::size_t>(m * p), 0);
  g.above.assign(static_cast<std::size_t>(m * p), 0);
  for (int i = 1; i <= m; ++i) {
    for (int a = 1; a <= p; ++a) {
      const int b = CauchonDiagram::bit(p, i, a);
      for (int g2 = 1; g2 < a; ++g2) g.left[b] |= 1ULL << CauchonDiagram::bit(p, i, g2);
      for (int k = 1; k < i; ++k) g.above[b] |= 1ULL << CauchonDiagram::bit(p, k, a);
    }
  }
  return g;
}

std::uint64_t full_mask(int cells) { return cells == 64 ? ~0ULL : ((1ULL << cells) - 1); }

// Depth-first over cells from the most significant bit down, white before
// black, so complete diagrams come out in ascending mask order. A black cell
// is dead as soon as both its left run and its upper run contain a decided
// white cell.
class DiagramWalker {
 public:
  DiagramWalker(int m, int p) : m_(m), p_(p), masks_(grid_masks(m, p)) {}

  template <typename Visit>
  void run(Visit&& visit) {
    walk(m_ * p_ - 1, 0, 0, visit);
  }

 private:
  bool dead(std::uint64_t decided, std::uint64_t black) const {
    const std::uint64_t white = decided & ~black;
    for (std::uint64_t rest = black; rest; rest &= rest - 1) {
      const int b = __builtin_ctzll(rest);
      if ((masks_.left[b] & white) && (masks_.above[b] & white)) return true;
    }
    return false;
  }

  template <typename Visit>
  void walk(int b, std::uint64_t decided, std::uint64_t black, Visit& visit) {
    if (b < 0) {
      visit(black);
      return;
    }
    const std::uint64_t here = 1ULL << b;
    if (!dead(decided | here, black)) walk(b - 1, decided | here, black, visit);
    if (!dead(decided | here, black | here)) walk(b - 1, decided | here, black | here, visit);
  }

  int m_;
  int p_;
  GridMasks masks_;
};

}  // namespace

void check_grid_size(int m, int p) {
  if (m < 1 || p < 1) throw std::invalid_argument("grid dimensions must be positive");
  if (m > CauchonDiagram::kMaxSide || p > CauchonDiagram::kMaxSide) {
    throw std::invalid_argument("grid larger than 8 x 8 is not supported");
  }
}

bool is_cauchon_mask(int m, int p, std::uint64_t black_mask) {
  check_grid_size(m, p);
  if (black_mask & ~full_mask(m * p)) return false;
  for (int i = 1; i <= m; ++i) {
    for (int a = 1; a <= p; ++a) {
      if (!((black_mask >> CauchonDiagram::bit(p, i, a)) & 1U)) continue;
      bool left_black = true;
      bool above_black = true;
      for (int g = 1; g < a && left_black; ++g) left_black = (black_mask >> CauchonDiagram::bit(p, i, g)) & 1U;
      for (int k = 1; k < i && above_black; ++k) above_black = (black_mask >> CauchonDiagram::bit(p, k, a)) & 1U;
      if (!left_black && !above_black) return false;
    }
  }
  return true;
}

bool is_cauchon(int m, int p, std::span<const Cell> black) {
  check_grid_size(m, p);
  std::uint64_t mask = 0;
  for (const Cell& c : black) {
    if (c.row < 1 || c.row > m || c.col < 1 || c.col > p) {
      throw std::out_of_range("cell (" + std::to_string(c.row) + "," + std::to_string(c.col) + ") outside grid");
    }
    mask |= 1ULL << CauchonDiagram::bit(p, c.row, c.col);
  }
  return is_cauchon_mask(m, p, mask);
}

CauchonDiagram::CauchonDiagram(int m, int p, std::uint64_t black_mask) : m_(m), p_(p), mask_(black_mask) {
  if (!is_cauchon_mask(m, p, black_mask)) throw std::invalid_argument("not a Cauchon diagram");
}

CauchonDiagram CauchonDiagram::from_cells(int m, int p, std::span<const Cell> black) {
  if (!is_cauchon(m, p, black)) throw std::invalid_argument("black cells do not form a Cauchon diagram");
  std::uint64_t mask = 0;
  for (const Cell& c : black) mask |= 1ULL << bit(p, c.row, c.col);
  return {m, p, mask};
}

CauchonDiagram CauchonDiagram::all_black(int m, int p) {
  check_grid_size(m, p);
  return {m, p, full_mask(m * p)};
}

std::vector<Cell> CauchonDiagram::black_cells() const {
  std::vector<Cell> out;
  for (int i = 1; i <= m_; ++i)
    for (int a = 1; a <= p_; ++a)
      if (is_black(i, a)) out.push_back({i, a});
  return out;
}

void for_each_diagram(int m, int p, const std::function<void(const CauchonDiagram&)>& fn) {
  check_grid_size(m, p);
  DiagramWalker(m, p).run([&](std::uint64_t mask) { fn(CauchonDiagram(m, p, mask)); });
}

std::vector<CauchonDiagram> enumerate_diagrams(int m, int p) {
  std::vector<CauchonDiagram> out;
  for_each_diagram(m, p, [&](const CauchonDiagram& d) { out.push_back(d); });
  return out;
}

std::uint64_t count_diagrams(int m, int p) {
  check_grid_size(m, p);
  std::uint64_t count = 0;
  DiagramWalker(m, p).run([&](std::uint64_t) { ++count; });
  return count;
}

// ---------------------------------------------------------------- IndexSet

IndexSet::IndexSet(std::vector<int> values) : v_(std::move(values)) {
  for (std::size_t k = 0; k < v_.size(); ++k) {
    if (v_[k] < 1) throw std::invalid_argument("index sets hold positive integers");
    if (k > 0 && v_[k] <= v_[k - 1]) throw std::invalid_argument("index set must be strictly increasing");
  }
}

IndexSet IndexSet::from_unsorted(std::vector<int> values) {
  std::sort(values.begin(), values.end());
  return IndexSet(std::move(values));
}

bool IndexSet::contains(int x) const { return std::binary_search(v_.begin(), v_.end(), x); }

IndexSet IndexSet::without(int x) const {
  std::vector<int> out;
  out.reserve(v_.size());
  for (int v : v_)
    if (v != x) out.push_back(v);
  return IndexSet(std::move(out));
}

IndexSet IndexSet::with(int x) const {
  if (contains(x)) return *this;
  std::vector<int> out = v_;
  out.insert(std::upper_bound(out.begin(), out.end(), x), x);
  return IndexSet(std::move(out));
}

std::string IndexSet::str() const {
  std::ostringstream os;
  for (std::size_t k = 0; k < v_.size(); ++k) os << (k ? "," : "") << v_[k];
  return os.str();
}

bool index_set_leq(const IndexSet& I, const IndexSet& J) {
  if (I.size() != J.size()) throw std::invalid_argument("index_set_leq: cardinality mismatch");
  for (std::size_t k = 0; k < I.size(); ++k)
    if (I[k] > J[k]) return false;
  return true;
}

void for_each_subset(std::span<const int> pool, int k, const std::function<void(const IndexSet&)>& fn) {
  const int n = static_cast<int>(pool.size());
  if (k < 0 || k > n) return;
  std::vector<int> pick(static_cast<std::size_t>(k));
  std::iota(pick.begin(), pick.end(), 0);
  std::vector<int> values(static_cast<std::size_t>(k));
  while (true) {
    for (int t = 0; t < k; ++t) values[t] = pool[pick[t]];
    fn(IndexSet(values));
    int t = k - 1;
    while (t >= 0 && pick[t] == n - k + t) --t;
    if (t < 0) return;
    ++pick[t];
    for (int u = t + 1; u < k; ++u) pick[u] = pick[u - 1] + 1;
  }
}

// ----------------------------------------------------- RestrictedPermutation

bool is_permutation(std::span<const int> one_line) {
  const int n = static_cast<int>(one_line.size());
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int v : one_line) {
    if (v < 1 || v > n || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

bool satisfies_shift_bounds(int m, int p, std::span<const int> one_line) {
  if (static_cast<int>(one_line.size()) != m + p || !is_permutation(one_line)) return false;
  for (int i = 1; i <= m + p; ++i) {
    const int d = one_line[i - 1] - i;
    if (d < -p || d > m) return false;
  }
  return true;
}

RestrictedPermutation::RestrictedPermutation(int m, int p, std::vector<int> one_line)
    : m_(m), p_(p), w_(std::move(one_line)) {
  if (m < 1 || p < 1) throw std::invalid_argument("m and p must be positive");
  if (static_cast<int>(w_.size()) != m + p || !is_permutation(w_)) {
    throw std::invalid_argument("not a permutation of [1," + std::to_string(m + p) + "]");
  }
  if (!satisfies_shift_bounds(m, p, w_)) {
    throw std::invalid_argument("permutation " + str() + " violates -p <= w(i)-i <= m");
  }
  inv_ = inverse_permutation(w_);
}

RestrictedPermutation RestrictedPermutation::identity(int m, int p) {
  std::vector<int> w(static_cast<std::size_t>(m + p));
  std::iota(w.begin(), w.end(), 1);
  return {m, p, std::move(w)};
}

RestrictedPermutation RestrictedPermutation::w_max(int m, int p) {
  std::vector<int> w;
  for (int k = 1; k <= p; ++k) w.push_back(m + k);
  for (int k = 1; k <= m; ++k) w.push_back(k);
  return {m, p, std::move(w)};
}

std::string RestrictedPermutation::str() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t k = 0; k < w_.size(); ++k) os << (k ? "," : "") << w_[k];
  os << "]";
  return os.str();
}

void for_each_restricted_perm(int m, int p, const std::function<void(const RestrictedPermutation&)>& fn) {
  if (m < 1 || p < 1) throw std::invalid_argument("m and p must be positive");
  const int n = m + p;
  std::vector<int> w(static_cast<std::size_t>(n));
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  std::function<void(int)> place = [&](int i) {
    if (i > n) {
      fn(RestrictedPermutation(m, p, w));
      return;
    }
    for (int v = std::max(1, i - p); v <= std::min(n, i + m); ++v) {
      if (used[v]) continue;
      used[v] = true;
      w[i - 1] = v;
      place(i + 1);
      used[v] = false;
    }
  };
  place(1);
}

std::vector<RestrictedPermutation> enumerate_restricted_perms(int m, int p) {
  std::vector<RestrictedPermutation> out;
  for_each_restricted_perm(m, p, [&](const RestrictedPermutation& w) { out.push_back(w); });
  return out;
}

bool bruhat_leq(std::span<const int> w, std::span<const int> z) {
  if (w.size() != z.size()) throw std::invalid_argument("bruhat_leq: size mismatch");
  const int n = static_cast<int>(w.size());
  for (int i = 1; i <= n; ++i) {
    int cw = 0, cz = 0;
    for (int j = 1; j <= n; ++j) {
      cw += w[j - 1] >= i;
      cz += z[j - 1] >= i;
      if (cw > cz) return false;
    }
  }
  return true;
}

bool bruhat_leq(const RestrictedPermutation& w, const RestrictedPermutation& z) {
  return bruhat_leq(w.one_line(), z.one_line());
}

std::vector<int> compose(std::span<const int> a, std::span<const int> b) {
  if (a.size() != b.size()) throw std::invalid_argument("compose: size mismatch");
  std::vector<int> out(b.size());
  for (std::size_t j = 0; j < b.size(); ++j) out[j] = a[b[j] - 1];
  return out;
}

std::vector<int> inverse_permutation(std::span<const int> w) {
  std::vector<int> inv(w.size());
  for (std::size_t j = 0; j < w.size(); ++j) inv[w[j] - 1] = static_cast<int>(j) + 1;
  return inv;
}

std::vector<int> longest_element(int n) {
  std::vector<int> w(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) w[k - 1] = n + 1 - k;
  return w;
}

Matrix<int> permutation_matrix(std::span<const int> w) {
  const int n = static_cast<int>(w.size());
  Matrix<int> out(n, n, 0);
  for (int j = 1; j <= n; ++j) out(w[j - 1] - 1, j - 1) = 1;
  return out;
}

BlockDecomposition block_decompose(std::span<const int> w, int m, int p) {
  if (static_cast<int>(w.size()) != m + p || !is_permutation(w)) {
    throw std::invalid_argument("block_decompose: not a permutation of [1,m+p]");
  }
  const Matrix<int> full = permutation_matrix(w);
  auto block = [&](int r0, int c0, int rows, int cols) {
    Matrix<int> out(rows, cols, 0);
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < cols; ++c) out(r, c) = full(r0 + r, c0 + c);
    return out;
  };
  return {block(0, 0, m, p), block(0, p, m, m), block(m, 0, p, p), block(m, p, p, m)};
}

Matrix<int> BlockDecomposition::assemble() const {
  const int m = w11.rows();
  const int p = w11.cols();
  Matrix<int> out(m + p, m + p, 0);
  auto put = [&](const Matrix<int>& b, int r0, int c0) {
    for (int r = 0; r < b.rows(); ++r)
      for (int c = 0; c < b.cols(); ++c) out(r0 + r, c0 + c) = b(r, c);
  };
  put(w11, 0, 0);
  put(w12, 0, p);
  put(w21, m, 0);
  put(w22, m, p);
  return out;
}

}  // namespace tnn
