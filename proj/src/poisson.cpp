#include "tnn_cells/poisson.hpp"

#include <algorithm>
#include <stdexcept>

#include "tnn_cells/cells.hpp"
#include "tnn_cells/errors.hpp"

namespace tnn {

BracketTable::BracketTable(Registry reg)
    : reg_(reg), upper_(static_cast<std::size_t>(reg.num_vars()) * reg.num_vars(), LaurentPoly(reg)) {}

void BracketTable::set(int v, int w, LaurentPoly value) {
  if (v == w) throw std::invalid_argument("bracket of a generator with itself is 0");
  if (!(value.registry() == reg_)) throw RegistryMismatch("bracket table entry over a different registry");
  if (v > w) {
    std::swap(v, w);
    value = -value;
  }
  const bool was_zero = upper_[slot(v, w)].is_zero();
  upper_[slot(v, w)] = std::move(value);
  const bool now_zero = upper_[slot(v, w)].is_zero();
  if (was_zero && !now_zero) {
    pairs_.insert(std::lower_bound(pairs_.begin(), pairs_.end(), std::pair{v, w}), {v, w});
  } else if (!was_zero && now_zero) {
    pairs_.erase(std::find(pairs_.begin(), pairs_.end(), std::pair{v, w}));
  }
}

LaurentPoly BracketTable::get(int v, int w) const {
  if (v == w) return LaurentPoly(reg_);
  if (v > w) return -upper_[slot(w, v)];
  return upper_[slot(v, w)];
}

namespace {

// Shared cases of both tables; returns nullopt for i < k, a < c.
std::optional<LaurentPoly> basic_case(const Registry& reg, int i, int a, int k, int c) {
  const LaurentPoly tu = LaurentPoly::variable(reg, i, a);
  const LaurentPoly tv = LaurentPoly::variable(reg, k, c);
  if (i == k) return tu * tv;  // a < c by ordering
  if (a == c) return tu * tv;
  if (a > c) return LaurentPoly(reg);
  return std::nullopt;
}

}  // namespace

BracketTable BracketTable::a_c(const CauchonDiagram& cd) {
  const Registry reg{cd.m(), cd.p()};
  BracketTable t(reg);
  for (int v = 0; v < reg.num_vars(); ++v) {
    for (int w = v + 1; w < reg.num_vars(); ++w) {
      const int i = reg.row_of(v), a = reg.col_of(v), k = reg.row_of(w), c = reg.col_of(w);
      if (cd.is_black(i, a) || cd.is_black(k, c)) continue;
      t.set(v, w, basic_case(reg, i, a, k, c).value_or(LaurentPoly(reg)));
    }
  }
  return t;
}

BracketTable BracketTable::matrix_poisson(int m, int p) {
  const Registry reg{m, p};
  BracketTable t(reg);
  for (int v = 0; v < reg.num_vars(); ++v) {
    for (int w = v + 1; w < reg.num_vars(); ++w) {
      const int i = reg.row_of(v), a = reg.col_of(v), k = reg.row_of(w), c = reg.col_of(w);
      auto b = basic_case(reg, i, a, k, c);
      if (!b) b = (LaurentPoly::variable(reg, i, c) * LaurentPoly::variable(reg, k, a)).scaled(Rational(2));
      t.set(v, w, *b);
    }
  }
  return t;
}

LaurentPoly bracket(const LaurentPoly& f, const LaurentPoly& g, const BracketTable& table) {
  const Registry& reg = table.registry();
  if (!(f.registry() == reg) || !(g.registry() == reg)) throw RegistryMismatch("bracket: registry mismatch");
  LaurentPoly out(reg);
  if (f.is_constant() || g.is_constant()) return out;
  const int n = reg.num_vars();
  std::vector<std::optional<LaurentPoly>> df(n), dg(n);
  std::vector<bool> in_f(n, false), in_g(n, false);
  for (int v : f.support()) in_f[v] = true;
  for (int v : g.support()) in_g[v] = true;
  auto d = [&](std::vector<std::optional<LaurentPoly>>& cache, const LaurentPoly& h, int v) -> const LaurentPoly& {
    if (!cache[v]) cache[v] = h.derivative(v);
    return *cache[v];
  };
  for (const auto& [v, w] : table.nonzero_pairs()) {
    LaurentPoly term(reg);
    if (in_f[v] && in_g[w]) term += d(df, f, v) * d(dg, g, w);
    if (in_f[w] && in_g[v]) term -= d(df, f, w) * d(dg, g, v);
    if (term.is_zero()) continue;
    out += table.get(v, w) * term;
  }
  return out;
}

std::optional<std::vector<int>> bidegree(const LaurentPoly& f) {
  if (f.is_zero()) return std::nullopt;
  const Registry& reg = f.registry();
  std::optional<std::vector<int>> deg;
  for (const auto& term : f.terms()) {
    std::vector<int> d(static_cast<std::size_t>(reg.rows + reg.cols), 0);
    for (int v = 0; v < reg.num_vars(); ++v) {
      d[reg.row_of(v) - 1] += term.exp[v];
      d[reg.rows + reg.col_of(v) - 1] += term.exp[v];
    }
    if (!deg) {
      deg = std::move(d);
    } else if (*deg != d) {
      return std::nullopt;
    }
  }
  return deg;
}

LaurentPoly expected_step_bracket(const LaurentMatrix& x, StepIndex r, Cell u, Cell v) {
  const Registry reg = x(0, 0).registry();
  if (u == v) return LaurentPoly(reg);
  bool flip = false;
  if (v < u) {
    std::swap(u, v);
    flip = true;
  }
  const int i = u.row, a = u.col, k = v.row, c = v.col;
  auto t = [&](int row, int col) -> const LaurentPoly& { return x(row - 1, col - 1); };
  LaurentPoly out(reg);
  if (i == k || a == c) {
    out = t(i, a) * t(k, c);
  } else if (a < c && StepIndex{k, c} < r) {
    out = (t(i, c) * t(k, a)).scaled(Rational(2));
  }
  return flip ? -out : out;
}

namespace {

StepBracketReport check_step(const LaurentMatrix& x, StepIndex r, const BracketTable& table) {
  StepBracketReport rep{r, 0, {}};
  const int m = x.rows(), p = x.cols();
  for (int v = 0; v < m * p; ++v) {
    for (int w = v + 1; w < m * p; ++w) {
      const Cell u{v / p + 1, v % p + 1};
      const Cell z{w / p + 1, w % p + 1};
      const LaurentPoly got = bracket(x(u.row - 1, u.col - 1), x(z.row - 1, z.col - 1), table);
      const LaurentPoly want = expected_step_bracket(x, r, u, z);
      ++rep.pairs_checked;
      if (got != want) rep.failures.push_back({u, z, (got - want).str()});
    }
  }
  return rep;
}

}  // namespace

StepBracketReport verify_step_brackets(const CauchonDiagram& c, StepIndex r) {
  const MatrixTrace<LaurentPoly> trace = restore(symbolic_MC(c));
  return check_step(trace.at(r), r, BracketTable::a_c(c));
}

std::vector<StepBracketReport> verify_all_step_brackets(const CauchonDiagram& c) {
  const MatrixTrace<LaurentPoly> trace = restore(symbolic_MC(c));
  const BracketTable table = BracketTable::a_c(c);
  std::vector<StepBracketReport> out;
  for (std::size_t k = 0; k < trace.size(); ++k) out.push_back(check_step(trace.by_position(k), trace.steps()[k], table));
  return out;
}

bool verify_jacobi(const BracketTable& table, const std::vector<LaurentPoly>& sample) {
  const std::size_t n = sample.size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      for (std::size_t c = b + 1; c < n; ++c) {
        const LaurentPoly& f = sample[a];
        const LaurentPoly& g = sample[b];
        const LaurentPoly& h = sample[c];
        LaurentPoly s = bracket(f, bracket(g, h, table), table);
        s += bracket(g, bracket(h, f, table), table);
        s += bracket(h, bracket(f, g, table), table);
        if (!s.is_zero()) return false;
      }
    }
  }
  return true;
}

}  // namespace tnn
