#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tnn_cells/combinat.hpp"
#include "tnn_cells/laurent.hpp"
#include "tnn_cells/restoration.hpp"

namespace tnn {

/// Antisymmetric table b[v,w] of brackets of generators, v < w in registry
/// order. b[v,v] = 0 and b[w,v] = -b[v,w] are implicit.
class BracketTable {
 public:
  explicit BracketTable(Registry reg);

  /// Bracket data of A_C: t_v t_w on shared rows (a < c) or shared columns
  /// (i < k), 0 otherwise. Pairs touching a black cell of C are 0.
  static BracketTable a_c(const CauchonDiagram& c);
  /// Standard bracket on O(M_{m,p}): as A_C for all cells, plus
  /// 2 t[i,c] t[k,a] when i < k and a < c.
  static BracketTable matrix_poisson(int m, int p);

  const Registry& registry() const { return reg_; }
  void set(int v, int w, LaurentPoly value);
  /// b[v,w] with the sign flip applied when v > w.
  LaurentPoly get(int v, int w) const;
  /// Pairs v < w with b[v,w] != 0.
  const std::vector<std::pair<int, int>>& nonzero_pairs() const { return pairs_; }

 private:
  std::size_t slot(int v, int w) const { return static_cast<std::size_t>(v) * reg_.num_vars() + w; }

  Registry reg_;
  std::vector<LaurentPoly> upper_;
  std::vector<std::pair<int, int>> pairs_;
};

/// {f,g} = sum_{v<w} b[v,w] (d_v f d_w g - d_w f d_v g).
LaurentPoly bracket(const LaurentPoly& f, const LaurentPoly& g, const BracketTable& table);

/// Z^{m+p} degree with deg t[k,c] = e_k + e_{m+c}; std::nullopt unless f is
/// a nonzero homogeneous polynomial.
std::optional<std::vector<int>> bidegree(const LaurentPoly& f);

/// Right-hand side of the restored-bracket identity at step r for the
/// generators (i,a), (k,c) of X = M_C^{(r)} (1-based cells).
LaurentPoly expected_step_bracket(const LaurentMatrix& x, StepIndex r, Cell u, Cell v);

struct BracketFailure {
  Cell first;
  Cell second;
  std::string difference;  // computed - expected, canonical text
};

struct StepBracketReport {
  StepIndex step;
  std::size_t pairs_checked = 0;
  std::vector<BracketFailure> failures;
  bool passed() const { return failures.empty(); }
};

/// Checks every generator pair of M_C^{(r)} against expected_step_bracket,
/// using the A_C table on the base variables.
StepBracketReport verify_step_brackets(const CauchonDiagram& c, StepIndex r);
/// The same for every r in E, reusing one restoration trace.
std::vector<StepBracketReport> verify_all_step_brackets(const CauchonDiagram& c);

/// {f,{g,h}} + {g,{h,f}} + {h,{f,g}} = 0 for every triple of distinct
/// positions in `sample`.
bool verify_jacobi(const BracketTable& table, const std::vector<LaurentPoly>& sample);

}  // namespace tnn
