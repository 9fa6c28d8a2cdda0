#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tnn_cells/combinat.hpp"
#include "tnn_cells/restoration.hpp"

namespace tnn {

/// Outcome of one verification suite. `detail` holds the first failure in
/// work-item order, or a short summary on success.
struct SuiteResult {
  std::string name;
  bool passed = true;
  std::size_t checked = 0;
  std::string detail;
};

struct TnnSample {
  CauchonDiagram diagram;
  std::uint64_t seed;
};

/// `count` (diagram, seed) pairs drawn uniformly from the m x p diagrams.
std::vector<TnnSample> tnn_corpus(int m, int p, std::size_t count, std::uint64_t seed);

/// Checks on a deletion trace of a tnn matrix, at every step (j,b):
/// nonnegative entries, Cauchon zero pattern, the two tnn submatrices
/// (rows <= j and cols < b; rows < j), and the vanishing implication for
/// minors with corner below (j,b). Returns the first failure.
std::optional<std::string> check_deletion_trace(const MatrixTrace<Rational>& trace);

/// Every m x p diagram, restored count and permutation count agree.
SuiteResult verify_counts(int m, int p);
/// match_families at (m, p).
SuiteResult verify_match(int m, int p, unsigned threads = 0);
/// M(w) subset M(z) iff w <= z: all pairs, or `random_pairs` sampled pairs.
SuiteResult verify_monotonicity(int m, int p, std::optional<std::size_t> random_pairs = std::nullopt,
                                std::uint64_t seed = 1);
/// restore(build_NC(C)) is tnn with vanishing family M(C).
SuiteResult verify_tnn_generation(const std::vector<TnnSample>& corpus, unsigned threads = 0);
/// check_deletion_trace on every restored corpus matrix, plus the two
/// round trips delete(restore(x)) and restore(delete(y)) on whole traces.
SuiteResult verify_deletion(const std::vector<TnnSample>& corpus, unsigned threads = 0);
/// verify_all_step_brackets for every m x p diagram.
SuiteResult verify_poisson_steps(int m, int p, unsigned threads = 0);
/// Antisymmetry, Leibniz rule and Jacobi identity on `samples` random
/// triples of Laurent polynomials, under A_C tables of random diagrams of
/// size (m, p) and the standard matrix bracket.
SuiteResult verify_bracket_properties(int m, int p, std::size_t samples, std::uint64_t seed);
/// Range-side and domain-side vanishing predicates agree for every partial
/// permutation and minor; sampled a w b products with a, b in the matching
/// Borel subgroup agree with the predicate.
SuiteResult verify_bruhat_lemmas(int m, int p, int samples_per_case, std::uint64_t seed);

}  // namespace tnn
