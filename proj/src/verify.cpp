#include "tnn_cells/verify.hpp"

#include <random>
#include <sstream>

#include "tnn_cells/cells.hpp"
#include "tnn_cells/errors.hpp"
#include "tnn_cells/families.hpp"
#include "tnn_cells/parallel.hpp"
#include "tnn_cells/poisson.hpp"

namespace tnn {

namespace {

std::string size_tag(int m, int p) { return std::to_string(m) + "x" + std::to_string(p); }

// Collects per-item failures and reports the lowest failing index.
SuiteResult merge(std::string name, const std::vector<std::optional<std::string>>& failures, std::size_t checked,
                  std::string summary) {
  SuiteResult r{std::move(name), true, checked, std::move(summary)};
  for (const auto& f : failures) {
    if (f) {
      r.passed = false;
      r.detail = *f;
      break;
    }
  }
  return r;
}

std::string sample_tag(const TnnSample& s) {
  return "diagram mask " + std::to_string(s.diagram.mask()) + " (" + size_tag(s.diagram.m(), s.diagram.p()) +
         "), seed " + std::to_string(s.seed);
}

RationalMatrix mul(const RationalMatrix& a, const RationalMatrix& b) {
  RationalMatrix out(a.rows(), b.cols(), Rational(0));
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      if (a(i, k).is_zero()) continue;
      for (int j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

RationalMatrix random_borel(std::mt19937_64& rng, int n, bool upper) {
  std::uniform_int_distribution<long> off(-5, 5);
  std::uniform_int_distribution<long> diag(1, 5);
  std::bernoulli_distribution neg(0.5);
  RationalMatrix out(n, n, Rational(0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) {
        out(i, j) = Rational(neg(rng) ? -diag(rng) : diag(rng));
      } else if ((i < j) == upper) {
        out(i, j) = Rational(off(rng));
      }
    }
  return out;
}

RationalMatrix block(const RationalMatrix& x, int rows, int cols) {
  RationalMatrix out(rows, cols, Rational(0));
  for (int i = 0; i < rows; ++i)
    for (int a = 0; a < cols; ++a) out(i, a) = x(i, a);
  return out;
}

LaurentPoly random_poly(std::mt19937_64& rng, const Registry& reg, int terms) {
  std::uniform_int_distribution<int> e(-2, 2);
  std::uniform_int_distribution<long> co(-3, 3);
  LaurentPoly out(reg);
  for (int k = 0; k < terms; ++k) {
    LaurentPoly::Exponents exp(static_cast<std::size_t>(reg.num_vars()));
    for (auto& x : exp) x = e(rng);
    out += LaurentPoly::monomial(reg, exp, Rational(co(rng)));
  }
  return out;
}

}  // namespace

std::vector<TnnSample> tnn_corpus(int m, int p, std::size_t count, std::uint64_t seed) {
  const std::vector<CauchonDiagram> diagrams = enumerate_diagrams(m, p);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, diagrams.size() - 1);
  std::vector<TnnSample> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    const std::size_t d = pick(rng);
    out.push_back({diagrams[d], rng()});
  }
  return out;
}

std::optional<std::string> check_deletion_trace(const MatrixTrace<Rational>& trace) {
  const int m = trace.m();
  const int p = trace.p();
  for (std::size_t k = 0; k < trace.size(); ++k) {
    const StepIndex r = trace.steps()[k];
    const RationalMatrix& x = trace.by_position(k);
    const std::string at = "step " + r.str() + ": ";
    for (int i = 0; i < m; ++i)
      for (int a = 0; a < p; ++a)
        if (x(i, a).sign() < 0) return at + "negative entry at (" + std::to_string(i + 1) + "," + std::to_string(a + 1) + ")";
    if (!is_cauchon_matrix(x)) return at + "zero pattern is not a Cauchon diagram";
    if (r.beta > 1) {
      const TnnVerdict v = is_tnn(block(x, r.j, r.beta - 1));
      if (!v.is_tnn) return at + "upper-left block has negative minor " + v.witness->str();
    }
    if (r.j > 1) {
      const TnnVerdict v = is_tnn(block(x, r.j - 1, p));
      if (!v.is_tnn) return at + "upper rows have negative minor " + v.witness->str();
    }
  }
  if (auto v = find_h_invariance_violation(trace)) {
    return "step " + v->step.str() + ": " + v->minor.str() + " vanishes after the step but not before";
  }
  return std::nullopt;
}

SuiteResult verify_counts(int m, int p) {
  const std::uint64_t diagrams = count_diagrams(m, p);
  std::uint64_t perms = 0;
  for_each_restricted_perm(m, p, [&](const RestrictedPermutation&) { ++perms; });
  SuiteResult r{"counts " + size_tag(m, p), diagrams == perms, 1,
                std::to_string(diagrams) + " diagrams, " + std::to_string(perms) + " permutations"};
  return r;
}

SuiteResult verify_match(int m, int p, unsigned threads) {
  SuiteResult r{"match " + size_tag(m, p), true, 0, ""};
  try {
    const auto pairs = match_families(m, p, threads);
    r.checked = pairs.size();
    r.detail = std::to_string(pairs.size()) + " matched pairs";
  } catch (const VerificationFailure& e) {
    r.passed = false;
    r.detail = e.what();
  }
  return r;
}

SuiteResult verify_monotonicity(int m, int p, std::optional<std::size_t> random_pairs, std::uint64_t seed) {
  const std::vector<RestrictedPermutation> s = enumerate_restricted_perms(m, p);
  std::vector<MinorFamily> fam;
  fam.reserve(s.size());
  for (const auto& w : s) fam.push_back(compute_Mw(w));
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  if (random_pairs) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, s.size() - 1);
    for (std::size_t k = 0; k < *random_pairs; ++k) pairs.emplace_back(pick(rng), pick(rng));
  } else {
    for (std::size_t a = 0; a < s.size(); ++a)
      for (std::size_t b = 0; b < s.size(); ++b) pairs.emplace_back(a, b);
  }
  SuiteResult r{"monotonicity " + size_tag(m, p), true, pairs.size(), std::to_string(pairs.size()) + " pairs"};
  for (auto [a, b] : pairs) {
    const bool sub = fam[a].is_subset_of(fam[b]);
    const bool leq = bruhat_leq(s[a], s[b]);
    if (sub != leq) {
      r.passed = false;
      r.detail = "w = " + s[a].str() + ", z = " + s[b].str() + ": inclusion " + (sub ? "holds" : "fails") +
                 " but w <= z is " + (leq ? "true" : "false");
      return r;
    }
  }
  return r;
}

SuiteResult verify_tnn_generation(const std::vector<TnnSample>& corpus, unsigned threads) {
  const auto failures = parallel_map<std::optional<std::string>>(
      corpus.size(),
      [&](std::size_t k) -> std::optional<std::string> {
        const TnnSample& s = corpus[k];
        const RationalMatrix x = restored(build_NC(s.diagram, s.seed));
        const TnnVerdict v = is_tnn(x);
        if (!v.is_tnn) return sample_tag(s) + ": negative minor " + v.witness->str();
        const MinorFamily got = vanishing_family(x);
        const MinorFamily want = compute_MC(s.diagram);
        if (got != want) return sample_tag(s) + ": vanishing minors " + got.str() + " but M(C) = " + want.str();
        return std::nullopt;
      },
      threads);
  return merge("tnn generation", failures, corpus.size(), std::to_string(corpus.size()) + " samples");
}

SuiteResult verify_deletion(const std::vector<TnnSample>& corpus, unsigned threads) {
  const auto failures = parallel_map<std::optional<std::string>>(
      corpus.size(),
      [&](std::size_t k) -> std::optional<std::string> {
        const TnnSample& s = corpus[k];
        const RationalMatrix n = build_NC(s.diagram, s.seed);
        const MatrixTrace<Rational> forward = restore(n);
        const MatrixTrace<Rational> back = delete_derivations(forward.final());
        if (!(back == forward)) return sample_tag(s) + ": deleting derivations does not retrace restoration";
        if (!(restore(back.initial()) == back)) return sample_tag(s) + ": restoring does not retrace deletion";
        if (auto f = check_deletion_trace(back)) return sample_tag(s) + ": " + *f;
        return std::nullopt;
      },
      threads);
  return merge("deletion", failures, corpus.size(), std::to_string(corpus.size()) + " samples");
}

SuiteResult verify_poisson_steps(int m, int p, unsigned threads) {
  const std::vector<CauchonDiagram> diagrams = enumerate_diagrams(m, p);
  std::vector<std::size_t> pair_counts(diagrams.size(), 0);
  const auto failures = parallel_map<std::optional<std::string>>(
      diagrams.size(),
      [&](std::size_t k) -> std::optional<std::string> {
        for (const StepBracketReport& rep : verify_all_step_brackets(diagrams[k])) {
          pair_counts[k] += rep.pairs_checked;
          if (!rep.passed()) {
            const BracketFailure& f = rep.failures.front();
            std::ostringstream os;
            os << "diagram mask " << diagrams[k].mask() << ", step " << rep.step.str() << ", pair (" << f.first.row
               << "," << f.first.col << ") (" << f.second.row << "," << f.second.col << "): difference "
               << f.difference;
            return os.str();
          }
        }
        return std::nullopt;
      },
      threads);
  std::size_t pairs = 0;
  for (std::size_t c : pair_counts) pairs += c;
  return merge("poisson steps " + size_tag(m, p), failures, diagrams.size(),
               std::to_string(diagrams.size()) + " diagrams, " + std::to_string(pairs) + " pairs");
}

SuiteResult verify_bracket_properties(int m, int p, std::size_t samples, std::uint64_t seed) {
  const std::vector<CauchonDiagram> diagrams = enumerate_diagrams(m, p);
  std::vector<BracketTable> tables;
  for (const auto& c : diagrams) tables.push_back(BracketTable::a_c(c));
  tables.push_back(BracketTable::matrix_poisson(m, p));
  const Registry reg{m, p};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, tables.size() - 1);
  std::uniform_int_distribution<int> nterms(1, 3);
  SuiteResult r{"bracket properties " + size_tag(m, p), true, samples, std::to_string(samples) + " samples"};
  for (std::size_t k = 0; k < samples; ++k) {
    const std::size_t t = pick(rng);
    const BracketTable& table = tables[t];
    const LaurentPoly f = random_poly(rng, reg, nterms(rng));
    const LaurentPoly g = random_poly(rng, reg, nterms(rng));
    const LaurentPoly h = random_poly(rng, reg, nterms(rng));
    const std::string which = t + 1 == tables.size() ? "matrix bracket" : "diagram mask " + std::to_string(diagrams[t].mask());
    std::string failed;
    if (!(bracket(f, g, table) == -bracket(g, f, table))) {
      failed = "antisymmetry";
    } else if (!(bracket(f, g * h, table) == bracket(f, g, table) * h + g * bracket(f, h, table))) {
      failed = "Leibniz rule";
    } else if (!verify_jacobi(table, {f, g, h})) {
      failed = "Jacobi identity";
    }
    if (!failed.empty()) {
      r.passed = false;
      r.detail = "sample " + std::to_string(k) + " (" + which + "): " + failed + " fails for f = " + f.str() +
                 ", g = " + g.str() + ", h = " + h.str();
      return r;
    }
  }
  return r;
}

SuiteResult verify_bruhat_lemmas(int m, int p, int samples_per_case, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const std::vector<MinorId> ids = all_minor_ids(m, p);
  std::size_t checked = 0;
  SuiteResult r{"bruhat lemmas " + size_tag(m, p), true, 0, ""};
  for (const PartialPermutation& w : PartialPermutation::all(m, p)) {
    const RationalMatrix wm = w.rational_matrix();
    for (const MinorId& id : ids) {
      for (BorelSide side : {BorelSide::plus, BorelSide::minus}) {
        const char* tag = side == BorelSide::plus ? "B+" : "B-";
        const bool vanishes = bruhat_cell_vanishes(w, id, side);
        ++checked;
        if (vanishes != bruhat_cell_vanishes_dual(w, id, side)) {
          r.passed = false;
          r.detail = std::string(tag) + ", w = " + w.str() + ", " + id.str() + ": the two formulations disagree";
          r.checked = checked;
          return r;
        }
        bool saw_nonzero = false;
        for (int s = 0; s < samples_per_case; ++s) {
          const bool upper = side == BorelSide::plus;
          const RationalMatrix x = mul(mul(random_borel(rng, m, upper), wm), random_borel(rng, p, upper));
          const bool zero = eval_minor(x, id).is_zero();
          if (vanishes && !zero) {
            r.passed = false;
            r.detail = std::string(tag) + ", w = " + w.str() + ", " + id.str() + ": predicted to vanish, sample is nonzero";
            r.checked = checked;
            return r;
          }
          saw_nonzero = saw_nonzero || !zero;
        }
        if (!vanishes && samples_per_case > 0 && !saw_nonzero) {
          r.passed = false;
          r.detail = std::string(tag) + ", w = " + w.str() + ", " + id.str() + ": predicted nonzero, every sample vanished";
          r.checked = checked;
          return r;
        }
      }
    }
  }
  r.checked = checked;
  r.detail = std::to_string(checked) + " cases";
  return r;
}

}  // namespace tnn
