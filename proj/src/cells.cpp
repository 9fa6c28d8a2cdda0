#include "tnn_cells/cells.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <string>
#include <unordered_map>

#include "tnn_cells/errors.hpp"
#include "tnn_cells/families.hpp"
#include "tnn_cells/parallel.hpp"
#include "tnn_cells/restoration.hpp"

namespace tnn {

TnnVerdict is_tnn(const RationalMatrix& x) {
  TnnVerdict v;
  if (x.rows() == 0 || x.cols() == 0) return v;
  const MinorTable<Rational> table(x);
  for (const MinorId& id : all_minor_ids(x.rows(), x.cols())) {
    const Rational& val = table(id);
    if (val.sign() < 0) {
      v.is_tnn = false;
      v.witness = id;
      v.witness_value = val;
      return v;
    }
  }
  return v;
}

NotTotallyNonnegative::NotTotallyNonnegative(MinorId witness, Rational value)
    : std::invalid_argument("matrix is not totally nonnegative: " + witness.str() + " = " + value.str()),
      witness_(std::move(witness)),
      value_(std::move(value)) {}

LaurentMatrix symbolic_MC(const CauchonDiagram& c) {
  const Registry reg{c.m(), c.p()};
  std::vector<LaurentPoly> data;
  data.reserve(static_cast<std::size_t>(c.m()) * c.p());
  for (int i = 1; i <= c.m(); ++i)
    for (int a = 1; a <= c.p(); ++a)
      data.push_back(c.is_black(i, a) ? LaurentPoly(reg) : LaurentPoly::variable(reg, i, a));
  return LaurentMatrix(c.m(), c.p(), std::move(data));
}

MinorFamily compute_MC(const CauchonDiagram& c) { return vanishing_family_symbolic(restored(symbolic_MC(c))); }

RationalMatrix build_NC(const CauchonDiagram& c, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> dist(1, std::uint64_t{1} << 32);
  RationalMatrix out(c.m(), c.p(), Rational(0));
  for (int i = 1; i <= c.m(); ++i) {
    for (int a = 1; a <= c.p(); ++a) {
      if (c.is_black(i, a)) continue;
      mpz_class num;
      mpz_class den;
      mpz_set_ui(num.get_mpz_t(), static_cast<unsigned long>(dist(rng)));
      mpz_set_ui(den.get_mpz_t(), static_cast<unsigned long>(dist(rng)));
      out(i - 1, a - 1) = Rational(num, den);
    }
  }
  return out;
}

std::optional<RestrictedPermutation> find_matching_perm(const MinorFamily& family) {
  std::optional<RestrictedPermutation> found;
  for_each_restricted_perm(family.m(), family.p(), [&](const RestrictedPermutation& w) {
    if (!found && compute_Mw(w) == family) found = w;
  });
  return found;
}

CellDescriptor classify(const RationalMatrix& x_bar, bool attach_perm) {
  const TnnVerdict verdict = is_tnn(x_bar);
  if (!verdict.is_tnn) throw NotTotallyNonnegative(*verdict.witness, *verdict.witness_value);
  const MatrixTrace<Rational> trace = delete_derivations(x_bar);
  const std::optional<CauchonDiagram> diagram = diagram_of(trace.initial());
  if (!diagram) {
    throw VerificationFailure("deleting derivations produced a non-Cauchon matrix:\n" + to_string(trace.initial()));
  }
  MinorFamily family = compute_MC(*diagram);
  const MinorFamily observed = vanishing_family(x_bar);
  if (observed != family) {
    throw VerificationFailure("vanishing minors " + observed.str() + " differ from M(C) = " + family.str());
  }
  CellDescriptor out{*diagram, std::move(family), std::nullopt};
  if (attach_perm) {
    out.matched_perm = find_matching_perm(out.family);
    if (!out.matched_perm) throw VerificationFailure("no restricted permutation w has M(w) = " + out.family.str());
  }
  return out;
}

std::vector<MatchedPair> match_families(int m, int p, unsigned threads) {
  const std::vector<RestrictedPermutation> perms = enumerate_restricted_perms(m, p);
  const std::vector<CauchonDiagram> diagrams = enumerate_diagrams(m, p);
  if (perms.size() != diagrams.size()) {
    throw VerificationFailure("|S| = " + std::to_string(perms.size()) + " but there are " +
                              std::to_string(diagrams.size()) + " diagrams");
  }
  const auto mw = parallel_map<std::optional<MinorFamily>>(
      perms.size(), [&](std::size_t k) { return std::optional<MinorFamily>(compute_Mw(perms[k])); }, threads);
  const auto mc = parallel_map<std::optional<MinorFamily>>(
      diagrams.size(), [&](std::size_t k) { return std::optional<MinorFamily>(compute_MC(diagrams[k])); }, threads);

  std::unordered_map<std::uint64_t, std::vector<std::size_t>> by_hash;
  for (std::size_t k = 0; k < mw.size(); ++k) {
    auto& bucket = by_hash[mw[k]->hash()];
    for (std::size_t other : bucket) {
      if (*mw[other] == *mw[k]) {
        throw VerificationFailure("M(w) coincide for w = " + perms[other].str() + " and " + perms[k].str());
      }
    }
    bucket.push_back(k);
  }

  std::vector<std::optional<std::size_t>> perm_to_diagram(perms.size());
  for (std::size_t d = 0; d < mc.size(); ++d) {
    std::optional<std::size_t> hit;
    if (auto it = by_hash.find(mc[d]->hash()); it != by_hash.end()) {
      for (std::size_t k : it->second)
        if (*mw[k] == *mc[d]) hit = k;
    }
    if (!hit) {
      throw VerificationFailure("M(C) = " + mc[d]->str() + " for diagram mask " + std::to_string(diagrams[d].mask()) +
                                " is not of the form M(w)");
    }
    if (perm_to_diagram[*hit]) {
      throw VerificationFailure("M(C) coincide for diagram masks " +
                                std::to_string(diagrams[*perm_to_diagram[*hit]].mask()) + " and " +
                                std::to_string(diagrams[d].mask()));
    }
    perm_to_diagram[*hit] = d;
  }

  std::vector<MatchedPair> out;
  out.reserve(perms.size());
  for (std::size_t k = 0; k < perms.size(); ++k) {
    // Equal cardinalities and injectivity on the diagram side make this total.
    out.push_back({perms[k], diagrams[*perm_to_diagram[k]], *mw[k]});
  }
  return out;
}

}  // namespace tnn
