#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "tnn_cells/combinat.hpp"
#include "tnn_cells/matrix.hpp"
#include "tnn_cells/minors.hpp"

namespace tnn {

struct TnnVerdict {
  bool is_tnn = true;
  std::optional<MinorId> witness;          // first negative minor, canonical order
  std::optional<Rational> witness_value;
};

TnnVerdict is_tnn(const RationalMatrix& x);

/// Raised by classify on input that is not totally nonnegative.
class NotTotallyNonnegative : public std::invalid_argument {
 public:
  NotTotallyNonnegative(MinorId witness, Rational value);
  const MinorId& witness() const { return witness_; }
  const Rational& value() const { return value_; }

 private:
  MinorId witness_;
  Rational value_;
};

/// M_C: t[i,a] at white cells, 0 at black cells, over the full m x p registry.
LaurentMatrix symbolic_MC(const CauchonDiagram& c);

/// Vanishing family of the symbolically restored M_C.
MinorFamily compute_MC(const CauchonDiagram& c);

/// N_C: independent uniform positive rationals (numerator and denominator in
/// [1, 2^32]) at white cells, 0 at black cells. Deterministic in `seed`.
RationalMatrix build_NC(const CauchonDiagram& c, std::uint64_t seed);

struct CellDescriptor {
  CauchonDiagram diagram;
  MinorFamily family;
  std::optional<RestrictedPermutation> matched_perm;
};

/// The permutation w with M(w) = family, if any (linear search over S).
std::optional<RestrictedPermutation> find_matching_perm(const MinorFamily& family);

/// Deletes derivations from a tnn matrix, reads the diagram off the zero
/// pattern of X^{(1,2)} and attaches M(C). Checks at runtime that the result
/// is Cauchon and that the vanishing minors of x_bar are exactly M(C).
/// Throws NotTotallyNonnegative on non-tnn input and VerificationFailure if a
/// check fails.
CellDescriptor classify(const RationalMatrix& x_bar, bool attach_perm = false);

struct MatchedPair {
  RestrictedPermutation perm;
  CauchonDiagram diagram;
  MinorFamily family;
};

/// Computes {M(w) : w in S} and {M(C)} for all m x p diagrams, checks that the
/// two collections coincide and that each has pairwise distinct members, and
/// returns the induced bijection sorted by permutation. Throws
/// VerificationFailure on any mismatch.
std::vector<MatchedPair> match_families(int m, int p, unsigned threads = 0);

}  // namespace tnn
