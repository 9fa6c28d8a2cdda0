#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tnn_cells/errors.hpp"
#include "tnn_cells/rational.hpp"

namespace tnn {

/// Indeterminates t[i,a] of an m x p grid, indexed row-major:
/// index((i,a)) = (i-1)*cols + (a-1). Fixed so serialized polynomials are
/// reproducible.
struct Registry {
  int rows = 0;
  int cols = 0;

  int num_vars() const { return rows * cols; }
  int index(int i, int a) const { return (i - 1) * cols + (a - 1); }
  int row_of(int v) const { return v / cols + 1; }
  int col_of(int v) const { return v % cols + 1; }
  std::string name(int v) const;

  friend bool operator==(const Registry&, const Registry&) = default;
};

/// Multivariate Laurent polynomial over Rational.
///
/// Terms are kept sorted by lexicographic order of their exponent vectors
/// with no zero coefficients, so two polynomials are equal iff their term
/// lists are equal. Exponent arithmetic is overflow-checked.
class LaurentPoly {
 public:
  using Exponent = std::int32_t;
  using Exponents = std::vector<Exponent>;

  struct Term {
    Exponents exp;
    Rational coeff;
    friend bool operator==(const Term&, const Term&) = default;
  };

  explicit LaurentPoly(Registry reg) : reg_(reg) {}

  static LaurentPoly constant(Registry reg, const Rational& c);
  static LaurentPoly variable(Registry reg, int i, int a);
  static LaurentPoly monomial(Registry reg, Exponents exp, const Rational& c);

  /// Inverse of str(). Accepts `0`, or terms joined by `+`/`-`, each of the
  /// form `coeff * t[i,a]^e * ...` (the coefficient may be omitted).
  static LaurentPoly parse(Registry reg, std::string_view text);

  const Registry& registry() const { return reg_; }
  int num_vars() const { return reg_.num_vars(); }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }

  /// Variables with a nonzero exponent in at least one term.
  std::vector<int> support() const;
  /// Smallest / largest exponent of variable v over all terms (0 for zero poly).
  Exponent min_degree(int v) const;
  Exponent max_degree(int v) const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
  LaurentPoly scaled(const Rational& c) const;

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

  /// Formal partial derivative d/dt_v; valid for negative exponents.
  LaurentPoly derivative(int v) const;

  /// Substitute rational values for every variable (values for variables that
  /// occur with negative exponent must be nonzero).
  Rational evaluate(std::span<const Rational> values) const;

  /// Canonical text form, e.g. `1 * t[1,1]^-1 * t[1,2]^1 * t[2,1]^1`.
  std::string str() const;

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.reg_ == b.reg_ && a.terms_ == b.terms_;
  }

 private:
  void check_same_registry(const LaurentPoly& o, const char* op) const;
  static std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b, bool subtract);

  Registry reg_;
  std::vector<Term> terms_;
};

/// q with q * b == a, or std::nullopt if b does not divide a in the Laurent
/// ring. Throws std::domain_error on b == 0.
std::optional<LaurentPoly> try_div_exact(const LaurentPoly& a, const LaurentPoly& b);

/// As try_div_exact, but throws InexactDivision when b does not divide a.
LaurentPoly laurent_div_exact(const LaurentPoly& a, const LaurentPoly& b);

inline LaurentPoly laurent_mul(const LaurentPoly& a, const LaurentPoly& b) { return a * b; }

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

}  // namespace tnn
