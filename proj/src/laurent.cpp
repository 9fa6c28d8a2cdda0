#include "tnn_cells/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace tnn {

namespace {

using Exponent = LaurentPoly::Exponent;
using Exponents = LaurentPoly::Exponents;
using Term = LaurentPoly::Term;

Exponent checked_add(Exponent a, Exponent b) {
  Exponent out;
  if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("Laurent exponent overflow");
  return out;
}

Exponent checked_sub(Exponent a, Exponent b) {
  Exponent out;
  if (__builtin_sub_overflow(a, b, &out)) throw std::overflow_error("Laurent exponent overflow");
  return out;
}

Exponents add_exps(const Exponents& a, const Exponents& b) {
  Exponents out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) out[k] = checked_add(a[k], b[k]);
  return out;
}

Exponents sub_exps(const Exponents& a, const Exponents& b) {
  Exponents out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) out[k] = checked_sub(a[k], b[k]);
  return out;
}

bool term_less(const Term& x, const Term& y) { return x.exp < y.exp; }

// Multiply every term by a single monomial. Lex order is translation
// invariant, so the term order is preserved.
std::vector<Term> shift(const std::vector<Term>& terms, const Exponents& exp, const Rational& c) {
  std::vector<Term> out;
  out.reserve(terms.size());
  for (const Term& t : terms) out.push_back(Term{add_exps(t.exp, exp), t.coeff * c});
  return out;
}

Rational pow_rational(const Rational& base, Exponent e) {
  if (e == 0) return Rational(1);
  if (e < 0) {
    if (base.is_zero()) throw std::domain_error("negative power of zero in Laurent evaluation");
    return Rational(1) / pow_rational(base, -e);
  }
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.numerator().get_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(den.get_mpz_t(), base.denominator().get_mpz_t(), static_cast<unsigned long>(e));
  return Rational(num, den);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

std::string Registry::name(int v) const {
  return "t[" + std::to_string(row_of(v)) + "," + std::to_string(col_of(v)) + "]";
}

LaurentPoly LaurentPoly::constant(Registry reg, const Rational& c) {
  LaurentPoly p(reg);
  if (!c.is_zero()) p.terms_.push_back(Term{Exponents(reg.num_vars(), 0), c});
  return p;
}

LaurentPoly LaurentPoly::variable(Registry reg, int i, int a) {
  if (i < 1 || i > reg.rows || a < 1 || a > reg.cols) {
    throw std::out_of_range("variable t[" + std::to_string(i) + "," + std::to_string(a) + "] outside registry");
  }
  Exponents e(reg.num_vars(), 0);
  e[reg.index(i, a)] = 1;
  return monomial(reg, std::move(e), Rational(1));
}

LaurentPoly LaurentPoly::monomial(Registry reg, Exponents exp, const Rational& c) {
  if (static_cast<int>(exp.size()) != reg.num_vars()) {
    throw std::invalid_argument("exponent vector length does not match registry");
  }
  LaurentPoly p(reg);
  if (!c.is_zero()) p.terms_.push_back(Term{std::move(exp), c});
  return p;
}

bool LaurentPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() != 1) return false;
  return std::all_of(terms_[0].exp.begin(), terms_[0].exp.end(), [](Exponent e) { return e == 0; });
}

std::vector<int> LaurentPoly::support() const {
  std::vector<int> out;
  for (int v = 0; v < num_vars(); ++v) {
    for (const Term& t : terms_) {
      if (t.exp[v] != 0) {
        out.push_back(v);
        break;
      }
    }
  }
  return out;
}

LaurentPoly::Exponent LaurentPoly::min_degree(int v) const {
  if (terms_.empty()) return 0;
  Exponent lo = std::numeric_limits<Exponent>::max();
  for (const Term& t : terms_) lo = std::min(lo, t.exp[v]);
  return lo;
}

LaurentPoly::Exponent LaurentPoly::max_degree(int v) const {
  if (terms_.empty()) return 0;
  Exponent hi = std::numeric_limits<Exponent>::min();
  for (const Term& t : terms_) hi = std::max(hi, t.exp[v]);
  return hi;
}

void LaurentPoly::check_same_registry(const LaurentPoly& o, const char* op) const {
  if (!(reg_ == o.reg_)) {
    throw RegistryMismatch(std::string("Laurent ") + op + ": operands use different variable registries");
  }
}

std::vector<Term> LaurentPoly::merge(const std::vector<Term>& a, const std::vector<Term>& b, bool subtract) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].exp < b[j].exp)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].exp < a[i].exp) {
      out.push_back(subtract ? Term{b[j].exp, -b[j].coeff} : b[j]);
      ++j;
    } else {
      Rational c = subtract ? a[i].coeff - b[j].coeff : a[i].coeff + b[j].coeff;
      if (!c.is_zero()) out.push_back(Term{a[i].exp, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out(*this);
  for (Term& t : out.terms_) t.coeff = -t.coeff;
  return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  check_same_registry(o, "add");
  terms_ = merge(terms_, o.terms_, false);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  check_same_registry(o, "subtract");
  terms_ = merge(terms_, o.terms_, true);
  return *this;
}

LaurentPoly LaurentPoly::scaled(const Rational& c) const {
  LaurentPoly out(reg_);
  if (c.is_zero()) return out;
  out.terms_ = terms_;
  for (Term& t : out.terms_) t.coeff *= c;
  return out;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  a.check_same_registry(b, "multiply");
  LaurentPoly out(a.reg_);
  if (a.is_zero() || b.is_zero()) return out;
  if (a.is_monomial()) {
    out.terms_ = shift(b.terms_, a.terms_[0].exp, a.terms_[0].coeff);
    return out;
  }
  if (b.is_monomial()) {
    out.terms_ = shift(a.terms_, b.terms_[0].exp, b.terms_[0].coeff);
    return out;
  }
  std::vector<Term> products;
  products.reserve(a.terms_.size() * b.terms_.size());
  for (const Term& x : a.terms_) {
    for (const Term& y : b.terms_) products.push_back(Term{add_exps(x.exp, y.exp), x.coeff * y.coeff});
  }
  std::sort(products.begin(), products.end(), term_less);
  for (Term& t : products) {
    if (!out.terms_.empty() && out.terms_.back().exp == t.exp) {
      out.terms_.back().coeff += t.coeff;
      if (out.terms_.back().coeff.is_zero()) out.terms_.pop_back();
    } else {
      out.terms_.push_back(std::move(t));
    }
  }
  return out;
}

LaurentPoly LaurentPoly::derivative(int v) const {
  if (v < 0 || v >= num_vars()) throw std::out_of_range("derivative: variable index out of range");
  LaurentPoly out(reg_);
  for (const Term& t : terms_) {
    if (t.exp[v] == 0) continue;
    Term d{t.exp, t.coeff * Rational(t.exp[v])};
    d.exp[v] = checked_sub(d.exp[v], 1);
    out.terms_.push_back(std::move(d));
  }
  // Decrementing one coordinate uniformly keeps lex order among survivors.
  return out;
}

Rational LaurentPoly::evaluate(std::span<const Rational> values) const {
  if (static_cast<int>(values.size()) != num_vars()) {
    throw std::invalid_argument("evaluate: value count does not match registry");
  }
  Rational sum(0);
  for (const Term& t : terms_) {
    Rational prod = t.coeff;
    for (int v = 0; v < num_vars(); ++v) {
      if (t.exp[v] != 0) prod *= pow_rational(values[v], t.exp[v]);
    }
    sum += prod;
  }
  return sum;
}

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const Term& t : terms_) {
    if (!first) os << " + ";
    first = false;
    os << t.coeff.str();
    for (int v = 0; v < num_vars(); ++v) {
      if (t.exp[v] != 0) os << " * " << reg_.name(v) << "^" << t.exp[v];
    }
  }
  return os.str();
}

LaurentPoly LaurentPoly::parse(Registry reg, std::string_view text) {
  LaurentPoly out(reg);
  const std::string_view body = trim(text);
  if (body.empty()) throw std::invalid_argument("empty Laurent polynomial text");
  std::vector<std::string_view> term_texts;
  std::size_t start = 0;
  int depth = 0;
  for (std::size_t k = 0; k < body.size(); ++k) {
    if (body[k] == '[') ++depth;
    if (body[k] == ']') --depth;
    if (body[k] == '+' && depth == 0) {
      term_texts.push_back(body.substr(start, k - start));
      start = k + 1;
    }
  }
  term_texts.push_back(body.substr(start));

  for (std::string_view tt : term_texts) {
    tt = trim(tt);
    if (tt.empty()) throw std::invalid_argument("malformed Laurent polynomial: '" + std::string(text) + "'");
    Rational coeff(1);
    Exponents exp(reg.num_vars(), 0);
    std::size_t pos = 0;
    bool first_factor = true;
    while (pos <= tt.size()) {
      const std::size_t star = tt.find('*', pos);
      std::string_view factor = trim(tt.substr(pos, star == std::string_view::npos ? std::string_view::npos : star - pos));
      if (factor.empty()) throw std::invalid_argument("malformed Laurent term: '" + std::string(tt) + "'");
      if (factor.front() == 't') {
        int i = 0, a = 0;
        long e = 1;
        const std::string f(factor);
        int consumed = 0;
        if (std::sscanf(f.c_str(), "t[%d,%d]%n", &i, &a, &consumed) != 2) {
          throw std::invalid_argument("malformed Laurent factor: '" + f + "'");
        }
        std::string_view rest = trim(factor.substr(static_cast<std::size_t>(consumed)));
        if (!rest.empty()) {
          if (rest.front() != '^') throw std::invalid_argument("malformed Laurent factor: '" + f + "'");
          const std::string es(trim(rest.substr(1)));
          char* endp = nullptr;
          e = std::strtol(es.c_str(), &endp, 10);
          if (es.empty() || *endp != 0) throw std::invalid_argument("malformed exponent in '" + f + "'");
        }
        if (i < 1 || i > reg.rows || a < 1 || a > reg.cols) {
          throw std::out_of_range("variable " + f + " outside registry");
        }
        auto& slot = exp[reg.index(i, a)];
        slot = checked_add(slot, static_cast<Exponent>(e));
      } else {
        if (!first_factor) throw std::invalid_argument("coefficient must lead the term: '" + std::string(tt) + "'");
        coeff = Rational::parse(factor);
      }
      first_factor = false;
      if (star == std::string_view::npos) break;
      pos = star + 1;
    }
    out += monomial(reg, std::move(exp), coeff);
  }
  return out;
}

std::optional<LaurentPoly> try_div_exact(const LaurentPoly& a, const LaurentPoly& b) {
  if (!(a.registry() == b.registry())) throw RegistryMismatch("Laurent divide: operands use different variable registries");
  if (b.is_zero()) throw std::domain_error("Laurent division by zero");
  const Registry reg = a.registry();
  if (a.is_zero()) return LaurentPoly(reg);

  const Term& lead_b = b.terms().back();
  if (b.is_monomial()) {
    Exponents inv(lead_b.exp.size());
    for (std::size_t k = 0; k < inv.size(); ++k) inv[k] = checked_sub(0, lead_b.exp[k]);
    return a * LaurentPoly::monomial(reg, std::move(inv), Rational(1) / lead_b.coeff);
  }

  // Per-variable degree ranges are additive under multiplication in an
  // integral domain, which confines every quotient term to a finite box.
  const int n = reg.num_vars();
  Exponents lo(n), hi(n);
  for (int v = 0; v < n; ++v) {
    lo[v] = checked_sub(a.min_degree(v), b.min_degree(v));
    hi[v] = checked_sub(a.max_degree(v), b.max_degree(v));
    if (lo[v] > hi[v]) return std::nullopt;
  }

  LaurentPoly quotient(reg);
  LaurentPoly remainder = a;
  while (!remainder.is_zero()) {
    const Term& lead_r = remainder.terms().back();
    Exponents qexp = sub_exps(lead_r.exp, lead_b.exp);
    for (int v = 0; v < n; ++v) {
      if (qexp[v] < lo[v] || qexp[v] > hi[v]) return std::nullopt;
    }
    const LaurentPoly qterm = LaurentPoly::monomial(reg, std::move(qexp), lead_r.coeff / lead_b.coeff);
    remainder -= qterm * b;
    quotient += qterm;
  }
  return quotient;
}

LaurentPoly laurent_div_exact(const LaurentPoly& a, const LaurentPoly& b) {
  auto q = try_div_exact(a, b);
  if (!q) throw InexactDivision("inexact Laurent division: (" + a.str() + ") / (" + b.str() + ")");
  return std::move(*q);
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.str(); }

}  // namespace tnn
