#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pdo/var.hpp"

namespace pdo {

using Rational = mpq_class;
using Integer = mpz_class;

/// Canonical text of a rational: "p" or "p/q" in lowest terms.
std::string to_string(const Rational& q);

struct Power {
  VarId var;
  std::uint32_t exp = 0;

  friend bool operator==(const Power&, const Power&) = default;
};

/// A power product. Factors are kept sorted by variable with positive
/// exponents; the total degree is cached because grlex compares it first.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<Power> powers);

  static Monomial of(VarId v, std::uint32_t exp = 1);

  const std::vector<Power>& powers() const { return powers_; }
  std::uint32_t degree() const { return degree_; }
  std::uint32_t degree_in(VarId v) const;
  bool is_one() const { return powers_.empty(); }
  bool involves_class(VarClass c) const;

  bool divides(const Monomial& other) const;
  Monomial quotient(const Monomial& divisor) const;
  Monomial without(VarId v) const;

  /// Keeps only the factors whose variable satisfies `keep`.
  Monomial filtered(const std::function<bool(VarId)>& keep) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.degree_ == b.degree_ && a.powers_ == b.powers_;
  }

  static Monomial gcd(const Monomial& a, const Monomial& b);
  static Monomial lcm(const Monomial& a, const Monomial& b);

  std::string to_string() const;

 private:
  std::vector<Power> powers_;
  std::uint32_t degree_ = 0;
};

/// Graded lexicographic comparison: total degree first, then exponents
/// compared variable by variable in ascending VarId order (the first
/// variable in the total order is the most significant). Returns <0, 0, >0.
int compare_grlex(const Monomial& a, const Monomial& b);

struct GrlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const { return compare_grlex(a, b) < 0; }
};

struct Term {
  Monomial mono;
  Rational coeff;
};

/// Sparse multivariate polynomial over Q. Terms are stored in descending
/// grlex order with nonzero coefficients; the zero polynomial has no terms.
class MultiPoly {
 public:
  MultiPoly() = default;
  MultiPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
  MultiPoly(long c) : MultiPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)

  static MultiPoly var(VarId v, std::uint32_t exp = 1);
  static MultiPoly monomial(Monomial m, Rational c = 1);
  /// Sorts, merges duplicates and drops zeros.
  static MultiPoly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_one() const { return is_constant() && !is_zero() && terms_[0].coeff == 1; }

  /// Value of a constant polynomial (0 for the zero polynomial).
  Rational constant_value() const;
  Rational constant_term() const;
  const Term& leading() const { return terms_.front(); }

  std::uint32_t total_degree() const;
  std::uint32_t degree(VarId v) const;
  std::vector<VarId> variables() const;
  bool involves(VarId v) const;
  bool involves_class(VarClass c) const;

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);
  MultiPoly& operator*=(const Rational& c);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
  friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }
  MultiPoly operator-() const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b);
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

  MultiPoly pow(unsigned k) const;
  MultiPoly times_monomial(const Monomial& m, const Rational& c = 1) const;
  MultiPoly derivative(VarId v) const;
  MultiPoly substitute(VarId v, const MultiPoly& value) const;
  MultiPoly evaluate(const std::map<VarId, Rational>& point) const;

  /// Coefficients as a univariate polynomial in v, index = degree.
  std::vector<MultiPoly> coefficients_in(VarId v) const;
  static MultiPoly from_coefficients(VarId v, const std::vector<MultiPoly>& coeffs);

  /// Groups terms by their "outer" part (the factors selected by `outer`).
  /// Each entry pairs an outer monomial with the polynomial left over in the
  /// remaining variables, ordered by descending grlex outer monomial.
  std::vector<std::pair<Monomial, MultiPoly>> collect(const std::function<bool(VarId)>& outer) const;

  /// Rational content with the sign of the leading coefficient, so that
  /// `*this / content()` is primitive over Z with positive leading coefficient.
  Rational content() const;
  /// Unit normal form: primitive integer coefficients, positive leading coefficient.
  MultiPoly normalized() const;
  /// Multiplies every coefficient by the lcm of denominators (sign kept).
  MultiPoly integral() const;

  /// gcd of all monomials (the monomial content).
  Monomial monomial_content() const;

  /// Canonical text: descending grlex terms, "*" between factors.
  std::string to_string() const;

 private:
  explicit MultiPoly(std::vector<Term> sorted_terms, bool /*tag*/) : terms_(std::move(sorted_terms)) {}
  std::vector<Term> terms_;
};

/// Exact quotient a/b if b divides a in Q[vars], otherwise nullopt.
std::optional<MultiPoly> divide_exact(const MultiPoly& a, const MultiPoly& b);
/// As divide_exact, but a non-exact division is an invariant violation.
MultiPoly exact_quotient(const MultiPoly& a, const MultiPoly& b);
bool divides(const MultiPoly& b, const MultiPoly& a);

/// Normal form modulo (v_i v_j - c): each monomial with both exponents
/// positive is rewritten by v_i v_j -> c until one of them is zero. The
/// result is 0 exactly when (v_i v_j - c) divides p.
MultiPoly reduce_mod_binomial(const MultiPoly& p, VarId vi, VarId vj, const MultiPoly& c);

}  // namespace pdo
