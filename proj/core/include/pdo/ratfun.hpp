#pragma once

#include <string>

#include "pdo/multipoly.hpp"

namespace pdo {

/// A reduced quotient num/den of polynomials. The denominator is kept in
/// unit normal form, so two equal rational functions have identical fields.
class RatFun {
 public:
  RatFun() : den_(1) {}
  RatFun(MultiPoly p) : num_(std::move(p)), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFun(const Rational& c) : num_(c), den_(1) {}       // NOLINT(google-explicit-constructor)
  RatFun(long c) : num_(c), den_(1) {}                   // NOLINT(google-explicit-constructor)
  RatFun(MultiPoly num, MultiPoly den);

  const MultiPoly& num() const { return num_; }
  const MultiPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_one(); }
  bool is_constant() const { return is_polynomial() && num_.is_constant(); }
  bool is_one() const { return is_polynomial() && num_.is_one(); }
  bool involves(VarId v) const { return num_.involves(v) || den_.involves(v); }
  bool involves_class(VarClass c) const { return num_.involves_class(c) || den_.involves_class(c); }

  RatFun& operator+=(const RatFun& o);
  RatFun& operator-=(const RatFun& o);
  RatFun& operator*=(const RatFun& o);
  RatFun& operator/=(const RatFun& o);

  friend RatFun operator+(RatFun a, const RatFun& b) { return a += b; }
  friend RatFun operator-(RatFun a, const RatFun& b) { return a -= b; }
  friend RatFun operator*(RatFun a, const RatFun& b) { return a *= b; }
  friend RatFun operator/(RatFun a, const RatFun& b) { return a /= b; }
  RatFun operator-() const;

  friend bool operator==(const RatFun& a, const RatFun& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend bool operator!=(const RatFun& a, const RatFun& b) { return !(a == b); }

  RatFun inverse() const;
  RatFun pow(unsigned k) const;
  RatFun derivative(VarId v) const;
  RatFun substitute(VarId v, const MultiPoly& value) const;

  /// "num" when the denominator is 1, else "(num)/(den)" with parentheses
  /// dropped around single-factor parts.
  std::string to_string() const;

 private:
  MultiPoly num_;
  MultiPoly den_;
};

}  // namespace pdo
