#include "pdo/ratfun.hpp"

#include "pdo/error.hpp"
#include "pdo/gcd.hpp"

namespace pdo {

namespace {

// Divides num and den by a common factor and moves the denominator's unit
// into the numerator.
void reduce(MultiPoly& num, MultiPoly& den) {
  if (den.is_zero()) throw Error(ErrorKind::ZeroDivisor, "rational function with zero denominator");
  if (num.is_zero()) {
    den = MultiPoly(1);
    return;
  }
  if (den.is_constant()) {
    num *= 1 / den.constant_value();
    den = MultiPoly(1);
    return;
  }
  const MultiPoly g = poly_gcd(num, den);
  if (!g.is_one()) {
    num = exact_quotient(num, g);
    den = exact_quotient(den, g);
  }
  const Rational u = den.content();
  if (u != 1) {
    const Rational inv = 1 / u;
    num *= inv;
    den *= inv;
  }
}

// A single term needs no parentheses as a dividend; a divisor also has to
// be a single factor.
bool atomic(const MultiPoly& p) { return p.size() == 1; }

bool atomic_divisor(const MultiPoly& p) {
  if (p.size() != 1) return false;
  const auto& t = p.leading();
  if (t.mono.is_one()) return t.coeff > 0 && t.coeff.get_den() == 1;
  return t.coeff == 1 && t.mono.powers().size() == 1;
}

}  // namespace

RatFun::RatFun(MultiPoly num, MultiPoly den) : num_(std::move(num)), den_(std::move(den)) { reduce(num_, den_); }

RatFun& RatFun::operator+=(const RatFun& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
    if (!den_.is_one()) reduce(num_, den_);
    return *this;
  }
  const MultiPoly g = poly_gcd(den_, o.den_);
  const MultiPoly d1 = exact_quotient(den_, g);
  const MultiPoly d2 = exact_quotient(o.den_, g);
  MultiPoly n = num_ * d2 + o.num_ * d1;
  MultiPoly d = den_ * d2;
  if (g.is_one()) {
    // Coprime denominators: only the unit needs fixing.
    if (n.is_zero()) {
      d = MultiPoly(1);
    } else {
      const Rational u = d.content();
      n *= 1 / u;
      d *= 1 / u;
    }
    num_ = std::move(n);
    den_ = std::move(d);
    return *this;
  }
  num_ = std::move(n);
  den_ = std::move(d);
  reduce(num_, den_);
  return *this;
}

RatFun& RatFun::operator-=(const RatFun& o) { return *this += -o; }

RatFun& RatFun::operator*=(const RatFun& o) {
  if (is_zero() || o.is_zero()) return *this = RatFun();
  if (is_polynomial() && o.is_polynomial()) {
    num_ *= o.num_;
    return *this;
  }
  // Cross-cancel before multiplying: gcd(num, o.den) and gcd(o.num, den).
  const MultiPoly g1 = poly_gcd(num_, o.den_);
  const MultiPoly g2 = poly_gcd(o.num_, den_);
  MultiPoly n = exact_quotient(num_, g1) * exact_quotient(o.num_, g2);
  MultiPoly d = exact_quotient(den_, g2) * exact_quotient(o.den_, g1);
  const Rational u = d.content();
  n *= 1 / u;
  d *= 1 / u;
  num_ = std::move(n);
  den_ = std::move(d);
  return *this;
}

RatFun& RatFun::operator/=(const RatFun& o) { return *this *= o.inverse(); }

RatFun RatFun::operator-() const {
  RatFun r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFun RatFun::inverse() const {
  if (is_zero()) throw Error(ErrorKind::ZeroDivisor, "inverse of zero");
  return RatFun(den_, num_);
}

RatFun RatFun::pow(unsigned k) const {
  RatFun r = *this;
  r.num_ = num_.pow(k);
  r.den_ = den_.pow(k);
  return r;
}

RatFun RatFun::derivative(VarId v) const {
  if (is_polynomial()) return RatFun(num_.derivative(v));
  if (!den_.involves(v)) return RatFun(num_.derivative(v), den_);
  // (n/d)' = (n' d - n d') / d^2
  return RatFun(num_.derivative(v) * den_ - num_ * den_.derivative(v), den_ * den_);
}

RatFun RatFun::substitute(VarId v, const MultiPoly& value) const {
  return RatFun(num_.substitute(v, value), den_.substitute(v, value));
}

std::string RatFun::to_string() const {
  if (is_polynomial()) return num_.to_string();
  const std::string n = num_.to_string();
  const std::string d = den_.to_string();
  return (atomic(num_) ? n : "(" + n + ")") + "/" + (atomic_divisor(den_) ? d : "(" + d + ")");
}

}  // namespace pdo
