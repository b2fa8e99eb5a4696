#include "pdo/multipoly.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

#include "pdo/error.hpp"

namespace pdo {

std::string to_string(const Rational& q) { return q.get_str(); }

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(std::vector<Power> powers) {
  std::sort(powers.begin(), powers.end(), [](const Power& a, const Power& b) { return a.var < b.var; });
  for (const auto& p : powers) {
    if (p.exp == 0) continue;
    if (!powers_.empty() && powers_.back().var == p.var) {
      powers_.back().exp += p.exp;
    } else {
      powers_.push_back(p);
    }
    degree_ += p.exp;
  }
}

Monomial Monomial::of(VarId v, std::uint32_t exp) {
  Monomial m;
  if (exp > 0) {
    m.powers_.push_back({v, exp});
    m.degree_ = exp;
  }
  return m;
}

std::uint32_t Monomial::degree_in(VarId v) const {
  for (const auto& p : powers_) {
    if (p.var == v) return p.exp;
    if (v < p.var) break;
  }
  return 0;
}

bool Monomial::involves_class(VarClass c) const {
  return std::any_of(powers_.begin(), powers_.end(), [c](const Power& p) { return p.var.cls() == c; });
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  auto it = other.powers_.begin();
  for (const auto& p : powers_) {
    while (it != other.powers_.end() && it->var < p.var) ++it;
    if (it == other.powers_.end() || it->var != p.var || it->exp < p.exp) return false;
  }
  return true;
}

Monomial Monomial::quotient(const Monomial& divisor) const {
  Monomial out;
  auto it = divisor.powers_.begin();
  for (const auto& p : powers_) {
    std::uint32_t e = p.exp;
    if (it != divisor.powers_.end() && it->var == p.var) {
      e -= it->exp;
      ++it;
    }
    if (e > 0) {
      out.powers_.push_back({p.var, e});
      out.degree_ += e;
    }
  }
  return out;
}

Monomial Monomial::without(VarId v) const {
  return filtered([v](VarId w) { return w != v; });
}

Monomial Monomial::filtered(const std::function<bool(VarId)>& keep) const {
  Monomial out;
  for (const auto& p : powers_) {
    if (keep(p.var)) {
      out.powers_.push_back(p);
      out.degree_ += p.exp;
    }
  }
  return out;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.powers_.reserve(a.powers_.size() + b.powers_.size());
  auto i = a.powers_.begin();
  auto j = b.powers_.begin();
  while (i != a.powers_.end() && j != b.powers_.end()) {
    if (i->var == j->var) {
      out.powers_.push_back({i->var, i->exp + j->exp});
      ++i;
      ++j;
    } else if (i->var < j->var) {
      out.powers_.push_back(*i++);
    } else {
      out.powers_.push_back(*j++);
    }
  }
  out.powers_.insert(out.powers_.end(), i, a.powers_.end());
  out.powers_.insert(out.powers_.end(), j, b.powers_.end());
  out.degree_ = a.degree_ + b.degree_;
  return out;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
  Monomial out;
  auto j = b.powers_.begin();
  for (const auto& p : a.powers_) {
    while (j != b.powers_.end() && j->var < p.var) ++j;
    if (j != b.powers_.end() && j->var == p.var) {
      const auto e = std::min(p.exp, j->exp);
      out.powers_.push_back({p.var, e});
      out.degree_ += e;
    }
  }
  return out;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  return (a * b).quotient(gcd(a, b));
}

std::string Monomial::to_string() const {
  if (powers_.empty()) return "1";
  std::string s;
  for (const auto& p : powers_) {
    if (!s.empty()) s += '*';
    s += var_name(p.var);
    if (p.exp > 1) s += "^" + std::to_string(p.exp);
  }
  return s;
}

int compare_grlex(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
  const auto& pa = a.powers();
  const auto& pb = b.powers();
  const std::size_t n = std::min(pa.size(), pb.size());
  for (std::size_t k = 0; k < n; ++k) {
    if (pa[k].var != pb[k].var) {
      // The side holding the smaller variable has a positive exponent in a
      // more significant position.
      return pa[k].var < pb[k].var ? 1 : -1;
    }
    if (pa[k].exp != pb[k].exp) return pa[k].exp < pb[k].exp ? -1 : 1;
  }
  if (pa.size() == pb.size()) return 0;
  return pa.size() > pb.size() ? 1 : -1;
}

// ---------------------------------------------------------------- MultiPoly

MultiPoly::MultiPoly(const Rational& c) {
  if (c != 0) terms_.push_back({Monomial{}, c});
}

MultiPoly MultiPoly::var(VarId v, std::uint32_t exp) { return monomial(Monomial::of(v, exp)); }

MultiPoly MultiPoly::monomial(Monomial m, Rational c) {
  MultiPoly p;
  if (c != 0) p.terms_.push_back({std::move(m), std::move(c)});
  return p;
}

MultiPoly MultiPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return compare_grlex(a.mono, b.mono) > 0; });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff += t.coeff;
    } else {
      if (!out.empty() && out.back().coeff == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coeff == 0) out.pop_back();
  return MultiPoly(std::move(out), true);
}

Rational MultiPoly::constant_value() const {
  if (terms_.empty()) return 0;
  return terms_[0].coeff;
}

Rational MultiPoly::constant_term() const {
  if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coeff;
  return 0;
}

std::uint32_t MultiPoly::total_degree() const { return terms_.empty() ? 0 : terms_.front().mono.degree(); }

std::uint32_t MultiPoly::degree(VarId v) const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree_in(v));
  return d;
}

std::vector<VarId> MultiPoly::variables() const {
  std::vector<VarId> vars;
  for (const auto& t : terms_)
    for (const auto& p : t.mono.powers()) vars.push_back(p.var);
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  return vars;
}

bool MultiPoly::involves(VarId v) const {
  return std::any_of(terms_.begin(), terms_.end(), [v](const Term& t) { return t.mono.degree_in(v) > 0; });
}

bool MultiPoly::involves_class(VarClass c) const {
  return std::any_of(terms_.begin(), terms_.end(), [c](const Term& t) { return t.mono.involves_class(c); });
}

namespace {

// Merges two descending term lists, with b scaled by `sign`.
std::vector<Term> merge_terms(const std::vector<Term>& a, const std::vector<Term>& b, int sign) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    const int c = compare_grlex(i->mono, j->mono);
    if (c > 0) {
      out.push_back(*i++);
    } else if (c < 0) {
      out.push_back(sign > 0 ? *j : Term{j->mono, -j->coeff});
      ++j;
    } else {
      Rational s = sign > 0 ? Rational(i->coeff + j->coeff) : Rational(i->coeff - j->coeff);
      if (s != 0) out.push_back({i->mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i != a.end(); ++i) out.push_back(*i);
  for (; j != b.end(); ++j) out.push_back(sign > 0 ? *j : Term{j->mono, -j->coeff});
  return out;
}

}  // namespace

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  if (o.terms_.empty()) return *this;
  if (terms_.empty()) return *this = o;
  terms_ = merge_terms(terms_, o.terms_, 1);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  if (o.terms_.empty()) return *this;
  terms_ = merge_terms(terms_, o.terms_, -1);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) { return *this = *this * o; }

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
  } else if (c != 1) {
    for (auto& t : terms_) t.coeff *= c;
  }
  return *this;
}

MultiPoly MultiPoly::times_monomial(const Monomial& m, const Rational& c) const {
  if (c == 0) return {};
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back({t.mono * m, t.coeff * c});
  return MultiPoly(std::move(out), true);
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.size() == 1) return b.times_monomial(a.terms_[0].mono, a.terms_[0].coeff);
  if (b.size() == 1) return a.times_monomial(b.terms_[0].mono, b.terms_[0].coeff);
  // Accumulate products row by row into an ordered map; the short side
  // drives the outer loop.
  const MultiPoly& s = a.size() <= b.size() ? a : b;
  const MultiPoly& l = a.size() <= b.size() ? b : a;
  std::vector<Term> prod;
  prod.reserve(s.size() * l.size());
  for (const auto& ts : s.terms_)
    for (const auto& tl : l.terms_) prod.push_back({ts.mono * tl.mono, ts.coeff * tl.coeff});
  return MultiPoly::from_terms(std::move(prod));
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t k = 0; k < a.terms_.size(); ++k) {
    if (a.terms_[k].coeff != b.terms_[k].coeff || !(a.terms_[k].mono == b.terms_[k].mono)) return false;
  }
  return true;
}

MultiPoly MultiPoly::pow(unsigned k) const {
  MultiPoly result(1);
  MultiPoly base = *this;
  while (k > 0) {
    if (k & 1u) result *= base;
    k >>= 1u;
    if (k > 0) base = base * base;
  }
  return result;
}

MultiPoly MultiPoly::derivative(VarId v) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    const auto e = t.mono.degree_in(v);
    if (e == 0) continue;
    std::vector<Power> ps = t.mono.powers();
    for (auto& p : ps)
      if (p.var == v) p.exp -= 1;
    out.push_back({Monomial(std::move(ps)), t.coeff * e});
  }
  return from_terms(std::move(out));
}

MultiPoly MultiPoly::substitute(VarId v, const MultiPoly& value) const {
  if (!involves(v)) return *this;
  const auto coeffs = coefficients_in(v);
  // Horner in v.
  MultiPoly acc;
  for (std::size_t k = coeffs.size(); k-- > 0;) {
    acc = acc * value + coeffs[k];
  }
  return acc;
}

MultiPoly MultiPoly::evaluate(const std::map<VarId, Rational>& point) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Rational c = t.coeff;
    std::vector<Power> rest;
    for (const auto& p : t.mono.powers()) {
      auto it = point.find(p.var);
      if (it == point.end()) {
        rest.push_back(p);
      } else {
        Rational f;
        mpz_pow_ui(f.get_num_mpz_t(), it->second.get_num_mpz_t(), p.exp);
        mpz_pow_ui(f.get_den_mpz_t(), it->second.get_den_mpz_t(), p.exp);
        c *= f;
      }
    }
    if (c != 0) out.push_back({Monomial(std::move(rest)), std::move(c)});
  }
  return from_terms(std::move(out));
}

std::vector<MultiPoly> MultiPoly::coefficients_in(VarId v) const {
  std::vector<std::vector<Term>> buckets(degree(v) + 1);
  for (const auto& t : terms_) {
    const auto e = t.mono.degree_in(v);
    buckets[e].push_back({e > 0 ? t.mono.without(v) : t.mono, t.coeff});
  }
  std::vector<MultiPoly> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.push_back(from_terms(std::move(b)));
  return out;
}

MultiPoly MultiPoly::from_coefficients(VarId v, const std::vector<MultiPoly>& coeffs) {
  std::vector<Term> all;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    const auto m = Monomial::of(v, static_cast<std::uint32_t>(k));
    for (const auto& t : coeffs[k].terms_) all.push_back({t.mono * m, t.coeff});
  }
  return from_terms(std::move(all));
}

std::vector<std::pair<Monomial, MultiPoly>> MultiPoly::collect(const std::function<bool(VarId)>& outer) const {
  std::map<Monomial, std::vector<Term>, GrlexLess> groups;
  for (const auto& t : terms_) {
    auto out_m = t.mono.filtered(outer);
    auto in_m = t.mono.filtered([&](VarId v) { return !outer(v); });
    groups[std::move(out_m)].push_back({std::move(in_m), t.coeff});
  }
  std::vector<std::pair<Monomial, MultiPoly>> result;
  result.reserve(groups.size());
  for (auto it = groups.rbegin(); it != groups.rend(); ++it) {
    result.emplace_back(it->first, from_terms(std::move(it->second)));
  }
  return result;
}

Rational MultiPoly::content() const {
  if (terms_.empty()) return 0;
  Integer num_gcd = 0;
  Integer den_lcm = 1;
  for (const auto& t : terms_) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coeff.get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.get_den_mpz_t());
  }
  Rational c(num_gcd, den_lcm);
  c.canonicalize();
  if (terms_.front().coeff < 0) c = -c;
  return c;
}

MultiPoly MultiPoly::normalized() const {
  if (terms_.empty()) return {};
  const Rational c = content();
  if (c == 1) return *this;
  MultiPoly r = *this;
  const Rational inv = 1 / c;
  for (auto& t : r.terms_) t.coeff *= inv;
  return r;
}

MultiPoly MultiPoly::integral() const {
  Integer den_lcm = 1;
  for (const auto& t : terms_) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.get_den_mpz_t());
  if (den_lcm == 1) return *this;
  return *this * Rational(den_lcm);
}

Monomial MultiPoly::monomial_content() const {
  if (terms_.empty()) return {};
  Monomial g = terms_.front().mono;
  for (const auto& t : terms_) {
    if (g.is_one()) break;
    g = Monomial::gcd(g, t.mono);
  }
  return g;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coeff;
    const bool neg = c < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) os << '-';
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    if (t.mono.is_one()) {
      os << c.get_str();
    } else if (c == 1) {
      os << t.mono.to_string();
    } else {
      os << c.get_str() << '*' << t.mono.to_string();
    }
  }
  return os.str();
}

// ---------------------------------------------------------------- division

std::optional<MultiPoly> divide_exact(const MultiPoly& a, const MultiPoly& b) {
  if (b.is_zero()) throw Error(ErrorKind::ZeroDivisor, "division by the zero polynomial");
  if (a.is_zero()) return MultiPoly{};
  if (b.is_constant()) return a * (1 / b.constant_value());
  if (b.is_monomial()) {
    const auto& lt = b.leading();
    const Rational inv = 1 / lt.coeff;
    std::vector<Term> out;
    out.reserve(a.size());
    for (const auto& t : a.terms()) {
      if (!lt.mono.divides(t.mono)) return std::nullopt;
      out.push_back({t.mono.quotient(lt.mono), t.coeff * inv});
    }
    return MultiPoly::from_terms(std::move(out));
  }
  if (a.total_degree() < b.total_degree()) return std::nullopt;
  // Degree bounds per variable reject most non-divisible pairs cheaply.
  for (const auto v : b.variables()) {
    if (a.degree(v) < b.degree(v)) return std::nullopt;
  }
  const auto& lt = b.leading();
  const Rational inv = 1 / lt.coeff;
  std::vector<Term> quotient;
  MultiPoly rem = a;
  while (!rem.is_zero()) {
    const auto& r = rem.leading();
    if (!lt.mono.divides(r.mono)) return std::nullopt;
    Term q{r.mono.quotient(lt.mono), r.coeff * inv};
    rem -= b.times_monomial(q.mono, q.coeff);
    quotient.push_back(std::move(q));
  }
  // Quotient terms are produced in strictly descending order.
  return MultiPoly::from_terms(std::move(quotient));
}

MultiPoly exact_quotient(const MultiPoly& a, const MultiPoly& b) {
  auto q = divide_exact(a, b);
  if (!q) {
    throw Error(ErrorKind::InvariantViolation, "expected exact division of " + a.to_string() + " by " + b.to_string());
  }
  return std::move(*q);
}

bool divides(const MultiPoly& b, const MultiPoly& a) {
  if (b.is_zero()) return a.is_zero();
  return divide_exact(a, b).has_value();
}

MultiPoly reduce_mod_binomial(const MultiPoly& p, VarId vi, VarId vj, const MultiPoly& c) {
  if (vi == vj) throw Error(ErrorKind::MalformedIdeal, "binomial needs two distinct variables");
  if (c.involves(vi) || c.involves(vj)) {
    throw Error(ErrorKind::MalformedIdeal,
                "right-hand side " + c.to_string() + " involves " + var_name(vi) + " or " + var_name(vj));
  }
  std::vector<MultiPoly> c_pows{MultiPoly(1)};
  std::vector<Term> untouched;
  MultiPoly rewritten;
  for (const auto& t : p.terms()) {
    const auto ei = t.mono.degree_in(vi);
    const auto ej = t.mono.degree_in(vj);
    const auto m = std::min(ei, ej);
    if (m == 0) {
      untouched.push_back(t);
      continue;
    }
    while (c_pows.size() <= m) c_pows.push_back(c_pows.back() * c);
    const Monomial rest = t.mono.quotient(Monomial({{vi, m}, {vj, m}}));
    rewritten += c_pows[m].times_monomial(rest, t.coeff);
  }
  return MultiPoly::from_terms(std::move(untouched)) + rewritten;
}

}  // namespace pdo
