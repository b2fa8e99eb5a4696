#pragma once

#include <climits>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "pdo/ratfun.hpp"

namespace pdo {

/// Exponent vector of a monomial in the partial-derivative symbols.
using DMono = std::vector<std::uint32_t>;

std::uint32_t dmono_degree(const DMono& m);

/// Descending graded lexicographic order on ∂-monomials with ∂1 > ∂2 > ...
/// Used as the map comparator so that iteration starts at the leading term.
struct DMonoGreater {
  bool operator()(const DMono& a, const DMono& b) const;
};

/// "D1^2 D2"; the empty monomial renders as "1".
std::string dmono_to_string(const DMono& m);

/// A differential operator sum_a c_a(x) D^a with coefficients on the left.
///
/// Coefficients are rational functions. They are normally in the x and
/// parameter variables, but mu-class variables are allowed as well so the
/// shifted operators L - mu and the cofactor operators of the resultant
/// construction live in the same type. Differentiation only sees x.
class DiffOp {
 public:
  using TermMap = std::map<DMono, RatFun, DMonoGreater>;
  static constexpr int kZeroOrder = INT_MIN;

  explicit DiffOp(std::size_t dim = 1) : dim_(dim) {}

  static DiffOp constant(std::size_t dim, const RatFun& c);
  /// D_i^e, 1-based index.
  static DiffOp partial(std::size_t dim, std::size_t i, std::uint32_t e = 1);
  static DiffOp monomial(std::size_t dim, DMono m, const RatFun& c = RatFun(1));
  /// Constant-coefficient operator obtained from a polynomial in z1..zn
  /// (and parameters) by z_i -> D_i.
  static DiffOp from_symbol(std::size_t dim, const MultiPoly& symbol);

  std::size_t dim() const { return dim_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  int order() const;
  /// Coefficient of D^m (zero when absent).
  RatFun coeff(const DMono& m) const;
  const std::pair<const DMono, RatFun>& leading() const { return *terms_.begin(); }

  /// Coefficient of the order-zero term.
  RatFun constant_term() const { return coeff(DMono(dim_, 0)); }

  void add_term(const DMono& m, const RatFun& c);

  DiffOp& operator+=(const DiffOp& o);
  DiffOp& operator-=(const DiffOp& o);
  friend DiffOp operator+(DiffOp a, const DiffOp& b) { return a += b; }
  friend DiffOp operator-(DiffOp a, const DiffOp& b) { return a -= b; }
  DiffOp operator-() const;

  /// Left multiplication by a function: f * sum c_a D^a = sum (f c_a) D^a.
  DiffOp left_multiply(const RatFun& f) const;

  /// Applies f to every coefficient (zeros are dropped).
  DiffOp map_coefficients(const std::function<RatFun(const RatFun&)>& f) const;

  friend bool operator==(const DiffOp& a, const DiffOp& b) { return a.dim_ == b.dim_ && a.terms_ == b.terms_; }
  friend bool operator!=(const DiffOp& a, const DiffOp& b) { return !(a == b); }

  /// Canonical text: descending terms, each coefficient to the left of its
  /// monomial, e.g. "(x1) D1 + 1" or "D1^2 - D2^2".
  std::string to_string() const;

 private:
  std::size_t dim_;
  TermMap terms_;
};

/// r(x, z) * exp(x1 z1 + ... + xn zn).
struct ExpFunction {
  std::size_t dim = 1;
  RatFun coeff = RatFun(1);

  static ExpFunction plane_wave(std::size_t dim) { return {dim, RatFun(1)}; }

  friend bool operator==(const ExpFunction& a, const ExpFunction& b) {
    return a.dim == b.dim && a.coeff == b.coeff;
  }
  std::string to_string() const;
};

}  // namespace pdo
