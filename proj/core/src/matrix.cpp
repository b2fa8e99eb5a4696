#include "pdo/matrix.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <random>

#include "pdo/error.hpp"
#include "pdo/gcd.hpp"

namespace pdo {

MultiPoly bareiss_det(PolyMatrix m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw Error(ErrorKind::InvalidArgument, "determinant of a non-square matrix");
  if (n == 0) return MultiPoly(1);
  int sign = 1;
  MultiPoly prev(1);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t best = n;
    for (std::size_t i = k; i < n; ++i) {
      if (m(i, k).is_zero()) continue;
      if (best == n || m(i, k).size() < m(best, k).size()) best = i;
    }
    if (best == n) return {};
    if (best != k) {
      m.swap_rows(best, k);
      sign = -sign;
    }
    if (k + 1 == n) break;
    const MultiPoly& pivot = m(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const MultiPoly lead = m(i, k);
      for (std::size_t j = k + 1; j < n; ++j) {
        const bool row_zero = m(i, j).is_zero();
        const bool col_zero = lead.is_zero() || m(k, j).is_zero();
        if (row_zero && col_zero) continue;
        MultiPoly t;
        if (col_zero) {
          t = pivot * m(i, j);
        } else if (row_zero) {
          t = -(lead * m(k, j));
        } else {
          t = pivot * m(i, j) - lead * m(k, j);
        }
        m(i, j) = prev.is_one() ? std::move(t) : exact_quotient(t, prev);
      }
      m(i, k) = MultiPoly{};
    }
    prev = m(k, k);
  }
  MultiPoly d = m(n - 1, n - 1);
  return sign > 0 ? d : -d;
}

std::size_t rank_rational(Matrix<Rational> m) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(p, r);
    const Rational inv = 1 / m(r, c);
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      if (m(i, c) == 0) continue;
      const Rational f = m(i, c) * inv;
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    ++r;
  }
  return r;
}

namespace {

// Fraction-free echelon elimination. The entries below the current pivot
// row are always minors of the input, so dividing by the previous pivot is
// exact. Works for any exact ring element type providing the operations.
template <class T, class IsZero, class Div>
std::size_t fraction_free_rank(Matrix<T> m, IsZero is_zero, Div div_exact) {
  std::size_t r = 0;
  T prev(1);
  bool prev_is_one = true;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = m.rows();
    for (std::size_t i = r; i < m.rows(); ++i) {
      if (!is_zero(m(i, c))) {
        p = i;
        break;
      }
    }
    if (p == m.rows()) continue;
    m.swap_rows(p, r);
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      const T lead = m(i, c);
      for (std::size_t j = c + 1; j < m.cols(); ++j) {
        if (is_zero(lead) && is_zero(m(i, j))) continue;
        T t = m(r, c) * m(i, j) - lead * m(r, j);
        m(i, j) = prev_is_one ? std::move(t) : div_exact(t, prev);
      }
      m(i, c) = T(0);
    }
    prev = m(r, c);
    prev_is_one = false;
    ++r;
  }
  return r;
}

std::size_t rank_integer(Matrix<Integer> m) {
  return fraction_free_rank(
      std::move(m), [](const Integer& a) { return a == 0; },
      [](const Integer& a, const Integer& b) {
        Integer q;
        mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        return q;
      });
}

std::size_t rank_at(const PolyMatrix& m, const std::map<VarId, Rational>& point) {
  Matrix<Integer> im(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::vector<Rational> row(m.cols());
    Integer den_lcm = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const MultiPoly v = m(i, j).evaluate(point);
      row[j] = v.constant_value();
      mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), row[j].get_den_mpz_t());
    }
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Rational scaled = row[j] * Rational(den_lcm);
      im(i, j) = scaled.get_num();
    }
  }
  return rank_integer(std::move(im));
}

// Sum of the k largest values.
std::uint64_t top_sum(std::vector<std::uint32_t> v, std::size_t k) {
  std::sort(v.begin(), v.end(), std::greater<>());
  std::uint64_t s = 0;
  for (std::size_t i = 0; i < std::min(k, v.size()); ++i) s += v[i];
  return s;
}

constexpr std::uint64_t kGridLimit = 20000;

}  // namespace

std::size_t rank_fraction_free(PolyMatrix m) {
  return fraction_free_rank(
      std::move(m), [](const MultiPoly& a) { return a.is_zero(); },
      [](const MultiPoly& a, const MultiPoly& b) { return exact_quotient(a, b); });
}

PolyMatrix clear_row_denominators(const RatMatrix& m, std::vector<MultiPoly>* clearing) {
  PolyMatrix out(m.rows(), m.cols());
  if (clearing) clearing->assign(m.rows(), MultiPoly(1));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    MultiPoly l(1);
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!m(i, j).is_polynomial()) l = poly_lcm(l, m(i, j).den());
    }
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const RatFun& e = m(i, j);
      out(i, j) = e.is_polynomial() ? e.num() * l : e.num() * exact_quotient(l, e.den());
    }
    if (clearing) (*clearing)[i] = l;
  }
  return out;
}

RankReport matrix_rank_over_fraction_field(const RatMatrix& m, std::uint64_t seed) {
  return matrix_rank_over_fraction_field(clear_row_denominators(m), seed);
}

RankReport matrix_rank_over_fraction_field(const PolyMatrix& m, std::uint64_t seed) {
  RankReport report;
  const std::size_t full = std::min(m.rows(), m.cols());
  std::vector<VarId> vars;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      for (const auto v : m(i, j).variables()) vars.push_back(v);
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());

  std::mt19937_64 rng(seed);
  std::map<VarId, Rational> point;
  for (const auto v : vars) {
    // Raw engine output keeps the point reproducible across standard libraries.
    point[v] = Rational(static_cast<long>(rng() % 2001) - 1000);
  }
  std::size_t r = rank_at(m, point);
  report.evaluations = 1;

  while (r < full) {
    std::uint64_t grid = 1;
    std::vector<std::uint32_t> bounds;
    for (const auto v : vars) {
      std::vector<std::uint32_t> row_deg(m.rows(), 0);
      std::vector<std::uint32_t> col_deg(m.cols(), 0);
      for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
          const auto d = m(i, j).degree(v);
          row_deg[i] = std::max(row_deg[i], d);
          col_deg[j] = std::max(col_deg[j], d);
        }
      }
      const auto b = std::min(top_sum(row_deg, r + 1), top_sum(col_deg, r + 1));
      bounds.push_back(static_cast<std::uint32_t>(b));
      if (grid <= kGridLimit) grid *= (b + 1);
    }
    if (grid > kGridLimit) {
      report.rank = rank_fraction_free(m);
      report.symbolic_fallback = true;
      report.evaluations = 0;
      return report;
    }
    // Odometer over the grid {0..b_v} for each variable.
    std::vector<std::uint32_t> idx(vars.size(), 0);
    bool raised = false;
    while (true) {
      for (std::size_t k = 0; k < vars.size(); ++k) point[vars[k]] = Rational(idx[k]);
      const std::size_t rk = rank_at(m, point);
      ++report.evaluations;
      if (rk > r) {
        r = rk;
        raised = true;
        break;
      }
      std::size_t k = 0;
      while (k < vars.size() && idx[k] == bounds[k]) idx[k++] = 0;
      if (k == vars.size()) break;
      ++idx[k];
    }
    if (!raised) break;
  }
  report.rank = r;
  return report;
}

}  // namespace pdo
