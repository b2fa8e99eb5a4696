#include "pdo/resultant.hpp"

#include <algorithm>
#include <future>
#include <numeric>

#include "pdo/error.hpp"
#include "pdo/gcd.hpp"
#include "pdo/operator_algebra.hpp"

namespace pdo {

MonomialBasis omega_basis(std::size_t n, std::uint32_t d) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "basis in dimension 0");
  MonomialBasis b{n, d, {}};
  DMono m(n, 0);
  std::function<void(std::size_t, std::uint32_t)> rec = [&](std::size_t i, std::uint32_t left) {
    if (i == n) {
      b.entries.push_back(m);
      return;
    }
    for (std::uint32_t e = 0; e <= left; ++e) {
      m[i] = e;
      rec(i + 1, left - e);
    }
    m[i] = 0;
  };
  rec(0, d);
  std::sort(b.entries.begin(), b.entries.end(), DMonoGreater{});
  return b;
}

std::vector<RatFun> coeff_vector(const DiffOp& l, std::uint32_t d) {
  if (l.order() > static_cast<int>(d))
    throw Error(ErrorKind::OrderTooHigh,
                "order " + std::to_string(l.order()) + " exceeds " + std::to_string(d) + ": " + l.to_string());
  const MonomialBasis b = omega_basis(l.dim(), d);
  std::vector<RatFun> v;
  v.reserve(b.size());
  for (const auto& e : b.entries) v.push_back(l.coeff(e));
  return v;
}

namespace {

DiffOp shifted(const DiffOp& op, std::size_t i) {
  return op - DiffOp::constant(op.dim(), RatFun(MultiPoly::var(mu_var(static_cast<std::uint32_t>(i + 1)))));
}

}  // namespace

DiffOp ResultantMatrix::row_generator(std::size_t r) const {
  const auto& pr = provenance.at(r);
  const auto basis = omega_basis(n, static_cast<std::uint32_t>(N - orders[pr.op]));
  return compose(DiffOp::monomial(n, basis.entries[pr.omega]), shifted(operators[pr.op], pr.op));
}

ResultantMatrix build_resultant_matrix(const std::vector<DiffOp>& ops, std::size_t n) {
  if (ops.size() != n + 1)
    throw Error(ErrorKind::DimensionMismatch,
                std::to_string(ops.size()) + " operators in dimension " + std::to_string(n) + " (need n+1)");
  ResultantMatrix m;
  m.n = n;
  m.operators = ops;
  int sum = 0;
  for (const auto& op : ops) {
    if (op.dim() != n)
      throw Error(ErrorKind::DimensionMismatch, "operator of dimension " + std::to_string(op.dim()));
    if (op.is_zero()) throw Error(ErrorKind::ZeroOperator, "zero operator in a resultant");
    m.orders.push_back(op.order());
    sum += op.order();
  }
  m.N = sum - static_cast<int>(n);
  if (m.N < 0) throw Error(ErrorKind::NegativeN, "N = " + std::to_string(m.N) + " < 0");
  m.columns = omega_basis(n, static_cast<std::uint32_t>(m.N));

  std::vector<std::vector<RatFun>> rat_rows;
  for (std::size_t i = 0; i < ops.size(); ++i) {
    const int deg = m.N - m.orders[i];
    if (deg < 0) continue;
    const DiffOp s = shifted(ops[i], i);
    const auto basis = omega_basis(n, static_cast<std::uint32_t>(deg));
    for (std::size_t j = 0; j < basis.size(); ++j) {
      rat_rows.push_back(coeff_vector(compose(DiffOp::monomial(n, basis.entries[j]), s), static_cast<std::uint32_t>(m.N)));
      m.provenance.push_back({i, j});
    }
  }
  RatMatrix rm(rat_rows.size(), m.columns.size());
  for (std::size_t r = 0; r < rat_rows.size(); ++r)
    for (std::size_t c = 0; c < m.columns.size(); ++c) rm(r, c) = rat_rows[r][c];
  m.rows = clear_row_denominators(rm, &m.clearing);
  return m;
}

YoungSelections::YoungSelections(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), parts_(cols, 0) {
  if (rows < cols) throw Error(ErrorKind::TooWide, std::to_string(rows) + " rows, " + std::to_string(cols) + " columns");
}

bool YoungSelections::next(RowSelection& out) {
  if (done_) return false;
  if (!started_) {
    started_ = true;
  } else {
    if (cols_ == 0) {
      done_ = true;
      return false;
    }
    std::size_t k = cols_;
    for (std::size_t i = cols_; i-- > 1;) {
      if (parts_[i] < parts_[i - 1]) {
        k = i;
        break;
      }
    }
    if (k < cols_) {
      ++parts_[k];
      std::fill(parts_.begin() + static_cast<std::ptrdiff_t>(k) + 1, parts_.end(), 0);
    } else {
      if (parts_[0] == rows_ - cols_) {
        done_ = true;
        return false;
      }
      ++parts_[0];
      std::fill(parts_.begin() + 1, parts_.end(), 0);
    }
  }
  out = selection_from_parts(rows_, parts_);
  return true;
}

RowSelection selection_from_parts(std::size_t rows, const std::vector<std::size_t>& parts) {
  const std::size_t slack = rows - parts.size();
  RowSelection sel(parts.size());
  for (std::size_t i = 0; i < parts.size(); ++i) sel[i] = slack + i - parts[i];
  return sel;
}

SampledSelections::SampledSelections(std::size_t rows, std::size_t cols, std::uint64_t seed)
    : rows_(rows), cols_(cols), rng_(seed) {
  if (rows < cols) throw Error(ErrorKind::TooWide, std::to_string(rows) + " rows, " + std::to_string(cols) + " columns");
}

std::uint64_t SampledSelections::uniform(std::uint64_t bound) {
  const std::uint64_t range = bound + 1;
  if (range == 0) return rng_();
  // Rejection keeps the draw unbiased; std distributions are not portable.
  const std::uint64_t threshold = (0 - range) % range;
  std::uint64_t r = rng_();
  while (r < threshold) r = rng_();
  return r % range;
}

RowSelection SampledSelections::next() {
  std::vector<std::size_t> parts(cols_);
  for (auto& p : parts) p = static_cast<std::size_t>(uniform(rows_ - cols_));
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return selection_from_parts(rows_, parts);
}

MultiPoly minor_value(const ResultantMatrix& m, const RowSelection& rows) {
  MultiPoly d = bareiss_det(m.rows.select_rows(rows));
  if (d.is_zero()) return d;
  MultiPoly clear(1);
  for (const auto r : rows) clear *= m.clearing[r];
  return clear.is_one() ? d : exact_quotient(d, clear);
}

void partial_resultants(const ResultantMatrix& m, MinorMode mode, std::size_t samples, std::uint64_t seed,
                        const std::function<bool(const RowSelection&, const MultiPoly&)>& sink) {
  const std::size_t rows = m.row_count();
  const std::size_t cols = m.column_count();
  if (mode == MinorMode::Exhaustive) {
    YoungSelections ys(rows, cols);
    RowSelection sel;
    while (ys.next(sel))
      if (!sink(sel, minor_value(m, sel))) return;
  } else {
    SampledSelections ss(rows, cols, seed);
    for (std::size_t k = 0; k < samples; ++k) {
      const RowSelection sel = ss.next();
      if (!sink(sel, minor_value(m, sel))) return;
    }
  }
}

namespace {

bool is_x(VarId v) { return v.cls() == VarClass::X; }

}  // namespace

ResultantOutcome differential_resultant(const std::vector<DiffOp>& ops, std::size_t n, const ResultantOptions& opts) {
  const ResultantMatrix m = build_resultant_matrix(ops, n);
  ResultantOutcome out;
  out.mode = opts.mode;
  out.seed = opts.mode == ResultantMode::Sampled ? opts.seed : 0;
  out.samples = opts.mode == ResultantMode::Sampled ? opts.samples : 0;
  out.rows = m.row_count();
  out.columns = m.column_count();
  out.N = m.N;
  out.rank = matrix_rank_over_fraction_field(m.rows).rank;
  if (out.rank < out.columns) {
    out.kind = ResultantKind::Zero;
    return out;
  }
  if (opts.mode == ResultantMode::RankOnly) {
    out.kind = ResultantKind::Nonzero;
    return out;
  }

  std::vector<RowSelection> selections;
  std::function<bool(RowSelection&)> draw;
  std::optional<YoungSelections> ys;
  std::optional<SampledSelections> ss;
  std::size_t drawn = 0;
  if (opts.mode == ResultantMode::Exhaustive) {
    ys.emplace(out.rows, out.columns);
    draw = [&](RowSelection& s) { return ys->next(s); };
  } else {
    ss.emplace(out.rows, out.columns, opts.seed);
    draw = [&](RowSelection& s) {
      if (drawn == opts.samples) return false;
      ++drawn;
      s = ss->next();
      return true;
    };
  }

  MultiPoly g;
  const std::size_t batch = std::max(1U, opts.workers);
  bool more = true;
  while (more) {
    std::vector<RowSelection> chunk;
    RowSelection sel;
    while (chunk.size() < batch && (more = draw(sel))) chunk.push_back(sel);
    std::vector<MultiPoly> dets(chunk.size());
    if (chunk.size() > 1) {
      std::vector<std::future<MultiPoly>> fut;
      for (const auto& s : chunk) fut.push_back(std::async(std::launch::async, [&m, s] { return minor_value(m, s); }));
      for (std::size_t k = 0; k < fut.size(); ++k) dets[k] = fut[k].get();
    } else if (chunk.size() == 1) {
      dets[0] = minor_value(m, chunk[0]);
    }
    for (const auto& d : dets) {
      ++out.minors_examined;
      if (!d.is_zero()) {
        ++out.nonzero_minors;
        // A minor already divisible by the running gcd cannot lower it.
        if (g.is_zero() || !divides(g, d)) g = poly_gcd(g, d);
      }
      if (opts.progress && out.minors_examined % opts.progress_every == 0)
        opts.progress({out.minors_examined, out.nonzero_minors, g.total_degree()});
    }
  }
  if (opts.progress) opts.progress({out.minors_examined, out.nonzero_minors, g.total_degree()});

  if (g.is_zero()) {
    // Full rank, yet no examined minor was nonzero (possible when sampling).
    out.kind = ResultantKind::Nonzero;
    return out;
  }
  out.x_content = content_over(g, is_x).normalized();
  out.value = exact_quotient(g, out.x_content).normalized();
  out.kind = ResultantKind::Poly;
  return out;
}

std::vector<DiffOp> dform_decomposition(const ResultantMatrix& m, const RowSelection& rows) {
  const std::size_t w = m.column_count();
  if (rows.size() != w) throw Error(ErrorKind::InvalidArgument, "selection is not a maximal minor");
  for (const auto r : rows)
    if (r >= m.row_count()) throw Error(ErrorKind::IndexOutOfRange, "row " + std::to_string(r));
  const PolyMatrix s = m.rows.select_rows(rows);
  const MultiPoly det = bareiss_det(s);
  if (det.is_zero()) throw Error(ErrorKind::SingularMinor, "the selected minor vanishes");
  const std::size_t j0 = m.order_zero_column();
  std::vector<std::size_t> other_cols;
  for (std::size_t c = 0; c < w; ++c)
    if (c != j0) other_cols.push_back(c);

  MultiPoly clear(1);
  for (const auto r : rows) clear *= m.clearing[r];
  const MultiPoly minor = clear.is_one() ? det : exact_quotient(det, clear);

  std::vector<DiffOp> d(m.operators.size(), DiffOp(m.n));
  for (std::size_t p = 0; p < w; ++p) {
    std::vector<std::size_t> keep;
    for (std::size_t q = 0; q < w; ++q)
      if (q != p) keep.push_back(q);
    MultiPoly cof = bareiss_det(s.select(keep, other_cols));
    if (cof.is_zero()) continue;
    if ((p + j0) % 2 == 1) cof = -cof;
    const auto& pr = m.provenance[rows[p]];
    const auto basis = omega_basis(m.n, static_cast<std::uint32_t>(m.N - m.orders[pr.op]));
    d[pr.op].add_term(basis.entries[pr.omega], RatFun(cof * m.clearing[rows[p]], clear));
  }

  DiffOp sum(m.n);
  for (std::size_t i = 0; i < d.size(); ++i) sum += compose(d[i], shifted(m.operators[i], i));
  if (sum != DiffOp::constant(m.n, RatFun(minor)))
    throw Error(ErrorKind::InvariantViolation, "cofactor operators do not recompose to the minor");
  return d;
}

bool verify_annihilation(const MultiPoly& p, const std::vector<DiffOp>& ops) {
  return eval_poly_at_operators(p, ops).is_zero();
}

std::vector<std::vector<long>> homogenized_symbol_zero_check(const std::vector<DiffOp>& ops, long height) {
  if (ops.empty()) return {};
  const std::size_t n = ops.front().dim();
  std::vector<MultiPoly> tops;
  for (std::size_t i = 0; i < ops.size(); ++i) {
    if (!is_constant_coefficient(ops[i]))
      throw Error(ErrorKind::NonConstantInput, "operator " + std::to_string(i + 1) + " has non-constant coefficients");
    // Homogenizing with z_{n+1} and setting it to 0 leaves the top-degree part.
    const MultiPoly h = symbol(ops[i]) - MultiPoly::var(mu_var(static_cast<std::uint32_t>(i + 1)));
    std::uint32_t top = 0;
    for (const auto& t : h.terms()) {
      std::uint32_t dz = 0;
      for (const auto& pw : t.mono.powers())
        if (pw.var.cls() == VarClass::Z) dz += pw.exp;
      top = std::max(top, dz);
    }
    std::vector<Term> kept;
    for (const auto& t : h.terms()) {
      std::uint32_t dz = 0;
      for (const auto& pw : t.mono.powers())
        if (pw.var.cls() == VarClass::Z) dz += pw.exp;
      if (dz == top) kept.push_back(t);
    }
    tops.push_back(MultiPoly::from_terms(std::move(kept)));
  }

  std::vector<std::vector<long>> found;
  std::vector<long> a(n, -height);
  while (true) {
    long g = 0;
    for (const auto v : a) g = std::gcd(g, v);
    const auto first = std::find_if(a.begin(), a.end(), [](long v) { return v != 0; });
    if (g == 1 && first != a.end() && *first > 0) {
      bool all = true;
      for (const auto& t : tops) {
        MultiPoly v = t;
        for (std::size_t k = 0; k < n; ++k) v = v.substitute(z_var(static_cast<std::uint32_t>(k + 1)), MultiPoly(a[k]));
        if (!v.is_zero()) {
          all = false;
          break;
        }
      }
      if (all) {
        auto pt = a;
        pt.push_back(0);
        found.push_back(std::move(pt));
      }
    }
    std::size_t k = n;
    while (k-- > 0) {
      if (a[k] < height) {
        ++a[k];
        break;
      }
      a[k] = -height;
    }
    if (k == static_cast<std::size_t>(-1)) break;
  }
  std::sort(found.begin(), found.end(), std::greater<>());
  return found;
}

}  // namespace pdo
