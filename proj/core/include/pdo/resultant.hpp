#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "pdo/diffop.hpp"
#include "pdo/matrix.hpp"

namespace pdo {

/// Monic D-monomials of total degree <= d, descending grlex.
struct MonomialBasis {
  std::size_t n = 0;
  std::uint32_t d = 0;
  std::vector<DMono> entries;

  std::size_t size() const { return entries.size(); }
};

MonomialBasis omega_basis(std::size_t n, std::uint32_t d);

/// Coefficients of l over omega_basis(n, d); OrderTooHigh if order(l) > d.
std::vector<RatFun> coeff_vector(const DiffOp& l, std::uint32_t d);

struct RowProvenance {
  std::size_t op = 0;     // 0-based operator index i
  std::size_t omega = 0;  // 0-based index j into omega_basis(n, N - l_i)
};

/// Rows are the coefficient vectors of omega_j ∘ (L_i - mu_i) over Omega^N,
/// with each row multiplied by `clearing[r]` to make it polynomial.
struct ResultantMatrix {
  std::size_t n = 0;
  std::vector<DiffOp> operators;
  std::vector<int> orders;
  int N = 0;
  MonomialBasis columns;
  PolyMatrix rows;
  std::vector<MultiPoly> clearing;
  std::vector<RowProvenance> provenance;

  std::size_t row_count() const { return rows.rows(); }
  std::size_t column_count() const { return rows.cols(); }
  std::size_t order_zero_column() const { return columns.size() - 1; }
  /// The operator omega_j ∘ (L_i - mu_i) that row r encodes (uncleared).
  DiffOp row_generator(std::size_t r) const;
};

ResultantMatrix build_resultant_matrix(const std::vector<DiffOp>& ops, std::size_t n);

/// Ascending 0-based row indices of a maximal minor.
using RowSelection = std::vector<std::size_t>;

/// All C(rows, cols) selections, grouped by the first part of the
/// associated partition and lexicographic within a group.
class YoungSelections {
 public:
  YoungSelections(std::size_t rows, std::size_t cols);
  bool next(RowSelection& out);

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::size_t> parts_;  // nonincreasing, parts_[0] = group
  bool started_ = false;
  bool done_ = false;
};

/// Seeded random selections: cols draws in [0, rows - cols], sorted
/// descending, mapped to rows like the Young stream. Reproducible for a
/// fixed seed on every platform.
class SampledSelections {
 public:
  SampledSelections(std::size_t rows, std::size_t cols, std::uint64_t seed);
  RowSelection next();

 private:
  std::uint64_t uniform(std::uint64_t bound);  // in [0, bound]
  std::size_t rows_;
  std::size_t cols_;
  std::mt19937_64 rng_;
};

RowSelection selection_from_parts(std::size_t rows, const std::vector<std::size_t>& parts);

/// The true minor of R_mu for the given rows (clearing factors divided out).
MultiPoly minor_value(const ResultantMatrix& m, const RowSelection& rows);

enum class MinorMode { Exhaustive, Sampled };

/// Evaluates partial resultants in stream order and hands each to `sink`
/// (return false to stop). TooWide if rows < cols.
void partial_resultants(const ResultantMatrix& m, MinorMode mode, std::size_t samples, std::uint64_t seed,
                        const std::function<bool(const RowSelection&, const MultiPoly&)>& sink);

enum class ResultantMode { Exhaustive, Sampled, RankOnly };
/// Nonzero: rank-only mode found full rank, so the resultant is nonzero
/// but was not evaluated.
enum class ResultantKind { Zero, Poly, Nonzero };

struct ResultantProgress {
  std::size_t examined = 0;
  std::size_t nonzero = 0;
  std::uint32_t gcd_degree = 0;
};

struct ResultantOptions {
  ResultantMode mode = ResultantMode::Exhaustive;
  std::size_t samples = 40;
  std::uint64_t seed = 1;
  /// Determinants evaluated concurrently per batch; the fold stays in
  /// stream order so the result does not depend on this.
  unsigned workers = 1;
  std::function<void(const ResultantProgress&)> progress;
  std::size_t progress_every = 250;
};

struct ResultantOutcome {
  ResultantKind kind = ResultantKind::Zero;
  /// Primitive as a polynomial over Q[x]; 0 for Zero and Nonzero.
  MultiPoly value;
  /// gcd over Q[x] of the coefficients of the fold result; 1 when there is
  /// no x-dependence.
  MultiPoly x_content = MultiPoly(1);
  ResultantMode mode = ResultantMode::Exhaustive;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  std::size_t minors_examined = 0;
  std::size_t nonzero_minors = 0;
  std::size_t rank = 0;
  std::size_t rows = 0;
  std::size_t columns = 0;
  int N = 0;
};

/// Rank first; a rank-deficient matrix gives Zero without any minors.
/// Otherwise the minors' gcd (exhaustive: the resultant; sampled: a
/// multiple of it).
ResultantOutcome differential_resultant(const std::vector<DiffOp>& ops, std::size_t n,
                                        const ResultantOptions& opts = {});

/// D_1..D_{n+1} with sum D_i ∘ (L_i - mu_i) = minor(rows), obtained by
/// cofactor expansion down the order-zero column. SingularMinor when the
/// minor is zero. The identity is checked before returning.
std::vector<DiffOp> dform_decomposition(const ResultantMatrix& m, const RowSelection& rows);

/// eval_poly_at_operators(p, ops) == 0.
bool verify_annihilation(const MultiPoly& p, const std::vector<DiffOp>& ops);

/// Points (a_1, ..., a_n, 0) with integer entries of height <= height,
/// primitive, first nonzero entry positive, at which every homogenized
/// symbol of L_i - mu_i vanishes identically in mu. NonConstantInput for
/// operators with non-constant coefficients.
std::vector<std::vector<long>> homogenized_symbol_zero_check(const std::vector<DiffOp>& ops, long height = 3);

}  // namespace pdo
