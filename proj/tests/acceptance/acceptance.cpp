// Acceptance suite: one PASS/FAIL line per numbered criterion.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "pdo/catalog.hpp"
#include "pdo/darboux.hpp"
#include "pdo/error.hpp"
#include "pdo/gcd.hpp"
#include "pdo/operator_algebra.hpp"
#include "pdo/resultant.hpp"
#include "../support.hpp"

using namespace pdo;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int id;
  std::string title;
  std::function<Outcome()> run;
};

template <class F>
double timed(F&& f) {
  const auto t0 = Clock::now();
  f();
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string secs(double s) {
  std::ostringstream o;
  if (s < 1e-3) o << std::fixed << std::setprecision(1) << s * 1e6 << " us";
  else if (s < 1) o << std::fixed << std::setprecision(2) << s * 1e3 << " ms";
  else o << std::fixed << std::setprecision(2) << s << " s";
  return o.str();
}

const MultiPoly mu1 = MultiPoly::var(mu_var(1));
const MultiPoly mu2 = MultiPoly::var(mu_var(2));
const MultiPoly mu3 = MultiPoly::var(mu_var(3));
const MultiPoly lam = MultiPoly::var(lambda_var());
RatFun X(std::uint32_t i) { return RatFun(MultiPoly::var(x_var(i))); }

// Best of a few runs, so a cold cache does not decide a sub-millisecond budget.
template <class F>
double best_of(int k, F&& f) {
  double best = 1e9;
  for (int i = 0; i < k; ++i) best = std::min(best, timed(f));
  return best;
}

Outcome budget(bool ok, double t, double limit, std::string detail = {}) {
  const bool in_time = limit <= 0 || t < limit;
  if (!in_time) detail += (detail.empty() ? "" : "; ") + std::string("over budget");
  return {ok && in_time, detail};
}

Outcome c1() {
  DiffOp r;
  const double t = best_of(5, [&] { r = compose(DiffOp::partial(1, 1), DiffOp::constant(1, X(1))); });
  return budget(r.to_string() == "(x1) D1 + 1", t, 1e-3, r.to_string() + ", " + secs(t));
}

Outcome c2() {
  DiffOp r;
  const DiffOp a = DiffOp::partial(2, 1, 2) + DiffOp::partial(2, 2, 2);
  const DiffOp b = DiffOp::monomial(2, {0, 1}, X(1)) + DiffOp::monomial(2, {1, 0}, X(2));
  const double t = best_of(5, [&] { r = compose(a, b); });
  DiffOp want(2);
  want.add_term({3, 0}, X(2));
  want.add_term({2, 1}, X(1));
  want.add_term({1, 2}, X(2));
  want.add_term({0, 3}, X(1));
  want.add_term({1, 1}, RatFun(4));
  return budget(r == want && r.size() == 5, t, 10e-3, r.to_string() + ", " + secs(t));
}

Outcome c3() {
  const DiffOp k = build_example_K().K;
  const DiffOp l = catalog::example_L_expanded();
  DiffOp r;
  const double t = timed([&] { r = compose(l, k); });
  const DiffOp p = power(DiffOp::monomial(2, {1, 1}) - DiffOp::constant(2, RatFun(lam)), 3);
  return budget(r == p, t, 1.0, secs(t));
}

Outcome c4() {
  const auto t3 = catalog::wave_boost_triple();
  DiffOp r;
  const double t = best_of(3, [&] { r = commutator(t3[0], t3[1]); });
  return budget(r.is_zero(), t, 10e-3, r.to_string() + ", " + secs(t));
}

Outcome c5() {
  const auto ops = catalog::wave_boost_triple();
  const MultiPoly p3 = (mu3 - mu1 * mu2 + MultiPoly::var(gamma_var()) * mu1).pow(3).normalized();
  ResultantOutcome ex;
  const double te = timed([&] { ex = differential_resultant(ops, 2); });
  const bool ex_ok = ex.kind == ResultantKind::Poly && ex.value == p3 && ex.x_content.is_one() && ex.rows == 19 &&
                     ex.columns == 15;
  ResultantOptions o;
  o.mode = ResultantMode::Sampled;
  o.samples = 40;
  o.seed = 1;
  ResultantOutcome sm;
  const double ts = timed([&] { sm = differential_resultant(ops, 2, o); });
  const bool sm_ok = sm.kind == ResultantKind::Poly && divides(p3, sm.value * sm.x_content) && ts < 30;
  std::ostringstream d;
  d << "exhaustive " << ex.minors_examined << " minors (" << ex.nonzero_minors << " nonzero) in " << secs(te)
    << ": value " << ex.value.to_string() << ", x-content " << ex.x_content.to_string() << "; sampled k=40 seed=1 in "
    << secs(ts) << ": " << (sm_ok ? "divisible" : "not divisible") << " by p^3";
  return {ex_ok && sm_ok, d.str()};
}

Outcome c6() {
  ResultantOptions o;
  o.mode = ResultantMode::RankOnly;
  ResultantOutcome r;
  std::vector<std::vector<long>> pts;
  const double t = timed([&] {
    r = differential_resultant(catalog::klein_gordon_triple(), 2, o);
    pts = homogenized_symbol_zero_check(catalog::klein_gordon_triple());
  });
  const bool zero_found = std::find(pts.begin(), pts.end(), std::vector<long>{1, -1, 0}) != pts.end();
  return budget(r.kind == ResultantKind::Zero && r.rank < 28 && zero_found, t, 60.0,
                "rank " + std::to_string(r.rank) + " of " + std::to_string(r.columns) + ", (1,-1,0) " +
                    (zero_found ? "found" : "missing") + ", " + secs(t));
}

// Product over the roots +-s of z^2 = mu1 of (s^3 - mu2), with s^2 replaced by mu1.
MultiPoly root_product_oracle() {
  const VarId s = z_var(1);
  const MultiPoly sv = MultiPoly::var(s);
  const MultiPoly prod = (sv.pow(3) - mu2) * (-(sv.pow(3)) - mu2);
  const auto coeffs = prod.coefficients_in(s);
  MultiPoly out;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k].is_zero()) continue;
    if (k % 2 == 1) throw Error(ErrorKind::InvariantViolation, "odd power survived");
    out += coeffs[k] * mu1.pow(static_cast<unsigned>(k / 2));
  }
  return out;
}

Outcome c7() {
  ResultantOutcome r;
  const double t = timed([&] { r = differential_resultant(catalog::ordinary_pair(), 1); });
  const MultiPoly oracle = root_product_oracle().normalized();
  const bool ok = r.kind == ResultantKind::Poly && r.value == (mu1.pow(3) - mu2.pow(2)).normalized() && r.value == oracle;
  return budget(ok, t, 1.0, r.value.to_string() + " vs oracle " + oracle.to_string() + ", " + secs(t));
}

Outcome c8() {
  const auto ops = catalog::klein_gordon_triple();
  const bool cubic = verify_annihilation(catalog::klein_gordon_relation(), ops);
  const bool sextic = verify_annihilation(catalog::klein_gordon_sextic_relation(), ops);
  return {cubic && !sextic, std::string("mu2^2-mu3^2-mu1^2-mu1^3: ") + (cubic ? "annihilates" : "does not annihilate") +
                                "; sextic mu2^2-mu3^2-mu1-mu1^6: " + (sextic ? "annihilates" : "does not annihilate")};
}

Outcome c9() {
  std::mt19937_64 rng(9009);
  const auto ab = catalog::wave_boost_triple();
  std::size_t checked = 0;
  std::size_t bad = 0;
  for (int t = 0; t < 25; ++t) {
    MultiPoly q;
    while (q.is_constant()) q = pdo::testing::random_poly(rng, {mu_var(1), mu_var(2)}, 2, 4);
    const std::vector<DiffOp> ops{ab[0], ab[1], eval_poly_at_operators(q, {ab[0], ab[1]})};
    const auto m = build_resultant_matrix(ops, 2);
    std::size_t nonzero = 0;
    partial_resultants(m, MinorMode::Sampled, 8, rng(), [&](const RowSelection&, const MultiPoly& v) {
      if (v.is_zero()) return true;
      ++checked;
      if (!verify_annihilation(v, ops)) ++bad;
      return ++nonzero < 2;
    });
  }
  return {checked > 0 && bad == 0,
          std::to_string(checked) + " nonzero partial resultants checked, " + std::to_string(bad) + " failures"};
}

Outcome c10() {
  std::mt19937_64 rng(1010);
  std::size_t agree = 0;
  std::size_t members = 0;
  for (int t = 0; t < 50; ++t) {
    const auto degree = static_cast<std::uint32_t>(rng() % 5);
    const auto q = degree == 0 ? DiffOp::constant(2, RatFun(pdo::testing::draw(rng, -5, 5)))
                               : pdo::testing::random_constant_op(rng, 2, degree);
    const bool kernel = kernel_membership(build_example_K().K, q, {1, 2, lam});
    const bool ring = rlambda_membership(symbol(q), z_var(1), z_var(2), lam);
    agree += kernel == ring ? 1 : 0;
    members += ring ? 1 : 0;
  }
  return {agree == 50, std::to_string(agree) + "/50 agree (" + std::to_string(members) + " members)"};
}

Outcome c11() {
  const MultiPoly x = MultiPoly::var(x_var(1));
  const MultiPoly y = MultiPoly::var(x_var(2));
  const MultiPoly h = x * y - lam;
  auto member = [&](const MultiPoly& q, const MultiPoly& l) { return rlambda_membership(q, x_var(1), x_var(2), l); };
  std::vector<std::string> failed;
  for (unsigned i = 0; i <= 3; ++i)
    if (!member(x.pow(i) * h.pow(3), lam)) failed.push_back("x^" + std::to_string(i) + "(xy-lambda)^3");
  if (!member(MultiPoly(7), lam) || !member(lam, lam)) failed.push_back("constants");
  if (member((x * y - 1).pow(2), MultiPoly(1))) failed.push_back("(xy-1)^2 accepted");
  std::mt19937_64 rng(1111);
  int roundtrips = 0;
  for (int t = 0; t < 25; ++t) {
    const auto g = pdo::testing::random_poly(rng, {lambda_var(), x_var(1), x_var(2)}, 2, 3);
    const auto c = pdo::testing::random_poly(rng, {lambda_var()}, 2, 2);
    const MultiPoly q = g * h.pow(3) + c;
    const auto d = rlambda_decompose(q, x_var(1), x_var(2), lam);
    roundtrips += (d.g * h.pow(3) + d.c == q) ? 1 : 0;
  }
  if (roundtrips != 25) failed.push_back("decompose roundtrip " + std::to_string(roundtrips) + "/25");
  const MultiPoly cx = x.pow(2) * y.pow(2);
  bool refused = false;
  try {
    rlambda_decompose(cx, x_var(1), x_var(2), MultiPoly());
  } catch (const Error& e) {
    refused = e.kind() == ErrorKind::DegenerateLambda;
  }
  if (!member(cx, MultiPoly()) || !refused) failed.push_back("lambda=0 counterexample");
  std::string detail = "25/25 roundtrips, x^2 y^2 at lambda=0: member, decomposition refused";
  if (!failed.empty()) {
    detail = "failed:";
    for (const auto& f : failed) detail += " " + f + ";";
  }
  return {failed.empty(), detail};
}

Outcome c12() {
  std::mt19937_64 rng(1212);
  int law = 0;
  int implication = 0;
  int constant_seen = 0;
  for (int t = 0; t < 25; ++t) {
    const std::size_t n = 1 + rng() % 3;
    const DiffOp l = t % 5 == 4 ? pdo::testing::random_constant_op(rng, n, 3) : pdo::testing::random_op(rng, n, 3, true);
    bool ok = true;
    bool all_zero = true;
    for (std::size_t i = 1; i <= n; ++i) {
      const DiffOp c = commutator(DiffOp::partial(n, i), l);
      const DiffOp d = l.map_coefficients(
          [&](const RatFun& f) { return f.derivative(x_var(static_cast<std::uint32_t>(i))); });
      ok = ok && c == d;
      all_zero = all_zero && c.is_zero();
    }
    law += ok ? 1 : 0;
    if (all_zero) {
      ++constant_seen;
      implication += is_constant_coefficient(l) ? 1 : 0;
    } else {
      ++implication;
    }
  }
  return {law == 25 && implication == 25 && constant_seen > 0,
          std::to_string(law) + "/25 derivation law, " + std::to_string(constant_seen) +
              " commuting with every D_i, all constant: " + (implication == 25 ? "yes" : "no")};
}

Outcome c13() {
  int ok = 0;
  int tried = 0;
  auto check = [&](const ResultantMatrix& m, const RowSelection& rows) {
    ++tried;
    const auto d = dform_decomposition(m, rows);
    DiffOp sum(m.n);
    for (std::size_t i = 0; i < d.size(); ++i)
      sum += compose(d[i], m.operators[i] - DiffOp::constant(m.n, RatFun(MultiPoly::var(mu_var(i + 1)))));
    ok += sum == DiffOp::constant(m.n, RatFun(minor_value(m, rows))) ? 1 : 0;
  };
  check(build_resultant_matrix(catalog::ordinary_pair(), 1), {0, 1, 2, 3, 4});
  const auto wb = build_resultant_matrix(catalog::wave_boost_triple(), 2);
  int found = 0;
  partial_resultants(wb, MinorMode::Sampled, 200, 1313, [&](const RowSelection& s, const MultiPoly& v) {
    if (v.is_zero()) return true;
    check(wb, s);
    return ++found < 5;
  });
  return {tried == 6 && ok == 6, std::to_string(ok) + "/" + std::to_string(tried) + " minors recomposed"};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  std::vector<int> only;
  app.add_option("--only", only, "run only these criteria");
  CLI11_PARSE(app, argc, argv);

  const std::vector<Criterion> all = {
      {1, "compose(D1, x1) = x1 D1 + 1", c1},
      {2, "five-term composition", c2},
      {3, "L * K = (D1 D2 - lambda)^3", c3},
      {4, "wave/boost pair commutes", c4},
      {5, "wave/boost resultant = p^3, empty x-content", c5},
      {6, "Klein-Gordon resultant Zero by rank, (1,-1,0) at infinity", c6},
      {7, "resultant of D^2, D^3 = mu1^3 - mu2^2 (root product oracle)", c7},
      {8, "Klein-Gordon relation audit", c8},
      {9, "partial resultants annihilate commuting triples", c9},
      {10, "kernel membership agrees with R_lambda", c10},
      {11, "R_lambda structure", c11},
      {12, "derivation law and constant centralizer", c12},
      {13, "dform roundtrip", c13},
  };

  int failed = 0;
  int ran = 0;
  for (const auto& c : all) {
    if (!only.empty() && std::find(only.begin(), only.end(), c.id) == only.end()) continue;
    ++ran;
    Outcome o;
    const double t = timed([&] {
      try {
        o = c.run();
      } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
      }
    });
    failed += o.pass ? 0 : 1;
    std::cout << "criterion " << std::setw(2) << c.id << ": " << (o.pass ? "PASS" : "FAIL") << "  " << c.title << "  ["
              << secs(t) << "]" << (o.detail.empty() ? "" : "  " + o.detail) << std::endl;
  }
  if (ran == 0) {
    std::cerr << "no criteria selected\n";
    return 2;
  }
  std::cout << (ran - failed) << "/" << ran << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
