#include "pdo/frontend/commands.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <climits>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "pdo/catalog.hpp"
#include "pdo/darboux.hpp"
#include "pdo/frontend/json_io.hpp"
#include "pdo/frontend/parser.hpp"
#include "pdo/gcd.hpp"
#include "pdo/operator_algebra.hpp"
#include "pdo/resultant.hpp"

namespace pdo::frontend {

namespace {

constexpr std::size_t kMany = SIZE_MAX;

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

std::string strip_kind(const Error& e) {
  const std::string w = e.what();
  const std::string prefix = std::string(to_string(e.kind())) + ": ";
  return w.rfind(prefix, 0) == 0 ? w.substr(prefix.size()) : w;
}

[[noreturn]] void usage(const std::string& msg) { throw Error(ErrorKind::InvalidArgument, msg); }

template <class F>
auto in_arg(const std::string& src, F&& f) {
  try {
    return f();
  } catch (const Error& e) {
    throw Error(e.kind(), "in '" + src + "': " + strip_kind(e));
  }
}

std::vector<std::string> split_commas(std::string_view s) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == ',') {
      const std::string piece = trim(s.substr(start, i - start));
      if (!piece.empty()) out.push_back(piece);
      start = i + 1;
    }
  }
  return out;
}

class Context {
 public:
  explicit Context(const Script& s) : s_(s) {
    for (const auto& [name, src] : s.bindings) {
      if (is_reserved_name(name)) usage("cannot bind reserved name '" + name + "'");
      bindings_[name] = in_arg(src, [&] { return parse_operator(src, dim(), bindings_); });
    }
  }

  std::size_t dim() const {
    if (s_.dim == 0) usage("--dim is required for '" + s_.verb + "'");
    return s_.dim;
  }
  const std::vector<std::string>& args() const { return s_.args; }

  DiffOp op(std::size_t i) const {
    const auto& src = s_.args.at(i);
    return in_arg(src, [&] { return parse_operator(src, dim(), bindings_); });
  }
  std::vector<DiffOp> ops(std::size_t from = 0) const {
    std::vector<DiffOp> out;
    for (std::size_t i = from; i < s_.args.size(); ++i) out.push_back(op(i));
    return out;
  }
  MultiPoly poly(const std::string& src) const {
    return in_arg(src, [&] { return parse_polynomial(src, dim(), bindings_); });
  }
  MultiPoly poly(std::size_t i) const { return poly(s_.args.at(i)); }
  DiffOp op_text(const std::string& src) const {
    return in_arg(src, [&] { return parse_operator(src, dim(), bindings_); });
  }

  bool has(const std::string& f) const { return s_.flags.count(f) > 0; }
  std::string flag(const std::string& f, const std::string& dflt) const {
    const auto it = s_.flags.find(f);
    return it == s_.flags.end() ? dflt : it->second;
  }
  std::uint64_t u64(const std::string& f, std::uint64_t dflt) const {
    if (!has(f)) return dflt;
    const std::string v = flag(f, "");
    try {
      std::size_t used = 0;
      const auto r = std::stoull(v, &used);
      if (used != v.size() || v.front() == '-') throw std::invalid_argument(v);
      return r;
    } catch (const std::exception&) {
      usage("--" + f + " expects a nonnegative integer, got '" + v + "'");
    }
  }

 private:
  const Script& s_;
  Bindings bindings_;
};

void add(Report& r, const std::string& label, const std::string& text) { r.lines.emplace_back(label, text); }

MultiPoly lambda_poly(const Context& c) {
  const std::string src = c.flag("lambda", "lambda");
  return c.poly(src);
}

std::pair<VarId, VarId> ring_vars(const Context& c) {
  const std::string v = c.flag("vars", "x1,x2");
  const auto parts = split_commas(v);
  if (parts.size() != 2) usage("--vars expects two variables, e.g. x1,x2");
  std::vector<VarId> ids;
  for (const auto& p : parts) {
    const MultiPoly m = c.poly(p);
    if (m.size() != 1 || m.terms()[0].coeff != 1 || m.total_degree() != 1) usage("'" + p + "' is not a variable");
    ids.push_back(m.terms()[0].mono.powers().front().var);
  }
  return {ids[0], ids[1]};
}

DiffOp example_K_for(const Context& c, const MultiPoly& lambda) {
  if (c.has("k")) return c.op_text(c.flag("k", ""));
  if (c.dim() != 2) usage("the built-in K needs --dim=2 (or pass --k=...)");
  DiffOp k = build_example_K().K;
  if (lambda != MultiPoly::var(lambda_var()))
    k = k.map_coefficients([&](const RatFun& f) { return f.substitute(lambda_var(), lambda); });
  return k;
}

// ---- verbs ----

void cmd_mult(const Context& c, Report& r) {
  DiffOp acc = c.op(0);
  for (std::size_t i = 1; i < c.args().size(); ++i) acc = compose(acc, c.op(i));
  add(r, "result", acc.to_string());
  r.result = op_to_json(acc);
}

void cmd_apply(const Context& c, Report& r) {
  ExpFunction f = ExpFunction::plane_wave(c.dim());
  if (c.args().size() > 1) {
    const DiffOp g = c.op(1);
    if (g.order() > 0) usage("the function argument must have order zero");
    f.coeff = g.constant_term();
  }
  const ExpFunction out = apply(c.op(0), f);
  add(r, "result", out.to_string());
  r.result = expfun_to_json(out);
}

void cmd_commutator(const Context& c, Report& r) {
  const DiffOp out = commutator(c.op(0), c.op(1));
  add(r, "result", out.to_string());
  r.result = op_to_json(out);
}

void cmd_conjugate(const Context& c, Report& r) {
  const DiffOp p = c.op(0);
  const DiffOp k = c.op(1);
  const int order = static_cast<int>(c.u64("order", static_cast<std::uint64_t>(std::max(0, p.order()))));
  const auto l = conjugate_through(p, k, order);
  if (!l) {
    add(r, "result", "not differential");
    r.result = nullptr;
    r.exit_code = 1;
    return;
  }
  add(r, "result", l->to_string());
  r.result = op_to_json(*l);
}

void cmd_divide(const Context& c, Report& r) {
  const auto q = right_divide(c.op(0), c.op(1));
  if (!q) {
    add(r, "result", "not divisible");
    r.result = nullptr;
    r.exit_code = 1;
    return;
  }
  add(r, "result", q->to_string());
  r.result = op_to_json(*q);
}

ResultantOptions resultant_options(const Context& c, Report& r) {
  ResultantOptions o;
  const std::string mode = c.flag("mode", "exhaustive");
  if (mode == "exhaustive") {
    o.mode = ResultantMode::Exhaustive;
  } else if (mode.rfind("sampled", 0) == 0) {
    o.mode = ResultantMode::Sampled;
    if (mode.size() > 7) {
      if (mode[7] != ':') usage("--mode expects exhaustive or sampled:k");
      try {
        o.samples = std::stoul(mode.substr(8));
      } catch (const std::exception&) {
        usage("--mode=sampled:k needs an integer k");
      }
    }
  } else {
    usage("--mode expects exhaustive or sampled:k, got '" + mode + "'");
  }
  if (c.has("rank-only")) o.mode = ResultantMode::RankOnly;
  o.seed = c.u64("seed", 1);
  o.workers = static_cast<unsigned>(c.u64("workers", 1));
  if (c.has("progress")) {
    o.progress = [](const ResultantProgress& p) {
      std::cerr << "minors " << p.examined << ", nonzero " << p.nonzero << ", gcd degree " << p.gcd_degree << "\n";
    };
  }
  r.provenance["mode"] = o.mode == ResultantMode::RankOnly ? "rank-only" : mode;
  if (o.mode == ResultantMode::Sampled) r.provenance["seed"] = o.seed;
  return o;
}

std::string kind_text(ResultantKind k) {
  switch (k) {
    case ResultantKind::Zero: return "Zero";
    case ResultantKind::Poly: return "Poly";
    case ResultantKind::Nonzero: return "Nonzero";
  }
  return "?";
}

void cmd_resultant(const Context& c, Report& r) {
  const auto ops = c.ops();
  const ResultantOptions o = resultant_options(c, r);
  const ResultantOutcome out = differential_resultant(ops, c.dim(), o);
  add(r, "kind", kind_text(out.kind));
  if (out.kind == ResultantKind::Poly) {
    add(r, "value", out.value.to_string());
    add(r, "x_content", out.x_content.to_string());
    if (out.mode == ResultantMode::Sampled) add(r, "note", "gcd of sampled minors: a multiple of the resultant");
  }
  add(r, "matrix", std::to_string(out.rows) + "x" + std::to_string(out.columns) + ", N = " + std::to_string(out.N) +
                      ", rank " + std::to_string(out.rank));
  if (out.mode != ResultantMode::RankOnly && out.kind != ResultantKind::Zero)
    add(r, "minors", std::to_string(out.minors_examined) + " examined, " + std::to_string(out.nonzero_minors) + " nonzero");
  r.result = outcome_to_json(out);
  r.provenance["minors_examined"] = out.minors_examined;
}

void cmd_kernel_check(const Context& c, Report& r) {
  const MultiPoly lam = lambda_poly(c);
  const DiffOp q = c.op(0);
  const bool ok = kernel_membership(example_K_for(c, lam), q, {1, 2, lam});
  add(r, "result", ok ? "true" : "false");
  r.result = ok;
  r.exit_code = ok ? 0 : 1;
}

void cmd_rlambda_check(const Context& c, Report& r) {
  const auto [x, y] = ring_vars(c);
  const bool ok = rlambda_membership(c.poly(0), x, y, lambda_poly(c));
  add(r, "result", ok ? "true" : "false");
  r.result = ok;
  r.exit_code = ok ? 0 : 1;
}

void cmd_rlambda_decompose(const Context& c, Report& r) {
  const auto [x, y] = ring_vars(c);
  const MultiPoly q = c.poly(0);
  const MultiPoly lam = lambda_poly(c);
  const auto d = rlambda_decompose(q, x, y, lam);
  add(r, "g", d.g.to_string());
  add(r, "c", d.c.to_string());
  r.result = {{"g", poly_to_json(d.g)}, {"c", poly_to_json(d.c)}};
}

void cmd_dform(const Context& c, Report& r) {
  const auto ops = c.ops();
  const ResultantMatrix m = build_resultant_matrix(ops, c.dim());
  RowSelection rows;
  if (c.has("rows")) {
    for (const auto& p : split_commas(c.flag("rows", ""))) {
      try {
        rows.push_back(std::stoul(p));
      } catch (const std::exception&) {
        usage("--rows expects comma separated 0-based row indices");
      }
    }
    std::sort(rows.begin(), rows.end());
  } else {
    // First nonzero minor in enumeration order.
    partial_resultants(m, MinorMode::Exhaustive, 0, 0, [&](const RowSelection& s, const MultiPoly& v) {
      if (v.is_zero()) return true;
      rows = s;
      return false;
    });
    if (rows.empty()) throw Error(ErrorKind::SingularMinor, "every maximal minor vanishes");
  }
  const auto d = dform_decomposition(m, rows);
  std::string sel;
  for (const auto i : rows) sel += (sel.empty() ? "" : ",") + std::to_string(i);
  add(r, "rows", sel);
  add(r, "minor", minor_value(m, rows).to_string());
  nlohmann::json ds = nlohmann::json::array();
  for (std::size_t i = 0; i < d.size(); ++i) {
    add(r, "D" + std::to_string(i + 1), d[i].to_string());
    ds.push_back(op_to_json(d[i]));
  }
  r.result = {{"rows", rows}, {"minor", poly_to_json(minor_value(m, rows))}, {"D", ds}};
}

void cmd_annihilate(const Context& c, Report& r) {
  const MultiPoly p = c.poly(0);
  const bool ok = verify_annihilation(p, c.ops(1));
  add(r, "result", ok ? "true" : "false");
  r.result = ok;
  r.exit_code = ok ? 0 : 1;
}

void cmd_zeros(const Context& c, Report& r) {
  const auto pts = homogenized_symbol_zero_check(c.ops(), static_cast<long>(c.u64("height", 3)));
  std::string text;
  for (const auto& p : pts) {
    std::string one;
    for (const auto v : p) one += (one.empty() ? "" : ",") + std::to_string(v);
    text += (text.empty() ? "" : " ") + ("(" + one + ")");
  }
  add(r, "result", text.empty() ? "none" : text);
  r.result = pts;
  r.exit_code = pts.empty() ? 1 : 0;
}

void cmd_eigenfunction(const Context& c, Report& r) {
  const auto e = normalized_eigenfunction(c.op(0));
  add(r, "sigma0", e.sigma0.to_string());
  std::string pairs;
  nlohmann::json jp = nlohmann::json::array();
  for (const auto& p : e.pairs) {
    pairs += (pairs.empty() ? "" : "; ") + ("(" + p.rho.to_string() + ", " + p.sigma.to_string() + ")");
    jp.push_back({{"rho", poly_to_json(p.rho)}, {"sigma", poly_to_json(MultiPoly::monomial(p.sigma))}});
  }
  add(r, "pairs", pairs);
  add(r, "g", e.g.to_string());
  add(r, "psi", e.psi.to_string());
  r.result = {{"sigma0", poly_to_json(e.sigma0)}, {"pairs", jp}, {"g", poly_to_json(e.g)}, {"psi", expfun_to_json(e.psi)}};
}

// Random q(A, B) for the wave/boost pair, integer coefficients in [-3, 3].
MultiPoly random_q(std::mt19937_64& rng) {
  MultiPoly q;
  for (std::uint32_t a = 0; a <= 2; ++a) {
    for (std::uint32_t b = 0; a + b <= 2; ++b) {
      const long coef = static_cast<long>(rng() % 7) - 3;
      q += MultiPoly::var(mu_var(1), a) * MultiPoly::var(mu_var(2), b) * Rational(coef);
    }
  }
  if (q.total_degree() == 0) q += MultiPoly::var(mu_var(1)) * MultiPoly::var(mu_var(2));
  return q;
}

void cmd_xcontent_search(const Context& c, Report& r) {
  if (c.dim() != 2) usage("xcontent-search runs in dimension 2");
  const auto trials = c.u64("trials", 5);
  const auto seed = c.u64("seed", 1);
  const auto samples = c.u64("samples", 8);
  std::mt19937_64 rng(seed);
  const auto pair = catalog::wave_boost_triple();
  nlohmann::json found = nlohmann::json::array();
  std::size_t genuine = 0;
  for (std::uint64_t t = 0; t < trials; ++t) {
    const MultiPoly q = random_q(rng);
    const DiffOp l3 = eval_poly_at_operators(q, {pair[0], pair[1]});
    ResultantOptions o;
    o.mode = ResultantMode::Sampled;
    o.samples = samples;
    o.seed = rng();
    const auto out = differential_resultant({pair[0], pair[1], l3}, 2, o);
    const bool x_in_value = out.value.involves_class(VarClass::X);
    genuine += x_in_value ? 1 : 0;
    add(r, "trial " + std::to_string(t + 1),
        "q = " + q.to_string() + "; kind " + kind_text(out.kind) + "; x-content " + out.x_content.to_string() +
            (x_in_value ? "; value depends on x" : "; value free of x"));
    found.push_back({{"q", poly_to_json(q)},
                     {"kind", kind_text(out.kind)},
                     {"x_content", poly_to_json(out.x_content)},
                     {"value_involves_x", x_in_value}});
  }
  add(r, "summary", std::to_string(genuine) + " of " + std::to_string(trials) + " sampled values depend on x");
  r.result = found;
  r.provenance["seed"] = seed;
}

// ---- reproduction suite ----

struct Check {
  std::string label;
  std::function<std::pair<bool, std::string>()> run;
};

std::vector<Check> paper_checks(bool exhaustive) {
  using P = std::pair<bool, std::string>;
  auto x = [](std::uint32_t i) { return RatFun(MultiPoly::var(x_var(i))); };
  std::vector<Check> cs;
  cs.push_back({"D1 * x1 = (x1) D1 + 1", [=] {
                  const auto s = compose(DiffOp::partial(1, 1), DiffOp::constant(1, x(1))).to_string();
                  return P{s == "(x1) D1 + 1", s};
                }});
  cs.push_back({"(D1^2 + D2^2) * (x1 D2 + x2 D1), five terms", [=] {
                  const DiffOp a = DiffOp::partial(2, 1, 2) + DiffOp::partial(2, 2, 2);
                  const DiffOp b = DiffOp::monomial(2, {0, 1}, x(1)) + DiffOp::monomial(2, {1, 0}, x(2));
                  const auto s = compose(a, b).to_string();
                  return P{s == "(x2) D1^3 + (x1) D1^2 D2 + (x2) D1 D2^2 + (x1) D2^3 + 4 D1 D2", s};
                }});
  cs.push_back({"K expands to D1 D2 - (1/x2) D1 - (1/x1) D2 + 1/(x1 x2) - lambda", [=] {
                  const auto k = build_example_K().K;
                  const RatFun x12 = x(1) * x(2);
                  DiffOp want = DiffOp::monomial(2, {1, 1}) - DiffOp::monomial(2, {1, 0}, x(2).inverse()) -
                                DiffOp::monomial(2, {0, 1}, x(1).inverse()) +
                                DiffOp::constant(2, x12.inverse() - RatFun(MultiPoly::var(lambda_var())));
                  return P{k == want, k.to_string()};
                }});
  cs.push_back({"L * K = (D1 D2 - lambda)^3", [] {
                  const auto ex = build_example_K();
                  return P{verify_factorization({ex.p, ex.L, ex.K}), ""};
                }});
  cs.push_back({"K L [psi] = p(z) psi", [] {
                  const auto ex = build_example_K();
                  const auto psi = normalized_eigenfunction(ex.K).psi;
                  const ExpFunction lhs = apply(compose(ex.K, ex.L), psi);
                  const RatFun pz(symbol(ex.p));
                  return P{lhs.coeff == pz * psi.coeff, ""};
                }});
  cs.push_back({"(D1 D2 - lambda)^3 is in R0(K), D1 is not", [] {
                  const auto ex = build_example_K();
                  const MultiPoly lam = MultiPoly::var(lambda_var());
                  const bool a = kernel_membership(ex.K, ex.p, {1, 2, lam});
                  const bool b = kernel_membership(ex.K, DiffOp::partial(2, 1), {1, 2, lam});
                  return P{a && !b, ""};
                }});
  cs.push_back({"x^i (xy - lambda)^3 and constants lie in R_lambda", [] {
                  const MultiPoly lam = MultiPoly::var(lambda_var());
                  const MultiPoly h = MultiPoly::var(x_var(1)) * MultiPoly::var(x_var(2)) - lam;
                  bool ok = rlambda_membership(MultiPoly(5), x_var(1), x_var(2), lam);
                  for (unsigned i = 0; i <= 3; ++i)
                    ok = ok && rlambda_membership(MultiPoly::var(x_var(1)).pow(i) * h.pow(3), x_var(1), x_var(2), lam);
                  return P{ok, ""};
                }});
  cs.push_back({"[D1^2 - D2^2, x2 D1 + x1 D2] = 0", [] {
                  const auto t = catalog::wave_boost_triple();
                  return P{commutator(t[0], t[1]).is_zero(), ""};
                }});
  cs.push_back({"mu3 - mu1 mu2 + gamma mu1 annihilates the wave/boost triple", [] {
                  return P{verify_annihilation(catalog::wave_boost_relation(), catalog::wave_boost_triple()), ""};
                }});
  cs.push_back({std::string("wave/boost resultant is p^3 with no x-dependence (") +
                    (exhaustive ? "exhaustive" : "sampled, k=40") + ")",
                [=] {
                  ResultantOptions o;
                  if (!exhaustive) {
                    o.mode = ResultantMode::Sampled;
                    o.samples = 40;
                    o.seed = 1;
                  }
                  const auto out = differential_resultant(catalog::wave_boost_triple(), 2, o);
                  const MultiPoly p3 = catalog::wave_boost_relation().pow(3).normalized();
                  const bool ok = exhaustive ? (out.value == p3 && out.x_content.is_one())
                                             : (out.kind == ResultantKind::Poly && divides(p3, out.value));
                  return P{ok, "value " + out.value.to_string() + ", x-content " + out.x_content.to_string()};
                }});
  cs.push_back({"Klein-Gordon triple has zero resultant (rank deficient)", [] {
                  ResultantOptions o;
                  o.mode = ResultantMode::RankOnly;
                  const auto out = differential_resultant(catalog::klein_gordon_triple(), 2, o);
                  return P{out.kind == ResultantKind::Zero, "rank " + std::to_string(out.rank) + " of " +
                                                               std::to_string(out.columns)};
                }});
  cs.push_back({"Klein-Gordon symbols share the zero (1,-1,0) at infinity", [] {
                  const auto pts = homogenized_symbol_zero_check(catalog::klein_gordon_triple());
                  const std::vector<long> want{1, -1, 0};
                  return P{std::find(pts.begin(), pts.end(), want) != pts.end(), ""};
                }});
  cs.push_back({"L2^2 - L3^2 - L1^2 - L1^3 = 0 on the Klein-Gordon triple", [] {
                  return P{verify_annihilation(catalog::klein_gordon_relation(), catalog::klein_gordon_triple()), ""};
                }});
  cs.push_back({"L2^2 - L3^2 - L1 - L1^6 = 0 on the Klein-Gordon triple (sextic form)", [] {
                  const bool ok =
                      verify_annihilation(catalog::klein_gordon_sextic_relation(), catalog::klein_gordon_triple());
                  return P{ok, ok ? "" : "does not hold; the cubic relation does"};
                }});
  cs.push_back({"resultant of D^2, D^3 is mu1^3 - mu2^2 up to sign", [] {
                  const auto out = differential_resultant(catalog::ordinary_pair(), 1);
                  const MultiPoly want = (MultiPoly::var(mu_var(1)).pow(3) - MultiPoly::var(mu_var(2)).pow(2)).normalized();
                  return P{out.value == want, out.value.to_string()};
                }});
  return cs;
}

void cmd_verify_paper(const Context& c, Report& r) {
  const auto checks = paper_checks(c.has("exhaustive"));
  std::size_t failed = 0;
  nlohmann::json js = nlohmann::json::array();
  for (const auto& ch : checks) {
    bool ok = false;
    std::string detail;
    try {
      std::tie(ok, detail) = ch.run();
    } catch (const Error& e) {
      detail = e.what();
    }
    failed += ok ? 0 : 1;
    add(r, ch.label, std::string(ok ? "PASS" : "FAIL") + (detail.empty() || ok ? "" : " (" + detail + ")"));
    js.push_back({{"check", ch.label}, {"pass", ok}, {"detail", detail}});
  }
  add(r, "summary", std::to_string(checks.size() - failed) + "/" + std::to_string(checks.size()) + " passed");
  r.result = js;
  r.exit_code = failed == 0 ? 0 : 1;
}

using Handler = void (*)(const Context&, Report&);

const std::map<std::string, Handler, std::less<>>& handlers() {
  static const std::map<std::string, Handler, std::less<>> h = {
      {"mult", cmd_mult},
      {"apply", cmd_apply},
      {"commutator", cmd_commutator},
      {"conjugate", cmd_conjugate},
      {"divide", cmd_divide},
      {"resultant", cmd_resultant},
      {"kernel-check", cmd_kernel_check},
      {"rlambda-check", cmd_rlambda_check},
      {"rlambda-decompose", cmd_rlambda_decompose},
      {"dform", cmd_dform},
      {"annihilate", cmd_annihilate},
      {"zeros-at-infinity", cmd_zeros},
      {"eigenfunction", cmd_eigenfunction},
      {"xcontent-search", cmd_xcontent_search},
      {"verify-paper", cmd_verify_paper},
  };
  return h;
}

}  // namespace

const std::vector<VerbSpec>& verbs() {
  static const std::vector<VerbSpec> v = {
      {"mult", 1, kMany, {}, {}, true, "compose operators left to right"},
      {"apply", 1, 2, {}, {}, true, "apply an operator to f*exp(x.z) (f defaults to 1)"},
      {"commutator", 2, 2, {}, {}, true, "a*b - b*a"},
      {"conjugate", 2, 2, {"order"}, {}, true, "L with L*K = K*P, for arguments P K"},
      {"divide", 2, 2, {}, {}, true, "Q with Q*K = T, for arguments T K"},
      {"resultant", 2, kMany, {"mode", "seed", "workers"}, {"rank-only", "progress"}, true,
       "differential resultant of L1..L(n+1)"},
      {"kernel-check", 1, 1, {"k", "lambda"}, {}, true, "is q in R0(K) for the built-in K (or --k)"},
      {"rlambda-check", 1, 1, {"lambda", "vars"}, {}, true, "is q in R_lambda"},
      {"rlambda-decompose", 1, 1, {"lambda", "vars"}, {}, true, "q = g (xy - lambda)^3 + c"},
      {"dform", 2, kMany, {"rows"}, {}, true, "cofactor operators D_i for one maximal minor"},
      {"annihilate", 2, kMany, {}, {}, true, "does p(L1, L2, ...) vanish, for arguments p L1 L2 ..."},
      {"zeros-at-infinity", 1, kMany, {"height"}, {}, true, "common zeros at infinity of the symbols"},
      {"eigenfunction", 1, 1, {}, {}, true, "normalized eigenfunction data of K"},
      {"xcontent-search", 0, 0, {"trials", "seed", "samples"}, {}, true,
       "look for x-dependence in resultants of random commuting triples"},
      {"verify-paper", 0, 0, {}, {"exhaustive"}, false, "run the built-in reproduction checks"},
  };
  return v;
}

const VerbSpec* find_verb(std::string_view name) {
  for (const auto& v : verbs())
    if (v.name == name) return &v;
  return nullptr;
}

Script parse_script(std::string_view text) {
  Script s;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t lineno = 0;
  bool have_command = false;
  while (std::getline(in, raw)) {
    ++lineno;
    const auto hash = raw.find('#');
    const std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (line.empty()) continue;
    const std::string where = "line " + std::to_string(lineno) + ": ";
    if (have_command) throw Error(ErrorKind::SyntaxError, where + "statement after the command");
    if (line.rfind("dim", 0) == 0 && (line.size() == 3 || line[3] == ' ' || line[3] == '=')) {
      std::string v = trim(line.substr(3));
      if (!v.empty() && v.front() == '=') v = trim(v.substr(1));
      try {
        std::size_t used = 0;
        s.dim = std::stoul(v, &used);
        if (used != v.size() || s.dim == 0) throw std::invalid_argument(v);
      } catch (const std::exception&) {
        throw Error(ErrorKind::SyntaxError, where + "dim expects a positive integer");
      }
      continue;
    }
    std::size_t id_end = 0;
    while (id_end < line.size() && (std::isalnum(static_cast<unsigned char>(line[id_end])) || line[id_end] == '_')) ++id_end;
    const std::string after = trim(line.substr(id_end));
    if (id_end > 0 && !after.empty() && after.front() == '=') {
      const std::string name = line.substr(0, id_end);
      if (std::isdigit(static_cast<unsigned char>(name[0])))
        throw Error(ErrorKind::SyntaxError, where + "'" + name + "' is not a valid name");
      s.bindings.emplace_back(name, trim(after.substr(1)));
      continue;
    }
    const auto sp = line.find(' ');
    // The command.
    const std::string verb = line.substr(0, std::min(line.size(), sp));
    if (!find_verb(verb)) throw Error(ErrorKind::SyntaxError, where + "unknown command '" + verb + "'");
    s.verb = verb;
    std::string rest = sp == std::string::npos ? "" : line.substr(sp);
    const auto flags_at = rest.find(" --");
    const std::string arg_text = flags_at == std::string::npos ? rest : rest.substr(0, flags_at);
    s.args = split_commas(arg_text);
    if (flags_at != std::string::npos) {
      std::istringstream fs(rest.substr(flags_at));
      std::string tok;
      while (fs >> tok) {
        if (tok.rfind("--", 0) != 0) throw Error(ErrorKind::SyntaxError, where + "expected a flag, got '" + tok + "'");
        const auto e = tok.find('=');
        if (e == std::string::npos) {
          s.flags[tok.substr(2)] = "true";
        } else {
          s.flags[tok.substr(2, e - 2)] = tok.substr(e + 1);
        }
      }
    }
    have_command = true;
  }
  if (!have_command) throw Error(ErrorKind::SyntaxError, "script has no command");
  return s;
}

Report run_command(const Script& s) {
  const VerbSpec* spec = find_verb(s.verb);
  if (!spec) usage("unknown command '" + s.verb + "'");
  if (s.args.size() < spec->min_args || s.args.size() > spec->max_args)
    usage("'" + s.verb + "' takes " + std::to_string(spec->min_args) +
          (spec->max_args == spec->min_args ? "" : spec->max_args == kMany ? " or more" : "-" + std::to_string(spec->max_args)) +
          " arguments, got " + std::to_string(s.args.size()));
  for (const auto& [name, value] : s.flags) {
    const bool known = std::find(spec->value_flags.begin(), spec->value_flags.end(), name) != spec->value_flags.end() ||
                       std::find(spec->bool_flags.begin(), spec->bool_flags.end(), name) != spec->bool_flags.end();
    if (!known) usage("'" + s.verb + "' does not take --" + name);
  }
  Report r;
  r.command = s.verb;
  for (const auto& a : s.args) r.command += " " + (a.find(' ') == std::string::npos ? a : "'" + a + "'");
  for (const auto& [name, value] : s.flags) r.command += " --" + name + (value == "true" ? "" : "=" + value);
  const auto t0 = std::chrono::steady_clock::now();
  const Context ctx(s);
  handlers().at(s.verb)(ctx, r);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (s.dim > 0) r.provenance["dim"] = s.dim;
  return r;
}

std::string render_text(const Report& r) {
  std::string out;
  if (r.lines.size() == 1 && r.lines.front().first == "result") return r.lines.front().second + "\n";
  for (const auto& [label, value] : r.lines) out += label + ": " + value + "\n";
  return out;
}

std::string render_json(const Report& r) {
  nlohmann::json j;
  j["command"] = r.command;
  nlohmann::json text = nlohmann::json::array();
  for (const auto& [label, value] : r.lines) text.push_back({label, value});
  j["text"] = text;
  j["result"] = r.result;
  j["provenance"] = r.provenance;
  j["exit_code"] = r.exit_code;
  j["timing_ms"] = static_cast<long long>(r.seconds * 1000.0);
  return j.dump(2) + "\n";
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::SyntaxError:
    case ErrorKind::DimensionExceeded:
    case ErrorKind::UnboundName:
    case ErrorKind::InvalidArgument:
    case ErrorKind::DimensionMismatch:
    case ErrorKind::IndexOutOfRange:
      return 2;
    case ErrorKind::InvariantViolation:
      return 3;
    default:
      return 1;
  }
}

}  // namespace pdo::frontend
