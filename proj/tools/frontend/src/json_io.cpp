#include "pdo/frontend/json_io.hpp"

#include "pdo/error.hpp"

namespace pdo::frontend {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::InvalidArgument, "malformed JSON: " + what); }

std::string mode_name(ResultantMode m) {
  switch (m) {
    case ResultantMode::Exhaustive: return "exhaustive";
    case ResultantMode::Sampled: return "sampled";
    case ResultantMode::RankOnly: return "rank-only";
  }
  return "?";
}

std::string kind_name(ResultantKind k) {
  switch (k) {
    case ResultantKind::Zero: return "Zero";
    case ResultantKind::Poly: return "Poly";
    case ResultantKind::Nonzero: return "Nonzero";
  }
  return "?";
}

}  // namespace

json poly_to_json(const MultiPoly& p) {
  json terms = json::array();
  for (const auto& t : p.terms()) {
    json exps = json::array();
    for (const auto& pw : t.mono.powers()) exps.push_back({var_class_tag(pw.var.cls()), pw.var.index(), pw.exp});
    terms.push_back({{"exps", exps}, {"coeff", to_string(t.coeff)}});
  }
  return terms;
}

MultiPoly poly_from_json(const json& j) {
  if (!j.is_array()) bad("polynomial must be an array of terms");
  std::vector<Term> terms;
  for (const auto& t : j) {
    if (!t.is_object() || !t.contains("exps") || !t.contains("coeff")) bad("term needs exps and coeff");
    std::vector<Power> pw;
    for (const auto& e : t.at("exps")) {
      if (!e.is_array() || e.size() != 3) bad("exponent entry must be [class, index, power]");
      const auto cls = var_class_from_tag(e.at(0).get<std::string>());
      const auto idx = e.at(1).get<std::uint32_t>();
      const auto pow = e.at(2).get<std::uint32_t>();
      if (idx == 0) bad("variable index 0");
      if (pow > 0) pw.push_back({VarId(cls, idx), pow});
    }
    std::sort(pw.begin(), pw.end(), [](const Power& a, const Power& b) { return a.var < b.var; });
    Rational c;
    try {
      c = Rational(t.at("coeff").get<std::string>());
      if (c.get_den() == 0) bad("zero denominator");
      c.canonicalize();
    } catch (const std::invalid_argument&) {
      bad("coefficient " + t.at("coeff").dump());
    }
    terms.push_back({Monomial(std::move(pw)), c});
  }
  return MultiPoly::from_terms(std::move(terms));
}

json ratfun_to_json(const RatFun& r) { return {{"num", poly_to_json(r.num())}, {"den", poly_to_json(r.den())}}; }

RatFun ratfun_from_json(const json& j) {
  if (!j.is_object() || !j.contains("num")) bad("coefficient needs num");
  const MultiPoly num = poly_from_json(j.at("num"));
  const MultiPoly den = j.contains("den") ? poly_from_json(j.at("den")) : MultiPoly(1);
  return RatFun(num, den);
}

json op_to_json(const DiffOp& op) {
  json terms = json::array();
  for (const auto& [m, c] : op.terms()) terms.push_back({{"dmono", m}, {"coeff", ratfun_to_json(c)}});
  return {{"dim", op.dim()}, {"terms", terms}};
}

DiffOp op_from_json(const json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("terms")) bad("operator needs dim and terms");
  const auto dim = j.at("dim").get<std::size_t>();
  DiffOp op(dim);
  for (const auto& t : j.at("terms")) {
    auto m = t.at("dmono").get<DMono>();
    if (m.size() != dim) bad("dmono length differs from dim");
    op.add_term(m, ratfun_from_json(t.at("coeff")));
  }
  return op;
}

json expfun_to_json(const ExpFunction& f) { return {{"dim", f.dim}, {"coeff", ratfun_to_json(f.coeff)}}; }

json outcome_to_json(const ResultantOutcome& r) {
  json j = {{"kind", kind_name(r.kind)},
            {"value", poly_to_json(r.value)},
            {"x_content", poly_to_json(r.x_content)},
            {"mode", mode_name(r.mode)},
            {"minors_examined", r.minors_examined},
            {"nonzero_minors", r.nonzero_minors},
            {"rank", r.rank},
            {"rows", r.rows},
            {"columns", r.columns},
            {"N", r.N}};
  if (r.mode == ResultantMode::Sampled) {
    j["samples"] = r.samples;
    j["seed"] = r.seed;
  }
  return j;
}

}  // namespace pdo::frontend
