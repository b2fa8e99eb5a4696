#include "pdo/diffop.hpp"

#include <sstream>

#include "pdo/error.hpp"

namespace pdo {

std::uint32_t dmono_degree(const DMono& m) {
  std::uint32_t d = 0;
  for (const auto e : m) d += e;
  return d;
}

bool DMonoGreater::operator()(const DMono& a, const DMono& b) const {
  const auto da = dmono_degree(a);
  const auto db = dmono_degree(b);
  if (da != db) return da > db;
  return a > b;  // lexicographic, D1 most significant
}

std::string dmono_to_string(const DMono& m) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += ' ';
    out += "D" + std::to_string(i + 1);
    if (m[i] > 1) out += "^" + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

DiffOp DiffOp::constant(std::size_t dim, const RatFun& c) {
  DiffOp r(dim);
  r.add_term(DMono(dim, 0), c);
  return r;
}

DiffOp DiffOp::partial(std::size_t dim, std::size_t i, std::uint32_t e) {
  if (i < 1 || i > dim) throw Error(ErrorKind::IndexOutOfRange, "D" + std::to_string(i) + " in dimension " + std::to_string(dim));
  DMono m(dim, 0);
  m[i - 1] = e;
  return monomial(dim, std::move(m));
}

DiffOp DiffOp::monomial(std::size_t dim, DMono m, const RatFun& c) {
  if (m.size() != dim) throw Error(ErrorKind::DimensionMismatch, "monomial length differs from dimension");
  DiffOp r(dim);
  r.add_term(m, c);
  return r;
}

DiffOp DiffOp::from_symbol(std::size_t dim, const MultiPoly& symbol) {
  DiffOp r(dim);
  const auto groups = symbol.collect([](VarId v) { return v.cls() == VarClass::Z; });
  for (const auto& [outer, coeff] : groups) {
    DMono m(dim, 0);
    for (const auto& p : outer.powers()) {
      if (p.var.index() < 1 || p.var.index() > dim)
        throw Error(ErrorKind::DimensionExceeded, var_name(p.var) + " in dimension " + std::to_string(dim));
      m[p.var.index() - 1] = p.exp;
    }
    r.add_term(m, RatFun(coeff));
  }
  return r;
}

int DiffOp::order() const {
  if (terms_.empty()) return kZeroOrder;
  return static_cast<int>(dmono_degree(terms_.begin()->first));
}

RatFun DiffOp::coeff(const DMono& m) const {
  const auto it = terms_.find(m);
  return it == terms_.end() ? RatFun() : it->second;
}

void DiffOp::add_term(const DMono& m, const RatFun& c) {
  if (m.size() != dim_) throw Error(ErrorKind::DimensionMismatch, "monomial length differs from dimension");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

DiffOp& DiffOp::operator+=(const DiffOp& o) {
  if (o.dim_ != dim_) throw Error(ErrorKind::DimensionMismatch, "adding operators of different dimension");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

DiffOp& DiffOp::operator-=(const DiffOp& o) {
  if (o.dim_ != dim_) throw Error(ErrorKind::DimensionMismatch, "subtracting operators of different dimension");
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

DiffOp DiffOp::operator-() const {
  DiffOp r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

DiffOp DiffOp::left_multiply(const RatFun& f) const {
  if (f.is_zero()) return DiffOp(dim_);
  DiffOp r = *this;
  for (auto& [m, c] : r.terms_) c = f * c;
  return r;
}

DiffOp DiffOp::map_coefficients(const std::function<RatFun(const RatFun&)>& f) const {
  DiffOp r(dim_);
  for (const auto& [m, c] : terms_) r.add_term(m, f(c));
  return r;
}

namespace {

bool is_rational(const RatFun& c) { return c.is_constant(); }

bool negative(const RatFun& c) { return !c.is_zero() && c.num().leading().coeff < 0; }

}  // namespace

std::string DiffOp::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool neg = negative(c);
    const RatFun a = neg ? -c : c;
    const bool bare_mono = dmono_degree(m) > 0;
    std::string body;
    if (is_rational(a)) {
      if (a.is_one() && bare_mono) {
        body = dmono_to_string(m);
      } else {
        body = pdo::to_string(a.num().constant_value());
        if (bare_mono) body += " " + dmono_to_string(m);
      }
    } else {
      body = "(" + a.to_string() + ")";
      if (bare_mono) body += " " + dmono_to_string(m);
    }
    if (first) {
      out = neg ? "-" + body : body;
      first = false;
    } else {
      out += neg ? " - " : " + ";
      out += body;
    }
  }
  return out;
}

std::string ExpFunction::to_string() const {
  std::ostringstream os;
  if (!coeff.is_one()) os << "(" << coeff.to_string() << ")*";
  os << "exp(";
  for (std::size_t i = 1; i <= dim; ++i) {
    if (i > 1) os << " + ";
    os << "x" << i << "*z" << i;
  }
  os << ")";
  return os.str();
}

}  // namespace pdo
