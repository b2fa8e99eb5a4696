#include "pdo/frontend/parser.hpp"

#include <cctype>
#include <optional>
#include <vector>

#include "pdo/error.hpp"
#include "pdo/operator_algebra.hpp"

namespace pdo::frontend {

namespace {

enum class Tok { Number, Name, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

[[noreturn]] void syntax(std::size_t pos, std::size_t len, const std::string& what) {
  const std::string where = pos >= len ? "at end of input" : "at position " + std::to_string(pos);
  throw Error(ErrorKind::SyntaxError, where + ": " + what);
}

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      out.push_back({Tok::Number, std::string(s.substr(start, i - start)), start});
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
      out.push_back({Tok::Name, std::string(s.substr(start, i - start)), start});
      continue;
    }
    Tok k;
    switch (c) {
      case '+': k = Tok::Plus; break;
      case '-': k = Tok::Minus; break;
      case '*': k = Tok::Star; break;
      case '/': k = Tok::Slash; break;
      case '^': k = Tok::Caret; break;
      case '(': k = Tok::LParen; break;
      case ')': k = Tok::RParen; break;
      default: syntax(start, s.size(), std::string("unexpected character '") + c + "'");
    }
    out.push_back({k, std::string(1, c), start});
    ++i;
  }
  out.push_back({Tok::End, "", s.size()});
  return out;
}

// Splits "mu12" into ("mu", 12) when the name is a known prefix plus digits.
std::optional<std::pair<std::string, std::uint32_t>> indexed(std::string_view name) {
  for (const std::string_view prefix : {"mu", "D", "x", "z", "c"}) {
    if (name.size() <= prefix.size() || name.substr(0, prefix.size()) != prefix) continue;
    const auto rest = name.substr(prefix.size());
    bool digits = true;
    for (const char ch : rest) digits = digits && std::isdigit(static_cast<unsigned char>(ch));
    if (!digits || rest.size() > 7) continue;
    return std::make_pair(std::string(prefix), static_cast<std::uint32_t>(std::stoul(std::string(rest))));
  }
  return std::nullopt;
}

struct Value {
  DiffOp op;
  bool has_d = false;
};

class Parser {
 public:
  Parser(std::string_view src, std::size_t dim, const Bindings& b)
      : len_(src.size()), toks_(lex(src)), dim_(dim), bindings_(b) {}

  Value parse() {
    Value v = expr();
    if (peek().kind != Tok::End) fail_here("unexpected '" + peek().text + "'");
    return v;
  }

 private:
  const Token& peek() const { return toks_[at_]; }
  const Token& take() { return toks_[at_++]; }
  [[noreturn]] void fail_here(const std::string& what) const { syntax(peek().pos, len_, what); }

  Value expr() {
    Value acc = term();
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      const bool minus = take().kind == Tok::Minus;
      Value rhs = term();
      acc.op = minus ? acc.op - rhs.op : acc.op + rhs.op;
      acc.has_d = acc.has_d || rhs.has_d;
    }
    return acc;
  }

  static bool starts_atom(Tok k) { return k == Tok::Number || k == Tok::Name || k == Tok::LParen; }

  Value term() {
    Value acc = unary();
    while (true) {
      const Tok k = peek().kind;
      if (k == Tok::Star || starts_atom(k)) {
        if (k == Tok::Star) take();
        Value rhs = unary();
        acc.op = compose(acc.op, rhs.op);
        acc.has_d = acc.has_d || rhs.has_d;
      } else if (k == Tok::Slash) {
        const std::size_t pos = take().pos;
        Value rhs = unary();
        if (rhs.op.order() > 0) syntax(pos, len_, "division by an expression of positive order");
        const RatFun f = rhs.op.constant_term();
        if (f.is_zero()) throw Error(ErrorKind::ZeroDivisor, "division by zero at position " + std::to_string(pos));
        acc.op = compose(acc.op, DiffOp::constant(dim_, f.inverse()));
      } else {
        return acc;
      }
    }
  }

  Value unary() {
    if (peek().kind == Tok::Minus) {
      take();
      Value v = unary();
      v.op = -v.op;
      return v;
    }
    return factor();
  }

  Value factor() {
    Value base = atom();
    if (peek().kind == Tok::Caret) {
      take();
      if (peek().kind != Tok::Number) fail_here("expected a nonnegative integer exponent");
      const Token& t = take();
      if (t.text.size() > 4) syntax(t.pos, len_, "exponent too large");
      base.op = power(base.op, static_cast<unsigned>(std::stoul(t.text)));
    }
    return base;
  }

  Value atom() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Number: {
        take();
        return {DiffOp::constant(dim_, RatFun(Rational(Integer(t.text)))), false};
      }
      case Tok::LParen: {
        take();
        Value v = expr();
        if (peek().kind != Tok::RParen) fail_here("expected ')'");
        take();
        return v;
      }
      case Tok::Name: return name(take());
      case Tok::End: fail_here("expected a term");
      default: fail_here("unexpected '" + t.text + "'");
    }
  }

  RatFun var(VarId v) const { return RatFun(MultiPoly::var(v)); }

  Value name(const Token& t) {
    if (t.text == "lambda") return {DiffOp::constant(dim_, var(lambda_var())), false};
    if (t.text == "gamma") return {DiffOp::constant(dim_, var(gamma_var())), false};
    if (const auto ix = indexed(t.text)) {
      const auto& [prefix, i] = *ix;
      if (i == 0) syntax(t.pos, len_, "index 0 in '" + t.text + "'");
      const bool bounded = prefix == "D" || prefix == "x" || prefix == "z";
      if (bounded && i > dim_)
        throw Error(ErrorKind::DimensionExceeded, "'" + t.text + "' at position " + std::to_string(t.pos) +
                                                      " exceeds dimension " + std::to_string(dim_));
      if (prefix == "D") return {DiffOp::partial(dim_, i), true};
      if (prefix == "x") return {DiffOp::constant(dim_, var(x_var(i))), false};
      if (prefix == "z") return {DiffOp::constant(dim_, var(z_var(i))), false};
      if (prefix == "mu") return {DiffOp::constant(dim_, var(mu_var(i))), false};
      return {DiffOp::constant(dim_, var(param_var(i))), false};
    }
    const auto it = bindings_.find(t.text);
    if (it == bindings_.end())
      throw Error(ErrorKind::UnboundName, "'" + t.text + "' at position " + std::to_string(t.pos) + " is not bound");
    if (it->second.dim() != dim_)
      throw Error(ErrorKind::DimensionMismatch, "'" + t.text + "' was bound in another dimension");
    return {it->second, it->second.order() > 0};
  }

  std::size_t len_;
  std::vector<Token> toks_;
  std::size_t at_ = 0;
  std::size_t dim_;
  const Bindings& bindings_;
};

}  // namespace

bool is_reserved_name(std::string_view name) {
  return name == "lambda" || name == "gamma" || indexed(name).has_value();
}

Expression parse_expression(std::string_view src, std::size_t dim, const Bindings& bindings) {
  if (dim == 0) throw Error(ErrorKind::InvalidArgument, "dimension must be positive");
  Value v = Parser(src, dim, bindings).parse();
  if (!v.has_d && v.op.order() <= 0) {
    const RatFun c = v.op.constant_term();
    if (c.is_polynomial()) return c.num();
  }
  return v.op;
}

DiffOp as_operator(const Expression& e, std::size_t dim) {
  if (const auto* op = std::get_if<DiffOp>(&e)) return *op;
  return DiffOp::constant(dim, RatFun(std::get<MultiPoly>(e)));
}

DiffOp parse_operator(std::string_view src, std::size_t dim, const Bindings& bindings) {
  return as_operator(parse_expression(src, dim, bindings), dim);
}

MultiPoly parse_polynomial(std::string_view src, std::size_t dim, const Bindings& bindings) {
  const Expression e = parse_expression(src, dim, bindings);
  if (const auto* p = std::get_if<MultiPoly>(&e)) return *p;
  const DiffOp& op = std::get<DiffOp>(e);
  if (op.order() <= 0 && op.constant_term().is_polynomial()) return op.constant_term().num();
  throw Error(ErrorKind::InvalidArgument, "expected a polynomial, got " + op.to_string());
}

}  // namespace pdo::frontend
