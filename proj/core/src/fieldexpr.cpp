#include "hetoda/fieldexpr.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>
#include <sstream>

namespace hetoda {

namespace {

using Node = FieldExpr::Node;
using Kind = FieldExpr::Kind;
using NodePtr = std::unique_ptr<Node>;

NodePtr make(Kind k, NodePtr a = nullptr, NodePtr b = nullptr) {
  auto n = std::make_unique<Node>();
  n->kind = k;
  n->a = std::move(a);
  n->b = std::move(b);
  return n;
}

NodePtr make_number(double v) {
  auto n = std::make_unique<Node>();
  n->kind = Kind::Number;
  n->number = v;
  return n;
}

class Parser {
 public:
  explicit Parser(const std::string& src) : s_(src) {}

  NodePtr run() {
    skip_ws();
    if (pos_ >= s_.size()) throw SyntaxError(pos_, "an expression");
    auto e = expr();
    skip_ws();
    if (pos_ < s_.size()) throw SyntaxError(pos_, "end of input");
    return e;
  }

 private:
  NodePtr expr() {
    auto lhs = term();
    for (;;) {
      skip_ws();
      if (accept('+'))
        lhs = make(Kind::Add, std::move(lhs), term());
      else if (accept('-'))
        lhs = make(Kind::Sub, std::move(lhs), term());
      else
        return lhs;
    }
  }

  NodePtr term() {
    auto lhs = factor();
    for (;;) {
      skip_ws();
      if (accept('*'))
        lhs = make(Kind::Mul, std::move(lhs), factor());
      else if (accept('/'))
        lhs = make(Kind::Div, std::move(lhs), factor());
      else
        return lhs;
    }
  }

  NodePtr factor() {
    skip_ws();
    const bool negated = accept('-');
    auto base = atom();
    skip_ws();
    if (accept('^')) base = make(Kind::Pow, std::move(base), factor());
    // '^' binds tighter than the unary minus.
    return negated ? make(Kind::Neg, std::move(base)) : std::move(base);
  }

  NodePtr atom() {
    skip_ws();
    if (pos_ >= s_.size()) throw SyntaxError(pos_, "a number, name, or '('");
    const char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c))) return name();
    if (accept('(')) {
      auto e = expr();
      expect(')');
      return e;
    }
    throw SyntaxError(pos_, "a number, name, or '('");
  }

  NodePtr number() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ < s_.size() && s_[pos_] == '.') {
      ++pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    if (pos_ == start || (pos_ == start + 1 && s_[start] == '.'))
      throw SyntaxError(start, "a number");
    if (pos_ < s_.size() && (s_[pos_] == 'e' || s_[pos_] == 'E')) {
      std::size_t mark = pos_++;
      if (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) ++pos_;
      if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        pos_ = mark;  // 'e' belonged to something else; not a valid exponent
        throw SyntaxError(pos_, "exponent digits");
      }
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(s_.data() + start, s_.data() + pos_, value);
    if (ec != std::errc() || ptr != s_.data() + pos_)
      throw SyntaxError(start, "a representable number");
    return make_number(value);
  }

  NodePtr name() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    const std::string_view id(s_.data() + start, pos_ - start);
    if (id == "x") return make(Kind::VarX);
    if (id == "y") return make(Kind::VarY);
    if (id == "pi") return make(Kind::Pi);
    Kind fn;
    if (id == "sin") fn = Kind::Sin;
    else if (id == "cos") fn = Kind::Cos;
    else if (id == "exp") fn = Kind::Exp;
    else if (id == "sqrt") fn = Kind::Sqrt;
    else if (id == "abs") fn = Kind::Abs;
    else throw SyntaxError(start, "a known identifier (x, y, pi, sin, cos, exp, sqrt, abs)");
    skip_ws();
    expect('(');
    auto arg = expr();
    expect(')');
    return make(fn, std::move(arg));
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    skip_ws();
    if (!accept(c)) throw SyntaxError(pos_, std::string("'") + c + "'");
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

// Precedence levels for printing: 1 add/sub, 2 mul/div, 3 neg, 4 pow, 5 atom.
int precedence(Kind k) {
  switch (k) {
    case Kind::Add:
    case Kind::Sub: return 1;
    case Kind::Mul:
    case Kind::Div: return 2;
    case Kind::Neg: return 3;
    case Kind::Pow: return 4;
    default: return 5;
  }
}

void print(const Node* n, int context, std::ostream& os) {
  const int prec = precedence(n->kind);
  const bool parens = prec < context;
  if (parens) os << '(';
  switch (n->kind) {
    case Kind::Number: {
      char buf[40];
      auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), n->number);
      os.write(buf, end - buf);
      break;
    }
    case Kind::VarX: os << 'x'; break;
    case Kind::VarY: os << 'y'; break;
    case Kind::Pi: os << "pi"; break;
    case Kind::Add:
      print(n->a.get(), 1, os);
      os << '+';
      print(n->b.get(), 2, os);
      break;
    case Kind::Sub:
      print(n->a.get(), 1, os);
      os << '-';
      print(n->b.get(), 2, os);
      break;
    case Kind::Mul:
      print(n->a.get(), 2, os);
      os << '*';
      print(n->b.get(), 3, os);
      break;
    case Kind::Div:
      print(n->a.get(), 2, os);
      os << '/';
      print(n->b.get(), 3, os);
      break;
    case Kind::Neg:
      os << '-';
      print(n->a.get(), 4, os);  // "--x" would not re-parse
      break;
    case Kind::Pow:
      print(n->a.get(), 5, os);  // left side of '^' must be an atom
      os << '^';
      print(n->b.get(), 4, os);
      break;
    case Kind::Sin: os << "sin("; print(n->a.get(), 0, os); os << ')'; break;
    case Kind::Cos: os << "cos("; print(n->a.get(), 0, os); os << ')'; break;
    case Kind::Exp: os << "exp("; print(n->a.get(), 0, os); os << ')'; break;
    case Kind::Sqrt: os << "sqrt("; print(n->a.get(), 0, os); os << ')'; break;
    case Kind::Abs: os << "abs("; print(n->a.get(), 0, os); os << ')'; break;
  }
  if (parens) os << ')';
}

struct SamplePos {
  double x, y;
};

double eval(const Node* n, const SamplePos& at) {
  switch (n->kind) {
    case Kind::Number: return n->number;
    case Kind::VarX: return at.x;
    case Kind::VarY: return at.y;
    case Kind::Pi: return std::numbers::pi;
    case Kind::Add: return eval(n->a.get(), at) + eval(n->b.get(), at);
    case Kind::Sub: return eval(n->a.get(), at) - eval(n->b.get(), at);
    case Kind::Mul: return eval(n->a.get(), at) * eval(n->b.get(), at);
    case Kind::Div: {
      const double den = eval(n->b.get(), at);
      if (den == 0.0) throw EvalDomainError("division", at.x, at.y);
      return eval(n->a.get(), at) / den;
    }
    case Kind::Pow: {
      const double base = eval(n->a.get(), at);
      const double ex = eval(n->b.get(), at);
      const double v = std::pow(base, ex);
      if (!std::isfinite(v)) throw EvalDomainError("pow", at.x, at.y);
      return v;
    }
    case Kind::Neg: return -eval(n->a.get(), at);
    case Kind::Sin: return std::sin(eval(n->a.get(), at));
    case Kind::Cos: return std::cos(eval(n->a.get(), at));
    case Kind::Exp: {
      const double v = std::exp(eval(n->a.get(), at));
      if (!std::isfinite(v)) throw EvalDomainError("exp", at.x, at.y);
      return v;
    }
    case Kind::Sqrt: {
      const double arg = eval(n->a.get(), at);
      if (arg < 0.0) throw EvalDomainError("sqrt", at.x, at.y);
      return std::sqrt(arg);
    }
    case Kind::Abs: return std::abs(eval(n->a.get(), at));
  }
  throw Error("evaluate: corrupt expression node");
}

}  // namespace

FieldExpr parse_field_expr(const std::string& src) {
  return FieldExpr(Parser(src).run());
}

std::string pretty_print(const FieldExpr& e) {
  if (e.empty()) return "";
  std::ostringstream os;
  print(e.root(), 0, os);
  return os.str();
}

ScalarField evaluate(const FieldExpr& e, const PeriodicGrid& grid) {
  if (e.empty()) throw Error("evaluate: empty expression");
  ScalarField out(grid);
  for (int row = 0; row < grid.n; ++row)
    for (int col = 0; col < grid.n; ++col)
      out.at(row, col) =
          eval(e.root(), {grid.sample_x(col), grid.sample_y(row)});
  return out;
}

double evaluate_at(const FieldExpr& e, double x, double y) {
  if (e.empty()) throw Error("evaluate_at: empty expression");
  return eval(e.root(), {x, y});
}

}  // namespace hetoda
