#include "bclass/expression.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <numeric>
#include <utility>

#include "bclass/errors.hpp"

namespace bclass {

std::string_view builtin_name(Builtin fn) {
  switch (fn) {
    case Builtin::Sin: return "sin";
    case Builtin::Cos: return "cos";
    case Builtin::Exp: return "exp";
    case Builtin::Log: return "log";
    case Builtin::Sqrt: return "sqrt";
    case Builtin::Sinc: return "sinc";
  }
  return "?";
}

namespace {

std::shared_ptr<Node> make(NodeKind kind, std::size_t position) {
  auto n = std::make_shared<Node>();
  n->kind = kind;
  n->position = position;
  return n;
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) {}

  Expression run() {
    skip_ws();
    if (at_end()) throw ParseError(pos_, "empty expression");
    NodePtr e = expr();
    skip_ws();
    if (!at_end()) throw ParseError(pos_, std::string("unexpected '") + src_[pos_] + "'");
    return Expression(std::move(e));
  }

 private:
  bool at_end() const { return pos_ >= src_.size(); }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (!at_end() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) {
      if (at_end()) throw ParseError(pos_, std::string("expected '") + c + "' before end of input");
      throw ParseError(pos_, std::string("expected '") + c + "'");
    }
  }

  NodePtr expr() {
    NodePtr lhs = term();
    for (;;) {
      skip_ws();
      const std::size_t at = pos_;
      NodeKind kind;
      if (accept('+'))
        kind = NodeKind::Add;
      else if (accept('-'))
        kind = NodeKind::Subtract;
      else
        return lhs;
      auto n = make(kind, at);
      n->lhs = std::move(lhs);
      n->rhs = term();
      lhs = std::move(n);
    }
  }

  NodePtr term() {
    NodePtr lhs = factor();
    for (;;) {
      skip_ws();
      const std::size_t at = pos_;
      NodeKind kind;
      if (accept('*'))
        kind = NodeKind::Multiply;
      else if (accept('/'))
        kind = NodeKind::Divide;
      else
        return lhs;
      auto n = make(kind, at);
      n->lhs = std::move(lhs);
      n->rhs = factor();
      lhs = std::move(n);
    }
  }

  NodePtr factor() {
    skip_ws();
    const std::size_t at = pos_;
    if (accept('-')) {
      auto n = make(NodeKind::Negate, at);
      n->lhs = power();
      return n;
    }
    return power();
  }

  NodePtr power() {
    NodePtr base = atom();
    skip_ws();
    const std::size_t at = pos_;
    if (!accept('^')) return base;
    auto [num, den] = signed_rational();
    auto n = make(NodeKind::Power, at);
    n->lhs = std::move(base);
    n->exponent_num = num;
    n->exponent_den = den;
    return n;
  }

  long integer_literal() {
    skip_ws();
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError(start, "expected an integer exponent");
    if (!at_end() && (src_[pos_] == '.' || src_[pos_] == 'e' || src_[pos_] == 'E'))
      throw ParseError(pos_, "exponents must be integers or rationals p/q");
    long v = 0;
    auto res = std::from_chars(src_.data() + start, src_.data() + pos_, v);
    if (res.ec != std::errc()) throw ParseError(start, "exponent out of range");
    return v;
  }

  std::pair<long, long> signed_rational() {
    bool negative = accept('-');
    long num, den = 1;
    skip_ws();
    const std::size_t at = pos_;
    if (accept('(')) {
      if (accept('-')) negative = !negative;
      num = integer_literal();
      if (accept('/')) den = integer_literal();
      expect(')');
      if (den == 0) throw ParseError(at, "zero denominator in exponent");
    } else {
      num = integer_literal();
    }
    if (negative) num = -num;
    const long g = std::gcd(num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    return {num, den};
  }

  NodePtr atom() {
    skip_ws();
    const std::size_t at = pos_;
    if (at_end()) throw ParseError(pos_, "unexpected end of input");
    const char c = src_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c))) {
      while (!at_end() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) ++pos_;
      const std::string_view id = src_.substr(at, pos_ - at);
      if (id == "x") return make(NodeKind::Variable, at);
      if (id == "pi") return make(NodeKind::Pi, at);
      static constexpr std::pair<std::string_view, Builtin> table[] = {
          {"sin", Builtin::Sin}, {"cos", Builtin::Cos},   {"exp", Builtin::Exp},
          {"log", Builtin::Log}, {"sqrt", Builtin::Sqrt}, {"sinc", Builtin::Sinc}};
      for (const auto& [name, fn] : table) {
        if (id != name) continue;
        expect('(');
        auto n = make(NodeKind::Call, at);
        n->function = fn;
        n->lhs = expr();
        expect(')');
        return n;
      }
      throw ParseError(at, "unknown identifier '" + std::string(id) + "'");
    }
    if (accept('(')) {
      NodePtr inner = expr();
      expect(')');
      return inner;
    }
    throw ParseError(at, std::string("unexpected '") + c + "'");
  }

  NodePtr number() {
    const std::size_t start = pos_;
    auto digits = [&] {
      const std::size_t s = pos_;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      return pos_ - s;
    };
    std::size_t count = digits();
    if (!at_end() && src_[pos_] == '.') {
      ++pos_;
      count += digits();
    }
    if (count == 0) throw ParseError(start, "malformed number");
    if (!at_end() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
      const std::size_t mark = pos_;
      ++pos_;
      if (!at_end() && (src_[pos_] == '+' || src_[pos_] == '-')) ++pos_;
      if (digits() == 0) throw ParseError(mark, "malformed exponent in number");
    }
    auto n = make(NodeKind::Constant, start);
    n->literal = std::string(src_.substr(start, pos_ - start));
    n->value = std::stod(n->literal);
    return n;
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

bool equal(const Node* a, const Node* b) {
  if (a == b) return true;
  if (!a || !b || a->kind != b->kind) return false;
  switch (a->kind) {
    case NodeKind::Constant: return a->value == b->value;
    case NodeKind::Pi:
    case NodeKind::Variable: return true;
    case NodeKind::Power:
      return a->exponent_num == b->exponent_num && a->exponent_den == b->exponent_den &&
             equal(a->lhs.get(), b->lhs.get());
    case NodeKind::Call: return a->function == b->function && equal(a->lhs.get(), b->lhs.get());
    case NodeKind::Negate: return equal(a->lhs.get(), b->lhs.get());
    default: return equal(a->lhs.get(), b->lhs.get()) && equal(a->rhs.get(), b->rhs.get());
  }
}

bool is_atom(const Node& n) {
  return n.kind == NodeKind::Constant || n.kind == NodeKind::Pi || n.kind == NodeKind::Variable ||
         n.kind == NodeKind::Call;
}

bool is_additive(const Node& n) { return n.kind == NodeKind::Add || n.kind == NodeKind::Subtract; }

void print(const Node& n, std::string& out);

void print_wrapped(const Node& n, bool wrap, std::string& out) {
  if (wrap) out += '(';
  print(n, out);
  if (wrap) out += ')';
}

void print(const Node& n, std::string& out) {
  switch (n.kind) {
    case NodeKind::Constant: out += n.literal.empty() ? format_double(n.value) : n.literal; return;
    case NodeKind::Pi: out += "pi"; return;
    case NodeKind::Variable: out += 'x'; return;
    case NodeKind::Negate:
      out += '-';
      print_wrapped(*n.lhs, !(is_atom(*n.lhs) || n.lhs->kind == NodeKind::Power), out);
      return;
    case NodeKind::Add:
    case NodeKind::Subtract:
      print(*n.lhs, out);
      out += n.kind == NodeKind::Add ? '+' : '-';
      print_wrapped(*n.rhs, is_additive(*n.rhs) || n.rhs->kind == NodeKind::Negate, out);
      return;
    case NodeKind::Multiply:
    case NodeKind::Divide:
      print_wrapped(*n.lhs, is_additive(*n.lhs), out);
      out += n.kind == NodeKind::Multiply ? '*' : '/';
      print_wrapped(*n.rhs, !(is_atom(*n.rhs) || n.rhs->kind == NodeKind::Power), out);
      return;
    case NodeKind::Power:
      print_wrapped(*n.lhs, !is_atom(*n.lhs), out);
      out += '^';
      if (n.exponent_den == 1 && n.exponent_num >= 0)
        out += std::to_string(n.exponent_num);
      else if (n.exponent_den == 1)
        out += "(" + std::to_string(n.exponent_num) + ")";
      else
        out += "(" + std::to_string(n.exponent_num) + "/" + std::to_string(n.exponent_den) + ")";
      return;
    case NodeKind::Call:
      out += builtin_name(n.function);
      out += '(';
      print(*n.lhs, out);
      out += ')';
      return;
  }
}

NodePtr substitute(const NodePtr& n, const NodePtr& replacement) {
  if (!n) return n;
  if (n->kind == NodeKind::Variable) return replacement;
  if (!n->lhs && !n->rhs) return n;
  auto copy = std::make_shared<Node>(*n);
  copy->lhs = substitute(n->lhs, replacement);
  copy->rhs = substitute(n->rhs, replacement);
  return copy;
}

}  // namespace

bool operator==(const Expression& a, const Expression& b) { return equal(a.root_ptr().get(), b.root_ptr().get()); }

Expression parse_expression(std::string_view source) { return Parser(source).run(); }

std::string to_string(const Expression& e) {
  std::string out;
  if (!e.empty()) print(e.root(), out);
  return out;
}

Expression Expression::substitute(const Expression& replacement) const {
  return Expression(bclass::substitute(root_, replacement.root_));
}

Expression Expression::constant(double value) {
  auto n = make(NodeKind::Constant, 0);
  n->value = value;
  n->literal = format_double(value);
  return Expression(std::move(n));
}

Expression Expression::variable() { return Expression(make(NodeKind::Variable, 0)); }
Expression Expression::pi() { return Expression(make(NodeKind::Pi, 0)); }

Expression Expression::negate(const Expression& a) {
  auto n = make(NodeKind::Negate, 0);
  n->lhs = a.root_;
  return Expression(std::move(n));
}

Expression Expression::binary(NodeKind kind, const Expression& a, const Expression& b) {
  auto n = make(kind, 0);
  n->lhs = a.root_;
  n->rhs = b.root_;
  return Expression(std::move(n));
}

Expression Expression::power(const Expression& base, long num, long den) {
  if (den <= 0) throw std::invalid_argument("exponent denominator must be positive");
  const long g = std::gcd(num, den);
  auto n = make(NodeKind::Power, 0);
  n->lhs = base.root_;
  n->exponent_num = num / g;
  n->exponent_den = den / g;
  return Expression(std::move(n));
}

Expression Expression::call(Builtin fn, const Expression& arg) {
  auto n = make(NodeKind::Call, 0);
  n->function = fn;
  n->lhs = arg.root_;
  return Expression(std::move(n));
}

}  // namespace bclass
