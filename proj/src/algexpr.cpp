#include "hyperlog/algexpr.hpp"

#include <cctype>
#include <string>

#include "hyperlog/errors.hpp"
#include "hyperlog/functions.hpp"

namespace hyperlog {

struct AlgExpr::Node {
  Kind kind;
  Rational q;  // kRational, kGamma
  long n = 0;  // kZeta, kRoot, kPow
  std::shared_ptr<const Node> a, b;
};

namespace {

using NodePtr = std::shared_ptr<const AlgExpr::Node>;
using Kind = AlgExpr::Kind;

NodePtr make(Kind k, NodePtr a = nullptr, NodePtr b = nullptr, long n = 0, Rational q = Rational(0)) {
  return std::make_shared<const AlgExpr::Node>(AlgExpr::Node{k, std::move(q), n, std::move(a), std::move(b)});
}

// Printing precedence: 1 sums, 2 products, 3 unary minus, 4 powers, 5 atoms.
int level(const AlgExpr::Node& n) {
  switch (n.kind) {
    case Kind::kRational:
      if (n.q.denominator() != 1) return 2;
      return n.q < Rational(0) ? 3 : 5;
    case Kind::kAdd:
    case Kind::kSub: return 1;
    case Kind::kMul:
    case Kind::kDiv: return 2;
    case Kind::kNeg: return 3;
    case Kind::kPow: return 4;
    default: return 5;
  }
}

std::string print(const AlgExpr::Node& n, int min_level) {
  std::string s;
  switch (n.kind) {
    case Kind::kRational: s = n.q.str(); break;
    case Kind::kPi: s = "pi"; break;
    case Kind::kI: s = "i"; break;
    case Kind::kZeta: s = "zeta(" + std::to_string(n.n) + ")"; break;
    case Kind::kRoot:
      s = n.n == 2 ? "sqrt(" + print(*n.a, 0) + ")"
                   : "root(" + std::to_string(n.n) + ", " + print(*n.a, 0) + ")";
      break;
    case Kind::kGamma: s = "gamma(" + n.q.str() + ")"; break;
    case Kind::kNeg: s = "-" + print(*n.a, 3); break;
    case Kind::kAdd: s = print(*n.a, 1) + " + " + print(*n.b, 2); break;
    case Kind::kSub: s = print(*n.a, 1) + " - " + print(*n.b, 2); break;
    case Kind::kMul: s = print(*n.a, 2) + "*" + print(*n.b, 3); break;
    case Kind::kDiv: s = print(*n.a, 2) + "/" + print(*n.b, 3); break;
    case Kind::kPow: s = print(*n.a, 5) + "^" + std::to_string(n.n); break;
  }
  return level(n) < min_level ? "(" + s + ")" : s;
}

struct EvalContext {
  Precision prec;  // caller's target
  Precision wp;
};

bool negligible(const Real& part, const Real& scale, Precision bits) {
  if (part.is_zero()) return true;
  const long ref = scale.is_zero() ? 0 : std::max(0L, scale.exponent2());
  return part.exponent2() < ref - static_cast<long>(bits);
}

Complex eval_node(const AlgExpr::Node& n, const EvalContext& cx) {
  const Precision wp = cx.wp;
  switch (n.kind) {
    case Kind::kRational: return Complex(Real(n.q, wp));
    case Kind::kPi: return Complex(pi(wp));
    case Kind::kI: return Complex(Real(0L, wp), Real(1L, wp));
    case Kind::kZeta: return root_of_unity(n.n, 1, wp);
    case Kind::kGamma: return Complex(gamma(n.q, wp));
    case Kind::kNeg: return -eval_node(*n.a, cx);
    case Kind::kAdd: return eval_node(*n.a, cx) + eval_node(*n.b, cx);
    case Kind::kSub: return eval_node(*n.a, cx) - eval_node(*n.b, cx);
    case Kind::kMul: return eval_node(*n.a, cx) * eval_node(*n.b, cx);
    case Kind::kDiv: {
      const Complex den = eval_node(*n.b, cx);
      if (negligible(den.abs(), Real(1L, wp), cx.prec)) {
        throw DomainError("division by zero in " + print(n, 0));
      }
      return eval_node(*n.a, cx) / den;
    }
    case Kind::kPow: {
      const Complex base = eval_node(*n.a, cx);
      if (n.n < 0 && base.is_zero()) throw DomainError("division by zero in " + print(n, 0));
      return pow(base, n.n);
    }
    case Kind::kRoot: {
      const Complex x = eval_node(*n.a, cx);
      if (!negligible(x.im(), x.re(), cx.prec)) {
        throw DomainError("root of a non-real value in " + print(n, 0));
      }
      const Real& re = x.re();
      if (re.is_zero()) return Complex(Real(0L, wp));
      if (re > 0) return Complex(root(re, static_cast<unsigned long>(n.n)));
      if (n.n % 2 == 0) throw DomainError("even root of a negative value in " + print(n, 0));
      return Complex(-root(-re, static_cast<unsigned long>(n.n)));
    }
  }
  throw Error("unreachable");
}

class Parser {
 public:
  Parser(std::string_view text, std::size_t offset) : s_(text), offset_(offset) {}

  AlgExpr parse_all() {
    AlgExpr e = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return e;
  }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, offset_ + pos_); }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  AlgExpr expr() {
    AlgExpr e = term();
    for (;;) {
      if (accept('+')) e = e + term();
      else if (accept('-')) e = e - term();
      else return e;
    }
  }
  AlgExpr term() {
    AlgExpr e = unary();
    for (;;) {
      if (accept('*')) {
        e = e * unary();
      } else if (accept('/')) {
        const std::size_t at = pos_;
        AlgExpr d = unary();
        if (d.as_rational() == Rational(0)) {
          pos_ = at;
          fail("division by literal zero");
        }
        e = e / d;
      } else {
        return e;
      }
    }
  }
  AlgExpr unary() {
    if (accept('-')) return -unary();
    return power();
  }
  AlgExpr power() {
    AlgExpr base = atom();
    if (accept('^')) {
      skip();
      const bool neg = accept('-');
      const long n = integer();
      return pow(base, neg ? -n : n);
    }
    return base;
  }
  long integer() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    if (pos_ - start > 18) {
      pos_ = start;
      fail("integer too large");
    }
    return std::stol(std::string(s_.substr(start, pos_ - start)));
  }
  AlgExpr atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      AlgExpr e = expr();
      expect(')');
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return AlgExpr(Rational::parse(s_.substr(start, pos_ - start)));
    }
    if (!std::isalpha(static_cast<unsigned char>(c))) fail("unexpected '" + std::string(1, c) + "'");
    const std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    const std::string name(s_.substr(start, pos_ - start));
    if (name == "pi") return AlgExpr::pi();
    if (name == "i") return AlgExpr::i();
    if (name == "zeta") {
      expect('(');
      const std::size_t at = pos_;
      const long n = integer();
      if (n < 1) {
        pos_ = at;
        fail("zeta order must be positive");
      }
      expect(')');
      return AlgExpr::zeta(n);
    }
    if (name == "sqrt") {
      expect('(');
      AlgExpr e = expr();
      expect(')');
      return AlgExpr::sqrt(e);
    }
    if (name == "root") {
      expect('(');
      const std::size_t at = pos_;
      const long n = integer();
      if (n < 1) {
        pos_ = at;
        fail("root order must be positive");
      }
      expect(',');
      AlgExpr e = expr();
      expect(')');
      return AlgExpr::root(n, e);
    }
    if (name == "gamma") {
      expect('(');
      skip();
      const std::size_t at = pos_;
      AlgExpr e = expr();
      const auto q = e.as_rational();
      if (!q) {
        pos_ = at;
        fail("gamma takes a rational literal");
      }
      expect(')');
      return AlgExpr::gamma(*q);
    }
    pos_ = start;
    fail("unknown identifier '" + name + "'");
  }

  std::string_view s_;
  std::size_t offset_;
  std::size_t pos_ = 0;
};

}  // namespace

AlgExpr::AlgExpr(const Rational& q) : node_(make(Kind::kRational, nullptr, nullptr, 0, q)) {}

AlgExpr AlgExpr::parse(std::string_view text) { return Parser(text, 0).parse_all(); }
AlgExpr AlgExpr::pi() { return AlgExpr(make(Kind::kPi)); }
AlgExpr AlgExpr::i() { return AlgExpr(make(Kind::kI)); }

AlgExpr AlgExpr::zeta(long n) {
  if (n < 1) throw PreconditionError("zeta order must be positive");
  return AlgExpr(make(Kind::kZeta, nullptr, nullptr, n));
}

AlgExpr AlgExpr::root(long n, const AlgExpr& x) {
  if (n < 1) throw PreconditionError("root order must be positive");
  if (n == 1) return x;
  return AlgExpr(make(Kind::kRoot, x.node_, nullptr, n));
}

AlgExpr AlgExpr::gamma(const Rational& q) {
  return AlgExpr(make(Kind::kGamma, nullptr, nullptr, 0, q));
}

AlgExpr::Kind AlgExpr::kind() const { return node_->kind; }

std::optional<Rational> AlgExpr::as_rational() const {
  if (node_->kind != Kind::kRational) return std::nullopt;
  return node_->q;
}
std::string AlgExpr::str() const { return print(*node_, 0); }

Complex AlgExpr::eval(Precision prec) const {
  const EvalContext cx{prec, prec + guard_bits(prec)};
  return eval_node(*node_, cx).with_precision(prec);
}

Real AlgExpr::eval_real(Precision prec) const {
  const Complex z = eval(prec);
  if (!negligible(z.im(), z.re(), prec - guard_bits(prec))) {
    throw DomainError("expected a real value from " + str() + ", got " + z.str(20));
  }
  return z.re();
}

AlgExpr AlgExpr::conj() const {
  const Node& n = *node_;
  switch (n.kind) {
    case Kind::kZeta: return pow(*this, n.n - 1);
    case Kind::kI: return -*this;
    case Kind::kNeg: return -AlgExpr(n.a).conj();
    case Kind::kRoot: return AlgExpr(make(Kind::kRoot, AlgExpr(n.a).conj().node_, nullptr, n.n));
    case Kind::kPow: return pow(AlgExpr(n.a).conj(), n.n);
    case Kind::kAdd: return AlgExpr(n.a).conj() + AlgExpr(n.b).conj();
    case Kind::kSub: return AlgExpr(n.a).conj() - AlgExpr(n.b).conj();
    case Kind::kMul: return AlgExpr(n.a).conj() * AlgExpr(n.b).conj();
    case Kind::kDiv: return AlgExpr(n.a).conj() / AlgExpr(n.b).conj();
    default: return *this;
  }
}

AlgExpr operator+(const AlgExpr& a, const AlgExpr& b) { return AlgExpr(make(Kind::kAdd, a.node_, b.node_)); }
AlgExpr operator-(const AlgExpr& a, const AlgExpr& b) { return AlgExpr(make(Kind::kSub, a.node_, b.node_)); }
AlgExpr operator*(const AlgExpr& a, const AlgExpr& b) { return AlgExpr(make(Kind::kMul, a.node_, b.node_)); }

// Literal quotients and negations fold into a single rational leaf, which is
// what makes printing and parsing inverse to each other.
AlgExpr operator/(const AlgExpr& a, const AlgExpr& b) {
  if (a.kind() == Kind::kRational && b.kind() == Kind::kRational && b.node_->q != Rational(0)) {
    return AlgExpr(a.node_->q / b.node_->q);
  }
  return AlgExpr(make(Kind::kDiv, a.node_, b.node_));
}

AlgExpr operator-(const AlgExpr& a) {
  if (a.kind() == Kind::kRational) return AlgExpr(-a.node_->q);
  return AlgExpr(make(Kind::kNeg, a.node_));
}

AlgExpr pow(const AlgExpr& a, long n) {
  if (n == 1) return a;
  return AlgExpr(make(Kind::kPow, a.node_, nullptr, n));
}

const char* to_string(TransTerm::Kind k) {
  switch (k) {
    case TransTerm::Kind::kLog: return "log";
    case TransTerm::Kind::kAtan: return "atan";
    case TransTerm::Kind::kAcos: return "acos";
    case TransTerm::Kind::kPiI: return "pi_i";
    case TransTerm::Kind::kOne: return "one";
  }
  return "?";
}

TransTerm::Kind parse_term_kind(std::string_view name) {
  if (name == "log") return TransTerm::Kind::kLog;
  if (name == "atan") return TransTerm::Kind::kAtan;
  if (name == "acos") return TransTerm::Kind::kAcos;
  if (name == "pi_i") return TransTerm::Kind::kPiI;
  if (name == "one") return TransTerm::Kind::kOne;
  throw PreconditionError("unknown term kind '" + std::string(name) + "'");
}

Complex TransTerm::eval(Precision prec) const {
  const Precision wp = prec + guard_bits(prec);
  switch (kind) {
    case Kind::kPiI: return Complex(Real(0L, prec), pi(prec));
    case Kind::kOne: return Complex(Real(1L, prec));
    default: break;
  }
  if (!argument) throw PreconditionError(std::string(to_string(kind)) + " term needs an argument");
  if (kind == Kind::kLog) {
    const Complex z = argument->eval(wp);
    if (z.is_zero()) throw DomainError("log of zero: " + argument->str());
    return log_principal(z).with_precision(prec);
  }
  const Real x = argument->eval_real(wp);
  return Complex(kind == Kind::kAtan ? hyperlog::atan(x) : hyperlog::acos(x)).with_precision(prec);
}

bool TransTerm::branch_sensitive(Precision prec) const {
  if (kind != Kind::kLog || !argument) return false;
  const Complex z = argument->eval(prec + guard_bits(prec));
  if (z.is_zero()) return false;
  const Real gap = pi(z.precision()) - abs(z.arg());
  return negligible(gap, Real(1L, prec), prec / 2);
}

std::string TransTerm::str() const {
  switch (kind) {
    case Kind::kPiI: return "pi_i";
    case Kind::kOne: return "1";
    default: return std::string(to_string(kind)) + "(" + (argument ? argument->str() : "") + ")";
  }
}

TransTerm TransTerm::parse(std::string_view text) {
  std::size_t b = 0;
  std::size_t e = text.size();
  while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
  const std::string_view body = text.substr(b, e - b);
  if (body == "pi_i") return pi_i();
  if (body == "1" || body == "one") return one();
  const std::size_t open = body.find('(');
  if (open == std::string_view::npos || body.back() != ')') {
    throw ParseError("expected log(...), atan(...), acos(...), pi_i or 1", b);
  }
  const std::string_view name = body.substr(0, open);
  if (name != "log" && name != "atan" && name != "acos") {
    throw ParseError("unknown function '" + std::string(name) + "'", b);
  }
  const std::string_view inner = body.substr(open + 1, body.size() - open - 2);
  const AlgExpr arg = Parser(inner, b + open + 1).parse_all();
  return {parse_term_kind(name), arg};
}

Complex eval_formula_rhs(const LogFormula& f, Precision prec) {
  const Precision wp = prec + guard_bits(prec);
  Complex sum(Real(0L, wp));
  for (const auto& t : f.rhs) sum += t.coeff.eval(wp) * t.term.eval(wp);
  return sum.with_precision(prec);
}

}  // namespace hyperlog
