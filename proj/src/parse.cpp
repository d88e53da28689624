#include "isingcc/parse.hpp"

#include <cctype>
#include <charconv>

namespace isingcc {

namespace {

[[noreturn]] void fail(std::string_view text, std::size_t pos, const std::string& what) {
  throw Error(ErrorCode::kSchema,
              "cannot parse '" + std::string(text) + "' at offset " + std::to_string(pos) + ": " + what);
}

/// Operators in both modes; a scalar literal is a multiple of the identity.
struct Value {
  ExactOperator exact;
  Operator numeric;
  bool is_exact = true;

  static Value scalar(const ExactComplex& e, const Complex& n, bool exact) {
    return {ExactOperator::scalar(e), Operator::scalar(n), exact};
  }
};

Value add(const Value& x, const Value& y, bool subtract) {
  Value out;
  out.exact = subtract ? x.exact - y.exact : x.exact + y.exact;
  out.numeric = subtract ? x.numeric - y.numeric : x.numeric + y.numeric;
  out.is_exact = x.is_exact && y.is_exact;
  return out;
}

Value mul(const Value& x, const Value& y) {
  return {x.exact * y.exact, x.numeric * y.numeric, x.is_exact && y.is_exact};
}

class Parser {
 public:
  Parser(std::string_view text, bool allow_generators) : text_(text), generators_(allow_generators) {}

  Value run() {
    Value v = expression();
    skip();
    if (pos_ != text_.size()) fail(text_, pos_, "unexpected character");
    return v;
  }

 private:
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Value expression() {
    skip();
    Value v = term();
    while (true) {
      if (accept('+')) {
        v = add(v, term(), false);
      } else if (accept('-')) {
        v = add(v, term(), true);
      } else {
        return v;
      }
    }
  }

  Value term() {
    Value v = unary();
    while (true) {
      if (accept('*')) {
        v = mul(v, unary());
      } else if (accept('/')) {
        const std::size_t at = pos_;
        const Value d = unary();
        v = divide(v, d, at);
      } else {
        return v;
      }
    }
  }

  Value divide(const Value& x, const Value& d, std::size_t at) {
    if (!d.exact.is_scalar() || !d.numeric.is_scalar()) fail(text_, at, "division by an operator");
    const Complex dn = d.numeric.coefficient({});
    if (std::abs(dn) == 0.0) fail(text_, at, "division by zero");
    Value out;
    out.numeric = op_scale(x.numeric, Complex(1.0) / dn);
    out.is_exact = x.is_exact && d.is_exact;
    if (out.is_exact) {
      const ExactComplex de = d.exact.coefficient({});
      if (!de.im.is_zero() || !de.re.is_rational()) fail(text_, at, "exact division needs a rational divisor");
      const QPi inv = QPi(Rational(1) / de.re.constant());
      out.exact = op_scale(x.exact, ExactComplex(inv));
    }
    return out;
  }

  Value unary() {
    if (accept('-')) {
      const Value v = unary();
      return mul(Value::scalar(ExactComplex(-1), Complex(-1.0), true), v);
    }
    if (accept('+')) return unary();
    return power();
  }

  Value power() {
    Value base = primary();
    if (accept('^')) {
      skip();
      const std::size_t at = pos_;
      const long long k = integer();
      if (k < 0 || k > 16) fail(text_, at, "exponent outside 0..16");
      Value out = Value::scalar(ExactComplex(1), Complex(1.0), true);
      for (long long n = 0; n < k; ++n) out = mul(out, base);
      return out;
    }
    return base;
  }

  long long integer() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail(text_, start, "expected an integer");
    long long v = 0;
    const auto res = std::from_chars(text_.data() + start, text_.data() + pos_, v);
    if (res.ec != std::errc()) fail(text_, start, "integer out of range");
    return v;
  }

  Value primary() {
    skip();
    if (pos_ >= text_.size()) fail(text_, pos_, "unexpected end");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Value v = expression();
      if (!accept(')')) fail(text_, pos_, "expected ')'");
      return v;
    }
    if (text_.substr(pos_, 2) == "pi") {
      pos_ += 2;
      return Value::scalar(ExactComplex(QPi::pi()), Complex(QPi::pi().to_double()), true);
    }
    if (c == 'i') {
      ++pos_;
      return Value::scalar(ExactComplex::i(), Complex(0.0, 1.0), true);
    }
    if (c == 'U' && generators_) {
      ++pos_;
      return generator();
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    fail(text_, pos_, "unexpected character");
  }

  // U<half-integer>: [-]digits[/2]
  Value generator() {
    const std::size_t start = pos_;
    if (pos_ < text_.size() && text_[pos_] == '-') ++pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ < text_.size() && text_[pos_] == '/') {
      ++pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    const HalfInt site = HalfInt::parse(text_.substr(start, pos_ - start));
    return {ExactOperator::generator(site), Operator::generator(site), true};
  }

  Value number() {
    const std::size_t start = pos_;
    bool decimal = false;
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (std::isdigit(static_cast<unsigned char>(c))) {
        ++pos_;
      } else if (c == '.') {
        decimal = true;
        ++pos_;
      } else if ((c == 'e' || c == 'E') && pos_ + 1 < text_.size()) {
        decimal = true;
        ++pos_;
        if (text_[pos_] == '+' || text_[pos_] == '-') ++pos_;
      } else {
        break;
      }
    }
    const std::string token(text_.substr(start, pos_ - start));
    if (!decimal) {
      const Rational r(token);
      return Value::scalar(ExactComplex(QPi(r)), Complex(static_cast<double>(r)), true);
    }
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size()) fail(text_, start, "malformed number");
    return Value::scalar(ExactComplex(), Complex(v), false);
  }

  std::string_view text_;
  bool generators_;
  std::size_t pos_ = 0;
};

}  // namespace

ParsedScalar parse_scalar(std::string_view text) {
  const Value v = Parser(text, false).run();
  ParsedScalar out;
  out.is_exact = v.is_exact;
  out.numeric = v.numeric.coefficient({});
  if (v.is_exact) out.exact = v.exact.coefficient({});
  return out;
}

ParsedScalar parse_real(std::string_view text) {
  ParsedScalar s = parse_scalar(text);
  if (s.numeric.imag() != 0.0 || (s.is_exact && !s.exact.im.is_zero())) {
    throw Error(ErrorCode::kSchema, "'" + std::string(text) + "' must be real");
  }
  return s;
}

ParsedOperator parse_operator(std::string_view text) {
  const Value v = Parser(text, true).run();
  ParsedOperator out;
  out.is_exact = v.is_exact;
  out.numeric = v.numeric;
  if (v.is_exact) out.exact = v.exact;
  return out;
}

}  // namespace isingcc
