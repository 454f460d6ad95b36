#include "mathieu/parser.hpp"

#include <cctype>

#include "mathieu/errors.hpp"

namespace mathieu {
namespace {

class Parser {
 public:
  Parser(std::string_view src, VariablesPtr vars, Ring ring)
      : src_(src), vars_(std::move(vars)), ring_(ring) {}

  Polynomial parse() {
    skip_space();
    if (at_end()) fail("empty expression");
    Polynomial out = expr();
    skip_space();
    if (!at_end()) fail(std::string("unexpected '") + src_[pos_] + "'");
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { fail_at(message, pos_); }

  [[noreturn]] void fail_at(const std::string& message, std::size_t offset) const {
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t k = 0; k < offset && k < src_.size(); ++k) {
      if (src_[k] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError(message, line, column);
  }

  bool at_end() const { return pos_ >= src_.size(); }
  char peek() const { return at_end() ? '\0' : src_[pos_]; }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  std::string digits() {
    skip_space();
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(src_.substr(start, pos_ - start));
  }

  Polynomial expr() {
    skip_space();
    Polynomial out = accept('-') ? -term() : term();
    for (;;) {
      if (accept('+')) {
        out += term();
      } else if (accept('-')) {
        out -= term();
      } else {
        return out;
      }
    }
  }

  Polynomial term() {
    Polynomial out = factor();
    while (accept('*')) out = out * factor();
    return out;
  }

  Polynomial factor() {
    skip_space();
    const std::size_t start = pos_;
    Polynomial base_value = base();
    if (!accept('^')) return base_value;
    skip_space();
    const std::size_t exp_pos = pos_;
    const bool negative = accept('-');
    const std::string d = digits();
    long exponent = 0;
    try {
      exponent = std::stol(d);
    } catch (const std::exception&) {
      fail_at("exponent out of range", exp_pos);
    }
    if (exponent > 1000000) fail_at("exponent out of range", exp_pos);
    try {
      return base_value.pow(negative ? -exponent : exponent);
    } catch (const DomainError& e) {
      fail_at(e.what(), start);
    }
  }

  Polynomial base() {
    skip_space();
    const char c = peek();
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      std::string text = digits();
      if (peek() == '/') {
        ++pos_;
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a denominator");
        text += "/" + digits();
      }
      try {
        return Polynomial::constant(ring_, vars_, Scalar::from_rational(ring_, Rational::parse(text)));
      } catch (const std::exception& e) {
        fail_at(std::string("invalid number '") + text + "': " + e.what(), start);
      }
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (!at_end() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) ++pos_;
      const std::string name(src_.substr(start, pos_ - start));
      if (name == "i") {
        if (ring_.kind() != RingKind::gaussian_rationals) fail_at("'i' is only available over qi", start);
        return Polynomial::constant(ring_, vars_, Scalar::imaginary_unit(ring_));
      }
      if (!vars_->contains(name)) {
        fail_at("unknown variable '" + name + "' (expected one of " + vars_->to_string() + ")", start);
      }
      return Polynomial::variable(ring_, vars_, name);
    }
    if (at_end()) fail("unexpected end of input");
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view src_;
  VariablesPtr vars_;
  Ring ring_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view src, const VariablesPtr& vars, const Ring& ring) {
  return Parser(src, vars, ring).parse();
}

WeylElement parse_operator(std::string_view src, const VariablesPtr& coordinates, const Ring& ring) {
  return WeylElement::from_right_normal(parse_polynomial(src, operator_variables(coordinates), ring),
                                        coordinates);
}

ScalarMatrix parse_matrix(std::string_view src, const Ring& ring) {
  const VariablesPtr none = VariableSet::make(std::vector<std::string>{});
  std::vector<std::vector<Scalar>> rows;
  std::size_t start = 0;
  std::vector<Scalar> row;
  auto entry = [&](std::size_t end) {
    const Polynomial p = parse_polynomial(src.substr(start, end - start), none, ring);
    row.push_back(p.constant_term());
    start = end + 1;
  };
  for (std::size_t k = 0; k <= src.size(); ++k) {
    if (k == src.size() || src[k] == ';') {
      entry(k);
      rows.push_back(std::move(row));
      row.clear();
    } else if (src[k] == ',') {
      entry(k);
    }
  }
  const std::size_t n = rows.size();
  for (const auto& r : rows) {
    if (r.size() != rows.front().size()) throw ParseError("rows of different lengths", 1, 1);
  }
  ScalarMatrix m = scalar_matrix(ring, n, rows.front().size());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

}  // namespace mathieu
