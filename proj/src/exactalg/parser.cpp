#include "gkz/exactalg/parser.hpp"

#include <cctype>
#include <string>

#include "gkz/errors.hpp"

namespace gkz::exact {

namespace {

bool is_digit(char c) { return c >= '0' && c <= '9'; }

class Parser {
 public:
  Parser(std::string_view text, std::size_t nvars) : text_(text), nvars_(nvars) {}

  RationalFunction run() {
    skip_space();
    if (pos_ == text_.size()) fail("empty expression");
    RationalFunction r = expr();
    skip_space();
    if (pos_ != text_.size()) fail(std::string("unexpected character '") + text_[pos_] + "'");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::string digits() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && is_digit(text_[pos_])) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  RationalFunction expr() {
    RationalFunction acc = term();
    for (;;) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  RationalFunction term() {
    RationalFunction acc = unary();
    for (;;) {
      if (accept('*')) {
        acc *= unary();
      } else if (accept('/')) {
        skip_space();
        std::size_t at = pos_;
        RationalFunction d = unary();
        if (d.is_zero()) throw ParseError("division by the zero polynomial", at);
        acc = acc / d;
      } else {
        return acc;
      }
    }
  }

  RationalFunction unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  RationalFunction power() {
    RationalFunction base = atom();
    if (accept('^')) {
      skip_space();
      if (pos_ >= text_.size() || !is_digit(text_[pos_])) fail("expected a nonnegative integer exponent");
      std::size_t at = pos_;
      Integer e(digits());
      if (!e.fits_ulong_p()) throw ParseError("exponent too large", at);
      skip_space();
      if (pos_ < text_.size() && text_[pos_] == '^') fail("chained exponents need parentheses");
      return base.pow(e.get_ui());
    }
    return base;
  }

  RationalFunction atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (is_digit(c)) return RationalFunction::constant(nvars_, Rational(Integer(digits())));
    if (c == '(') {
      ++pos_;
      RationalFunction inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string_view name = text_.substr(start, pos_ - start);
      std::size_t index = variable_index(name);
      if (index == 0 || index > nvars_) {
        throw ParseError("unknown variable '" + std::string(name) + "'", start);
      }
      return RationalFunction::variable(nvars_, index - 1);
    }
    fail(std::string("unexpected character '") + c + "'");
  }

 public:
  /// Index k for a name "xk" with k >= 1 written without leading zeros, or 0.
  static std::size_t variable_index(std::string_view name) {
    if (name.size() < 2 || name[0] != 'x' || name[1] == '0') return 0;
    std::size_t k = 0;
    for (std::size_t i = 1; i < name.size(); ++i) {
      if (!is_digit(name[i])) return 0;
      if (k > 1000000) return 0;
      k = k * 10 + static_cast<std::size_t>(name[i] - '0');
    }
    return k;
  }

 private:
  std::string_view text_;
  std::size_t nvars_;
  std::size_t pos_ = 0;
};

std::size_t infer_variable_count(std::string_view text) {
  std::size_t best = 0;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isalpha(static_cast<unsigned char>(text[i])) || text[i] == '_') {
      std::size_t start = i;
      while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) ++i;
      best = std::max(best, Parser::variable_index(text.substr(start, i - start)));
    } else {
      ++i;
    }
  }
  return best;
}

}  // namespace

RationalFunction parse_expression(std::string_view text, std::size_t nvars) {
  if (nvars == 0) nvars = infer_variable_count(text);
  return Parser(text, nvars).run();
}

}  // namespace gkz::exact
