#include <cctype>
#include <charconv>
#include <cmath>
#include <string>

#include "ellipconv/certify.hpp"
#include "ellipconv/cli.hpp"
#include "ellipconv/constants.hpp"
#include "ellipconv/errors.hpp"

namespace ellipconv::cli {
namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  double parse() {
    const double v = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw DomainError("bad expression '" + std::string(text_) + "': " + what);
  }

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

  double expr() {
    double v = term();
    while (true) {
      if (accept('+')) {
        v += term();
      } else if (accept('-')) {
        v -= term();
      } else {
        return v;
      }
    }
  }

  double term() {
    double v = unary();
    while (true) {
      if (accept('*')) {
        v *= unary();
      } else if (accept('/')) {
        v /= unary();
      } else {
        return v;
      }
    }
  }

  double unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    const double base = primary();
    if (accept('^')) return std::pow(base, unary());
    return base;
  }

  double primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end");
    if (accept('(')) {
      const double v = expr();
      if (!accept(')')) fail("missing ')'");
      return v;
    }
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return name();
    fail("unexpected '" + std::string(1, c) + "'");
  }

  double number() {
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), v);
    if (ec != std::errc{}) fail("bad number");
    pos_ = static_cast<std::size_t>(ptr - text_.data());
    return v;
  }

  double name() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    const std::string id(text_.substr(start, pos_ - start));
    if (id == "sqrt" || id == "log" || id == "exp") {
      if (!accept('(')) fail("expected '(' after " + id);
      const double arg = expr();
      if (!accept(')')) fail("missing ')'");
      if (id == "sqrt") return std::sqrt(arg);
      if (id == "log") return std::log(arg);
      return std::exp(arg);
    }
    if (id == "pi") return constants::pi;
    if (id == "log4") return constants::log4;
    if (id == "sqrt2") return constants::sqrt2;
    if (id == "p_logconcave") return constants::p_logconcave;
    if (id == "p_monotone") return constants::p_monotone;
    if (id == "p_convex_hi") return constants::p_convex_hi;
    if (id == "p_concave_lo") return constants::p_concave_lo;
    if (id == "a_recip_convex") return constants::a_recip_convex;
    if (id == "a_recip_concave") return constants::a_recip_concave;
    if (id == "alpha") return constants::alpha_lemma;
    if (id == "a_c") return certify::find_a_c().value;
    fail("unknown name '" + id + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

double eval_expr(std::string_view text) { return Parser(text).parse(); }

}  // namespace ellipconv::cli
