#include <algorithm>
#include <cctype>

#include "aspec/omega.hpp"

namespace aspec::omega {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  RationalExpr parse_all() {
    RationalExpr e = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(pos_, what);
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

  RationalExpr expr() {
    RationalExpr acc = term();
    for (;;) {
      if (accept('+')) {
        acc = acc + term();
      } else if (accept('-')) {
        acc = acc - term();
      } else {
        return acc;
      }
    }
  }

  RationalExpr term() {
    RationalExpr acc = factor();
    for (;;) {
      if (accept('*')) {
        acc = acc * factor();
      } else if (accept('/')) {
        const std::size_t at = pos_;
        RationalExpr rhs = factor();
        if (rhs.is_zero()) {
          throw Error(ErrorCode::ZeroDenominator,
                      "division by an expression that is identically zero at position " +
                          std::to_string(at));
        }
        acc = acc / rhs;
      } else {
        return acc;
      }
    }
  }

  RationalExpr factor() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '-') {
      ++pos_;
      return -factor();
    }
    if (c == 'n') {
      ++pos_;
      return RationalExpr::variable();
    }
    if (c == '(') {
      ++pos_;
      RationalExpr inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return RationalExpr::constant(Rational(BigInt(std::string(text_.substr(start, pos_ - start)))));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

RationalExpr parse_rational(std::string_view text) { return Parser(text).parse_all(); }

OmegaElement parse_element(std::string_view text) {
  std::optional<RationalExpr> odd;
  std::optional<RationalExpr> even;
  std::size_t offset = 0;
  while (offset <= text.size()) {
    const std::size_t semi = std::min(text.find(';', offset), text.size());
    const std::string_view part = text.substr(offset, semi - offset);
    const std::size_t eq = part.find('=');
    if (eq == std::string_view::npos) {
      throw ParseError(offset, "expected key=expression");
    }
    const std::string_view key = trim(part.substr(0, eq));
    std::optional<RationalExpr>* slot = key == "odd" ? &odd : key == "even" ? &even : nullptr;
    if (slot == nullptr) {
      throw ParseError(offset, "unknown key '" + std::string(key) + "'");
    }
    if (slot->has_value()) {
      throw ParseError(offset, "duplicate key '" + std::string(key) + "'");
    }
    const std::size_t value_start = offset + eq + 1;
    try {
      *slot = parse_rational(part.substr(eq + 1));
    } catch (const ParseError& e) {
      throw ParseError(value_start + e.position(), "malformed " + std::string(key) + " branch");
    }
    offset = semi + 1;
  }
  if (!odd || !even) throw ParseError(text.size(), "element needs both odd= and even= branches");
  return OmegaElement(std::move(*odd), std::move(*even));
}

}  // namespace aspec::omega
