#pragma once
// Recursive-descent parser for integer Laurent polynomials in t1..tr (plain
// t when r = 1). Grammar:
//
//   expr   := ["-"] term (("+" | "-") term)*
//   term   := factor ("*" factor)*
//   factor := atom ("^" ["-"] uint)?
//   atom   := uint | var | "(" expr ")"
//   var    := "t" uint?
//
// Negative exponents are only allowed on atoms that are a single term with
// coefficient +-1, keeping every parse an honest Laurent polynomial.

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "iwalink/errors.hpp"
#include "iwalink/laurent.hpp"

namespace iwalink {

namespace detail {

class PolyParser {
 public:
  PolyParser(std::string_view src, int num_vars) : src_(src), nvars_(num_vars) {}

  MultiLaurent run() {
    MultiLaurent f = expr();
    skip_ws();
    if (pos_ != src_.size()) fail("unexpected trailing input");
    return f;
  }

 private:
  static constexpr long kExpCap = 1000000;

  std::string_view src_;
  std::size_t pos_ = 0;
  int nvars_;

  [[noreturn]] void fail(const std::string& msg) const {
    throw parse_error(errc::syntax_error, msg, pos_);
  }
  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip_ws();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  char peek() {
    skip_ws();
    return pos_ < src_.size() ? src_[pos_] : '\0';
  }

  std::string digits() {
    skip_ws();
    std::string out;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
      out += src_[pos_];
      ++pos_;
    }
    if (out.empty()) fail("expected a number");
    return out;
  }

  long bounded_uint(const char* what) {
    std::string d = digits();
    if (d.size() > 7) fail(std::string(what) + " is too large");
    long v = std::stol(d);
    if (v > kExpCap) fail(std::string(what) + " is too large");
    return v;
  }

  MultiLaurent expr() {
    bool neg = eat('-');
    MultiLaurent f = term();
    if (neg) f = -f;
    while (true) {
      if (eat('+')) {
        f += term();
      } else if (eat('-')) {
        f -= term();
      } else {
        return f;
      }
    }
  }

  MultiLaurent term() {
    MultiLaurent f = factor();
    while (eat('*')) f = f * factor();
    return f;
  }

  MultiLaurent factor() {
    MultiLaurent base = atom();
    skip_ws();
    if (pos_ >= src_.size() || src_[pos_] != '^') return base;
    const std::size_t caret = pos_;
    ++pos_;
    bool neg = eat('-');
    long e = bounded_uint("exponent");
    if (!neg) return base.pow(static_cast<unsigned long>(e));
    if (base.term_count() != 1 || abs_int(base.terms().begin()->second) != 1) {
      pos_ = caret;
      fail("negative exponent needs a single invertible term");
    }
    const auto& [exps, coeff] = *base.terms().begin();
    std::vector<int> inv(exps.size());
    for (std::size_t i = 0; i < exps.size(); ++i) inv[i] = -exps[i];
    return MultiLaurent::monomial(nvars_, std::move(inv), coeff)
        .pow(static_cast<unsigned long>(e));
  }

  MultiLaurent atom() {
    skip_ws();
    if (pos_ >= src_.size()) fail("unexpected end of input");
    char c = src_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return MultiLaurent::constant(nvars_, Int(digits()));
    }
    if (c == 't') {
      ++pos_;
      if (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
        const std::size_t at = pos_;
        long idx = bounded_uint("variable index");
        if (idx < 1 || idx > nvars_)
          throw parse_error(errc::arity_error,
                            "variable index must be between 1 and " + std::to_string(nvars_),
                            at);
        return MultiLaurent::variable(nvars_, static_cast<int>(idx - 1));
      }
      if (nvars_ != 1)
        throw parse_error(errc::arity_error,
                          "unsubscripted t is only valid with a single variable", pos_ - 1);
      return MultiLaurent::variable(1, 0);
    }
    if (c == '(') {
      ++pos_;
      MultiLaurent f = expr();
      if (!eat(')')) fail("expected )");
      return f;
    }
    fail("expected a number, variable, or (");
  }
};

}  // namespace detail

inline MultiLaurent parse_poly(std::string_view src, int num_vars) {
  return detail::PolyParser(src, num_vars).run();
}

// Semicolon-separated list of single-variable polynomials. Each entry is
// normalized to its unit associate with nonzero constant term, which leaves
// branched-cover orders unchanged.
inline std::vector<UniPoly> parse_knot_polys(std::string_view src) {
  std::vector<UniPoly> out;
  std::size_t start = 0;
  while (start <= src.size()) {
    std::size_t end = src.find(';', start);
    if (end == std::string_view::npos) end = src.size();
    out.push_back(parse_poly(src.substr(start, end - start), 1).specialize({1}).poly);
    start = end + 1;
    if (end == src.size()) break;
  }
  return out;
}

}  // namespace iwalink
