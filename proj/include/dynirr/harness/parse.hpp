#pragma once

#include <cctype>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "dynirr/exactalg/poly.hpp"

namespace dynirr {

class ParseError : public Error {
 public:
  ParseError(std::size_t offset, std::vector<std::string> expected, std::string_view found)
      : Error(ErrorCode::ParseError, describe(offset, expected, found)), offset_(offset), expected_(std::move(expected)) {}

  std::size_t offset() const { return offset_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  static std::string describe(std::size_t offset, const std::vector<std::string>& expected, std::string_view found) {
    std::string s = "at byte " + std::to_string(offset) + ": expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) s += (i ? " or " : "") + expected[i];
    s += ", found " + std::string(found);
    return s;
  }

  std::size_t offset_;
  std::vector<std::string> expected_;
};

/// Largest exponent accepted by the parser.
inline constexpr unsigned long kMaxParsedExponent = 1ul << 20;

namespace detail {

class PolyParser {
 public:
  explicit PolyParser(std::string_view s) : s_(s) {}

  IntPoly parse() {
    skip();
    int sign = 1;
    if (peek() == '-') {
      sign = -1;
      ++pos_;
      skip();
    }
    term(sign);
    while (true) {
      skip();
      if (pos_ == s_.size()) break;
      const char c = s_[pos_];
      if (c != '+' && c != '-') fail({"'+'", "'-'", "end of input"});
      ++pos_;
      skip();
      term(c == '-' ? -1 : 1);
    }
    std::vector<BigInt> v;
    if (!terms_.empty()) v.resize(terms_.rbegin()->first + 1, 0);
    for (auto& [k, c] : terms_) v[k] = c;
    return IntPoly(std::move(v));
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(std::vector<std::string> expected) const {
    std::string found = pos_ < s_.size() ? "'" + std::string(1, s_[pos_]) + "'" : "end of input";
    throw ParseError(pos_, std::move(expected), found);
  }

  std::string digits() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  void term(int sign) {
    BigInt coeff = sign;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff *= BigInt(digits());
      skip();
      if (peek() != '*') {
        add(0, coeff);
        return;
      }
      ++pos_;
      skip();
      if (peek() != 'x') fail({"'x'"});
    } else if (peek() != 'x') {
      fail({"integer", "'x'"});
    }
    ++pos_;  // 'x'
    unsigned long k = 1;
    skip();
    if (peek() == '^') {
      ++pos_;
      skip();
      const std::size_t at = pos_;
      const std::string e = digits();
      if (e.empty()) fail({"unsigned integer"});
      if (e.size() > 7 || std::stoul(e) > kMaxParsedExponent) {
        pos_ = at;
        fail({"exponent <= " + std::to_string(kMaxParsedExponent)});
      }
      k = std::stoul(e);
    }
    add(k, coeff);
  }

  void add(unsigned long k, const BigInt& c) {
    terms_[k] += c;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  std::map<unsigned long, BigInt> terms_;
};

}  // namespace detail

/// Parses expr := term (('+'|'-') term)*, term := int ('*' var)? | var,
/// var := 'x' ('^' uint)?, with an optional leading '-'. Like terms combine.
inline IntPoly parse_poly(std::string_view text) { return detail::PolyParser(text).parse(); }

}  // namespace dynirr
