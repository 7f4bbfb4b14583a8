#ifndef CLIFFCHAR_WORD_HPP
#define CLIFFCHAR_WORD_HPP

#include "rational.hpp"

#include <algorithm>
#include <cctype>
#include <string>
#include <string_view>
#include <vector>

namespace cliffchar {

/// One generator raised to an integer power, e.g. "p1^-1".
struct Letter {
  std::string name;
  int exponent = 1;
  friend bool operator==(const Letter&, const Letter&) = default;
};

/// Flat product of letters, read left to right.
using Word = std::vector<Letter>;

inline Word inverse(const Word& w) {
  Word r(w.rbegin(), w.rend());
  for (auto& l : r) l.exponent = -l.exponent;
  return r;
}

inline Word concat(Word a, const Word& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

inline std::string to_string(const Word& w) {
  std::string out;
  for (const auto& l : w) {
    if (!out.empty()) out += ' ';
    out += l.name;
    if (l.exponent != 1) out += "^" + std::to_string(l.exponent);
  }
  return out;
}

namespace detail {

class WordParser {
public:
  explicit WordParser(std::string_view text) : s_(text) {}

  Word parse() {
    Word w = sequence();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return w;
  }

private:
  std::string_view s_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw Error("word syntax error at offset " + std::to_string(pos_) + " in '" + std::string(s_) +
                "': " + what);
  }

  void skip_ws() {
    while (pos_ < s_.size() && (std::isspace(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '*'))
      ++pos_;
  }

  int exponent() {
    skip_ws();
    if (pos_ >= s_.size() || s_[pos_] != '^') return 1;
    ++pos_;
    skip_ws();
    std::size_t start = pos_;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    std::string digits(s_.substr(start, pos_ - start));
    if (digits.empty() || digits == "-" || digits == "+") fail("missing exponent");
    return std::stoi(digits);
  }

  static Word power(const Word& w, int e) {
    Word base = e < 0 ? inverse(w) : w;
    Word out;
    for (int i = 0; i < std::abs(e); ++i) out = concat(std::move(out), base);
    return out;
  }

  Word sequence() {
    Word out;
    for (;;) {
      skip_ws();
      if (pos_ >= s_.size() || s_[pos_] == ')') return out;
      if (s_[pos_] == '(') {
        ++pos_;
        Word inner = sequence();
        if (pos_ >= s_.size() || s_[pos_] != ')') fail("unbalanced '('");
        ++pos_;
        out = concat(std::move(out), power(inner, exponent()));
        continue;
      }
      if (!std::isalpha(static_cast<unsigned char>(s_[pos_]))) fail("expected a generator");
      std::string name;
      while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_])))
        name += char(std::tolower(static_cast<unsigned char>(s_[pos_++])));
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) name += s_[pos_++];
      int e = exponent();
      if (e != 0) out.push_back({name, e});
    }
  }
};

}  // namespace detail

/// Parses whitespace-separated letters such as "h1 p2^-1 ( z1 h2 h1 )^3".
/// Names are lower-cased; parenthesized groups are expanded.
inline Word parse_word(std::string_view text) { return detail::WordParser(text).parse(); }

}  // namespace cliffchar

#endif  // CLIFFCHAR_WORD_HPP
