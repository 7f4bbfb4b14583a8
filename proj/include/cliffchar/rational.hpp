#ifndef CLIFFCHAR_RATIONAL_HPP
#define CLIFFCHAR_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace cliffchar {

/// Error raised by every module of the library for contract violations and
/// inconsistent data.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

using BigInt = mpz_class;

inline std::string to_string(const BigInt& v) { return v.get_str(); }

namespace detail {

using i128 = __int128;
using u128 = unsigned __int128;

inline u128 uabs128(i128 v) { return v < 0 ? u128(0) - u128(v) : u128(v); }

inline std::uint64_t gcd64(std::uint64_t a, std::uint64_t b) {
  if (a == 0) return b;
  if (b == 0) return a;
  int shift = __builtin_ctzll(a | b);
  a >>= __builtin_ctzll(a);
  do {
    b >>= __builtin_ctzll(b);
    if (a > b) std::swap(a, b);
    b -= a;
  } while (b != 0);
  return a << shift;
}

inline u128 gcd128(u128 a, u128 b) {
  while ((a >> 64) != 0 || (b >> 64) != 0) {
    if (b == 0) return a;
    u128 r = a % b;
    a = b;
    b = r;
  }
  return gcd64(std::uint64_t(a), std::uint64_t(b));
}

inline bool fits_i64(i128 v) { return v >= INT64_MIN && v <= INT64_MAX; }

inline BigInt big_from_i128(i128 v) {
  bool neg = v < 0;
  u128 u = uabs128(v);
  BigInt hi(static_cast<unsigned long>(std::uint64_t(u >> 64)));
  BigInt lo(static_cast<unsigned long>(std::uint64_t(u)));
  BigInt r = (hi << 64) + lo;
  return neg ? BigInt(-r) : r;
}

inline BigInt big_from_i64(std::int64_t v) {
  return big_from_i128(v);
}

inline bool big_fits_i64(const BigInt& v) {
  static const BigInt lo = big_from_i64(INT64_MIN);
  static const BigInt hi = big_from_i64(INT64_MAX);
  return v >= lo && v <= hi;
}

inline std::int64_t big_to_i64(const BigInt& v) {
  // Caller guarantees the value fits.
  BigInt a = abs(v);
  std::uint64_t words[2] = {0, 0};
  size_t count = 0;
  mpz_export(words, &count, -1, sizeof(std::uint64_t), 0, 0, a.get_mpz_t());
  return v < 0 ? std::int64_t(0 - words[0]) : std::int64_t(words[0]);
}

}  // namespace detail

/// Exact rational number in lowest terms with a positive denominator.
///
/// Values whose numerator and denominator fit in 64 bits are stored inline;
/// anything larger is promoted to a GMP rational. The representation is
/// canonical: a value that fits is never stored in the big form, so equality
/// and hashing can compare representations directly.
class Rational {
public:
  Rational() = default;
  Rational(std::int64_t v) : num_(v), den_(1) {}  // NOLINT(implicit)
  Rational(int v) : num_(v), den_(1) {}           // NOLINT(implicit)
  Rational(std::int64_t num, std::int64_t den) { assign(detail::i128(num), detail::i128(den)); }
  explicit Rational(const BigInt& v) { assign_big(mpq_class(v)); }
  explicit Rational(const mpq_class& v) { assign_big(v); }

  Rational(const Rational& o) : num_(o.num_), den_(o.den_) {
    if (o.is_big()) num_ = reinterpret_cast<std::intptr_t>(new mpq_class(*o.big()));
  }
  Rational(Rational&& o) noexcept : num_(o.num_), den_(o.den_) {
    o.num_ = 0;
    o.den_ = 1;
  }
  Rational& operator=(const Rational& o) {
    if (this != &o) {
      Rational tmp(o);
      swap(tmp);
    }
    return *this;
  }
  Rational& operator=(Rational&& o) noexcept {
    swap(o);
    return *this;
  }
  ~Rational() {
    if (is_big()) delete big();
  }

  void swap(Rational& o) noexcept {
    std::swap(num_, o.num_);
    std::swap(den_, o.den_);
  }

  bool is_zero() const { return den_ == 1 && num_ == 0; }
  bool is_integer() const { return is_big() ? big()->get_den() == 1 : den_ == 1; }
  int sign() const {
    if (is_big()) return sgn(*big());
    return (num_ > 0) - (num_ < 0);
  }

  BigInt num() const { return is_big() ? BigInt(big()->get_num()) : detail::big_from_i64(num_); }
  BigInt den() const { return is_big() ? BigInt(big()->get_den()) : detail::big_from_i64(den_); }
  mpq_class to_mpq() const {
    if (is_big()) return *big();
    mpq_class q(detail::big_from_i64(num_), detail::big_from_i64(den_));
    return q;
  }
  double to_double() const { return is_big() ? big()->get_d() : double(num_) / double(den_); }

  /// Inline numerator/denominator when the value is small.
  bool is_small() const { return !is_big(); }
  std::int64_t small_num() const { return num_; }
  std::int64_t small_den() const { return den_; }

  Rational operator-() const {
    if (is_big()) return Rational(mpq_class(-*big()));
    if (num_ == INT64_MIN) return Rational(mpq_class(-to_mpq()));
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    if (a.is_small() && b.is_small()) {
      if (a.den_ == b.den_) {
        Rational r;
        r.assign(detail::i128(a.num_) + b.num_, a.den_);
        return r;
      }
      detail::i128 n = detail::i128(a.num_) * b.den_ + detail::i128(b.num_) * a.den_;
      detail::i128 d = detail::i128(a.den_) * b.den_;
      Rational r;
      r.assign(n, d);
      return r;
    }
    return Rational(mpq_class(a.to_mpq() + b.to_mpq()));
  }
  friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
  friend Rational operator*(const Rational& a, const Rational& b) {
    if (a.is_small() && b.is_small()) {
      if (a.num_ == 0 || b.num_ == 0) return Rational();
      if (a.den_ == 1 && b.den_ == 1) {
        Rational r;
        r.assign_reduced(detail::i128(a.num_) * b.num_, 1);
        return r;
      }
      Rational r;
      r.assign(detail::i128(a.num_) * b.num_, detail::i128(a.den_) * b.den_);
      return r;
    }
    return Rational(mpq_class(a.to_mpq() * b.to_mpq()));
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw Error("rational division by zero");
    if (a.is_small() && b.is_small()) {
      Rational r;
      r.assign(detail::i128(a.num_) * b.den_, detail::i128(a.den_) * b.num_);
      return r;
    }
    return Rational(mpq_class(a.to_mpq() / b.to_mpq()));
  }
  Rational& operator+=(const Rational& b) { return *this = *this + b; }
  Rational& operator-=(const Rational& b) { return *this = *this - b; }
  Rational& operator*=(const Rational& b) { return *this = *this * b; }
  Rational& operator/=(const Rational& b) { return *this = *this / b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    if (a.is_small() && b.is_small()) return a.num_ == b.num_ && a.den_ == b.den_;
    if (a.is_small() != b.is_small()) return false;
    return *a.big() == *b.big();
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (a.is_small() && b.is_small()) {
      detail::i128 l = detail::i128(a.num_) * b.den_;
      detail::i128 r = detail::i128(b.num_) * a.den_;
      return l <=> r;
    }
    int c = cmp(a.to_mpq(), b.to_mpq());
    return c <=> 0;
  }

  /// Representation order: numerator first, then denominator. Used for
  /// canonical forms, where only totality and determinism matter.
  static std::strong_ordering repr_compare(const Rational& a, const Rational& b) {
    if (a.is_small() && b.is_small()) {
      if (auto c = a.num_ <=> b.num_; c != 0) return c;
      return a.den_ <=> b.den_;
    }
    if (int c = cmp(a.num(), b.num()); c != 0) return c <=> 0;
    return cmp(a.den(), b.den()) <=> 0;
  }

  std::size_t hash() const {
    if (is_small()) {
      std::uint64_t h = std::uint64_t(num_) * 0x9E3779B97F4A7C15ULL;
      h ^= std::uint64_t(den_) + 0x7F4A7C159E3779B9ULL + (h << 6) + (h >> 2);
      return std::size_t(h);
    }
    return std::hash<std::string>{}(big()->get_str());
  }

  std::string str() const {
    if (is_big()) return big()->get_str();
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  /// Parses "p" or "p/q" with optional sign.
  static Rational parse(std::string_view text) {
    std::string s(text);
    mpq_class q;
    if (s.empty() || q.set_str(s, 10) != 0) throw Error("malformed rational '" + s + "'");
    if (q.get_den() == 0) throw Error("zero denominator in '" + s + "'");
    q.canonicalize();
    return Rational(q);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
  // den_ == 0 marks the big form; num_ then holds an owning mpq_class*.
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;

  bool is_big() const { return den_ == 0; }
  const mpq_class* big() const { return reinterpret_cast<const mpq_class*>(num_); }

  void assign(detail::i128 n, detail::i128 d) {
    if (d == 0) throw Error("rational with zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    if (n == 0) {
      assign_reduced(0, 1);
      return;
    }
    detail::u128 g = detail::gcd128(detail::uabs128(n), detail::u128(d));
    if (g > 1) {
      n /= detail::i128(g);
      d /= detail::i128(g);
    }
    assign_reduced(n, d);
  }

  void assign_reduced(detail::i128 n, detail::i128 d) {
    if (detail::fits_i64(n) && detail::fits_i64(d)) {
      num_ = std::int64_t(n);
      den_ = std::int64_t(d);
      return;
    }
    num_ = reinterpret_cast<std::intptr_t>(
        new mpq_class(detail::big_from_i128(n), detail::big_from_i128(d)));
    den_ = 0;
  }

  void assign_big(mpq_class q) {
    q.canonicalize();
    if (detail::big_fits_i64(q.get_num()) && detail::big_fits_i64(q.get_den())) {
      num_ = detail::big_to_i64(q.get_num());
      den_ = detail::big_to_i64(q.get_den());
      return;
    }
    num_ = reinterpret_cast<std::intptr_t>(new mpq_class(std::move(q)));
    den_ = 0;
  }
};

}  // namespace cliffchar

template <>
struct std::hash<cliffchar::Rational> {
  std::size_t operator()(const cliffchar::Rational& r) const { return r.hash(); }
};

#endif  // CLIFFCHAR_RATIONAL_HPP
