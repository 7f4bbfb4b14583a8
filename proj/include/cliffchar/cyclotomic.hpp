#ifndef CLIFFCHAR_CYCLOTOMIC_HPP
#define CLIFFCHAR_CYCLOTOMIC_HPP

#include "rational.hpp"

#include <boost/container/small_vector.hpp>

#include <cctype>
#include <cmath>
#include <complex>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cliffchar {

namespace detail {

/// Integer polynomial data for Q[x]/(Phi_e): the cyclotomic polynomial and,
/// for every exponent j < e, the reduction of x^j modulo Phi_e as a sparse
/// list of (basis index, integer coefficient).
struct CycloData {
  int conductor = 1;
  int degree = 1;
  std::vector<std::int64_t> poly;  // low to high, monic
  std::vector<std::vector<std::pair<int, std::int64_t>>> reduce;
};

inline std::vector<std::int64_t> poly_exact_div(std::vector<std::int64_t> num,
                                                const std::vector<std::int64_t>& den) {
  const int dn = int(den.size()) - 1;
  const int nn = int(num.size()) - 1;
  std::vector<std::int64_t> q(std::max(0, nn - dn + 1), 0);
  for (int i = nn; i >= dn; --i) {
    std::int64_t c = num[i];  // den is monic
    q[i - dn] = c;
    if (c == 0) continue;
    for (int j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  for (int i = 0; i < dn; ++i)
    if (num[i] != 0) throw Error("cyclotomic polynomial division left a remainder");
  return q;
}

inline const CycloData& cyclo_data(int e) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<CycloData>> cache;
  if (e < 1) throw Error("cyclotomic conductor must be >= 1, got " + std::to_string(e));
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(e); it != cache.end()) return *it->second;
  }
  // x^e - 1 divided by Phi_d for every proper divisor d.
  std::vector<std::int64_t> poly(e + 1, 0);
  poly[0] = -1;
  poly[e] = 1;
  for (int d = 1; d < e; ++d)
    if (e % d == 0) poly = poly_exact_div(poly, cyclo_data(d).poly);

  auto data = std::make_unique<CycloData>();
  data->conductor = e;
  data->degree = int(poly.size()) - 1;
  data->poly = poly;
  const int deg = data->degree;
  std::vector<std::int64_t> cur(deg, 0);  // x^j mod Phi_e, dense
  cur[0] = 1;
  data->reduce.resize(e);
  for (int j = 0; j < e; ++j) {
    for (int i = 0; i < deg; ++i)
      if (cur[i] != 0) data->reduce[j].emplace_back(i, cur[i]);
    // multiply by x and fold x^deg = -(poly[0] + ... + poly[deg-1] x^{deg-1})
    std::int64_t top = cur[deg - 1];
    for (int i = deg - 1; i > 0; --i) cur[i] = cur[i - 1] - top * poly[i];
    cur[0] = -top * poly[0];
  }

  std::lock_guard lock(mu);
  auto [it, inserted] = cache.emplace(e, std::move(data));
  return *it->second;
}

}  // namespace detail

/// Element of the cyclotomic field Q(zeta_e) in the power basis
/// 1, zeta, ..., zeta^{phi(e)-1} of Q[x]/(Phi_e).
///
/// Values are immutable. Arithmetic between different conductors lifts both
/// operands to the lcm. Equality is field equality (lifting when needed);
/// hashing is only consistent among elements of the same conductor.
class Cyclotomic {
public:
  using Coeffs = boost::container::small_vector<Rational, 4>;

  Cyclotomic() : conductor_(1), coeffs_(1) {}
  Cyclotomic(const Rational& q) : conductor_(1), coeffs_{q} {}  // NOLINT(implicit)
  Cyclotomic(std::int64_t v) : Cyclotomic(Rational(v)) {}       // NOLINT(implicit)
  Cyclotomic(int v) : Cyclotomic(Rational(v)) {}                // NOLINT(implicit)

  /// Reduces a coefficient list of any length (exponent k stands for
  /// zeta_e^k) into canonical form.
  static Cyclotomic make(int conductor, std::span<const Rational> coeffs) {
    if (conductor < 1) throw Error("cyclotomic conductor must be >= 1");
    const auto& data = detail::cyclo_data(conductor);
    std::vector<Rational> slots(conductor);
    for (std::size_t k = 0; k < coeffs.size(); ++k)
      if (!coeffs[k].is_zero()) slots[k % conductor] += coeffs[k];
    return from_slots(data, slots);
  }
  static Cyclotomic make(int conductor, std::initializer_list<Rational> coeffs) {
    return make(conductor, std::span<const Rational>(coeffs.begin(), coeffs.size()));
  }

  /// The rational q viewed in Q(zeta_e).
  static Cyclotomic rational(const Rational& q, int conductor) {
    const auto& data = detail::cyclo_data(conductor);
    Cyclotomic r;
    r.conductor_ = conductor;
    r.coeffs_.assign(data.degree, Rational());
    r.coeffs_[0] = q;
    return r;
  }

  /// zeta_e^k.
  static Cyclotomic zeta(int conductor, int k = 1) {
    const Rational one(1);
    std::vector<Rational> c(conductor);
    c[((k % conductor) + conductor) % conductor] = one;
    return make(conductor, c);
  }

  int conductor() const { return conductor_; }
  const Coeffs& coeffs() const { return coeffs_; }

  bool is_zero() const {
    for (const auto& c : coeffs_)
      if (!c.is_zero()) return false;
    return true;
  }
  bool is_rational() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
      if (!coeffs_[i].is_zero()) return false;
    return true;
  }
  bool is_rational_integer() const { return is_rational() && coeffs_[0].is_integer(); }
  /// The rational value; throws when the element is irrational.
  const Rational& rational_value() const {
    if (!is_rational()) throw Error("cyclotomic value " + str() + " is not rational");
    return coeffs_[0];
  }

  /// The same element expressed in Q(zeta_f); requires conductor | f.
  Cyclotomic lift(int f) const {
    if (f == conductor_) return *this;
    if (f < 1 || f % conductor_ != 0)
      throw Error("cannot lift conductor " + std::to_string(conductor_) + " to " + std::to_string(f));
    const auto& data = detail::cyclo_data(f);
    const int step = f / conductor_;
    std::vector<Rational> slots(f);
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
      if (!coeffs_[k].is_zero()) slots[k * step] = coeffs_[k];
    return from_slots(data, slots);
  }

  friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.conductor_ != b.conductor_) {
      int l = std::lcm(a.conductor_, b.conductor_);
      return a.lift(l) + b.lift(l);
    }
    Cyclotomic r = a;
    for (std::size_t i = 0; i < r.coeffs_.size(); ++i)
      if (!b.coeffs_[i].is_zero()) r.coeffs_[i] += b.coeffs_[i];
    return r;
  }
  Cyclotomic operator-() const {
    Cyclotomic r = *this;
    for (auto& c : r.coeffs_)
      if (!c.is_zero()) c = -c;
    return r;
  }
  friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) { return a + (-b); }

  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.conductor_ != b.conductor_) {
      if (a.conductor_ == 1) return b.scaled(a.coeffs_[0]);
      if (b.conductor_ == 1) return a.scaled(b.coeffs_[0]);
      int l = std::lcm(a.conductor_, b.conductor_);
      return a.lift(l) * b.lift(l);
    }
    const int e = a.conductor_;
    const auto& data = detail::cyclo_data(e);
    const int deg = data.degree;
    std::vector<Rational> slots(e);
    for (int i = 0; i < deg; ++i) {
      if (a.coeffs_[i].is_zero()) continue;
      for (int j = 0; j < deg; ++j) {
        if (b.coeffs_[j].is_zero()) continue;
        slots[(i + j) % e] += a.coeffs_[i] * b.coeffs_[j];
      }
    }
    return from_slots(data, slots);
  }
  friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) { return a * b.inv(); }
  Cyclotomic& operator+=(const Cyclotomic& b) { return *this = *this + b; }
  Cyclotomic& operator-=(const Cyclotomic& b) { return *this = *this - b; }
  Cyclotomic& operator*=(const Cyclotomic& b) { return *this = *this * b; }

  Cyclotomic scaled(const Rational& q) const {
    Cyclotomic r = *this;
    for (auto& c : r.coeffs_)
      if (!c.is_zero()) c *= q;
    return r;
  }

  /// Multiplicative inverse by the extended Euclidean algorithm against Phi_e.
  Cyclotomic inv() const {
    if (is_zero()) throw Error("cyclotomic inverse of zero (division by zero)");
    if (is_rational()) {
      Cyclotomic r = *this;
      r.coeffs_[0] = Rational(1) / coeffs_[0];
      return r;
    }
    const auto& data = detail::cyclo_data(conductor_);
    using Poly = std::vector<Rational>;
    auto trim = [](Poly& p) {
      while (p.size() > 1 && p.back().is_zero()) p.pop_back();
    };
    Poly r0(data.poly.begin(), data.poly.end());
    Poly r1(coeffs_.begin(), coeffs_.end());
    trim(r1);
    Poly s0{Rational(0)}, s1{Rational(1)};  // Bezout coefficients of a
    while (!(r1.size() == 1 && r1[0].is_zero())) {
      // r0 = q * r1 + rem
      Poly rem = r0;
      Poly q(rem.size() >= r1.size() ? rem.size() - r1.size() + 1 : 1, Rational());
      const Rational lead = r1.back();
      while (rem.size() >= r1.size() && !(rem.size() == 1 && rem[0].is_zero())) {
        std::size_t shift = rem.size() - r1.size();
        Rational c = rem.back() / lead;
        q[shift] = c;
        for (std::size_t i = 0; i < r1.size(); ++i) rem[shift + i] -= c * r1[i];
        rem.pop_back();
        if (rem.empty()) rem.push_back(Rational());
        trim(rem);
      }
      Poly qs(q.size() + s1.size() - 1, Rational());
      for (std::size_t i = 0; i < q.size(); ++i)
        for (std::size_t j = 0; j < s1.size(); ++j) qs[i + j] += q[i] * s1[j];
      Poly s2(std::max(s0.size(), qs.size()), Rational());
      for (std::size_t i = 0; i < s0.size(); ++i) s2[i] += s0[i];
      for (std::size_t i = 0; i < qs.size(); ++i) s2[i] -= qs[i];
      trim(s2);
      r0 = std::move(r1);
      r1 = std::move(rem);
      s0 = std::move(s1);
      s1 = std::move(s2);
    }
    // r0 is a nonzero constant since Phi_e is irreducible.
    if (r0.size() != 1) throw Error("cyclotomic inverse: gcd with Phi_e is not constant");
    Rational scale = Rational(1) / r0[0];
    for (auto& c : s0) c *= scale;
    return make(conductor_, s0);
  }

  /// Complex conjugation, the Galois automorphism zeta -> zeta^{-1}.
  Cyclotomic conj() const {
    if (conductor_ <= 2) return *this;
    const auto& data = detail::cyclo_data(conductor_);
    std::vector<Rational> slots(conductor_);
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
      if (!coeffs_[k].is_zero()) slots[(conductor_ - int(k)) % conductor_] = coeffs_[k];
    return from_slots(data, slots);
  }

  std::complex<double> to_complex() const {
    std::complex<double> sum = 0;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
      if (coeffs_[k].is_zero()) continue;
      double ang = 2.0 * std::numbers::pi * double(k) / double(conductor_);
      sum += coeffs_[k].to_double() * std::complex<double>(std::cos(ang), std::sin(ang));
    }
    return sum;
  }

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.conductor_ == b.conductor_) return a.coeffs_ == b.coeffs_;
    int l = std::lcm(a.conductor_, b.conductor_);
    return a.lift(l).coeffs_ == b.lift(l).coeffs_;
  }

  /// Lexicographic order on coefficient vectors (lifted to a common
  /// conductor), each coefficient compared by value. For rational values this
  /// is the numeric order.
  static std::strong_ordering value_compare(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.conductor_ != b.conductor_) {
      int l = std::lcm(a.conductor_, b.conductor_);
      return value_compare(a.lift(l), b.lift(l));
    }
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      if (auto c = a.coeffs_[i] <=> b.coeffs_[i]; c != 0) return c;
    return std::strong_ordering::equal;
  }

  /// Representation order used by phase canonicalization (same conductor).
  static std::strong_ordering repr_compare(const Cyclotomic& a, const Cyclotomic& b) {
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      if (auto c = Rational::repr_compare(a.coeffs_[i], b.coeffs_[i]); c != 0) return c;
    return std::strong_ordering::equal;
  }

  std::size_t hash() const {
    std::size_t h = std::size_t(conductor_) * 0x51ED27ULL;
    for (const auto& c : coeffs_) h = h * 1000003ULL ^ c.hash();
    return h;
  }

  /// "a + b*z8 + c*z8^2 + d*z8^3" with zero terms omitted; rationals print
  /// bare.
  std::string str() const {
    std::string out;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
      const Rational& c = coeffs_[k];
      if (c.is_zero()) continue;
      bool neg = c.sign() < 0;
      Rational mag = neg ? -c : c;
      std::string term;
      if (k == 0) {
        term = mag.str();
      } else {
        std::string z = "z" + std::to_string(conductor_);
        if (k > 1) z += "^" + std::to_string(k);
        term = (mag == Rational(1)) ? z : mag.str() + "*" + z;
      }
      if (out.empty()) {
        out = neg ? "-" + term : term;
      } else {
        out += neg ? " - " : " + ";
        out += term;
      }
    }
    return out.empty() ? "0" : out;
  }

  /// Inverse of str(). Rationals without any zeta term are placed in
  /// Q(zeta_default_conductor).
  static Cyclotomic parse(std::string_view text, int default_conductor = 1) {
    std::string s;
    for (char ch : text)
      if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) throw Error("empty cyclotomic literal");
    struct Term {
      Rational coeff;
      int conductor = 0;
      int power = 0;
    };
    std::vector<Term> terms;
    std::size_t pos = 0;
    while (pos < s.size()) {
      int sign = 1;
      while (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
        if (s[pos] == '-') sign = -sign;
        ++pos;
      }
      std::size_t end = pos;
      while (end < s.size() && !((s[end] == '+' || s[end] == '-') && end > pos &&
                                 s[end - 1] != '*' && s[end - 1] != '^' && s[end - 1] != '/'))
        ++end;
      std::string body = s.substr(pos, end - pos);
      if (body.empty()) throw Error("malformed cyclotomic literal '" + std::string(text) + "'");
      Term t;
      std::string coeff_text = body;
      std::string zeta_text;
      if (auto star = body.find('*'); star != std::string::npos) {
        coeff_text = body.substr(0, star);
        zeta_text = body.substr(star + 1);
      } else if (body[0] == 'z' || body[0] == 'Z') {
        coeff_text = "1";
        zeta_text = body;
      }
      t.coeff = Rational::parse(coeff_text);
      if (sign < 0) t.coeff = -t.coeff;
      if (!zeta_text.empty()) {
        if (zeta_text[0] != 'z' && zeta_text[0] != 'Z')
          throw Error("malformed zeta term '" + zeta_text + "'");
        auto caret = zeta_text.find('^');
        try {
          t.conductor = std::stoi(zeta_text.substr(1, caret == std::string::npos ? std::string::npos : caret - 1));
          t.power = caret == std::string::npos ? 1 : std::stoi(zeta_text.substr(caret + 1));
        } catch (const std::exception&) {
          throw Error("malformed zeta term '" + zeta_text + "'");
        }
        if (t.conductor < 1) throw Error("malformed zeta term '" + zeta_text + "'");
      }
      terms.push_back(t);
      pos = end;
    }
    int e = default_conductor;
    for (const auto& t : terms)
      if (t.conductor != 0) e = std::lcm(e, t.conductor);
    std::vector<Rational> slots(e);
    for (const auto& t : terms) {
      int k = t.conductor == 0 ? 0 : t.power * (e / t.conductor);
      slots[((k % e) + e) % e] += t.coeff;
    }
    return make(e, slots);
  }

  friend std::ostream& operator<<(std::ostream& os, const Cyclotomic& c) { return os << c.str(); }

private:
  int conductor_;
  Coeffs coeffs_;

  static Cyclotomic from_slots(const detail::CycloData& data, const std::vector<Rational>& slots) {
    Cyclotomic r;
    r.conductor_ = data.conductor;
    r.coeffs_.assign(data.degree, Rational());
    for (int j = 0; j < data.conductor; ++j) {
      if (slots[j].is_zero()) continue;
      for (const auto& [i, c] : data.reduce[j]) {
        if (c == 1)
          r.coeffs_[i] += slots[j];
        else if (c == -1)
          r.coeffs_[i] -= slots[j];
        else
          r.coeffs_[i] += slots[j] * Rational(c);
      }
    }
    return r;
  }
};

/// Degree of the e-th cyclotomic polynomial.
inline int euler_phi(int e) { return detail::cyclo_data(e).degree; }

}  // namespace cliffchar

template <>
struct std::hash<cliffchar::Cyclotomic> {
  std::size_t operator()(const cliffchar::Cyclotomic& c) const { return c.hash(); }
};

#endif  // CLIFFCHAR_CYCLOTOMIC_HPP
