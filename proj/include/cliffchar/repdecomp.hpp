#ifndef CLIFFCHAR_REPDECOMP_HPP
#define CLIFFCHAR_REPDECOMP_HPP

#include "character_table.hpp"
#include "classes.hpp"

#include <ostream>
#include <string>
#include <vector>

namespace cliffchar {

/// A function on classes, indexed like the columns of the table it is used
/// with.
struct ClassFunction {
  std::vector<Cyclotomic> values;

  int k() const { return int(values.size()); }
  const Cyclotomic& operator[](int c) const { return values[c]; }

  ClassFunction pow(int m) const {
    ClassFunction out{std::vector<Cyclotomic>(values.size(), Cyclotomic(1))};
    for (int i = 0; i < m; ++i)
      for (std::size_t c = 0; c < values.size(); ++c) out.values[c] *= values[c];
    return out;
  }
  friend bool operator==(const ClassFunction&, const ClassFunction&) = default;
};

struct DecompositionVector {
  int m = 1;
  std::vector<BigInt> v;

  /// sum_i v_i deg_i.
  BigInt dimension(const CharacterTable& t) const {
    BigInt d = 0;
    for (int i = 0; i < int(v.size()); ++i) d += v[i] * t.degree(i);
    return d;
  }
};

/// chi(g) = |tr U_g|^2, the character of U M U^{-1} on 2^n x 2^n matrices.
inline ClassFunction adjoint_character(const GroupTable& g, const ClassData& cd) {
  ClassFunction f;
  for (int c = 0; c < cd.k(); ++c) {
    Cyclotomic tr = g.element(cd.rep(c)).trace();
    Cyclotomic v = tr * tr.conj();
    if (!v.is_rational_integer()) throw Error("|tr|^2 is not an integer on class " + std::to_string(c + 1));
    f.values.push_back(Cyclotomic(v.rational_value()));
  }
  return f;
}

/// Pointwise sum of table rows (0-based).
inline ClassFunction adjoint_character_from_table(const CharacterTable& t, const std::vector<int>& rows) {
  ClassFunction f{std::vector<Cyclotomic>(t.k(), Cyclotomic(0))};
  for (int r : rows) {
    if (r < 0 || r >= t.k()) throw Error("row " + std::to_string(r + 1) + " is out of range");
    for (int c = 0; c < t.k(); ++c) f.values[c] += t.at(r, c);
  }
  return f;
}

/// Multiplicities <chi, chi_i> = |G|^{-1} sum_C |C| chi(C) conj(chi_i(C)).
/// Throws when some multiplicity is not a nonnegative integer.
inline DecompositionVector decompose(const ClassFunction& chi, const CharacterTable& t, int m = 1) {
  if (chi.k() != t.k()) throw Error("class function and character table have different class counts");
  DecompositionVector out;
  out.m = m;
  bool integral = integer_valued(t);
  for (const auto& v : chi.values) integral = integral && v.is_rational_integer();
  for (int i = 0; i < t.k(); ++i) {
    mpq_class mult;
    if (integral) {
      BigInt s = 0;
      for (int c = 0; c < t.k(); ++c)
        s += t.class_sizes[c] * chi[c].rational_value().num() * t.at(i, c).rational_value().num();
      mult = mpq_class(s, t.group_order);
      mult.canonicalize();
    } else {
      Cyclotomic s;
      for (int c = 0; c < t.k(); ++c) s += (chi[c] * t.at(i, c).conj()).scaled(Rational(t.class_sizes[c]));
      if (!s.is_rational())
        throw Error("inner product with row " + std::to_string(i + 1) + " is irrational: " + s.str());
      mult = s.rational_value().to_mpq() / t.group_order;
    }
    if (mult.get_den() != 1 || mult < 0)
      throw Error("multiplicity of row " + std::to_string(i + 1) + " is " + mult.get_str() +
                  ", not a nonnegative integer; inputs are inconsistent");
    out.v.push_back(mult.get_num());
  }
  return out;
}

inline DecompositionVector decompose_power(const ClassFunction& chi, int m, const CharacterTable& t) {
  if (m < 1) throw Error("tensor power must be >= 1");
  return decompose(chi.pow(m), t, m);
}

/// sum_i v_i chi_i.
inline ClassFunction reconstruct(const DecompositionVector& d, const CharacterTable& t) {
  ClassFunction f{std::vector<Cyclotomic>(t.k(), Cyclotomic(0))};
  for (int i = 0; i < t.k(); ++i) {
    if (d.v[i] == 0) continue;
    for (int c = 0; c < t.k(); ++c) f.values[c] += t.at(i, c).scaled(Rational(d.v[i]));
  }
  return f;
}

/// One step of the single-qubit recursion
/// v_{m+1} = (a+d, 2b+c+d+e, b+c+d, a+b+c+2d, b+e).
inline std::vector<BigInt> c1_recursion_step(const std::vector<BigInt>& v) {
  if (v.size() != 5) throw Error("single-qubit decomposition vectors have 5 entries");
  const auto &a = v[0], &b = v[1], &c = v[2], &d = v[3], &e = v[4];
  return {a + d, 2 * b + c + d + e, b + c + d, a + b + c + 2 * d, b + e};
}

inline bool c1_recursion_check(const std::vector<BigInt>& vm, const std::vector<BigInt>& vnext) {
  return c1_recursion_step(vm) == vnext;
}

/// True iff chi attains chi(1) only on the identity class (index 0).
inline bool faithfulness_check(const ClassFunction& chi) {
  for (int c = 1; c < chi.k(); ++c)
    if (chi[c] == chi[0]) return false;
  return true;
}

/// "v_2 = 2*chi_1 + chi_6 + ..." with the given row labels.
inline std::string decomposition_text(const DecompositionVector& d, const std::vector<std::string>& labels = {}) {
  std::string out = "v_" + std::to_string(d.m) + " =";
  bool first = true;
  for (std::size_t i = 0; i < d.v.size(); ++i) {
    if (d.v[i] == 0) continue;
    out += first ? " " : " + ";
    first = false;
    if (d.v[i] != 1) out += d.v[i].get_str() + "*";
    out += i < labels.size() ? labels[i] : "chi_" + std::to_string(i + 1);
  }
  if (first) out += " 0";
  return out;
}

/// Rows "m,row,multiplicity" (row 1-based), one per irreducible.
inline void write_decomposition_csv(std::ostream& os, const std::vector<DecompositionVector>& ds,
                                    bool header = true) {
  if (header) os << "m,row,multiplicity\n";
  for (const auto& d : ds)
    for (std::size_t i = 0; i < d.v.size(); ++i) os << d.m << ',' << i + 1 << ',' << d.v[i].get_str() << '\n';
}

}  // namespace cliffchar

#endif  // CLIFFCHAR_REPDECOMP_HPP
