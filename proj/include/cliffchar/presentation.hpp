#ifndef CLIFFCHAR_PRESENTATION_HPP
#define CLIFFCHAR_PRESENTATION_HPP

#include "phase_matrix.hpp"
#include "word.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace cliffchar {

/// One defining relation, kept in the shape it is written in so that it can
/// be rendered back faithfully. word() gives the relator proper.
struct Relator {
  enum class Kind { Power, Commutator, Equality };

  std::string rule;   // "R1" .. "R11", "B1" .. "B3"
  std::string label;  // rule plus quantifier values, e.g. "R8 j=1"
  Kind kind = Kind::Power;
  Word lhs;           // power base, first commutator entry, or left side
  Word rhs;           // second commutator entry or right side
  int exponent = 1;   // Power only

  Word word() const {
    switch (kind) {
      case Kind::Power: {
        Word w;
        for (int i = 0; i < exponent; ++i) w = concat(std::move(w), lhs);
        return w;
      }
      case Kind::Commutator:
        return concat(concat(inverse(lhs), inverse(rhs)), concat(lhs, rhs));
      case Kind::Equality:
        return concat(lhs, inverse(rhs));
    }
    return {};
  }

  /// Text in the word syntax: "(h1 p1)^3", "z1 h1 (p1 h1)^-1", ...
  std::string text() const {
    auto group = [](const Word& w) {
      if (w.size() == 1) return to_string(w);
      return "(" + to_string(w) + ")";
    };
    switch (kind) {
      case Kind::Power:
        if (exponent == 1) return to_string(lhs);
        if (lhs.size() == 1 && lhs[0].exponent == 1) return lhs[0].name + "^" + std::to_string(exponent);
        return "(" + to_string(lhs) + ")^" + std::to_string(exponent);
      case Kind::Commutator:
        return to_string(word());
      case Kind::Equality:
        return to_string(lhs) + " " + group(rhs) + "^-1";
    }
    return {};
  }
};

struct Presentation {
  int n = 0;
  std::vector<std::string> generator_names;
  std::vector<Relator> relators;

  std::size_t count(const std::string& rule) const {
    return std::size_t(std::count_if(relators.begin(), relators.end(), [&](const Relator& r) { return r.rule == rule; }));
  }
};

namespace detail {

inline Letter gen(char kind, int i, int e = 1) { return {std::string(1, kind) + std::to_string(i), e}; }

}  // namespace detail

/// Generators h1..hn, p1..pn, z1..z(n-1) and the relations R1-R11, plus
/// B1-B3 when n >= 3. Symmetric families (R5) use unordered pairs i < j.
inline Presentation build_presentation(int n) {
  if (n < 1) throw Error("presentation needs n >= 1");
  using detail::gen;
  using K = Relator::Kind;
  Presentation p;
  p.n = n;
  for (int i = 1; i <= n; ++i) p.generator_names.push_back("h" + std::to_string(i));
  for (int i = 1; i <= n; ++i) p.generator_names.push_back("p" + std::to_string(i));
  for (int j = 1; j < n; ++j) p.generator_names.push_back("z" + std::to_string(j));

  auto add = [&](std::string rule, std::string q, K kind, Word lhs, Word rhs = {}, int e = 1) {
    std::string label = q.empty() ? rule : rule + " " + q;
    p.relators.push_back({std::move(rule), std::move(label), kind, std::move(lhs), std::move(rhs), e});
  };
  auto si = [](int i) { return "i=" + std::to_string(i); };
  auto sj = [](int j) { return "j=" + std::to_string(j); };

  for (int j = 1; j < n; ++j) add("R1", "Z" + std::to_string(j), K::Power, {gen('z', j)}, {}, 2);
  for (int i = 1; i <= n; ++i) add("R1", "H" + std::to_string(i), K::Power, {gen('h', i)}, {}, 2);
  for (int i = 1; i <= n; ++i) add("R1", "P" + std::to_string(i), K::Power, {gen('p', i)}, {}, 4);
  for (int i = 1; i <= n; ++i) add("R2", si(i), K::Power, {gen('h', i), gen('p', i)}, {}, 3);
  for (int i = 1; i <= n; ++i)
    add("R3", si(i), K::Power, {gen('h', i), gen('p', i), gen('h', i), gen('p', i, 3)}, {}, 3);
  for (int i = 1; i <= n; ++i)
    add("R4", si(i), K::Power, {gen('h', i), gen('p', i, 2), gen('h', i), gen('p', i, 2)}, {}, 2);
  for (char c : {'h', 'p', 'z'}) {
    int top = c == 'z' ? n - 1 : n;
    for (int i = 1; i <= top; ++i)
      for (int j = i + 1; j <= top; ++j)
        add("R5", std::string(1, c) + " i=" + std::to_string(i) + " j=" + std::to_string(j), K::Commutator,
            {gen(c, i)}, {gen(c, j)});
  }
  for (int j = 1; j < n; ++j)
    for (int i = 1; i <= n; ++i) add("R6", sj(j) + " " + si(i), K::Commutator, {gen('z', j)}, {gen('p', i)});
  for (int j = 1; j < n; ++j)
    for (int i = 1; i <= n; ++i)
      if (i != j && i != j + 1) add("R7", sj(j) + " " + si(i), K::Commutator, {gen('z', j)}, {gen('h', i)});
  for (int j = 1; j < n; ++j)
    add("R8", sj(j), K::Equality, {gen('z', j), gen('h', j), gen('p', j, 2), gen('h', j)},
        {gen('h', j), gen('p', j, 2), gen('p', j + 1, 2), gen('h', j), gen('z', j)});
  for (int j = 1; j < n; ++j)
    add("R9", sj(j), K::Equality, {gen('z', j), gen('h', j + 1), gen('p', j + 1, 2), gen('h', j + 1)},
        {gen('h', j + 1), gen('p', j, 2), gen('p', j + 1, 2), gen('h', j + 1), gen('z', j)});
  for (int j = 1; j < n; ++j)
    add("R10", sj(j), K::Equality, {gen('z', j), gen('h', j), gen('z', j)},
        {gen('p', j), gen('h', j), gen('p', j), gen('p', j + 1), gen('z', j), gen('h', j), gen('p', j)});
  for (int j = 1; j < n; ++j)
    add("R11", sj(j), K::Equality, {gen('z', j), gen('h', j + 1), gen('z', j)},
        {gen('p', j + 1), gen('h', j + 1), gen('p', j), gen('p', j + 1), gen('z', j), gen('h', j + 1),
         gen('p', j + 1)});
  for (int j = 1; j + 2 <= n; ++j) {
    auto zj = gen('z', j), zk = gen('z', j + 1);
    auto a = gen('h', j), b = gen('h', j + 1), c = gen('h', j + 2);
    add("B1", sj(j), K::Equality, {zj, a, b, zj, b, c, zk, b, c, zj, a, b, zj},
        {zk, b, c, zk, a, b, zj, a, b, zk, b, c, zk});
  }
  for (int j = 1; j + 2 <= n; ++j) {
    auto zj = gen('z', j), zk = gen('z', j + 1), a = gen('h', j), b = gen('h', j + 1);
    add("B2", sj(j), K::Power, {zk, a, b, zj, a, b, zj}, {}, 3);
  }
  for (int j = 1; j + 2 <= n; ++j) {
    auto zj = gen('z', j), zk = gen('z', j + 1), b = gen('h', j + 1), c = gen('h', j + 2);
    add("B3", sj(j), K::Power, {zj, b, c, zk, b, c, zk}, {}, 3);
  }
  return p;
}

struct RelatorCheck {
  std::string label;
  std::string text;
  bool passed = false;
};

struct RelatorReport {
  int n = 0;
  std::vector<RelatorCheck> checks;
  bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const RelatorCheck& c) { return c.passed; });
  }
  std::size_t failures() const {
    return std::size_t(std::count_if(checks.begin(), checks.end(), [](const RelatorCheck& c) { return !c.passed; }));
  }
};

/// Evaluates every relator on the Clifford matrices; each must be the
/// identity modulo phase.
inline RelatorReport verify_relators(const Presentation& p) {
  std::map<std::string, PhaseMatrix> mats;
  for (const auto& name : p.generator_names) mats.emplace(name, generator_matrix(name, p.n));
  auto eval = [&](const Word& w) {
    PhaseMatrix out = PhaseMatrix::identity(p.n);
    for (const auto& l : w) out = out * mats.at(l.name).pow(l.exponent);
    return out;
  };
  RelatorReport rep;
  rep.n = p.n;
  for (const auto& r : p.relators) {
    bool ok;
    if (r.kind == Relator::Kind::Equality)
      ok = eval(r.lhs) == eval(r.rhs);
    else
      ok = eval(r.word()).is_identity();
    rep.checks.push_back({r.label, r.text(), ok});
  }
  return rep;
}

inline RelatorReport verify_relators(int n) { return verify_relators(build_presentation(n)); }

// ---------------------------------------------------------------------------
// Smith normal form

using IntMatrix = std::vector<std::vector<BigInt>>;

inline IntMatrix identity_matrix(std::size_t n) {
  IntMatrix m(n, std::vector<BigInt>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

inline IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  if (a.empty() || b.empty()) return {};
  if (a[0].size() != b.size()) throw Error("matrix dimension mismatch");
  IntMatrix c(a.size(), std::vector<BigInt>(b[0].size(), 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < b[0].size(); ++j) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

/// Fraction-free (Bareiss) determinant.
inline BigInt integer_determinant(IntMatrix a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t sel = k + 1;
      while (sel < n && a[sel][k] == 0) ++sel;
      if (sel == n) return 0;
      std::swap(a[k], a[sel]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

struct SmithForm {
  IntMatrix U, D, V;  // U * A * V = D
  std::vector<BigInt> diagonal;
};

/// D = U A V with U, V unimodular and d_1 | d_2 | ... on the diagonal.
/// Pivots are chosen by minimal absolute value.
inline SmithForm smith_normal_form(const IntMatrix& A) {
  const std::size_t m = A.size();
  const std::size_t c = m ? A[0].size() : 0;
  SmithForm s{identity_matrix(m), A, identity_matrix(c), {}};
  IntMatrix& D = s.D;
  auto row_axpy = [&](std::size_t dst, std::size_t src, const BigInt& q) {  // row dst -= q * row src
    for (std::size_t j = 0; j < c; ++j) D[dst][j] -= q * D[src][j];
    for (std::size_t j = 0; j < m; ++j) s.U[dst][j] -= q * s.U[src][j];
  };
  auto col_axpy = [&](std::size_t dst, std::size_t src, const BigInt& q) {  // col dst -= q * col src
    for (std::size_t i = 0; i < m; ++i) D[i][dst] -= q * D[i][src];
    for (std::size_t i = 0; i < c; ++i) s.V[i][dst] -= q * s.V[i][src];
  };
  auto swap_rows = [&](std::size_t a, std::size_t b) {
    std::swap(D[a], D[b]);
    std::swap(s.U[a], s.U[b]);
  };
  auto swap_cols = [&](std::size_t a, std::size_t b) {
    for (auto& row : D) std::swap(row[a], row[b]);
    for (auto& row : s.V) std::swap(row[a], row[b]);
  };

  bool exhausted = false;
  for (std::size_t t = 0; t < std::min(m, c) && !exhausted; ++t) {
    for (;;) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      std::size_t pi = m, pj = c;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < c; ++j)
          if (D[i][j] != 0 && (pi == m || abs(D[i][j]) < abs(D[pi][pj]))) pi = i, pj = j;
      if (pi == m) {
        exhausted = true;
        break;
      }
      swap_rows(t, pi);
      swap_cols(t, pj);
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i)
        if (D[i][t] != 0) {
          BigInt q = D[i][t] / D[t][t];
          row_axpy(i, t, q);
          if (D[i][t] != 0) clean = false;
        }
      for (std::size_t j = t + 1; j < c; ++j)
        if (D[t][j] != 0) {
          BigInt q = D[t][j] / D[t][t];
          col_axpy(j, t, q);
          if (D[t][j] != 0) clean = false;
        }
      if (!clean) continue;
      // Divisibility: fold an offending row into the pivot row and retry.
      std::size_t bad = m;
      for (std::size_t i = t + 1; i < m && bad == m; ++i)
        for (std::size_t j = t + 1; j < c; ++j)
          if (D[i][j] % D[t][t] != 0) {
            bad = i;
            break;
          }
      if (bad != m) {
        row_axpy(t, bad, -1);
        continue;
      }
      if (D[t][t] < 0) {
        for (std::size_t j = 0; j < c; ++j) D[t][j] = -D[t][j];
        for (std::size_t j = 0; j < m; ++j) s.U[t][j] = -s.U[t][j];
      }
      break;
    }
  }
  for (std::size_t k = 0; k < std::min(m, c); ++k) s.diagonal.push_back(D[k][k]);
  return s;
}

struct AbelianInvariants {
  std::vector<BigInt> invariant_factors;  // entries > 1, d_1 | d_2 | ...
  int free_rank = 0;

  BigInt torsion_order() const {
    BigInt o = 1;
    for (const auto& d : invariant_factors) o *= d;
    return o;
  }
  std::string str() const {
    if (invariant_factors.empty() && free_rank == 0) return "trivial";
    std::string out;
    for (const auto& d : invariant_factors) out += (out.empty() ? "Z/" : " x Z/") + d.get_str();
    for (int i = 0; i < free_rank; ++i) out += out.empty() ? "Z" : " x Z";
    return out;
  }
};

/// Exponent-sum vectors of the relators, one row per relator instance.
inline IntMatrix relation_matrix(const Presentation& p) {
  std::map<std::string, std::size_t> col;
  for (std::size_t i = 0; i < p.generator_names.size(); ++i) col[p.generator_names[i]] = i;
  IntMatrix a;
  for (const auto& r : p.relators) {
    std::vector<BigInt> row(p.generator_names.size(), 0);
    for (const auto& l : r.word()) {
      auto it = col.find(l.name);
      if (it == col.end()) throw Error("relator " + r.label + " uses undeclared generator " + l.name);
      row[it->second] += l.exponent;
    }
    a.push_back(std::move(row));
  }
  return a;
}

inline AbelianInvariants abelian_invariants(const SmithForm& s, std::size_t columns) {
  AbelianInvariants inv;
  std::size_t nonzero = 0;
  for (const auto& d : s.diagonal)
    if (d != 0) {
      ++nonzero;
      if (d != 1) inv.invariant_factors.push_back(d);
    }
  inv.free_rank = int(columns - nonzero);
  return inv;
}

inline AbelianInvariants abelianization(const Presentation& p) {
  auto a = relation_matrix(p);
  return abelian_invariants(smith_normal_form(a), p.generator_names.size());
}

inline AbelianInvariants abelianization(int n) { return abelianization(build_presentation(n)); }

/// The assignment -1 on every generator, checked against every relator
/// (a relator with odd exponent sum is violated).
inline std::map<std::string, int> sgn_character(const Presentation& p) {
  for (const auto& r : p.relators) {
    long sum = 0;
    for (const auto& l : r.word()) sum += l.exponent;
    if (sum % 2 != 0)
      throw Error("no sign character for n=" + std::to_string(p.n) + ": relator " + r.label +
                  " has odd exponent sum " + std::to_string(sum) +
                  ", so -1 on every generator is not a homomorphism (the group is perfect for n >= 3)");
  }
  std::map<std::string, int> out;
  for (const auto& g : p.generator_names) out[g] = -1;
  return out;
}

inline std::map<std::string, int> sgn_character(int n) { return sgn_character(build_presentation(n)); }

// ---------------------------------------------------------------------------
// Text formats

/// One relator per line in the word syntax, grouped under "# <rule>" lines.
inline void write_presentation(std::ostream& os, const Presentation& p) {
  os << "# n=" << p.n << " generators:";
  for (const auto& g : p.generator_names) os << ' ' << g;
  os << '\n';
  std::string last;
  for (const auto& r : p.relators) {
    if (r.rule != last) os << "# " << r.rule << '\n';
    last = r.rule;
    os << r.text() << '\n';
  }
}

/// Reads the format above back into relator words (comments skipped).
inline std::vector<std::pair<std::string, Word>> read_presentation(std::istream& in) {
  std::vector<std::pair<std::string, Word>> out;
  std::string line, rule;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::string r = line.substr(1);
      r.erase(0, r.find_first_not_of(' '));
      if (!r.empty() && (r[0] == 'R' || r[0] == 'B')) rule = r;
      continue;
    }
    out.emplace_back(rule, parse_word(line));
  }
  return out;
}

namespace detail {

inline std::string gap_word(const Word& w, const std::map<std::string, std::string>& names) {
  std::string out;
  for (const auto& l : w) {
    if (!out.empty()) out += '*';
    out += names.at(l.name);
    if (l.exponent != 1) out += "^" + std::to_string(l.exponent);
  }
  return out;
}

}  // namespace detail

/// GAP input defining the finitely presented group. For n=2 the lone CZ
/// generator is called "z".
inline std::string gap_fragment(const Presentation& p) {
  std::map<std::string, std::string> names;
  for (const auto& g : p.generator_names) names[g] = g;
  if (p.n == 2) names["z1"] = "z";
  std::vector<std::string> order;
  for (const auto& g : p.generator_names) order.push_back(g);

  std::ostringstream os;
  os << "gap>f:=FreeGroup(";
  for (std::size_t i = 0; i < order.size(); ++i) os << (i ? "," : "") << '"' << names[order[i]] << '"';
  os << ");;\n";
  os << "gap>AssignGeneratorVariables(f);;\n";
  os << "gap>rels:=[ ";
  std::string last;
  for (std::size_t k = 0; k < p.relators.size(); ++k) {
    const auto& r = p.relators[k];
    if (k && r.rule != last) os << '\n';
    last = r.rule;
    switch (r.kind) {
      case Relator::Kind::Power:
        if (r.lhs.size() == 1)
          os << detail::gap_word(r.lhs, names) << '^' << r.exponent;
        else
          os << '(' << detail::gap_word(r.lhs, names) << ")^" << r.exponent;
        break;
      case Relator::Kind::Commutator:
        os << "Comm(" << detail::gap_word(r.lhs, names) << ',' << detail::gap_word(r.rhs, names) << ')';
        break;
      case Relator::Kind::Equality:
        os << detail::gap_word(r.lhs, names) << "/(" << detail::gap_word(r.rhs, names) << ')';
        break;
    }
    os << (k + 1 < p.relators.size() ? "," : "];;\n");
  }
  os << "gap>g:=f/rels;;\n";
  os << "gap>AssignGeneratorVariables(g);;\n";
  os << "gap>IsomorphismPermGroup(g);\n";
  return os.str();
}

}  // namespace cliffchar

#endif  // CLIFFCHAR_PRESENTATION_HPP
