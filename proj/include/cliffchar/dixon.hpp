#ifndef CLIFFCHAR_DIXON_HPP
#define CLIFFCHAR_DIXON_HPP

#include "character_table.hpp"
#include "classes.hpp"
#include "modp.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace cliffchar {

/// Smallest prime p = 1 mod e with p^2 > 4|G| and p > after.
inline std::uint64_t dixon_prime(int exponent, const BigInt& group_order, std::uint64_t after = 0) {
  BigInt bound = 4 * group_order;
  std::uint64_t p = std::uint64_t(exponent) + 1;
  for (;; p += std::uint64_t(exponent)) {
    if (p <= after) continue;
    if (BigInt(static_cast<unsigned long>(p)) * static_cast<unsigned long>(p) <= bound) continue;
    if (modp::is_prime(p)) return p;
  }
}

struct DixonOptions {
  /// Override the GF(p) prime; must be = 1 mod exponent with p^2 > 4|G|.
  std::optional<std::uint64_t> prime;
};

namespace detail {

// Common eigenspaces of the class matrices, split one matrix at a time in
// class order until every space is a line.
inline std::vector<modp::Vec> split_eigenspaces(const ClassData& cd, const modp::Field& F) {
  const int k = cd.k();
  using modp::Mat;
  using modp::Vec;
  std::vector<Mat> spaces;
  {
    Mat id(k, Vec(k, 0));
    for (int i = 0; i < k; ++i) id[i][i] = 1;
    spaces.push_back(id);
  }
  for (int ci = 0; ci < k; ++ci) {
    bool done = std::all_of(spaces.begin(), spaces.end(), [](const Mat& s) { return s.size() == 1; });
    if (done) break;
    const auto& M = cd.structure_matrix(ci);
    std::vector<Mat> next;
    for (Mat& W : spaces) {
      const int d = int(W.size());
      if (d == 1) {
        next.push_back(std::move(W));
        continue;
      }
      // Image A b_m of each basis vector, then coordinates in the basis via
      // the RREF pivots of W.
      Mat rw = W;
      auto piv = F.rref(rw);
      W = rw;
      Mat R(d, Vec(d, 0));
      for (int m = 0; m < d; ++m) {
        Vec img(k, 0);
        for (int j = 0; j < k; ++j) {
          std::uint64_t s = 0;
          for (int kk = 0; kk < k; ++kk)
            if (W[m][kk]) s = F.add(s, F.mul(F.from(M[j][kk]), W[m][kk]));
          img[j] = s;
        }
        // img = sum_l R[l][m] W[l]; RREF rows have unit pivots.
        for (int l = 0; l < d; ++l) R[l][m] = img[piv[l]];
      }
      auto roots = F.roots(F.charpoly(R));
      int got = 0;
      for (auto lambda : roots) {
        Mat S = R;
        for (int l = 0; l < d; ++l) S[l][l] = F.sub(S[l][l], lambda);
        auto null = F.nullspace(S, d);
        Mat sub;
        for (const auto& c : null) {
          Vec v(k, 0);
          for (int m = 0; m < d; ++m)
            if (c[m])
              for (int kk = 0; kk < k; ++kk) v[kk] = F.add(v[kk], F.mul(c[m], W[m][kk]));
          sub.push_back(std::move(v));
        }
        F.rref(sub);
        got += int(sub.size());
        next.push_back(std::move(sub));
      }
      if (got != d)
        throw Error("eigenspace splitting failed modulo " + std::to_string(F.p()) + " at class matrix " +
                    std::to_string(ci + 1));
    }
    spaces = std::move(next);
  }
  std::vector<Vec> out;
  for (auto& s : spaces) {
    if (s.size() != 1)
      throw Error("eigenspace splitting left a space of dimension " + std::to_string(s.size()) + " modulo " +
                  std::to_string(F.p()));
    out.push_back(std::move(s[0]));
  }
  return out;
}

}  // namespace detail

/// Character table by the Dixon-Schneider method over GF(p), lifted to
/// exact cyclotomic values. Rows are sorted by degree, then by value vector.
inline CharacterTable dixon_character_table(const ClassData& cd, DixonOptions opts = {}) {
  const GroupTable& g = cd.group();
  const int k = cd.k();
  const int e = cd.exponent();
  const BigInt G = BigInt(static_cast<unsigned long>(g.size()));

  std::uint64_t p = opts.prime ? *opts.prime : dixon_prime(e, G);
  if ((p - 1) % std::uint64_t(e) != 0)
    throw Error("prime " + std::to_string(p) + " is not 1 modulo the exponent " + std::to_string(e));
  if (BigInt(static_cast<unsigned long>(p)) * static_cast<unsigned long>(p) <= 4 * G)
    throw Error("prime " + std::to_string(p) + " is too small: need p^2 > 4|G|");
  modp::Field F(p);

  const int id_class = cd.class_of(0);
  const auto inv_class = cd.inverse_classes();
  auto vecs = detail::split_eigenspaces(cd, F);
  if (int(vecs.size()) != k) throw Error("found " + std::to_string(vecs.size()) + " central characters, expected " + std::to_string(k));

  const std::uint64_t Gp = F.from(G);
  std::uint64_t root = F.primitive_root();
  std::uint64_t z_e = F.pow(root, (p - 1) / e);

  // Power classes of each representative: pw[c][s] = class of rep^s.
  std::vector<std::vector<int>> pw(k);
  for (int c = 0; c < k; ++c) {
    int o = cd.rep_order(c);
    int cur = 0;
    for (int s = 0; s < o; ++s) {
      pw[c].push_back(cd.class_of(cur));
      cur = g.mul(cur, cd.rep(c));
    }
  }

  std::vector<std::vector<Cyclotomic>> rows;
  for (auto& w : vecs) {
    if (w[id_class] == 0) throw Error("central character vanishes on the identity class");
    std::uint64_t s0 = F.inv(w[id_class]);
    for (auto& x : w) x = F.mul(x, s0);
    std::uint64_t S = 0;
    for (int c = 0; c < k; ++c)
      S = F.add(S, F.mul(F.mul(w[c], w[inv_class[c]]), F.inv(F.from(cd.sizes()[c]))));
    std::uint64_t d2 = F.mul(Gp, F.inv(S));
    std::int64_t degree = -1;
    for (std::int64_t d = 1; BigInt(d) * d <= G; ++d)
      if (F.mul(std::uint64_t(d) % p, std::uint64_t(d) % p) == d2 && G % d == 0) {
        degree = d;
        break;
      }
    if (degree < 0) throw Error("no admissible degree modulo " + std::to_string(p));
    std::vector<std::uint64_t> chi(k);
    for (int c = 0; c < k; ++c)
      chi[c] = F.mul(F.mul(w[c], std::uint64_t(degree) % p), F.inv(F.from(cd.sizes()[c])));

    std::vector<Cyclotomic> row;
    for (int c = 0; c < k; ++c) {
      const int o = cd.rep_order(c);
      std::uint64_t z_o = F.pow(z_e, e / o);
      std::uint64_t z_inv = F.inv(z_o);
      std::uint64_t o_inv = F.inv(std::uint64_t(o) % p);
      std::vector<Rational> m(o);
      for (int t = 0; t < o; ++t) {
        std::uint64_t acc = 0;
        std::uint64_t step = F.pow(z_inv, t), cur = 1;
        for (int s = 0; s < o; ++s) {
          acc = F.add(acc, F.mul(chi[pw[c][s]], cur));
          cur = F.mul(cur, step);
        }
        std::uint64_t mt = F.mul(acc, o_inv);
        if (std::int64_t(mt) > degree)
          throw Error("eigenvalue multiplicity " + std::to_string(mt) + " exceeds degree " + std::to_string(degree) +
                      " modulo " + std::to_string(p));
        m[t] = Rational(std::int64_t(mt));
      }
      row.push_back(Cyclotomic::make(o, m).lift(e));
    }
    rows.push_back(std::move(row));
  }

  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
    if (auto c = Cyclotomic::value_compare(a[0], b[0]); c != 0) return c < 0;
    for (std::size_t i = 1; i < a.size(); ++i)
      if (auto c = Cyclotomic::value_compare(a[i], b[i]); c != 0) return c < 0;
    return false;
  });

  CharacterTable t;
  t.values = std::move(rows);
  t.class_sizes = cd.sizes();
  t.group_order = G;
  t.source = "computed";
  t.prime = p;
  BigInt sq = 0;
  for (int i = 0; i < k; ++i) sq += t.degree(i) * t.degree(i);
  if (sq != G) throw Error("degrees squared sum to " + sq.get_str() + ", not |G| = " + G.get_str());
  return t;
}

inline CharacterTable dixon_character_table(const GroupTable& g, DixonOptions opts = {}) {
  ClassData cd(g);
  return dixon_character_table(cd, opts);
}

}  // namespace cliffchar

#endif  // CLIFFCHAR_DIXON_HPP
