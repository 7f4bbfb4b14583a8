#ifndef CLIFFCHAR_MODP_HPP
#define CLIFFCHAR_MODP_HPP

#include "rational.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace cliffchar::modp {

using u64 = std::uint64_t;
using Vec = std::vector<u64>;
using Mat = std::vector<Vec>;

inline bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// Prime field GF(p) for p < 2^32.
class Field {
public:
  explicit Field(u64 p) : p_(p) {
    if (!is_prime(p) || p >= (u64(1) << 32)) throw Error("GF(p) needs a prime p < 2^32, got " + std::to_string(p));
  }
  u64 p() const { return p_; }
  u64 add(u64 a, u64 b) const { return (a + b) % p_; }
  u64 sub(u64 a, u64 b) const { return (a + p_ - b) % p_; }
  u64 mul(u64 a, u64 b) const { return a * b % p_; }
  u64 neg(u64 a) const { return a == 0 ? 0 : p_ - a; }
  u64 pow(u64 a, u64 e) const {
    u64 r = 1;
    a %= p_;
    while (e) {
      if (e & 1) r = r * a % p_;
      a = a * a % p_;
      e >>= 1;
    }
    return r;
  }
  u64 inv(u64 a) const {
    if (a % p_ == 0) throw Error("division by zero in GF(" + std::to_string(p_) + ")");
    return pow(a, p_ - 2);
  }
  u64 from(std::int64_t v) const {
    std::int64_t r = v % std::int64_t(p_);
    return u64(r < 0 ? r + std::int64_t(p_) : r);
  }
  u64 from(const BigInt& v) const {
    BigInt r = v % BigInt(static_cast<unsigned long>(p_));
    if (r < 0) r += static_cast<unsigned long>(p_);
    return r.get_ui();
  }

  /// Smallest generator of the multiplicative group.
  u64 primitive_root() const {
    std::vector<u64> factors;
    u64 m = p_ - 1;
    for (u64 d = 2; d * d <= m; ++d)
      if (m % d == 0) {
        factors.push_back(d);
        while (m % d == 0) m /= d;
      }
    if (m > 1) factors.push_back(m);
    for (u64 g = 2; g < p_; ++g) {
      bool ok = true;
      for (u64 q : factors)
        if (pow(g, (p_ - 1) / q) == 1) {
          ok = false;
          break;
        }
      if (ok) return g;
    }
    return 1;  // p == 2
  }

  /// Reduced row echelon form in place; returns pivot columns.
  std::vector<int> rref(Mat& a) const {
    std::vector<int> pivots;
    if (a.empty()) return pivots;
    const int rows = int(a.size()), cols = int(a[0].size());
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
      int sel = -1;
      for (int i = r; i < rows; ++i)
        if (a[i][c] != 0) {
          sel = i;
          break;
        }
      if (sel < 0) continue;
      std::swap(a[r], a[sel]);
      u64 iv = inv(a[r][c]);
      for (auto& x : a[r]) x = mul(x, iv);
      for (int i = 0; i < rows; ++i) {
        if (i == r || a[i][c] == 0) continue;
        u64 f = a[i][c];
        for (int j = c; j < cols; ++j) a[i][j] = sub(a[i][j], mul(f, a[r][j]));
      }
      pivots.push_back(c);
      ++r;
    }
    a.resize(r);
    return pivots;
  }

  /// Basis of {x : a x = 0}, one vector per free column.
  std::vector<Vec> nullspace(Mat a, int cols) const {
    auto pivots = rref(a);
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<Vec> basis;
    for (int f = 0; f < cols; ++f) {
      if (is_pivot[f]) continue;
      Vec v(cols, 0);
      v[f] = 1;
      for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = neg(a[r][f]);
      basis.push_back(std::move(v));
    }
    return basis;
  }

  /// Characteristic polynomial det(xI - a), coefficients low to high, via
  /// reduction to upper Hessenberg form.
  Vec charpoly(Mat a) const {
    const int n = int(a.size());
    for (int m = 1; m + 1 < n; ++m) {
      int sel = -1;
      for (int i = m; i < n; ++i)
        if (a[i][m - 1] != 0) {
          sel = i;
          break;
        }
      if (sel < 0) continue;
      if (sel != m) {
        std::swap(a[sel], a[m]);
        for (int i = 0; i < n; ++i) std::swap(a[i][sel], a[i][m]);
      }
      u64 iv = inv(a[m][m - 1]);
      for (int i = m + 1; i < n; ++i) {
        u64 f = mul(a[i][m - 1], iv);
        if (f == 0) continue;
        for (int j = 0; j < n; ++j) a[i][j] = sub(a[i][j], mul(f, a[m][j]));
        for (int j = 0; j < n; ++j) a[j][m] = add(a[j][m], mul(f, a[j][i]));
      }
    }
    // p_0 = 1; p_{m+1} = (x - h_mm) p_m - sum_i h_im prod h_{j+1,j} p_i.
    std::vector<Vec> p(n + 1);
    p[0] = {1};
    for (int m = 0; m < n; ++m) {
      Vec next(m + 2, 0);
      for (int i = 0; i <= m; ++i) {
        next[i + 1] = add(next[i + 1], p[m][i]);
        next[i] = sub(next[i], mul(a[m][m], p[m][i]));
      }
      u64 t = 1;
      for (int i = m - 1; i >= 0; --i) {
        t = mul(t, a[i + 1][i]);
        u64 f = mul(t, a[i][m]);
        if (f == 0) continue;
        for (std::size_t j = 0; j < p[i].size(); ++j) next[j] = sub(next[j], mul(f, p[i][j]));
      }
      p[m + 1] = std::move(next);
    }
    return p[n];
  }

  u64 eval(const Vec& poly, u64 x) const {
    u64 r = 0;
    for (auto it = poly.rbegin(); it != poly.rend(); ++it) r = add(mul(r, x), *it);
    return r;
  }

  /// Distinct roots in GF(p), ascending, by exhaustive evaluation.
  std::vector<u64> roots(const Vec& poly) const {
    std::vector<u64> out;
    for (u64 x = 0; x < p_; ++x)
      if (eval(poly, x) == 0) out.push_back(x);
    return out;
  }

private:
  u64 p_;
};

}  // namespace cliffchar::modp

#endif  // CLIFFCHAR_MODP_HPP
