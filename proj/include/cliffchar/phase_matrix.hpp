#ifndef CLIFFCHAR_PHASE_MATRIX_HPP
#define CLIFFCHAR_PHASE_MATRIX_HPP

#include "cyclotomic.hpp"
#include "word.hpp"

#include <string>
#include <vector>

namespace cliffchar {

/// Conductor of every matrix entry: omega = zeta_8 = e^{i pi/4}.
inline constexpr int kPhaseConductor = 8;

/// A 2^n x 2^n unitary over Q(zeta_8), stored in the unique representative
/// of its class modulo the global phases <omega * I>.
///
/// Canonical choice: among omega^k * M, k = 0..7, the one whose row-major
/// entry list is smallest, each entry compared by its four coefficients in
/// (numerator, denominator) order. Since omega^k a != a for a != 0, the first
/// nonzero entry alone fixes k.
class PhaseMatrix {
public:
  PhaseMatrix() = default;

  /// Builds and canonicalizes a matrix from row-major entries.
  PhaseMatrix(int n_qubits, std::vector<Cyclotomic> entries)
      : n_(n_qubits), entries_(std::move(entries)) {
    if (n_ < 1) throw Error("PhaseMatrix needs at least one qubit");
    if (entries_.size() != std::size_t(dim()) * dim()) throw Error("PhaseMatrix entry count mismatch");
    for (auto& e : entries_)
      if (e.conductor() != kPhaseConductor) e = e.lift(kPhaseConductor);
    canonicalize();
  }

  static PhaseMatrix identity(int n_qubits) {
    int d = 1 << n_qubits;
    std::vector<Cyclotomic> e(std::size_t(d) * d, Cyclotomic::rational(0, kPhaseConductor));
    for (int i = 0; i < d; ++i) e[std::size_t(i) * d + i] = Cyclotomic::rational(1, kPhaseConductor);
    return PhaseMatrix(n_qubits, std::move(e));
  }

  int n_qubits() const { return n_; }
  int dim() const { return 1 << n_; }
  const Cyclotomic& at(int r, int c) const { return entries_[std::size_t(r) * dim() + c]; }
  const std::vector<Cyclotomic>& entries() const { return entries_; }

  friend PhaseMatrix operator*(const PhaseMatrix& a, const PhaseMatrix& b) {
    if (a.n_ != b.n_) throw Error("PhaseMatrix dimension mismatch in product");
    return PhaseMatrix(a.n_, raw_product(a, b));
  }

  /// Conjugate transpose, which is the inverse for unitaries.
  PhaseMatrix adjoint() const {
    const int d = dim();
    std::vector<Cyclotomic> e(entries_.size());
    for (int r = 0; r < d; ++r)
      for (int c = 0; c < d; ++c) e[std::size_t(c) * d + r] = at(r, c).conj();
    return PhaseMatrix(n_, std::move(e));
  }
  PhaseMatrix inverse() const { return adjoint(); }

  PhaseMatrix pow(int e) const {
    PhaseMatrix base = e < 0 ? inverse() : *this;
    PhaseMatrix out = identity(n_);
    for (int i = 0; i < std::abs(e); ++i) out = out * base;
    return out;
  }

  /// Exact check M * M^dagger == I (phase-free, since |omega| = 1).
  bool is_unitary() const {
    const int d = dim();
    for (int r = 0; r < d; ++r)
      for (int c = 0; c < d; ++c) {
        Cyclotomic s = Cyclotomic::rational(0, kPhaseConductor);
        for (int k = 0; k < d; ++k) s += at(r, k) * at(c, k).conj();
        if (s != Cyclotomic(r == c ? 1 : 0)) return false;
      }
    return true;
  }

  bool is_identity() const { return *this == identity(n_); }

  Cyclotomic trace() const {
    Cyclotomic s = Cyclotomic::rational(0, kPhaseConductor);
    for (int i = 0; i < dim(); ++i) s += at(i, i);
    return s;
  }

  /// omega^k * M without re-canonicalizing; used to test phase invariance.
  std::vector<Cyclotomic> phased_entries(int k) const {
    Cyclotomic w = Cyclotomic::zeta(kPhaseConductor, k);
    std::vector<Cyclotomic> out;
    out.reserve(entries_.size());
    for (const auto& e : entries_) out.push_back(e * w);
    return out;
  }

  friend bool operator==(const PhaseMatrix& a, const PhaseMatrix& b) {
    return a.n_ == b.n_ && a.entries_ == b.entries_;
  }
  friend std::strong_ordering operator<=>(const PhaseMatrix& a, const PhaseMatrix& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    for (std::size_t i = 0; i < a.entries_.size(); ++i)
      if (auto c = Cyclotomic::repr_compare(a.entries_[i], b.entries_[i]); c != 0) return c;
    return std::strong_ordering::equal;
  }

  std::size_t hash() const {
    std::size_t h = std::size_t(n_);
    for (const auto& e : entries_) h = h * 0x100000001B3ULL ^ e.hash();
    return h;
  }

  std::string str() const {
    std::string out;
    const int d = dim();
    for (int r = 0; r < d; ++r) {
      out += "[";
      for (int c = 0; c < d; ++c) {
        if (c) out += ", ";
        out += at(r, c).str();
      }
      out += "]\n";
    }
    return out;
  }

  /// Kronecker product a (x) b; the result is canonicalized.
  friend PhaseMatrix kron(const PhaseMatrix& a, const PhaseMatrix& b) {
    const int da = a.dim(), db = b.dim(), d = da * db;
    std::vector<Cyclotomic> e(std::size_t(d) * d, Cyclotomic::rational(0, kPhaseConductor));
    for (int ar = 0; ar < da; ++ar)
      for (int ac = 0; ac < da; ++ac) {
        if (a.at(ar, ac).is_zero()) continue;
        for (int br = 0; br < db; ++br)
          for (int bc = 0; bc < db; ++bc)
            e[std::size_t(ar * db + br) * d + (ac * db + bc)] = a.at(ar, ac) * b.at(br, bc);
      }
    return PhaseMatrix(a.n_ + b.n_, std::move(e));
  }

private:
  int n_ = 0;
  std::vector<Cyclotomic> entries_;

  static std::vector<Cyclotomic> raw_product(const PhaseMatrix& a, const PhaseMatrix& b) {
    const int d = a.dim();
    std::vector<Cyclotomic> e(std::size_t(d) * d, Cyclotomic::rational(0, kPhaseConductor));
    for (int r = 0; r < d; ++r)
      for (int k = 0; k < d; ++k) {
        const Cyclotomic& x = a.at(r, k);
        if (x.is_zero()) continue;
        for (int c = 0; c < d; ++c) {
          const Cyclotomic& y = b.at(k, c);
          if (y.is_zero()) continue;
          e[std::size_t(r) * d + c] += x * y;
        }
      }
    return e;
  }

  // Multiplication by omega rotates (c0, c1, c2, c3) -> (-c3, c0, c1, c2).
  static Cyclotomic times_omega(const Cyclotomic& a, int k) {
    const auto& c = a.coeffs();
    std::vector<Rational> rot(4);
    for (int i = 0; i < 4; ++i) {
      int j = i + k;  // c_i zeta^{i+k}
      int slot = j % 4;
      bool neg = (j / 4) % 2 == 1;
      rot[slot] = neg ? -c[i] : c[i];
    }
    return Cyclotomic::make(kPhaseConductor, rot);
  }

  void canonicalize() {
    std::size_t first = 0;
    while (first < entries_.size() && entries_[first].is_zero()) ++first;
    if (first == entries_.size()) throw Error("PhaseMatrix is the zero matrix");
    int best = 0;
    Cyclotomic best_val = entries_[first];
    for (int k = 1; k < 8; ++k) {
      Cyclotomic v = times_omega(entries_[first], k);
      if (Cyclotomic::repr_compare(v, best_val) < 0) {
        best = k;
        best_val = std::move(v);
      }
    }
    if (best == 0) return;
    for (std::size_t i = first; i < entries_.size(); ++i)
      if (!entries_[i].is_zero()) entries_[i] = times_omega(entries_[i], best);
  }
};

struct PhaseMatrixHash {
  std::size_t operator()(const PhaseMatrix& m) const { return m.hash(); }
};

namespace gates {

inline Cyclotomic z8(int k) { return Cyclotomic::zeta(kPhaseConductor, k); }
inline Cyclotomic q8(std::int64_t num, std::int64_t den = 1) {
  return Cyclotomic::rational(Rational(num, den), kPhaseConductor);
}

/// 1/sqrt(2) = (zeta_8 - zeta_8^3) / 2.
inline Cyclotomic inv_sqrt2() { return (z8(1) - z8(3)).scaled(Rational(1, 2)); }

inline PhaseMatrix single(std::vector<Cyclotomic> e) { return PhaseMatrix(1, std::move(e)); }

inline PhaseMatrix hadamard() {
  Cyclotomic s = inv_sqrt2();
  return single({s, s, s, -s});
}
inline PhaseMatrix phase() { return single({q8(1), q8(0), q8(0), z8(2)}); }
inline PhaseMatrix pauli_x() { return single({q8(0), q8(1), q8(1), q8(0)}); }
inline PhaseMatrix pauli_y() { return single({q8(0), -z8(2), z8(2), q8(0)}); }
inline PhaseMatrix pauli_z() { return single({q8(1), q8(0), q8(0), q8(-1)}); }
inline PhaseMatrix controlled_z() {
  std::vector<Cyclotomic> e(16, q8(0));
  e[0] = e[5] = e[10] = q8(1);
  e[15] = q8(-1);
  return PhaseMatrix(2, std::move(e));
}

/// I^{(pos-1)} (x) g (x) I^{(n-pos-width+1)}, pos 1-based.
inline PhaseMatrix embed(const PhaseMatrix& g, int pos, int n) {
  const int width = g.n_qubits();
  if (pos < 1 || pos + width - 1 > n)
    throw Error("qubit index " + std::to_string(pos) + " out of range for n=" + std::to_string(n));
  PhaseMatrix out = pos > 1 ? PhaseMatrix::identity(pos - 1) : g;
  if (pos > 1) out = kron(out, g);
  int rest = n - (pos + width - 1);
  if (rest > 0) out = kron(out, PhaseMatrix::identity(rest));
  return out;
}

}  // namespace gates

/// H on qubit i (1-based) of n.
inline PhaseMatrix gen_hadamard(int i, int n) { return gates::embed(gates::hadamard(), i, n); }
/// P = diag(1, i) on qubit i.
inline PhaseMatrix gen_phase(int i, int n) { return gates::embed(gates::phase(), i, n); }
/// CZ on qubits j, j+1.
inline PhaseMatrix gen_cz(int j, int n) {
  if (n < 2 || j < 1 || j > n - 1)
    throw Error("CZ index " + std::to_string(j) + " out of range for n=" + std::to_string(n));
  return gates::embed(gates::controlled_z(), j, n);
}

enum class PauliAxis { X, Y, Z };

inline PhaseMatrix gen_pauli(PauliAxis axis, int i, int n) {
  switch (axis) {
    case PauliAxis::X: return gates::embed(gates::pauli_x(), i, n);
    case PauliAxis::Y: return gates::embed(gates::pauli_y(), i, n);
    case PauliAxis::Z: return gates::embed(gates::pauli_z(), i, n);
  }
  throw Error("unknown Pauli axis");
}

/// Matrix for a generator name: h<i>, p<i>, z<j> (controlled-Z on j, j+1),
/// x<i>, y<i>.
inline PhaseMatrix generator_matrix(const std::string& name, int n) {
  if (name.size() < 2) throw Error("unknown generator '" + name + "'");
  char kind = name[0];
  int idx = 0;
  try {
    std::size_t used = 0;
    idx = std::stoi(name.substr(1), &used);
    if (used != name.size() - 1) throw Error("");
  } catch (const std::exception&) {
    throw Error("unknown generator '" + name + "'");
  }
  switch (kind) {
    case 'h': return gen_hadamard(idx, n);
    case 'p': return gen_phase(idx, n);
    case 'z': return gen_cz(idx, n);
    case 'x': return gen_pauli(PauliAxis::X, idx, n);
    case 'y': return gen_pauli(PauliAxis::Y, idx, n);
    default: throw Error("unknown generator '" + name + "'");
  }
}

inline PhaseMatrix evaluate_word(const Word& w, int n) {
  PhaseMatrix out = PhaseMatrix::identity(n);
  for (const auto& l : w) out = out * generator_matrix(l.name, n).pow(l.exponent);
  return out;
}

inline PhaseMatrix evaluate_word(std::string_view text, int n) { return evaluate_word(parse_word(text), n); }

}  // namespace cliffchar

#endif  // CLIFFCHAR_PHASE_MATRIX_HPP
