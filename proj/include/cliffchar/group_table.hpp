#ifndef CLIFFCHAR_GROUP_TABLE_HPP
#define CLIFFCHAR_GROUP_TABLE_HPP

#include "phase_matrix.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <tuple>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace cliffchar {

/// |C_n| = 2^{n^2+2n} prod_{j=1}^n (4^j - 1), modulo global phase.
inline BigInt group_order_formula(int n) {
  if (n < 1) throw Error("group order needs n >= 1");
  BigInt order = 1;
  order <<= unsigned(n * n + 2 * n);
  for (int j = 1; j <= n; ++j) {
    BigInt f = 1;
    f <<= unsigned(2 * j);
    order *= f - 1;
  }
  return order;
}

/// Largest element order accepted before order computation is declared
/// runaway. Sufficient for every group enumerated at n <= 2.
inline constexpr int kMaxElementOrder = 48;

inline constexpr std::size_t kDefaultElementCap = 1'000'000;

/// A fully enumerated finite matrix group.
///
/// Element ids are assigned breadth first by word length in the generators;
/// within one level, new elements are ordered by the canonical matrix order.
/// Besides the matrices, the table keeps the right-multiplication action of
/// each generator and a BFS parent pointer per element, so products of
/// enumerated elements reduce to table walks along the generator word of the
/// right factor.
class GroupTable {
public:
  struct Generator {
    std::string name;
    int id = 0;
  };

  int n_qubits() const { return n_; }
  std::size_t size() const { return elements_.size(); }
  const PhaseMatrix& element(int id) const { return elements_[id]; }
  const std::vector<PhaseMatrix>& elements() const { return elements_; }
  const std::vector<Generator>& generators() const { return generators_; }
  int order(int id) const { return orders_[id]; }
  const std::vector<int>& orders() const { return orders_; }
  int inverse(int id) const { return inverse_[id]; }
  /// lcm of all element orders.
  int exponent() const { return exponent_; }

  std::optional<int> find(const PhaseMatrix& m) const {
    auto it = index_.find(m);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  int id_of(const PhaseMatrix& m) const {
    auto id = find(m);
    if (!id) throw Error("matrix is not an element of the enumerated group");
    return *id;
  }

  /// id of element(a) * generator(g).
  int right_mul_gen(int a, int g) const { return right_mul_[g][a]; }

  /// Generator indices spelling element id from the identity.
  std::vector<int> word_indices(int id) const {
    std::vector<int> w;
    while (id != 0) {
      w.push_back(parent_gen_[id]);
      id = parent_[id];
    }
    std::reverse(w.begin(), w.end());
    return w;
  }

  /// Shortest generator word for an element, in the word syntax.
  std::string word_text(int id) const {
    Word w;
    for (int g : word_indices(id)) {
      const auto& name = generators_[g].name;
      if (!w.empty() && w.back().name == name)
        ++w.back().exponent;
      else
        w.push_back({name, 1});
    }
    return to_string(w);
  }

  int mul(int a, int b) const {
    // b = g_1 ... g_L; walk a * g_1 * ... * g_L.
    int path[256];
    int len = 0;
    for (int x = b; x != 0; x = parent_[x]) {
      if (len == 256) return mul_long(a, b);
      path[len++] = parent_gen_[x];
    }
    int cur = a;
    for (int i = len - 1; i >= 0; --i) cur = right_mul_[path[i]][cur];
    return cur;
  }

  int power(int a, int e) const {
    if (e < 0) return power(inverse_[a], -e);
    int out = 0;
    for (int i = 0; i < e; ++i) out = mul(out, a);
    return out;
  }

  int conjugate(int g, int x) const { return mul(mul(g, x), inverse_[g]); }

  /// Evaluates a word whose letters are this table's generator names or any
  /// Clifford generator name valid for n_qubits.
  int evaluate(const Word& w) const { return id_of(evaluate_word(w, n_)); }

  friend GroupTable bfs_closure(const std::vector<std::pair<std::string, PhaseMatrix>>& gens,
                                std::size_t element_cap);

private:
  int n_ = 0;
  std::vector<PhaseMatrix> elements_;
  std::unordered_map<PhaseMatrix, int, PhaseMatrixHash> index_;
  std::vector<Generator> generators_;
  std::vector<std::vector<int>> right_mul_;
  std::vector<int> parent_;
  std::vector<int> parent_gen_;
  std::vector<int> orders_;
  std::vector<int> inverse_;
  int exponent_ = 1;

  int mul_long(int a, int b) const {
    int cur = a;
    for (int g : word_indices(b)) cur = right_mul_[g][cur];
    return cur;
  }
};

/// Breadth-first closure of the named generators. Throws when the group
/// grows beyond element_cap.
inline GroupTable bfs_closure(const std::vector<std::pair<std::string, PhaseMatrix>>& gens,
                              std::size_t element_cap = kDefaultElementCap) {
  if (gens.empty()) throw Error("bfs_closure needs at least one generator");
  GroupTable t;
  t.n_ = gens.front().second.n_qubits();
  for (const auto& [name, m] : gens)
    if (m.n_qubits() != t.n_) throw Error("generators act on different numbers of qubits");

  auto add = [&](PhaseMatrix m, int parent, int gen) {
    if (t.elements_.size() >= element_cap)
      throw Error("group enumeration exceeded the element cap of " + std::to_string(element_cap));
    int id = int(t.elements_.size());
    t.index_.emplace(m, id);
    t.elements_.push_back(std::move(m));
    t.parent_.push_back(parent);
    t.parent_gen_.push_back(gen);
    return id;
  };
  add(PhaseMatrix::identity(t.n_), 0, -1);

  const int ng = int(gens.size());
  t.right_mul_.assign(ng, {});
  std::size_t level_begin = 0, level_end = 1;
  while (level_begin < level_end) {
    struct Found {
      PhaseMatrix m;
      int parent;
      int gen;
    };
    std::vector<Found> fresh;
    std::unordered_map<PhaseMatrix, int, PhaseMatrixHash> seen;
    // (a, g, fresh slot) for products that land in the next level.
    std::vector<std::tuple<std::size_t, int, int>> pending;
    for (std::size_t a = level_begin; a < level_end; ++a)
      for (int g = 0; g < ng; ++g) {
        if (t.right_mul_[g].size() <= a) t.right_mul_[g].resize(level_end, -1);
        PhaseMatrix p = t.elements_[a] * gens[g].second;
        if (auto it = t.index_.find(p); it != t.index_.end()) {
          t.right_mul_[g][a] = it->second;
          continue;
        }
        auto [it, inserted] = seen.emplace(p, int(fresh.size()));
        if (inserted) fresh.push_back({std::move(p), int(a), g});
        pending.emplace_back(a, g, it->second);
      }
    std::vector<int> order(fresh.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int x, int y) { return fresh[x].m < fresh[y].m; });
    std::vector<int> slot_id(fresh.size());
    for (int slot : order) {
      auto& f = fresh[slot];
      slot_id[slot] = add(std::move(f.m), f.parent, f.gen);
    }
    for (auto [a, g, slot] : pending) t.right_mul_[g][a] = slot_id[slot];
    level_begin = level_end;
    level_end = t.elements_.size();
  }
  const std::size_t n_el = t.elements_.size();
  for (int g = 0; g < ng; ++g) t.generators_.push_back({gens[g].first, t.index_.at(gens[g].second)});

  t.inverse_.resize(n_el);
  for (std::size_t a = 0; a < n_el; ++a) t.inverse_[a] = t.index_.at(t.elements_[a].inverse());

  t.orders_.assign(n_el, 0);
  t.exponent_ = 1;
  for (std::size_t a = 0; a < n_el; ++a) {
    int cur = int(a), ord = 1;
    while (cur != 0) {
      cur = t.mul(cur, int(a));
      if (++ord > kMaxElementOrder)
        throw Error("element order exceeds the bound " + std::to_string(kMaxElementOrder));
    }
    t.orders_[a] = ord;
    t.exponent_ = std::lcm(t.exponent_, ord);
  }
  return t;
}

/// The standard generating set {H_i, P_i, CZ_j} of the n-qubit Clifford
/// group, named h1..hn, p1..pn, z1..z(n-1).
inline std::vector<std::pair<std::string, PhaseMatrix>> clifford_generators(int n) {
  std::vector<std::pair<std::string, PhaseMatrix>> g;
  for (int i = 1; i <= n; ++i) g.emplace_back("h" + std::to_string(i), gen_hadamard(i, n));
  for (int i = 1; i <= n; ++i) g.emplace_back("p" + std::to_string(i), gen_phase(i, n));
  for (int j = 1; j < n; ++j) g.emplace_back("z" + std::to_string(j), gen_cz(j, n));
  return g;
}

/// Enumerates C_n. Refuses up front when |C_n| exceeds the cap.
inline GroupTable enumerate_clifford(int n, std::size_t element_cap = kDefaultElementCap) {
  BigInt order = group_order_formula(n);
  if (order > BigInt(static_cast<unsigned long>(element_cap)))
    throw Error("C_" + std::to_string(n) + " has " + order.get_str() +
                " elements, beyond the element cap of " + std::to_string(element_cap));
  return bfs_closure(clifford_generators(n), element_cap);
}

}  // namespace cliffchar

#endif  // CLIFFCHAR_GROUP_TABLE_HPP
