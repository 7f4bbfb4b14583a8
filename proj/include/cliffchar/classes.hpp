#ifndef CLIFFCHAR_CLASSES_HPP
#define CLIFFCHAR_CLASSES_HPP

#include "group_table.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <mutex>
#include <numeric>
#include <ostream>
#include <string>
#include <tuple>
#include <vector>

namespace cliffchar {

/// Conjugacy classes of an enumerated group.
///
/// Classes are indexed by (size, order of representative, representative
/// id), where the representative is the smallest element id in the class.
/// For the groups built here the identity class is therefore index 0.
class ClassData {
public:
  ClassData() = default;

  /// Partition into conjugacy classes by orbit closure under conjugation
  /// with the generators.
  explicit ClassData(const GroupTable& g) : group_(&g) {
    const std::size_t n = g.size();
    std::vector<int> raw(n, -1);
    std::vector<std::vector<int>> orbits;
    for (std::size_t start = 0; start < n; ++start) {
      if (raw[start] != -1) continue;
      int label = int(orbits.size());
      std::vector<int> orbit{int(start)};
      raw[start] = label;
      for (std::size_t i = 0; i < orbit.size(); ++i)
        for (const auto& gen : g.generators()) {
          int y = g.conjugate(gen.id, orbit[i]);
          if (raw[y] == -1) {
            raw[y] = label;
            orbit.push_back(y);
          }
        }
      orbits.push_back(std::move(orbit));
    }
    std::vector<int> perm(orbits.size());
    std::iota(perm.begin(), perm.end(), 0);
    auto key = [&](int o) {
      int rep = *std::min_element(orbits[o].begin(), orbits[o].end());
      return std::tuple(orbits[o].size(), g.order(rep), rep);
    };
    std::sort(perm.begin(), perm.end(), [&](int a, int b) { return key(a) < key(b); });
    std::vector<int> new_index(orbits.size());
    for (std::size_t c = 0; c < perm.size(); ++c) new_index[perm[c]] = int(c);

    class_of_.resize(n);
    for (std::size_t x = 0; x < n; ++x) class_of_[x] = new_index[raw[x]];
    members_.resize(orbits.size());
    for (std::size_t c = 0; c < perm.size(); ++c) {
      members_[c] = orbits[perm[c]];
      std::sort(members_[c].begin(), members_[c].end());
      reps_.push_back(members_[c].front());
      sizes_.push_back(BigInt(static_cast<unsigned long>(members_[c].size())));
    }
  }

  int k() const { return int(reps_.size()); }
  const GroupTable& group() const { return *group_; }
  int rep(int c) const { return reps_[c]; }
  const std::vector<int>& reps() const { return reps_; }
  const std::vector<BigInt>& sizes() const { return sizes_; }
  std::size_t size(int c) const { return members_[c].size(); }
  const std::vector<int>& members(int c) const { return members_[c]; }
  int class_of(int element) const { return class_of_[element]; }
  int rep_order(int c) const { return group_->order(reps_[c]); }

  /// Class of r^m for the representative r of each class.
  std::vector<int> power_map(int m) const {
    std::vector<int> out(k());
    for (int c = 0; c < k(); ++c) out[c] = class_of_[group_->power(reps_[c], m)];
    return out;
  }

  /// power_map evaluated on every member; a representative-dependent result
  /// is an error.
  std::vector<int> power_map_checked(int m) const {
    std::vector<int> out = power_map(m);
    for (int c = 0; c < k(); ++c)
      for (int x : members_[c])
        if (class_of_[group_->power(x, m)] != out[c])
          throw Error("power map for m=" + std::to_string(m) + " depends on the representative");
    return out;
  }

  /// a_{ijk} for fixed i, j and all k: the number of pairs (x, y) in
  /// C_i x C_j with x y = z, for one fixed z in C_k.
  std::vector<std::int64_t> class_constants(int i, int j) const { return structure_matrix(i)[j]; }

  /// M[j][k] = a_{ijk}. Built with one pass over C_i per class k. Cached.
  const std::vector<std::vector<std::int64_t>>& structure_matrix(int i) const {
    std::lock_guard lock(cache_mu_);
    if (auto it = cache_.find(i); it != cache_.end()) return it->second;
    std::vector<std::vector<std::int64_t>> m(k(), std::vector<std::int64_t>(k(), 0));
    for (int kk = 0; kk < k(); ++kk) {
      const int z = reps_[kk];
      for (int x : members_[i]) ++m[class_of_[group_->mul(group_->inverse(x), z)]][kk];
    }
    return cache_.emplace(i, std::move(m)).first->second;
  }

  /// #{x in C_i : x^{-1} z in C_j} for an arbitrary element z.
  std::int64_t count_factorizations(int i, int j, int z) const {
    std::int64_t count = 0;
    for (int x : members_[i])
      if (class_of_[group_->mul(group_->inverse(x), z)] == j) ++count;
    return count;
  }

  /// Class index of the inverse class.
  std::vector<int> inverse_classes() const { return power_map(-1); }

  /// Exponent of the group: lcm of representative orders.
  int exponent() const {
    int e = 1;
    for (int c = 0; c < k(); ++c) e = std::lcm(e, rep_order(c));
    return e;
  }

private:
  const GroupTable* group_ = nullptr;
  std::vector<int> reps_;
  std::vector<BigInt> sizes_;
  std::vector<int> class_of_;
  std::vector<std::vector<int>> members_;
  mutable std::mutex cache_mu_;
  mutable std::map<int, std::vector<std::vector<std::int64_t>>> cache_;

public:
  ClassData(const ClassData& o)
      : group_(o.group_), reps_(o.reps_), sizes_(o.sizes_), class_of_(o.class_of_), members_(o.members_) {}
  ClassData& operator=(const ClassData& o) {
    if (this != &o) {
      group_ = o.group_;
      reps_ = o.reps_;
      sizes_ = o.sizes_;
      class_of_ = o.class_of_;
      members_ = o.members_;
      std::lock_guard lock(cache_mu_);
      cache_.clear();
    }
    return *this;
  }
};

inline ClassData conjugacy_classes(const GroupTable& g) { return ClassData(g); }

inline std::vector<int> power_map(const ClassData& cd, int m) { return cd.power_map_checked(m); }

inline std::vector<std::int64_t> class_constants(const ClassData& cd, int i, int j) {
  return cd.class_constants(i, j);
}

/// Class index of the element spelled by a word.
inline int class_of_word(std::string_view word, const GroupTable& g, const ClassData& cd) {
  return cd.class_of(g.evaluate(parse_word(word)));
}

/// CSV "index,size,word,order"; words are spelled from BFS parents.
inline void write_class_report(std::ostream& os, const ClassData& cd) {
  os << "index,size,word,order\n";
  for (int c = 0; c < cd.k(); ++c)
    os << c + 1 << ',' << cd.size(c) << ',' << cd.group().word_text(cd.rep(c)) << ',' << cd.rep_order(c) << '\n';
}

}  // namespace cliffchar

#endif  // CLIFFCHAR_CLASSES_HPP
