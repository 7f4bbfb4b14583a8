#ifndef CLIFFCHAR_PAPERDATA_HPP
#define CLIFFCHAR_PAPERDATA_HPP

#include "character_table.hpp"
#include "classes.hpp"
#include "repdecomp.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#ifndef CLIFFCHAR_DEFAULT_DATA_DIR
#define CLIFFCHAR_DEFAULT_DATA_DIR "data"
#endif

namespace cliffchar {

inline const std::vector<std::string>& known_table_ids() {
  static const std::vector<std::string> ids = {"s4_chartab", "c2_classes",  "c2_chartab",     "c3_chartab",
                                               "order_table", "c1_decomp", "c2_decomp", "c3_decomp",
                                               "c1_adjoint_row"};
  return ids;
}

/// Fixture directory: $CLIFFCHAR_DATA_DIR if set, else the build-time default.
inline std::filesystem::path data_dir() {
  if (const char* env = std::getenv("CLIFFCHAR_DATA_DIR"); env && *env) return env;
  return CLIFFCHAR_DEFAULT_DATA_DIR;
}

/// A fixture as printed: '#' comment lines (provenance) and raw CSV cells.
struct EmbeddedTable {
  std::string id;
  std::vector<std::string> comments;
  std::vector<std::vector<std::string>> rows;
};

inline std::string read_text_file(const std::filesystem::path& p) {
  std::ifstream in(p);
  if (!in) throw Error("cannot open fixture " + p.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline EmbeddedTable load_table(const std::string& id, const std::filesystem::path& dir = data_dir()) {
  if (std::find(known_table_ids().begin(), known_table_ids().end(), id) == known_table_ids().end())
    throw Error("unknown table id '" + id + "'");
  std::istringstream in(read_text_file(dir / (id + ".csv")));
  EmbeddedTable t;
  t.id = id;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '#') {
      t.comments.push_back(detail::trim(line.substr(1)));
      continue;
    }
    auto cells = detail::split_csv_line(line);
    for (auto& c : cells) c = detail::trim(c);
    t.rows.push_back(std::move(cells));
  }
  return t;
}

namespace detail {

inline BigInt parse_big(const std::string& s, const std::string& where) {
  try {
    return BigInt(s);
  } catch (const std::invalid_argument&) {
    throw Error("malformed integer '" + s + "' in " + where);
  }
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Typed accessors

struct EmbeddedCharacterTable {
  std::string id;
  std::vector<std::string> row_labels;
  std::vector<std::vector<Cyclotomic>> values;
  std::optional<std::vector<BigInt>> sizes;
  std::optional<std::vector<std::string>> words;
  BigInt group_order;

  int k() const { return int(values.size()); }

  /// A CharacterTable with printed sizes, or sizes derived from columns when
  /// none are printed.
  CharacterTable table() const {
    CharacterTable t;
    t.values = values;
    t.group_order = group_order;
    t.class_sizes = sizes ? *sizes : class_sizes_from_columns(values, group_order);
    t.source = "embedded:" + id;
    return t;
  }
};

inline EmbeddedCharacterTable load_character_table(const std::string& id, const std::filesystem::path& dir = data_dir()) {
  static const std::map<std::string, std::pair<int, long>> shape = {
      {"s4_chartab", {5, 24}}, {"c2_chartab", {21, 11520}}, {"c3_chartab", {67, 92897280}}};
  auto it = shape.find(id);
  if (it == shape.end()) throw Error("'" + id + "' is not a character table fixture");
  std::istringstream in(read_text_file(dir / (id + ".csv")));
  auto csv = read_character_table_csv(in);
  if (int(csv.values.size()) != it->second.first)
    throw Error(id + " has " + std::to_string(csv.values.size()) + " rows, expected " +
                std::to_string(it->second.first));
  EmbeddedCharacterTable t;
  t.id = id;
  t.row_labels = csv.row_labels;
  t.values = std::move(csv.values);
  t.sizes = std::move(csv.sizes);
  t.words = std::move(csv.words);
  t.group_order = it->second.second;
  return t;
}

struct ClassRecord {
  int label = 0;
  BigInt size;
  std::string word;
};

inline std::vector<ClassRecord> load_c2_classes(const std::filesystem::path& dir = data_dir()) {
  auto t = load_table("c2_classes", dir);
  std::vector<ClassRecord> out;
  for (std::size_t i = 1; i < t.rows.size(); ++i) {
    const auto& r = t.rows[i];
    if (r.size() != 3) throw Error("c2_classes row " + std::to_string(i) + " needs 3 cells");
    out.push_back({std::stoi(r[0]), detail::parse_big(r[1], "c2_classes"), r[2]});
  }
  if (out.size() != 21) throw Error("c2_classes has " + std::to_string(out.size()) + " rows, expected 21");
  return out;
}

inline std::map<int, BigInt> load_order_table(const std::filesystem::path& dir = data_dir()) {
  auto t = load_table("order_table", dir);
  std::map<int, BigInt> out;
  for (std::size_t i = 1; i < t.rows.size(); ++i) out[std::stoi(t.rows[i][0])] = detail::parse_big(t.rows[i][1], "order_table");
  return out;
}

/// Dense decomposition vectors keyed by m (c1_decomp, c2_decomp).
inline std::map<int, std::vector<BigInt>> load_dense_decomp(const std::string& id, const std::filesystem::path& dir = data_dir()) {
  auto t = load_table(id, dir);
  std::map<int, std::vector<BigInt>> out;
  for (std::size_t i = 1; i < t.rows.size(); ++i) {
    std::vector<BigInt> v;
    for (std::size_t j = 1; j < t.rows[i].size(); ++j) v.push_back(detail::parse_big(t.rows[i][j], id));
    out[std::stoi(t.rows[i][0])] = std::move(v);
  }
  return out;
}

struct SparseDecompEntry {
  int m = 0;
  int row = 0;  // 1-based
  BigInt coefficient;
  std::string note;
};

inline std::vector<SparseDecompEntry> load_c3_decomp(const std::filesystem::path& dir = data_dir()) {
  auto t = load_table("c3_decomp", dir);
  std::vector<SparseDecompEntry> out;
  for (std::size_t i = 1; i < t.rows.size(); ++i) {
    const auto& r = t.rows[i];
    out.push_back({std::stoi(r[0]), std::stoi(r[1]), detail::parse_big(r[2], "c3_decomp"), r.size() > 3 ? r[3] : ""});
  }
  return out;
}

/// Sparse entries for one m expanded to a dense vector of length k.
inline std::vector<BigInt> dense_from_sparse(const std::vector<SparseDecompEntry>& es, int m, int k) {
  std::vector<BigInt> v(k, 0);
  for (const auto& e : es)
    if (e.m == m) v.at(e.row - 1) += e.coefficient;
  return v;
}

struct AdjointRow {
  std::vector<std::string> words;
  std::vector<BigInt> values;
};

inline AdjointRow load_c1_adjoint_row(const std::filesystem::path& dir = data_dir()) {
  auto t = load_table("c1_adjoint_row", dir);
  AdjointRow r;
  r.words.assign(t.rows.at(0).begin() + 1, t.rows.at(0).end());
  for (std::size_t j = 1; j < t.rows.at(1).size(); ++j) r.values.push_back(detail::parse_big(t.rows[1][j], "c1_adjoint_row"));
  return r;
}

// ---------------------------------------------------------------------------
// Matching up to row and column permutation

struct TableMatch {
  bool matched = false;
  /// embedded row i is computed row row_map[i]; embedded column j is
  /// computed column col_map[j].
  std::vector<int> row_map;
  std::vector<int> col_map;
  /// Located mismatch, 0-based embedded coordinates; set when !matched.
  int bad_row = -1;
  int bad_col = -1;
  std::string report;
};

namespace detail {

using Column = std::vector<Cyclotomic>;

inline std::vector<std::string> sorted_strs(const std::vector<Cyclotomic>& v) {
  std::vector<std::string> s;
  for (const auto& x : v) s.push_back(x.str());
  std::sort(s.begin(), s.end());
  return s;
}

class TableMatcher {
public:
  TableMatcher(const CharacterTable& computed, const EmbeddedCharacterTable& embedded,
               const std::vector<std::optional<int>>& anchors)
      : comp_(computed), emb_(embedded), k_(computed.k()) {
    std::vector<std::vector<std::string>> comp_sig(k_), emb_sig(k_);
    for (int j = 0; j < k_; ++j) {
      Column a, b;
      for (int i = 0; i < k_; ++i) a.push_back(comp_.at(i, j)), b.push_back(emb_.values[i][j]);
      comp_sig[j] = sorted_strs(a);
      emb_sig[j] = sorted_strs(b);
    }
    std::optional<std::vector<BigInt>> emb_sizes = emb_.sizes;
    if (!emb_sizes) {
      try {
        emb_sizes = class_sizes_from_columns(emb_.values, emb_.group_order);
      } catch (const Error&) {
      }
    }
    cand_.resize(k_);
    for (int j = 0; j < k_; ++j) {
      if (j < int(anchors.size()) && anchors[j]) {
        cand_[j] = {*anchors[j]};
        continue;
      }
      for (int c = 0; c < k_; ++c) {
        if (emb_sizes && (*emb_sizes)[j] != comp_.class_sizes[c]) continue;
        if (comp_sig[c] != emb_sig[j]) continue;
        cand_[j].push_back(c);
      }
    }
    order_.resize(k_);
    for (int j = 0; j < k_; ++j) order_[j] = j;
    std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) { return cand_[a].size() < cand_[b].size(); });
  }

  TableMatch run() {
    TableMatch m;
    std::vector<int> tau(k_, -1);
    std::vector<bool> used(k_, false);
    best_depth_ = -1;
    if (search(0, tau, used)) {
      m.matched = true;
      m.col_map = solution_;
      m.row_map = rows_for(solution_);
      return m;
    }
    certificate(m);
    return m;
  }

private:
  const CharacterTable& comp_;
  const EmbeddedCharacterTable& emb_;
  int k_;
  std::vector<std::vector<int>> cand_;
  std::vector<int> order_;
  std::vector<int> solution_;
  std::vector<int> best_;
  int best_depth_ = -1;

  // Multisets of row prefixes over the assigned columns must agree.
  bool prefixes_agree(const std::vector<int>& tau, int depth) const {
    std::vector<std::vector<std::string>> a(k_), b(k_);
    for (int i = 0; i < k_; ++i)
      for (int d = 0; d < depth; ++d) {
        int j = order_[d];
        a[i].push_back(emb_.values[i][j].str());
        b[i].push_back(comp_.at(i, tau[j]).str());
      }
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
  }

  bool search(int depth, std::vector<int>& tau, std::vector<bool>& used) {
    if (depth > best_depth_) {
      best_depth_ = depth;
      best_ = tau;
    }
    if (depth == k_) {
      solution_ = tau;
      return true;
    }
    int j = order_[depth];
    for (int c : cand_[j]) {
      if (used[c]) continue;
      tau[j] = c;
      used[c] = true;
      if (prefixes_agree(tau, depth + 1) && search(depth + 1, tau, used)) return true;
      used[c] = false;
      tau[j] = -1;
    }
    return false;
  }

  std::vector<int> rows_for(const std::vector<int>& tau) const {
    std::vector<int> rows(k_, -1);
    std::vector<bool> taken(k_, false);
    for (int i = 0; i < k_; ++i)
      for (int r = 0; r < k_; ++r) {
        if (taken[r]) continue;
        bool eq = true;
        for (int j = 0; j < k_ && eq; ++j) eq = emb_.values[i][j] == comp_.at(r, tau[j]);
        if (eq) {
          rows[i] = r;
          taken[r] = true;
          break;
        }
      }
    return rows;
  }

  // Complete the deepest partial column assignment with the first free
  // candidate (or any free column), pair exact rows, and report the first
  // differing cell of the first unpaired row against its nearest computed row.
  void certificate(TableMatch& m) const {
    std::vector<int> tau = best_;
    std::vector<bool> used(k_, false);
    for (int c : tau)
      if (c >= 0) used[c] = true;
    for (int d = 0; d < k_; ++d) {
      int j = order_[d];
      if (tau[j] >= 0) continue;
      for (int c : cand_[j])
        if (!used[c]) {
          tau[j] = c;
          break;
        }
      if (tau[j] < 0)
        for (int c = 0; c < k_; ++c)
          if (!used[c]) {
            tau[j] = c;
            break;
          }
      used[tau[j]] = true;
    }
    m.col_map = tau;
    m.row_map = rows_for(tau);
    std::vector<bool> taken(k_, false);
    for (int r : m.row_map)
      if (r >= 0) taken[r] = true;
    for (int i = 0; i < k_; ++i) {
      if (m.row_map[i] >= 0) continue;
      int best_r = -1, best_diff = k_ + 1;
      for (int r = 0; r < k_; ++r) {
        if (taken[r]) continue;
        int diff = 0;
        for (int j = 0; j < k_; ++j) diff += !(emb_.values[i][j] == comp_.at(r, tau[j]));
        if (diff < best_diff) best_diff = diff, best_r = r;
      }
      std::ostringstream os;
      std::string label = i < int(emb_.row_labels.size()) ? emb_.row_labels[i] : "row " + std::to_string(i + 1);
      if (best_r < 0) {
        os << emb_.id << ": " << label << " has no computed counterpart";
        m.bad_row = i;
      } else {
        for (int j = 0; j < k_; ++j)
          if (!(emb_.values[i][j] == comp_.at(best_r, tau[j]))) {
            m.bad_row = i;
            m.bad_col = j;
            os << emb_.id << ": " << label << ", class " << j + 1 << ": table has " << emb_.values[i][j].str()
               << ", nearest computed row " << best_r + 1 << " has " << comp_.at(best_r, tau[j]).str() << " ("
               << best_diff << " differing cell" << (best_diff == 1 ? "" : "s") << ")";
            break;
          }
      }
      m.report = os.str();
      return;
    }
    m.report = emb_.id + ": no consistent column permutation";
  }
};

}  // namespace detail

/// Finds row and column permutations with computed[row_map[i]][col_map[j]]
/// == embedded[i][j]. Anchored columns are fixed; the rest are searched among
/// columns with equal class size and equal value multiset, pruned by
/// requiring equal multisets of row prefixes.
inline TableMatch match_tables(const CharacterTable& computed, const EmbeddedCharacterTable& embedded,
                               const std::vector<std::optional<int>>& anchors = {}) {
  TableMatch m;
  if (computed.k() != embedded.k()) {
    m.report = embedded.id + ": " + std::to_string(embedded.k()) + " classes, computed table has " +
               std::to_string(computed.k());
    return m;
  }
  if (computed.group_order != embedded.group_order) {
    m.report = embedded.id + ": group order " + embedded.group_order.get_str() + ", computed " +
               computed.group_order.get_str();
    return m;
  }
  return detail::TableMatcher(computed, embedded, anchors).run();
}

/// Column anchors from the fixture's representative words.
inline std::vector<std::optional<int>> word_anchors(const EmbeddedCharacterTable& e, const GroupTable& g,
                                                   const ClassData& cd) {
  std::vector<std::optional<int>> a(e.k());
  if (!e.words) return a;
  for (int j = 0; j < e.k(); ++j) a[j] = class_of_word((*e.words)[j], g, cd);
  return a;
}

// ---------------------------------------------------------------------------
// Check reports

struct CheckEntry {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct CheckReport {
  std::vector<CheckEntry> entries;
  bool passed() const {
    return std::all_of(entries.begin(), entries.end(), [](const CheckEntry& e) { return e.passed; });
  }
  void add(std::string name, bool ok, std::string detail = {}) {
    entries.push_back({std::move(name), ok, std::move(detail)});
  }
};

inline std::string join_orders(const std::vector<NormalSubgroupRecord>& ns) {
  std::string s;
  for (const auto& r : ns)
    if (r.is_proper_nontrivial) s += (s.empty() ? "" : ", ") + r.order.get_str();
  return "{" + s + "}";
}

/// Property checks on the embedded three-qubit table.
inline CheckReport verify_embedded_c3(const std::filesystem::path& dir = data_dir()) {
  CheckReport rep;
  auto e = load_character_table("c3_chartab", dir);
  const BigInt G = e.group_order;

  BigInt sq = 0;
  bool degrees_ok = true;
  for (const auto& row : e.values) {
    degrees_ok = degrees_ok && row[0].is_rational_integer();
    if (degrees_ok) sq += row[0].rational_value().num() * row[0].rational_value().num();
  }
  rep.add("sum of squared degrees", degrees_ok && sq == G, sq.get_str() + " vs " + G.get_str());

  std::vector<BigInt> sizes;
  try {
    sizes = class_sizes_from_columns(e.values, G);
    rep.add("class sizes from columns", true, std::to_string(sizes.size()) + " positive integers summing to " + G.get_str());
  } catch (const Error& err) {
    rep.add("class sizes from columns", false, err.what());
    return rep;
  }
  rep.add("class 2 size", sizes[1] == 63, sizes[1].get_str());

  CharacterTable t = e.table();
  auto orth = verify_orthogonality(t);
  rep.add("orthogonality", orth.passed(),
          orth.passed() ? std::to_string(orth.row_checks + orth.column_checks) + " relations"
                        : orth.failures.front().describe());

  int linear = 0;
  for (int i = 0; i < t.k(); ++i) linear += t.degree(i) == 1;
  rep.add("degree-1 rows", linear == 1, std::to_string(linear));

  auto ns = normal_subgroups(t);
  std::vector<const NormalSubgroupRecord*> proper;
  for (const auto& r : ns)
    if (r.is_proper_nontrivial) proper.push_back(&r);
  bool ns_ok = proper.size() == 1 && proper[0]->order == 64 && proper[0]->classes == std::vector<int>{0, 1};
  rep.add("proper nontrivial normal subgroups", ns_ok, join_orders(ns));

  rep.add("integer valued", integer_valued(t));
  return rep;
}

}  // namespace cliffchar

#endif  // CLIFFCHAR_PAPERDATA_HPP
