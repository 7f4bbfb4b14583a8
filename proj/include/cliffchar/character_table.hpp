#ifndef CLIFFCHAR_CHARACTER_TABLE_HPP
#define CLIFFCHAR_CHARACTER_TABLE_HPP

#include "cyclotomic.hpp"

#include <algorithm>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace cliffchar {

/// Irreducible characters (rows) evaluated on conjugacy classes (columns).
struct CharacterTable {
  std::vector<std::vector<Cyclotomic>> values;
  std::vector<BigInt> class_sizes;
  BigInt group_order;
  /// "computed" or "embedded:<table id>".
  std::string source;
  /// GF(p) prime used by the Dixon computation, when computed.
  std::optional<std::uint64_t> prime;

  int k() const { return int(values.size()); }
  const Cyclotomic& at(int row, int col) const { return values[row][col]; }

  BigInt degree(int row) const {
    const Cyclotomic& d = values[row][0];
    if (!d.is_rational_integer()) throw Error("degree of row " + std::to_string(row) + " is not an integer");
    return d.rational_value().num();
  }
  std::vector<BigInt> degrees() const {
    std::vector<BigInt> out;
    for (int i = 0; i < k(); ++i) out.push_back(degree(i));
    return out;
  }
};

struct OrthogonalityFailure {
  enum class Kind { Row, Column };
  Kind kind;
  int first;
  int second;
  std::string expected;
  std::string actual;

  std::string describe() const {
    return std::string(kind == Kind::Row ? "row" : "column") + " pair (" + std::to_string(first + 1) + ", " +
           std::to_string(second + 1) + "): expected " + expected + ", got " + actual;
  }
};

struct OrthogonalityReport {
  std::size_t row_checks = 0;
  std::size_t column_checks = 0;
  std::vector<OrthogonalityFailure> failures;
  bool passed() const { return failures.empty(); }
};

namespace detail {

inline bool table_fits_int64(const CharacterTable& t) {
  for (const auto& row : t.values)
    for (const auto& v : row)
      if (!v.is_rational_integer() || !v.rational_value().is_small()) return false;
  for (const auto& s : t.class_sizes)
    if (!big_fits_i64(s) || abs(s) > BigInt(1L << 40)) return false;
  for (const auto& row : t.values)
    for (const auto& v : row)
      if (std::abs(v.rational_value().small_num()) > (1L << 24)) return false;
  return true;
}

inline std::string i128_str(i128 v) { return big_from_i128(v).get_str(); }

}  // namespace detail

/// Exact first and second orthogonality relations.
inline OrthogonalityReport verify_orthogonality(const CharacterTable& t) {
  OrthogonalityReport rep;
  const int k = t.k();
  if (int(t.class_sizes.size()) != k) throw Error("character table has no class sizes");
  for (const auto& row : t.values)
    if (int(row.size()) != k) throw Error("character table is not square");

  if (detail::table_fits_int64(t)) {
    // Integer-valued: |C| chi chi summed over <= k terms stays far below 2^127.
    std::vector<std::vector<std::int64_t>> v(k, std::vector<std::int64_t>(k));
    for (int i = 0; i < k; ++i)
      for (int c = 0; c < k; ++c) v[i][c] = t.values[i][c].rational_value().small_num();
    std::vector<detail::i128> sizes(k);
    for (int c = 0; c < k; ++c) sizes[c] = detail::big_to_i64(t.class_sizes[c]);
    const BigInt& G = t.group_order;
    for (int i = 0; i < k; ++i)
      for (int j = i; j < k; ++j) {
        detail::i128 s = 0;
        for (int c = 0; c < k; ++c) s += sizes[c] * v[i][c] * v[j][c];
        ++rep.row_checks;
        BigInt want = i == j ? G : BigInt(0);
        if (detail::big_from_i128(s) != want)
          rep.failures.push_back({OrthogonalityFailure::Kind::Row, i, j, want.get_str(), detail::i128_str(s)});
      }
    for (int a = 0; a < k; ++a)
      for (int b = a; b < k; ++b) {
        detail::i128 s = 0;
        for (int i = 0; i < k; ++i) s += detail::i128(v[i][a]) * v[i][b];
        ++rep.column_checks;
        // sum_i chi_i(a) chi_i(b) = delta_ab |G| / |C_a|, compared as s * |C_a| = delta |G|.
        BigInt lhs = detail::big_from_i128(s) * t.class_sizes[a];
        BigInt want = a == b ? G : BigInt(0);
        if (lhs != want) {
          std::string expected = a == b ? mpq_class(G, t.class_sizes[a]).get_str() : "0";
          rep.failures.push_back({OrthogonalityFailure::Kind::Column, a, b, expected, detail::i128_str(s)});
        }
      }
    return rep;
  }

  std::vector<std::vector<Cyclotomic>> conj(k, std::vector<Cyclotomic>(k));
  for (int i = 0; i < k; ++i)
    for (int c = 0; c < k; ++c) conj[i][c] = t.values[i][c].conj();
  for (int i = 0; i < k; ++i)
    for (int j = i; j < k; ++j) {
      Cyclotomic s;
      for (int c = 0; c < k; ++c) s += (t.values[i][c] * conj[j][c]).scaled(Rational(t.class_sizes[c]));
      ++rep.row_checks;
      Cyclotomic want = i == j ? Cyclotomic(Rational(t.group_order)) : Cyclotomic(0);
      if (s != want) rep.failures.push_back({OrthogonalityFailure::Kind::Row, i, j, want.str(), s.str()});
    }
  for (int a = 0; a < k; ++a)
    for (int b = a; b < k; ++b) {
      Cyclotomic s;
      for (int i = 0; i < k; ++i) s += t.values[i][a] * conj[i][b];
      ++rep.column_checks;
      Cyclotomic want = a == b ? Cyclotomic(Rational(mpq_class(t.group_order, t.class_sizes[a]))) : Cyclotomic(0);
      if (s != want) rep.failures.push_back({OrthogonalityFailure::Kind::Column, a, b, want.str(), s.str()});
    }
  return rep;
}

/// |C| = |G| / sum_i |chi_i(C)|^2 for every column. Rejects the table when
/// a size is not a positive integer or the sizes do not sum to |G|.
inline std::vector<BigInt> class_sizes_from_columns(const std::vector<std::vector<Cyclotomic>>& values,
                                                    const BigInt& group_order) {
  const int k = int(values.size());
  std::vector<BigInt> sizes;
  BigInt total = 0;
  for (int c = 0; c < k; ++c) {
    Cyclotomic s;
    for (int i = 0; i < k; ++i) s += values[i][c] * values[i][c].conj();
    if (!s.is_rational() || s.rational_value().sign() <= 0)
      throw Error("column " + std::to_string(c + 1) + ": sum of |chi|^2 is " + s.str() +
                  ", not a positive rational; table is corrupt");
    mpq_class size = mpq_class(group_order) / s.rational_value().to_mpq();
    size.canonicalize();
    if (size.get_den() != 1)
      throw Error("column " + std::to_string(c + 1) + ": derived class size " + size.get_str() +
                  " is not an integer; table is corrupt");
    sizes.push_back(size.get_num());
    total += size.get_num();
  }
  if (total != group_order)
    throw Error("derived class sizes sum to " + total.get_str() + ", not |G| = " + group_order.get_str());
  return sizes;
}

/// Classes on which row i attains its degree.
inline std::vector<int> character_kernel(const CharacterTable& t, int row) {
  std::vector<int> out;
  for (int c = 0; c < t.k(); ++c)
    if (t.values[row][c] == t.values[row][0]) out.push_back(c);
  return out;
}

struct NormalSubgroupRecord {
  std::vector<int> classes;
  BigInt order;
  bool is_proper_nontrivial = false;
};

/// All normal subgroups as unions of classes: the kernels of the
/// irreducible characters closed under pairwise intersection. Sorted by order,
/// then by class set.
inline std::vector<NormalSubgroupRecord> normal_subgroups(const CharacterTable& t) {
  std::set<std::vector<int>> found;
  std::vector<std::vector<int>> work;
  for (int i = 0; i < t.k(); ++i) {
    auto ker = character_kernel(t, i);
    if (found.insert(ker).second) work.push_back(ker);
  }
  // Fixpoint of pairwise intersections.
  for (std::size_t a = 0; a < work.size(); ++a)
    for (std::size_t b = 0; b < a; ++b) {
      std::vector<int> meet;
      std::set_intersection(work[a].begin(), work[a].end(), work[b].begin(), work[b].end(),
                            std::back_inserter(meet));
      if (found.insert(meet).second) work.push_back(meet);
    }
  std::vector<NormalSubgroupRecord> out;
  for (const auto& cls : found) {
    NormalSubgroupRecord r;
    r.classes = cls;
    for (int c : cls) r.order += t.class_sizes[c];
    r.is_proper_nontrivial = r.order != 1 && r.order != t.group_order;
    out.push_back(std::move(r));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.order != b.order) return a.order < b.order;
    return a.classes < b.classes;
  });
  return out;
}

inline bool integer_valued(const CharacterTable& t) {
  for (const auto& row : t.values)
    for (const auto& v : row)
      if (!v.is_rational_integer()) return false;
  return true;
}

// ---------------------------------------------------------------------------
// CSV. Header rows are keyed by their first cell: "size" (class sizes),
// "word" (representative words), "class" (column labels). Every other row is
// a character: label, then one exact value per class. Lines starting with
// '#' are comments.

struct CharacterTableCsv {
  std::vector<std::string> comments;
  std::vector<std::string> row_labels;
  std::vector<std::vector<Cyclotomic>> values;
  std::optional<std::vector<BigInt>> sizes;
  std::optional<std::vector<std::string>> words;
  std::optional<std::vector<std::string>> column_labels;
};

namespace detail {

inline std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> cells;
  std::string cur;
  for (char ch : line) {
    if (ch == ',') {
      cells.push_back(cur);
      cur.clear();
    } else if (ch != '\r') {
      cur += ch;
    }
  }
  cells.push_back(cur);
  return cells;
}

inline std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

}  // namespace detail

inline CharacterTableCsv read_character_table_csv(std::istream& in, int default_conductor = 1) {
  CharacterTableCsv out;
  std::string line;
  int lineno = 0;
  std::size_t width = 0;
  auto check_width = [&](std::size_t w) {
    if (width == 0) width = w;
    if (w != width)
      throw Error("character table CSV line " + std::to_string(lineno) + " has " + std::to_string(w) +
                  " cells, expected " + std::to_string(width));
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line == "\r") continue;
    if (line[0] == '#') {
      out.comments.push_back(detail::trim(line.substr(1)));
      continue;
    }
    auto cells = detail::split_csv_line(line);
    std::string key = detail::trim(cells[0]);
    std::vector<std::string> rest(cells.begin() + 1, cells.end());
    check_width(rest.size());
    try {
      if (key == "size") {
        std::vector<BigInt> sizes;
        for (auto& c : rest) sizes.emplace_back(detail::trim(c));
        out.sizes = std::move(sizes);
      } else if (key == "word") {
        std::vector<std::string> words;
        for (auto& c : rest) words.push_back(detail::trim(c));
        out.words = std::move(words);
      } else if (key == "class") {
        std::vector<std::string> labels;
        for (auto& c : rest) labels.push_back(detail::trim(c));
        out.column_labels = std::move(labels);
      } else {
        std::vector<Cyclotomic> row;
        for (auto& c : rest) row.push_back(Cyclotomic::parse(c, default_conductor));
        out.row_labels.push_back(key);
        out.values.push_back(std::move(row));
      }
    } catch (const std::invalid_argument&) {
      throw Error("character table CSV line " + std::to_string(lineno) + ": malformed integer");
    }
  }
  if (out.values.size() != width)
    throw Error("character table CSV has " + std::to_string(out.values.size()) + " rows and " +
                std::to_string(width) + " columns");
  return out;
}

/// Writes sizes then one row per character; integers print bare.
inline void write_character_table_csv(std::ostream& os, const CharacterTable& t,
                                      const std::vector<std::string>& row_labels = {}) {
  os << "size";
  for (const auto& s : t.class_sizes) os << ',' << s.get_str();
  os << '\n';
  for (int i = 0; i < t.k(); ++i) {
    os << (i < int(row_labels.size()) ? row_labels[i] : "chi_" + std::to_string(i + 1));
    for (const auto& v : t.values[i]) os << ',' << v.str();
    os << '\n';
  }
}

}  // namespace cliffchar

#endif  // CLIFFCHAR_CHARACTER_TABLE_HPP
