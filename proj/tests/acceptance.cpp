#include <cliffchar/cliffchar.hpp>

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <memory>
#include <set>
#include <sstream>

using namespace cliffchar;

namespace {

struct Computed {
  GroupTable g;
  ClassData cd;
  CharacterTable t;
  EmbeddedCharacterTable e;
  TableMatch match;
  ClassFunction chi;
};

const Computed& computed(int n) {
  static std::map<int, std::unique_ptr<Computed>> cache;
  auto& slot = cache[n];
  if (slot) return *slot;
  slot = std::make_unique<Computed>();
  Computed& c = *slot;
  c.g = enumerate_clifford(n);
  c.cd = ClassData(c.g);
  c.t = dixon_character_table(c.cd);
  c.e = load_character_table(n == 1 ? "s4_chartab" : "c2_chartab");
  c.match = match_tables(c.t, c.e, word_anchors(c.e, c.g, c.cd));
  c.chi = adjoint_character(c.g, c.cd);
  return c;
}

std::vector<BigInt> reordered(const DecompositionVector& d, const std::vector<int>& row_map) {
  std::vector<BigInt> v;
  for (int r : row_map) v.push_back(d.v[r]);
  return v;
}

std::string vec_str(const std::vector<BigInt>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].get_str();
  return s + ")";
}

struct Result {
  bool pass = true;
  std::vector<std::string> notes;
  void check(bool ok, const std::string& what) {
    if (!ok) pass = false;
    notes.push_back((ok ? "ok: " : "FAILED: ") + what);
  }
};

// ---------------------------------------------------------------------------

Result order_formula() {
  Result r;
  const std::vector<std::string> want = {"24", "11520", "92897280", "12128668876800", "25410822678459187200"};
  auto table = load_order_table();
  for (int n = 1; n <= 5; ++n) {
    auto o = group_order_formula(n).get_str();
    r.check(o == want[n - 1] && table.at(n).get_str() == o, "|C_" + std::to_string(n) + "| = " + o);
  }
  return r;
}

Result enumeration() {
  Result r;
  r.check(bfs_closure({{"h1", gen_hadamard(1, 1)}, {"p1", gen_phase(1, 1)}}).size() == 24, "<H,P> has 24 elements");
  r.check(computed(2).g.size() == 11520, "five two-qubit generators close to 11520 elements");
  return r;
}

Result presentation() {
  Result r;
  for (int n = 1; n <= 3; ++n) {
    auto rep = verify_relators(n);
    r.check(rep.passed(), "n=" + std::to_string(n) + ": " + std::to_string(rep.checks.size()) + " relators, " +
                              std::to_string(rep.failures()) + " failures");
  }
  return r;
}

Result s4_identification() {
  Result r;
  const auto& c = computed(1);
  r.check(c.match.matched, "C_1 table equals the S_4 table" + (c.match.report.empty() ? "" : ": " + c.match.report));
  if (!c.match.matched) return r;
  auto printed = load_dense_decomp("c1_decomp");
  std::vector<std::vector<BigInt>> vs;
  for (int m = 1; m <= 6; ++m) {
    auto v = reordered(decompose_power(c.chi, m, c.t), c.match.row_map);
    r.check(printed.count(m) && printed.at(m) == v, "v_" + std::to_string(m) + " = " + vec_str(v));
    vs.push_back(v);
  }
  for (int m = 1; m <= 5; ++m)
    r.check(c1_recursion_check(vs[m - 1], vs[m]), "recursion v_" + std::to_string(m) + " -> v_" + std::to_string(m + 1));
  return r;
}

Result c2_classes() {
  Result r;
  const auto& c = computed(2);
  r.check(c.cd.k() == 21, std::to_string(c.cd.k()) + " classes");
  auto recs = load_c2_classes();
  std::multiset<BigInt> got(c.cd.sizes().begin(), c.cd.sizes().end()), want;
  for (const auto& rec : recs) want.insert(rec.size);
  r.check(got == want, "class size multiset equals the printed one");
  std::set<int> hit;
  for (const auto& rec : recs) {
    int k = class_of_word(rec.word, c.g, c.cd);
    hit.insert(k);
    if (BigInt(static_cast<unsigned long>(c.cd.size(k))) != rec.size)
      r.check(false, "class " + std::to_string(rec.label) + " word '" + rec.word + "' lands in a class of size " +
                         std::to_string(c.cd.size(k)));
  }
  r.check(hit.size() == 21, "representative words hit " + std::to_string(hit.size()) + " distinct classes");
  return r;
}

Result c2_chartab() {
  Result r;
  const auto& c = computed(2);
  r.check(c.match.matched, "Dixon table (prime " + std::to_string(*c.t.prime) + ") matches c2_chartab" + (c.match.report.empty() ? "" : ": " + c.match.report));
  auto p2 = dixon_prime(c.cd.exponent(), c.t.group_order, *c.t.prime);
  auto other = dixon_character_table(c.cd, {p2});
  r.check(other.values == c.t.values, "rerun with prime " + std::to_string(p2) + " gives the identical table");
  return r;
}

Result c2_structure() {
  Result r;
  const auto& c = computed(2);
  auto ns = normal_subgroups(c.t);
  std::vector<BigInt> proper;
  const NormalSubgroupRecord* n16 = nullptr;
  for (const auto& s : ns)
    if (s.is_proper_nontrivial) {
      proper.push_back(s.order);
      if (s.order == 16) n16 = &s;
    }
  r.check(proper == std::vector<BigInt>{16, 5760}, "proper nontrivial normal subgroups " + join_orders(ns));

  auto pauli = bfs_closure({{"x1", gen_pauli(PauliAxis::X, 1, 2)},
                            {"y1", gen_pauli(PauliAxis::Y, 1, 2)},
                            {"x2", gen_pauli(PauliAxis::X, 2, 2)},
                            {"y2", gen_pauli(PauliAxis::Y, 2, 2)}});
  std::set<int> pc;
  for (const auto& m : pauli.elements()) pc.insert(c.cd.class_of(c.g.id_of(m)));
  r.check(pauli.size() == 16 && n16 && std::set<int>(n16->classes.begin(), n16->classes.end()) == pc,
          "order-16 normal subgroup is the Pauli group (" + std::to_string(pc.size()) + " classes)");

  std::vector<int> linear;
  for (int i = 0; i < c.t.k(); ++i)
    if (c.t.degree(i) == 1) linear.push_back(i);
  r.check(linear.size() == 2, std::to_string(linear.size()) + " degree-1 rows");
  int h1 = class_of_word("h1", c.g, c.cd), p1 = class_of_word("p1", c.g, c.cd), z = class_of_word("z1", c.g, c.cd);
  bool sgn = false;
  for (int i : linear)
    sgn = sgn || (c.t.at(i, h1) == Cyclotomic(-1) && c.t.at(i, p1) == Cyclotomic(-1) && c.t.at(i, z) == Cyclotomic(-1));
  r.check(sgn, "a linear character is -1 on the classes of H_1, P_1, Z");
  return r;
}

Result c2_decompositions() {
  Result r;
  const auto& c = computed(2);
  if (!c.match.matched) {
    r.check(false, "C_2 table did not match");
    return r;
  }
  auto printed = load_dense_decomp("c2_decomp");
  for (int m = 1; m <= 5; ++m) {
    auto v = reordered(decompose_power(c.chi, m, c.t), c.match.row_map);
    r.check(printed.count(m) && printed.at(m) == v, "v_" + std::to_string(m) + " = " + vec_str(v));
  }
  auto v5 = reordered(decompose_power(c.chi, 5, c.t), c.match.row_map);
  std::vector<BigInt> want5 = {219,  28,   750,  245,  525,  385,  567,  1107, 1050, 735, 980,
                               840,  1800, 2076, 1428, 2520, 2920, 4860, 3360, 3780, 4320};
  r.check(v5 == want5, "v_5 literal");
  auto v1 = reordered(decompose(c.chi, c.t), c.match.row_map);
  std::vector<BigInt> e(21, 0);
  e[0] = e[13] = 1;
  r.check(v1 == e, "chi_M = chi_1 + chi_14");
  return r;
}

Result c3_properties() {
  Result r;
  auto rep = verify_embedded_c3();
  for (const auto& e : rep.entries) r.check(e.passed, e.name + (e.detail.empty() ? "" : " (" + e.detail + ")"));
  return r;
}

Result c3_decompositions() {
  Result r;
  auto e = load_character_table("c3_chartab");
  auto t = e.table();
  auto chi = adjoint_character_from_table(t, {0, 9});
  auto sparse = load_c3_decomp();
  BigInt want = 1;
  for (int m = 1; m <= 3; ++m) {
    want *= 64;
    auto d = decompose_power(chi, m, t);
    r.check(d.dimension(t) == want, "sum v_i deg_i = 64^" + std::to_string(m));
    auto printed = dense_from_sparse(sparse, m, t.k());
    std::vector<std::string> diffs;
    for (int i = 0; i < t.k(); ++i)
      if (d.v[i] != printed[i])
        diffs.push_back("chi_" + std::to_string(i + 1) + " printed " + printed[i].get_str() + ", computed " + d.v[i].get_str());
    std::string msg = "v_" + std::to_string(m) + " matches the printed vector";
    for (const auto& s : diffs) msg += "; " + s;
    r.check(diffs.empty(), msg);
    for (const auto& s : sparse)
      if (s.m == m && !s.note.empty()) {
        const BigInt& got = d.v[s.row - 1];
        r.check(got == s.coefficient || got == 18,
                "run-on after chi_40 resolved: chi_" + std::to_string(s.row) + " computed " + got.get_str() +
                    " (reading 18*chi_40 + " + got.get_str() + "*chi_" + std::to_string(s.row) + ")");
      }
  }
  return r;
}

Result abelianization_check() {
  Result r;
  for (int n = 1; n <= 5; ++n) {
    auto a = abelianization(n);
    bool ok = a.free_rank == 0 && (n <= 2 ? a.invariant_factors == std::vector<BigInt>{2} : a.invariant_factors.empty());
    r.check(ok, "n=" + std::to_string(n) + ": " + a.str());
  }
  return r;
}

Result integrality_checks() {
  Result r;
  r.check(integer_valued(computed(1).t), "C_1 table integer valued");
  r.check(integer_valued(computed(2).t), "C_2 table integer valued");
  r.check(integer_valued(load_character_table("c3_chartab").table()), "embedded C_3 table integer valued");
  r.check(faithfulness_check(computed(1).chi), "adjoint kernel trivial for n=1");
  r.check(faithfulness_check(computed(2).chi), "adjoint kernel trivial for n=2");
  return r;
}

bool located(const OrthogonalityReport& rep, int i, int j) {
  for (const auto& f : rep.failures)
    if ((f.kind == OrthogonalityFailure::Kind::Row && (f.first == i || f.second == i)) ||
        (f.kind == OrthogonalityFailure::Kind::Column && (f.first == j || f.second == j)))
      return true;
  return false;
}

Result negative_control() {
  Result r;
  for (int n = 1; n <= 2; ++n) {
    const auto& c = computed(n);
    auto anchors = word_anchors(c.e, c.g, c.cd);
    int missed = 0, cells = 0;
    for (int i = 0; i < c.e.k(); ++i)
      for (int j = 0; j < c.e.k(); ++j) {
        auto e = c.e;
        e.values[i][j] += 1;
        auto m = match_tables(c.t, e, anchors);
        ++cells;
        if (m.matched || m.bad_row != i || m.bad_col != j) ++missed;
      }
    r.check(missed == 0, c.e.id + ": " + std::to_string(cells - missed) + "/" + std::to_string(cells) +
                             " single-cell perturbations rejected by match_tables at the perturbed cell");
  }
  auto e = load_character_table("c3_chartab");
  auto base = e.table();
  int missed = 0, cells = 0;
  for (int i = 0; i < e.k(); ++i)
    for (int j = 0; j < e.k(); ++j) {
      auto t = base;
      t.values[i][j] += 1;
      ++cells;
      auto rep = verify_orthogonality(t);
      if (rep.passed() || !located(rep, i, j)) ++missed;
    }
  r.check(missed == 0, "c3_chartab: " + std::to_string(cells - missed) + "/" + std::to_string(cells) +
                           " single-cell perturbations rejected by orthogonality at the perturbed row or column");
  return r;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Result()>>> criteria = {
      {"order formula", order_formula},
      {"enumeration", enumeration},
      {"presentation relators", presentation},
      {"S_4 identification", s4_identification},
      {"C_2 classes", c2_classes},
      {"C_2 character table", c2_chartab},
      {"C_2 structure", c2_structure},
      {"C_2 decompositions", c2_decompositions},
      {"C_3 embedded table", c3_properties},
      {"C_3 decompositions", c3_decompositions},
      {"abelianization", abelianization_check},
      {"integrality and faithfulness", integrality_checks},
      {"negative control", negative_control},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto start = std::chrono::steady_clock::now();
    Result r;
    try {
      r = criteria[i].second();
    } catch (const std::exception& ex) {
      r.check(false, std::string("exception: ") + ex.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream line;
    line << "criterion " << i + 1 << ": " << (r.pass ? "PASS" : "FAIL") << "  " << criteria[i].first << " ("
         << std::fixed << std::setprecision(2) << secs << " s)";
    std::cout << line.str() << '\n';
    for (const auto& n : r.notes) std::cout << "    " << n << '\n';
    failed += !r.pass;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
  return failed ? 1 : 0;
}
