#include <cliffchar/cliffchar.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <sstream>
#include <thread>

using namespace cliffchar;
using json = nlohmann::json;

namespace {

constexpr int kJsonVersion = 1;

struct Config {
  int n = 1;
  int m = 1;
  std::string format = "text";
  std::size_t cap = kDefaultElementCap;
  std::uint64_t prime = 0;
  std::string data;
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  bool abelianization_only = false;
  bool gap = false;
};

void progress(const std::string& msg) { std::cerr << "[cliffchar] " << msg << std::endl; }

std::filesystem::path dir(const Config& c) { return c.data.empty() ? data_dir() : std::filesystem::path(c.data); }

json str_vec(const std::vector<BigInt>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(x.get_str());
  return a;
}

json table_json(const CharacterTable& t, const std::vector<std::string>& labels = {}) {
  json rows = json::array();
  for (int i = 0; i < t.k(); ++i) {
    json vals = json::array();
    for (const auto& v : t.values[i]) vals.push_back(v.str());
    rows.push_back({{"label", i < int(labels.size()) ? labels[i] : "chi_" + std::to_string(i + 1)}, {"values", vals}});
  }
  json j = {{"group_order", t.group_order.get_str()}, {"class_sizes", str_vec(t.class_sizes)}, {"rows", rows},
            {"source", t.source}};
  if (t.prime) j["prime"] = *t.prime;
  return j;
}

void print_table_text(std::ostream& os, const CharacterTable& t) {
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> head{"size"};
  for (const auto& s : t.class_sizes) head.push_back(s.get_str());
  cells.push_back(head);
  for (int i = 0; i < t.k(); ++i) {
    std::vector<std::string> r{"chi_" + std::to_string(i + 1)};
    for (const auto& v : t.values[i]) r.push_back(v.str());
    cells.push_back(r);
  }
  std::vector<std::size_t> w(cells[0].size(), 0);
  for (const auto& r : cells)
    for (std::size_t j = 0; j < r.size(); ++j) w[j] = std::max(w[j], r[j].size());
  for (const auto& r : cells) {
    for (std::size_t j = 0; j < r.size(); ++j) {
      os << std::string(w[j] - r[j].size() + (j ? 1 : 0), ' ') << r[j];
    }
    os << '\n';
  }
}

void emit_json(const std::string& command, json body) {
  body["version"] = kJsonVersion;
  body["command"] = command;
  std::cout << body.dump(2) << '\n';
}

// enumerate -> classes -> Dixon -> match against the embedded table.
struct Pipeline {
  GroupTable g;
  ClassData cd;
  CharacterTable t;
  EmbeddedCharacterTable embedded;
  TableMatch match;
};

Pipeline run_pipeline(const Config& c) {
  if (c.n < 1 || c.n > 2)
    throw Error("n=" + std::to_string(c.n) + " cannot be enumerated here; use `verify-c3` for the embedded three-qubit table");
  Pipeline p;
  progress("enumerating C_" + std::to_string(c.n));
  p.g = enumerate_clifford(c.n, c.cap);
  progress(std::to_string(p.g.size()) + " elements; computing classes");
  p.cd = ClassData(p.g);
  progress(std::to_string(p.cd.k()) + " classes; computing character table");
  DixonOptions opts;
  if (c.prime) opts.prime = c.prime;
  p.t = dixon_character_table(p.cd, opts);
  p.embedded = load_character_table(c.n == 1 ? "s4_chartab" : "c2_chartab", dir(c));
  p.match = match_tables(p.t, p.embedded, word_anchors(p.embedded, p.g, p.cd));
  return p;
}

std::vector<BigInt> reorder(const std::vector<BigInt>& v, const std::vector<int>& row_map) {
  std::vector<BigInt> out;
  for (int r : row_map) out.push_back(v[r]);
  return out;
}

// --------------------------------------------------------------------------

int cmd_order(const Config& c) {
  auto o = group_order_formula(c.n);
  if (c.format == "json")
    emit_json("order", {{"n", c.n}, {"order", o.get_str()}});
  else if (c.format == "csv")
    std::cout << "n,order\n" << c.n << ',' << o.get_str() << '\n';
  else
    std::cout << o.get_str() << '\n';
  return 0;
}

int cmd_enumerate(const Config& c) {
  progress("enumerating C_" + std::to_string(c.n));
  auto g = enumerate_clifford(c.n, c.cap);
  int max_order = *std::max_element(g.orders().begin(), g.orders().end());
  if (c.format == "json")
    emit_json("enumerate", {{"n", c.n}, {"size", g.size()}, {"exponent", g.exponent()}, {"max_element_order", max_order}});
  else if (c.format == "csv")
    std::cout << "n,size,exponent,max_element_order\n" << c.n << ',' << g.size() << ',' << g.exponent() << ',' << max_order << '\n';
  else
    std::cout << "elements: " << g.size() << "\nexponent: " << g.exponent() << "\nmax element order: " << max_order << '\n';
  return 0;
}

int cmd_classes(const Config& c) {
  progress("enumerating C_" + std::to_string(c.n));
  auto g = enumerate_clifford(c.n, c.cap);
  ClassData cd(g);
  if (c.format == "json") {
    json rows = json::array();
    for (int k = 0; k < cd.k(); ++k)
      rows.push_back({{"index", k + 1}, {"size", cd.size(k)}, {"word", g.word_text(cd.rep(k))}, {"order", cd.rep_order(k)}});
    emit_json("classes", {{"n", c.n}, {"classes", rows}});
  } else if (c.format == "csv") {
    write_class_report(std::cout, cd);
  } else {
    std::cout << cd.k() << " classes\n";
    for (int k = 0; k < cd.k(); ++k)
      std::cout << "  " << k + 1 << ": size " << cd.size(k) << ", order " << cd.rep_order(k) << ", rep " << g.word_text(cd.rep(k)) << '\n';
  }
  return 0;
}

int cmd_chartable(const Config& c) {
  auto p = run_pipeline(c);
  std::string verdict = p.match.matched ? "MATCH with embedded table " + p.embedded.id : "MISMATCH: " + p.match.report;
  if (c.format == "json") {
    json j = table_json(p.t);
    j["n"] = c.n;
    j["match"] = {{"table", p.embedded.id}, {"matched", p.match.matched}, {"report", p.match.report}};
    if (p.match.matched) j["match"]["row_map"] = p.match.row_map, j["match"]["col_map"] = p.match.col_map;
    emit_json("chartable", j);
  } else if (c.format == "csv") {
    write_character_table_csv(std::cout, p.t);
    std::cerr << verdict << '\n';
  } else {
    std::cout << "C_" << c.n << ": " << p.t.k() << " classes, prime " << *p.t.prime << '\n';
    print_table_text(std::cout, p.t);
    std::cout << verdict << '\n';
  }
  return p.match.matched ? 0 : 1;
}

int cmd_decompose(const Config& c) {
  if (c.m < 1) throw Error("--m must be >= 1");
  if (c.n == 3 && c.m > 5) throw Error("n=3 decompositions are limited to m <= 5");
  if (c.n > 3) throw Error("no character table is available for n=" + std::to_string(c.n));

  CharacterTable t;
  ClassFunction chi;
  std::vector<int> row_map;  // embedded row -> table row
  std::vector<std::string> labels;
  std::optional<std::vector<BigInt>> printed;
  std::vector<SparseDecompEntry> sparse;

  if (c.n <= 2) {
    auto p = run_pipeline(c);
    if (!p.match.matched) throw Error("computed table does not match: " + p.match.report);
    t = p.t;
    chi = adjoint_character(p.g, p.cd);
    row_map = p.match.row_map;
    labels = p.embedded.row_labels;
    auto dense = load_dense_decomp(c.n == 1 ? "c1_decomp" : "c2_decomp", dir(c));
    if (dense.count(c.m)) printed = dense[c.m];
  } else {
    auto e = load_character_table("c3_chartab", dir(c));
    t = e.table();
    progress("adjoint character taken as chi_1 + chi_10 of the embedded table");
    chi = adjoint_character_from_table(t, {0, 9});
    for (int i = 0; i < t.k(); ++i) row_map.push_back(i);
    labels = e.row_labels;
    sparse = load_c3_decomp(dir(c));
    if (std::any_of(sparse.begin(), sparse.end(), [&](const auto& s) { return s.m == c.m; }))
      printed = dense_from_sparse(sparse, c.m, t.k());
  }

  auto d = decompose_power(chi, c.m, t);
  DecompositionVector ordered{c.m, reorder(d.v, row_map)};
  BigInt dim = d.dimension(t), want = 1;
  want <<= unsigned(2 * c.n * c.m);

  std::vector<std::string> diffs;
  if (printed)
    for (std::size_t i = 0; i < ordered.v.size(); ++i)
      if (ordered.v[i] != (*printed)[i])
        diffs.push_back(labels[i] + ": printed " + (*printed)[i].get_str() + ", computed " + ordered.v[i].get_str());

  std::vector<std::string> notes;
  for (const auto& s : sparse)
    if (s.m == c.m && !s.note.empty()) {
      const BigInt& computed = ordered.v[s.row - 1];
      notes.push_back("chi_" + std::to_string(s.row) + " is printed as a run-on after chi_40; reading coefficient " +
                      s.coefficient.get_str() + " is " + (computed == s.coefficient ? "confirmed" : "refuted") +
                      ", reading 18 is " + (computed == 18 ? "confirmed" : "refuted") + "; computed " + computed.get_str());
    }

  bool ok = dim == want && diffs.empty();
  if (c.format == "json") {
    json j = {{"n", c.n}, {"m", c.m}, {"multiplicities", str_vec(ordered.v)}, {"labels", labels},
              {"dimension", dim.get_str()}, {"expected_dimension", want.get_str()}, {"published", printed.has_value()},
              {"differences", diffs}, {"notes", notes}};
    emit_json("decompose", j);
  } else if (c.format == "csv") {
    write_decomposition_csv(std::cout, {ordered});
  } else {
    std::cout << decomposition_text(ordered, labels) << '\n';
    std::cout << "(";
    for (std::size_t i = 0; i < ordered.v.size(); ++i) std::cout << (i ? ", " : "") << ordered.v[i].get_str();
    std::cout << ")\n";
    std::cout << "dimension " << dim.get_str() << (dim == want ? " = " : " != ") << want.get_str() << '\n';
    if (printed) {
      if (diffs.empty())
        std::cout << "matches the published v_" << c.m << '\n';
      for (const auto& s : diffs) std::cout << "DIFF " << s << '\n';
    }
    for (const auto& s : notes) std::cout << "note: " << s << '\n';
  }
  return ok ? 0 : 1;
}

int cmd_abelianize(const Config& c) {
  auto a = abelianization(c.n);
  if (c.format == "json")
    emit_json("abelianize", {{"n", c.n}, {"invariant_factors", str_vec(a.invariant_factors)}, {"free_rank", a.free_rank},
                             {"order", a.torsion_order().get_str()}});
  else if (c.format == "csv")
    std::cout << "n,invariant_factors,free_rank\n" << c.n << ',' << [&] {
      std::string s;
      for (const auto& d : a.invariant_factors) s += (s.empty() ? "" : " ") + d.get_str();
      return s;
    }() << ',' << a.free_rank << '\n';
  else
    std::cout << "abelianization of C_" << c.n << ": " << a.str() << '\n';
  return 0;
}

void print_report(const std::string& title, const CheckReport& rep, const Config& c, const std::string& command) {
  if (c.format == "json") {
    json entries = json::array();
    for (const auto& e : rep.entries) entries.push_back({{"check", e.name}, {"passed", e.passed}, {"detail", e.detail}});
    emit_json(command, {{"n", c.n}, {"passed", rep.passed()}, {"checks", entries}});
    return;
  }
  if (c.format == "csv") {
    std::cout << "check,passed,detail\n";
    for (const auto& e : rep.entries) std::cout << e.name << ',' << (e.passed ? "true" : "false") << ",\"" << e.detail << "\"\n";
    return;
  }
  std::cout << title << '\n';
  for (const auto& e : rep.entries)
    std::cout << "  [" << (e.passed ? "PASS" : "FAIL") << "] " << e.name << (e.detail.empty() ? "" : ": " + e.detail) << '\n';
  std::cout << (rep.passed() ? "all checks passed" : "some checks FAILED") << '\n';
}

CheckReport abelian_checks(int n) {
  CheckReport rep;
  auto a = abelianization(n);
  BigInt expected = n <= 2 ? 2 : 1;
  rep.add("abelianization", a.free_rank == 0 && a.torsion_order() == expected, a.str());
  return rep;
}

int cmd_verify(const Config& c) {
  if (c.abelianization_only) {
    auto rep = abelian_checks(c.n);
    print_report("C_" + std::to_string(c.n) + " abelianization", rep, c, "verify");
    return rep.passed() ? 0 : 1;
  }
  if (c.n < 1 || c.n > 3) throw Error("full verification needs 1 <= n <= 3; use --abelianization-only for larger n");
  CheckReport rep;
  progress("verifying relators");
  auto rel = verify_relators(c.n);
  rep.add("relators", rel.passed(), std::to_string(rel.checks.size() - rel.failures()) + "/" + std::to_string(rel.checks.size()) + " hold");
  for (const auto& e : abelian_checks(c.n).entries) rep.entries.push_back(e);

  if (c.n <= 2) {
    auto p = run_pipeline(c);
    rep.add("character table", p.match.matched, p.match.matched ? "matches " + p.embedded.id : p.match.report);
    auto orth = verify_orthogonality(p.t);
    rep.add("orthogonality", orth.passed());
    auto ns = normal_subgroups(p.t);
    std::vector<BigInt> proper;
    for (const auto& r : ns)
      if (r.is_proper_nontrivial) proper.push_back(r.order);
    std::vector<BigInt> want = c.n == 1 ? std::vector<BigInt>{4, 12} : std::vector<BigInt>{16, 5760};
    rep.add("proper nontrivial normal subgroups", proper == want, join_orders(ns));
    try {
      sgn_character(c.n);
      rep.add("sign character", true, "-1 on every generator");
    } catch (const Error& e) {
      rep.add("sign character", false, e.what());
    }
    int linear = 0;
    for (int i = 0; i < p.t.k(); ++i) linear += p.t.degree(i) == 1;
    rep.add("degree-1 rows equal abelianization order", BigInt(linear) == abelianization(c.n).torsion_order(), std::to_string(linear));
    rep.add("integer valued", integer_valued(p.t));
    rep.add("adjoint representation faithful", faithfulness_check(adjoint_character(p.g, p.cd)));
  } else {
    for (const auto& e : verify_embedded_c3(dir(c)).entries) rep.entries.push_back(e);
    bool rejected = false;
    try {
      sgn_character(3);
    } catch (const Error&) {
      rejected = true;
    }
    rep.add("no sign character", rejected);
  }
  print_report("C_" + std::to_string(c.n) + " verification", rep, c, "verify");
  return rep.passed() ? 0 : 1;
}

int cmd_normal_subgroups(const Config& c) {
  CharacterTable t;
  if (c.n <= 2)
    t = run_pipeline(c).t;
  else if (c.n == 3)
    t = load_character_table("c3_chartab", dir(c)).table();
  else
    throw Error("no character table is available for n=" + std::to_string(c.n));
  auto ns = normal_subgroups(t);
  if (c.format == "json") {
    json a = json::array();
    for (const auto& r : ns) {
      std::vector<int> cls;
      for (int x : r.classes) cls.push_back(x + 1);
      a.push_back({{"order", r.order.get_str()}, {"classes", cls}, {"proper_nontrivial", r.is_proper_nontrivial}});
    }
    emit_json("normal-subgroups", {{"n", c.n}, {"normal_subgroups", a}});
    return 0;
  }
  if (c.format == "csv") std::cout << "order,classes,proper_nontrivial\n";
  for (const auto& r : ns) {
    std::string cls;
    for (int x : r.classes) cls += (cls.empty() ? "" : " ") + std::to_string(x + 1);
    if (c.format == "csv")
      std::cout << r.order.get_str() << ',' << cls << ',' << (r.is_proper_nontrivial ? "true" : "false") << '\n';
    else
      std::cout << "order " << r.order.get_str() << (r.is_proper_nontrivial ? " (proper)" : "") << ": classes " << cls << '\n';
  }
  return 0;
}

int cmd_export_presentation(const Config& c) {
  auto p = build_presentation(c.n);
  if (c.gap)
    std::cout << gap_fragment(p);
  else
    write_presentation(std::cout, p);
  return 0;
}

int cmd_verify_c3(const Config& c) {
  auto rep = verify_embedded_c3(dir(c));
  print_report("embedded C_3 character table", rep, c, "verify-c3");
  return rep.passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Character tables of Clifford groups"};
  app.require_subcommand(1);
  Config c;

  auto add_common = [&](CLI::App* sub, bool needs_n = true) {
    if (needs_n) sub->add_option("--n", c.n, "number of qubits")->required()->check(CLI::PositiveNumber);
    sub->add_option("--format", c.format, "output format")->check(CLI::IsMember({"text", "csv", "json"}));
    sub->add_option("--data-dir", c.data, "fixture directory (default $CLIFFCHAR_DATA_DIR or the build-time path)");
    sub->add_option("--threads", c.threads, "worker cap")->check(CLI::PositiveNumber);
    return sub;
  };
  auto add_cap = [&](CLI::App* sub) { sub->add_option("--cap", c.cap, "element cap for enumeration")->check(CLI::PositiveNumber); };
  auto add_prime = [&](CLI::App* sub) { sub->add_option("--prime", c.prime, "override the Dixon prime"); };

  std::map<std::string, std::function<int(const Config&)>> handlers = {
      {"order", cmd_order},
      {"enumerate", cmd_enumerate},
      {"classes", cmd_classes},
      {"chartable", cmd_chartable},
      {"decompose", cmd_decompose},
      {"abelianize", cmd_abelianize},
      {"verify", cmd_verify},
      {"normal-subgroups", cmd_normal_subgroups},
      {"export-presentation", cmd_export_presentation},
      {"verify-c3", cmd_verify_c3},
  };

  add_common(app.add_subcommand("order", "print |C_n|"));
  add_cap(add_common(app.add_subcommand("enumerate", "enumerate C_n by breadth-first closure")));
  add_cap(add_common(app.add_subcommand("classes", "conjugacy classes of C_n")));
  auto* chartable = add_common(app.add_subcommand("chartable", "character table of C_n (n <= 2)"));
  add_cap(chartable);
  add_prime(chartable);
  auto* decompose = add_common(app.add_subcommand("decompose", "decompose the m-th tensor power of the adjoint representation"));
  decompose->add_option("--m", c.m, "tensor power")->required()->check(CLI::PositiveNumber);
  add_cap(decompose);
  add_prime(decompose);
  add_common(app.add_subcommand("abelianize", "abelianization via Smith normal form"));
  auto* verify = add_common(app.add_subcommand("verify", "relators, abelianization, normal subgroups and table checks"));
  verify->add_flag("--abelianization-only", c.abelianization_only, "only compute the abelianization");
  add_cap(verify);
  add_prime(verify);
  auto* ns = add_common(app.add_subcommand("normal-subgroups", "normal subgroups from character kernels"));
  add_cap(ns);
  add_prime(ns);
  auto* ex = add_common(app.add_subcommand("export-presentation", "write the presentation relators"));
  ex->add_flag("--gap", c.gap, "emit GAP input instead of the plain word format");
  add_common(app.add_subcommand("verify-c3", "property checks on the embedded three-qubit table"), false);

  CLI11_PARSE(app, argc, argv);
  try {
    for (auto* sub : app.get_subcommands()) return handlers.at(sub->get_name())(c);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
