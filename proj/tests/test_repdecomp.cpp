#include <cliffchar/dixon.hpp>
#include <cliffchar/paperdata.hpp>
#include <cliffchar/repdecomp.hpp>

#include <gtest/gtest.h>

#include <sstream>

using namespace cliffchar;

namespace {

struct Pipeline {
  GroupTable g;
  ClassData cd;
  CharacterTable t;
  ClassFunction chi;
  explicit Pipeline(int n) : g(enumerate_clifford(n)), cd(g), t(dixon_character_table(cd)), chi(adjoint_character(g, cd)) {}
};

const Pipeline& c1() {
  static const Pipeline s(1);
  return s;
}
const Pipeline& c2() {
  static const Pipeline s(2);
  return s;
}

std::vector<BigInt> big(std::initializer_list<long> xs) {
  std::vector<BigInt> v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

// Computed decomposition in the embedded table's row order.
std::vector<BigInt> in_table_order(const DecompositionVector& d, const TableMatch& m) {
  std::vector<BigInt> v;
  for (int r : m.row_map) v.push_back(d.v[r]);
  return v;
}

}  // namespace

TEST(Adjoint, C1Values) {
  const auto& s = c1();
  std::vector<long> got;
  for (auto w : {"", "h1", "p1^2", "h1 p1", "p1"}) got.push_back(s.chi[class_of_word(w, s.g, s.cd)].rational_value().num().get_si());
  EXPECT_EQ(got, (std::vector<long>{4, 0, 0, 1, 2}));
}

TEST(Adjoint, IdentityValue) {
  EXPECT_EQ(c1().chi[0], Cyclotomic(4));
  EXPECT_EQ(c2().chi[0], Cyclotomic(16));
  const auto& s = c2();
  EXPECT_EQ(s.chi[class_of_word("p1^2", s.g, s.cd)], Cyclotomic(0));
  for (const auto& v : s.chi.values) {
    EXPECT_TRUE(v.is_rational_integer());
    EXPECT_GE(v.rational_value().sign(), 0);
  }
}

TEST(Adjoint, FromTable) {
  auto e = load_character_table("c3_chartab");
  auto t = e.table();
  EXPECT_EQ(adjoint_character_from_table(t, {0, 9})[0], Cyclotomic(64));
  auto one = adjoint_character_from_table(t, {0});
  for (const auto& v : one.values) EXPECT_EQ(v, Cyclotomic(1));
  EXPECT_THROW(adjoint_character_from_table(t, {67}), Error);
}

TEST(Decompose, C1) {
  const auto& s = c1();
  auto e = load_character_table("s4_chartab");
  std::vector<std::optional<int>> anchors;
  for (const auto& w : *e.words) anchors.push_back(class_of_word(w, s.g, s.cd));
  auto m = match_tables(s.t, e, anchors);
  ASSERT_TRUE(m.matched) << m.report;
  EXPECT_EQ(in_table_order(decompose_power(s.chi, 1, s.t), m), big({1, 0, 0, 1, 0}));
  EXPECT_EQ(in_table_order(decompose_power(s.chi, 4, s.t), m), big({15, 28, 21, 36, 7}));
  auto printed = load_dense_decomp("c1_decomp");
  for (const auto& [mm, v] : printed) EXPECT_EQ(in_table_order(decompose_power(s.chi, mm, s.t), m), v) << mm;
}

TEST(Decompose, Properties) {
  for (const Pipeline* s : {&c1(), &c2()}) {
    const int n = s->g.n_qubits();
    for (int m = 1; m <= (n == 1 ? 6 : 5); ++m) {
      auto d = decompose_power(s->chi, m, s->t);
      BigInt want = 1;
      want <<= unsigned(2 * n * m);
      EXPECT_EQ(d.dimension(s->t), want);
      EXPECT_EQ(reconstruct(d, s->t), s->chi.pow(m));
    }
    auto d1 = decompose_power(s->chi, 1, s->t);
    BigInt norm = 0;
    for (const auto& x : d1.v) norm += x * x;
    EXPECT_EQ(norm, 2);
  }
}

TEST(Decompose, InconsistentInputs) {
  const auto& s = c1();
  ClassFunction bad = s.chi;
  bad.values[1] += 1;
  EXPECT_THROW(decompose(bad, s.t), Error);
  EXPECT_THROW(decompose_power(s.chi, 0, s.t), Error);
}

TEST(Recursion, C1) {
  EXPECT_TRUE(c1_recursion_check(big({1, 0, 0, 1, 0}), big({2, 1, 1, 3, 0})));
  EXPECT_TRUE(c1_recursion_check(big({51, 120, 85, 136, 35}), big({187, 496, 341, 528, 155})));
  EXPECT_FALSE(c1_recursion_check(big({0, 0, 0, 0, 0}), big({1, 0, 0, 0, 0})));
}

TEST(Faithful, Checks) {
  EXPECT_TRUE(faithfulness_check(c1().chi));
  EXPECT_TRUE(faithfulness_check(c2().chi));
  ClassFunction trivial{std::vector<Cyclotomic>(5, Cyclotomic(1))};
  EXPECT_FALSE(faithfulness_check(trivial));
}

TEST(Output, TextAndCsv) {
  DecompositionVector d{2, big({2, 0, 1})};
  EXPECT_EQ(decomposition_text(d), "v_2 = 2*chi_1 + chi_3");
  std::ostringstream os;
  write_decomposition_csv(os, {d});
  EXPECT_EQ(os.str(), "m,row,multiplicity\n2,1,2\n2,2,0\n2,3,1\n");
}
