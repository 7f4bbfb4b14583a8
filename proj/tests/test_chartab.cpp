#include <cliffchar/dixon.hpp>

#include <gtest/gtest.h>

#include <algorithm>
#include <sstream>

using namespace cliffchar;

namespace {

struct Fixture {
  GroupTable g;
  ClassData cd;
  CharacterTable t;
  explicit Fixture(int n) : g(enumerate_clifford(n)), cd(g), t(dixon_character_table(cd)) {}
};

const Fixture& c1() {
  static const Fixture f(1);
  return f;
}
const Fixture& c2() {
  static const Fixture f(2);
  return f;
}

std::vector<long> degrees(const CharacterTable& t) {
  std::vector<long> d;
  for (const auto& x : t.degrees()) d.push_back(x.get_si());
  return d;
}

std::vector<long> proper_orders(const CharacterTable& t) {
  std::vector<long> out;
  for (const auto& r : normal_subgroups(t))
    if (r.is_proper_nontrivial) out.push_back(r.order.get_si());
  return out;
}

}  // namespace

TEST(Dixon, C1) {
  const auto& f = c1();
  EXPECT_EQ(degrees(f.t), (std::vector<long>{1, 1, 2, 3, 3}));
  EXPECT_TRUE(verify_orthogonality(f.t).passed());
  EXPECT_TRUE(integer_valued(f.t));
  std::vector<int> cols;
  for (auto w : {"", "h1", "p1^2", "h1 p1", "p1"}) cols.push_back(class_of_word(w, f.g, f.cd));
  bool found = false;
  for (int i = 0; i < f.t.k(); ++i) {
    std::vector<Cyclotomic> v;
    for (int c : cols) v.push_back(f.t.at(i, c));
    if (v == std::vector<Cyclotomic>{3, 1, -1, 0, -1}) found = true;
  }
  EXPECT_TRUE(found);
  EXPECT_EQ(proper_orders(f.t), (std::vector<long>{4, 12}));
}

TEST(Dixon, C2) {
  const auto& f = c2();
  EXPECT_EQ(degrees(f.t),
            (std::vector<long>{1, 1, 5, 5, 5, 5, 9, 9, 10, 10, 15, 15, 15, 15, 16, 30, 30, 45, 45, 45, 45}));
  auto rep = verify_orthogonality(f.t);
  EXPECT_TRUE(rep.passed());
  EXPECT_EQ(rep.row_checks, 21u * 22u / 2u);
  EXPECT_TRUE(integer_valued(f.t));
  EXPECT_EQ(proper_orders(f.t), (std::vector<long>{16, 5760}));
  int c2col = -1, c16col = -1;
  for (int c = 0; c < f.cd.k(); ++c) {
    if (f.cd.size(c) == 640) c2col = c;
    if (f.cd.size(c) == 2304) c16col = c;
  }
  bool found = false;
  for (int i = 0; i < f.t.k(); ++i)
    if (f.t.degree(i) == 16 && f.t.at(i, c2col) == Cyclotomic(-2) && f.t.at(i, c16col) == Cyclotomic(1)) found = true;
  EXPECT_TRUE(found);
}

TEST(Dixon, PrimeIndependent) {
  const auto& f = c2();
  auto p2 = dixon_prime(f.cd.exponent(), BigInt(11520), *f.t.prime);
  auto other = dixon_character_table(f.cd, {p2});
  EXPECT_NE(*other.prime, *f.t.prime);
  EXPECT_EQ(other.values, f.t.values);
}

TEST(Dixon, BadPrime) {
  const auto& f = c1();
  EXPECT_THROW(dixon_character_table(f.cd, {7}), Error);
  EXPECT_THROW(dixon_character_table(f.cd, {10}), Error);
}

TEST(Dixon, Klein) {
  auto k = bfs_closure({{"x1", gen_pauli(PauliAxis::X, 1, 1)}, {"y1", gen_pauli(PauliAxis::Y, 1, 1)}});
  auto t = dixon_character_table(k);
  ASSERT_EQ(t.k(), 4);
  for (const auto& row : t.values)
    for (const auto& v : row) EXPECT_TRUE(v == Cyclotomic(1) || v == Cyclotomic(-1));
}

TEST(Dixon, NonRealGroup) {
  // <P> has order 4 mod phase: characters take values in Q(i).
  auto g = bfs_closure({{"p1", gen_phase(1, 1)}});
  auto t = dixon_character_table(g);
  EXPECT_EQ(t.k(), 4);
  EXPECT_FALSE(integer_valued(t));
  EXPECT_TRUE(verify_orthogonality(t).passed());
}

TEST(ClassSizes, FromColumns) {
  const auto& f = c2();
  auto sizes = class_sizes_from_columns(f.t.values, f.t.group_order);
  EXPECT_EQ(sizes, f.t.class_sizes);
  EXPECT_EQ(sizes[0], 1);
  auto bad = f.t.values;
  bad[3][4] += 1;
  EXPECT_THROW(class_sizes_from_columns(bad, f.t.group_order), Error);
}

TEST(Kernels, TrivialAndSign) {
  const auto& f = c2();
  int trivial = -1, sgn = -1;
  for (int i = 0; i < f.t.k(); ++i)
    if (f.t.degree(i) == 1) {
      bool all_one = std::all_of(f.t.values[i].begin(), f.t.values[i].end(), [](const auto& v) { return v == Cyclotomic(1); });
      (all_one ? trivial : sgn) = i;
    }
  ASSERT_GE(trivial, 0);
  ASSERT_GE(sgn, 0);
  EXPECT_EQ(int(character_kernel(f.t, trivial).size()), f.t.k());
  auto ker = character_kernel(f.t, sgn);
  BigInt order = 0;
  for (int c : ker) order += f.t.class_sizes[c];
  EXPECT_EQ(ker.size(), 11u);
  EXPECT_EQ(order, 5760);
}

TEST(NormalSubgroups, IntersectionClosed) {
  const auto& f = c2();
  auto ns = normal_subgroups(f.t);
  EXPECT_EQ(ns.front().classes, std::vector<int>{0});
  EXPECT_EQ(int(ns.back().classes.size()), f.t.k());
  for (const auto& a : ns)
    for (const auto& b : ns) {
      std::vector<int> m;
      std::set_intersection(a.classes.begin(), a.classes.end(), b.classes.begin(), b.classes.end(), std::back_inserter(m));
      EXPECT_TRUE(std::any_of(ns.begin(), ns.end(), [&](const auto& r) { return r.classes == m; }));
    }
}

TEST(Orthogonality, DetectsPerturbation) {
  auto t = c1().t;
  t.values[2][3] += 1;
  auto rep = verify_orthogonality(t);
  EXPECT_FALSE(rep.passed());
  EXPECT_FALSE(rep.failures.front().describe().empty());
}

TEST(Csv, RoundTrip) {
  const auto& t = c2().t;
  std::stringstream ss;
  write_character_table_csv(ss, t);
  auto parsed = read_character_table_csv(ss);
  EXPECT_EQ(parsed.values, t.values);
  ASSERT_TRUE(parsed.sizes);
  EXPECT_EQ(*parsed.sizes, t.class_sizes);

  std::stringstream ragged("size,1,2\nchi_1,1\n");
  EXPECT_THROW(read_character_table_csv(ragged), Error);
}
