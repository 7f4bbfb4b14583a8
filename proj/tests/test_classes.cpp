#include <cliffchar/classes.hpp>

#include <gtest/gtest.h>

#include <algorithm>

using namespace cliffchar;

namespace {

const GroupTable& c1() {
  static const GroupTable g = enumerate_clifford(1);
  return g;
}
const GroupTable& c2() {
  static const GroupTable g = enumerate_clifford(2);
  return g;
}

std::vector<long> sorted_sizes(const ClassData& cd) {
  std::vector<long> s;
  for (const auto& x : cd.sizes()) s.push_back(x.get_si());
  std::sort(s.begin(), s.end());
  return s;
}

}  // namespace

TEST(Classes, C1) {
  ClassData cd(c1());
  EXPECT_EQ(cd.k(), 5);
  EXPECT_EQ(sorted_sizes(cd), (std::vector<long>{1, 3, 6, 6, 8}));
  EXPECT_EQ(cd.class_of(0), 0);
}

TEST(Classes, C2SizesMatchTable) {
  ClassData cd(c2());
  EXPECT_EQ(cd.k(), 21);
  std::vector<long> want{1, 640, 60, 1920, 15, 180, 720, 30, 360, 180, 90, 120, 160, 480, 960, 2304, 180, 720, 960, 720, 720};
  std::sort(want.begin(), want.end());
  EXPECT_EQ(sorted_sizes(cd), want);
  BigInt total = 0;
  for (const auto& s : cd.sizes()) {
    total += s;
    EXPECT_EQ(BigInt(11520) % s, 0);
  }
  EXPECT_EQ(total, 11520);
}

TEST(Classes, Klein) {
  auto k = bfs_closure({{"x1", gen_pauli(PauliAxis::X, 1, 1)}, {"y1", gen_pauli(PauliAxis::Y, 1, 1)}});
  ClassData cd(k);
  EXPECT_EQ(cd.k(), 4);
  for (int c = 0; c < 4; ++c) EXPECT_EQ(cd.size(c), 1u);
}

TEST(Classes, ConjugationInvariant) {
  const auto& g = c2();
  ClassData cd(g);
  for (std::size_t x = 0; x < g.size(); ++x)
    for (const auto& gen : g.generators()) ASSERT_EQ(cd.class_of(g.conjugate(gen.id, int(x))), cd.class_of(int(x)));
  for (std::size_t x = 0; x < g.size(); ++x) ASSERT_EQ(cd.size(cd.class_of(g.inverse(int(x)))), cd.size(cd.class_of(int(x))));
}

TEST(Classes, ClassOfWord) {
  const auto& g = c2();
  ClassData cd(g);
  EXPECT_EQ(cd.size(class_of_word("z1", g, cd)), 60u);
  EXPECT_EQ(cd.size(class_of_word("p1", g, cd)), 30u);
  EXPECT_EQ(cd.size(class_of_word("", g, cd)), 1u);
  EXPECT_THROW(class_of_word("x3", g, cd), Error);
}

TEST(Classes, PowerMaps) {
  ClassData cd1(c1());
  auto id = power_map(cd1, 1);
  for (int c = 0; c < cd1.k(); ++c) EXPECT_EQ(id[c], c);
  int cp = class_of_word("p1", c1(), cd1), cp2 = class_of_word("p1^2", c1(), cd1);
  EXPECT_NE(cp, cp2);
  EXPECT_EQ(power_map(cd1, 2)[cp], cp2);

  ClassData cd2(c2());
  auto inv = power_map(cd2, -1);
  for (int c = 0; c < cd2.k(); ++c) EXPECT_EQ(inv[c], c);
  for (int m : {2, 3, 5}) EXPECT_NO_THROW(power_map(cd2, m));
}

TEST(Classes, Constants) {
  ClassData cd(c1());
  const int k = cd.k();
  for (int j = 0; j < k; ++j) {
    auto a = class_constants(cd, 0, j);
    for (int kk = 0; kk < k; ++kk) EXPECT_EQ(a[kk], j == kk ? 1 : 0);
  }
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      auto a = class_constants(cd, i, j);
      std::int64_t s = 0;
      for (int kk = 0; kk < k; ++kk) {
        EXPECT_GE(a[kk], 0);
        s += a[kk] * std::int64_t(cd.size(kk));
      }
      EXPECT_EQ(s, std::int64_t(cd.size(i) * cd.size(j)));
    }
  int hp = class_of_word("h1 p1", c1(), cd);
  EXPECT_EQ(cd.size(hp), 8u);
  EXPECT_EQ(class_constants(cd, hp, hp)[0], 8);
}

TEST(Classes, ConstantsRepresentativeIndependent) {
  const auto& g = c2();
  ClassData cd(g);
  for (int i : {1, 5, 12})
    for (int kk = 0; kk < cd.k(); ++kk) {
      const auto& mem = cd.members(kk);
      int z = mem[mem.size() / 2];
      for (int j = 0; j < cd.k(); ++j) ASSERT_EQ(cd.count_factorizations(i, j, z), cd.class_constants(i, j)[kk]);
    }
}
