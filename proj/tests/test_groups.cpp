#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include <derivkit/groups.hpp>

using namespace derivkit;

namespace {

void expect_group_axioms(const FiniteGroup& g)
{
  const auto n = static_cast<Element>(g.order());
  for (Element x = 0; x < n; ++x) {
    EXPECT_EQ(g.mul(0, x), x);
    EXPECT_EQ(g.mul(x, 0), x);
    EXPECT_EQ(g.mul(x, g.inv(x)), 0u);
    for (Element y = 0; y < n; ++y)
      for (Element z = 0; z < n; ++z)
        ASSERT_EQ(g.mul(g.mul(x, y), z), g.mul(x, g.mul(y, z)));
  }
}

std::vector<std::size_t> class_sizes(const FiniteGroup& g)
{
  std::vector<std::size_t> out;
  for (const auto& c : conjugacy_classes(g).classes)
    out.push_back(c.size());
  std::sort(out.begin(), out.end());
  return out;
}

// Orbit of x under conjugation, computed directly.
std::set<Element> orbit(const FiniteGroup& g, Element x)
{
  std::set<Element> out;
  for (Element h = 0; h < g.order(); ++h)
    out.insert(g.conjugate(h, x));
  return out;
}

} // namespace

TEST(Groups, SymmetricOrdersAndAxioms)
{
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto g = symmetric_group(n);
    std::size_t fact = 1;
    for (std::size_t i = 2; i <= n; ++i)
      fact *= i;
    EXPECT_EQ(g.order(), fact);
    expect_group_axioms(g);
  }
  EXPECT_EQ(symmetric_group(5, 120).order(), 120u);
  EXPECT_THROW(symmetric_group(5), SizeLimitError);
}

TEST(Groups, S3ElementNamesAndComposition)
{
  const auto g = symmetric_group(3);
  const std::vector<std::string> expected{"e", "(12)", "(13)", "(123)", "(23)", "(132)"};
  EXPECT_EQ(g.names(), expected);
  // right factor first: (12)(13) sends 1 -> 3 -> 3, 3 -> 1 -> 2, 2 -> 2 -> 1
  EXPECT_EQ(g.name(g.mul(g.find("(12)"), g.find("(13)"))), "(132)");
  EXPECT_EQ(g.name(g.mul(g.find("(13)"), g.find("(12)"))), "(123)");
}

TEST(Groups, CyclicAndDihedral)
{
  const auto c = cyclic_group(4);
  EXPECT_EQ(c.order(), 4u);
  EXPECT_TRUE(c.is_abelian());
  expect_group_axioms(c);

  for (std::size_t n = 1; n <= 6; ++n) {
    const auto d = dihedral_group(n);
    ASSERT_EQ(d.order(), 4 * n);
    expect_group_axioms(d);
    const auto r = d.find("r");
    const auto s = d.find("s");
    EXPECT_EQ(element_order(d, r), 2 * n);
    EXPECT_EQ(element_order(d, s), 2u);
    EXPECT_EQ(element_order(d, d.mul(r, s)), 2u);
    // element order: r^k at k, r^k s at 2n + k
    for (std::size_t k = 0; k < 2 * n; ++k) {
      Element rk = 0;
      for (std::size_t i = 0; i < k; ++i)
        rk = d.mul(rk, r);
      EXPECT_EQ(rk, k);
      EXPECT_EQ(d.mul(rk, s), 2 * n + k);
    }
  }
}

TEST(Groups, ElementOrders)
{
  const auto s3 = symmetric_group(3);
  EXPECT_EQ(element_order(s3, s3.find("e")), 1u);
  EXPECT_EQ(element_order(s3, s3.find("(123)")), 3u);
  EXPECT_EQ(element_order(s3, s3.find("(12)")), 2u);
  EXPECT_EQ(element_order(dihedral_group(2), dihedral_group(2).find("r")), 4u);
  const auto g = symmetric_group(4);
  for (Element x = 0; x < g.order(); ++x)
    EXPECT_EQ(g.order() % element_order(g, x), 0u);
}

TEST(Groups, ConjugacyClassesS3)
{
  const auto g = symmetric_group(3);
  const auto cc = conjugacy_classes(g);
  ASSERT_EQ(cc.count(), 3u);
  EXPECT_EQ(g.name(cc.representative[0]), "e");
  EXPECT_EQ(g.name(cc.representative[1]), "(12)");
  EXPECT_EQ(g.name(cc.representative[2]), "(123)");
  EXPECT_EQ(cc.classes[0].size(), 1u);
  EXPECT_EQ(cc.classes[1].size(), 3u);
  EXPECT_EQ(cc.classes[2].size(), 2u);
}

TEST(Groups, ConjugacyClassesMatchOrbits)
{
  for (const auto& g : {symmetric_group(4), dihedral_group(3), cyclic_group(6),
                        direct_product(symmetric_group(3), cyclic_group(2))}) {
    const auto cc = conjugacy_classes(g);
    std::size_t total = 0;
    for (std::size_t c = 0; c < cc.count(); ++c) {
      const auto& cls = cc.classes[c];
      total += cls.size();
      EXPECT_EQ(std::set<Element>(cls.begin(), cls.end()), orbit(g, cc.representative[c]));
      EXPECT_EQ(cc.representative[c], *std::min_element(cls.begin(), cls.end()));
      for (auto x : cls)
        EXPECT_EQ(cc.class_of[x], c);
    }
    EXPECT_EQ(total, g.order());
  }
}

TEST(Groups, CyclicClassesAreSingletons)
{
  EXPECT_EQ(class_sizes(cyclic_group(4)), (std::vector<std::size_t>{1, 1, 1, 1}));
}

TEST(Groups, DihedralClassSizes)
{
  EXPECT_EQ(class_sizes(dihedral_group(3)), (std::vector<std::size_t>{1, 1, 2, 2, 3, 3}));
  for (std::size_t n = 2; n <= 6; ++n) {
    std::vector<std::size_t> expected{1, 1, n, n};
    for (std::size_t i = 0; i + 1 < n; ++i)
      expected.push_back(2);
    std::sort(expected.begin(), expected.end());
    EXPECT_EQ(class_sizes(dihedral_group(n)), expected) << "n = " << n;
    EXPECT_EQ(conjugacy_classes(dihedral_group(n)).count(), n + 3);
  }
}

TEST(Groups, Centralizers)
{
  const auto g = symmetric_group(3);
  const auto z = centralizer(g, g.find("(12)"));
  EXPECT_EQ(z.elements(), (std::vector<Element>{g.find("e"), g.find("(12)")}));
  EXPECT_EQ(centralizer(g, 0).order(), 6u);

  const auto d = dihedral_group(3);
  const auto zs = centralizer(d, d.find("s"));
  std::vector<Element> expected{d.find("e"), d.find("s"), d.find("r^3"), d.find("r^3s")};
  std::sort(expected.begin(), expected.end());
  EXPECT_EQ(zs.elements(), expected);
}

TEST(Groups, OrbitStabilizer)
{
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto d = dihedral_group(n);
    const auto cc = conjugacy_classes(d);
    for (Element x = 0; x < d.order(); ++x)
      EXPECT_EQ(cc.classes[cc.class_of[x]].size() * centralizer(d, x).order(), d.order());
  }
}

TEST(Groups, TableValidation)
{
  // row 1 is not a permutation
  EXPECT_THROW(FiniteGroup::from_table({{0, 1, 2}, {1, 1, 0}, {2, 0, 1}}), SpecError);
  // identity not at 0
  EXPECT_THROW(FiniteGroup::from_table({{1, 0}, {0, 1}}), SpecError);
  // Latin square that is not associative
  const std::vector<std::vector<Element>> quasi{
      {0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
  EXPECT_THROW(FiniteGroup::from_table(quasi), SpecError);
  const auto z3 = FiniteGroup::from_table({{0, 1, 2}, {1, 2, 0}, {2, 0, 1}});
  EXPECT_EQ(z3.order(), 3u);
}

TEST(Groups, SizeLimits)
{
  EXPECT_THROW(symmetric_group(5, 64), SizeLimitError);
  EXPECT_THROW(symmetric_group(6, 1000), SpecError);
  EXPECT_THROW(dihedral_group(20), SizeLimitError);
  EXPECT_THROW(cyclic_group(0), SpecError);
  EXPECT_NO_THROW(dihedral_group(16));
}

TEST(Groups, ConstructFromSpec)
{
  EXPECT_EQ(construct_group(SymmetricSpec{3}).order(), 6u);
  EXPECT_EQ(construct_group(DihedralSpec{3}).order(), 12u);
  const auto p = construct_group(ProductSpec{{CyclicSpec{2}, SymmetricSpec{3}}});
  EXPECT_EQ(p.order(), 12u);
  expect_group_axioms(p);
  EXPECT_EQ(conjugacy_classes(p).count(), 6u);
}

TEST(Groups, SubgroupClosure)
{
  const auto g = symmetric_group(3);
  EXPECT_THROW(Subgroup(g, {0, 1, 2}), std::invalid_argument);
  const auto a3 = Subgroup::generated_by(g, {g.find("(123)")});
  EXPECT_EQ(a3.order(), 3u);
  EXPECT_TRUE(a3.contains(g.find("(132)")));
}
