#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include <derivkit/oracle.hpp>

using namespace derivkit;

namespace {

// All integer combinations of the generators, coefficient i ranging over
// [0, order_i).
std::vector<Derivation> enumerate_module(const SolutionModule& sol)
{
  std::vector<Derivation> out;
  std::vector<std::uint64_t> k(sol.generators.size(), 0);
  while (true) {
    Derivation d(sol.group, sol.ring);
    for (std::size_t i = 0; i < k.size(); ++i)
      d = d + sol.generators[i].times(static_cast<std::int64_t>(k[i]));
    out.push_back(std::move(d));
    std::size_t i = 0;
    for (; i < k.size(); ++i) {
      if (++k[i] < ipow(sol.invariants[i].prime, sol.invariants[i].exponent))
        break;
      k[i] = 0;
    }
    if (i == k.size())
      break;
  }
  return out;
}

std::vector<PrimaryInvariant> z4_cubed_z2_squared()
{
  return {{2, 1}, {2, 1}, {2, 2}, {2, 2}, {2, 2}};
}

} // namespace

TEST(Oracle, Z4OverC2)
{
  const auto sol = solve_all_derivations(cyclic_group(2), FiniteRing::zm(4));
  EXPECT_EQ(sol.unknown_count, 4u);
  EXPECT_EQ(sol.cardinality.value(), 4u);
  EXPECT_EQ(sol.sorted_invariants(), (std::vector<PrimaryInvariant>{{2, 1}, {2, 1}}));
}

TEST(Oracle, Z4OverS3)
{
  const auto g = symmetric_group(3);
  const auto a = FiniteRing::zm(4);
  const auto sol = solve_all_derivations(g, a);
  EXPECT_EQ(sol.unknown_count, 36u);
  EXPECT_EQ(sol.cardinality.value(), 256u);
  EXPECT_EQ(sol.sorted_invariants(), z4_cubed_z2_squared());
  const auto v = compare(derivation_module_report(g, a), sol);
  EXPECT_TRUE(v.cardinality.passed) << v.cardinality.detail;
  EXPECT_TRUE(v.report_in_span.passed) << v.report_in_span.detail;
  EXPECT_TRUE(v.solution_decomposes.passed) << v.solution_decomposes.detail;
  EXPECT_TRUE(v.inner_matches_loops.passed) << v.inner_matches_loops.detail;
}

TEST(Oracle, Z2OverS3)
{
  const auto g = symmetric_group(3);
  const auto sol = solve_all_derivations(g, FiniteRing::zm(2));
  EXPECT_EQ(sol.cardinality.value(), 32u);
  EXPECT_TRUE(compare(derivation_module_report(g, FiniteRing::zm(2)), sol).passed());
}

TEST(Oracle, Z3OverS3HasOuterFactor)
{
  const auto g = symmetric_group(3);
  const auto a = FiniteRing::zm(3);
  const auto sol = solve_all_derivations(g, a);
  // |Inn| = 3^3, one extra Z3
  EXPECT_EQ(sol.cardinality.value(), 81u);
  const auto r = derivation_module_report(g, a);
  EXPECT_TRUE(compare(r, sol).passed());
  std::vector<Derivation> inner;
  for (const auto& b : r.inner_basis)
    inner.push_back(b.derivation);
  EXPECT_EQ(module_span_order(inner).value(), 27u);
}

TEST(Oracle, EnumerationHasNoRepeats)
{
  for (const auto& [g, a] : std::vector<std::pair<FiniteGroup, FiniteRing>>{
           {symmetric_group(3), FiniteRing::zm(4)},
           {symmetric_group(3), FiniteRing::zm(6)},
           {dihedral_group(2), FiniteRing::zm(2)},
           {cyclic_group(4), FiniteRing::gf(2, 2)}}) {
    const auto sol = solve_all_derivations(g, a);
    ASSERT_LE(*sol.cardinality.value(), 1u << 16);
    std::set<std::vector<Value>> seen;
    for (const auto& d : enumerate_module(sol)) {
      ASSERT_TRUE(leibniz_check(d));
      seen.insert(d.table());
    }
    EXPECT_EQ(seen.size(), *sol.cardinality.value());
  }
}

TEST(Oracle, EquationOrderDoesNotMatter)
{
  for (const auto& [g, a] : std::vector<std::pair<FiniteGroup, FiniteRing>>{
           {symmetric_group(3), FiniteRing::zm(4)},
           {dihedral_group(3), FiniteRing::zm(12)},
           {dihedral_group(2), FiniteRing::gf(2, 2)}}) {
    const auto base = solve_all_derivations(g, a);
    for (std::uint64_t seed : {1u, 2u, 3u}) {
      SolveOptions opts;
      opts.shuffle_seed = seed;
      const auto other = solve_all_derivations(g, a, opts);
      EXPECT_EQ(other.sorted_invariants(), base.sorted_invariants());
      auto both = base.generators;
      both.insert(both.end(), other.generators.begin(), other.generators.end());
      EXPECT_EQ(module_span_order(both), base.cardinality);
      EXPECT_EQ(module_span_order(other.generators), base.cardinality);
    }
  }
}

TEST(Oracle, FieldDimension)
{
  for (const auto& g : {symmetric_group(3), dihedral_group(2), dihedral_group(3), cyclic_group(6)})
    for (const auto& f : {FiniteRing::gf(2, 1), FiniteRing::gf(2, 2), FiniteRing::gf(3, 1), FiniteRing::gf(3, 2)}) {
      const auto sol = solve_all_derivations(g, f);
      const auto cc = conjugacy_classes(g);
      std::uint64_t dim = g.order() - cc.count();
      for (auto rep : cc.representative) {
        const auto homs = static_cast<double>(*hom_group(centralizer(g, rep), f).size().value());
        dim += static_cast<std::uint64_t>(std::llround(std::log(homs) / std::log(static_cast<double>(f.size()))));
      }
      EXPECT_EQ(sol.cardinality, GroupOrder::of(f.size()).pow(static_cast<std::uint32_t>(dim)))
          << g.order() << " " << f.label();
    }
}

TEST(Oracle, IdentityColumnIsZero)
{
  const auto g = dihedral_group(3);
  const auto sol = solve_all_derivations(g, FiniteRing::zm(6));
  for (const auto& d : sol.generators)
    EXPECT_TRUE(d.column(0).is_zero());
}

TEST(Oracle, SizeLimits)
{
  EXPECT_THROW(solve_all_derivations(symmetric_group(5, 120), FiniteRing::zm(2)), SizeLimitError);
  SolveOptions opts;
  opts.ring_limit = 3;
  EXPECT_THROW(solve_all_derivations(symmetric_group(3), FiniteRing::zm(4), opts), SizeLimitError);
}

TEST(Oracle, ZeroedOuterGeneratorFailsCardinality)
{
  const auto g = symmetric_group(3);
  const auto a = FiniteRing::zm(4);
  auto r = derivation_module_report(g, a);
  r.out_generators[1].derivation = Derivation(g, a);
  const auto v = compare(r, solve_all_derivations(g, a));
  EXPECT_FALSE(v.cardinality.passed);
  EXPECT_FALSE(v.passed());
}

TEST(Oracle, IsInnerAgreesWithSpanMembership)
{
  for (const auto& [g, a] : std::vector<std::pair<FiniteGroup, FiniteRing>>{
           {symmetric_group(3), FiniteRing::zm(4)},
           {symmetric_group(3), FiniteRing::zm(3)},
           {dihedral_group(2), FiniteRing::zm(2)},
           {cyclic_group(4), FiniteRing::zm(2)}}) {
    const auto sol = solve_all_derivations(g, a);
    std::vector<Derivation> ads;
    for (Element x = 0; x < g.order(); ++x)
      ads.push_back(ad(g, a, x));
    const auto inn = module_span_order(ads);
    for (const auto& d : enumerate_module(sol)) {
      auto with = ads;
      with.push_back(d);
      ASSERT_EQ(is_inner(d), module_span_order(with) == inn);
    }
  }
}

TEST(Oracle, CompareAcrossRings)
{
  for (const auto& [g, a] : std::vector<std::pair<FiniteGroup, FiniteRing>>{
           {symmetric_group(3), FiniteRing::zm(12)},
           {dihedral_group(2), FiniteRing::gf(2, 2)},
           {dihedral_group(3), FiniteRing::gf(2, 1)},
           {cyclic_group(4), FiniteRing::product({FiniteRing::zm(2), FiniteRing::zm(4)})},
           {symmetric_group(4), FiniteRing::zm(2)}}) {
    const auto v = compare(derivation_module_report(g, a), solve_all_derivations(g, a));
    EXPECT_TRUE(v.passed()) << v.cardinality.detail << "; " << v.report_in_span.detail << "; "
                            << v.solution_decomposes.detail << "; " << v.inner_matches_loops.detail;
  }
}
