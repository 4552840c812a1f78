// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include <derivkit/derivation.hpp>
#include <derivkit/groupoid.hpp>
#include <derivkit/oracle.hpp>

#include "brute_force.hpp"

using namespace derivkit;

namespace {

struct Outcome
{
  bool passed = true;
  std::ostringstream note;

  void require(bool ok, const std::string& what)
  {
    if (!ok) {
      passed = false;
      note << " [failed: " << what << "]";
    }
  }
};

using Clock = std::chrono::steady_clock;

bool run_criterion(int id, const std::string& title, double seconds_limit, const std::function<void(Outcome&)>& body)
{
  Outcome o;
  const auto start = Clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.passed = false;
    o.note << " [exception: " << e.what() << "]";
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  if (seconds_limit > 0 && secs >= seconds_limit) {
    o.passed = false;
    o.note << " [runtime " << secs << " s over " << seconds_limit << " s]";
  }
  std::cout << (o.passed ? "PASS" : "FAIL") << " criterion " << id << ": " << title << " |" << o.note.str() << " ("
            << static_cast<long>(secs * 1000) << " ms)" << std::endl;
  return o.passed;
}

bool is_transposition(const FiniteGroup& g, Element x)
{
  return x != 0 && element_order(g, x) == 2;
}

std::vector<Value> values_of(const HomAb& phi)
{
  std::vector<Value> out;
  for (auto x : phi.domain_subgroup().elements())
    out.push_back(phi.evaluate(x));
  return out;
}

// Z4[S3]: generators, relations and the two hand-computed tables.
void criterion_1(Outcome& o)
{
  const auto g = symmetric_group(3);
  const auto a = FiniteRing::zm(4);
  const auto r = derivation_module_report(g, a);
  o.require(r.out_generators.size() == 2, "two outer generators");
  if (r.out_generators.size() != 2)
    return;
  const auto& g1 = r.out_generators[0];
  const auto& g2 = r.out_generators[1];
  o.require(g1.representative == g.find("e") && g2.representative == g.find("(12)"), "classes [e], [(12)]");
  for (const auto& gen : r.out_generators) {
    o.require(gen.order == PrimaryInvariant{2, 1}, "order 2");
    o.require(!is_inner(gen.derivation), "d_i not inner");
    o.require(is_inner(gen.derivation.times(2)), "2 d_i inner");
  }
  o.require(r.centralizer_homs[r.classes.class_of[g.find("(123)")]].trivial(), "[(123)] contributes nothing");

  // d1: 2 where u = v is a transposition
  const auto lit1 = explicit_map_table(g, g1.representative, g1.hom);
  const auto lit2 = explicit_map_table(g, g2.representative, g2.hom);
  bool d1_ok = true, d2_ok = true, loops_ok = true;
  for (Element u = 0; u < g.order(); ++u)
    for (Element v = 0; v < g.order(); ++v) {
      d1_ok = d1_ok && lit1.at(u, v) == ((u == v && is_transposition(g, u)) ? 2u : 0u);
      d1_ok = d1_ok && g1.derivation.at(u, v) == lit1.at(u, v);
      // d2 by the loop formula: 2 at u = e, v a transposition
      d2_ok = d2_ok && lit2.at(u, v) == ((u == 0 && is_transposition(g, v)) ? 2u : 0u);
      if (is_loop(g, {u, v}))
        loops_ok = loops_ok && g2.derivation.at(u, v) == lit2.at(u, v);
    }
  o.require(d1_ok, "d1 entrywise");
  o.require(d2_ok, "d2 formula entrywise");
  o.require(loops_ok, "d2 generator agrees with the loop formula on loops");
  o.require(leibniz_check(g1.derivation) && leibniz_check(g2.derivation), "generators Leibniz");
  const bool loop_d2_leibniz = leibniz_check(lit2);
  o.note << " d1 matches exactly; loop-formula d2 matches the expected table and the generator on all loop"
            " entries; loop-formula d2 Leibniz: "
         << (loop_d2_leibniz ? "yes" : "no (off-loop entries supplied by the section)");
}

void criterion_2(Outcome& o)
{
  const auto g = symmetric_group(3);
  const auto a = FiniteRing::zm(4);
  const auto sol = solve_all_derivations(g, a);
  o.require(sol.unknown_count == 36, "36 unknowns");
  o.require(sol.cardinality.value() == 256u, "cardinality 256");
  o.require(sol.sorted_invariants() == std::vector<PrimaryInvariant>{{2, 1}, {2, 1}, {2, 2}, {2, 2}, {2, 2}},
            "Z4^3 + Z2^2");
  const auto v = compare(derivation_module_report(g, a), sol);
  o.require(v.cardinality.passed, "(a) " + v.cardinality.detail);
  o.require(v.report_in_span.passed, "(b) " + v.report_in_span.detail);
  o.require(v.solution_decomposes.passed, "(c) " + v.solution_decomposes.detail);
  o.require(v.inner_matches_loops.passed, "(d) " + v.inner_matches_loops.detail);
  o.note << " |Der| = " << sol.cardinality.to_string() << ", compare passed " << (v.passed() ? 4 : 0) << "/4";
}

void criterion_3(Outcome& o)
{
  auto check = [&](const FiniteGroup& g, const FiniteRing& a, std::size_t expected, const std::string& name) {
    const auto cc = conjugacy_classes(g);
    const auto r = derivation_module_report(g, a);
    o.require(r.inner_rank == g.order() - cc.count() && r.inner_rank == expected, name);
  };
  check(symmetric_group(3), FiniteRing::zm(4), 3, "S3/Z4");
  check(symmetric_group(3), FiniteRing::zm(2), 3, "S3/Z2");
  std::size_t cases = 2;
  for (std::size_t n = 2; n <= 4; ++n)
    for (std::uint32_t m = 1; m <= 2; ++m) {
      check(dihedral_group(n), FiniteRing::gf(2, m), 3 * n - 3, "dihedral(" + std::to_string(n) + ")/GF(2^" +
                                                                     std::to_string(m) + ")");
      ++cases;
    }
  o.note << " " << cases << " cases";
}

void criterion_4(Outcome& o)
{
  for (std::size_t n = 2; n <= 6; ++n) {
    const auto g = dihedral_group(n);
    const auto cc = conjugacy_classes(g);
    o.require(cc.count() == n + 3, "n+3 classes for n=" + std::to_string(n));
    std::multiset<std::size_t> sizes, expected{1, 1, n, n};
    for (const auto& c : cc.classes)
      sizes.insert(c.size());
    for (std::size_t i = 0; i + 1 < n; ++i)
      expected.insert(2);
    o.require(sizes == expected, "class sizes for n=" + std::to_string(n));
    for (Element x = 0; x < g.order(); ++x)
      o.require(cc.classes[cc.class_of[x]].size() * centralizer(g, x).order() == g.order(), "orbit-stabilizer");
  }
  o.note << " n = 2..6";
}

void criterion_5(Outcome& o)
{
  const auto g = symmetric_group(3);
  const auto a = FiniteRing::zm(3);
  const auto r = derivation_module_report(g, a);
  o.require(r.criteria.paper_prime_criterion, "prime criterion says inner only");
  o.require(!r.criteria.exact_outer_trivial, "exact: outer derivations exist");
  o.require(r.criteria.conflict(), "conflict flag");
  const auto sol = solve_all_derivations(g, a);
  std::vector<Derivation> inner;
  for (const auto& b : r.inner_basis)
    inner.push_back(b.derivation);
  const auto inn = module_span_order(inner);
  const auto out = sol.cardinality.divided_by(inn);
  o.require(out && *out == GroupOrder::of(3), "oracle |Der|/|Inn| = 3");
  o.require(compare(r, sol).passed(), "compare");
  o.note << " oracle |Der| = " << sol.cardinality.to_string() << ", |Inn| = " << inn.to_string()
         << "; prime criterion: inner only, exact: Z3 outer factor from [(123)]";
}

void criterion_6(Outcome& o)
{
  for (std::size_t n = 2; n <= 6; ++n) {
    const auto g = dihedral_group(n);
    const auto s = g.find("s");
    const auto z = centralizer(g, s);
    o.require(z.order() == 4 && z.contains(g.find("r^" + std::to_string(n))),
              "Z(s) order 4 with r^n, n=" + std::to_string(n));
  }
  std::size_t cases = 0;
  for (std::size_t n = 2; n <= 3; ++n)
    for (std::uint32_t m = 1; m <= 2; ++m) {
      const auto g = dihedral_group(n);
      const auto a = FiniteRing::gf(2, m);
      const auto r = derivation_module_report(g, a);
      const auto s_class = r.classes.class_of[g.find("s")];
      o.require(r.centralizer_homs[s_class].size() == GroupOrder::of(a.size()).pow(2), "Hom(Z(s), A) = A^2");
      const auto v = compare(r, solve_all_derivations(g, a));
      o.require(v.passed(), "compare dihedral(" + std::to_string(n) + ")/GF(2^" + std::to_string(m) + ")");
      ++cases;
    }
  o.note << " Z(s) has order 4 for n = 2..6; compare passed on " << cases << " cases";
}

void criterion_7(Outcome& o)
{
  const std::vector<std::pair<FiniteGroup, FiniteRing>> cases{
      {symmetric_group(3), FiniteRing::zm(4)},
      {dihedral_group(2), FiniteRing::zm(2)},
      {dihedral_group(3), FiniteRing::gf(2, 2)},
      {cyclic_group(6), FiniteRing::zm(6)},
      {direct_product(cyclic_group(2), symmetric_group(3)), FiniteRing::zm(4)},
  };
  std::size_t additive = 0, split = 0, leibniz = 0, class_sums = 0, brackets = 0, roundtrips = 0;
  std::mt19937_64 rng(20261019);
  for (const auto& [g, a] : cases) {
    const auto r = derivation_module_report(g, a);
    const auto gens = report_generators(r);

    // additivity on all composable pairs, for every generator character
    for (const auto& d : gens) {
      o.require(is_additive(d.character()), "additivity");
      ++additive;
    }
    for (Element x = 0; x < g.order(); ++x) {
      o.require(is_additive(ad_character(g, a, x)), "additivity of ad");
      ++additive;
    }

    // section / restriction, every hom of every class
    for (auto rep : r.classes.representative)
      for (const auto& phi : hom_group(centralizer(g, rep), a).enumerate()) {
        const auto chi = section(g, rep, phi);
        o.require(is_additive(chi), "section additive");
        o.require(restrict_to_loops(chi, rep) == phi, "restrict o section = id");
        o.require(outer_generator(g, rep, phi).character() == chi, "outer generator is the section");
        ++split;
      }

    for (const auto& d : gens) {
      o.require(leibniz_check(d), "Leibniz");
      ++leibniz;
    }
    for (const auto& o2 : r.out_generators)
      o.require(leibniz_check(o2.derivation.times(static_cast<std::int64_t>(o2.order.prime))), "Leibniz multiple");

    for (const auto& cls : r.classes.classes) {
      Derivation sum(g, a);
      for (auto x : cls)
        sum = sum + ad(g, a, x);
      o.require(sum.is_zero(), "class sum relation");
      ++class_sums;
    }

    for (const auto& x : gens)
      for (const auto& y : gens) {
        o.require(derivation_commutator(x, y).character() == character_bracket(x.character(), y.character()),
                  "bracket correspondence");
        ++brackets;
      }

    std::uniform_int_distribution<std::int64_t> k(0, static_cast<std::int64_t>(a.size()) - 1);
    for (int i = 0; i < 30; ++i) {
      Derivation d(g, a);
      for (const auto& gen : gens)
        d = d + gen.times(k(rng));
      o.require(reconstruct(g, a, r.classes, decompose(d, r.classes)) == d, "decompose/reconstruct");
      ++roundtrips;
    }
  }
  o.require(roundtrips >= 100, "at least 100 random cases");
  o.note << " additivity " << additive << ", split " << split << ", Leibniz " << leibniz << ", class sums "
         << class_sums << ", brackets " << brackets << ", round trips " << roundtrips;
}

void criterion_8(Outcome& o)
{
  std::vector<FiniteGroup> groups{symmetric_group(3), symmetric_group(4)};
  for (std::size_t n = 2; n <= 6; ++n)
    groups.push_back(dihedral_group(n));
  for (std::size_t m = 1; m <= 12; ++m)
    groups.push_back(cyclic_group(m));
  groups.push_back(direct_product(cyclic_group(2), symmetric_group(3)));
  for (const auto& g : groups)
    o.require(outer_vanishing_check(g, IntegersTag{}).exact_outer_trivial, "torsion-free tag");
  o.note << " " << groups.size() << " groups";
}

void criterion_9(Outcome& o)
{
  std::vector<FiniteGroup> groups{symmetric_group(3), dihedral_group(2), dihedral_group(3),
                                  direct_product(cyclic_group(2), cyclic_group(2)),
                                  direct_product(cyclic_group(2), cyclic_group(4)),
                                  direct_product(cyclic_group(2), cyclic_group(6)),
                                  direct_product(cyclic_group(3), cyclic_group(3)),
                                  direct_product(direct_product(cyclic_group(2), cyclic_group(2)), cyclic_group(2)),
                                  direct_product(cyclic_group(2), symmetric_group(3))};
  for (std::size_t m = 1; m <= 12; ++m)
    groups.push_back(cyclic_group(m));
  std::vector<Subgroup> domains;
  for (const auto& g : groups) {
    domains.push_back(Subgroup::whole(g));
    for (auto rep : conjugacy_classes(g).representative)
      domains.push_back(centralizer(g, rep));
  }
  std::vector<FiniteRing> rings;
  for (std::uint64_t m = 1; m <= 16; ++m)
    rings.push_back(FiniteRing::zm(m));
  for (auto [p, k] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 2}, {2, 3}, {2, 4}, {3, 2}})
    rings.push_back(FiniteRing::gf(p, k));
  rings.push_back(FiniteRing::product({FiniteRing::zm(2), FiniteRing::zm(2)}));
  rings.push_back(FiniteRing::product({FiniteRing::zm(2), FiniteRing::zm(4)}));
  rings.push_back(FiniteRing::product({FiniteRing::zm(4), FiniteRing::zm(4)}));
  rings.push_back(FiniteRing::product({FiniteRing::zm(2), FiniteRing::zm(8)}));
  rings.push_back(FiniteRing::product({FiniteRing::zm(3), FiniteRing::zm(3)}));
  rings.push_back(FiniteRing::product({FiniteRing::zm(2), FiniteRing::gf(2, 2)}));

  std::size_t pairs = 0;
  for (const auto& h : domains)
    for (const auto& a : rings) {
      const auto hg = hom_group(h, a);
      std::set<std::vector<Value>> mine;
      for (const auto& phi : hg.enumerate())
        mine.insert(values_of(phi));
      const auto brute = reference::brute_force_homs(h, a);
      o.require(mine == brute && hg.size().value() == brute.size(), "hom_group vs brute force");
      ++pairs;
    }

  const auto z8z4 = hom_group(cyclic_group(8), FiniteRing::zm(4));
  o.require(z8z4.structure == std::vector<PrimaryInvariant>{{2, 2}}, "Hom(Z8, Z4) = Z4");
  std::size_t coprime = 0;
  for (std::uint64_t hi : {2, 4, 8, 3, 9, 5, 7, 11})
    for (std::uint64_t aj : {2, 4, 8, 16, 3, 9, 5, 7, 11, 13}) {
      const auto p = prime_factors(hi).front(), q = prime_factors(aj).front();
      if (p == q)
        continue;
      o.require(hom_group(cyclic_group(hi), FiniteRing::zm(aj)).trivial(), "Hom(Z_p^i, Z_q^j) = 0");
      ++coprime;
    }
  o.note << " " << pairs << " (H, A) pairs, " << coprime << " coprime cyclic pairs";
}

} // namespace

int main()
{
  bool ok = true;
  ok &= run_criterion(1, "Z4[S3] outer generators d1, d2 with 2(d_i + Inn) = Inn", 1.0, criterion_1);
  ok &= run_criterion(2, "Z4[S3] oracle: |Der| = 256, Z4^3 + Z2^2, compare passes", 5.0, criterion_2);
  ok &= run_criterion(3, "inner rank |G| - |G^G| (3n-3 for dihedral over GF(2^m))", 0, criterion_3);
  ok &= run_criterion(4, "dihedral classes: n+3 with sizes 1,1,2^(n-1),n,n; orbit-stabilizer", 0, criterion_4);
  ok &= run_criterion(5, "criterion conflict on Z3[S3] reported and arbitrated by the oracle", 5.0, criterion_5);
  ok &= run_criterion(6, "dihedral Z(s) has order 4; compare passes over GF(2^m)", 30.0, criterion_6);
  ok &= run_criterion(7, "property suites", 0, criterion_7);
  ok &= run_criterion(8, "torsion-free coefficients give Out = 0", 0, criterion_8);
  ok &= run_criterion(9, "hom_group agrees with brute-force enumeration", 0, criterion_9);
  std::cout << (ok ? "ALL PASS" : "SOME CRITERIA FAILED") << std::endl;
  return ok ? 0 : 1;
}
