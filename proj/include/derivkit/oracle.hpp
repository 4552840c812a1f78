#ifndef DERIVKIT_ORACLE_HPP_
#define DERIVKIT_ORACLE_HPP_

// Brute-force computation of Der(A[G]) as the kernel of the Leibniz system,
// used to cross-check the constructive report.
//
// Unknown x[h*|G| + g] is the coefficient of h in d(g). For every g1, g2, h
// the coefficient of h in d(g1 g2) = d(g1) g2 + g1 d(g2) gives
//   x[h, g1 g2] - x[h g2^-1, g1] - x[g1^-1 h, g2] = 0.
// The system is solved separately over each local factor of A.

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "derivation.hpp"
#include "groups.hpp"
#include "linalg.hpp"
#include "rings.hpp"

namespace derivkit {

inline constexpr std::size_t oracle_group_limit = 24;
inline constexpr std::size_t oracle_ring_limit = 256;

struct SolutionModule
{
  FiniteGroup group;
  FiniteRing ring;
  std::size_t unknown_count = 0;
  std::vector<Derivation> generators;     ///< independent; parallel to invariants
  std::vector<PrimaryInvariant> invariants;
  GroupOrder cardinality;

  /// Sorted invariants, for comparisons.
  std::vector<PrimaryInvariant> sorted_invariants() const
  {
    auto out = invariants;
    std::sort(out.begin(), out.end());
    return out;
  }
};

struct SolveOptions
{
  std::size_t group_limit = oracle_group_limit;
  std::size_t ring_limit = oracle_ring_limit;
  /// Shuffle the equations with this seed before elimination.
  std::optional<std::uint64_t> shuffle_seed;
};

namespace detail {

/// Leibniz equations as sparse integer rows (column, coefficient).
inline std::vector<std::vector<std::pair<std::size_t, int>>> leibniz_equations(const FiniteGroup& g)
{
  const auto n = static_cast<Element>(g.order());
  std::vector<std::vector<std::pair<std::size_t, int>>> out;
  out.reserve(static_cast<std::size_t>(n) * n * n);
  for (Element g1 = 0; g1 < n; ++g1)
    for (Element g2 = 0; g2 < n; ++g2)
      for (Element h = 0; h < n; ++h) {
        std::map<std::size_t, int> row;
        row[static_cast<std::size_t>(h) * n + g.mul(g1, g2)] += 1;
        row[static_cast<std::size_t>(g.mul(h, g.inv(g2))) * n + g1] -= 1;
        row[static_cast<std::size_t>(g.mul(g.inv(g1), h)) * n + g2] -= 1;
        std::vector<std::pair<std::size_t, int>> sparse;
        for (auto [col, k] : row)
          if (k != 0)
            sparse.emplace_back(col, k);
        if (!sparse.empty())
          out.push_back(std::move(sparse));
      }
  return out;
}

inline linalg::Row to_local(const FiniteRing& local, const std::vector<std::pair<std::size_t, int>>& eq,
                            std::size_t cols)
{
  linalg::Row r(cols, 0);
  for (auto [col, k] : eq)
    r[col] = local.from_integer(k);
  return r;
}

} // namespace detail

inline SolutionModule solve_all_derivations(const FiniteGroup& g, const FiniteRing& a, const SolveOptions& opts = {})
{
  if (g.order() > opts.group_limit || a.size() > opts.ring_limit)
    throw SizeLimitError("oracle limits: |G| <= " + std::to_string(opts.group_limit) + " and |A| <= " +
                         std::to_string(opts.ring_limit) + " (got |G| = " + std::to_string(g.order()) +
                         ", |A| = " + std::to_string(a.size()) + ")");
  const std::size_t cols = g.order() * g.order();
  auto equations = detail::leibniz_equations(g);
  if (opts.shuffle_seed) {
    std::mt19937_64 rng(*opts.shuffle_seed);
    std::shuffle(equations.begin(), equations.end(), rng);
  }

  SolutionModule out{g, a, cols, {}, {}, {}};
  for (const auto& lf : a.local_factors()) {
    const linalg::ChainRing local(lf.ring);
    linalg::Echelon e(local, cols);
    for (const auto& eq : equations)
      e.insert(detail::to_local(lf.ring, eq, cols));
    for (auto& k : linalg::kernel(local, e.rows(), cols)) {
      std::vector<Value> table(cols);
      for (std::size_t i = 0; i < cols; ++i)
        table[i] = lf.inject[k.vector[i]];
      out.generators.emplace_back(g, a, std::move(table));
      out.invariants.push_back(k.order);
    }
  }
  out.cardinality = order_of(out.invariants);
  return out;
}

/// Order of the A-submodule of A^cols spanned by the given tables.
inline GroupOrder module_span_order(const FiniteRing& a, const std::vector<std::vector<Value>>& vectors,
                                    std::size_t cols)
{
  GroupOrder o;
  for (const auto& lf : a.local_factors()) {
    const linalg::ChainRing local(lf.ring);
    std::vector<linalg::Row> proj;
    for (const auto& v : vectors) {
      linalg::Row r(cols);
      for (std::size_t i = 0; i < cols; ++i)
        r[i] = lf.project[v[i]];
      proj.push_back(std::move(r));
    }
    o *= linalg::span_order(local, proj, cols);
  }
  return o;
}

inline GroupOrder module_span_order(const std::vector<Derivation>& ds)
{
  if (ds.empty())
    return GroupOrder{};
  std::vector<std::vector<Value>> tables;
  for (const auto& d : ds)
    tables.push_back(d.table());
  return module_span_order(ds.front().ring(), tables, ds.front().table().size());
}

struct CheckResult
{
  bool passed = true;
  std::string detail;
};

struct Verdict
{
  CheckResult cardinality;       ///< (a)
  CheckResult report_in_span;    ///< (b)
  CheckResult solution_decomposes; ///< (c)
  CheckResult inner_matches_loops; ///< (d)

  bool passed() const
  {
    return cardinality.passed && report_in_span.passed && solution_decomposes.passed && inner_matches_loops.passed;
  }
};

/// Report generators as derivations: inner basis then outer generators.
inline std::vector<Derivation> report_generators(const DerivationReport& r)
{
  std::vector<Derivation> out;
  for (const auto& i : r.inner_basis)
    out.push_back(i.derivation);
  for (const auto& o : r.out_generators)
    out.push_back(o.derivation);
  return out;
}

inline Verdict compare(const DerivationReport& report, const SolutionModule& sol)
{
  if (!(report.group == sol.group) || !(report.ring == sol.ring))
    throw std::invalid_argument("compare: report and solution are over different (G, A)");
  Verdict v;
  const auto& g = report.group;
  const auto gens = report_generators(report);
  const auto sol_span = module_span_order(sol.generators);

  {
    const auto claimed = report.module_structure.cardinality();
    const auto spanned = module_span_order(gens);
    v.cardinality.passed = claimed == sol.cardinality && spanned == sol.cardinality && sol_span == sol.cardinality;
    v.cardinality.detail = "report " + claimed.to_string() + ", report span " + spanned.to_string() + ", oracle " +
                           sol.cardinality.to_string();
  }
  {
    std::size_t outside = 0;
    for (const auto& d : gens) {
      auto with = sol.generators;
      with.push_back(d);
      if (!leibniz_check(d) || !(module_span_order(with) == sol_span))
        ++outside;
    }
    v.report_in_span.passed = outside == 0;
    v.report_in_span.detail = std::to_string(gens.size() - outside) + "/" + std::to_string(gens.size()) +
                              " report generators in the oracle span";
  }
  {
    std::size_t bad = 0;
    for (const auto& d : sol.generators) {
      if (!leibniz_check(d)) {
        ++bad;
        continue;
      }
      const auto dec = decompose(d, report.classes);
      if (!(reconstruct(g, report.ring, report.classes, dec) == d))
        ++bad;
    }
    v.solution_decomposes.passed = bad == 0;
    v.solution_decomposes.detail = std::to_string(sol.generators.size() - bad) + "/" +
                                   std::to_string(sol.generators.size()) + " oracle generators decompose exactly";
  }
  {
    // The loop values of Der span a module of order |Der| / |trivial-on-loops part|.
    const auto n = static_cast<Element>(g.order());
    std::vector<std::size_t> loop_entries;
    for (Element u = 0; u < n; ++u)
      for (Element w = 0; w < n; ++w)
        if (g.mul(g.inv(w), u) == g.mul(u, g.inv(w)))
          loop_entries.push_back(static_cast<std::size_t>(u) * n + w);
    std::vector<std::vector<Value>> images;
    for (const auto& d : sol.generators) {
      std::vector<Value> img;
      for (auto idx : loop_entries)
        img.push_back(d.table()[idx]);
      images.push_back(std::move(img));
    }
    const auto image = module_span_order(report.ring, images, loop_entries.size());
    std::vector<Derivation> inner;
    for (const auto& i : report.inner_basis)
      inner.push_back(i.derivation);
    const auto inner_order = module_span_order(inner);
    const auto quotient = sol.cardinality.divided_by(image);
    bool all_inner = true;
    for (const auto& d : inner)
      all_inner = all_inner && is_inner(d);
    const auto outer_order = order_of(report.module_structure.outer_invariants);
    v.inner_matches_loops.passed = all_inner && quotient && *quotient == inner_order && image == outer_order;
    v.inner_matches_loops.detail = "loop image " + image.to_string() + ", inner span " + inner_order.to_string() +
                                   ", outer structure " + outer_order.to_string();
  }
  return v;
}

} // namespace derivkit

#endif // DERIVKIT_ORACLE_HPP_
