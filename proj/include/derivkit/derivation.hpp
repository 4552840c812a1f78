#ifndef DERIVKIT_DERIVATION_HPP_
#define DERIVKIT_DERIVATION_HPP_

// Group-ring arithmetic and derivations of A[G].
//
// A derivation is stored as its coefficient table: entry (h, g) is the
// coefficient of h in d(g). Read as a function of the morphism (h, g) this is
// exactly the character of d, so the conversions in both directions copy the
// table unchanged.

#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "abhom.hpp"
#include "groupoid.hpp"
#include "groups.hpp"
#include "rings.hpp"

namespace derivkit {

class GroupRingElement
{
public:
  GroupRingElement(FiniteGroup g, FiniteRing a)
  : group_{std::move(g)}
  , ring_{std::move(a)}
  , coeffs_(group_.order(), 0)
  {}

  GroupRingElement(FiniteGroup g, FiniteRing a, std::vector<Value> coeffs)
  : group_{std::move(g)}
  , ring_{std::move(a)}
  , coeffs_{std::move(coeffs)}
  {
    if (coeffs_.size() != group_.order())
      throw std::invalid_argument("group ring element has the wrong length");
  }

  /// 1 * x for a group element x.
  static GroupRingElement basis(const FiniteGroup& g, const FiniteRing& a, Element x)
  {
    GroupRingElement out(g, a);
    out.coeffs_.at(x) = a.one();
    return out;
  }

  const FiniteGroup& group() const { return group_; }
  const FiniteRing& ring() const { return ring_; }
  const std::vector<Value>& coeffs() const { return coeffs_; }
  Value operator[](Element x) const { return coeffs_[x]; }
  void set(Element x, Value c) { coeffs_.at(x) = c; }

  bool is_zero() const
  {
    for (auto c : coeffs_)
      if (c != 0)
        return false;
    return true;
  }

  GroupRingElement operator+(const GroupRingElement& o) const
  {
    check(o);
    GroupRingElement out = *this;
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      out.coeffs_[i] = ring_.add(coeffs_[i], o.coeffs_[i]);
    return out;
  }

  GroupRingElement operator-(const GroupRingElement& o) const
  {
    check(o);
    GroupRingElement out = *this;
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      out.coeffs_[i] = ring_.sub(coeffs_[i], o.coeffs_[i]);
    return out;
  }

  GroupRingElement scaled(Value c) const
  {
    GroupRingElement out = *this;
    for (auto& x : out.coeffs_)
      x = ring_.mul(c, x);
    return out;
  }

  std::string format() const
  {
    std::string out;
    for (Element x = 0; x < coeffs_.size(); ++x) {
      if (coeffs_[x] == 0)
        continue;
      if (!out.empty())
        out += " + ";
      if (coeffs_[x] != ring_.one())
        out += ring_.format(coeffs_[x]) + "*";
      out += group_.name(x);
    }
    return out.empty() ? "0" : out;
  }

  friend bool operator==(const GroupRingElement& a, const GroupRingElement& b)
  {
    return a.group_ == b.group_ && a.ring_ == b.ring_ && a.coeffs_ == b.coeffs_;
  }

private:
  void check(const GroupRingElement& o) const
  {
    if (!(group_ == o.group_) || !(ring_ == o.ring_))
      throw std::invalid_argument("group ring elements over different (G, A)");
  }

  FiniteGroup group_;
  FiniteRing ring_;
  std::vector<Value> coeffs_;
};

/// (xy)_k = sum over gh = k of x_g y_h.
inline GroupRingElement gr_mul(const GroupRingElement& x, const GroupRingElement& y)
{
  if (!(x.group() == y.group()) || !(x.ring() == y.ring()))
    throw std::invalid_argument("gr_mul: operands over different (G, A)");
  const auto& g = x.group();
  const auto& a = x.ring();
  std::vector<Value> out(g.order(), 0);
  for (Element s = 0; s < g.order(); ++s) {
    if (x[s] == 0)
      continue;
    for (Element t = 0; t < g.order(); ++t)
      if (y[t] != 0) {
        auto& c = out[g.mul(s, t)];
        c = a.add(c, a.mul(x[s], y[t]));
      }
  }
  return GroupRingElement(g, a, std::move(out));
}

/// Sum of the elements of a conjugacy class.
inline GroupRingElement class_sum(const FiniteGroup& g, const FiniteRing& a, const std::vector<Element>& cls)
{
  GroupRingElement out(g, a);
  for (auto x : cls)
    out.set(x, a.add(out[x], a.one()));
  return out;
}

class Derivation
{
public:
  Derivation(FiniteGroup g, FiniteRing a)
  : group_{std::move(g)}
  , ring_{std::move(a)}
  , table_(group_.order() * group_.order(), 0)
  {}

  Derivation(FiniteGroup g, FiniteRing a, std::vector<Value> table)
  : group_{std::move(g)}
  , ring_{std::move(a)}
  , table_{std::move(table)}
  {
    if (table_.size() != group_.order() * group_.order())
      throw std::invalid_argument("derivation table has the wrong size");
  }

  static Derivation from_character(const Character& chi) { return Derivation(chi.group(), chi.ring(), chi.values()); }
  Character character() const { return Character(group_, ring_, table_); }

  const FiniteGroup& group() const { return group_; }
  const FiniteRing& ring() const { return ring_; }
  const std::vector<Value>& table() const { return table_; }

  /// Coefficient of h in d(g).
  Value at(Element h, Element g) const { return table_[h * group_.order() + g]; }
  void set(Element h, Element g, Value c) { table_[h * group_.order() + g] = c; }

  /// d(g)
  GroupRingElement column(Element g) const
  {
    std::vector<Value> c(group_.order());
    for (Element h = 0; h < group_.order(); ++h)
      c[h] = at(h, g);
    return GroupRingElement(group_, ring_, std::move(c));
  }

  bool is_zero() const
  {
    for (auto x : table_)
      if (x != 0)
        return false;
    return true;
  }

  Derivation operator+(const Derivation& o) const { return zip(o, [this](Value a, Value b) { return ring_.add(a, b); }); }
  Derivation operator-(const Derivation& o) const { return zip(o, [this](Value a, Value b) { return ring_.sub(a, b); }); }

  Derivation scaled(Value c) const
  {
    Derivation out = *this;
    for (auto& x : out.table_)
      x = ring_.mul(c, x);
    return out;
  }

  Derivation times(std::int64_t k) const
  {
    Derivation out = *this;
    for (auto& x : out.table_)
      x = ring_.times(k, x);
    return out;
  }

  friend bool operator==(const Derivation& a, const Derivation& b)
  {
    return a.group_ == b.group_ && a.ring_ == b.ring_ && a.table_ == b.table_;
  }

private:
  template<typename F>
  Derivation zip(const Derivation& o, F f) const
  {
    if (!(group_ == o.group_) || !(ring_ == o.ring_))
      throw std::invalid_argument("derivations over different (G, A)");
    Derivation out = *this;
    for (std::size_t i = 0; i < table_.size(); ++i)
      out.table_[i] = f(table_[i], o.table_[i]);
    return out;
  }

  FiniteGroup group_;
  FiniteRing ring_;
  std::vector<Value> table_;
};

/// ad_x for an arbitrary x in A[G]: g -> xg - gx.
inline Derivation ad(const GroupRingElement& x)
{
  const auto& g = x.group();
  const auto& a = x.ring();
  Derivation d(g, a);
  for (Element col = 0; col < g.order(); ++col) {
    const auto basis = GroupRingElement::basis(g, a, col);
    const auto image = gr_mul(x, basis) - gr_mul(basis, x);
    for (Element h = 0; h < g.order(); ++h)
      d.set(h, col, image[h]);
  }
  return d;
}

inline Derivation ad(const FiniteGroup& g, const FiniteRing& a, Element x)
{
  return ad(GroupRingElement::basis(g, a, x));
}

/// d(sum lambda_g g) = sum lambda_g d(g).
inline GroupRingElement apply(const Derivation& d, const GroupRingElement& x)
{
  if (!(d.group() == x.group()) || !(d.ring() == x.ring()))
    throw std::invalid_argument("apply: operands over different (G, A)");
  const auto& a = d.ring();
  const auto n = static_cast<Element>(d.group().order());
  std::vector<Value> out(n, 0);
  for (Element g = 0; g < n; ++g) {
    if (x[g] == 0)
      continue;
    for (Element h = 0; h < n; ++h)
      out[h] = a.add(out[h], a.mul(x[g], d.at(h, g)));
  }
  return GroupRingElement(d.group(), a, std::move(out));
}

/// d(gh) = d(g) h + g d(h) on every pair of group elements.
inline bool leibniz_check(const Derivation& d)
{
  const auto& g = d.group();
  const auto& a = d.ring();
  const auto n = static_cast<Element>(g.order());
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      const auto xy = g.mul(x, y);
      const auto yi = g.inv(y), xi = g.inv(x);
      for (Element h = 0; h < n; ++h) {
        // coefficient of h in d(x) y is d(x)[h y^-1]; in x d(y) it is d(y)[x^-1 h]
        const auto rhs = a.add(d.at(g.mul(h, yi), x), d.at(g.mul(xi, h), y));
        if (d.at(h, xy) != rhs)
          return false;
      }
    }
  return true;
}

struct InnerGenerator
{
  Element label;
  Derivation derivation;
};

/// {ad_g : g not a class representative}, ascending in g. Free over A of
/// rank |G| - (number of classes).
inline std::vector<InnerGenerator> inner_basis(const FiniteGroup& g, const FiniteRing& a,
                                               const ConjugacyClassSet& classes)
{
  std::vector<char> is_rep(g.order(), 0);
  for (auto r : classes.representative)
    is_rep[r] = 1;
  std::vector<InnerGenerator> out;
  for (Element x = 0; x < g.order(); ++x)
    if (!is_rep[x])
      out.push_back({x, ad(g, a, x)});
  return out;
}

/// For finite G a derivation is inner iff its character vanishes on every
/// loop. Throws std::invalid_argument if d is not a derivation.
inline bool is_inner(const Derivation& d)
{
  if (!leibniz_check(d))
    throw std::invalid_argument("is_inner: input is not a derivation");
  return is_trivial_on_loops(d.character());
}

/// The coefficient table given by the loop formula alone: phi(g v g^-1) when
/// v^-1 u = u v^-1 = g^-1 u_rep g, 0 elsewhere. For a class of size one this
/// is a derivation. For larger classes it is not (it vanishes on the
/// non-loop morphisms, so it cannot be additive), and outer_generator should
/// be used instead; this table is kept for comparison with hand computations.
inline Derivation explicit_map_table(const FiniteGroup& g, Element u_rep, const HomAb& phi)
{
  const auto n = static_cast<Element>(g.order());
  Derivation d(g, phi.codomain());
  for (Element u = 0; u < n; ++u)
    for (Element v = 0; v < n; ++v) {
      const auto left = g.mul(g.inv(v), u);
      if (left != g.mul(u, g.inv(v)))
        continue;
      for (Element c = 0; c < n; ++c)
        if (g.conjugate(g.inv(c), u_rep) == left) {
          d.set(u, v, phi.evaluate(g.conjugate(c, v)));
          break;
        }
    }
  return d;
}

/// Outer derivation attached to phi on Z(u_rep). With g_x the smallest
/// element such that g_x x g_x^-1 = u_rep, entry (u, v) is
/// phi(g_y v g_x^-1) when x = v^-1 u and y = u v^-1 lie in the class of
/// u_rep, else 0. On loops (x = y) this is phi(g v g^-1) with g^-1 u_rep g = x.
inline Derivation outer_generator(const FiniteGroup& g, Element u_rep, const HomAb& phi)
{
  if (!(phi.domain_subgroup() == centralizer(g, u_rep)))
    throw std::invalid_argument("outer_generator: hom must be defined on Z(u_rep)");
  const auto n = static_cast<Element>(g.order());
  constexpr Element none = UINT32_MAX;
  std::vector<Element> conj(n, none);
  for (Element c = 0; c < n; ++c) {
    const auto x = g.conjugate(g.inv(c), u_rep);
    if (conj[x] == none)
      conj[x] = c;
  }
  Derivation d(g, phi.codomain());
  for (Element u = 0; u < n; ++u)
    for (Element v = 0; v < n; ++v) {
      const auto x = g.mul(g.inv(v), u), y = g.mul(u, g.inv(v));
      if (conj[x] == none)
        continue;
      d.set(u, v, phi.evaluate(g.mul(g.mul(conj[y], v), g.inv(conj[x]))));
    }
  return d;
}

/// d(x) = tau(x) x z for a central z and tau in Hom_Ab(G, A).
inline Derivation central_derivation(const FiniteGroup& g, Element z, const HomAb& tau)
{
  for (Element x = 0; x < g.order(); ++x)
    if (!g.commute(x, z))
      throw std::invalid_argument("central_derivation: z is not central");
  if (tau.domain_subgroup().order() != g.order())
    throw std::invalid_argument("central_derivation: tau must be defined on all of G");
  Derivation d(g, tau.codomain());
  for (Element x = 0; x < g.order(); ++x)
    d.set(g.mul(x, z), x, tau.evaluate(x));
  return d;
}

/// d = sum_g potential[g] ad_g + sum_i outer_generator(rep_i, outer[i]),
/// with potential zero on every representative.
struct Decomposition
{
  std::vector<Value> potential;
  std::vector<HomAb> outer;
};

inline Decomposition decompose(const Derivation& d, const ConjugacyClassSet& classes)
{
  const auto& g = d.group();
  const auto chi = d.character();
  Decomposition out;
  auto remainder = chi;
  for (auto rep : classes.representative) {
    out.outer.push_back(restrict_to_loops(chi, rep));
    remainder = remainder - section(g, rep, out.outer.back());
  }
  out.potential.assign(g.order(), 0);
  for (std::size_t c = 0; c < classes.count(); ++c)
    for (auto [x, p] : potential(remainder, classes.classes[c], classes.representative[c]))
      out.potential[x] = p;
  return out;
}

inline Derivation reconstruct(const FiniteGroup& g, const FiniteRing& a, const ConjugacyClassSet& classes,
                              const Decomposition& dec)
{
  Derivation d(g, a);
  for (Element x = 0; x < g.order(); ++x)
    if (dec.potential.at(x) != 0)
      d = d + ad(g, a, x).scaled(dec.potential[x]);
  for (std::size_t c = 0; c < classes.count(); ++c)
    if (!dec.outer.at(c).is_zero())
      d = d + outer_generator(g, classes.representative[c], dec.outer[c]);
  return d;
}

/// d1 d2 - d2 d1 as operators on A[G].
inline Derivation derivation_commutator(const Derivation& d1, const Derivation& d2)
{
  if (!(d1.group() == d2.group()) || !(d1.ring() == d2.ring()))
    throw std::invalid_argument("derivation_commutator: operands over different (G, A)");
  const auto& g = d1.group();
  Derivation out(g, d1.ring());
  for (Element col = 0; col < g.order(); ++col) {
    const auto image = apply(d1, d2.column(col)) - apply(d2, d1.column(col));
    for (Element h = 0; h < g.order(); ++h)
      out.set(h, col, image[h]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Reports and criteria

struct CriteriaRecord
{
  /// Primes of (A,+) and of G/[G,G] are disjoint. The prime-intersection
  /// criterion reads this as "every derivation is inner".
  bool paper_prime_criterion = false;
  /// Every Hom_Ab(Z(u), A) is zero, i.e. Der = Inn.
  bool exact_outer_trivial = false;
  /// gcd(ord(g), m) = 1 for all g; only defined for A = Z_m.
  std::optional<bool> gcd_sufficient;
  std::vector<std::uint32_t> ring_primes;
  std::vector<std::uint32_t> abelianization_primes;

  bool conflict() const { return paper_prime_criterion != exact_outer_trivial; }
};

inline std::vector<std::uint32_t> abelianization_primes(const FiniteGroup& g)
{
  return prime_factors(abelianization(g)->size());
}

inline CriteriaRecord outer_vanishing_check(const FiniteGroup& g, const FiniteRing& a)
{
  CriteriaRecord out;
  out.ring_primes = a.additive_primes();
  out.abelianization_primes = abelianization_primes(g);
  out.paper_prime_criterion = true;
  for (auto p : out.ring_primes)
    for (auto q : out.abelianization_primes)
      if (p == q)
        out.paper_prime_criterion = false;
  out.exact_outer_trivial = true;
  const auto classes = conjugacy_classes(g);
  for (auto rep : classes.representative)
    if (!hom_group(centralizer(g, rep), a).trivial())
      out.exact_outer_trivial = false;
  if (a.kind() == FiniteRing::Kind::Zm) {
    const auto m = a.zm_modulus();
    bool ok = true;
    for (Element x = 0; x < g.order(); ++x)
      if (std::gcd(element_order(g, x), m) != 1)
        ok = false;
    out.gcd_sufficient = ok;
  }
  return out;
}

/// A torsion-free coefficient ring admits no nonzero additive map from a
/// finite group, so every derivation is inner.
inline CriteriaRecord outer_vanishing_check(const FiniteGroup& g, IntegersTag)
{
  CriteriaRecord out;
  out.abelianization_primes = abelianization_primes(g);
  out.paper_prime_criterion = true;
  out.exact_outer_trivial = true;
  return out;
}

struct OuterGenerator
{
  std::size_t class_index;
  Element representative;
  HomAb hom;
  Derivation derivation;
  PrimaryInvariant order; ///< order * generator lies in Inn
};

struct ModuleStructure
{
  std::size_t inner_free_rank = 0;
  std::vector<PrimaryInvariant> ring_invariants;  ///< (A, +)
  std::vector<PrimaryInvariant> outer_invariants; ///< direct sum of the centralizer hom groups

  /// Abelian invariants of Der = A^rank + Out, sorted.
  std::vector<PrimaryInvariant> invariants() const
  {
    std::vector<PrimaryInvariant> out;
    for (std::size_t i = 0; i < inner_free_rank; ++i)
      out.insert(out.end(), ring_invariants.begin(), ring_invariants.end());
    out.insert(out.end(), outer_invariants.begin(), outer_invariants.end());
    std::sort(out.begin(), out.end());
    return out;
  }

  GroupOrder cardinality() const { return order_of(invariants()); }
};

struct DerivationReport
{
  FiniteGroup group;
  FiniteRing ring;
  ConjugacyClassSet classes;
  std::vector<InnerGenerator> inner_basis;
  std::size_t inner_rank = 0;
  std::vector<HomGroup> centralizer_homs; ///< per class
  std::vector<OuterGenerator> out_generators;
  ModuleStructure module_structure;
  CriteriaRecord criteria;
};

inline DerivationReport derivation_module_report(const FiniteGroup& g, const FiniteRing& a)
{
  auto classes = conjugacy_classes(g);
  DerivationReport r{g, a, classes, inner_basis(g, a, classes), 0, {}, {}, {}, outer_vanishing_check(g, a)};
  r.inner_rank = r.inner_basis.size();
  r.module_structure.inner_free_rank = r.inner_rank;
  for (const auto& c : additive_decomposition(a))
    r.module_structure.ring_invariants.push_back({c.prime, c.exponent});
  for (std::size_t c = 0; c < classes.count(); ++c) {
    const auto rep = classes.representative[c];
    auto homs = hom_group(centralizer(g, rep), a);
    for (std::size_t i = 0; i < homs.generators.size(); ++i) {
      const auto& phi = homs.generators[i];
      r.out_generators.push_back({c, rep, phi, outer_generator(g, rep, phi), homs.structure[i]});
      r.module_structure.outer_invariants.push_back(homs.structure[i]);
    }
    r.centralizer_homs.push_back(std::move(homs));
  }
  return r;
}

} // namespace derivkit

#endif // DERIVKIT_DERIVATION_HPP_
