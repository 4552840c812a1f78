#ifndef DERIVKIT_GROUPOID_HPP_
#define DERIVKIT_GROUPOID_HPP_

// Groupoid of the adjoint action of G and characters on it.
//
// Objects are the elements of G. A morphism (u, v) goes from v^-1 u to
// u v^-1. Composition is diagrammatic: for phi = (u1, v1): a -> b and
// psi = (u2, v2): b -> c, then_compose(phi, psi) = (u2 v1, v2 v1): a -> c.
// The connected components are the subgroupoids over conjugacy classes.

#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "abhom.hpp"
#include "groups.hpp"
#include "rings.hpp"

namespace derivkit {

struct Morphism
{
  Element u = 0;
  Element v = 0;

  friend bool operator==(const Morphism&, const Morphism&) = default;
};

inline Element source(const FiniteGroup& g, Morphism m) { return g.mul(g.inv(m.v), m.u); }
inline Element target(const FiniteGroup& g, Morphism m) { return g.mul(m.u, g.inv(m.v)); }
inline bool is_loop(const FiniteGroup& g, Morphism m) { return source(g, m) == target(g, m); }

inline Morphism identity_morphism(Element a) { return {a, FiniteGroup::identity()}; }

/// phi then psi. Throws std::invalid_argument unless target(phi) == source(psi).
inline Morphism then_compose(const FiniteGroup& g, Morphism phi, Morphism psi)
{
  if (target(g, phi) != source(g, psi))
    throw std::invalid_argument("then_compose: morphisms are not composable");
  return {g.mul(psi.u, phi.v), g.mul(psi.v, phi.v)};
}

/// (u, v)^-1 = (v^-1 u v^-1, v^-1).
inline Morphism inverse(const FiniteGroup& g, Morphism m)
{
  const auto vi = g.inv(m.v);
  return {g.mul(g.mul(vi, m.u), vi), vi};
}

/// The morphism (g a, g): a -> g a g^-1.
inline Morphism conjugating_morphism(const FiniteGroup& g, Element a, Element by)
{
  return {g.mul(by, a), by};
}

/// Hom(a, a) = {(v a, v) : v in Z(a)}, listed by ascending v.
inline std::vector<std::pair<Element, Morphism>> loops_at(const FiniteGroup& g, Element a)
{
  std::vector<std::pair<Element, Morphism>> out;
  const auto z = centralizer(g, a);
  for (auto v : z.elements())
    out.emplace_back(v, Morphism{g.mul(v, a), v});
  return out;
}

/// Additive function on morphisms, stored densely: value(u, v) at u*|G| + v.
/// A derivation's coefficient table uses the same layout.
class Character
{
public:
  Character(FiniteGroup g, FiniteRing a)
  : group_{std::move(g)}
  , ring_{std::move(a)}
  , values_(group_.order() * group_.order(), 0)
  {}

  Character(FiniteGroup g, FiniteRing a, std::vector<Value> values)
  : group_{std::move(g)}
  , ring_{std::move(a)}
  , values_{std::move(values)}
  {
    if (values_.size() != group_.order() * group_.order())
      throw std::invalid_argument("character table has the wrong size");
  }

  const FiniteGroup& group() const { return group_; }
  const FiniteRing& ring() const { return ring_; }
  const std::vector<Value>& values() const { return values_; }

  Value operator()(Morphism m) const { return values_[m.u * group_.order() + m.v]; }
  Value at(Element u, Element v) const { return values_[u * group_.order() + v]; }
  void set(Morphism m, Value x) { values_[m.u * group_.order() + m.v] = x; }

  bool is_zero() const
  {
    for (auto x : values_)
      if (x != 0)
        return false;
    return true;
  }

  Character operator+(const Character& o) const { return zip(o, [this](Value a, Value b) { return ring_.add(a, b); }); }
  Character operator-(const Character& o) const { return zip(o, [this](Value a, Value b) { return ring_.sub(a, b); }); }

  Character scaled(Value c) const
  {
    Character out = *this;
    for (auto& x : out.values_)
      x = ring_.mul(c, x);
    return out;
  }

  friend bool operator==(const Character& a, const Character& b)
  {
    return a.group_ == b.group_ && a.ring_ == b.ring_ && a.values_ == b.values_;
  }

private:
  template<typename F>
  Character zip(const Character& o, F f) const
  {
    if (!(group_ == o.group_) || !(ring_ == o.ring_))
      throw std::invalid_argument("characters over different (G, A)");
    Character out = *this;
    for (std::size_t i = 0; i < values_.size(); ++i)
      out.values_[i] = f(values_[i], o.values_[i]);
    return out;
  }

  FiniteGroup group_;
  FiniteRing ring_;
  std::vector<Value> values_;
};

/// chi(phi then psi) = chi(phi) + chi(psi) for every composable pair.
inline bool is_additive(const Character& chi)
{
  const auto& g = chi.group();
  const auto& a = chi.ring();
  const auto n = static_cast<Element>(g.order());
  for (Element u1 = 0; u1 < n; ++u1)
    for (Element v1 = 0; v1 < n; ++v1) {
      const Morphism phi{u1, v1};
      const auto b = target(g, phi);
      for (Element v2 = 0; v2 < n; ++v2) {
        const Morphism psi{g.mul(v2, b), v2};
        if (chi(then_compose(g, phi, psi)) != a.add(chi(phi), chi(psi)))
          return false;
      }
    }
  return true;
}

/// Character of ad_a: +1 when the target is a but the source is not, -1 when
/// the source is a but the target is not, 0 otherwise.
inline Character ad_character(const FiniteGroup& g, const FiniteRing& a, Element x)
{
  Character chi(g, a);
  const auto n = static_cast<Element>(g.order());
  for (Element h = 0; h < n; ++h)
    for (Element k = 0; k < n; ++k) {
      const Morphism m{h, k};
      const bool t = target(g, m) == x, s = source(g, m) == x;
      if (t && !s)
        chi.set(m, a.one());
      else if (s && !t)
        chi.set(m, a.neg(a.one()));
    }
  return chi;
}

inline bool is_trivial_on_loops(const Character& chi)
{
  const auto& g = chi.group();
  const auto n = static_cast<Element>(g.order());
  for (Element u = 0; u < n; ++u)
    for (Element v = 0; v < n; ++v)
      if (is_loop(g, {u, v}) && chi.at(u, v) != 0)
        return false;
  return true;
}

/// Vertex function p on the class `members` with p(base) = 0 and chi(phi) = p(target) - p(source) on every
/// morphism of the component. p(x) is read off the conjugating morphism
/// (g base, g) for the smallest g with g base g^-1 = x.
///
/// Throws std::invalid_argument if chi is not trivial on the loops of the
/// component, since p would then depend on the path.
inline std::vector<std::pair<Element, Value>> potential(const Character& chi, const std::vector<Element>& members,
                                                        Element base)
{
  const auto& g = chi.group();
  const auto n = static_cast<Element>(g.order());
  std::vector<char> in_class(n, 0);
  for (auto x : members)
    in_class[x] = 1;
  if (!in_class[base])
    throw std::invalid_argument("potential: base is not in the class");
  for (Element u = 0; u < n; ++u)
    for (Element v = 0; v < n; ++v) {
      const Morphism m{u, v};
      if (in_class[source(g, m)] && is_loop(g, m) && chi(m) != 0)
        throw std::invalid_argument("potential: character is not trivial on loops");
    }
  std::vector<Value> p(n, 0);
  std::vector<char> done(n, 0);
  done[base] = 1;
  for (Element h = 0; h < n; ++h) {
    const auto x = g.conjugate(h, base);
    if (done[x])
      continue;
    done[x] = 1;
    p[x] = chi(conjugating_morphism(g, base, h));
  }
  std::vector<std::pair<Element, Value>> out;
  out.emplace_back(base, 0);
  for (auto x : members)
    if (x != base)
      out.emplace_back(x, p[x]);
  return out;
}

/// Smallest c with c x c^-1 = target; throws if x and target are not conjugate.
inline Element conjugator_to(const FiniteGroup& g, Element x, Element target)
{
  for (Element c = 0; c < g.order(); ++c)
    if (g.conjugate(c, x) == target)
      return c;
  throw std::invalid_argument("elements are not conjugate");
}

/// Splitting of the restriction to Hom(u, u). For each object x of the
/// component let theta_x = (c x, c): x -> u with c the smallest conjugator.
/// A morphism psi: x -> y gets phi(theta_x^-1 psi theta_y), a loop at u.
/// This is additive, and on loops at u itself it is phi.
///
/// Note the values off the loops are generally nonzero: a character that
/// vanishes off the loops of a component with more than one object is
/// additive only if it also vanishes on the loops.
inline Character section(const FiniteGroup& g, Element u_rep, const HomAb& phi)
{
  if (!(phi.domain_subgroup() == centralizer(g, u_rep)))
    throw std::invalid_argument("section: hom must be defined on the centralizer of the representative");
  Character chi(g, phi.codomain());
  const auto n = static_cast<Element>(g.order());
  std::vector<std::optional<Morphism>> theta(n);
  for (Element h = 0; h < n; ++h) {
    const auto x = g.conjugate(h, u_rep);
    if (!theta[x])
      theta[x] = conjugating_morphism(g, x, conjugator_to(g, x, u_rep));
  }
  for (Element u = 0; u < n; ++u)
    for (Element v = 0; v < n; ++v) {
      const Morphism psi{u, v};
      const auto x = source(g, psi);
      if (!theta[x])
        continue;
      const auto back = then_compose(g, then_compose(g, inverse(g, *theta[x]), psi), *theta[target(g, psi)]);
      chi.set(psi, phi.evaluate(back.v));
    }
  return chi;
}

/// v -> chi((v u, v)) as a hom on Z(u). Throws if the restriction is not
/// additive (chi was not a character).
inline HomAb restrict_to_loops(const Character& chi, Element u_rep)
{
  const auto& g = chi.group();
  auto quotient = abelianization(centralizer(g, u_rep));
  return HomAb::from_values(quotient, chi.ring(), [&](Element v) { return chi({g.mul(v, u_rep), v}); });
}

/// {chi1, chi2}(a, g) = sum_h chi1(a, h) chi2(h, g) - chi2(a, h) chi1(h, g).
inline Character character_bracket(const Character& chi1, const Character& chi2)
{
  if (!(chi1.group() == chi2.group()) || !(chi1.ring() == chi2.ring()))
    throw std::invalid_argument("character_bracket: characters over different (G, A)");
  const auto& ring = chi1.ring();
  const auto n = static_cast<Element>(chi1.group().order());
  Character out(chi1.group(), ring);
  for (Element a = 0; a < n; ++a)
    for (Element g = 0; g < n; ++g) {
      Value acc = 0;
      for (Element h = 0; h < n; ++h) {
        acc = ring.add(acc, ring.mul(chi1.at(a, h), chi2.at(h, g)));
        acc = ring.sub(acc, ring.mul(chi2.at(a, h), chi1.at(h, g)));
      }
      out.set({a, g}, acc);
    }
  return out;
}

/// Graphviz rendering: one cluster per conjugacy class, nodes are objects,
/// edges are morphisms labelled (u,v). Loops are omitted unless requested.
inline std::string groupoid_dot(const FiniteGroup& g, bool include_loops)
{
  const auto classes = conjugacy_classes(g);
  const auto n = static_cast<Element>(g.order());
  std::ostringstream out;
  out << "digraph groupoid {\n";
  for (std::size_t c = 0; c < classes.count(); ++c) {
    out << "  subgraph cluster_" << c << " {\n";
    out << "    label=\"[" << g.name(classes.representative[c]) << "]\";\n";
    for (auto x : classes.classes[c])
      out << "    n" << x << " [label=\"" << g.name(x) << "\"];\n";
    for (Element u = 0; u < n; ++u)
      for (Element v = 0; v < n; ++v) {
        const Morphism m{u, v};
        const auto s = source(g, m);
        if (classes.class_of[s] != c || (!include_loops && is_loop(g, m)))
          continue;
        out << "    n" << s << " -> n" << target(g, m) << " [label=\"(" << g.name(u) << "," << g.name(v)
            << ")\"];\n";
      }
    out << "  }\n";
  }
  out << "}\n";
  return out.str();
}

} // namespace derivkit

#endif // DERIVKIT_GROUPOID_HPP_
