#ifndef DERIVKIT_ABHOM_HPP_
#define DERIVKIT_ABHOM_HPP_

// Abelianization of (sub)groups and the additive hom-sets Hom_Ab(H, A).
//
// Every additive map H -> A factors through H/[H,H], so homs are stored by
// their images on the primary cyclic generators of the quotient.

#include <algorithm>
#include <functional>
#include <memory>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "abelian.hpp"
#include "groups.hpp"
#include "rings.hpp"

namespace derivkit {

inline Subgroup commutator_subgroup(const Subgroup& h)
{
  const auto& g = h.parent();
  std::vector<Element> comms;
  std::vector<char> seen(g.order(), 0);
  for (auto a : h.elements())
    for (auto b : h.elements()) {
      auto c = g.mul(g.mul(a, b), g.mul(g.inv(a), g.inv(b)));
      if (!seen[c]) {
        seen[c] = 1;
        comms.push_back(c);
      }
    }
  return Subgroup::generated_by(g, comms);
}

inline Subgroup commutator_subgroup(const FiniteGroup& g) { return commutator_subgroup(Subgroup::whole(g)); }

/// H/[H,H] with its primary decomposition. Quotient elements are numbered
/// by the order in which their cosets' minimal elements appear in H.
class AbelianQuotient
{
public:
  explicit AbelianQuotient(Subgroup source)
  : source_{std::move(source)}
  , kernel_{commutator_subgroup(source_)}
  {
    const auto& g = source_.parent();
    projection_.assign(g.order(), npos);
    for (auto h : source_.elements()) {
      if (projection_[h] != npos)
        continue;
      const auto idx = static_cast<std::uint32_t>(coset_rep_.size());
      coset_rep_.push_back(h);
      for (auto k : kernel_.elements())
        projection_[g.mul(h, k)] = idx;
    }
    const auto q = static_cast<std::uint32_t>(coset_rep_.size());
    add_.resize(static_cast<std::size_t>(q) * q);
    for (std::uint32_t a = 0; a < q; ++a)
      for (std::uint32_t b = 0; b < q; ++b)
        add_[a * q + b] = projection_[g.mul(coset_rep_[a], coset_rep_[b])];

    components_ = primary_decomposition(q, [this, q](std::uint32_t a, std::uint32_t b) { return add_[a * q + b]; });

    coordinates_.assign(q, std::vector<std::uint64_t>(components_.size(), 0));
    std::vector<std::uint64_t> c(components_.size(), 0);
    std::vector<char> hit(q, 0);
    while (true) {
      std::uint32_t x = 0;
      for (std::size_t i = 0; i < c.size(); ++i)
        for (std::uint64_t t = 0; t < c[i]; ++t)
          x = add_[x * q + components_[i].generator];
      if (hit[x]++)
        throw std::logic_error("abelianization: dependent quotient generators");
      coordinates_[x] = c;
      std::size_t i = 0;
      for (; i < c.size(); ++i) {
        if (++c[i] < components_[i].order())
          break;
        c[i] = 0;
      }
      if (i == c.size())
        break;
    }
  }

  const Subgroup& source() const { return source_; }
  const Subgroup& commutator() const { return kernel_; }
  std::size_t size() const { return coset_rep_.size(); }

  /// pi(g); throws if g is not in the source subgroup.
  std::uint32_t project(Element g) const
  {
    if (!source_.contains(g))
      throw std::invalid_argument("element is not in the hom domain");
    return projection_[g];
  }

  const std::vector<PrimaryCyclic<std::uint32_t>>& components() const { return components_; }
  /// Minimal element of H mapping to quotient element q.
  Element lift(std::uint32_t q) const { return coset_rep_.at(q); }
  const std::vector<std::uint64_t>& coordinates(std::uint32_t q) const { return coordinates_.at(q); }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return add_[a * size() + b]; }

  std::vector<PrimaryInvariant> invariants() const
  {
    std::vector<PrimaryInvariant> out;
    for (const auto& c : components_)
      out.push_back({c.prime, c.exponent});
    return out;
  }

private:
  static constexpr std::uint32_t npos = UINT32_MAX;

  Subgroup source_;
  Subgroup kernel_;
  std::vector<std::uint32_t> projection_;
  std::vector<Element> coset_rep_;
  std::vector<std::uint32_t> add_;
  std::vector<PrimaryCyclic<std::uint32_t>> components_;
  std::vector<std::vector<std::uint64_t>> coordinates_;
};

inline std::shared_ptr<const AbelianQuotient> abelianization(const Subgroup& h)
{
  return std::make_shared<const AbelianQuotient>(h);
}

inline std::shared_ptr<const AbelianQuotient> abelianization(const FiniteGroup& g)
{
  return abelianization(Subgroup::whole(g));
}

/// Additive homomorphism H -> (A, +), stored as images of the quotient
/// generators.
class HomAb
{
public:
  HomAb(std::shared_ptr<const AbelianQuotient> domain, FiniteRing codomain, std::vector<Value> images)
  : domain_{std::move(domain)}
  , codomain_{std::move(codomain)}
  , images_{std::move(images)}
  {
    const auto& comps = domain_->components();
    if (images_.size() != comps.size())
      throw std::invalid_argument("HomAb: one image per quotient generator is required");
    for (std::size_t i = 0; i < comps.size(); ++i) {
      if (!codomain_.contains(images_[i]))
        throw std::invalid_argument("HomAb: image is not a ring element");
      if (codomain_.times(static_cast<std::int64_t>(comps[i].order()), images_[i]) != 0)
        throw std::invalid_argument("HomAb: image order does not divide generator order");
    }
  }

  static HomAb zero(std::shared_ptr<const AbelianQuotient> domain, FiniteRing codomain)
  {
    std::vector<Value> images(domain->components().size(), 0);
    return HomAb(std::move(domain), std::move(codomain), std::move(images));
  }

  /// Builds the hom with the given values; throws if `values` is not additive
  /// on H.
  static HomAb from_values(std::shared_ptr<const AbelianQuotient> domain, FiniteRing codomain,
                           const std::function<Value(Element)>& values)
  {
    std::vector<Value> images;
    for (const auto& c : domain->components())
      images.push_back(values(domain->lift(c.generator)));
    for (std::size_t i = 0; i < images.size(); ++i)
      if (codomain.times(static_cast<std::int64_t>(domain->components()[i].order()), images[i]) != 0)
        throw std::invalid_argument("map is not additive: generator order violated");
    HomAb hom(domain, codomain, std::move(images));
    for (auto h : domain->source().elements())
      if (hom.evaluate(h) != values(h))
        throw std::invalid_argument("map is not additive on the domain subgroup");
    return hom;
  }

  /// phi(g) = phi_hat(pi(g)).
  Value evaluate(Element g) const
  {
    const auto& coords = domain_->coordinates(domain_->project(g));
    Value acc = 0;
    for (std::size_t i = 0; i < coords.size(); ++i)
      acc = codomain_.add(acc, codomain_.times(static_cast<std::int64_t>(coords[i]), images_[i]));
    return acc;
  }

  const std::shared_ptr<const AbelianQuotient>& domain() const { return domain_; }
  const Subgroup& domain_subgroup() const { return domain_->source(); }
  const FiniteRing& codomain() const { return codomain_; }
  const std::vector<Value>& images() const { return images_; }

  bool is_zero() const
  {
    for (auto v : images_)
      if (v != 0)
        return false;
    return true;
  }

  /// Order of phi in the additive group Hom_Ab(H, A).
  std::uint64_t additive_order() const
  {
    std::uint64_t l = 1;
    for (auto v : images_)
      l = std::lcm(l, codomain_.additive_order(v));
    return l;
  }

  HomAb operator+(const HomAb& other) const
  {
    check_compatible(other);
    std::vector<Value> out(images_.size());
    for (std::size_t i = 0; i < out.size(); ++i)
      out[i] = codomain_.add(images_[i], other.images_[i]);
    return HomAb(domain_, codomain_, std::move(out));
  }

  HomAb times(std::int64_t k) const
  {
    std::vector<Value> out(images_.size());
    for (std::size_t i = 0; i < out.size(); ++i)
      out[i] = codomain_.times(k, images_[i]);
    return HomAb(domain_, codomain_, std::move(out));
  }

  /// Equality as maps: same domain subgroup, same ring, same values.
  friend bool operator==(const HomAb& a, const HomAb& b)
  {
    if (!(a.domain_subgroup() == b.domain_subgroup()) || !(a.codomain_ == b.codomain_))
      return false;
    for (auto h : a.domain_subgroup().elements())
      if (a.evaluate(h) != b.evaluate(h))
        return false;
    return true;
  }

private:
  void check_compatible(const HomAb& other) const
  {
    if (domain_ != other.domain_ && !(domain_subgroup() == other.domain_subgroup()))
      throw std::invalid_argument("HomAb: different domains");
  }

  std::shared_ptr<const AbelianQuotient> domain_;
  FiniteRing codomain_;
  std::vector<Value> images_;
};

inline Value evaluate_hom(const HomAb& phi, Element g) { return phi.evaluate(g); }

/// Hom_Ab(H, A) as a direct sum of cyclic groups, one per matched pair of
/// primary components Z_{q^j} of H_ab and Z_{p^i} of (A, +) with p == q.
struct HomGroup
{
  std::shared_ptr<const AbelianQuotient> domain;
  FiniteRing codomain;
  std::vector<HomAb> generators;
  std::vector<PrimaryInvariant> structure; ///< parallel to generators

  GroupOrder size() const { return order_of(structure); }
  bool trivial() const { return generators.empty(); }

  /// Every hom exactly once, as integer combinations of the generators in
  /// lexicographic coefficient order.
  std::vector<HomAb> enumerate() const
  {
    std::vector<HomAb> out;
    std::vector<std::uint64_t> c(generators.size(), 0);
    while (true) {
      auto h = HomAb::zero(domain, codomain);
      for (std::size_t i = 0; i < c.size(); ++i)
        h = h + generators[i].times(static_cast<std::int64_t>(c[i]));
      out.push_back(std::move(h));
      std::size_t i = 0;
      for (; i < c.size(); ++i) {
        if (++c[i] < ipow(structure[i].prime, structure[i].exponent))
          break;
        c[i] = 0;
      }
      if (i == c.size())
        break;
    }
    return out;
  }
};

/// Hom(Z_{q^j}, Z_{p^i}) is zero unless p == q, and then cyclic of order
/// p^min(i,j) generated by 1 -> p^(i - min(i,j)) * (component generator).
inline HomGroup hom_group(std::shared_ptr<const AbelianQuotient> quotient, const FiniteRing& a)
{
  HomGroup out{quotient, a, {}, {}};
  const auto ring_parts = additive_decomposition(a);
  const auto& comps = quotient->components();
  for (std::size_t qi = 0; qi < comps.size(); ++qi) {
    for (const auto& rp : ring_parts) {
      if (rp.prime != comps[qi].prime)
        continue;
      const auto m = std::min(rp.exponent, comps[qi].exponent);
      std::vector<Value> images(comps.size(), 0);
      images[qi] = a.times(static_cast<std::int64_t>(ipow(rp.prime, rp.exponent - m)), rp.generator);
      out.generators.emplace_back(quotient, a, std::move(images));
      out.structure.push_back({rp.prime, m});
    }
  }
  return out;
}

inline HomGroup hom_group(const Subgroup& h, const FiniteRing& a) { return hom_group(abelianization(h), a); }

inline HomGroup hom_group(const FiniteGroup& g, const FiniteRing& a) { return hom_group(Subgroup::whole(g), a); }

} // namespace derivkit

#endif // DERIVKIT_ABHOM_HPP_
