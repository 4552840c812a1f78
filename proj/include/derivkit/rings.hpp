#ifndef DERIVKIT_RINGS_HPP_
#define DERIVKIT_RINGS_HPP_

// Finite commutative unital rings: Z_m, GF(p^k) in a polynomial basis, and
// finite products. Every element is encoded as an integer code in
// [0, size): the residue for Z_m, sum c_i p^i for a GF coefficient vector,
// and a mixed-radix tuple (first factor least significant) for products.
// Addition and multiplication go through precomputed tables.

#include <cstdint>
#include <memory>
#include <numeric>
#include <string>
#include <variant>
#include <vector>

#include "abelian.hpp"
#include "groups.hpp"

namespace derivkit {

using Value = std::uint32_t;

inline constexpr std::size_t default_ring_limit = 256;

struct ZmSpec
{
  std::uint64_t m = 0;
};
/// GF(p^k). `modulus` lists coefficients in ascending degree (length k+1,
/// monic); empty selects the built-in default.
struct GFSpec
{
  std::uint32_t p = 0;
  std::uint32_t k = 0;
  std::vector<std::uint32_t> modulus;
};
/// Symbolic torsion-free coefficient ring (Z). Carries no arithmetic.
struct IntegersSpec
{};
struct RingProductSpec;

using RingSpec = std::variant<ZmSpec, GFSpec, RingProductSpec, IntegersSpec>;

struct RingProductSpec
{
  std::vector<RingSpec> factors;
};

/// Tag for the torsion-free criterion.
struct IntegersTag
{};

namespace poly {

using Poly = std::vector<std::uint32_t>; // ascending coefficients mod p, no trailing zeros

inline void trim(Poly& a)
{
  while (!a.empty() && a.back() == 0)
    a.pop_back();
}

inline Poly from_code(std::uint64_t code, std::uint32_t p, std::size_t len)
{
  Poly a(len);
  for (std::size_t i = 0; i < len; ++i) {
    a[i] = static_cast<std::uint32_t>(code % p);
    code /= p;
  }
  return a;
}

/// Remainder of a modulo monic-or-not b over Z_p (p prime).
inline Poly mod(Poly a, Poly b, std::uint32_t p)
{
  trim(a);
  trim(b);
  if (b.empty())
    throw std::invalid_argument("polynomial division by zero");
  std::uint32_t lead_inv = 1;
  while ((static_cast<std::uint64_t>(lead_inv) * b.back()) % p != 1)
    ++lead_inv;
  while (a.size() >= b.size()) {
    const std::uint64_t q = (static_cast<std::uint64_t>(a.back()) * lead_inv) % p;
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i)
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + (p - (q * b[i]) % p)) % p);
    trim(a);
  }
  return a;
}

/// Trial division by every monic polynomial of degree 1..deg/2.
inline bool is_irreducible(Poly f, std::uint32_t p)
{
  trim(f);
  if (f.size() < 2)
    return false;
  const std::size_t deg = f.size() - 1;
  for (std::size_t d = 1; 2 * d <= deg; ++d) {
    const std::uint64_t count = ipow(p, static_cast<std::uint32_t>(d));
    for (std::uint64_t code = 0; code < count; ++code) {
      Poly g = from_code(code, p, d);
      g.push_back(1);
      if (mod(f, g, p).empty())
        return false;
    }
  }
  return true;
}

/// First monic irreducible of degree k in ascending code order of its lower
/// coefficients.
inline Poly default_modulus(std::uint32_t p, std::uint32_t k)
{
  const std::uint64_t count = ipow(p, k);
  for (std::uint64_t code = 0; code < count; ++code) {
    Poly f = from_code(code, p, k);
    f.push_back(1);
    if (is_irreducible(f, p))
      return f;
  }
  throw std::logic_error("no irreducible polynomial found");
}

} // namespace poly

class FiniteRing;

/// Local (chain ring) factor of a finite ring together with the projection
/// onto it and the embedding back (zero in every other factor).
struct LocalFactor;

class FiniteRing
{
public:
  enum class Kind { Zm, GF, Product };

  static FiniteRing zm(std::uint64_t m, std::size_t limit = default_ring_limit)
  {
    if (m < 1)
      throw SpecError("Zm requires m >= 1");
    if (m > limit)
      throw SizeLimitError("ring size " + std::to_string(m) + " exceeds limit " + std::to_string(limit));
    auto d = std::make_shared<Data>();
    d->kind = Kind::Zm;
    d->size = m;
    d->modulus_m = m;
    d->spec = ZmSpec{m};
    d->label = "Z" + std::to_string(m);
    d->one = static_cast<Value>(1 % m);
    d->fill([m](Value a, Value b) { return static_cast<Value>((a + b) % m); },
            [m](Value a, Value b) { return static_cast<Value>((static_cast<std::uint64_t>(a) * b) % m); });
    return FiniteRing(std::move(d));
  }

  static FiniteRing gf(std::uint32_t p, std::uint32_t k, std::vector<std::uint32_t> modulus = {},
                       std::size_t limit = default_ring_limit)
  {
    if (!is_prime(p))
      throw SpecError("GF requires a prime characteristic, got " + std::to_string(p));
    if (k < 1)
      throw SpecError("GF requires degree k >= 1");
    std::uint64_t size = 1;
    for (std::uint32_t i = 0; i < k; ++i) {
      size *= p;
      if (size > limit)
        throw SizeLimitError("GF(" + std::to_string(p) + "^" + std::to_string(k) + ") exceeds ring size limit " +
                             std::to_string(limit));
    }
    poly::Poly f;
    if (modulus.empty()) {
      f = poly::default_modulus(p, k);
    } else {
      f = modulus;
      for (auto c : f)
        if (c >= p)
          throw SpecError("GF modulus coefficient out of range");
      poly::trim(f);
      if (f.size() != k + 1 || f.back() != 1)
        throw SpecError("GF modulus must be monic of degree " + std::to_string(k));
      if (!poly::is_irreducible(f, p))
        throw SpecError("GF modulus is reducible over Z" + std::to_string(p));
    }
    auto d = std::make_shared<Data>();
    d->kind = Kind::GF;
    d->size = size;
    d->p = p;
    d->k = k;
    d->gf_modulus = f;
    d->spec = GFSpec{p, k, f};
    d->label = k == 1 ? "GF(" + std::to_string(p) + ")" : "GF(" + std::to_string(p) + "^" + std::to_string(k) + ")";
    d->one = 1;
    d->fill(
        [p, k](Value a, Value b) {
          Value out = 0, place = 1;
          for (std::uint32_t i = 0; i < k; ++i) {
            out += ((a % p + b % p) % p) * place;
            a /= p;
            b /= p;
            place *= p;
          }
          return out;
        },
        [p, k, f](Value a, Value b) {
          auto pa = poly::from_code(a, p, k), pb = poly::from_code(b, p, k);
          poly::Poly prod(2 * k, 0);
          for (std::uint32_t i = 0; i < k; ++i)
            for (std::uint32_t j = 0; j < k; ++j)
              prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + static_cast<std::uint64_t>(pa[i]) * pb[j]) % p);
          auto r = poly::mod(prod, f, p);
          Value out = 0, place = 1;
          for (std::size_t i = 0; i < r.size(); ++i, place *= p)
            out += r[i] * place;
          return out;
        });
    return FiniteRing(std::move(d));
  }

  static FiniteRing product(std::vector<FiniteRing> factors, std::size_t limit = default_ring_limit)
  {
    if (factors.empty())
      throw SpecError("product ring needs at least one factor");
    std::uint64_t size = 1;
    for (const auto& f : factors) {
      size *= f.size();
      if (size > limit)
        throw SizeLimitError("product ring exceeds size limit " + std::to_string(limit));
    }
    auto d = std::make_shared<Data>();
    d->kind = Kind::Product;
    d->size = size;
    RingProductSpec spec;
    std::uint64_t stride = 1;
    for (const auto& f : factors) {
      d->strides.push_back(stride);
      stride *= f.size();
      spec.factors.push_back(f.spec());
      d->label += (d->label.empty() ? "" : "x") + f.label();
    }
    d->factors = factors;
    d->spec = std::move(spec);
    auto split = [dp = d.get()](Value a, std::size_t i) {
      return static_cast<Value>((a / dp->strides[i]) % dp->factors[i].size());
    };
    d->one = 0;
    for (std::size_t i = 0; i < factors.size(); ++i)
      d->one += static_cast<Value>(factors[i].one() * d->strides[i]);
    d->fill(
        [dp = d.get(), split](Value a, Value b) {
          Value out = 0;
          for (std::size_t i = 0; i < dp->factors.size(); ++i)
            out += static_cast<Value>(dp->factors[i].add(split(a, i), split(b, i)) * dp->strides[i]);
          return out;
        },
        [dp = d.get(), split](Value a, Value b) {
          Value out = 0;
          for (std::size_t i = 0; i < dp->factors.size(); ++i)
            out += static_cast<Value>(dp->factors[i].mul(split(a, i), split(b, i)) * dp->strides[i]);
          return out;
        });
    return FiniteRing(std::move(d));
  }

  Kind kind() const { return data_->kind; }
  std::size_t size() const { return data_->size; }
  const std::string& label() const { return data_->label; }
  const RingSpec& spec() const { return data_->spec; }

  static constexpr Value zero() { return 0; }
  Value one() const { return data_->one; }
  bool contains(Value a) const { return a < data_->size; }

  Value add(Value a, Value b) const { return data_->add[a * data_->size + b]; }
  Value mul(Value a, Value b) const { return data_->mul[a * data_->size + b]; }
  Value neg(Value a) const { return data_->neg[a]; }
  Value sub(Value a, Value b) const { return add(a, neg(b)); }

  /// Integer multiple k*a (k may be negative).
  Value times(std::int64_t k, Value a) const
  {
    const auto ord = static_cast<std::int64_t>(additive_order(a));
    k %= ord;
    if (k < 0)
      k += ord;
    Value acc = 0;
    for (std::int64_t i = 0; i < k; ++i)
      acc = add(acc, a);
    return acc;
  }

  /// Image of the integer k under Z -> A.
  Value from_integer(std::int64_t k) const { return times(k, one()); }

  std::uint64_t additive_order(Value a) const { return data_->add_order[a]; }

  /// Distinct primes dividing |A| (the primes of the additive group).
  std::vector<std::uint32_t> additive_primes() const { return prime_factors(size()); }

  // Structural accessors
  std::uint64_t zm_modulus() const { return data_->modulus_m; }
  std::uint32_t gf_prime() const { return data_->p; }
  std::uint32_t gf_degree() const { return data_->k; }
  const std::vector<std::uint32_t>& gf_modulus() const { return data_->gf_modulus; }
  const std::vector<FiniteRing>& factors() const { return data_->factors; }

  /// Component i of a product-ring value.
  Value component(Value a, std::size_t i) const
  {
    return static_cast<Value>((a / data_->strides[i]) % data_->factors[i].size());
  }
  std::uint64_t stride(std::size_t i) const { return data_->strides[i]; }

  std::string format(Value a) const
  {
    switch (kind()) {
    case Kind::Zm:
      return std::to_string(a);
    case Kind::GF: {
      auto c = poly::from_code(a, data_->p, data_->k);
      std::string out;
      for (std::size_t i = c.size(); i-- > 0;) {
        if (c[i] == 0)
          continue;
        if (!out.empty())
          out += "+";
        if (i == 0 || c[i] != 1)
          out += std::to_string(c[i]);
        if (i >= 1)
          out += "x";
        if (i >= 2)
          out += "^" + std::to_string(i);
      }
      return out.empty() ? "0" : out;
    }
    case Kind::Product: {
      std::string out = "(";
      for (std::size_t i = 0; i < data_->factors.size(); ++i)
        out += (i ? "," : "") + data_->factors[i].format(component(a, i));
      return out + ")";
    }
    }
    return {};
  }

  inline std::vector<LocalFactor> local_factors() const;

  friend bool operator==(const FiniteRing& a, const FiniteRing& b)
  {
    return a.data_ == b.data_ ||
           (a.data_->size == b.data_->size && a.data_->add == b.data_->add && a.data_->mul == b.data_->mul);
  }

private:
  struct Data
  {
    Kind kind = Kind::Zm;
    std::size_t size = 0;
    Value one = 0;
    std::vector<Value> add, mul, neg;
    std::vector<std::uint64_t> add_order;
    std::string label;
    RingSpec spec;
    std::uint64_t modulus_m = 0;
    std::uint32_t p = 0, k = 0;
    std::vector<std::uint32_t> gf_modulus;
    std::vector<FiniteRing> factors;
    std::vector<std::uint64_t> strides;

    template<typename Add, typename Mul>
    void fill(Add addf, Mul mulf)
    {
      add.resize(size * size);
      mul.resize(size * size);
      neg.resize(size);
      for (Value a = 0; a < size; ++a)
        for (Value b = 0; b < size; ++b) {
          add[a * size + b] = addf(a, b);
          mul[a * size + b] = mulf(a, b);
          if (add[a * size + b] == 0)
            neg[a] = b;
        }
      add_order.assign(size, 1);
      for (Value a = 1; a < size; ++a) {
        std::uint64_t k = 1;
        for (Value acc = a; acc != 0; acc = add[acc * size + a])
          ++k;
        add_order[a] = k;
      }
    }
  };

  explicit FiniteRing(std::shared_ptr<const Data> d)
  : data_{std::move(d)}
  {}

  std::shared_ptr<const Data> data_;
};

struct LocalFactor
{
  FiniteRing ring;
  std::vector<Value> project; ///< indexed by parent value
  std::vector<Value> inject;  ///< indexed by factor value
};

/// Splits A into local chain rings: Z_m by CRT into Z_{p^e}, GF fields as
/// they are, products componentwise. The zero ring has no factors.
inline std::vector<LocalFactor> FiniteRing::local_factors() const
{
  std::vector<LocalFactor> out;
  switch (kind()) {
  case Kind::GF: {
    std::vector<Value> id(size());
    std::iota(id.begin(), id.end(), Value{0});
    out.push_back({*this, id, id});
    break;
  }
  case Kind::Zm: {
    const auto m = zm_modulus();
    for (auto p : prime_factors(m)) {
      std::uint64_t q = 1;
      while (m % (q * p) == 0)
        q *= p;
      if (q == m) {
        std::vector<Value> id(size());
        std::iota(id.begin(), id.end(), Value{0});
        out.push_back({*this, id, id});
        break;
      }
      // idempotent: 1 mod q, 0 mod m/q
      std::uint64_t idem = 0;
      for (std::uint64_t t = 0; t < m; t += m / q)
        if (t % q == 1 % q) {
          idem = t;
          break;
        }
      auto local = FiniteRing::zm(q, SIZE_MAX);
      std::vector<Value> proj(m), inj(q);
      for (Value a = 0; a < m; ++a)
        proj[a] = static_cast<Value>(a % q);
      for (Value x = 0; x < q; ++x)
        inj[x] = static_cast<Value>((x * idem) % m);
      out.push_back({local, std::move(proj), std::move(inj)});
    }
    break;
  }
  case Kind::Product: {
    for (std::size_t i = 0; i < factors().size(); ++i) {
      for (auto& lf : factors()[i].local_factors()) {
        std::vector<Value> proj(size());
        for (Value a = 0; a < size(); ++a)
          proj[a] = lf.project[component(a, i)];
        std::vector<Value> inj(lf.ring.size());
        for (Value x = 0; x < lf.ring.size(); ++x)
          inj[x] = static_cast<Value>(lf.inject[x] * stride(i));
        out.push_back({lf.ring, std::move(proj), std::move(inj)});
      }
    }
    break;
  }
  }
  return out;
}

inline FiniteRing construct_ring(const RingSpec& spec, std::size_t limit = default_ring_limit)
{
  struct Visitor
  {
    std::size_t limit;
    FiniteRing operator()(const ZmSpec& s) const { return FiniteRing::zm(s.m, limit); }
    FiniteRing operator()(const GFSpec& s) const { return FiniteRing::gf(s.p, s.k, s.modulus, limit); }
    FiniteRing operator()(const RingProductSpec& s) const
    {
      std::vector<FiniteRing> fs;
      for (const auto& f : s.factors)
        fs.push_back(construct_ring(f, limit));
      return FiniteRing::product(std::move(fs), limit);
    }
    FiniteRing operator()(const IntegersSpec&) const
    {
      throw SpecError("Integers is a symbolic tag and supports no element arithmetic");
    }
  };
  return std::visit(Visitor{limit}, spec);
}

inline std::uint64_t additive_order(const FiniteRing& a, Value x) { return a.additive_order(x); }

/// Independent primary cyclic generators of (A, +).
inline std::vector<PrimaryCyclic<Value>> additive_decomposition(const FiniteRing& a)
{
  return primary_decomposition(static_cast<std::uint32_t>(a.size()),
                               [&a](std::uint32_t x, std::uint32_t y) { return a.add(x, y); });
}

/// Exhaustive check of the commutative unital ring axioms.
inline bool verify_ring_axioms(const FiniteRing& a)
{
  const auto n = static_cast<Value>(a.size());
  for (Value x = 0; x < n; ++x) {
    if (a.add(x, 0) != x || a.mul(x, a.one()) != x || a.add(x, a.neg(x)) != 0)
      return false;
    for (Value y = 0; y < n; ++y) {
      if (a.add(x, y) != a.add(y, x) || a.mul(x, y) != a.mul(y, x))
        return false;
      for (Value z = 0; z < n; ++z) {
        if (a.add(a.add(x, y), z) != a.add(x, a.add(y, z)))
          return false;
        if (a.mul(a.mul(x, y), z) != a.mul(x, a.mul(y, z)))
          return false;
        if (a.mul(x, a.add(y, z)) != a.add(a.mul(x, y), a.mul(x, z)))
          return false;
      }
    }
  }
  return n == 1 || a.one() != 0;
}

} // namespace derivkit

#endif // DERIVKIT_RINGS_HPP_
