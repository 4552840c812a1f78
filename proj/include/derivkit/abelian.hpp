#ifndef DERIVKIT_ABELIAN_HPP_
#define DERIVKIT_ABELIAN_HPP_

// Finite abelian group helpers shared by the ring, hom and solver code:
// exact orders kept in factored form and greedy primary decomposition of a
// finite abelian group given by its addition law.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace derivkit {

inline std::vector<std::uint32_t> prime_factors(std::uint64_t n)
{
  std::vector<std::uint32_t> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(static_cast<std::uint32_t>(p));
      while (n % p == 0)
        n /= p;
    }
  }
  if (n > 1)
    out.push_back(static_cast<std::uint32_t>(n));
  return out;
}

inline bool is_prime(std::uint64_t n)
{
  if (n < 2)
    return false;
  for (std::uint64_t p = 2; p * p <= n; ++p)
    if (n % p == 0)
      return false;
  return true;
}

inline std::uint64_t ipow(std::uint64_t base, std::uint32_t exp)
{
  std::uint64_t r = 1;
  while (exp-- > 0)
    r *= base;
  return r;
}

/// Exact size of a finite abelian group, kept as a prime factorization so that
/// modules like (Z_256)^576 do not overflow.
class GroupOrder
{
public:
  GroupOrder() = default;

  static GroupOrder prime_power(std::uint32_t p, std::uint32_t e)
  {
    GroupOrder o;
    if (e > 0)
      o.factors_[p] = e;
    return o;
  }

  static GroupOrder of(std::uint64_t n)
  {
    GroupOrder o;
    for (auto p : prime_factors(n)) {
      std::uint32_t e = 0;
      while (n % p == 0) {
        n /= p;
        ++e;
      }
      o.factors_[p] = e;
    }
    return o;
  }

  GroupOrder& operator*=(const GroupOrder& other)
  {
    for (auto [p, e] : other.factors_)
      factors_[p] += e;
    return *this;
  }

  friend GroupOrder operator*(GroupOrder a, const GroupOrder& b) { return a *= b; }

  GroupOrder pow(std::uint32_t k) const
  {
    GroupOrder o;
    if (k == 0)
      return o;
    for (auto [p, e] : factors_)
      o.factors_[p] = e * k;
    return o;
  }

  /// Exact quotient; nullopt when `other` does not divide this order.
  std::optional<GroupOrder> divided_by(const GroupOrder& other) const
  {
    GroupOrder o = *this;
    for (auto [p, e] : other.factors_) {
      auto it = o.factors_.find(p);
      if (it == o.factors_.end() || it->second < e)
        return std::nullopt;
      it->second -= e;
      if (it->second == 0)
        o.factors_.erase(it);
    }
    return o;
  }

  const std::map<std::uint32_t, std::uint32_t>& factors() const { return factors_; }

  std::optional<std::uint64_t> value() const
  {
    std::uint64_t r = 1;
    for (auto [p, e] : factors_) {
      for (std::uint32_t i = 0; i < e; ++i) {
        if (r > UINT64_MAX / p)
          return std::nullopt;
        r *= p;
      }
    }
    return r;
  }

  std::string to_string() const
  {
    if (auto v = value())
      return std::to_string(*v);
    std::string s;
    for (auto [p, e] : factors_) {
      if (!s.empty())
        s += "*";
      s += std::to_string(p) + "^" + std::to_string(e);
    }
    return s;
  }

  friend bool operator==(const GroupOrder&, const GroupOrder&) = default;

private:
  std::map<std::uint32_t, std::uint32_t> factors_;
};

/// One cyclic summand Z_{p^e} of a finite abelian group.
template<typename T>
struct PrimaryCyclic
{
  std::uint32_t prime = 0;
  std::uint32_t exponent = 0;
  T generator{};

  std::uint64_t order() const { return ipow(prime, exponent); }
};

/// An invariant (p, e) standing for a summand Z_{p^e}.
struct PrimaryInvariant
{
  std::uint32_t prime = 0;
  std::uint32_t exponent = 0;

  friend auto operator<=>(const PrimaryInvariant&, const PrimaryInvariant&) = default;
};

inline GroupOrder order_of(const std::vector<PrimaryInvariant>& invariants)
{
  GroupOrder o;
  for (const auto& inv : invariants)
    o *= GroupOrder::prime_power(inv.prime, inv.exponent);
  return o;
}

/// Primary decomposition of a finite abelian group on the index set 0..n-1,
/// with 0 the neutral element and `add` the group law.
///
/// For each prime p the p-part is split greedily: pick the coset of largest
/// order modulo the summands found so far and lift it to an element of the
/// same order (always possible in a finite abelian p-group once earlier picks
/// had maximal order). Ties resolve to the smallest index, so the result is
/// deterministic. Components are sorted by prime, then by decreasing exponent.
inline std::vector<PrimaryCyclic<std::uint32_t>>
primary_decomposition(std::uint32_t n, const std::function<std::uint32_t(std::uint32_t, std::uint32_t)>& add)
{
  std::vector<PrimaryCyclic<std::uint32_t>> out;
  if (n <= 1)
    return out;

  auto multiple = [&](std::uint64_t k, std::uint32_t x) {
    std::uint32_t acc = 0;
    for (std::uint64_t i = 0; i < k; ++i)
      acc = add(acc, x);
    return acc;
  };
  std::vector<std::uint64_t> elem_order(n, 1);
  for (std::uint32_t x = 1; x < n; ++x) {
    std::uint32_t acc = x;
    std::uint64_t k = 1;
    while (acc != 0) {
      acc = add(acc, x);
      ++k;
      if (k > n)
        throw std::logic_error("primary_decomposition: element of unbounded order");
    }
    elem_order[x] = k;
  }

  for (auto p : prime_factors(n)) {
    auto is_p_power = [p](std::uint64_t k) {
      while (k % p == 0)
        k /= p;
      return k == 1;
    };
    std::vector<std::uint32_t> part;
    for (std::uint32_t x = 0; x < n; ++x)
      if (is_p_power(elem_order[x]))
        part.push_back(x);

    std::vector<char> in_span(n, 0);
    in_span[0] = 1;
    std::size_t span_size = 1;
    while (span_size < part.size()) {
      std::uint64_t best = 1;
      for (auto x : part) {
        if (in_span[x])
          continue;
        std::uint64_t c = p;
        while (!in_span[multiple(c, x)])
          c *= p;
        best = std::max(best, c);
      }
      std::optional<std::uint32_t> pick;
      for (auto x : part) {
        if (in_span[x] || elem_order[x] != best)
          continue;
        std::uint64_t c = p;
        while (!in_span[multiple(c, x)])
          c *= p;
        if (c == best) {
          pick = x;
          break;
        }
      }
      if (!pick)
        throw std::logic_error("primary_decomposition: no lift of maximal order");

      std::vector<std::uint32_t> current;
      for (std::uint32_t y = 0; y < n; ++y)
        if (in_span[y])
          current.push_back(y);
      std::uint32_t step = 0;
      for (std::uint64_t t = 1; t < best; ++t) {
        step = add(step, *pick);
        for (auto s : current) {
          auto z = add(s, step);
          if (!in_span[z]) {
            in_span[z] = 1;
            ++span_size;
          }
        }
      }
      std::uint32_t e = 0;
      for (std::uint64_t c = best; c > 1; c /= p)
        ++e;
      out.push_back({p, e, *pick});
    }
  }

  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.prime != b.prime)
      return a.prime < b.prime;
    return a.exponent > b.exponent;
  });
  return out;
}

} // namespace derivkit

#endif // DERIVKIT_ABELIAN_HPP_
