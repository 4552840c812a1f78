#ifndef DERIVKIT_GROUPS_HPP_
#define DERIVKIT_GROUPS_HPP_

// Finite groups as multiplication tables.
//
// Element 0 is always the identity. Permutations compose right to left:
// (s*t)(x) = s(t(x)).

#include <algorithm>
#include <cstdint>
#include <memory>
#include <numeric>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "abelian.hpp"

namespace derivkit {

using Element = std::uint32_t;

inline constexpr std::size_t default_group_limit = 64;

class SpecError : public std::invalid_argument
{
public:
  using std::invalid_argument::invalid_argument;
};

class SizeLimitError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// Immutable finite group. Copies share the underlying tables.
class FiniteGroup
{
public:
  /// Validates the table (Latin square, identity at index 0, associativity)
  /// and derives inverses. Throws SpecError on any violation.
  static FiniteGroup from_table(std::vector<std::vector<Element>> table, std::vector<std::string> names = {},
                                std::size_t limit = default_group_limit)
  {
    const std::size_t n = table.size();
    if (n == 0)
      throw SpecError("group table is empty");
    if (n > limit)
      throw SizeLimitError("group order " + std::to_string(n) + " exceeds limit " + std::to_string(limit));
    for (const auto& row : table) {
      if (row.size() != n)
        throw SpecError("group table is not square");
      std::vector<char> seen(n, 0);
      for (auto x : row) {
        if (x >= n)
          throw SpecError("group table entry out of range");
        if (seen[x]++)
          throw SpecError("group table row is not a permutation");
      }
    }
    for (std::size_t c = 0; c < n; ++c) {
      std::vector<char> seen(n, 0);
      for (std::size_t r = 0; r < n; ++r)
        if (seen[table[r][c]]++)
          throw SpecError("group table column is not a permutation");
    }
    for (Element x = 0; x < n; ++x)
      if (table[0][x] != x || table[x][0] != x)
        throw SpecError("element 0 is not the identity");
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c)
          if (table[table[a][b]][c] != table[a][table[b][c]])
            throw SpecError("group table is not associative");

    auto data = std::make_shared<Data>();
    data->order = n;
    data->mul.resize(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        data->mul[a * n + b] = table[a][b];
    data->inverse.resize(n);
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b)
        if (table[a][b] == 0)
          data->inverse[a] = b;
    if (names.empty()) {
      for (std::size_t i = 0; i < n; ++i)
        names.push_back(i == 0 ? "e" : "g" + std::to_string(i));
    }
    if (names.size() != n)
      throw SpecError("group element name count does not match order");
    data->names = std::move(names);
    return FiniteGroup(std::move(data));
  }

  std::size_t order() const { return data_->order; }
  static constexpr Element identity() { return 0; }

  Element mul(Element a, Element b) const { return data_->mul[a * data_->order + b]; }
  Element inv(Element a) const { return data_->inverse[a]; }
  /// g x g^-1
  Element conjugate(Element g, Element x) const { return mul(mul(g, x), inv(g)); }
  bool commute(Element a, Element b) const { return mul(a, b) == mul(b, a); }
  bool contains(Element a) const { return a < data_->order; }

  const std::string& name(Element a) const { return data_->names.at(a); }
  const std::vector<std::string>& names() const { return data_->names; }

  /// Index of the element with the given display name; throws SpecError if absent.
  Element find(const std::string& name) const
  {
    auto it = std::find(data_->names.begin(), data_->names.end(), name);
    if (it == data_->names.end())
      throw SpecError("no group element named '" + name + "'");
    return static_cast<Element>(it - data_->names.begin());
  }

  std::vector<std::vector<Element>> table() const
  {
    std::vector<std::vector<Element>> t(order(), std::vector<Element>(order()));
    for (Element a = 0; a < order(); ++a)
      for (Element b = 0; b < order(); ++b)
        t[a][b] = mul(a, b);
    return t;
  }

  bool is_abelian() const
  {
    for (Element a = 0; a < order(); ++a)
      for (Element b = a + 1; b < order(); ++b)
        if (!commute(a, b))
          return false;
    return true;
  }

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b)
  {
    return a.data_ == b.data_ || (a.data_->mul == b.data_->mul && a.data_->order == b.data_->order);
  }

private:
  struct Data
  {
    std::size_t order = 0;
    std::vector<Element> mul;
    std::vector<Element> inverse;
    std::vector<std::string> names;
  };

  explicit FiniteGroup(std::shared_ptr<const Data> d)
  : data_{std::move(d)}
  {}

  std::shared_ptr<const Data> data_;
};

/// Subgroup of a parent group, stored as a sorted element list.
class Subgroup
{
public:
  Subgroup(FiniteGroup parent, std::vector<Element> elements)
  : parent_{std::move(parent)}
  , elements_{std::move(elements)}
  {
    std::sort(elements_.begin(), elements_.end());
    elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
    member_.assign(parent_.order(), 0);
    for (auto x : elements_) {
      if (!parent_.contains(x))
        throw std::invalid_argument("subgroup element out of range");
      member_[x] = 1;
    }
    if (elements_.empty() || elements_.front() != 0)
      throw std::invalid_argument("subgroup must contain the identity");
    for (auto a : elements_) {
      if (!member_[parent_.inv(a)])
        throw std::invalid_argument("subgroup is not closed under inversion");
      for (auto b : elements_)
        if (!member_[parent_.mul(a, b)])
          throw std::invalid_argument("subgroup is not closed under multiplication");
    }
  }

  static Subgroup whole(const FiniteGroup& g)
  {
    std::vector<Element> all(g.order());
    std::iota(all.begin(), all.end(), Element{0});
    return Subgroup(g, std::move(all));
  }

  /// Smallest subgroup containing `generators`.
  static Subgroup generated_by(const FiniteGroup& g, const std::vector<Element>& generators)
  {
    std::vector<char> in(g.order(), 0);
    std::vector<Element> elems{0};
    in[0] = 1;
    for (std::size_t i = 0; i < elems.size(); ++i) {
      for (auto s : generators) {
        auto y = g.mul(elems[i], s);
        if (!in[y]) {
          in[y] = 1;
          elems.push_back(y);
        }
      }
    }
    return Subgroup(g, std::move(elems));
  }

  const FiniteGroup& parent() const { return parent_; }
  const std::vector<Element>& elements() const { return elements_; }
  std::size_t order() const { return elements_.size(); }
  bool contains(Element x) const { return x < member_.size() && member_[x]; }

  friend bool operator==(const Subgroup& a, const Subgroup& b)
  {
    return a.parent_ == b.parent_ && a.elements_ == b.elements_;
  }

private:
  FiniteGroup parent_;
  std::vector<Element> elements_;
  std::vector<char> member_;
};

struct ConjugacyClassSet
{
  std::vector<std::vector<Element>> classes;
  std::vector<Element> representative;
  std::vector<std::size_t> class_of;

  std::size_t count() const { return classes.size(); }
};

inline std::uint64_t element_order(const FiniteGroup& g, Element x)
{
  std::uint64_t k = 1;
  for (Element acc = x; acc != 0; acc = g.mul(acc, x))
    ++k;
  return k;
}

/// Classes are listed in order of their minimal element, which is also the
/// representative.
inline ConjugacyClassSet conjugacy_classes(const FiniteGroup& g)
{
  const auto n = g.order();
  ConjugacyClassSet out;
  out.class_of.assign(n, SIZE_MAX);
  for (Element x = 0; x < n; ++x) {
    if (out.class_of[x] != SIZE_MAX)
      continue;
    std::vector<Element> cls;
    for (Element h = 0; h < n; ++h) {
      auto y = g.conjugate(h, x);
      if (out.class_of[y] == SIZE_MAX) {
        out.class_of[y] = out.classes.size();
        cls.push_back(y);
      }
    }
    std::sort(cls.begin(), cls.end());
    out.representative.push_back(x);
    out.classes.push_back(std::move(cls));
  }
  return out;
}

inline Subgroup centralizer(const FiniteGroup& g, Element u)
{
  std::vector<Element> elems;
  for (Element h = 0; h < g.order(); ++h)
    if (g.commute(h, u))
      elems.push_back(h);
  return Subgroup(g, std::move(elems));
}

// ---------------------------------------------------------------------------
// Construction from specs

struct SymmetricSpec
{
  std::size_t n = 0;
};
struct CyclicSpec
{
  std::size_t m = 0;
};
/// <r, s | r^{2n} = s^2 = (rs)^2 = 1>, order 4n.
struct DihedralSpec
{
  std::size_t n = 0;
};
struct TableSpec
{
  std::vector<std::vector<Element>> rows;
  std::vector<std::string> names;
};
struct ProductSpec;

using GroupSpec = std::variant<SymmetricSpec, CyclicSpec, DihedralSpec, TableSpec, ProductSpec>;

struct ProductSpec
{
  std::vector<GroupSpec> factors;
};

namespace detail {

inline std::string cycle_name(const std::vector<std::size_t>& perm)
{
  const auto n = perm.size();
  std::vector<char> seen(n, 0);
  std::string out;
  const bool wide = n > 9;
  for (std::size_t i = 0; i < n; ++i) {
    if (seen[i] || perm[i] == i)
      continue;
    out += "(";
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = 1;
      if (wide && !first)
        out += " ";
      out += std::to_string(j + 1);
      first = false;
      j = perm[j];
    }
    out += ")";
  }
  return out.empty() ? "e" : out;
}

/// S_n listed so that S_{n-1} (fixing n) is a prefix: S_k is the concatenation
/// of the cosets t*S_{k-1} for t = e, (1 k), (2 k), ..., (k-1 k).
inline std::vector<std::vector<std::size_t>> symmetric_elements(std::size_t n)
{
  std::vector<std::vector<std::size_t>> perms{std::vector<std::size_t>(n)};
  std::iota(perms[0].begin(), perms[0].end(), std::size_t{0});
  for (std::size_t k = 2; k <= n; ++k) {
    std::vector<std::vector<std::size_t>> next = perms;
    for (std::size_t i = 0; i + 1 < k; ++i) {
      std::vector<std::size_t> t(n);
      std::iota(t.begin(), t.end(), std::size_t{0});
      std::swap(t[i], t[k - 1]);
      for (const auto& s : perms) {
        std::vector<std::size_t> ts(n);
        for (std::size_t x = 0; x < n; ++x)
          ts[x] = t[s[x]];
        next.push_back(std::move(ts));
      }
    }
    perms = std::move(next);
  }
  return perms;
}

inline std::string power_name(const std::string& base, std::size_t k)
{
  if (k == 0)
    return "";
  if (k == 1)
    return base;
  return base + "^" + std::to_string(k);
}

} // namespace detail

inline FiniteGroup symmetric_group(std::size_t n, std::size_t limit = default_group_limit)
{
  if (n < 1 || n > 5)
    throw SpecError("symmetric(n) requires 1 <= n <= 5");
  std::size_t fact = 1;
  for (std::size_t i = 2; i <= n; ++i)
    fact *= i;
  if (fact > limit)
    throw SizeLimitError("symmetric(" + std::to_string(n) + ") has order " + std::to_string(fact) +
                         " exceeding limit " + std::to_string(limit));
  auto perms = detail::symmetric_elements(n);
  std::vector<std::string> names;
  for (const auto& p : perms)
    names.push_back(detail::cycle_name(p));
  auto index_of = [&](const std::vector<std::size_t>& p) {
    return static_cast<Element>(std::find(perms.begin(), perms.end(), p) - perms.begin());
  };
  std::vector<std::vector<Element>> table(fact, std::vector<Element>(fact));
  for (std::size_t a = 0; a < fact; ++a)
    for (std::size_t b = 0; b < fact; ++b) {
      std::vector<std::size_t> ab(n);
      for (std::size_t x = 0; x < n; ++x)
        ab[x] = perms[a][perms[b][x]];
      table[a][b] = index_of(ab);
    }
  return FiniteGroup::from_table(std::move(table), std::move(names), limit);
}

inline FiniteGroup cyclic_group(std::size_t m, std::size_t limit = default_group_limit)
{
  if (m < 1)
    throw SpecError("cyclic(m) requires m >= 1");
  if (m > limit)
    throw SizeLimitError("cyclic(" + std::to_string(m) + ") exceeds limit " + std::to_string(limit));
  std::vector<std::vector<Element>> table(m, std::vector<Element>(m));
  std::vector<std::string> names;
  for (std::size_t a = 0; a < m; ++a) {
    names.push_back(a == 0 ? "e" : detail::power_name("g", a));
    for (std::size_t b = 0; b < m; ++b)
      table[a][b] = static_cast<Element>((a + b) % m);
  }
  return FiniteGroup::from_table(std::move(table), std::move(names), limit);
}

/// Elements 1, r, ..., r^{2n-1}, s, rs, ..., r^{2n-1}s; r^k s has index 2n + k.
inline FiniteGroup dihedral_group(std::size_t n, std::size_t limit = default_group_limit)
{
  if (n < 1)
    throw SpecError("dihedral(n) requires n >= 1");
  const std::size_t rot = 2 * n;
  const std::size_t order = 2 * rot;
  if (order > limit)
    throw SizeLimitError("dihedral(" + std::to_string(n) + ") has order " + std::to_string(order) +
                         " exceeding limit " + std::to_string(limit));
  std::vector<std::string> names;
  for (std::size_t k = 0; k < rot; ++k)
    names.push_back(k == 0 ? "e" : detail::power_name("r", k));
  for (std::size_t k = 0; k < rot; ++k)
    names.push_back(detail::power_name("r", k) + "s");
  std::vector<std::vector<Element>> table(order, std::vector<Element>(order));
  for (std::size_t x = 0; x < order; ++x)
    for (std::size_t y = 0; y < order; ++y) {
      // r^a s^b * r^c s^d = r^{a + (-1)^b c} s^{b+d}
      std::size_t a = x % rot, b = x / rot, c = y % rot, d = y / rot;
      std::size_t e = b == 0 ? (a + c) % rot : (a + rot - c) % rot;
      table[x][y] = static_cast<Element>(((b + d) % 2) * rot + e);
    }
  return FiniteGroup::from_table(std::move(table), std::move(names), limit);
}

/// Index of (x, y) is x * |H| + y.
inline FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h, std::size_t limit = default_group_limit)
{
  const auto n = g.order() * h.order();
  if (n > limit)
    throw SizeLimitError("direct product of order " + std::to_string(n) + " exceeds limit " + std::to_string(limit));
  std::vector<std::vector<Element>> table(n, std::vector<Element>(n));
  std::vector<std::string> names;
  for (std::size_t a = 0; a < n; ++a) {
    const auto a1 = static_cast<Element>(a / h.order()), a2 = static_cast<Element>(a % h.order());
    names.push_back(a == 0 ? "e" : "(" + g.name(a1) + "," + h.name(a2) + ")");
    for (std::size_t b = 0; b < n; ++b) {
      const auto b1 = static_cast<Element>(b / h.order()), b2 = static_cast<Element>(b % h.order());
      table[a][b] = static_cast<Element>(g.mul(a1, b1) * h.order() + h.mul(a2, b2));
    }
  }
  return FiniteGroup::from_table(std::move(table), std::move(names), limit);
}

inline FiniteGroup construct_group(const GroupSpec& spec, std::size_t limit = default_group_limit)
{
  struct Visitor
  {
    std::size_t limit;
    FiniteGroup operator()(const SymmetricSpec& s) const { return symmetric_group(s.n, limit); }
    FiniteGroup operator()(const CyclicSpec& s) const { return cyclic_group(s.m, limit); }
    FiniteGroup operator()(const DihedralSpec& s) const { return dihedral_group(s.n, limit); }
    FiniteGroup operator()(const TableSpec& s) const { return FiniteGroup::from_table(s.rows, s.names, limit); }
    FiniteGroup operator()(const ProductSpec& s) const
    {
      if (s.factors.empty())
        throw SpecError("product group needs at least one factor");
      auto acc = construct_group(s.factors.front(), limit);
      for (std::size_t i = 1; i < s.factors.size(); ++i)
        acc = direct_product(acc, construct_group(s.factors[i], limit), limit);
      return acc;
    }
  };
  return std::visit(Visitor{limit}, spec);
}

} // namespace derivkit

#endif // DERIVKIT_GROUPS_HPP_
