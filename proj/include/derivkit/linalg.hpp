#ifndef DERIVKIT_LINALG_HPP_
#define DERIVKIT_LINALG_HPP_

// Exact linear algebra over finite local chain rings (Z_{p^e} and GF(p^k)).
//
// In such a ring every element is a unit times a power of one uniformizer, so
// a divides b iff val(a) <= val(b) and elimination with a pivot of minimal
// valuation never gets stuck. General finite rings are handled by splitting
// into local factors first (FiniteRing::local_factors).

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "abelian.hpp"
#include "rings.hpp"

namespace derivkit::linalg {

using Row = std::vector<Value>;

class ChainRing
{
public:
  explicit ChainRing(FiniteRing r)
  : ring_{std::move(r)}
  , size_{static_cast<Value>(ring_.size())}
  {
    const auto primes = prime_factors(size_);
    if (primes.size() != 1)
      throw std::invalid_argument("ChainRing: additive group is not a p-group");
    prime_ = primes[0];
    auto log_p = [this](std::uint64_t k) {
      std::uint32_t e = 0;
      while (k > 1) {
        k /= prime_;
        ++e;
      }
      return e;
    };
    length_ = log_p(ring_.additive_order(ring_.one()));
    valuation_.resize(size_);
    for (Value a = 0; a < size_; ++a)
      valuation_[a] = length_ - log_p(ring_.additive_order(a));

    quotient_.assign(static_cast<std::size_t>(size_) * size_, none);
    for (Value a = 0; a < size_; ++a)
      for (Value q = 0; q < size_; ++q) {
        auto& slot = quotient_[static_cast<std::size_t>(a) * size_ + ring_.mul(q, a)];
        if (slot == none)
          slot = q;
      }
    for (Value a = 0; a < size_; ++a)
      for (Value b = 0; b < size_; ++b)
        if ((valuation_[a] <= valuation_[b]) != (quotient(a, b) != none))
          throw std::invalid_argument("ChainRing: ring is not a chain ring");
  }

  static constexpr Value none = UINT32_MAX;

  const FiniteRing& ring() const { return ring_; }
  Value size() const { return size_; }
  std::uint32_t prime() const { return prime_; }
  std::uint32_t valuation(Value a) const { return valuation_[a]; }

  /// Some q with q a = b, or none.
  Value quotient(Value a, Value b) const { return quotient_[static_cast<std::size_t>(a) * size_ + b]; }

  std::vector<Value> annihilator(Value d) const
  {
    std::vector<Value> out;
    for (Value x = 0; x < size_; ++x)
      if (ring_.mul(x, d) == 0)
        out.push_back(x);
    return out;
  }

  /// |d R|
  GroupOrder ideal_order(Value d) const
  {
    return GroupOrder::of(size_ / annihilator(d).size());
  }

  /// r -= q * s, from column `from` on.
  void axpy(Row& r, Value q, const Row& s, std::size_t from = 0) const
  {
    if (q == 0)
      return;
    for (std::size_t j = from; j < r.size(); ++j)
      if (s[j] != 0)
        r[j] = ring_.sub(r[j], ring_.mul(q, s[j]));
  }

private:
  FiniteRing ring_;
  Value size_;
  std::uint32_t prime_ = 0;
  std::uint32_t length_ = 0;
  std::vector<std::uint32_t> valuation_;
  std::vector<Value> quotient_;
};

/// Row echelon form built one row at a time. The stored rows always span the
/// same module as the rows inserted so far: only swaps and subtracting
/// multiples of other rows are used.
class Echelon
{
public:
  Echelon(const ChainRing& r, std::size_t cols)
  : ring_{&r}
  , rows_(cols)
  {}

  void insert(Row r)
  {
    const auto cols = rows_.size();
    for (std::size_t c = 0; c < cols; ++c) {
      if (r[c] == 0)
        continue;
      if (rows_[c].empty()) {
        rows_[c] = std::move(r);
        return;
      }
      if (ring_->valuation(r[c]) < ring_->valuation(rows_[c][c]))
        std::swap(r, rows_[c]);
      ring_->axpy(r, ring_->quotient(rows_[c][c], r[c]), rows_[c], c);
    }
  }

  /// Nonzero rows in pivot order.
  std::vector<Row> rows() const
  {
    std::vector<Row> out;
    for (const auto& r : rows_)
      if (!r.empty())
        out.push_back(r);
    return out;
  }

private:
  const ChainRing* ring_;
  std::vector<Row> rows_;
};

struct SmithResult
{
  std::vector<Value> diagonal;          ///< nonzero pivots d_0, d_1, ...
  std::vector<Row> column_transform;    ///< C, cols x cols, stored by row
};

/// Diagonalizes m by row and column operations: U m C = diag(d). The pivot is
/// an entry of least valuation, first in row-major order.
inline SmithResult smith(const ChainRing& r, std::vector<Row> m, std::size_t cols)
{
  SmithResult out;
  auto& c = out.column_transform;
  c.assign(cols, Row(cols, 0));
  for (std::size_t i = 0; i < cols; ++i)
    c[i][i] = r.ring().one();
  auto swap_cols = [&](std::size_t a, std::size_t b) {
    for (auto& row : m)
      std::swap(row[a], row[b]);
    for (auto& row : c)
      std::swap(row[a], row[b]);
  };

  for (std::size_t t = 0; t < std::min(m.size(), cols); ++t) {
    std::size_t pi = 0, pj = 0;
    std::uint32_t best = UINT32_MAX;
    for (std::size_t i = t; i < m.size() && best > 0; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (m[i][j] != 0 && r.valuation(m[i][j]) < best) {
          best = r.valuation(m[i][j]);
          pi = i;
          pj = j;
          if (best == 0)
            break;
        }
    if (best == UINT32_MAX)
      break;
    std::swap(m[t], m[pi]);
    if (pj != t)
      swap_cols(t, pj);
    const auto p = m[t][t];
    for (std::size_t i = t + 1; i < m.size(); ++i)
      if (m[i][t] != 0)
        r.axpy(m[i], r.quotient(p, m[i][t]), m[t], t);
    for (std::size_t j = t + 1; j < cols; ++j) {
      if (m[t][j] == 0)
        continue;
      const auto q = r.quotient(p, m[t][j]);
      m[t][j] = 0;
      for (auto& row : c)
        if (row[t] != 0)
          row[j] = r.ring().sub(row[j], r.ring().mul(q, row[t]));
    }
    out.diagonal.push_back(p);
  }
  return out;
}

/// One cyclic summand of a kernel: generator vector and its invariant.
struct KernelGenerator
{
  Row vector;
  PrimaryInvariant order;
};

/// Additive generators of {x : M x = 0} for M given by its rows, as a direct
/// sum of primary cyclic groups.
inline std::vector<KernelGenerator> kernel(const ChainRing& r, const std::vector<Row>& rows, std::size_t cols)
{
  Echelon e(r, cols);
  for (const auto& row : rows)
    e.insert(row);
  const auto s = smith(r, e.rows(), cols);
  std::vector<KernelGenerator> out;
  for (std::size_t t = 0; t < cols; ++t) {
    const auto ann = r.annihilator(t < s.diagonal.size() ? s.diagonal[t] : 0);
    const auto& a = r.ring();
    const auto comps = primary_decomposition(static_cast<std::uint32_t>(ann.size()), [&](std::uint32_t x, std::uint32_t y) {
      const auto sum = a.add(ann[x], ann[y]);
      return static_cast<std::uint32_t>(std::lower_bound(ann.begin(), ann.end(), sum) - ann.begin());
    });
    for (const auto& comp : comps) {
      Row v(cols, 0);
      for (std::size_t i = 0; i < cols; ++i)
        v[i] = a.mul(ann[comp.generator], s.column_transform[i][t]);
      out.push_back({std::move(v), {comp.prime, comp.exponent}});
    }
  }
  return out;
}

/// Order of the R-submodule of R^cols spanned by the given vectors.
inline GroupOrder span_order(const ChainRing& r, const std::vector<Row>& vectors, std::size_t cols)
{
  Echelon e(r, cols);
  for (const auto& v : vectors)
    e.insert(v);
  GroupOrder o;
  for (auto d : smith(r, e.rows(), cols).diagonal)
    o *= r.ideal_order(d);
  return o;
}

} // namespace derivkit::linalg

#endif // DERIVKIT_LINALG_HPP_
