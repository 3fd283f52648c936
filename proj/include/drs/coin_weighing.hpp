#pragma once

// Non-adaptive coin weighing: strategies, their exhaustive verification, the
// exact minimum M(n) for tiny n, and the correspondence with doubly resolving
// sets of Q_n that contain the all-zero vertex:
//
//   d(u, 0) - d(u, x) = 2 (u . x) - |x|
//
// so weighing outcomes and doubly-resolving signatures anchored at 0 carry the
// same information. Also the binary-expansion complex and the resulting
// upper-bound table for the minimum doubly resolving set of Q_n.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "drs/families.hpp"
#include "drs/resolving.hpp"

namespace drs {

inline constexpr int kStrategyVerifyCap = 24;
inline constexpr int kBruteForceCoinCap = 5;

/// Bit j of a row selects coin j+1 for that weighing.
struct WeighingStrategy {
  int n = 0;
  std::vector<std::uint32_t> rows;

  friend bool operator==(const WeighingStrategy&,
                         const WeighingStrategy&) = default;
};

/// True iff u -> (popcount(u & x))_x is injective over all 2^n distributions.
inline bool is_weighing_strategy(const WeighingStrategy& s,
                                 int cap = kStrategyVerifyCap) {
  if (s.n < 1 || s.n > cap)
    throw std::invalid_argument("coin count outside [1," + std::to_string(cap) +
                                "]");
  const std::uint32_t limit = std::uint32_t{1} << s.n;
  for (auto x : s.rows)
    if (x >= limit) throw std::invalid_argument("weighing row wider than n");
  // Partition refinement: classes[u] identifies the outcome prefix of u.
  std::vector<std::uint32_t> classes(limit, 0);
  std::uint64_t class_count = 1;
  std::unordered_map<std::uint64_t, std::uint32_t> relabel;
  for (auto x : s.rows) {
    relabel.clear();
    relabel.reserve(std::min<std::uint64_t>(class_count * (s.n + 1), limit));
    for (std::uint32_t u = 0; u < limit; ++u) {
      const std::uint64_t key =
          std::uint64_t{classes[u]} * (s.n + 1) + std::popcount(u & x);
      auto [it, _] = relabel.try_emplace(
          key, static_cast<std::uint32_t>(relabel.size()));
      classes[u] = it->second;
    }
    class_count = relabel.size();
    if (class_count == limit) return true;
  }
  return class_count == limit;
}

/// Exact M(n) by enumerating subsets of nonzero rows by size, each size in
/// lexicographic order; returns the first strategy found.
inline std::pair<int, WeighingStrategy> brute_force_M(int n) {
  if (n < 1 || n > kBruteForceCoinCap)
    throw std::invalid_argument("brute-force M(n) needs 1 <= n <= " +
                                std::to_string(kBruteForceCoinCap));
  const std::uint32_t max_row = (std::uint32_t{1} << n) - 1;
  for (std::uint32_t k = 1; k <= max_row; ++k) {
    std::vector<std::uint32_t> pick(k);
    for (std::uint32_t i = 0; i < k; ++i) pick[i] = i + 1;
    while (true) {
      WeighingStrategy s{n, pick};
      if (is_weighing_strategy(s)) return {static_cast<int>(k), s};
      // next k-combination of {1..max_row}
      std::int64_t i = static_cast<std::int64_t>(k) - 1;
      while (i >= 0 && pick[i] == max_row - (k - 1 - i)) --i;
      if (i < 0) break;
      ++pick[i];
      for (std::uint32_t j = static_cast<std::uint32_t>(i) + 1; j < k; ++j)
        pick[j] = pick[j - 1] + 1;
    }
  }
  throw std::logic_error("identity weighings always work");
}

/// {0} together with the weighings, read as vertices of Q_n.
inline LandmarkSet strategy_to_drs(const WeighingStrategy& s) {
  if (!is_weighing_strategy(s))
    throw std::invalid_argument("not a weighing strategy");
  LandmarkSet out{0};
  for (auto x : s.rows) detail::push_unique(out, x);
  return out;
}

/// Moves `member` of a landmark set of Q_n to the all-zero vertex.
inline LandmarkSet translate_to_origin(std::span<const VertexId> s,
                                       VertexId member) {
  if (std::find(s.begin(), s.end(), member) == s.end())
    throw std::invalid_argument("translation target is not in the set");
  return cube_translate(s, member);
}

/// Doubly resolving set of Q_n containing 0 -> weighing strategy S \ {0}.
inline WeighingStrategy drs_to_strategy(int n, std::span<const VertexId> s) {
  if (std::find(s.begin(), s.end(), VertexId{0}) == s.end())
    throw std::invalid_argument(
        "set must contain the all-zero vertex; translate it first");
  if (!is_doubly_resolving(CubeMetric(n), s))
    throw std::invalid_argument("set does not doubly resolve Q_" +
                                std::to_string(n));
  WeighingStrategy out{n, {}};
  for (VertexId x : s)
    if (x != 0) out.rows.push_back(x);
  return out;
}

/// Strategy for n+1 coins -> strategy for n coins (forget the last coin).
inline WeighingStrategy project_strategy(const WeighingStrategy& s) {
  if (s.n < 2) throw std::invalid_argument("projection needs n+1 >= 2 coins");
  const std::uint32_t mask = (std::uint32_t{1} << (s.n - 1)) - 1;
  WeighingStrategy out{s.n - 1, {}};
  for (auto x : s.rows) {
    const std::uint32_t y = x & mask;
    if (y != 0 && std::find(out.rows.begin(), out.rows.end(), y) ==
                      out.rows.end())
      out.rows.push_back(y);
  }
  return out;
}

/// Strategy for n coins -> strategy for n+1 coins: add one weighing of the new
/// coin alone.
inline WeighingStrategy extend_strategy(const WeighingStrategy& s) {
  if (s.n < 1 || s.n >= 31) throw std::invalid_argument("coin count out of range");
  WeighingStrategy out{s.n + 1, s.rows};
  out.rows.push_back(std::uint32_t{1} << s.n);
  return out;
}

// --- binary-expansion complex and upper bounds ------------------------------

/// Family of finite integer sets, each stored sorted.
struct Complex {
  std::vector<std::vector<int>> faces;

  std::size_t total_size() const {
    std::size_t total = 0;
    for (const auto& f : faces) total += f.size();
    return total;
  }

  /// Closed under taking subsets. Checking the one-element deletions of
  /// every face is enough.
  bool is_subset_closed() const {
    auto contains = [this](const std::vector<int>& f) {
      return std::find(faces.begin(), faces.end(), f) != faces.end();
    };
    for (const auto& f : faces) {
      for (std::size_t i = 0; i < f.size(); ++i) {
        std::vector<int> g = f;
        g.erase(g.begin() + static_cast<std::ptrdiff_t>(i));
        if (!contains(g)) return false;
      }
    }
    return true;
  }
};

/// F_j = exponents in the binary expansion of j, for j = 0..m-1.
inline Complex lindstrom_complex(int m) {
  if (m < 1) throw std::invalid_argument("complex needs m >= 1");
  Complex c;
  for (int j = 0; j < m; ++j) {
    std::vector<int> face;
    for (int b = 0; (j >> b) != 0; ++b)
      if ((j >> b) & 1) face.push_back(b);
    c.faces.push_back(std::move(face));
  }
  return c;
}

/// P(n) for n = 1..size(); P(n) bounds the minimum doubly resolving set of Q_n.
class BoundsTable {
 public:
  BoundsTable() = default;
  explicit BoundsTable(std::vector<int> values) : values_(std::move(values)) {}

  std::size_t size() const { return values_.size(); }
  int operator()(std::size_t n) const {
    if (n < 1 || n > values_.size())
      throw std::out_of_range("bound not computed for n=" + std::to_string(n));
    return values_[n - 1];
  }
  const std::vector<int>& values() const { return values_; }

  BoundsTable truncated(std::size_t n_max) const {
    return BoundsTable(std::vector<int>(
        values_.begin(),
        values_.begin() + static_cast<std::ptrdiff_t>(std::min(n_max, size()))));
  }

  std::string to_csv() const {
    std::ostringstream out;
    out << "n,P\n";
    for (std::size_t n = 1; n <= values_.size(); ++n)
      out << n << ',' << values_[n - 1] << '\n';
    return out.str();
  }

 private:
  std::vector<int> values_;
};

/// Walks i = 1..m-1; the popcount(i) new coins gained from face F_i all get
/// bound i+1 (the complex F_{i+1} has i+1 faces).
inline BoundsTable algorithm1_bounds(int m) {
  if (m < 2) throw std::invalid_argument("bounds need m >= 2");
  std::vector<int> p;
  std::size_t covered = 0;
  for (int i = 1; i < m; ++i) {
    std::size_t next = covered;
    for (int j = i; j > 0; j /= 2)
      if (j % 2 == 1) ++next;
    for (std::size_t n = covered + 1; n <= next; ++n) p.push_back(i + 1);
    covered = next;
  }
  return BoundsTable(std::move(p));
}

/// Smallest m whose table reaches n_max, truncated to n = 1..n_max.
inline BoundsTable bounds_upto(std::size_t n_max) {
  if (n_max < 1) throw std::invalid_argument("--upto must be >= 1");
  std::size_t reach = 0;
  int m = 1;
  while (reach < n_max) {
    reach += static_cast<std::size_t>(std::popcount(static_cast<unsigned>(m)));
    ++m;
  }
  return algorithm1_bounds(std::max(m, 2)).truncated(n_max);
}

}  // namespace drs
