#pragma once

// Hamming graphs H(n,q), hypercubes Q_n = H(n,2) and folded hypercubes F_n:
// integer vertex encodings, closed-form distance oracles, explicit graphs, and
// the explicit landmark constructions / set transfer maps between Q_n and F_n.
//
// Encodings (coordinate i of a vector, counted from 1, is digit / bit i-1):
//   H(n,q): base-q little-endian integer in [0, q^n).
//   Q_n:    n-bit integer, bit i = coordinate i+1.
//   F_n:    the representative of {u, complement(u)} whose bit n-1 is 0,
//           so ids run over [0, 2^(n-1)).

#include <algorithm>
#include <bit>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "drs/graph.hpp"
#include "drs/resolving.hpp"

namespace drs {

/// Oracle-only queries may go up to this many vertices.
inline constexpr std::uint64_t kOracleVertexCap = std::uint64_t{1} << 20;
/// Explicit graphs (adjacency plus |V|^2 distances) stop here.
inline constexpr std::uint64_t kGraphVertexCap = std::uint64_t{1} << 12;

namespace detail {

inline std::uint64_t checked_power(std::uint64_t base, int exp,
                                   std::uint64_t cap) {
  std::uint64_t r = 1;
  for (int i = 0; i < exp; ++i) {
    if (r > cap / base)
      throw std::invalid_argument("family size exceeds cap of " +
                                  std::to_string(cap) + " vertices");
    r *= base;
  }
  if (r > cap)
    throw std::invalid_argument("family size exceeds cap of " +
                                std::to_string(cap) + " vertices");
  return r;
}

inline std::uint32_t low_mask(int bits) {
  return bits >= 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << bits) - 1;
}

}  // namespace detail

// --- distance formulas ------------------------------------------------------

inline std::vector<int> hamming_digits(int n, int q, std::uint64_t code) {
  std::vector<int> digits(n);
  for (int i = 0; i < n; ++i) {
    digits[i] = static_cast<int>(code % q);
    code /= q;
  }
  return digits;
}

inline std::uint64_t hamming_encode(int q, const std::vector<int>& digits) {
  std::uint64_t code = 0;
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
    if (*it < 0 || *it >= q)
      throw std::invalid_argument("digit out of range for alphabet size");
    code = code * q + *it;
  }
  return code;
}

/// Number of coordinates where the base-q words differ.
inline int hamming_distance(int n, int q, std::uint64_t u, std::uint64_t v) {
  const std::uint64_t size = detail::checked_power(q, n, ~std::uint64_t{0});
  if (u >= size || v >= size)
    throw std::invalid_argument("code outside H(" + std::to_string(n) + "," +
                                std::to_string(q) + ")");
  int d = 0;
  for (int i = 0; i < n; ++i) {
    d += (u % q) != (v % q);
    u /= q;
    v /= q;
  }
  return d;
}

inline int cube_distance(int n, std::uint32_t u, std::uint32_t v) {
  if (((u | v) & ~detail::low_mask(n)) != 0)
    throw std::invalid_argument("code outside Q_" + std::to_string(n));
  return std::popcount(u ^ v);
}

/// Representative of {x, complement(x)} with bit n-1 clear.
inline std::uint32_t fold_canonical(int n, std::uint32_t x) {
  const std::uint32_t top = std::uint32_t{1} << (n - 1);
  return (x & top) ? (~x & detail::low_mask(n)) : x;
}

inline std::uint32_t cube_complement(int n, std::uint32_t x) {
  return ~x & detail::low_mask(n);
}

inline int folded_distance(int n, std::uint32_t a, std::uint32_t b) {
  if (((a | b) & ~detail::low_mask(n - 1)) != 0)
    throw std::invalid_argument("code is not a canonical F_" +
                                std::to_string(n) + " representative");
  const int d = std::popcount(a ^ b);
  return std::min(d, n - d);
}

// --- metric oracles ---------------------------------------------------------

class HammingMetric {
 public:
  HammingMetric(int n, int q, std::uint64_t cap = kOracleVertexCap)
      : n_(n), q_(q) {
    if (n < 1 || q < 2)
      throw std::invalid_argument("H(n,q) needs n >= 1 and q >= 2");
    size_ = detail::checked_power(q, n, cap);
  }
  int n() const { return n_; }
  int q() const { return q_; }
  std::size_t vertex_count() const { return size_; }
  int distance(VertexId u, VertexId v) const {
    int d = 0;
    for (int i = 0; i < n_; ++i) {
      d += (u % q_) != (v % q_);
      u /= q_;
      v /= q_;
    }
    return d;
  }

 private:
  int n_;
  int q_;
  std::uint64_t size_;
};

class CubeMetric {
 public:
  explicit CubeMetric(int n, std::uint64_t cap = kOracleVertexCap) : n_(n) {
    if (n < 1) throw std::invalid_argument("Q_n needs n >= 1");
    detail::checked_power(2, n, cap);
  }
  int n() const { return n_; }
  std::size_t vertex_count() const { return std::size_t{1} << n_; }
  int distance(VertexId u, VertexId v) const { return std::popcount(u ^ v); }

 private:
  int n_;
};

class FoldedMetric {
 public:
  explicit FoldedMetric(int n, std::uint64_t cap = kOracleVertexCap) : n_(n) {
    if (n < 2) throw std::invalid_argument("F_n needs n >= 2");
    detail::checked_power(2, n - 1, cap);
  }
  int n() const { return n_; }
  std::size_t vertex_count() const { return std::size_t{1} << (n_ - 1); }
  int distance(VertexId a, VertexId b) const {
    const int d = std::popcount(a ^ b);
    return std::min(d, n_ - d);
  }

 private:
  int n_;
};

// --- family descriptors and explicit graphs ---------------------------------

struct Family {
  enum class Kind { kHamming, kCube, kFolded };
  Kind kind = Kind::kCube;
  int n = 1;
  int q = 2;

  static Family hamming(int n, int q) { return {Kind::kHamming, n, q}; }
  static Family cube(int n) { return {Kind::kCube, n, 2}; }
  static Family folded(int n) { return {Kind::kFolded, n, 2}; }

  friend bool operator==(const Family&, const Family&) = default;
};

/// Parses `q<n>`, `f<n>` or `h<n>,<q>`.
inline Family parse_family(const std::string& desc) {
  auto number = [&desc](const std::string& s) {
    if (s.empty() || s.size() > 6 ||
        s.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("bad family descriptor '" + desc + "'");
    return std::stoi(s);
  };
  if (desc.size() < 2) throw std::invalid_argument("bad family descriptor '" + desc + "'");
  const std::string rest = desc.substr(1);
  switch (desc[0]) {
    case 'q': {
      const int n = number(rest);
      if (n < 1) throw std::invalid_argument("Q_n needs n >= 1");
      return Family::cube(n);
    }
    case 'f': {
      const int n = number(rest);
      if (n < 2) throw std::invalid_argument("F_n needs n >= 2");
      return Family::folded(n);
    }
    case 'h': {
      const auto comma = rest.find(',');
      if (comma == std::string::npos)
        throw std::invalid_argument("bad family descriptor '" + desc + "'");
      const int n = number(rest.substr(0, comma));
      const int q = number(rest.substr(comma + 1));
      if (n < 1 || q < 2) throw std::invalid_argument("H(n,q) needs n >= 1, q >= 2");
      return Family::hamming(n, q);
    }
    default:
      throw std::invalid_argument("bad family descriptor '" + desc + "'");
  }
}

inline std::string to_string(const Family& f) {
  switch (f.kind) {
    case Family::Kind::kCube:
      return "q" + std::to_string(f.n);
    case Family::Kind::kFolded:
      return "f" + std::to_string(f.n);
    case Family::Kind::kHamming:
      break;
  }
  return "h" + std::to_string(f.n) + "," + std::to_string(f.q);
}

/// Explicit graph of a family; vertex id = code. Distances are taken from the
/// closed-form oracle (tests check them against BFS).
inline Graph build_graph(const Family& f,
                         std::uint64_t cap = kGraphVertexCap) {
  std::vector<Edge> edges;
  switch (f.kind) {
    case Family::Kind::kCube: {
      const CubeMetric m(f.n, cap);
      for (VertexId u = 0; u < m.vertex_count(); ++u)
        for (int i = 0; i < f.n; ++i)
          if (VertexId w = u ^ (VertexId{1} << i); u < w) edges.emplace_back(u, w);
      return Graph::with_oracle_distances(m.vertex_count(), edges, m);
    }
    case Family::Kind::kFolded: {
      const FoldedMetric m(f.n, cap);
      for (VertexId u = 0; u < m.vertex_count(); ++u)
        for (int i = 0; i < f.n; ++i)
          if (VertexId w = fold_canonical(f.n, u ^ (VertexId{1} << i)); u < w)
            edges.emplace_back(u, w);
      return Graph::with_oracle_distances(m.vertex_count(), edges, m);
    }
    case Family::Kind::kHamming:
      break;
  }
  const HammingMetric m(f.n, f.q, cap);
  std::uint64_t stride = 1;
  for (int i = 0; i < f.n; ++i, stride *= f.q) {
    for (VertexId u = 0; u < m.vertex_count(); ++u) {
      const auto digit = static_cast<int>((u / stride) % f.q);
      for (int c = digit + 1; c < f.q; ++c)
        edges.emplace_back(u, static_cast<VertexId>(u + (c - digit) * stride));
    }
  }
  return Graph::with_oracle_distances(m.vertex_count(), edges, m);
}

// --- explicit doubly distance resolving sets --------------------------------

namespace detail {
inline void push_unique(LandmarkSet& s, VertexId x) {
  if (std::find(s.begin(), s.end(), x) == s.end()) s.push_back(x);
}
}  // namespace detail

/// The q-1 constant words 1..1, ..., (q-1)..(q-1); a doubly distance
/// resolving set of H(n,q) on the all-zero word.
inline LandmarkSet hamming_ddrs_constant(int n, int q) {
  const HammingMetric m(n, q);
  LandmarkSet s;
  const std::uint64_t ones = (m.vertex_count() - 1) / (q - 1);
  for (int c = 1; c < q; ++c) s.push_back(static_cast<VertexId>(c * ones));
  return s;
}

/// The n constant words 1..1, ..., n..n; valid when n <= q-1.
inline LandmarkSet hamming_ddrs_levels(int n, int q) {
  if (n > q - 1)
    throw std::invalid_argument("level construction needs n <= q-1");
  const HammingMetric m(n, q);
  LandmarkSet s;
  const std::uint64_t ones = (m.vertex_count() - 1) / (q - 1);
  for (int c = 1; c <= n; ++c) s.push_back(static_cast<VertexId>(c * ones));
  return s;
}

/// n = 2k+1: the k words with one adjacent coordinate pair set
/// (coordinates 2i-1, 2i) plus the word with only the last coordinate set.
/// For n = 3 the last word is the complement of the first, so F_3 gets a
/// single landmark.
inline LandmarkSet folded_ddrs_odd(int n) {
  if (n < 3 || n % 2 == 0)
    throw std::invalid_argument("odd construction needs odd n >= 3");
  LandmarkSet s;
  for (int i = 0; i + 1 < n; i += 2)
    detail::push_unique(s, fold_canonical(n, (VertexId{3} << i)));
  detail::push_unique(s, fold_canonical(n, VertexId{1} << (n - 1)));
  return s;
}

/// n = 2k: the prefix words with the first i coordinates set, 1 <= i <= n-1.
inline LandmarkSet folded_ddrs_even(int n) {
  if (n < 4 || n % 2 != 0)
    throw std::invalid_argument("even construction needs even n >= 4");
  LandmarkSet s;
  for (int i = 1; i <= n - 1; ++i)
    s.push_back(fold_canonical(n, detail::low_mask(i)));
  return s;
}

// --- transfer maps between Q_n and F_n --------------------------------------

/// Resolving set of F_n -> resolving set of Q_n by picking each class's
/// canonical representative.
inline LandmarkSet fold_resolving_map(int n, std::span<const VertexId> s) {
  if (n < 3) throw std::invalid_argument("fold map needs n >= 3");
  if (!is_resolving(FoldedMetric(n), s))
    throw std::invalid_argument("input set does not resolve F_" +
                                std::to_string(n));
  return LandmarkSet(s.begin(), s.end());
}

/// Resolving set of Q_n (n odd) -> resolving set of F_n via x -> [x].
inline LandmarkSet unfold_resolving_map(int n, std::span<const VertexId> s) {
  if (n < 3 || n % 2 == 0)
    throw std::invalid_argument("unfold map needs odd n >= 3");
  if (!is_resolving(CubeMetric(n), s))
    throw std::invalid_argument("input set does not resolve Q_" +
                                std::to_string(n));
  LandmarkSet out;
  for (VertexId x : s) detail::push_unique(out, fold_canonical(n, x));
  return out;
}

/// Resolving set of Q_n -> resolving set of F_{n+1}: both lifts [x0], [x1].
inline LandmarkSet double_resolving_map(int n, std::span<const VertexId> s) {
  if (n < 1) throw std::invalid_argument("double map needs n >= 1");
  if (!is_resolving(CubeMetric(n), s))
    throw std::invalid_argument("input set does not resolve Q_" +
                                std::to_string(n));
  LandmarkSet out;
  for (VertexId x : s) {
    detail::push_unique(out, fold_canonical(n + 1, x));
    detail::push_unique(out, fold_canonical(n + 1, x | (VertexId{1} << n)));
  }
  return out;
}

/// Image of `s` under the automorphism u -> u XOR x of Q_n.
inline LandmarkSet cube_translate(std::span<const VertexId> s, VertexId x) {
  LandmarkSet out;
  out.reserve(s.size());
  for (VertexId v : s) out.push_back(v ^ x);
  return out;
}

}  // namespace drs
