#pragma once

// Verification predicates for resolving sets, doubly resolving sets and
// doubly distance resolving sets, plus the composition of a resolving set with
// a doubly distance resolving set.
//
// All three predicates reduce to "are these per-vertex integer vectors pairwise
// distinct (within some equivalence)", answered by hashing the vectors.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/container_hash/hash.hpp>

#include "drs/graph.hpp"

namespace drs {

/// Ordered sequence of distinct vertices.
using LandmarkSet = std::vector<VertexId>;
using Signature = std::vector<int>;

/// Outcome of a predicate. On failure `witness` holds a vertex pair that the
/// set does not separate (smaller id first).
struct Verdict {
  bool passed = true;
  std::optional<std::pair<VertexId, VertexId>> witness;

  explicit operator bool() const { return passed; }
};

namespace detail {

template <Metric M>
void check_landmarks(const M& m, std::span<const VertexId> s) {
  const std::size_t n = m.vertex_count();
  std::vector<bool> seen(n, false);
  for (VertexId x : s) {
    if (x >= n)
      throw std::invalid_argument("landmark " + std::to_string(x) +
                                  " is not a vertex");
    if (seen[x])
      throw std::invalid_argument("landmark " + std::to_string(x) +
                                  " repeated");
    seen[x] = true;
  }
}

// Finds the first vertex whose row in `flat` equals the row of an earlier
// vertex `rep` for which `conflicts(rep, v)` holds.
template <class Conflicts>
Verdict first_collision(const std::vector<int>& flat, std::size_t rows,
                        std::size_t width, Conflicts conflicts) {
  auto row = [&](std::size_t i) {
    return std::span<const int>(flat.data() + i * width, width);
  };
  auto hash = [&](std::size_t i) {
    auto r = row(i);
    return boost::hash_range(r.begin(), r.end());
  };
  auto equal = [&](std::size_t a, std::size_t b) {
    auto ra = row(a);
    auto rb = row(b);
    return std::equal(ra.begin(), ra.end(), rb.begin());
  };
  std::unordered_map<std::size_t, std::size_t, decltype(hash), decltype(equal)>
      first_seen(rows, hash, equal);
  for (std::size_t v = 0; v < rows; ++v) {
    auto [it, inserted] = first_seen.try_emplace(v, v);
    if (!inserted && conflicts(it->second, v)) {
      return {false, std::make_pair(static_cast<VertexId>(it->second),
                                    static_cast<VertexId>(v))};
    }
  }
  return {};
}

}  // namespace detail

/// (d(u, s[0]), ..., d(u, s[m-1])).
template <Metric M>
Signature distance_vector(const M& m, VertexId u, std::span<const VertexId> s) {
  require_connected(m);
  Signature sig;
  sig.reserve(s.size());
  for (VertexId x : s) sig.push_back(static_cast<int>(m.distance(u, x)));
  return sig;
}

template <Metric M>
Verdict is_resolving(const M& m, std::span<const VertexId> s) {
  require_connected(m);
  detail::check_landmarks(m, s);
  const std::size_t n = m.vertex_count();
  const std::size_t w = s.size();
  std::vector<int> flat(n * w);
  for (VertexId u = 0; u < n; ++u)
    for (std::size_t i = 0; i < w; ++i)
      flat[u * w + i] = static_cast<int>(m.distance(u, s[i]));
  return detail::first_collision(flat, n, w,
                                 [](std::size_t, std::size_t) { return true; });
}

/// S doubly resolves G iff the vectors d(u,S) - d(u,s[0]) are pairwise
/// distinct; any fixed member works as the reference, s[0] is used.
template <Metric M>
Verdict is_doubly_resolving(const M& m, std::span<const VertexId> s) {
  require_connected(m);
  if (s.size() < 2)
    throw std::invalid_argument(
        "a doubly resolving set needs at least two vertices");
  detail::check_landmarks(m, s);
  const std::size_t n = m.vertex_count();
  const std::size_t w = s.size() - 1;
  std::vector<int> flat(n * w);
  for (VertexId u = 0; u < n; ++u) {
    const int ref = static_cast<int>(m.distance(u, s[0]));
    for (std::size_t i = 0; i < w; ++i)
      flat[u * w + i] = static_cast<int>(m.distance(u, s[i + 1])) - ref;
  }
  return detail::first_collision(flat, n, w,
                                 [](std::size_t, std::size_t) { return true; });
}

/// S is a doubly distance resolving set on `anchor` iff the vector
/// (d(u,anchor) - d(u,s_i))_i determines d(u,anchor).
template <Metric M>
Verdict is_ddrs(const M& m, VertexId anchor, std::span<const VertexId> s) {
  require_connected(m);
  if (s.empty())
    throw std::invalid_argument("doubly distance resolving set is empty");
  if (anchor >= m.vertex_count())
    throw std::invalid_argument("anchor is not a vertex");
  detail::check_landmarks(m, s);
  const std::size_t n = m.vertex_count();
  const std::size_t w = s.size();
  std::vector<int> flat(n * w);
  for (VertexId u = 0; u < n; ++u) {
    const int ref = static_cast<int>(m.distance(u, anchor));
    for (std::size_t i = 0; i < w; ++i)
      flat[u * w + i] = ref - static_cast<int>(m.distance(u, s[i]));
  }
  return detail::first_collision(
      flat, n, w, [&](std::size_t rep, std::size_t v) {
        return m.distance(static_cast<VertexId>(rep), anchor) !=
               m.distance(static_cast<VertexId>(v), anchor);
      });
}

/// Union of a resolving set containing `anchor` and a doubly distance
/// resolving set on `anchor`; the result doubly resolves G.
/// Order: anchor, the rest of `resolving`, then new members of `ddrs`.
template <Metric M>
LandmarkSet compose_drs(const M& m, std::span<const VertexId> resolving,
                        VertexId anchor, std::span<const VertexId> ddrs) {
  if (std::find(resolving.begin(), resolving.end(), anchor) == resolving.end())
    throw std::invalid_argument("anchor is not in the resolving set");
  if (!is_resolving(m, resolving))
    throw std::invalid_argument("first set is not resolving");
  if (!is_ddrs(m, anchor, ddrs))
    throw std::invalid_argument(
        "second set is not doubly distance resolving on the anchor");
  LandmarkSet out{anchor};
  auto add = [&out](VertexId x) {
    if (std::find(out.begin(), out.end(), x) == out.end()) out.push_back(x);
  };
  for (VertexId x : resolving) add(x);
  for (VertexId x : ddrs) add(x);
  return out;
}

}  // namespace drs
