#pragma once

// Exact minimum resolving / doubly resolving / doubly distance resolving sets
// through their 0-1 covering formulation:
//
//   min sum_t x_t   s.t.  sum_t A[(u,v), t] x_t >= 1  for every constrained
//                         pair (u,v),  x_t in {0,1}
//
// Rows are vertex pairs, columns are candidate landmarks, and A says whether
// landmark t separates the pair. The solver is a depth-first branch and bound
// that branches on the most constrained uncovered row and bounds with a greedy
// packing of rows that no single column can cover together. A second pass
// recovers the lexicographically smallest optimal witness.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "drs/graph.hpp"
#include "drs/resolving.hpp"

namespace drs {

enum class Objective { kBeta, kPsi, kPhi };

inline std::string to_string(Objective o) {
  switch (o) {
    case Objective::kBeta:
      return "beta";
    case Objective::kPsi:
      return "psi";
    case Objective::kPhi:
      return "phi";
  }
  return "?";
}

inline Objective parse_objective(const std::string& s) {
  if (s == "beta") return Objective::kBeta;
  if (s == "psi") return Objective::kPsi;
  if (s == "phi") return Objective::kPhi;
  throw std::invalid_argument("unknown objective '" + s + "'");
}

/// Fixed-width bitset over 64-bit words with the in-place, allocation-free
/// operations the search loop needs.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::size_t bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

  std::size_t size() const { return bits_; }
  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  void reset(std::size_t i) { words_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1; }
  void set_all() {
    std::fill(words_.begin(), words_.end(), ~std::uint64_t{0});
    trim();
  }

  bool none() const {
    return std::all_of(words_.begin(), words_.end(),
                       [](std::uint64_t w) { return w == 0; });
  }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }
  std::size_t and_count(const Bitset& o) const {
    std::size_t c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i)
      c += std::popcount(words_[i] & o.words_[i]);
    return c;
  }
  bool intersects(const Bitset& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }
  /// (*this & mask) intersects o
  bool intersects_masked(const Bitset& mask, const Bitset& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & mask.words_[i] & o.words_[i]) return true;
    return false;
  }
  bool is_subset_of(const Bitset& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }
  Bitset& operator|=(const Bitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  Bitset& operator&=(const Bitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  Bitset& subtract(const Bitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  void or_masked(const Bitset& o, const Bitset& mask) {
    for (std::size_t i = 0; i < words_.size(); ++i)
      words_[i] |= o.words_[i] & mask.words_[i];
  }
  void clear() { std::fill(words_.begin(), words_.end(), 0); }

  /// Calls f(i) for every set bit in increasing order.
  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      for (std::uint64_t word = words_[w]; word != 0; word &= word - 1)
        f(w * 64 + static_cast<std::size_t>(std::countr_zero(word)));
    }
  }

  friend bool operator==(const Bitset&, const Bitset&) = default;

 private:
  void trim() {
    if (bits_ % 64 != 0 && !words_.empty())
      words_.back() &= (std::uint64_t{1} << (bits_ % 64)) - 1;
  }

  std::size_t bits_ = 0;
  std::vector<std::uint64_t> words_;
};

/// One covering program. `covers[c]` holds the rows column c satisfies.
struct CoverInstance {
  Objective objective = Objective::kBeta;
  /// Reference vertex for the anchored doubly resolving program (the
  /// anchor itself joins the witness) and for the doubly distance program.
  std::optional<VertexId> anchor;
  std::vector<VertexId> columns;  // ascending vertex ids
  std::vector<std::pair<VertexId, VertexId>> rows;
  std::vector<Bitset> covers;
};

struct SolveResult {
  Objective objective = Objective::kBeta;
  int value = 0;
  LandmarkSet witness;  // sorted
  bool optimal = true;
  std::optional<VertexId> anchor;  // set for phi
};

// --- instance builders ------------------------------------------------------

namespace detail {

template <Metric M, class RowFilter, class Separates>
CoverInstance build_cover(const M& m, Objective objective,
                          std::optional<VertexId> anchor, RowFilter keep_row,
                          Separates separates) {
  require_connected(m);
  const auto n = static_cast<VertexId>(m.vertex_count());
  CoverInstance inst;
  inst.objective = objective;
  inst.anchor = anchor;
  for (VertexId t = 0; t < n; ++t)
    if (!anchor || t != *anchor) inst.columns.push_back(t);
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v)
      if (keep_row(u, v)) inst.rows.emplace_back(u, v);
  inst.covers.assign(inst.columns.size(), Bitset(inst.rows.size()));
  for (std::size_t c = 0; c < inst.columns.size(); ++c) {
    const VertexId t = inst.columns[c];
    for (std::size_t r = 0; r < inst.rows.size(); ++r)
      if (separates(inst.rows[r].first, inst.rows[r].second, t))
        inst.covers[c].set(r);
  }
  return inst;
}

template <Metric M>
void require_anchor(const M& m, VertexId anchor) {
  if (anchor >= m.vertex_count())
    throw std::invalid_argument("anchor " + std::to_string(anchor) +
                                " is not a vertex");
  if (m.vertex_count() < 2)
    throw std::invalid_argument("objective needs at least two vertices");
}

}  // namespace detail

/// Rows: all pairs. Column t covers {u,v} iff d(u,t) != d(v,t).
template <Metric M>
CoverInstance build_beta_cover(const M& m) {
  return detail::build_cover(
      m, Objective::kBeta, std::nullopt, [](VertexId, VertexId) { return true; },
      [&m](VertexId u, VertexId v, VertexId t) {
        return m.distance(u, t) != m.distance(v, t);
      });
}

/// Resolving sets that contain `anchor`: only pairs the anchor leaves
/// unseparated remain as rows. Optimum + 1 is the smallest such set.
template <Metric M>
CoverInstance build_beta_cover_anchored(const M& m, VertexId anchor) {
  detail::require_anchor(m, anchor);
  return detail::build_cover(
      m, Objective::kBeta, anchor,
      [&m, anchor](VertexId u, VertexId v) {
        return m.distance(u, anchor) == m.distance(v, anchor);
      },
      [&m](VertexId u, VertexId v, VertexId t) {
        return m.distance(u, t) != m.distance(v, t);
      });
}

/// Rows: pairs at different distance from the anchor. Column t covers (u,v)
/// iff d(u,a) - d(u,t) != d(v,a) - d(v,t).
template <Metric M>
CoverInstance build_phi_cover(const M& m, VertexId anchor) {
  detail::require_anchor(m, anchor);
  auto da = [&m, anchor](VertexId u) {
    return static_cast<int>(m.distance(u, anchor));
  };
  return detail::build_cover(
      m, Objective::kPhi, anchor,
      [da](VertexId u, VertexId v) { return da(u) != da(v); },
      [&m, da](VertexId u, VertexId v, VertexId t) {
        return da(u) - static_cast<int>(m.distance(u, t)) !=
               da(v) - static_cast<int>(m.distance(v, t));
      });
}

/// Doubly resolving sets that contain `anchor`: rows are all pairs, covering
/// rule as for phi. Optimum + 1 is the smallest such set.
template <Metric M>
CoverInstance build_psi_cover_anchored(const M& m, VertexId anchor) {
  detail::require_anchor(m, anchor);
  auto da = [&m, anchor](VertexId u) {
    return static_cast<int>(m.distance(u, anchor));
  };
  return detail::build_cover(
      m, Objective::kPsi, anchor, [](VertexId, VertexId) { return true; },
      [&m, da](VertexId u, VertexId v, VertexId t) {
        return da(u) - static_cast<int>(m.distance(u, t)) !=
               da(v) - static_cast<int>(m.distance(v, t));
      });
}

// --- exact minimum cover ----------------------------------------------------

struct CoverSolution {
  std::vector<std::size_t> columns;  // column indices, ascending
  bool optimal = true;
  std::uint64_t nodes = 0;
};

namespace detail {

class MinCoverSearch {
 public:
  MinCoverSearch(const CoverInstance& inst, std::optional<std::uint64_t> budget)
      : cols_(inst.columns.size()),
        budget_(budget.value_or(std::numeric_limits<std::uint64_t>::max())) {
    reduce_rows(inst);
  }

  CoverSolution run() {
    CoverSolution out;
    if (rows_.empty()) return out;

    Bitset uncovered(rows_.size());
    uncovered.set_all();
    Bitset allowed(cols_);
    allowed.set_all();

    best_ = greedy();
    search(uncovered, allowed);
    out.nodes = nodes_;
    if (aborted_) {
      out.columns = best_;
      std::sort(out.columns.begin(), out.columns.end());
      out.optimal = false;
      return out;
    }

    // Second pass: lexicographically smallest cover of the optimal size.
    nodes_ = 0;
    aborted_ = false;
    chosen_.clear();
    if (lex_search(0, uncovered, best_.size())) {
      out.columns = chosen_;
    } else {
      out.columns = best_;  // budget ran out; size is still optimal
      std::sort(out.columns.begin(), out.columns.end());
    }
    out.nodes += nodes_;
    return out;
  }

 private:
  // Drops rows implied by others: if every column covering row a also covers
  // row b, covering a covers b. Rows end up sorted by how few columns cover
  // them, which the packing bound relies on.
  void reduce_rows(const CoverInstance& inst) {
    const std::size_t r_count = inst.rows.size();
    std::vector<Bitset> row_cols(r_count, Bitset(cols_));
    for (std::size_t c = 0; c < cols_; ++c)
      inst.covers[c].for_each([&](std::size_t r) { row_cols[r].set(c); });
    std::vector<std::size_t> order(r_count);
    std::iota(order.begin(), order.end(), 0);
    std::vector<std::size_t> sizes(r_count);
    for (std::size_t r = 0; r < r_count; ++r) {
      sizes[r] = row_cols[r].count();
      if (sizes[r] == 0)
        throw std::invalid_argument(
            "infeasible cover: pair (" + std::to_string(inst.rows[r].first) +
            "," + std::to_string(inst.rows[r].second) +
            ") is separated by no candidate");
    }
    std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) {
      return sizes[a] < sizes[b];
    });
    for (std::size_t r : order) {
      const bool implied =
          std::any_of(rows_.begin(), rows_.end(), [&](const Bitset& kept) {
            return kept.is_subset_of(row_cols[r]);
          });
      if (!implied) rows_.push_back(std::move(row_cols[r]));
    }
    col_rows_.assign(cols_, Bitset(rows_.size()));
    last_rows_.assign(cols_, Bitset(rows_.size()));
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      std::size_t last = 0;
      rows_[r].for_each([&](std::size_t c) {
        col_rows_[c].set(r);
        last = c;
      });
      last_rows_[last].set(r);
    }
    packed_cols_ = Bitset(cols_);
    suffix_.assign(cols_ + 1, Bitset(cols_));
    for (std::size_t i = cols_; i-- > 0;) {
      suffix_[i] = suffix_[i + 1];
      suffix_[i].set(i);
    }
  }

  std::vector<std::size_t> greedy() const {
    Bitset uncovered(rows_.size());
    uncovered.set_all();
    std::vector<std::size_t> pick;
    while (!uncovered.none()) {
      std::size_t best_c = 0, best_gain = 0;
      for (std::size_t c = 0; c < cols_; ++c) {
        const std::size_t gain = col_rows_[c].and_count(uncovered);
        if (gain > best_gain) best_gain = gain, best_c = c;
      }
      pick.push_back(best_c);
      uncovered.subtract(col_rows_[best_c]);
    }
    return pick;
  }

  // Greedy set of uncovered rows pairwise sharing no allowed column: each
  // needs its own column.
  std::size_t packing_bound(const Bitset& uncovered, const Bitset& allowed) {
    packed_cols_.clear();
    std::size_t bound = 0;
    uncovered.for_each([&](std::size_t r) {
      if (!rows_[r].intersects_masked(allowed, packed_cols_)) {
        ++bound;
        packed_cols_.or_masked(rows_[r], allowed);
      }
    });
    return bound;
  }

  bool tick() {
    if (++nodes_ > budget_) aborted_ = true;
    return !aborted_;
  }

  void search(const Bitset& uncovered, Bitset allowed) {
    if (!tick()) return;
    if (uncovered.none()) {
      if (chosen_.size() < best_.size()) best_ = chosen_;
      return;
    }
    if (chosen_.size() + 1 >= best_.size()) return;
    if (chosen_.size() + packing_bound(uncovered, allowed) >= best_.size())
      return;

    std::size_t branch_row = 0, fewest = std::numeric_limits<std::size_t>::max();
    uncovered.for_each([&](std::size_t r) {
      const std::size_t k = rows_[r].and_count(allowed);
      if (k < fewest) fewest = k, branch_row = r;
    });
    if (fewest == 0) return;

    std::vector<std::pair<std::size_t, std::size_t>> options;  // (-gain, col)
    Bitset candidates = rows_[branch_row];
    candidates &= allowed;
    candidates.for_each([&](std::size_t c) {
      options.emplace_back(col_rows_[c].and_count(uncovered), c);
    });
    std::stable_sort(options.begin(), options.end(),
                     [](auto a, auto b) { return a.first > b.first; });
    for (auto [gain, c] : options) {
      Bitset rest = uncovered;
      rest.subtract(col_rows_[c]);
      chosen_.push_back(c);
      search(rest, allowed);
      chosen_.pop_back();
      if (aborted_ || chosen_.size() + 1 >= best_.size()) return;
      allowed.reset(c);
    }
  }

  // Columns are decided in index order, "take" before "skip", so the first
  // cover found is the lexicographically smallest one of size <= remaining.
  bool lex_search(std::size_t col, const Bitset& uncovered,
                  std::size_t remaining) {
    if (uncovered.none()) return true;
    if (remaining == 0 || col == cols_ || !tick()) return false;
    if (packing_bound(uncovered, suffix_[col]) > remaining) return false;
    if (col_rows_[col].intersects(uncovered)) {
      Bitset rest = uncovered;
      rest.subtract(col_rows_[col]);
      chosen_.push_back(col);
      if (lex_search(col + 1, rest, remaining - 1)) return true;
      chosen_.pop_back();
      if (aborted_) return false;
    }
    if (last_rows_[col].intersects(uncovered)) return false;
    return lex_search(col + 1, uncovered, remaining);
  }

  std::size_t cols_;
  std::uint64_t budget_;
  std::vector<Bitset> rows_;       // per reduced row: covering columns
  std::vector<Bitset> col_rows_;   // per column: reduced rows covered
  std::vector<Bitset> last_rows_;  // rows whose highest covering column is c
  std::vector<Bitset> suffix_;     // columns >= i
  Bitset packed_cols_;
  std::vector<std::size_t> best_;
  std::vector<std::size_t> chosen_;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
};

}  // namespace detail

/// Minimum number of columns covering every row; among minimum covers the one
/// whose sorted column sequence is lexicographically smallest. With a node
/// budget the search may stop early and report the best cover found with
/// `optimal == false`. Throws if some row cannot be covered.
inline CoverSolution solve_min_cover(const CoverInstance& inst,
                                     std::optional<std::uint64_t> budget = {}) {
  if (inst.covers.size() != inst.columns.size())
    throw std::invalid_argument("cover instance: one row set per column");
  return detail::MinCoverSearch(inst, budget).run();
}

inline SolveResult solve_cover_exact(const CoverInstance& inst,
                                     std::optional<std::uint64_t> budget = {}) {
  const CoverSolution sol = solve_min_cover(inst, budget);
  SolveResult res;
  res.objective = inst.objective;
  res.optimal = sol.optimal;
  for (std::size_t c : sol.columns) res.witness.push_back(inst.columns[c]);
  if (inst.objective == Objective::kPsi) {
    if (!inst.anchor)
      throw std::invalid_argument("doubly resolving program needs an anchor");
    res.witness.push_back(*inst.anchor);
  }
  if (inst.objective == Objective::kBeta && inst.anchor)
    res.witness.push_back(*inst.anchor);
  if (inst.objective == Objective::kPhi) res.anchor = inst.anchor;
  std::sort(res.witness.begin(), res.witness.end());
  res.value = static_cast<int>(res.witness.size());
  return res;
}

// --- objective-level entry points -------------------------------------------

struct SolveOptions {
  std::optional<std::uint64_t> budget;
  /// Only valid for vertex-transitive graphs: one anchor stands for all.
  bool vertex_transitive = false;
  unsigned threads = 1;
};

namespace detail {

// Runs f(i) for i in [0, count) on up to `threads` threads.
template <class F>
void parallel_for(std::size_t count, unsigned threads, F f) {
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(count)));
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) f(i);
    return;
  }
  std::vector<std::jthread> pool;
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      for (std::size_t i = t; i < count; i += threads) f(i);
    });
  }
}

inline bool lex_less(const LandmarkSet& a, const LandmarkSet& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace detail

/// On vertex-transitive inputs some minimum resolving set contains vertex 0,
/// and every sorted set starting with 0 precedes the others, so forcing 0
/// keeps both the value and the lexicographically smallest witness.
template <Metric M>
SolveResult solve_beta(const M& m, const SolveOptions& opt = {}) {
  if (opt.vertex_transitive && m.vertex_count() >= 2)
    return solve_cover_exact(build_beta_cover_anchored(m, 0), opt.budget);
  return solve_cover_exact(build_beta_cover(m), opt.budget);
}

template <Metric M>
SolveResult solve_phi(const M& m, VertexId anchor, const SolveOptions& opt = {}) {
  return solve_cover_exact(build_phi_cover(m, anchor), opt.budget);
}

/// phi(G) = max over anchors of phi(G, x); the smallest maximizing anchor is
/// reported.
template <Metric M>
SolveResult solve_phi_max(const M& m, const SolveOptions& opt = {}) {
  if (opt.vertex_transitive) return solve_phi(m, 0, opt);
  std::vector<SolveResult> per(m.vertex_count());
  detail::parallel_for(per.size(), opt.threads, [&](std::size_t x) {
    per[x] = solve_phi(m, static_cast<VertexId>(x), opt);
  });
  SolveResult best = per[0];
  for (const auto& r : per) {
    if (r.value > best.value) best = r;
  }
  for (const auto& r : per) best.optimal = best.optimal && r.optimal;
  return best;
}

/// Psi(G): every doubly resolving set has some member that can serve as the
/// anchored reference, so minimize 1 + anchored optimum over all anchors.
template <Metric M>
SolveResult solve_psi_general(const M& m, const SolveOptions& opt = {}) {
  if (m.vertex_count() < 2)
    throw std::invalid_argument("doubly resolving sets need two vertices");
  if (opt.vertex_transitive)
    return solve_cover_exact(build_psi_cover_anchored(m, 0), opt.budget);
  std::vector<SolveResult> per(m.vertex_count());
  detail::parallel_for(per.size(), opt.threads, [&](std::size_t x) {
    per[x] = solve_cover_exact(
        build_psi_cover_anchored(m, static_cast<VertexId>(x)), opt.budget);
  });
  SolveResult best = per[0];
  for (const auto& r : per) {
    if (r.value < best.value ||
        (r.value == best.value && detail::lex_less(r.witness, best.witness)))
      best = r;
  }
  for (const auto& r : per) best.optimal = best.optimal && r.optimal;
  return best;
}

// --- brute-force oracle -----------------------------------------------------

inline constexpr std::size_t kBruteForceVertexCap = 16;

/// Smallest set by enumerating k-subsets in lexicographic order and testing
/// them with the predicates from resolving.hpp. For phi the anchor is
/// required and excluded from the candidates.
template <Metric M>
SolveResult brute_force_min(const M& m, Objective objective,
                            std::optional<VertexId> anchor = {}) {
  const std::size_t n = m.vertex_count();
  if (n > kBruteForceVertexCap)
    throw std::invalid_argument("brute force limited to 16 vertices");
  require_connected(m);
  if (objective == Objective::kPhi && !anchor)
    throw std::invalid_argument("phi needs an anchor");
  if (objective != Objective::kBeta && n < 2)
    throw std::invalid_argument("objective needs at least two vertices");

  std::vector<VertexId> pool;
  for (VertexId v = 0; v < n; ++v)
    if (objective != Objective::kPhi || v != *anchor) pool.push_back(v);

  auto accepts = [&](const LandmarkSet& s) -> bool {
    switch (objective) {
      case Objective::kBeta:
        return static_cast<bool>(is_resolving(m, s));
      case Objective::kPsi:
        return static_cast<bool>(is_doubly_resolving(m, s));
      case Objective::kPhi:
        return static_cast<bool>(is_ddrs(m, *anchor, s));
    }
    return false;
  };

  const std::size_t k0 = objective == Objective::kBeta  ? 0
                         : objective == Objective::kPsi ? 2
                                                        : 1;
  for (std::size_t k = k0; k <= pool.size(); ++k) {
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
      LandmarkSet s;
      for (auto i : idx) s.push_back(pool[i]);
      if (accepts(s)) {
        SolveResult res{objective, static_cast<int>(k), s, true, {}};
        if (objective == Objective::kPhi) res.anchor = anchor;
        return res;
      }
      std::ptrdiff_t i = static_cast<std::ptrdiff_t>(k) - 1;
      while (i >= 0 && idx[i] == pool.size() - k + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  throw std::logic_error("full vertex set always qualifies");
}

}  // namespace drs
