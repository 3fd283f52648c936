#pragma once

// Reduction graphs from 3-dimensional matching to the minimum doubly resolving
// set problem on split, bipartite and co-bipartite graphs.
//
// Vertices are split into
//   I = {s_A, s_B, s_C, s_D} + one vertex per triple (over all copies)
//   J = the elements of every copy of A, B, C + selectors d_0..d_{v-1}
// with J-I edges
//   (1-3) element of A / B / C      ~ s_A / s_B / s_C
//   (4)   every element             ~ s_D
//   (5)   element                   ~ each triple containing it
//   (6)   d_i                       ~ triple j when bit i of j is 1
//   (7)   d_i                       ~ s_D
// The split variant makes J a clique, the co-bipartite one makes I and J
// cliques, the bipartite one adds nothing.

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "drs/graph.hpp"
#include "drs/resolving.hpp"

namespace drs {

struct Triple {
  int a = 0;
  int b = 0;
  int c = 0;
  friend auto operator<=>(const Triple&, const Triple&) = default;
};

struct ThreeDMInstance {
  int n = 0;
  std::vector<Triple> triples;
};

enum class GadgetVariant { kSplit, kBipartite, kCobipartite };

inline std::string to_string(GadgetVariant v) {
  switch (v) {
    case GadgetVariant::kSplit:
      return "split";
    case GadgetVariant::kBipartite:
      return "bipartite";
    case GadgetVariant::kCobipartite:
      return "cobipartite";
  }
  return "?";
}

inline GadgetVariant parse_variant(const std::string& s) {
  if (s == "split") return GadgetVariant::kSplit;
  if (s == "bipartite") return GadgetVariant::kBipartite;
  if (s == "cobipartite") return GadgetVariant::kCobipartite;
  throw std::invalid_argument("unknown gadget variant '" + s + "'");
}

inline void validate(const ThreeDMInstance& inst) {
  if (inst.n < 1) throw std::invalid_argument("3DM instance needs n >= 1");
  if (inst.triples.empty())
    throw std::invalid_argument("3DM instance has no triples");
  std::set<Triple> seen;
  for (const auto& t : inst.triples) {
    for (int x : {t.a, t.b, t.c})
      if (x < 0 || x >= inst.n)
        throw std::invalid_argument("triple index " + std::to_string(x) +
                                    " outside [0," + std::to_string(inst.n) +
                                    ")");
    if (!seen.insert(t).second)
      throw std::invalid_argument("duplicate triple");
  }
}

/// Text format: a line `n <int>`, then one `a b c` triple per line
/// (0-indexed). Blank lines and `#` comments are ignored.
inline ThreeDMInstance parse_3dm(std::istream& in) {
  ThreeDMInstance inst;
  bool have_n = false;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    auto integer = [&](const std::string& s) {
      std::size_t used = 0;
      int v = 0;
      try {
        v = std::stoi(s, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != s.size() || s.empty())
        throw std::invalid_argument("3dm line " + std::to_string(line_no) +
                                    ": bad integer '" + s + "'");
      return v;
    };
    if (!have_n) {
      if (tok.size() != 2 || tok[0] != "n")
        throw std::invalid_argument("3dm line " + std::to_string(line_no) +
                                    ": expected 'n <int>'");
      inst.n = integer(tok[1]);
      have_n = true;
      continue;
    }
    if (tok.size() != 3)
      throw std::invalid_argument("3dm line " + std::to_string(line_no) +
                                  ": expected 'a b c'");
    inst.triples.push_back({integer(tok[0]), integer(tok[1]), integer(tok[2])});
  }
  if (!have_n) throw std::invalid_argument("3dm input: missing 'n' line");
  validate(inst);
  return inst;
}

inline ThreeDMInstance parse_3dm(const std::string& text) {
  std::istringstream in(text);
  return parse_3dm(in);
}

/// |S'| + 3n - (number of elements covered by S').
inline int matching_cost(const ThreeDMInstance& inst,
                         const std::vector<std::size_t>& subset) {
  std::set<std::pair<int, int>> covered;  // (part, index)
  std::set<std::size_t> distinct(subset.begin(), subset.end());
  if (distinct.size() != subset.size())
    throw std::invalid_argument("subset repeats a triple");
  for (std::size_t j : subset) {
    if (j >= inst.triples.size())
      throw std::invalid_argument("triple index out of range");
    const auto& t = inst.triples[j];
    covered.insert({0, t.a});
    covered.insert({1, t.b});
    covered.insert({2, t.c});
  }
  return static_cast<int>(subset.size()) + 3 * inst.n -
         static_cast<int>(covered.size());
}

/// True iff the triples are pairwise disjoint and cover all 3n elements.
inline bool is_perfect_matching(const ThreeDMInstance& inst,
                                const std::vector<std::size_t>& subset) {
  return subset.size() == static_cast<std::size_t>(inst.n) &&
         matching_cost(inst, subset) == inst.n;
}

/// Exhaustive search; the first perfect matching in index order, if any.
inline std::optional<std::vector<std::size_t>> find_perfect_matching(
    const ThreeDMInstance& inst) {
  std::vector<std::size_t> pick;
  std::vector<bool> used_b(inst.n), used_c(inst.n);
  // Assign the triple covering a = 0, 1, ... in turn.
  auto rec = [&](auto&& self, int a) -> bool {
    if (a == inst.n) return true;
    for (std::size_t j = 0; j < inst.triples.size(); ++j) {
      const auto& t = inst.triples[j];
      if (t.a != a || used_b[t.b] || used_c[t.c]) continue;
      used_b[t.b] = used_c[t.c] = true;
      pick.push_back(j);
      if (self(self, a + 1)) return true;
      pick.pop_back();
      used_b[t.b] = used_c[t.c] = false;
    }
    return false;
  };
  if (rec(rec, 0)) return pick;
  return std::nullopt;
}

class GadgetGraph {
 public:
  static constexpr VertexId kSA = 0, kSB = 1, kSC = 2, kSD = 3;

  const Graph& graph() const { return graph_; }
  const std::vector<std::string>& roles() const { return roles_; }
  GadgetVariant variant() const { return variant_; }
  int copies() const { return copies_; }
  int n() const { return n_; }
  int triples_per_copy() const { return tau_; }
  int selector_count() const { return v_; }

  std::size_t i_size() const { return 4 + std::size_t(copies_) * tau_; }
  std::size_t j_size() const { return 3 * std::size_t(n_) * copies_ + v_; }

  VertexId selector(int i) const { return static_cast<VertexId>(4 + i); }
  /// part: 0 = A, 1 = B, 2 = C.
  VertexId element(int part, int copy, int index) const {
    return static_cast<VertexId>(4 + v_ + (part * copies_ + copy) * n_ + index);
  }
  VertexId triple(int copy, int index) const {
    return static_cast<VertexId>(4 + v_ + 3 * copies_ * n_ + copy * tau_ +
                                 index);
  }
  bool in_i(VertexId x) const { return x < 4 || x >= triple(0, 0); }

  friend GadgetGraph build_gadget(const ThreeDMInstance&, GadgetVariant, int);

 private:
  Graph graph_;
  std::vector<std::string> roles_;
  GadgetVariant variant_ = GadgetVariant::kBipartite;
  int copies_ = 1;
  int n_ = 0;
  int tau_ = 0;
  int v_ = 0;
};

/// Number of selector vertices: enough bits to address every triple of every
/// copy.
inline int selector_bits(std::size_t total_triples) {
  return total_triples <= 1
             ? 0
             : static_cast<int>(std::bit_width(total_triples - 1));
}

inline GadgetGraph build_gadget(const ThreeDMInstance& inst,
                                GadgetVariant variant, int copies = 1) {
  validate(inst);
  if (copies < 1) throw std::invalid_argument("copies must be >= 1");
  GadgetGraph g;
  g.variant_ = variant;
  g.copies_ = copies;
  g.n_ = inst.n;
  g.tau_ = static_cast<int>(inst.triples.size());
  g.v_ = selector_bits(std::size_t(copies) * inst.triples.size());

  const std::size_t total = g.i_size() + g.j_size();
  g.roles_.resize(total);
  g.roles_[GadgetGraph::kSA] = "s_A";
  g.roles_[GadgetGraph::kSB] = "s_B";
  g.roles_[GadgetGraph::kSC] = "s_C";
  g.roles_[GadgetGraph::kSD] = "s_D";
  for (int i = 0; i < g.v_; ++i) g.roles_[g.selector(i)] = "d_" + std::to_string(i);
  static constexpr std::array<char, 3> kPart = {'a', 'b', 'c'};
  for (int p = 0; p < 3; ++p)
    for (int c = 0; c < copies; ++c)
      for (int x = 0; x < inst.n; ++x)
        g.roles_[g.element(p, c, x)] = std::string(1, kPart[p]) + "_" +
                                       std::to_string(c) + "_" +
                                       std::to_string(x);
  for (int c = 0; c < copies; ++c)
    for (int j = 0; j < g.tau_; ++j)
      g.roles_[g.triple(c, j)] =
          "t_" + std::to_string(c) + "_" + std::to_string(j);

  std::vector<Edge> edges;
  for (int p = 0; p < 3; ++p) {
    for (int c = 0; c < copies; ++c) {
      for (int x = 0; x < inst.n; ++x) {
        edges.emplace_back(g.element(p, c, x), static_cast<VertexId>(p));
        edges.emplace_back(g.element(p, c, x), GadgetGraph::kSD);
      }
    }
  }
  for (int c = 0; c < copies; ++c) {
    for (int j = 0; j < g.tau_; ++j) {
      const auto& t = inst.triples[j];
      const VertexId tv = g.triple(c, j);
      edges.emplace_back(g.element(0, c, t.a), tv);
      edges.emplace_back(g.element(1, c, t.b), tv);
      edges.emplace_back(g.element(2, c, t.c), tv);
      const auto global = static_cast<std::uint64_t>(c) * g.tau_ + j;
      for (int i = 0; i < g.v_; ++i)
        if ((global >> i) & 1) edges.emplace_back(g.selector(i), tv);
    }
  }
  for (int i = 0; i < g.v_; ++i)
    edges.emplace_back(g.selector(i), GadgetGraph::kSD);

  std::vector<VertexId> part_i, part_j;
  for (VertexId x = 0; x < total; ++x) (g.in_i(x) ? part_i : part_j).push_back(x);
  auto clique = [&edges](const std::vector<VertexId>& vs) {
    for (std::size_t a = 0; a < vs.size(); ++a)
      for (std::size_t b = a + 1; b < vs.size(); ++b)
        edges.emplace_back(vs[a], vs[b]);
  };
  if (variant != GadgetVariant::kBipartite) clique(part_j);
  if (variant == GadgetVariant::kCobipartite) clique(part_i);

  g.graph_ = Graph::from_edge_list(total, edges);
  return g;
}

/// Matched triple vertices of every copy + s_A, s_B, s_C, s_D + all selectors,
/// sorted. `matching[c]` lists triple indices matched in copy c.
inline LandmarkSet witness_set(
    const GadgetGraph& g, const ThreeDMInstance& inst,
    const std::vector<std::vector<std::size_t>>& matching) {
  if (matching.size() != static_cast<std::size_t>(g.copies()))
    throw std::invalid_argument("need one matching per copy");
  LandmarkSet l{GadgetGraph::kSA, GadgetGraph::kSB, GadgetGraph::kSC,
                GadgetGraph::kSD};
  for (int i = 0; i < g.selector_count(); ++i) l.push_back(g.selector(i));
  for (int c = 0; c < g.copies(); ++c) {
    if (!is_perfect_matching(inst, matching[c]))
      throw std::invalid_argument("copy " + std::to_string(c) +
                                  ": not a perfect 3-dimensional matching");
    for (std::size_t j : matching[c])
      l.push_back(g.triple(c, static_cast<int>(j)));
  }
  std::sort(l.begin(), l.end());
  return l;
}

/// Same matching in every copy.
inline LandmarkSet witness_set(const GadgetGraph& g,
                               const ThreeDMInstance& inst,
                               const std::vector<std::size_t>& matching) {
  return witness_set(
      g, inst,
      std::vector<std::vector<std::size_t>>(g.copies(), matching));
}

/// Threshold arithmetic of the gap argument for N copies: n' = nN,
/// K = n' + v + 5, and the cost threshold n' + sqrt(n') - 1.
struct GapArithmetic {
  long long n_prime = 0;
  int v = 0;
  long long k = 0;
  double cost_threshold = 0;
  int witness_size = 0;  // n' + 4 + v = K - 1
};

inline GapArithmetic gap_arithmetic(const GadgetGraph& g) {
  GapArithmetic out;
  out.n_prime = static_cast<long long>(g.n()) * g.copies();
  out.v = g.selector_count();
  out.k = out.n_prime + out.v + 5;
  out.cost_threshold =
      static_cast<double>(out.n_prime) + std::sqrt(double(out.n_prime)) - 1.0;
  out.witness_size = static_cast<int>(out.n_prime + 4 + out.v);
  return out;
}

inline void write_roles(std::ostream& out, const GadgetGraph& g) {
  for (std::size_t id = 0; id < g.roles().size(); ++id)
    out << id << ' ' << g.roles()[id] << '\n';
}

}  // namespace drs
