#include <gtest/gtest.h>

#include <bit>
#include <numeric>

#include "drs/families.hpp"
#include "drs/set_cover.hpp"
#include "oracles.hpp"

using drs::Family;
using drs::Graph;
using drs::LandmarkSet;

TEST(HammingDistance, SixDigitTernaryExample) {
  const std::vector<int> x{0, 0, 1, 1, 2, 2};
  const std::vector<int> y{1, 2, 2, 1, 0, 2};
  const auto cx = drs::hamming_encode(3, x);
  const auto cy = drs::hamming_encode(3, y);
  EXPECT_EQ(drs::hamming_digits(6, 3, cx), x);
  EXPECT_EQ(drs::hamming_distance(6, 3, cx, cy), oracle::hamming(cx, cy, 6, 3));
  EXPECT_EQ(drs::hamming_distance(6, 3, cx, cy), 4);
  // coordinate-wise sum modulo 3 quoted alongside this pair
  std::vector<int> sum(6);
  for (int i = 0; i < 6; ++i) sum[i] = (x[i] + y[i]) % 3;
  EXPECT_EQ(sum, (std::vector<int>{1, 2, 0, 2, 2, 1}));
}

TEST(HammingDistance, TrivialCases) {
  EXPECT_EQ(drs::hamming_distance(4, 5, 77, 77), 0);
  EXPECT_EQ(drs::hamming_distance(3, 2, 0b000, 0b111), 3);
  EXPECT_THROW(drs::hamming_distance(2, 3, 0, 9), std::invalid_argument);
}

TEST(CubeDistance, Examples) {
  EXPECT_EQ(drs::cube_distance(3, 0b000, 0b011), 2);
  for (std::uint32_t u = 0; u < 32; ++u)
    EXPECT_EQ(drs::cube_distance(5, u, drs::cube_complement(5, u)), 5);
  EXPECT_THROW(drs::cube_distance(3, 0, 8), std::invalid_argument);
}

TEST(FoldedDistance, Examples) {
  EXPECT_EQ(drs::folded_distance(3, 0b000, 0b011), 1);
  for (std::uint32_t a = 0; a < 8; ++a) EXPECT_EQ(drs::folded_distance(4, a, a), 0);
  EXPECT_THROW(drs::folded_distance(3, 0, 0b100), std::invalid_argument);
}

TEST(FoldCanonical, ClearsTopBitAndPairsComplements) {
  for (int n = 2; n <= 8; ++n)
    for (std::uint32_t x = 0; x < (1u << n); ++x) {
      const auto c = drs::fold_canonical(n, x);
      EXPECT_EQ(c >> (n - 1), 0u);
      EXPECT_TRUE(c == x || c == drs::cube_complement(n, x));
      EXPECT_EQ(c, drs::fold_canonical(n, drs::cube_complement(n, x)));
    }
}

TEST(BuildGraph, SmallFamilySizes) {
  const Graph q3 = drs::build_graph(Family::cube(3));
  EXPECT_EQ(q3.vertex_count(), 8u);
  EXPECT_EQ(q3.edge_count(), 12u);
  const Graph f3 = drs::build_graph(Family::folded(3));
  EXPECT_EQ(f3.vertex_count(), 4u);
  EXPECT_EQ(f3.edge_count(), 6u);
  EXPECT_EQ(f3.distances(), oracle::complete(4).distances());
  const Graph h23 = drs::build_graph(Family::hamming(2, 3));
  EXPECT_EQ(h23.vertex_count(), 9u);
  EXPECT_EQ(h23.edge_count(), 18u);
}

TEST(BuildGraph, CapsAreEnforced) {
  EXPECT_THROW(drs::build_graph(Family::cube(13)), std::invalid_argument);
  EXPECT_NO_THROW(drs::build_graph(Family::cube(12)));
  EXPECT_THROW(drs::build_graph(Family::hamming(3, 17)), std::invalid_argument);
  EXPECT_THROW(drs::CubeMetric(21), std::invalid_argument);
  EXPECT_NO_THROW(drs::CubeMetric(20));
}

TEST(BuildGraph, SmallFamiliesMatchFloydWarshall) {
  for (const Family f : {Family::cube(4), Family::folded(4), Family::folded(5),
                         Family::hamming(2, 4), Family::hamming(3, 3)}) {
    SCOPED_TRACE(drs::to_string(f));
    const Graph g = drs::build_graph(f);
    const auto ref = oracle::distances(g);
    for (drs::VertexId u = 0; u < g.vertex_count(); ++u)
      for (drs::VertexId v = 0; v < g.vertex_count(); ++v)
        ASSERT_EQ(g.distance(u, v), ref[u][v]);
  }
}

// Closed-form distances (stored in the graph) against a fresh BFS over the
// generated adjacency.
TEST(BuildGraph, OracleAgreesWithBfsCubes) {
  for (int n = 1; n <= 8; ++n) {
    const Graph g = drs::build_graph(Family::cube(n));
    ASSERT_EQ(g.edge_count(), (std::size_t{1} << n) * n / 2);
    ASSERT_EQ(drs::all_pairs_distances(g), g.distances()) << "Q_" << n;
  }
}

TEST(BuildGraph, OracleAgreesWithBfsFolded) {
  for (int n = 2; n <= 9; ++n) {
    const Graph g = drs::build_graph(Family::folded(n));
    ASSERT_EQ(drs::all_pairs_distances(g), g.distances()) << "F_" << n;
  }
}

// All H(n,q) with q^n <= 2048 and n >= 2, plus the complete graphs H(1,q)
// up to q = 256.
TEST(BuildGraph, OracleAgreesWithBfsHamming) {
  for (int n = 1; n <= 11; ++n)
    for (int q = 2;; ++q) {
      std::uint64_t size = 1;
      for (int i = 0; i < n; ++i) size *= q;
      if (size > 2048 || (n == 1 && q > 256)) break;
      const Graph g = drs::build_graph(Family::hamming(n, q));
      ASSERT_EQ(g.edge_count(), size * n * (q - 1) / 2);
      ASSERT_EQ(drs::all_pairs_distances(g), g.distances())
          << "H(" << n << "," << q << ")";
    }
}

TEST(Identities, Antipodal) {
  for (int n = 1; n <= 10; ++n) {
    const drs::CubeMetric m(n);
    for (std::uint32_t u = 0; u < m.vertex_count(); ++u)
      for (std::uint32_t v = 0; v < m.vertex_count(); ++v)
        ASSERT_EQ(m.distance(u, drs::cube_complement(n, v)), n - m.distance(u, v));
  }
}

TEST(Identities, DotProduct) {
  for (int n = 1; n <= 10; ++n) {
    const drs::CubeMetric m(n);
    for (std::uint32_t u = 0; u < m.vertex_count(); ++u)
      for (std::uint32_t x = 0; x < m.vertex_count(); ++x) {
        const int dot = std::popcount(u & x);
        const int weight = std::popcount(x);
        ASSERT_EQ(m.distance(u, 0) - m.distance(u, x), 2 * dot - weight);
      }
  }
}

TEST(Identities, FoldedDistanceBound) {
  for (int n = 2; n <= 10; ++n) {
    const drs::FoldedMetric m(n);
    for (std::uint32_t a = 0; a < m.vertex_count(); ++a)
      for (std::uint32_t b = 0; b < m.vertex_count(); ++b) {
        const int d = m.distance(a, b);
        ASSERT_GE(d, 0);
        ASSERT_LE(d, n / 2);
        // distance between classes is the nearer of the two representatives
        const int direct = oracle::popcount_distance(a, b);
        ASSERT_EQ(d, std::min(direct, n - direct));
      }
  }
}

TEST(ParseFamily, Descriptors) {
  EXPECT_EQ(drs::parse_family("q5"), Family::cube(5));
  EXPECT_EQ(drs::parse_family("f6"), Family::folded(6));
  EXPECT_EQ(drs::parse_family("h3,4"), Family::hamming(3, 4));
  for (const char* bad : {"", "q", "x3", "f1", "h3", "h3,1", "q-2", "q3x"})
    EXPECT_THROW(drs::parse_family(bad), std::invalid_argument) << bad;
  EXPECT_EQ(drs::to_string(Family::hamming(3, 4)), "h3,4");
}

// --- constructions -----------------------------------------------------------

TEST(HammingConstant, Examples) {
  const auto s = drs::hamming_ddrs_constant(2, 3);
  // 11 and 22 in base 3
  EXPECT_EQ(s, (LandmarkSet{1 + 3, 2 + 6}));
  EXPECT_TRUE(oracle::ddrs(oracle::distances(drs::build_graph(Family::hamming(2, 3))),
                           0, s));
  EXPECT_EQ(drs::hamming_ddrs_constant(1, 2), (LandmarkSet{1}));
  const auto s44 = drs::hamming_ddrs_constant(4, 4);
  EXPECT_EQ(s44.size(), 3u);
  EXPECT_TRUE(drs::is_ddrs(drs::HammingMetric(4, 4), 0, s44));
}

TEST(HammingLevels, Examples) {
  EXPECT_EQ(drs::hamming_ddrs_levels(2, 5), (LandmarkSet{1 + 5, 2 + 10}));
  EXPECT_TRUE(drs::is_ddrs(drs::build_graph(Family::hamming(2, 5)), 0,
                           drs::hamming_ddrs_levels(2, 5)));
  EXPECT_EQ(drs::hamming_ddrs_levels(1, 3), (LandmarkSet{1}));
  const auto s = drs::hamming_ddrs_levels(3, 4);
  EXPECT_EQ(s, (LandmarkSet{21, 42, 63}));  // 111, 222, 333 in base 4
  EXPECT_TRUE(oracle::ddrs(oracle::distances(drs::build_graph(Family::hamming(3, 4))),
                           0, s));
  EXPECT_THROW(drs::hamming_ddrs_levels(3, 3), std::invalid_argument);
}

// The acceptance run extends n = 1 to every q <= 2048.
TEST(HammingConstructions, AllWithinCap) {
  int checked = 0;
  for (int n = 1; n <= 11; ++n)
    for (int q = 2;; ++q) {
      std::uint64_t size = 1;
      for (int i = 0; i < n; ++i) size *= q;
      if (size > 2048 || (n == 1 && q > 256)) break;
      const drs::HammingMetric m(n, q);
      ASSERT_TRUE(drs::is_ddrs(m, 0, drs::hamming_ddrs_constant(n, q)))
          << n << "," << q;
      if (n <= q - 1) {
        ASSERT_TRUE(drs::is_ddrs(m, 0, drs::hamming_ddrs_levels(n, q)))
            << n << "," << q;
      }
      ++checked;
    }
  EXPECT_GT(checked, 300);
}

TEST(FoldedOdd, Examples) {
  // [11000], [00110], [00001] with coordinate i stored in bit i-1
  EXPECT_EQ(drs::folded_ddrs_odd(5),
            (LandmarkSet{0b00011, 0b01100, drs::fold_canonical(5, 0b10000)}));
  // [110] and [001] are one vertex of F_3
  EXPECT_EQ(drs::folded_ddrs_odd(3), (LandmarkSet{0b011}));
  EXPECT_TRUE(oracle::ddrs(oracle::distances(drs::build_graph(Family::folded(3))), 0,
                           drs::folded_ddrs_odd(3)));
  EXPECT_EQ(drs::folded_ddrs_odd(9).size(), 5u);
  EXPECT_THROW(drs::folded_ddrs_odd(4), std::invalid_argument);
  EXPECT_THROW(drs::folded_ddrs_odd(1), std::invalid_argument);
}

TEST(FoldedEven, Examples) {
  EXPECT_EQ(drs::folded_ddrs_even(4), (LandmarkSet{0b1, 0b11, 0b111}));
  EXPECT_TRUE(oracle::ddrs(oracle::distances(drs::build_graph(Family::folded(4))), 0,
                           drs::folded_ddrs_even(4)));
  EXPECT_EQ(drs::folded_ddrs_even(6).size(), 5u);
  EXPECT_EQ(drs::folded_ddrs_even(8).size(), 7u);
  EXPECT_THROW(drs::folded_ddrs_even(5), std::invalid_argument);
  EXPECT_THROW(drs::folded_ddrs_even(2), std::invalid_argument);
}

TEST(FoldedConstructions, PassOnAllSizesUpTo16) {
  for (int n = 3; n <= 15; n += 2)
    ASSERT_TRUE(drs::is_ddrs(drs::FoldedMetric(n), 0, drs::folded_ddrs_odd(n))) << n;
  for (int n = 4; n <= 16; n += 2)
    ASSERT_TRUE(drs::is_ddrs(drs::FoldedMetric(n), 0, drs::folded_ddrs_even(n))) << n;
}

// Known values: phi(F_6) = 5 matches the even
// construction exactly; phi(F_9) = 3 and phi(F_8) = 6 sit below the
// construction sizes 5 and 7.
TEST(FoldedConstructions, ConsistentWithPublishedPhi) {
  EXPECT_EQ(drs::solve_phi(drs::FoldedMetric(6), 0).value, 5);
  EXPECT_EQ(static_cast<int>(drs::folded_ddrs_even(6).size()), 5);
  EXPECT_LE(3, static_cast<int>(drs::folded_ddrs_odd(9).size()));
  EXPECT_LE(6, static_cast<int>(drs::folded_ddrs_even(8).size()));
}

// --- transfer maps -------------------------------------------------------------

TEST(FoldMap, SolverWitnessOfF5) {
  const auto w = drs::solve_beta(drs::FoldedMetric(5)).witness;
  EXPECT_EQ(w.size(), 4u);
  const auto lifted = drs::fold_resolving_map(5, w);
  EXPECT_TRUE(oracle::resolving(oracle::distances(drs::build_graph(Family::cube(5))),
                                lifted));
  EXPECT_THROW(drs::fold_resolving_map(5, LandmarkSet{0}), std::invalid_argument);
}

TEST(UnfoldMap, Examples) {
  const auto w = drs::solve_beta(drs::CubeMetric(5)).witness;
  ASSERT_EQ(w.size(), 4u);
  const auto folded = drs::unfold_resolving_map(5, w);
  EXPECT_LE(folded.size(), 4u);
  EXPECT_TRUE(oracle::resolving(oracle::distances(drs::build_graph(Family::folded(5))),
                                folded));
  EXPECT_EQ(drs::solve_beta(drs::FoldedMetric(5)).value, 4);

  LandmarkSet all(8);
  std::iota(all.begin(), all.end(), 0);
  EXPECT_TRUE(drs::is_resolving(drs::FoldedMetric(3), drs::unfold_resolving_map(3, all)));

  EXPECT_THROW(drs::unfold_resolving_map(4, LandmarkSet{0, 1, 2, 4}),
               std::invalid_argument);
  EXPECT_THROW(drs::unfold_resolving_map(5, LandmarkSet{0}), std::invalid_argument);
}

TEST(DoubleMap, Examples) {
  const auto w5 = drs::solve_beta(drs::CubeMetric(5)).witness;
  const auto f6 = drs::double_resolving_map(5, w5);
  EXPECT_LE(f6.size(), 8u);
  EXPECT_TRUE(drs::is_resolving(drs::FoldedMetric(6), f6));
  EXPECT_EQ(drs::solve_beta(drs::FoldedMetric(6)).value, 8);

  const auto w3 = drs::solve_beta(drs::CubeMetric(3)).witness;
  ASSERT_EQ(w3.size(), 3u);
  const auto f4 = drs::double_resolving_map(3, w3);
  EXPECT_LE(f4.size(), 6u);
  EXPECT_TRUE(oracle::resolving(oracle::distances(drs::build_graph(Family::folded(4))),
                                f4));
  EXPECT_EQ(drs::solve_beta(drs::FoldedMetric(4)).value, 6);
}

TEST(Sandwich, FoldedVersusCube) {
  for (int n : {3, 5}) {
    EXPECT_EQ(drs::solve_beta(drs::FoldedMetric(n)).value,
              drs::solve_beta(drs::CubeMetric(n)).value)
        << n;
  }
  for (int n : {3, 4, 5}) {
    EXPECT_LE(drs::solve_beta(drs::FoldedMetric(n + 1)).value,
              2 * drs::solve_beta(drs::CubeMetric(n)).value)
        << n;
  }
}

TEST(CubeTranslate, PreservesPredicates) {
  const drs::CubeMetric q4(4);
  drs::SolveOptions opt;
  opt.vertex_transitive = true;
  const auto w = drs::solve_psi_general(q4, opt).witness;
  for (std::uint32_t x = 0; x < 16; ++x) {
    EXPECT_TRUE(drs::is_doubly_resolving(q4, drs::cube_translate(w, x)));
  }
}
