#include <gtest/gtest.h>

#include <random>
#include <set>

#include "domstruct/domstruct.hpp"
#include "oracles.hpp"

namespace {

using namespace domstruct;

std::set<Vertex> as_set(const std::vector<Vertex>& v) { return {v.begin(), v.end()}; }

// Two 6-cycles 0-1-2-3-4-5 and 0-1-6-7-8-9 sharing the edge 0-1.
Graph theta66() {
  return Graph(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {1, 6}, {6, 7}, {7, 8}, {8, 9}, {9, 0}});
}

TEST(IntersectionShape, SharedEdge) {
  const auto shape = intersection_shape(Cycle({0, 1, 2}), Cycle({0, 1, 3}));
  ASSERT_EQ(shape.components.size(), 1U);
  EXPECT_EQ(as_set(shape.components[0]), (std::set<Vertex>{0, 1}));
  EXPECT_TRUE(shape.component_is_path[0]);
  EXPECT_TRUE(shape.is_single_path);
}

TEST(IntersectionShape, OnlyClosingEdgeUnshared) {
  // triangle 0-3-5 against hexagon 0-1-2-4-5-3: only the edge 5-0 is missing from the hexagon
  const auto shape = intersection_shape(Cycle({0, 3, 5}), Cycle({0, 1, 2, 4, 5, 3}));
  ASSERT_EQ(shape.components.size(), 1U);
  EXPECT_EQ(as_set(shape.components[0]), (std::set<Vertex>{0, 3, 5}));
  EXPECT_TRUE(shape.is_single_path);
  EXPECT_TRUE(is_seamless(Cycle({0, 1, 2, 4, 5, 3}), Cycle({0, 3, 5})));
}

TEST(IntersectionShape, IdenticalCyclesAreNotAPath) {
  const Cycle c({0, 1, 2, 3, 4, 5});
  const auto shape = intersection_shape(c, c);
  ASSERT_EQ(shape.components.size(), 1U);
  EXPECT_EQ(shape.components[0].size(), 6U);
  EXPECT_FALSE(shape.component_is_path[0]);
  EXPECT_FALSE(shape.is_single_path);
}

TEST(IntersectionShape, DisjointCycles) {
  const auto shape = intersection_shape(Cycle({0, 1, 2}), Cycle({3, 4, 5}));
  EXPECT_TRUE(shape.components.empty());
  EXPECT_FALSE(shape.is_single_path);
}

TEST(IntersectionShape, TwoSeparatePaths) {
  // hexagon 0..5 and 0-1-6-3-4-7: shares paths 0-1 and 3-4
  const auto shape = intersection_shape(Cycle({0, 1, 2, 3, 4, 5}), Cycle({0, 1, 6, 3, 4, 7}));
  EXPECT_EQ(shape.components.size(), 2U);
  EXPECT_FALSE(shape.is_single_path);
}

TEST(IsSeamless, AllK4TrianglePairs) {
  const auto triangles = c_g(generate_named("K4")).cycles;
  ASSERT_EQ(triangles.size(), 4U);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      if (i != j) {
        EXPECT_TRUE(is_seamless(triangles[i], triangles[j]));
      }
}

TEST(IsSeamless, BowtieNeedsVertexSeamFlag) {
  const Cycle left({0, 1, 2});
  const Cycle right({2, 3, 4});
  EXPECT_FALSE(is_seamless(left, right));
  EXPECT_TRUE(is_seamless(left, right, {true}));
  EXPECT_FALSE(is_seamless(Cycle({0, 1, 2}), Cycle({3, 4, 5}), {true}));
}

TEST(IsSeamless, MaskRouteAgreesWithShapeRouteAndIsSymmetric) {
  std::vector<std::pair<std::string, Graph>> graphs;
  for (const char* name : {"K5", "petersen", "cube_q3", "wheel(5)"}) graphs.emplace_back(name, generate_named(name));
  for (std::uint64_t seed = 0; seed < 8; ++seed)
    graphs.emplace_back("random " + std::to_string(seed), generate_random_3connected(7 + static_cast<int>(seed % 3), seed));
  for (const auto& [name, g] : graphs) {
    const auto cycles = c_g(g).cycles;
    for (bool vertex_seam : {false, true}) {
      const SeamOptions opts{vertex_seam};
      const CyclePool pool(cycles, opts);
      for (std::size_t i = 0; i < cycles.size(); ++i) {
        for (std::size_t j = 0; j < cycles.size(); ++j) {
          if (i == j) continue;
          const bool fast = pool.seamless(i, j);
          EXPECT_EQ(fast, is_seamless(cycles[i], cycles[j], opts)) << name << " " << i << " " << j;
          EXPECT_EQ(fast, pool.seamless(j, i));
        }
      }
    }
  }
}

TEST(GrowStructure, K4ClosesToAllTriangles) {
  const auto triangles = c_g(generate_named("K4")).cycles;
  const auto s = grow_structure(triangles[0], triangles);
  EXPECT_EQ(s.cycles, triangles);
  EXPECT_EQ(s.union_graph.vertices, (VertexSet{0, 1, 2, 3}));
  EXPECT_EQ(s.union_graph.edges.size(), 6U);
}

TEST(GrowStructure, SingletonCases) {
  const Cycle hexagon({0, 1, 2, 3, 4, 5});
  const auto s = grow_structure(hexagon, {hexagon});
  ASSERT_EQ(s.cycles.size(), 1U);
  EXPECT_FALSE(s.partner[0].has_value());
  EXPECT_EQ(s.d_sg, s.cycles);

  // two triangles meeting in a single vertex never connect without seam
  const Cycle left({0, 1, 2});
  const Cycle right({2, 3, 4});
  EXPECT_EQ(grow_structure(left, {left, right}).cycles.size(), 1U);
  EXPECT_EQ(grow_structure(left, {left, right}, {true}).cycles.size(), 2U);
  EXPECT_THROW((void)grow_structure(Cycle({5, 6, 7}), {left}), std::invalid_argument);
}

TEST(GrowStructure, ClosureStableAndPartnered) {
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    const Graph g = generate_random_3connected(6 + static_cast<int>(seed % 6), seed);
    const auto pool = c_g(g).cycles;
    for (std::size_t k = 0; k < pool.size(); k += 7) {
      const auto s = grow_structure(pool[k], pool);
      const auto again = grow_structure(s.cycles.front(), s.cycles);
      EXPECT_EQ(again.cycles, s.cycles);
      // nothing outside is seamless with a member
      std::set<Cycle> members(s.cycles.begin(), s.cycles.end());
      for (const auto& c : pool) {
        if (members.count(c)) continue;
        for (const auto& m : s.cycles) EXPECT_FALSE(is_seamless(c, m));
      }
      if (s.cycles.size() > 1) {
        for (std::size_t i = 0; i < s.cycles.size(); ++i) {
          ASSERT_TRUE(s.partner[i].has_value());
          EXPECT_TRUE(is_seamless(s.cycles[i], s.cycles[*s.partner[i]]));
        }
      }
    }
  }
}

TEST(ReduceDSG, K4KeepsTwoTriangles) {
  const auto triangles = c_g(generate_named("K4")).cycles;
  const auto s = grow_structure(triangles[0], triangles);
  const auto d = reduce_d_sg(s);
  ASSERT_EQ(d.size(), 2U);
  EXPECT_EQ(d[0], Cycle({0, 2, 3}));
  EXPECT_EQ(d[1], Cycle({1, 2, 3}));
  EXPECT_EQ(d, s.d_sg);
}

TEST(ReduceDSG, SingletonAndTheta) {
  const Cycle hexagon({0, 1, 2, 3, 4, 5});
  EXPECT_EQ(reduce_d_sg(grow_structure(hexagon, {hexagon})).size(), 1U);

  const auto pool = c_g(theta66()).cycles;
  ASSERT_EQ(pool.size(), 2U);
  const auto s = grow_structure(pool[0], pool);
  EXPECT_EQ(s.cycles.size(), 2U);
  EXPECT_EQ(s.d_sg.size(), 2U);
}

TEST(ReduceDSG, InvariantsOnRandomGraphs) {
  for (std::uint64_t seed = 100; seed < 130; ++seed) {
    const Graph g = generate_random_3connected(6 + static_cast<int>(seed % 9), seed);
    for (const auto& s : enumerate_structures(g).structures) {
      std::map<Vertex, int> count;
      for (const auto& c : s.d_sg)
        for (Vertex v : c.vertices()) ++count[v];
      if (s.d_sg.size() > 1) {
        for (const auto& c : s.d_sg) {
          bool exclusive = false;
          for (Vertex v : c.vertices()) exclusive |= count[v] == 1;
          EXPECT_TRUE(exclusive);
        }
      }
      for (Vertex v : s.union_graph.vertices) EXPECT_TRUE(count.count(v)) << "vertex " << v << " lost by reduction";
      EXPECT_TRUE(is_connected(Graph(g.order(), s.union_graph.edges)) ||
                  components_without(Graph(g.order(), s.union_graph.edges),
                                     [&] {
                                       std::vector<bool> off(g.order(), true);
                                       for (Vertex v : s.union_graph.vertices) off[v] = false;
                                       return off;
                                     }())
                          .size() == 1);
    }
  }
}

TEST(EnumerateStructures, Examples) {
  const auto k4 = enumerate_structures(generate_named("K4"));
  ASSERT_EQ(k4.structures.size(), 1U);
  EXPECT_EQ(k4.structures[0].union_graph.vertices, (VertexSet{0, 1, 2, 3}));
  EXPECT_EQ(k4.structures[0].union_graph.edges, generate_named("K4").edges());

  const auto c6 = enumerate_structures(oracle::cycle_graph(6));
  ASSERT_EQ(c6.structures.size(), 1U);
  EXPECT_EQ(c6.structures[0].cycles.size(), 1U);

  EXPECT_TRUE(enumerate_structures(oracle::cycle_graph(5)).structures.empty());
  EXPECT_TRUE(enumerate_structures(generate_named("cube_q3"), {4, 200000}).structures.empty());
}

TEST(EnumerateStructures, DistinctUnionGraphsAndCap) {
  // two triangles joined by a path: two separate structures
  const Graph g(7, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {4, 6}});
  const auto all = enumerate_structures(g);
  ASSERT_EQ(all.structures.size(), 2U);
  EXPECT_NE(all.structures[0].union_graph, all.structures[1].union_graph);
  EXPECT_FALSE(all.truncated);

  const auto capped = enumerate_structures(g, {}, 1);
  EXPECT_EQ(capped.structures.size(), 1U);
  EXPECT_TRUE(capped.truncated);
}

Structure fake_structure(std::vector<Vertex> verts) {
  Structure s;
  s.union_graph.vertices = VertexSet(std::move(verts));
  return s;
}

TEST(BuildFamily, Examples) {
  const auto k4 = enumerate_structures(generate_named("K4"));
  const auto fam = build_family(k4.structures);
  ASSERT_EQ(fam.families.size(), 1U);
  EXPECT_LE(fam.families.size(), 5U);
  EXPECT_EQ(fam.families[0].covered, (VertexSet{0, 1, 2, 3}));

  const std::vector<Structure> overlapping{fake_structure({0, 1, 2}), fake_structure({2, 3, 4})};
  const auto two = build_family(overlapping);
  ASSERT_EQ(two.families.size(), 2U);
  EXPECT_EQ(two.families[0].members, (std::vector<std::size_t>{0}));
  EXPECT_EQ(two.families[1].members, (std::vector<std::size_t>{1}));

  const std::vector<Structure> disjoint{fake_structure({0, 1, 2}), fake_structure({3, 4, 5})};
  const auto one = build_family(disjoint);
  ASSERT_EQ(one.families.size(), 1U);
  EXPECT_EQ(one.families[0].members.size(), 2U);
  EXPECT_EQ(one.families[0].covered.size(), 6U);
}

TEST(BuildFamily, MatchesBruteForceMaximalDisjointSets) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t k = 1 + rng() % 8;
    std::vector<Structure> structures;
    for (std::size_t i = 0; i < k; ++i) {
      std::vector<Vertex> verts;
      for (Vertex v = 0; v < 12; ++v)
        if (rng() % 5 == 0) verts.push_back(v);
      if (verts.empty()) verts.push_back(static_cast<Vertex>(rng() % 12));
      structures.push_back(fake_structure(verts));
    }
    std::set<std::vector<std::size_t>> expected;
    for (std::uint32_t mask = 1; mask < (1U << k); ++mask) {
      auto disjoint_ok = [&](std::uint32_t m) {
        for (std::size_t a = 0; a < k; ++a)
          for (std::size_t b = a + 1; b < k; ++b)
            if ((m >> a & 1) && (m >> b & 1) &&
                !structures[a].union_graph.vertices.disjoint_from(structures[b].union_graph.vertices))
              return false;
        return true;
      };
      if (!disjoint_ok(mask)) continue;
      bool maximal = true;
      for (std::size_t extra = 0; extra < k && maximal; ++extra)
        if (!(mask >> extra & 1) && disjoint_ok(mask | (1U << extra))) maximal = false;
      if (!maximal) continue;
      std::vector<std::size_t> members;
      for (std::size_t a = 0; a < k; ++a)
        if (mask >> a & 1) members.push_back(a);
      expected.insert(members);
    }
    std::set<std::vector<std::size_t>> got;
    for (const auto& f : build_family(structures).families) got.insert(f.members);
    EXPECT_EQ(got, expected);
  }
}

TEST(BuildFamily, CapIsHonest) {
  std::vector<Structure> structures{fake_structure({0}), fake_structure({0, 1}), fake_structure({1})};
  // maximal disjoint sets: {0,2} and {1}
  EXPECT_EQ(build_family(structures).families.size(), 2U);
  const auto capped = build_family(structures, 1);
  EXPECT_EQ(capped.families.size(), 1U);
  EXPECT_TRUE(capped.truncated);
}

TEST(SeamPairs, K4) {
  const auto s = enumerate_structures(generate_named("K4")).structures.at(0);
  EXPECT_EQ(seam_pairs(s).size(), 6U);
}

}  // namespace
