#include <gtest/gtest.h>

#include <set>

#include "reebsym/automorphism.hpp"
#include "reebsym/corpus.hpp"
#include "reebsym/reeb_graph.hpp"
#include "support.hpp"

namespace reebsym {
namespace {

int leaf_count(const ReebGraph& g) {
  int leaves = 0;
  for (int n = 0; n < g.node_count(); ++n) leaves += g.degree(n) == 1;
  return leaves;
}

// Vertices whose neighbours are all above or all below.
int extremum_count(const ScalarMesh& mesh) {
  int count = 0;
  for (int v = 0; v < mesh.vertex_count(); ++v) {
    bool all_above = true;
    bool all_below = true;
    for (int w : mesh.link(v)) {
      all_above = all_above && mesh.value(w) > mesh.value(v);
      all_below = all_below && mesh.value(w) < mesh.value(v);
    }
    count += all_above || all_below;
  }
  return count;
}

// Number of Reeb edges whose open value interval contains c.
int edges_spanning(const ReebGraph& g, const Rational& c) {
  int count = 0;
  for (const auto& e : g.edges()) {
    count += g.nodes()[e.lower].value < c && c < g.nodes()[e.upper].value;
  }
  return count;
}

// Replace edge (p, q) by two edges through a new vertex with value `value`.
ScalarMesh split_edge(const ScalarMesh& mesh, int p, int q, Rational value) {
  std::vector<Rational> values = mesh.values();
  const int m = static_cast<int>(values.size());
  values.push_back(value);
  std::vector<Triangle> tris;
  for (const auto& t : mesh.triangles()) {
    bool split = false;
    for (int i = 0; i < 3 && !split; ++i) {
      const int a = t[i];
      const int b = t[(i + 1) % 3];
      const int c = t[(i + 2) % 3];
      if ((a == p && b == q) || (a == q && b == p)) {
        tris.push_back({a, m, c});
        tris.push_back({m, b, c});
        split = true;
      }
    }
    if (!split) tris.push_back(t);
  }
  return ScalarMesh(std::move(values), std::move(tris));
}

TEST(Rational, ParseAndFormat) {
  EXPECT_EQ(parse_rational("3"), Rational(3));
  EXPECT_EQ(parse_rational("-3/6"), Rational(-1, 2));
  EXPECT_EQ(format_rational(Rational(-1, 2)), "-1/2");
  EXPECT_EQ(format_rational(Rational(4, 2)), "2");
  EXPECT_REEBSYM_ERROR(parse_rational("1/0"), ErrorCode::kSyntaxError);
  EXPECT_REEBSYM_ERROR(parse_rational("x"), ErrorCode::kSyntaxError);
  EXPECT_REEBSYM_ERROR(parse_rational("1/"), ErrorCode::kSyntaxError);
}

TEST(ScalarMesh, TetrahedronStructure) {
  const ScalarMesh m = tetra_mesh();
  EXPECT_EQ(m.vertex_count(), 4);
  EXPECT_EQ(m.edge_count(), 6);
  EXPECT_EQ(m.euler_characteristic(), 2);
  EXPECT_EQ(m.link(0).size(), 3u);
  EXPECT_GE(m.dart_between(0, 1), 0);
  EXPECT_EQ(m.tail(m.dart_between(2, 3)), 2);
  EXPECT_EQ(m.head(m.dart_between(2, 3)), 3);
}

TEST(ScalarMesh, Errors) {
  EXPECT_REEBSYM_ERROR(ScalarMesh({0, 1, 2}, {{{0, 1, 2}}}), ErrorCode::kNotClosedSurface);
  EXPECT_REEBSYM_ERROR(ScalarMesh({0, 1, 2}, {{{0, 1, 5}}}), ErrorCode::kSyntaxError);
  // Two tetrahedra glued at vertex 0 only.
  EXPECT_REEBSYM_ERROR(ScalarMesh({0, 1, 2, 3, 4, 5, 6},
                                  {{{0, 2, 1}}, {{0, 1, 3}}, {{0, 3, 2}}, {{1, 2, 3}},
                                   {{0, 5, 4}}, {{0, 4, 6}}, {{0, 6, 5}}, {{4, 5, 6}}}),
                       ErrorCode::kNotClosedSurface);
  // Inconsistent orientation.
  EXPECT_REEBSYM_ERROR(ScalarMesh({0, 1, 2, 3}, {{{0, 1, 2}}, {{0, 1, 3}}, {{0, 3, 2}}, {{1, 2, 3}}}),
                       ErrorCode::kNotClosedSurface);
  // Unused vertex.
  EXPECT_REEBSYM_ERROR(
      ScalarMesh({0, 1, 2, 3, 4}, {{{0, 2, 1}}, {{0, 1, 3}}, {{0, 3, 2}}, {{1, 2, 3}}}),
      ErrorCode::kNotClosedSurface);
}

TEST(ScalarMesh, RoundTrip) {
  const ScalarMesh m = double_bubble_scenario().lifted.mesh;
  const std::string text = serialize_mesh(m);
  EXPECT_EQ(parse_mesh(text), m);
  EXPECT_EQ(serialize_mesh(parse_mesh(text)), text);
  EXPECT_NE(text.find("\"3/2\""), std::string::npos);
  EXPECT_REEBSYM_ERROR(parse_mesh(R"({"values": [0, 1], "triangles": []})"), ErrorCode::kNotClosedSurface);
  EXPECT_REEBSYM_ERROR(parse_mesh(R"({"values": [0.5], "triangles": []})"), ErrorCode::kSyntaxError);
  EXPECT_REEBSYM_ERROR(parse_mesh(R"({"values": [], "triangles": [], "x": 1})"), ErrorCode::kSyntaxError);
}

TEST(Reeb, TetrahedronIsAPath) {
  const ReebGraph g = reeb_graph(tetra_mesh());
  EXPECT_EQ(g.node_count(), 2);
  EXPECT_EQ(g.edge_count(), 1);
  EXPECT_EQ(leaf_count(g), 2);
  EXPECT_EQ(g.nodes()[0].tag, NodeTag::kMinimum);
  EXPECT_EQ(g.nodes()[1].tag, NodeTag::kMaximum);
  EXPECT_FALSE(g.is_critical(1));
  EXPECT_FALSE(g.is_critical(2));
  EXPECT_EQ(g.node_of_vertex(1), -1);
  EXPECT_EQ(g.star(0).size(), 1u);
  EXPECT_EQ(g.to_dot(),
            "graph reeb {\n"
            "  n0 [label=\"v=0 (minimum)\"];\n"
            "  n1 [label=\"v=3 (maximum)\"];\n"
            "  n0 -- n1;\n"
            "}\n");
}

TEST(Reeb, DoubleBubbleIsY) {
  const ScalarMesh mesh = double_bubble_scenario().lifted.mesh;
  const ReebGraph g = reeb_graph(mesh);
  ASSERT_EQ(g.node_count(), 4);
  EXPECT_EQ(g.edge_count(), 3);
  EXPECT_TRUE(g.is_tree());
  int saddle = -1;
  int maxima = 0;
  int minima = 0;
  for (int n = 0; n < g.node_count(); ++n) {
    switch (g.nodes()[n].tag) {
      case NodeTag::kSaddle: saddle = n; break;
      case NodeTag::kMaximum: ++maxima; break;
      case NodeTag::kMinimum: ++minima; break;
    }
  }
  ASSERT_GE(saddle, 0);
  EXPECT_EQ(maxima, 2);
  EXPECT_EQ(minima, 1);
  EXPECT_EQ(g.degree(saddle), 3);
  EXPECT_EQ(g.nodes()[saddle].value, Rational(0));

  const ExtractedAtom ex = extract_atom(mesh, g, saddle);
  EXPECT_TRUE(find_isomorphism(ex.atom, rose_atom(2)).has_value());
  EXPECT_EQ(ex.atom.map().face_count(), g.degree(saddle));
  EXPECT_EQ(std::set<int>(ex.star_edge.begin(), ex.star_edge.end()).size(), 3u);
}

TEST(Reeb, ExtractFromExtremumFails) {
  const ScalarMesh mesh = double_bubble_scenario().lifted.mesh;
  const ReebGraph g = reeb_graph(mesh);
  for (int n = 0; n < g.node_count(); ++n) {
    if (g.nodes()[n].tag != NodeTag::kSaddle) {
      EXPECT_REEBSYM_ERROR(extract_atom(mesh, g, n), ErrorCode::kNotASaddleNode);
    }
  }
}

TEST(Reeb, OctaSymHasSixSaddlesOnOneNode) {
  const ScalarMesh mesh = octa_sym_scenario().lifted.mesh;
  const ReebGraph g = reeb_graph(mesh);
  int saddles = 0;
  for (int n = 0; n < g.node_count(); ++n) {
    if (g.nodes()[n].tag != NodeTag::kSaddle) continue;
    ++saddles;
    EXPECT_EQ(g.nodes()[n].vertices.size(), 6u);
    const ExtractedAtom ex = extract_atom(mesh, g, n);
    EXPECT_TRUE(find_isomorphism(ex.atom, octahedron_atom()).has_value());
  }
  EXPECT_EQ(saddles, 1);
}

TEST(Reeb, MonkeySaddleGivesOrderThree) {
  const ScalarMesh mesh = lift(rose_atom(3)).mesh;
  const ReebGraph g = reeb_graph(mesh);
  for (int n = 0; n < g.node_count(); ++n) {
    if (g.nodes()[n].tag != NodeTag::kSaddle) continue;
    const ExtractedAtom ex = extract_atom(mesh, g, n);
    EXPECT_EQ(ex.atom.saddle_order(0), 3);
    EXPECT_TRUE(find_isomorphism(ex.atom, rose_atom(3)).has_value());
  }
}

TEST(Reeb, FlatTriangleIsDegenerate) {
  EXPECT_REEBSYM_ERROR(
      reeb_graph(ScalarMesh({0, 0, 0, 1}, {{{0, 2, 1}}, {{0, 1, 3}}, {{0, 3, 2}}, {{1, 2, 3}}})),
      ErrorCode::kDegenerateLevel);
}

TEST(Reeb, RegularVertexOnSaddleLevelIsDegenerate) {
  // Put a regular vertex at value 0 on the level curve through the saddle of
  // the double bubble by splitting a strip edge that crosses level 0.
  const LiftedMesh lifted = lift(rose_atom(2));
  const int x1 = lifted.strip[0][1];
  const int y0 = lifted.strip[1][1];
  const ScalarMesh mesh = split_edge(lifted.mesh, x1, y0, 0);
  EXPECT_REEBSYM_ERROR(reeb_graph(mesh), ErrorCode::kDegenerateLevel);
}

TEST(Reeb, EqualValuedRegularVerticesOffTheSaddleLevelAreFine) {
  const ScalarMesh mesh = octa_sym_scenario().lifted.mesh;
  EXPECT_NO_THROW(reeb_graph(mesh));
}

TEST(Reeb, TorusHasOneCycle) {
  std::vector<Triangle> tris;
  const auto id = [](int i, int j) { return 3 * ((i + 3) % 3) + (j + 3) % 3; };
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      tris.push_back({id(i, j), id(i + 1, j), id(i + 1, j + 1)});
      tris.push_back({id(i, j), id(i + 1, j + 1), id(i, j + 1)});
    }
  }
  std::vector<Rational> values;
  for (int v : {0, 4, 7, 2, 8, 5, 6, 1, 3}) values.emplace_back(v);
  const ScalarMesh mesh(values, tris);
  EXPECT_EQ(mesh.genus(), 1);
  const ReebGraph g = reeb_graph(mesh);
  EXPECT_EQ(g.edge_count() - g.node_count() + 1, 1);
  EXPECT_FALSE(g.is_tree());
}

void check_reeb_invariants(const ScalarMesh& mesh, std::mt19937& rng) {
  const ReebGraph g = reeb_graph(mesh);
  EXPECT_TRUE(g.is_tree());
  EXPECT_EQ(leaf_count(g), extremum_count(mesh));
  int euler = 0;
  for (int n = 0; n < g.node_count(); ++n) {
    euler += 2 - g.degree(n);
    const NodeTag tag = g.nodes()[n].tag;
    EXPECT_EQ(g.degree(n) == 1, tag != NodeTag::kSaddle);
  }
  EXPECT_EQ(euler, 2);
  for (const auto& e : g.edges()) EXPECT_LT(g.nodes()[e.lower].value, g.nodes()[e.upper].value);

  // Level-set component counts at 20 regular values.
  const auto& levels = g.levels();
  for (int s = 0; s < 20; ++s) {
    const std::size_t i = rng() % (levels.size() - 1);
    const std::int64_t k = 1 + static_cast<std::int64_t>(rng() % 97);
    const Rational c = levels[i] + (levels[i + 1] - levels[i]) * Rational(k, 98);
    EXPECT_EQ(testing::level_component_count(mesh, c), edges_spanning(g, c))
        << "at c = " << format_rational(c);
  }

  for (int n = 0; n < g.node_count(); ++n) {
    if (g.nodes()[n].tag != NodeTag::kSaddle) continue;
    const ExtractedAtom ex = extract_atom(mesh, g, n);
    const OrientedMap& m = ex.atom.map();
    EXPECT_EQ(m.face_count(), g.degree(n));
    // Star edges and atom faces correspond, with + faces going up.
    std::vector<int> star = ex.star_edge;
    std::sort(star.begin(), star.end());
    EXPECT_EQ(star, g.star(n));
    for (int f = 0; f < m.face_count(); ++f) {
      const ReebEdge& e = g.edges()[ex.star_edge[f]];
      EXPECT_EQ(ex.atom.face_sign(f) == Sign::kPlus, e.lower == n);
    }
    // sum(k_v - 1) + 1 = cycle rank of K = F - 1.
    int excess = 0;
    for (int v = 0; v < m.vertex_count(); ++v) excess += ex.atom.saddle_order(v) - 1;
    EXPECT_EQ(excess + 1, m.edge_count() - m.vertex_count() + 1);
    EXPECT_EQ(excess + 1, m.face_count() - 1);
  }
}

TEST(ReebProperty, CorpusMeshes) {
  std::mt19937 rng(17);
  for (const auto& e : corpus_entries()) {
    if (e.kind != CorpusKind::kMesh) continue;
    SCOPED_TRACE(e.name);
    check_reeb_invariants(parse_mesh(corpus_text(e.name)), rng);
  }
}

TEST(ReebProperty, LiftedCorpusAtomsRoundTrip) {
  std::mt19937 rng(19);
  for (const auto& e : corpus_entries()) {
    if (e.kind != CorpusKind::kAtom) continue;
    SCOPED_TRACE(e.name);
    const Atom atom = parse_atom(corpus_text(e.name));
    const ScalarMesh mesh = lift(atom).mesh;
    check_reeb_invariants(mesh, rng);
    const ReebGraph g = reeb_graph(mesh);
    int saddles = 0;
    for (int n = 0; n < g.node_count(); ++n) {
      if (g.nodes()[n].tag != NodeTag::kSaddle) continue;
      ++saddles;
      EXPECT_TRUE(find_isomorphism(extract_atom(mesh, g, n).atom, atom).has_value());
    }
    EXPECT_EQ(saddles, 1);
  }
}

TEST(ReebProperty, RandomSphereMeshes) {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    const int target = 8 + static_cast<int>(rng() % 190);
    const ScalarMesh mesh = testing::random_sphere_mesh(target, rng);
    SCOPED_TRACE("trial " + std::to_string(trial));
    ASSERT_LE(mesh.triangle_count(), 200);
    check_reeb_invariants(mesh, rng);
  }
}

}  // namespace
}  // namespace reebsym
