#include <gtest/gtest.h>

#include <set>

#include "reebsym/automorphism.hpp"
#include "reebsym/corpus.hpp"
#include "reebsym/reeb_graph.hpp"
#include "reebsym/tree_action.hpp"
#include "support.hpp"

namespace reebsym {
namespace {

Permutation P(std::vector<int> images) { return Permutation(std::move(images)); }

std::vector<Atom> corpus_atoms() {
  std::vector<Atom> out;
  for (const auto& e : corpus_entries()) {
    if (e.kind == CorpusKind::kAtom) out.push_back(parse_atom(corpus_text(e.name)));
  }
  return out;
}

TEST(Automorphisms, RoseTwo) {
  const Atom a = rose_atom(2);
  const PermGroup g = automorphism_group(a);
  ASSERT_EQ(g.order(), 2u);
  EXPECT_EQ(g.elements()[1], P({2, 3, 0, 1}));
  EXPECT_EQ(g.elements()[1], a.map().sigma_perm() * a.map().sigma_perm());
}

TEST(Automorphisms, CorpusOrders) {
  EXPECT_EQ(automorphism_group(octahedron_atom()).order(), 12u);
  EXPECT_EQ(automorphism_group(cuboctahedron_atom()).order(), 24u);
  EXPECT_EQ(automorphism_group(icosidodecahedron_atom()).order(), 60u);
  for (int n = 2; n <= 6; ++n) EXPECT_EQ(automorphism_group(rose_atom(n)).order(), static_cast<std::size_t>(n));
  for (int n = 2; n <= 5; ++n) {
    EXPECT_EQ(automorphism_group(banana_atom(n)).order(), static_cast<std::size_t>(2 * n));
  }
}

TEST(Automorphisms, GroupBoundedByDartCount) {
  for (const Atom& a : corpus_atoms()) {
    EXPECT_LE(automorphism_group(a).order(), static_cast<std::size_t>(a.map().dart_count()));
  }
}

TEST(Automorphisms, OrientationReversing) {
  // Reflections of rose-2 through the petal axis or the perpendicular axis.
  const auto rev = orientation_reversing_automorphisms(rose_atom(2));
  EXPECT_EQ(rev.size(), 2u);
  const Atom a = rose_atom(2);
  for (const auto& h : rev) {
    for (int d = 0; d < 4; ++d) EXPECT_EQ(h(a.map().sigma(d)), a.map().sigma_inv(h(d)));
  }
  EXPECT_EQ(orientation_reversing_automorphisms(octahedron_atom()).size(), 12u);
}

TEST(FaceAction, RoseTwoSwapsPetals) {
  const Atom a = rose_atom(2);
  const PermGroup faces = face_action(a, automorphism_group(a));
  ASSERT_EQ(faces.order(), 2u);
  EXPECT_EQ(faces.elements()[1], P({0, 2, 1}));
}

TEST(FaceAction, OctahedronHasTwoOrbitsOfFour) {
  const Atom a = octahedron_atom();
  const PermGroup faces = face_action(a, automorphism_group(a));
  EXPECT_EQ(faces.order(), 12u);
  std::set<std::set<int>> orbits;
  for (int f = 0; f < a.map().face_count(); ++f) {
    std::set<int> orbit;
    for (const auto& g : faces.elements()) orbit.insert(g(f));
    orbits.insert(orbit);
  }
  ASSERT_EQ(orbits.size(), 2u);
  for (const auto& o : orbits) {
    EXPECT_EQ(o.size(), 4u);
    for (int f : o) EXPECT_EQ(a.face_sign(f), a.face_sign(*o.begin()));
  }
}

TEST(FaceAction, TrivialInTrivialOut) {
  const Atom a = octahedron_atom();
  EXPECT_TRUE(face_action(a, PermGroup(a.map().dart_count())).is_trivial());
}

TEST(FaceAction, HomomorphismAndKernel) {
  for (const Atom& a : corpus_atoms()) {
    const PermGroup g = automorphism_group(a);
    int kernel = 0;
    for (const auto& x : g.elements()) {
      kernel += face_permutation(a.map(), x).is_identity();
      for (const auto& y : g.elements()) {
        EXPECT_EQ(face_permutation(a.map(), x * y),
                  face_permutation(a.map(), x) * face_permutation(a.map(), y));
      }
    }
    EXPECT_EQ(kernel, 1);
    EXPECT_EQ(face_action(a, g).order(), g.order());
  }
}

TEST(SubgroupClosure, Basics) {
  const Atom rose = rose_atom(2);
  EXPECT_EQ(subgroup_closure(rose, {P({2, 3, 0, 1})}).order(), 2u);
  EXPECT_TRUE(subgroup_closure(rose, {}).is_trivial());
  EXPECT_REEBSYM_ERROR(subgroup_closure(rose, {P({1, 2, 3, 0})}), ErrorCode::kNotAnAutomorphism);

  const Atom octa = octahedron_atom();
  const PermGroup full = automorphism_group(octa);
  std::vector<Permutation> threes;
  for (const auto& g : full.elements()) {
    if (g.order() == 3) threes.push_back(g);
  }
  // Two order-3 rotations about different axes generate everything.
  bool found = false;
  for (const auto& x : threes) {
    for (const auto& y : threes) {
      if (subgroup_closure(octa, {x, y}).order() == 12u) found = true;
    }
  }
  EXPECT_TRUE(found);
}

TEST(CellStabilizer, RoseTwo) {
  const Atom a = rose_atom(2);
  const PermGroup g = automorphism_group(a);
  const CellStabilizer v = cell_stabilizer(a, g, {Cell::Dim::kVertex, 0});
  EXPECT_EQ(v.group.order(), 2u);
  EXPECT_EQ(v.bound, 2);
  EXPECT_TRUE(v.cyclic && v.divides && v.free_action);
  for (int e = 0; e < 2; ++e) {
    EXPECT_TRUE(cell_stabilizer(a, g, {Cell::Dim::kEdge, e}).group.is_trivial());
  }
  EXPECT_EQ(cell_stabilizer(a, g, {Cell::Dim::kFace, 0}).group.order(), 2u);
  EXPECT_TRUE(cell_stabilizer(a, g, {Cell::Dim::kFace, 1}).group.is_trivial());
}

TEST(CellStabilizer, CuboctahedronSquare) {
  const Atom a = cuboctahedron_atom();
  const PermGroup g = automorphism_group(a);
  for (int f = 0; f < a.map().face_count(); ++f) {
    if (a.boundary_arc_count(f) != 4) continue;
    const CellStabilizer s = cell_stabilizer(a, g, {Cell::Dim::kFace, f});
    EXPECT_EQ(s.group.order(), 4u);
    EXPECT_TRUE(s.cyclic && s.divides && s.free_action);
  }
}

TEST(CellStabilizer, LemmaOnCorpus) {
  for (const Atom& a : corpus_atoms()) {
    const PermGroup g = automorphism_group(a);
    const OrientedMap& m = a.map();
    for (int v = 0; v < m.vertex_count(); ++v) {
      const auto s = cell_stabilizer(a, g, {Cell::Dim::kVertex, v});
      EXPECT_TRUE(s.cyclic && s.divides && s.free_action);
      EXPECT_EQ(static_cast<int>(s.group.order()) * s.orbit_count, s.acted_count);
    }
    for (int e = 0; e < m.edge_count(); ++e) {
      EXPECT_TRUE(cell_stabilizer(a, g, {Cell::Dim::kEdge, e}).group.is_trivial());
    }
    for (int f = 0; f < m.face_count(); ++f) {
      const auto s = cell_stabilizer(a, g, {Cell::Dim::kFace, f});
      EXPECT_TRUE(s.cyclic && s.divides && s.free_action);
      EXPECT_EQ(static_cast<int>(s.group.order()) * s.orbit_count, s.acted_count);
    }
  }
}

TEST(InvariantCells, RoseTwo) {
  const Atom a = rose_atom(2);
  const auto cells = invariant_cells(a, P({2, 3, 0, 1}));
  const std::vector<Cell> expected{{Cell::Dim::kVertex, 0}, {Cell::Dim::kFace, 0}};
  EXPECT_EQ(cells, expected);
  EXPECT_EQ(invariant_cells(a, Permutation::identity(4)).size(), 6u);
}

TEST(InvariantCells, OctahedronOrderThreeFixesTwoFaces) {
  const Atom a = octahedron_atom();
  for (const auto& g : automorphism_group(a).elements()) {
    if (g.order() != 3) continue;
    const auto cells = invariant_cells(a, g);
    ASSERT_EQ(cells.size(), 2u);
    for (const auto& c : cells) EXPECT_EQ(c.dim, Cell::Dim::kFace);
    EXPECT_NE(a.face_sign(cells[0].index), a.face_sign(cells[1].index));
  }
}

TEST(InvariantCells, LefschetzOnCorpus) {
  for (const Atom& a : corpus_atoms()) {
    for (const auto& g : automorphism_group(a).elements()) {
      if (!g.is_identity()) EXPECT_EQ(invariant_cells(a, g).size(), 2u);
    }
  }
}

TEST(InvariantCells, ViolationIsReported) {
  // A dart permutation that is not an automorphism can leave any number of
  // cells invariant; the checked variant refuses it.
  const Atom a = rose_atom(2);
  EXPECT_REEBSYM_ERROR(invariant_cells(a, P({0, 1, 3, 2})), ErrorCode::kLefschetzViolation);
}

TEST(AutomorphismOracle, SmallAtomsMatchBruteForce) {
  std::vector<Atom> atoms{rose_atom(2), rose_atom(3), rose_atom(4), banana_atom(2)};
  std::mt19937 rng(29);
  for (int trial = 0; trial < 200000 && atoms.size() < 40; ++trial) {
    const int darts = 2 * (2 + static_cast<int>(rng() % 3));
    if (auto a = testing::random_atom(darts, rng)) atoms.push_back(std::move(*a));
  }
  EXPECT_GE(atoms.size(), 20u);
  for (const Atom& a : atoms) {
    EXPECT_EQ(automorphism_group(a).elements(), testing::brute_force_automorphisms(a));
  }
}

TEST(AutomorphismProperty, RelabelingInvariance) {
  std::mt19937 rng(31);
  for (const Atom& a : corpus_atoms()) {
    const PermGroup g = automorphism_group(a);
    for (int trial = 0; trial < 3; ++trial) {
      const auto pi = testing::random_permutation(a.map().dart_count(), rng);
      const Atom b = testing::relabel(a, pi);
      const PermGroup h = automorphism_group(b);
      EXPECT_EQ(h.order(), g.order());
      EXPECT_EQ(classify(h), classify(g));
      EXPECT_EQ(order_profile(h), order_profile(g));
      const auto iso = find_isomorphism(a, b);
      ASSERT_TRUE(iso.has_value());
      EXPECT_EQ(iso->images().size(), pi.size());
    }
  }
}

TEST(Isomorphism, DistinguishesAtoms) {
  EXPECT_FALSE(find_isomorphism(rose_atom(4), banana_atom(2)).has_value());
  EXPECT_FALSE(find_isomorphism(rose_atom(2), rose_atom(3)).has_value());
  EXPECT_TRUE(find_isomorphism(rose_atom(3), rose_atom(3)).has_value());
}

// Tree actions on meshes.

TEST(TreeAction, DoubleBubbleSwapsMaxima) {
  const MeshScenario s = double_bubble_scenario();
  const ScalarMesh& mesh = s.lifted.mesh;
  const ReebGraph reeb = reeb_graph(mesh);
  const PermGroup group = mesh_subgroup(mesh, s.generators);
  EXPECT_EQ(group.order(), 2u);
  const TreeAction action = reeb_action(mesh, reeb, group);
  const Permutation& swap = action.nodes[1];
  for (int n = 0; n < reeb.node_count(); ++n) {
    const bool is_max = reeb.nodes()[n].tag == NodeTag::kMaximum;
    EXPECT_EQ(swap(n) != n, is_max);
  }
  const FixedSubtree fix = fixed_subtree(reeb, action);
  EXPECT_EQ(fix.nodes.size(), 2u);
  EXPECT_EQ(fix.edges.size(), 1u);
  EXPECT_TRUE(fix.has_edge);
  EXPECT_TRUE(fix.connected);
  for (int n : fix.nodes) EXPECT_NE(reeb.nodes()[n].tag, NodeTag::kMaximum);

  for (int n : fix.nodes) {
    const PermGroup local = local_stabilizer(reeb, action, n);
    if (reeb.nodes()[n].tag == NodeTag::kSaddle) {
      EXPECT_EQ(local.degree(), 3);
      EXPECT_EQ(local.order(), 2u);
      int moved = 0;
      for (int i = 0; i < 3; ++i) moved += local.elements()[1](i) != i;
      EXPECT_EQ(moved, 2);
    } else {
      EXPECT_EQ(local.degree(), 1);
      EXPECT_TRUE(local.is_trivial());
    }
  }
  for (int n = 0; n < reeb.node_count(); ++n) {
    if (reeb.nodes()[n].tag == NodeTag::kMaximum) {
      EXPECT_REEBSYM_ERROR(local_stabilizer(reeb, action, n), ErrorCode::kVertexNotFixed);
    }
  }
}

TEST(TreeAction, IdentityGroupFixesEverything) {
  const ScalarMesh mesh = double_bubble_scenario().lifted.mesh;
  const ReebGraph reeb = reeb_graph(mesh);
  const TreeAction action = reeb_action(mesh, reeb, PermGroup(mesh.vertex_count()));
  ASSERT_EQ(action.nodes.size(), 1u);
  EXPECT_TRUE(action.nodes[0].is_identity());
  EXPECT_TRUE(action.edges[0].is_identity());
  const FixedSubtree fix = fixed_subtree(reeb, action);
  EXPECT_EQ(static_cast<int>(fix.nodes.size()), reeb.node_count());
  EXPECT_EQ(static_cast<int>(fix.edges.size()), reeb.edge_count());
}

TEST(TreeAction, OctaSymFixesOnlyTheSaddle) {
  const MeshScenario s = octa_sym_scenario();
  const ScalarMesh& mesh = s.lifted.mesh;
  const ReebGraph reeb = reeb_graph(mesh);
  const PermGroup group = mesh_subgroup(mesh, s.generators);
  EXPECT_EQ(group.order(), 12u);
  EXPECT_EQ(mesh_symmetry_group(mesh).elements(), group.elements());
  const TreeAction action = reeb_action(mesh, reeb, group);
  const FixedSubtree fix = fixed_subtree(reeb, action);
  ASSERT_EQ(fix.nodes.size(), 1u);
  EXPECT_FALSE(fix.has_edge);
  EXPECT_EQ(reeb.nodes()[fix.nodes[0]].tag, NodeTag::kSaddle);
  const PermGroup local = local_stabilizer(reeb, action, fix.nodes[0]);
  EXPECT_EQ(local.degree(), 8);
  EXPECT_EQ(local.order(), 12u);
  EXPECT_EQ(classify(local).label(), "A4");
}

TEST(TreeAction, AtomLocalStabilizerIsFaceAction) {
  const Atom a = octahedron_atom();
  const PermGroup g = automorphism_group(a);
  const PermGroup local = local_stabilizer(a, g);
  EXPECT_EQ(local.degree(), 8);
  EXPECT_EQ(local.order(), 12u);
}

TEST(TreeAction, LocalStabilizerMatchesFaceActionThroughStar) {
  // On every lifted corpus atom, the star action at the saddle node equals
  // the face action transported along star_edge.
  for (const Atom& a : corpus_atoms()) {
    const LiftedMesh lifted = lift(a);
    const ReebGraph reeb = reeb_graph(lifted.mesh);
    const PermGroup dart_group = automorphism_group(a);
    const PermGroup vertex_group = induced_vertex_group(a, lifted, dart_group);
    EXPECT_EQ(vertex_group.order(), dart_group.order());
    const TreeAction action = reeb_action(lifted.mesh, reeb, vertex_group);
    const int saddle = reeb.node_of_vertex(lifted.saddle[0]);
    const ExtractedAtom ex = extract_atom(lifted.mesh, reeb, saddle);
    const std::vector<int> star = reeb.star(saddle);
    EXPECT_EQ(local_stabilizer(reeb, action, saddle).order(),
              local_stabilizer(ex.atom, automorphism_group(ex.atom)).order());
    // Each face centre sits on the leaf of its star edge.
    for (int f = 0; f < a.map().face_count(); ++f) {
      const int leaf = reeb.node_of_vertex(lifted.center[f]);
      const auto& es = reeb.star(leaf);
      ASSERT_EQ(es.size(), 1u);
      EXPECT_NE(std::find(star.begin(), star.end(), es[0]), star.end());
    }
  }
}

TEST(TreeAction, MeshSymmetryGroupEqualsLiftedAtomGroup) {
  for (const Atom& a : corpus_atoms()) {
    const LiftedMesh lifted = lift(a);
    const PermGroup induced = induced_vertex_group(a, lifted, automorphism_group(a));
    EXPECT_EQ(mesh_symmetry_group(lifted.mesh).elements(), induced.elements());
  }
}

TEST(TreeAction, Errors) {
  const MeshScenario s = double_bubble_scenario();
  const ScalarMesh& mesh = s.lifted.mesh;
  const ReebGraph reeb = reeb_graph(mesh);
  // Swap a saddle-level vertex with a maximum.
  std::vector<int> img(static_cast<std::size_t>(mesh.vertex_count()));
  std::iota(img.begin(), img.end(), 0);
  std::swap(img[s.lifted.saddle[0]], img[s.lifted.center[1]]);
  EXPECT_REEBSYM_ERROR(mesh_subgroup(mesh, {P(img)}), ErrorCode::kValueNotPreserved);
  EXPECT_REEBSYM_ERROR(reeb_action(mesh, reeb, closure(mesh.vertex_count(), {P(img)})),
                       ErrorCode::kValueNotPreserved);
  // Swap the two petal maxima without moving anything else.
  std::iota(img.begin(), img.end(), 0);
  std::swap(img[s.lifted.center[1]], img[s.lifted.center[2]]);
  EXPECT_REEBSYM_ERROR(mesh_subgroup(mesh, {P(img)}), ErrorCode::kNotAnAutomorphism);
  EXPECT_REEBSYM_ERROR(mesh_subgroup(mesh, {P({0, 1})}), ErrorCode::kDegreeMismatch);
}

}  // namespace
}  // namespace reebsym
