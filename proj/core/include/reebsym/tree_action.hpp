#pragma once

#include <vector>

#include "reebsym/automorphism.hpp"
#include "reebsym/perm_group.hpp"
#include "reebsym/reeb_graph.hpp"
#include "reebsym/scalar_mesh.hpp"

namespace reebsym {

/// Value-preserving, orientation-preserving simplicial automorphisms of a
/// mesh, acting on mesh vertices.
PermGroup mesh_symmetry_group(const ScalarMesh& mesh);

/// Group generated by vertex permutations of the mesh. Throws
/// Error(kValueNotPreserved) or Error(kNotAnAutomorphism) (a triangle is not
/// mapped onto a triangle with the same orientation).
PermGroup mesh_subgroup(const ScalarMesh& mesh, const std::vector<Permutation>& generators);

/// Induced action of a mesh symmetry group on the Reeb graph. elements()[i]
/// of the group acts by nodes[i] and edges[i].
struct TreeAction {
  PermGroup group;
  std::vector<Permutation> nodes;
  std::vector<Permutation> edges;
};

/// Throws Error(kValueNotPreserved) when an element changes a vertex value
/// and std::logic_error if the induced map fails to be a value-preserving
/// homomorphism (which would mean the graph was built inconsistently).
TreeAction reeb_action(const ScalarMesh& mesh, const ReebGraph& reeb, const PermGroup& group);

struct FixedSubtree {
  std::vector<int> nodes;
  std::vector<int> edges;
  bool has_edge = false;
  bool connected = false;
};

/// Nodes and edges fixed by every element. Throws Error(kGenusNotZero) when
/// the graph is not a tree and Error(kEmptyFixedSet) when nothing is fixed.
FixedSubtree fixed_subtree(const ReebGraph& reeb, const TreeAction& action);

/// Image of the group in the permutations of star(v), with star edges
/// numbered in star(v) order. Throws Error(kVertexNotFixed).
PermGroup local_stabilizer(const ReebGraph& reeb, const TreeAction& action, int node);

/// For an atom (a single saddle node), the local stabilizer is the face action.
PermGroup local_stabilizer(const Atom& atom, const PermGroup& group);

}  // namespace reebsym
