#pragma once

#include <vector>

#include "reebsym/atom.hpp"
#include "reebsym/perm_group.hpp"
#include "reebsym/scalar_mesh.hpp"

namespace reebsym {

/// Triangulated sphere carrying a PL field whose only critical level is the
/// atom: every atom vertex becomes a saddle vertex at value 0, every edge a
/// strip of triangles crossing the zero level, every face a disk with one
/// extremum of the face's sign at its center.
///
/// Vertex values depend only on face signs and local positions, so every
/// automorphism of the atom induces a value-preserving symmetry of the mesh.
struct LiftedMesh {
  ScalarMesh mesh;
  std::vector<int> saddle;                   // atom vertex -> mesh vertex
  std::vector<std::vector<int>> strip;       // dart -> strip points on its right, from its tail
  std::vector<int> center;                   // atom face -> mesh vertex
  std::vector<std::vector<int>> ring;        // dart -> ring points (empty for coned faces)
};

LiftedMesh lift(const Atom& atom);

/// Mesh vertex permutation induced by an automorphism of the lifted atom.
Permutation induced_vertex_permutation(const Atom& atom, const LiftedMesh& lifted,
                                       const Permutation& h);

/// Image of a dart group acting on the lifted mesh vertices.
PermGroup induced_vertex_group(const Atom& atom, const LiftedMesh& lifted, const PermGroup& group);

}  // namespace reebsym
