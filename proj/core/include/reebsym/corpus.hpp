#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "reebsym/atom.hpp"
#include "reebsym/lift.hpp"

namespace reebsym {

/// One vertex of order n with n petal loops; petals +, outer face -.
Atom rose_atom(int n);
/// Two vertices of order n joined by 2n edges; face signs alternate.
Atom banana_atom(int n);
/// Quasi-regular polyhedra as atoms: octahedron with faces coloured by the
/// two inscribed tetrahedra, cuboctahedron and icosidodecahedron with
/// triangles + and squares / pentagons -.
Atom octahedron_atom();
Atom cuboctahedron_atom();
Atom icosidodecahedron_atom();

/// Lifted atom with a subgroup of its symmetry group, as vertex permutations.
struct MeshScenario {
  LiftedMesh lifted;
  std::vector<Permutation> generators;
};

/// Lift of rose-2: two maxima, one minimum, one saddle. The generator swaps
/// the two maxima.
MeshScenario double_bubble_scenario();
/// Lift of the octahedron atom: six saddle vertices on one level. Generators
/// of the full rotation group.
MeshScenario octa_sym_scenario();
/// Lift of banana-n with only the rotation of order n about the axis through
/// its two saddle vertices.
MeshScenario banana_rotation_scenario(int n);
/// Tetrahedron with values 0, 1, 2, 3.
ScalarMesh tetra_mesh();

enum class CorpusKind { kAtom, kMesh, kGenerators };

struct CorpusEntry {
  std::string name;
  CorpusKind kind;
  std::string file_name;  // e.g. "rose_2.atom.json", "double_bubble_mesh_generators.json"
};

const std::vector<CorpusEntry>& corpus_entries();
/// Throws Error(kUnknownCorpusName).
const CorpusEntry& corpus_entry(std::string_view name);
/// Canonical file contents.
std::string corpus_text(std::string_view name);

}  // namespace reebsym
