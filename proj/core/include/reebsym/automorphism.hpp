#pragma once

#include <optional>
#include <string>
#include <vector>

#include "reebsym/atom.hpp"
#include "reebsym/perm_group.hpp"

namespace reebsym {

enum class Orientation { kPreserving, kReversing };

/// The unique dart map h with h(base) = image that commutes with alpha and
/// either commutes with sigma (kPreserving) or satisfies
/// h * sigma = sigma^-1 * h (kReversing), if it exists and is a bijection
/// onto `to`. Maps must be connected, which makes h unique.
std::optional<Permutation> extend_from_dart(const OrientedMap& from, const OrientedMap& to,
                                            int base, int image,
                                            Orientation orientation = Orientation::kPreserving);

/// All automorphisms of `map` preserving a dart labelling (label[h(d)] == label[d]).
/// Candidate images of dart 0 are restricted to darts with the same label and
/// vertex degree; the check is complete because every automorphism is
/// determined by the image of dart 0.
std::vector<Permutation> labelled_automorphisms(const OrientedMap& map, const std::vector<int>& label,
                                                Orientation orientation = Orientation::kPreserving);

/// Orientation-preserving automorphism of the atom's map that preserves face signs.
bool is_automorphism(const Atom& atom, const Permutation& h);

/// The full group of orientation- and sign-preserving automorphisms, acting on darts.
PermGroup automorphism_group(const Atom& atom);

/// Sign-preserving automorphisms that reverse orientation. Reported for
/// inspection only; they are outside every theorem check.
std::vector<Permutation> orientation_reversing_automorphisms(const Atom& atom);

/// Closure of the given automorphisms. Throws Error(kNotAnAutomorphism).
PermGroup subgroup_closure(const Atom& atom, const std::vector<Permutation>& elements);

/// Sign- and orientation-preserving isomorphism from `a` to `b`, if any.
std::optional<Permutation> find_isomorphism(const Atom& a, const Atom& b);

/// Permutation of face indices induced by a dart automorphism.
Permutation face_permutation(const OrientedMap& map, const Permutation& h);

/// Image of a dart group on face indices. Throws Error(kKernelNotTrivial)
/// when a non-identity automorphism fixes every face.
PermGroup face_action(const Atom& atom, const PermGroup& group);

struct Cell {
  enum class Dim { kVertex = 0, kEdge = 1, kFace = 2 };
  Dim dim = Dim::kVertex;
  int index = 0;  // into the vertex / edge / face table of the map

  friend bool operator==(const Cell&, const Cell&) = default;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

std::string cell_name(const OrientedMap& map, const Cell& cell);

/// Stabilizer A_e of a cell together with the certificate that it is cyclic
/// of order dividing `bound` (k for a vertex, 1 for an edge, n for a face),
/// acting freely on the cell's sectors (every other dart around a vertex) or
/// boundary arcs (the darts of a face).
struct CellStabilizer {
  Cell cell;
  PermGroup group;          // acting on darts
  int bound = 1;
  bool cyclic = false;
  bool divides = false;
  bool free_action = false;
  int orbit_count = 0;      // orbits on the sectors / arcs
  int acted_count = 0;      // number of sectors / arcs acted on
};

CellStabilizer cell_stabilizer(const Atom& atom, const PermGroup& group, const Cell& cell);

/// Cells mapped onto themselves by h. Throws Error(kLefschetzViolation)
/// when h is not the identity and the count differs from 2.
std::vector<Cell> invariant_cells(const Atom& atom, const Permutation& h);

/// invariant_cells without the count check.
std::vector<Cell> invariant_cells_unchecked(const OrientedMap& map, const Permutation& h);

}  // namespace reebsym
