#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "reebsym/atom.hpp"
#include "reebsym/perm_group.hpp"
#include "reebsym/scalar_mesh.hpp"

namespace reebsym {

enum class CheckStatus { kPass, kFail, kNotApplicable };

std::string_view status_name(CheckStatus status);

struct Check {
  std::string name;
  CheckStatus status = CheckStatus::kNotApplicable;
  nlohmann::ordered_json witness;
};

struct VerificationReport {
  std::string input;
  std::size_t group_order = 1;
  std::string group_class;
  std::vector<Check> checks;

  bool passed() const;
  const Check& check(std::string_view name) const;
  /// {"input", "group_order", "class", "checks": [{"name", "status", "witness"}]}
  nlohmann::ordered_json to_json() const;
  std::string to_text() const;
};

/// Atom checks, in order: SO3_CLASS, KERNEL_TRIVIAL, VERTEX_STAB_DIVIDES_K,
/// EDGE_STAB_TRIVIAL, FACE_STAB_DIVIDES_N, TWO_INVARIANT_CELLS,
/// FREE_SECTOR_ACTION. Without a subgroup the full automorphism group is used;
/// a subgroup is given by dart-permutation generators (Error(kNotAnAutomorphism)).
VerificationReport verify_atom(const Atom& atom,
                               const std::optional<std::vector<Permutation>>& subgroup = std::nullopt,
                               std::string input = "atom");

/// Every non-identity element leaves exactly chi = 2 cells invariant.
/// Not applicable for the trivial group.
Check lefschetz_check(const Atom& atom, const PermGroup& group);

/// Mesh checks, in order: FIX_NONEMPTY_SUBTREE, FIX_EDGE_IMPLIES_CYCLIC,
/// SINGLE_VERTEX_CASE, MORSE_K2. Without generators the full symmetry group
/// of the mesh is used; generators are vertex permutations. Throws
/// Error(kGenusNotZero) for meshes that are not spheres.
VerificationReport verify_mesh(const ScalarMesh& mesh,
                               const std::optional<std::vector<Permutation>>& generators = std::nullopt,
                               std::string input = "mesh");

}  // namespace reebsym
