#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "reebsym/permutation.hpp"

namespace reebsym {

/// Finite permutation group with a complete, sorted element list.
///
/// Elements are kept in lexicographic order of their image arrays, so the
/// identity is always elements().front().
class PermGroup {
 public:
  static constexpr std::size_t kDefaultCap = 10000;

  /// Trivial group on `degree` points.
  explicit PermGroup(int degree = 0);

  int degree() const noexcept { return degree_; }
  std::size_t order() const noexcept { return elements_.size(); }
  const std::vector<Permutation>& elements() const& noexcept { return elements_; }
  const std::vector<Permutation>& generators() const& noexcept { return generators_; }
  // Rvalue overloads move out, so `for (auto& g : make_group().elements())` is safe.
  std::vector<Permutation> elements() && noexcept { return std::move(elements_); }
  std::vector<Permutation> generators() && noexcept { return std::move(generators_); }

  bool contains(const Permutation& p) const;
  bool is_trivial() const noexcept { return elements_.size() == 1; }

  friend PermGroup closure(int degree, std::vector<Permutation> generators, std::size_t cap);

 private:
  int degree_ = 0;
  std::vector<Permutation> elements_;
  std::vector<Permutation> generators_;
};

/// Breadth-first closure of `generators`. Throws Error(kDegreeMismatch) when
/// a generator acts on a different number of points and Error(kGroupTooLarge)
/// once more than `cap` elements are found.
PermGroup closure(int degree, std::vector<Permutation> generators,
                  std::size_t cap = PermGroup::kDefaultCap);

/// Group generated by `elements`, with a greedily reduced generator list:
/// scanning in sorted order, an element is kept only if it is not already
/// generated by the ones kept before it.
PermGroup closure_with_reduced_generators(int degree, std::vector<Permutation> elements,
                                          std::size_t cap = PermGroup::kDefaultCap);

/// element order -> number of elements of that order.
std::map<std::int64_t, int> order_profile(const PermGroup& group);

/// Cyclic subgroup generated by one element, in power order starting at the identity.
std::vector<Permutation> powers(const Permutation& p);

struct GroupClass {
  enum class Kind { kCyclic, kDihedral, kTetrahedral, kOctahedral, kIcosahedral, kOther };

  Kind kind = Kind::kOther;
  int n = 0;  // meaningful for kCyclic / kDihedral

  /// "Z5", "D3", "A4", "S4", "A5" or "Other".
  std::string label() const;

  friend bool operator==(const GroupClass&, const GroupClass&) = default;
};

/// Isomorphism type among the finite subgroups of SO(3):
///   Z_n  if some element has order |G|;
///   D_n  if |G| = 2n, some r has order n and every element outside <r> has
///        order 2 (D_1 never arises: an order-2 group is cyclic);
///   A4, S4, A5 by order and order profile; Other otherwise.
GroupClass classify(const PermGroup& group);

bool is_in_so3_list(const GroupClass& cls);

/// Presentation witness for a dihedral class: r^n = s^2 = (r s)^2 = id with
/// <r, s> = G. Empty unless classify() reports kDihedral.
struct DihedralWitness {
  Permutation r;
  Permutation s;
};
std::optional<DihedralWitness> dihedral_witness(const PermGroup& group);

/// Generator file: {"generators": [[images...], ...]}. Parsing checks that
/// every entry is a permutation of 0..degree-1 (Error(kSyntaxError),
/// Error(kNotAPermutation), Error(kDegreeMismatch)).
std::string serialize_generators(const std::vector<Permutation>& generators);
std::vector<Permutation> parse_generators(std::string_view text, int degree);

}  // namespace reebsym
