#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "reebsym/oriented_map.hpp"

namespace reebsym {

enum class Sign : signed char { kMinus = -1, kPlus = 1 };

inline Sign opposite(Sign s) { return s == Sign::kPlus ? Sign::kMinus : Sign::kPlus; }
inline char sign_char(Sign s) { return s == Sign::kPlus ? '+' : '-'; }

/// A critical level component K of a function on the sphere, encoded as a
/// genus-0 oriented map whose vertices are the saddles on K and whose faces
/// are the disks of S^2 \ K, each labelled by the sign of f - f(K) on it.
///
/// Invariants (checked on construction): genus 0, at least one vertex, every
/// vertex has even degree 2k with k >= 2, and consecutive corners around
/// every vertex lie in faces of opposite sign. With the face convention of
/// OrientedMap the corner after dart d is in face_of(sigma(d)), so the
/// alternation test is sign(face_of(d)) != sign(face_of(sigma(d))).
class Atom {
 public:
  /// `face_sign[f]` is the sign of face index f. Throws Error with
  /// kGenusNonZero, kOddDegreeVertex, kDegreeTwoVertex,
  /// kSignAlternationViolation or kNoVertices; kSyntaxError when the sign
  /// vector does not have one entry per face.
  Atom(OrientedMap map, std::vector<Sign> face_sign);

  const OrientedMap& map() const noexcept { return map_; }
  Sign face_sign(int face) const { return face_sign_[face]; }
  const std::vector<Sign>& face_signs() const noexcept { return face_sign_; }
  Sign dart_sign(int d) const { return face_sign_[map_.face_of(d)]; }

  /// k = degree / 2 of a vertex (index into map().vertices()).
  int saddle_order(int vertex) const { return map_.degree(vertex) / 2; }

  /// Number of boundary arcs of a face on K: the length of its facial orbit.
  int boundary_arc_count(int face) const {
    return static_cast<int>(map_.faces()[face].size());
  }

  friend bool operator==(const Atom&, const Atom&) = default;

 private:
  OrientedMap map_;
  std::vector<Sign> face_sign_;
};

Atom validate_atom(OrientedMap map, std::vector<Sign> face_sign);

/// JSON atom file:
///   {"darts": D, "sigma": [...], "alpha": [...], "signs": {"<face id>": "+"|"-"}}
/// Serialization is canonical (fixed key order, sign keys sorted numerically)
/// and parse(serialize(a)) == a.
std::string serialize_atom(const Atom& atom);

/// Throws Error(kSyntaxError) on malformed text, or any validation error.
Atom parse_atom(std::string_view text);

}  // namespace reebsym
