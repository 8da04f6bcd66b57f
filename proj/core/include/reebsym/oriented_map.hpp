#pragma once

#include <span>
#include <vector>

#include "reebsym/permutation.hpp"

namespace reebsym {

/// Oriented combinatorial map on darts {0..D-1}.
///
/// `sigma` turns a dart counterclockwise to the next dart at the same vertex,
/// `alpha` swaps the two darts of an edge, and faces are the orbits of
/// phi = sigma * alpha (alpha applied first). With this convention the face
/// of dart d lies to the right of d, and the corner between d and sigma(d)
/// belongs to the face of alpha(d), which is also the face of sigma(d).
///
/// Orbit tables are canonical: each orbit starts at its minimal dart and
/// follows the permutation; orbits are sorted by minimal dart.
class OrientedMap {
 public:
  using Orbit = std::vector<int>;

  /// Validates and memoizes orbit tables. Throws Error with kNotAPermutation,
  /// kInvolutionViolation or kDisconnected.
  OrientedMap(int dart_count, std::vector<int> sigma, std::vector<int> alpha);

  int dart_count() const noexcept { return sigma_.degree(); }

  int sigma(int d) const { return sigma_(d); }
  int sigma_inv(int d) const { return sigma_inv_(d); }
  int alpha(int d) const { return alpha_(d); }
  int phi(int d) const { return sigma_(alpha_(d)); }

  const Permutation& sigma_perm() const noexcept { return sigma_; }
  const Permutation& alpha_perm() const noexcept { return alpha_; }

  const std::vector<Orbit>& vertices() const noexcept { return vertices_; }
  const std::vector<Orbit>& edges() const noexcept { return edges_; }
  const std::vector<Orbit>& faces() const noexcept { return faces_; }

  int vertex_count() const noexcept { return static_cast<int>(vertices_.size()); }
  int edge_count() const noexcept { return static_cast<int>(edges_.size()); }
  int face_count() const noexcept { return static_cast<int>(faces_.size()); }

  // Index into the corresponding orbit table.
  int vertex_of(int d) const { return vertex_of_[d]; }
  int edge_of(int d) const { return edge_of_[d]; }
  int face_of(int d) const { return face_of_[d]; }

  int degree(int vertex) const { return static_cast<int>(vertices_[vertex].size()); }

  /// Canonical face id: minimal dart of the face orbit.
  int face_id(int face) const { return faces_[face].front(); }
  /// Face index for a canonical id, or -1 when `id` is not a face id.
  int face_index_of_id(int id) const;

  int euler_characteristic() const noexcept {
    return vertex_count() - edge_count() + face_count();
  }
  /// (2 - chi) / 2. Throws Error(kGenusNegative) when chi is odd or above 2.
  int genus() const;

  friend bool operator==(const OrientedMap& a, const OrientedMap& b) {
    return a.sigma_ == b.sigma_ && a.alpha_ == b.alpha_;
  }

 private:
  Permutation sigma_;
  Permutation sigma_inv_;
  Permutation alpha_;
  std::vector<Orbit> vertices_;
  std::vector<Orbit> edges_;
  std::vector<Orbit> faces_;
  std::vector<int> vertex_of_;
  std::vector<int> edge_of_;
  std::vector<int> face_of_;
};

/// Orbits of `perm` in canonical form, and the orbit index of every point.
std::vector<OrientedMap::Orbit> canonical_orbits(const Permutation& perm,
                                                  std::vector<int>* orbit_of = nullptr);

}  // namespace reebsym
