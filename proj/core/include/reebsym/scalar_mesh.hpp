#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

#include "reebsym/oriented_map.hpp"

namespace reebsym {

using Rational = boost::rational<std::int64_t>;

/// "p/q" or "p"; throws Error(kSyntaxError).
Rational parse_rational(std::string_view text);
/// Inverse of parse_rational: "p" for integers, "p/q" otherwise.
std::string format_rational(const Rational& value);

using Triangle = std::array<int, 3>;

/// Triangulated closed oriented surface with an exact value at every vertex
/// (a PL scalar field).
///
/// Triangles are counterclockwise as seen from outside. The surface is also
/// kept as an OrientedMap whose darts are the directed mesh edges: dart
/// 3*t + i runs from triangles[t][i] to triangles[t][(i+1)%3], sigma turns
/// counterclockwise around the tail vertex and the faces of that map are the
/// triangles.
class ScalarMesh {
 public:
  /// Throws Error(kNotClosedSurface) unless the triangles form a connected,
  /// consistently oriented, closed 2-manifold using every vertex, and
  /// Error(kSyntaxError) for index/count mismatches or repeated corners.
  ScalarMesh(std::vector<Rational> values, std::vector<Triangle> triangles);

  int vertex_count() const noexcept { return static_cast<int>(values_.size()); }
  int triangle_count() const noexcept { return static_cast<int>(triangles_.size()); }
  int edge_count() const noexcept { return map_.edge_count(); }

  const Rational& value(int v) const { return values_[v]; }
  const std::vector<Rational>& values() const noexcept { return values_; }
  const std::vector<Triangle>& triangles() const noexcept { return triangles_; }

  const OrientedMap& map() const noexcept { return map_; }
  int tail(int dart) const { return triangles_[dart / 3][dart % 3]; }
  int head(int dart) const { return triangles_[dart / 3][(dart % 3 + 1) % 3]; }
  /// Dart from u to w, or -1 when u and w are not adjacent.
  int dart_between(int u, int w) const;

  /// Darts leaving v in counterclockwise order.
  const std::vector<int>& outgoing(int v) const { return map_.vertices()[vertex_orbit_[v]]; }
  /// Link vertices of v in counterclockwise order.
  std::vector<int> link(int v) const;

  int euler_characteristic() const noexcept { return map_.euler_characteristic(); }
  int genus() const { return map_.genus(); }

  friend bool operator==(const ScalarMesh& a, const ScalarMesh& b) {
    return a.values_ == b.values_ && a.triangles_ == b.triangles_;
  }

 private:
  std::vector<Rational> values_;
  std::vector<Triangle> triangles_;
  OrientedMap map_;
  std::vector<int> vertex_orbit_;  // mesh vertex -> index in map_.vertices()
};

/// JSON mesh file: {"values": [int | "p/q", ...], "triangles": [[i, j, k], ...]}.
/// Serialization writes integers as JSON numbers and other values as "p/q".
std::string serialize_mesh(const ScalarMesh& mesh);
ScalarMesh parse_mesh(std::string_view text);

}  // namespace reebsym
