#include "reebsym/lift.hpp"

#include <set>

namespace reebsym {

namespace {

int sign_value(Sign s) { return static_cast<int>(s); }

}  // namespace

LiftedMesh lift(const Atom& atom) {
  const OrientedMap& m = atom.map();
  const int darts = m.dart_count();
  std::vector<Rational> values;
  std::vector<Triangle> tris;
  const auto add = [&values](Rational value) {
    values.push_back(value);
    return static_cast<int>(values.size()) - 1;
  };

  std::vector<int> saddle;
  for (int v = 0; v < m.vertex_count(); ++v) saddle.push_back(add(0));

  // Loops get two strip points per side so that no triangle repeats a vertex.
  std::vector<std::vector<int>> strip(static_cast<std::size_t>(darts));
  for (int d = 0; d < darts; ++d) {
    const bool loop = m.vertex_of(d) == m.vertex_of(m.alpha(d));
    const int s = sign_value(atom.dart_sign(d));
    for (int j = 0; j < (loop ? 2 : 1); ++j) strip[d].push_back(add(Rational(s) * Rational(2 + j, 2)));
  }

  for (const auto& edge : m.edges()) {
    const int d = edge[0];
    const int a = edge[1];
    const int u = saddle[m.vertex_of(d)];
    const int w = saddle[m.vertex_of(a)];
    const int p = static_cast<int>(strip[d].size());
    const auto x = [&](int j) { return strip[d][j]; };
    const auto y = [&](int j) { return strip[a][p - 1 - j]; };
    tris.push_back({u, x(0), y(0)});
    for (int j = 0; j + 1 < p; ++j) {
      tris.push_back({x(j), x(j + 1), y(j)});
      tris.push_back({x(j + 1), y(j + 1), y(j)});
    }
    tris.push_back({w, y(p - 1), x(p - 1)});
  }

  std::vector<int> center(static_cast<std::size_t>(m.face_count()));
  std::vector<std::vector<int>> ring(static_cast<std::size_t>(darts));
  for (int f = 0; f < m.face_count(); ++f) {
    const int s = sign_value(atom.face_sign(f));
    // Boundary walked with the face on the right.
    std::vector<int> polygon;
    std::vector<std::pair<int, int>> slot;  // (dart, offset in its block)
    for (int d : m.faces()[f]) {
      polygon.push_back(saddle[m.vertex_of(d)]);
      slot.emplace_back(d, 0);
      for (std::size_t j = 0; j < strip[d].size(); ++j) {
        polygon.push_back(strip[d][j]);
        slot.emplace_back(d, static_cast<int>(j) + 1);
      }
    }
    const int n = static_cast<int>(polygon.size());
    const bool simple = std::set<int>(polygon.begin(), polygon.end()).size() == polygon.size();
    if (simple) {
      center[f] = add(2 * s);
      for (int i = 0; i < n; ++i) tris.push_back({polygon[(i + 1) % n], polygon[i], center[f]});
      continue;
    }
    std::vector<int> q;
    for (const auto& [d, offset] : slot) {
      q.push_back(add(Rational(s) * Rational(8 + offset, 4)));
      ring[d].push_back(q.back());
    }
    center[f] = add(3 * s);
    for (int i = 0; i < n; ++i) {
      const int k = (i + 1) % n;
      tris.push_back({polygon[k], polygon[i], q[i]});
      tris.push_back({polygon[k], q[i], q[k]});
      tris.push_back({q[k], q[i], center[f]});
    }
  }

  return LiftedMesh{ScalarMesh(std::move(values), std::move(tris)), std::move(saddle),
                    std::move(strip), std::move(center), std::move(ring)};
}

Permutation induced_vertex_permutation(const Atom& atom, const LiftedMesh& lifted,
                                       const Permutation& h) {
  const OrientedMap& m = atom.map();
  std::vector<int> images(static_cast<std::size_t>(lifted.mesh.vertex_count()), -1);
  for (int v = 0; v < m.vertex_count(); ++v) {
    images[lifted.saddle[v]] = lifted.saddle[m.vertex_of(h(m.vertices()[v].front()))];
  }
  for (int f = 0; f < m.face_count(); ++f) {
    images[lifted.center[f]] = lifted.center[m.face_of(h(m.faces()[f].front()))];
  }
  for (int d = 0; d < m.dart_count(); ++d) {
    for (std::size_t j = 0; j < lifted.strip[d].size(); ++j) {
      images[lifted.strip[d][j]] = lifted.strip[h(d)][j];
    }
    for (std::size_t j = 0; j < lifted.ring[d].size(); ++j) {
      images[lifted.ring[d][j]] = lifted.ring[h(d)][j];
    }
  }
  return Permutation(std::move(images));
}

PermGroup induced_vertex_group(const Atom& atom, const LiftedMesh& lifted, const PermGroup& group) {
  std::vector<Permutation> gens;
  for (const auto& g : group.generators()) {
    gens.push_back(induced_vertex_permutation(atom, lifted, g));
  }
  return closure(lifted.mesh.vertex_count(), std::move(gens));
}

}  // namespace reebsym
