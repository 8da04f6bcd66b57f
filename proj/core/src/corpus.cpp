#include "reebsym/corpus.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <map>
#include <set>

#include "reebsym/automorphism.hpp"
#include "reebsym/error.hpp"

namespace reebsym {

namespace {

Atom with_signs(OrientedMap map, const std::function<Sign(int face_id)>& sign_of) {
  std::vector<Sign> signs;
  for (int f = 0; f < map.face_count(); ++f) signs.push_back(sign_of(map.face_id(f)));
  return Atom(std::move(map), std::move(signs));
}

using Vec3 = std::array<double, 3>;

Vec3 sub(const Vec3& a, const Vec3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

// Facets of the convex hull of points in convex position, each listed
// counterclockwise as seen from outside.
std::vector<std::vector<int>> hull_facets(const std::vector<Vec3>& pts) {
  constexpr double kEps = 1e-9;
  const int n = static_cast<int>(pts.size());
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> out;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      for (int c = b + 1; c < n; ++c) {
        Vec3 normal = cross(sub(pts[b], pts[a]), sub(pts[c], pts[a]));
        if (dot(normal, normal) < kEps) continue;
        bool above = false;
        bool below = false;
        std::vector<int> on;
        for (int i = 0; i < n; ++i) {
          const double s = dot(normal, sub(pts[i], pts[a]));
          if (s > kEps) above = true;
          else if (s < -kEps) below = true;
          else on.push_back(i);
        }
        if (above && below) continue;
        if (above) normal = {-normal[0], -normal[1], -normal[2]};
        if (!seen.insert(on).second) continue;
        Vec3 c0{0, 0, 0};
        for (int i : on) for (int k = 0; k < 3; ++k) c0[k] += pts[i][k] / static_cast<double>(on.size());
        const Vec3 u = sub(pts[on[0]], c0);
        const Vec3 w = cross(normal, u);
        std::sort(on.begin(), on.end(), [&](int i, int j) {
          const Vec3 pi = sub(pts[i], c0);
          const Vec3 pj = sub(pts[j], c0);
          return std::atan2(dot(pi, w), dot(pi, u)) < std::atan2(dot(pj, w), dot(pj, u));
        });
        out.push_back(std::move(on));
      }
    }
  }
  return out;
}

// Map of a convex polyhedron. Darts are directed edges sorted by (tail,
// head); sigma(a->b) = a->p where p precedes a on the counterclockwise facet
// containing a->b. The sign callback receives the facet lying to the right
// of a face's darts.
Atom polyhedron_atom(const std::vector<Vec3>& pts,
                     const std::function<Sign(const std::vector<int>& facet)>& sign_of) {
  const auto facets = hull_facets(pts);
  std::map<std::pair<int, int>, int> facet_of_edge;  // ccw edge -> facet
  std::map<std::pair<int, int>, int> pred_in_facet;   // (facet, vertex) -> predecessor
  for (int f = 0; f < static_cast<int>(facets.size()); ++f) {
    const auto& fc = facets[f];
    const int m = static_cast<int>(fc.size());
    for (int i = 0; i < m; ++i) {
      facet_of_edge[{fc[i], fc[(i + 1) % m]}] = f;
      pred_in_facet[{f, fc[i]}] = fc[(i + m - 1) % m];
    }
  }
  std::map<std::pair<int, int>, int> dart;
  for (const auto& [edge, f] : facet_of_edge) dart.emplace(edge, static_cast<int>(dart.size()));
  const int count = static_cast<int>(dart.size());
  std::vector<int> sigma(static_cast<std::size_t>(count));
  std::vector<int> alpha(static_cast<std::size_t>(count));
  std::vector<int> right_facet(static_cast<std::size_t>(count));
  for (const auto& [edge, d] : dart) {
    const auto [a, b] = edge;
    const int f = facet_of_edge.at(edge);
    sigma[d] = dart.at({a, pred_in_facet.at({f, a})});
    alpha[d] = dart.at({b, a});
    right_facet[d] = facet_of_edge.at({b, a});
  }
  OrientedMap map(count, std::move(sigma), std::move(alpha));
  return with_signs(std::move(map), [&](int id) { return sign_of(facets[right_facet[id]]); });
}

Sign size_sign(const std::vector<int>& facet) {
  return facet.size() == 3 ? Sign::kPlus : Sign::kMinus;
}

MeshScenario scenario(const Atom& atom, const std::vector<Permutation>& dart_generators) {
  MeshScenario out{lift(atom), {}};
  for (const auto& h : dart_generators) {
    out.generators.push_back(induced_vertex_permutation(atom, out.lifted, h));
  }
  return out;
}

}  // namespace

Atom rose_atom(int n) {
  const int darts = 2 * n;
  std::vector<int> sigma(static_cast<std::size_t>(darts));
  std::vector<int> alpha(static_cast<std::size_t>(darts));
  for (int d = 0; d < darts; ++d) {
    sigma[d] = (d + 1) % darts;
    alpha[d] = d ^ 1;
  }
  OrientedMap map(darts, std::move(sigma), std::move(alpha));
  return with_signs(std::move(map), [](int id) { return id % 2 ? Sign::kPlus : Sign::kMinus; });
}

Atom banana_atom(int n) {
  const int half = 2 * n;
  std::vector<int> sigma(static_cast<std::size_t>(2 * half));
  std::vector<int> alpha(static_cast<std::size_t>(2 * half));
  for (int i = 0; i < half; ++i) {
    sigma[i] = (i + 1) % half;
    sigma[half + i] = half + (i + 1) % half;
    const int partner = half + (half - i) % half;
    alpha[i] = partner;
    alpha[partner] = i;
  }
  OrientedMap map(2 * half, std::move(sigma), std::move(alpha));
  return with_signs(std::move(map), [half](int id) {
    // Every face contains one dart of the first vertex, its minimal dart.
    return id < half && id % 2 == 0 ? Sign::kPlus : Sign::kMinus;
  });
}

Atom octahedron_atom() {
  std::vector<Vec3> pts;
  for (int axis = 0; axis < 3; ++axis) {
    for (double s : {1.0, -1.0}) {
      Vec3 p{0, 0, 0};
      p[axis] = s;
      pts.push_back(p);
    }
  }
  return polyhedron_atom(pts, [&](const std::vector<int>& facet) {
    Vec3 c{0, 0, 0};
    for (int i : facet) for (int k = 0; k < 3; ++k) c[k] += pts[i][k];
    return c[0] * c[1] * c[2] > 0 ? Sign::kPlus : Sign::kMinus;
  });
}

Atom cuboctahedron_atom() {
  std::vector<Vec3> pts;
  for (int zero = 2; zero >= 0; --zero) {
    for (double s : {1.0, -1.0}) {
      for (double t : {1.0, -1.0}) {
        Vec3 p;
        int k = 0;
        for (int axis = 0; axis < 3; ++axis) p[axis] = axis == zero ? 0.0 : (k++ == 0 ? s : t);
        pts.push_back(p);
      }
    }
  }
  return polyhedron_atom(pts, size_sign);
}

Atom icosidodecahedron_atom() {
  const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  std::vector<Vec3> ico;
  for (int shift = 0; shift < 3; ++shift) {
    for (double s : {1.0, -1.0}) {
      for (double t : {1.0, -1.0}) {
        const Vec3 base{0.0, s, t * phi};
        ico.push_back({base[(3 - shift) % 3], base[(4 - shift) % 3], base[(5 - shift) % 3]});
      }
    }
  }
  std::vector<Vec3> pts;
  for (std::size_t i = 0; i < ico.size(); ++i) {
    for (std::size_t j = i + 1; j < ico.size(); ++j) {
      const Vec3 d = sub(ico[i], ico[j]);
      if (std::abs(dot(d, d) - 4.0) < 1e-9) {
        pts.push_back({(ico[i][0] + ico[j][0]) / 2, (ico[i][1] + ico[j][1]) / 2,
                       (ico[i][2] + ico[j][2]) / 2});
      }
    }
  }
  return polyhedron_atom(pts, size_sign);
}

MeshScenario double_bubble_scenario() {
  const Atom atom = rose_atom(2);
  return scenario(atom, {Permutation({2, 3, 0, 1})});
}

MeshScenario octa_sym_scenario() {
  const Atom atom = octahedron_atom();
  return scenario(atom, automorphism_group(atom).generators());
}

MeshScenario banana_rotation_scenario(int n) {
  const Atom atom = banana_atom(n);
  // The rotation is the automorphism sending dart 0 to dart 2.
  const PermGroup group = automorphism_group(atom);
  for (const auto& h : group.elements()) {
    if (h(0) == 2) return scenario(atom, {h});
  }
  throw std::logic_error("banana atom has no rotation");
}

ScalarMesh tetra_mesh() {
  return ScalarMesh({0, 1, 2, 3}, {{{0, 2, 1}}, {{0, 1, 3}}, {{0, 3, 2}}, {{1, 2, 3}}});
}

const std::vector<CorpusEntry>& corpus_entries() {
  static const std::vector<CorpusEntry> entries = [] {
    std::vector<CorpusEntry> out;
    const auto atom = [&out](std::string name) {
      out.push_back({name, CorpusKind::kAtom, name + ".atom.json"});
    };
    const auto mesh = [&out](std::string name) {
      out.push_back({name, CorpusKind::kMesh, name + ".json"});
    };
    const auto gens = [&out](std::string name) {
      out.push_back({name + "_generators", CorpusKind::kGenerators, name + "_generators.json"});
    };
    for (int n = 2; n <= 6; ++n) atom("rose_" + std::to_string(n));
    for (int n = 2; n <= 5; ++n) atom("banana_" + std::to_string(n));
    atom("octahedron");
    atom("cuboctahedron");
    atom("icosidodecahedron");
    mesh("double_bubble_mesh");
    gens("double_bubble_mesh");
    mesh("octa_sym_mesh");
    gens("octa_sym_mesh");
    mesh("banana3_mesh");
    gens("banana3_mesh");
    mesh("banana2_mesh");
    gens("banana2_mesh");
    mesh("tetra_mesh");
    return out;
  }();
  return entries;
}

const CorpusEntry& corpus_entry(std::string_view name) {
  for (const auto& e : corpus_entries()) {
    if (e.name == name) return e;
  }
  throw Error(ErrorCode::kUnknownCorpusName, std::string(name));
}

std::string corpus_text(std::string_view name) {
  const CorpusEntry& e = corpus_entry(name);
  const auto numbered = [&](std::string_view prefix) {
    return std::stoi(e.name.substr(prefix.size()));
  };
  if (e.kind == CorpusKind::kAtom) {
    if (e.name.rfind("rose_", 0) == 0) return serialize_atom(rose_atom(numbered("rose_")));
    if (e.name.rfind("banana_", 0) == 0) return serialize_atom(banana_atom(numbered("banana_")));
    if (e.name == "octahedron") return serialize_atom(octahedron_atom());
    if (e.name == "cuboctahedron") return serialize_atom(cuboctahedron_atom());
    return serialize_atom(icosidodecahedron_atom());
  }
  if (e.name == "tetra_mesh") return serialize_mesh(tetra_mesh());
  const auto starts = [&e](std::string_view stem) { return e.name.rfind(stem, 0) == 0; };
  const MeshScenario s = starts("double_bubble_mesh") ? double_bubble_scenario()
                         : starts("octa_sym_mesh")    ? octa_sym_scenario()
                         : starts("banana3_mesh")     ? banana_rotation_scenario(3)
                                                      : banana_rotation_scenario(2);
  if (e.kind == CorpusKind::kMesh) return serialize_mesh(s.lifted.mesh);
  return serialize_generators(s.generators);
}

}  // namespace reebsym
