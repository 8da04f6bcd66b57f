#include "reebsym/automorphism.hpp"

#include <algorithm>
#include <set>

#include "reebsym/error.hpp"

namespace reebsym {

std::optional<Permutation> extend_from_dart(const OrientedMap& from, const OrientedMap& to,
                                            int base, int image, Orientation orientation) {
  const int n = from.dart_count();
  if (to.dart_count() != n) return std::nullopt;
  std::vector<int> h(static_cast<std::size_t>(n), -1);
  std::vector<char> hit(static_cast<std::size_t>(n), 0);
  std::vector<int> stack{base};
  h[base] = image;
  hit[image] = 1;
  const auto assign = [&](int d, int target) {
    if (h[d] >= 0) return h[d] == target;
    if (hit[target]) return false;
    h[d] = target;
    hit[target] = 1;
    stack.push_back(d);
    return true;
  };
  while (!stack.empty()) {
    const int d = stack.back();
    stack.pop_back();
    const int hd = h[d];
    const int turned = orientation == Orientation::kPreserving ? to.sigma(hd) : to.sigma_inv(hd);
    if (!assign(from.sigma(d), turned)) return std::nullopt;
    if (!assign(from.alpha(d), to.alpha(hd))) return std::nullopt;
  }
  // Connected maps reach every dart from the base.
  return Permutation(std::move(h));
}

std::vector<Permutation> labelled_automorphisms(const OrientedMap& map, const std::vector<int>& label,
                                                Orientation orientation) {
  std::vector<Permutation> out;
  const int base_degree = map.degree(map.vertex_of(0));
  for (int image = 0; image < map.dart_count(); ++image) {
    if (label[image] != label[0] || map.degree(map.vertex_of(image)) != base_degree) continue;
    auto h = extend_from_dart(map, map, 0, image, orientation);
    if (!h) continue;
    bool keeps_labels = true;
    for (int d = 0; d < map.dart_count() && keeps_labels; ++d) {
      keeps_labels = label[(*h)(d)] == label[d];
    }
    if (keeps_labels) out.push_back(std::move(*h));
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::vector<int> sign_labels(const Atom& atom) {
  std::vector<int> label(static_cast<std::size_t>(atom.map().dart_count()));
  for (int d = 0; d < atom.map().dart_count(); ++d) {
    label[d] = static_cast<int>(atom.dart_sign(d));
  }
  return label;
}

}  // namespace

bool is_automorphism(const Atom& atom, const Permutation& h) {
  const OrientedMap& m = atom.map();
  if (h.degree() != m.dart_count()) return false;
  for (int d = 0; d < m.dart_count(); ++d) {
    if (h(m.sigma(d)) != m.sigma(h(d))) return false;
    if (h(m.alpha(d)) != m.alpha(h(d))) return false;
    if (atom.dart_sign(h(d)) != atom.dart_sign(d)) return false;
  }
  return true;
}

PermGroup automorphism_group(const Atom& atom) {
  return closure_with_reduced_generators(
      atom.map().dart_count(), labelled_automorphisms(atom.map(), sign_labels(atom)));
}

std::vector<Permutation> orientation_reversing_automorphisms(const Atom& atom) {
  // A reversing map carries the face right of d to the face right of alpha(h(d)).
  const OrientedMap& m = atom.map();
  std::vector<Permutation> out;
  for (auto& h : labelled_automorphisms(m, std::vector<int>(m.dart_count(), 0), Orientation::kReversing)) {
    bool ok = true;
    for (int d = 0; d < m.dart_count() && ok; ++d) ok = atom.dart_sign(m.alpha(h(d))) == atom.dart_sign(d);
    if (ok) out.push_back(std::move(h));
  }
  return out;
}

PermGroup subgroup_closure(const Atom& atom, const std::vector<Permutation>& elements) {
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (!is_automorphism(atom, elements[i])) {
      throw Error(ErrorCode::kNotAnAutomorphism, "element " + std::to_string(i) + " " +
                                                     elements[i].cycle_string());
    }
  }
  return closure(atom.map().dart_count(), elements);
}

std::optional<Permutation> find_isomorphism(const Atom& a, const Atom& b) {
  const OrientedMap& ma = a.map();
  const OrientedMap& mb = b.map();
  if (ma.dart_count() != mb.dart_count() || ma.vertex_count() != mb.vertex_count() ||
      ma.face_count() != mb.face_count()) {
    return std::nullopt;
  }
  for (int image = 0; image < mb.dart_count(); ++image) {
    if (b.dart_sign(image) != a.dart_sign(0)) continue;
    auto h = extend_from_dart(ma, mb, 0, image);
    if (!h) continue;
    bool ok = true;
    for (int d = 0; d < ma.dart_count() && ok; ++d) ok = b.dart_sign((*h)(d)) == a.dart_sign(d);
    if (ok) return h;
  }
  return std::nullopt;
}

Permutation face_permutation(const OrientedMap& map, const Permutation& h) {
  std::vector<int> images(static_cast<std::size_t>(map.face_count()));
  for (int f = 0; f < map.face_count(); ++f) images[f] = map.face_of(h(map.faces()[f].front()));
  return Permutation(std::move(images));
}

PermGroup face_action(const Atom& atom, const PermGroup& group) {
  const OrientedMap& m = atom.map();
  std::vector<Permutation> gens;
  for (const auto& g : group.generators()) gens.push_back(face_permutation(m, g));
  PermGroup image = closure(m.face_count(), std::move(gens));
  if (image.order() != group.order()) {
    // Some non-identity element acts trivially; find it for the diagnostic.
    for (const auto& g : group.elements()) {
      if (!g.is_identity() && face_permutation(m, g).is_identity()) {
        throw Error(ErrorCode::kKernelNotTrivial, "dart permutation " + g.cycle_string() +
                                                      " fixes every face");
      }
    }
    throw Error(ErrorCode::kKernelNotTrivial, "face image has order " +
                                                  std::to_string(image.order()) + " < " +
                                                  std::to_string(group.order()));
  }
  return image;
}

std::string cell_name(const OrientedMap& map, const Cell& cell) {
  switch (cell.dim) {
    case Cell::Dim::kVertex: return "vertex " + std::to_string(cell.index);
    case Cell::Dim::kEdge:
      return "edge " + std::to_string(map.edges()[cell.index][0]) + "-" +
             std::to_string(map.edges()[cell.index][1]);
    case Cell::Dim::kFace: return "face " + std::to_string(map.face_id(cell.index));
  }
  return "cell";
}

namespace {

const std::vector<OrientedMap::Orbit>& cell_table(const OrientedMap& map, Cell::Dim dim) {
  switch (dim) {
    case Cell::Dim::kVertex: return map.vertices();
    case Cell::Dim::kEdge: return map.edges();
    case Cell::Dim::kFace: return map.faces();
  }
  return map.vertices();
}

int cell_of_dart(const OrientedMap& map, Cell::Dim dim, int d) {
  switch (dim) {
    case Cell::Dim::kVertex: return map.vertex_of(d);
    case Cell::Dim::kEdge: return map.edge_of(d);
    case Cell::Dim::kFace: return map.face_of(d);
  }
  return -1;
}

bool leaves_invariant(const OrientedMap& map, const Cell& cell, const Permutation& h) {
  const int d = cell_table(map, cell.dim)[cell.index].front();
  return cell_of_dart(map, cell.dim, h(d)) == cell.index;
}

}  // namespace

CellStabilizer cell_stabilizer(const Atom& atom, const PermGroup& group, const Cell& cell) {
  const OrientedMap& m = atom.map();
  std::vector<Permutation> members;
  for (const auto& g : group.elements()) {
    if (leaves_invariant(m, cell, g)) members.push_back(g);
  }
  CellStabilizer out{cell, closure_with_reduced_generators(m.dart_count(), members)};

  // Darts acted on: every other dart around a vertex (the sectors on one
  // side of the level), the darts of a face (its boundary arcs).
  std::vector<int> acted;
  const auto& orbit = cell_table(m, cell.dim)[cell.index];
  switch (cell.dim) {
    case Cell::Dim::kVertex:
      out.bound = atom.saddle_order(cell.index);
      for (std::size_t i = 0; i < orbit.size(); i += 2) acted.push_back(orbit[i]);
      break;
    case Cell::Dim::kEdge:
      out.bound = 1;
      acted = orbit;
      break;
    case Cell::Dim::kFace:
      out.bound = atom.boundary_arc_count(cell.index);
      acted = orbit;
      break;
  }
  out.acted_count = static_cast<int>(acted.size());
  out.cyclic = classify(out.group).kind == GroupClass::Kind::kCyclic;
  out.divides = out.bound % static_cast<int>(out.group.order()) == 0;

  // Free action: the acted set is invariant and every orbit has |A_e| points.
  const std::set<int> acted_set(acted.begin(), acted.end());
  bool free_action = true;
  std::set<int> seen;
  int orbits = 0;
  for (int d : acted) {
    if (seen.count(d)) continue;
    ++orbits;
    std::set<int> orbit_points;
    for (const auto& g : out.group.elements()) {
      if (!acted_set.count(g(d))) free_action = false;
      orbit_points.insert(g(d));
    }
    if (orbit_points.size() != out.group.order()) free_action = false;
    seen.insert(orbit_points.begin(), orbit_points.end());
  }
  out.orbit_count = orbits;
  out.free_action = free_action &&
                    static_cast<int>(out.group.order()) * orbits == out.acted_count;
  return out;
}

std::vector<Cell> invariant_cells_unchecked(const OrientedMap& map, const Permutation& h) {
  std::vector<Cell> out;
  for (auto dim : {Cell::Dim::kVertex, Cell::Dim::kEdge, Cell::Dim::kFace}) {
    const int count = static_cast<int>(cell_table(map, dim).size());
    for (int i = 0; i < count; ++i) {
      const Cell cell{dim, i};
      if (leaves_invariant(map, cell, h)) out.push_back(cell);
    }
  }
  return out;
}

std::vector<Cell> invariant_cells(const Atom& atom, const Permutation& h) {
  auto cells = invariant_cells_unchecked(atom.map(), h);
  if (!h.is_identity() && cells.size() != 2) {
    throw Error(ErrorCode::kLefschetzViolation, h.cycle_string() + " leaves " +
                                                    std::to_string(cells.size()) +
                                                    " cells invariant");
  }
  return cells;
}

}  // namespace reebsym
