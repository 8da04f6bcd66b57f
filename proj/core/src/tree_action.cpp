#include "reebsym/tree_action.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include <boost/pending/disjoint_sets.hpp>

#include "reebsym/error.hpp"

namespace reebsym {

namespace {

std::vector<int> value_ranks(const ScalarMesh& mesh) {
  std::vector<Rational> sorted = mesh.values();
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<int> rank(static_cast<std::size_t>(mesh.vertex_count()));
  for (int v = 0; v < mesh.vertex_count(); ++v) {
    rank[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), mesh.value(v)) -
                               sorted.begin());
  }
  return rank;
}

Permutation vertex_permutation(const ScalarMesh& mesh, const Permutation& dart_map) {
  std::vector<int> images(static_cast<std::size_t>(mesh.vertex_count()));
  for (int d = 0; d < mesh.map().dart_count(); ++d) images[mesh.tail(d)] = mesh.tail(dart_map(d));
  return Permutation(std::move(images));
}

int next_in_triangle(int dart) { return 3 * (dart / 3) + (dart % 3 + 1) % 3; }

std::size_t index_of(const PermGroup& group, const Permutation& p) {
  const auto& el = group.elements();
  return static_cast<std::size_t>(std::lower_bound(el.begin(), el.end(), p) - el.begin());
}

}  // namespace

PermGroup mesh_symmetry_group(const ScalarMesh& mesh) {
  const std::vector<int> rank = value_ranks(mesh);
  const int vcount = mesh.vertex_count();
  std::vector<int> label(static_cast<std::size_t>(mesh.map().dart_count()));
  for (int d = 0; d < mesh.map().dart_count(); ++d) {
    label[d] = rank[mesh.tail(d)] * vcount + rank[mesh.head(d)];
  }
  std::vector<Permutation> vertex_maps;
  for (const auto& h : labelled_automorphisms(mesh.map(), label)) {
    vertex_maps.push_back(vertex_permutation(mesh, h));
  }
  std::sort(vertex_maps.begin(), vertex_maps.end());
  vertex_maps.erase(std::unique(vertex_maps.begin(), vertex_maps.end()), vertex_maps.end());
  return closure_with_reduced_generators(vcount, std::move(vertex_maps));
}

PermGroup mesh_subgroup(const ScalarMesh& mesh, const std::vector<Permutation>& generators) {
  for (std::size_t i = 0; i < generators.size(); ++i) {
    const Permutation& g = generators[i];
    if (g.degree() != mesh.vertex_count()) {
      throw Error(ErrorCode::kDegreeMismatch, "generator " + std::to_string(i) + " acts on " +
                                                  std::to_string(g.degree()) + " points, mesh has " +
                                                  std::to_string(mesh.vertex_count()) + " vertices");
    }
    for (int v = 0; v < mesh.vertex_count(); ++v) {
      if (mesh.value(g(v)) != mesh.value(v)) {
        throw Error(ErrorCode::kValueNotPreserved,
                    "generator " + std::to_string(i) + " maps vertex " + std::to_string(v) + " to " +
                        std::to_string(g(v)));
      }
    }
    for (int t = 0; t < mesh.triangle_count(); ++t) {
      const Triangle& tri = mesh.triangles()[t];
      const int d = mesh.dart_between(g(tri[0]), g(tri[1]));
      if (d < 0 || mesh.head(next_in_triangle(d)) != g(tri[2])) {
        throw Error(ErrorCode::kNotAnAutomorphism,
                    "generator " + std::to_string(i) + " does not map triangle " +
                        std::to_string(t) + " to a triangle");
      }
    }
  }
  return closure(mesh.vertex_count(), generators);
}

TreeAction reeb_action(const ScalarMesh& mesh, const ReebGraph& reeb, const PermGroup& group) {
  TreeAction action{group, {}, {}};
  for (const auto& g : group.elements()) {
    for (int v = 0; v < mesh.vertex_count(); ++v) {
      if (mesh.value(g(v)) != mesh.value(v)) {
        throw Error(ErrorCode::kValueNotPreserved, g.cycle_string() + " maps vertex " +
                                                       std::to_string(v) + " to " +
                                                       std::to_string(g(v)));
      }
    }
    std::vector<int> node_images(static_cast<std::size_t>(reeb.node_count()));
    for (int n = 0; n < reeb.node_count(); ++n) {
      node_images[n] = reeb.node_of_vertex(g(reeb.nodes()[n].vertices.front()));
    }
    std::vector<int> edge_images(static_cast<std::size_t>(reeb.edge_count()));
    for (int e = 0; e < reeb.edge_count(); ++e) {
      const auto& w = reeb.edge_witness(e);
      edge_images[e] = reeb.edge_at_interval(g(w.u), g(w.w), w.interval);
    }
    if (!is_permutation(node_images) || !is_permutation(edge_images)) {
      throw std::logic_error("induced Reeb map is not a bijection for " + g.cycle_string());
    }
    for (int e = 0; e < reeb.edge_count(); ++e) {
      const ReebEdge& src = reeb.edges()[e];
      const ReebEdge& dst = reeb.edges()[edge_images[e]];
      if (node_images[src.lower] != dst.lower || node_images[src.upper] != dst.upper) {
        throw std::logic_error("induced Reeb map breaks incidence for " + g.cycle_string());
      }
    }
    action.nodes.emplace_back(std::move(node_images));
    action.edges.emplace_back(std::move(edge_images));
  }
  for (const auto& s : group.generators()) {
    const std::size_t is = index_of(group, s);
    for (std::size_t x = 0; x < group.order(); ++x) {
      const std::size_t ix = index_of(group, s * group.elements()[x]);
      if (action.nodes[ix] != action.nodes[is] * action.nodes[x] ||
          action.edges[ix] != action.edges[is] * action.edges[x]) {
        throw std::logic_error("induced Reeb action is not a homomorphism");
      }
    }
  }
  return action;
}

FixedSubtree fixed_subtree(const ReebGraph& reeb, const TreeAction& action) {
  if (!reeb.is_tree()) {
    throw Error(ErrorCode::kGenusNotZero, "Reeb graph has " + std::to_string(reeb.node_count()) +
                                              " nodes and " + std::to_string(reeb.edge_count()) +
                                              " edges");
  }
  FixedSubtree out;
  for (int n = 0; n < reeb.node_count(); ++n) {
    if (std::all_of(action.nodes.begin(), action.nodes.end(),
                    [n](const Permutation& p) { return p(n) == n; })) {
      out.nodes.push_back(n);
    }
  }
  for (int e = 0; e < reeb.edge_count(); ++e) {
    if (std::all_of(action.edges.begin(), action.edges.end(),
                    [e](const Permutation& p) { return p(e) == e; })) {
      out.edges.push_back(e);
    }
  }
  if (out.nodes.empty() && out.edges.empty()) {
    throw Error(ErrorCode::kEmptyFixedSet, "no node or edge is fixed by the group");
  }
  out.has_edge = !out.edges.empty();

  std::map<int, int> slot;
  for (int n : out.nodes) slot.emplace(n, static_cast<int>(slot.size()));
  boost::disjoint_sets_with_storage<> dsu(slot.size());
  bool closed = true;
  for (int e : out.edges) {
    const ReebEdge& re = reeb.edges()[e];
    if (!slot.count(re.lower) || !slot.count(re.upper)) {
      closed = false;
      continue;
    }
    dsu.union_set(slot[re.lower], slot[re.upper]);
  }
  int components = 0;
  for (std::size_t i = 0; i < slot.size(); ++i) {
    if (dsu.find_set(static_cast<int>(i)) == static_cast<int>(i)) ++components;
  }
  out.connected = closed && components == 1;
  return out;
}

PermGroup local_stabilizer(const ReebGraph& reeb, const TreeAction& action, int node) {
  for (const auto& p : action.nodes) {
    if (p(node) != node) {
      throw Error(ErrorCode::kVertexNotFixed, "node " + std::to_string(node) + " is moved to " +
                                                  std::to_string(p(node)));
    }
  }
  const std::vector<int> star = reeb.star(node);
  std::vector<Permutation> gens;
  for (const auto& s : action.group.generators()) {
    const Permutation& edges = action.edges[index_of(action.group, s)];
    std::vector<int> images;
    for (int e : star) {
      images.push_back(static_cast<int>(
          std::lower_bound(star.begin(), star.end(), edges(e)) - star.begin()));
    }
    gens.emplace_back(std::move(images));
  }
  return closure(static_cast<int>(star.size()), std::move(gens));
}

PermGroup local_stabilizer(const Atom& atom, const PermGroup& group) {
  return face_action(atom, group);
}

}  // namespace reebsym
