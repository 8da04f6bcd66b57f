#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "reebsym/atom.hpp"
#include "reebsym/scalar_mesh.hpp"

namespace reebsym {

enum class NodeTag { kMinimum, kMaximum, kSaddle };

std::string_view tag_name(NodeTag tag);

struct ReebNode {
  Rational value;
  NodeTag tag = NodeTag::kSaddle;
  // Mesh simplices meeting the critical level component.
  std::vector<int> vertices;
  std::vector<std::pair<int, int>> crossing_edges;  // (lower, upper) endpoints
  std::vector<int> triangles;
};

/// One maximal family of regular level components.
struct ReebEdge {
  int lower = -1;
  int upper = -1;
};

/// Kronrod-Reeb graph of a PL scalar field: nodes are the critical
/// components of level sets, edges the families of regular components
/// between them.
class ReebGraph {
 public:
  const std::vector<ReebNode>& nodes() const noexcept { return nodes_; }
  const std::vector<ReebEdge>& edges() const noexcept { return edges_; }
  int node_count() const noexcept { return static_cast<int>(nodes_.size()); }
  int edge_count() const noexcept { return static_cast<int>(edges_.size()); }

  /// Incident edges of a node, sorted by edge index.
  std::vector<int> star(int node) const;
  int degree(int node) const { return static_cast<int>(star(node).size()); }

  /// Node whose level component contains mesh vertex v, or -1 for regular vertices.
  int node_of_vertex(int v) const { return node_of_vertex_[v]; }
  bool is_critical(int v) const { return critical_[v] != 0; }

  /// Reeb edge carrying the regular level component that crosses mesh edge
  /// (u, w) just above `level` (a value of the mesh); -1 if the mesh edge
  /// does not cross the open interval above `level`.
  int edge_above(int u, int w, const Rational& level) const;
  /// Same, for the open interval just below `level`.
  int edge_below(int u, int w, const Rational& level) const;
  /// Reeb edge through the regular level component at a non-vertex value c
  /// that crosses mesh edge (u, w); -1 if (u, w) does not cross c.
  int edge_at(int u, int w, const Rational& c) const;

  /// Mesh edge and value of a point on a regular component of the edge; used
  /// to transport edges under mesh symmetries.
  struct EdgeWitness {
    int u = -1;
    int w = -1;
    int interval = -1;  // index of the open interval between consecutive levels
  };
  const EdgeWitness& edge_witness(int edge) const { return witness_[edge]; }
  int edge_at_interval(int u, int w, int interval) const;

  /// Distinct vertex values in increasing order.
  const std::vector<Rational>& levels() const noexcept { return levels_; }

  bool is_tree() const { return node_count() - edge_count() == 1; }

  /// DOT export: nodes labelled "v=<value> (<tag>)", unlabelled edges.
  std::string to_dot() const;

  friend ReebGraph reeb_graph(const ScalarMesh& mesh);

 private:
  std::vector<ReebNode> nodes_;
  std::vector<ReebEdge> edges_;
  std::vector<EdgeWitness> witness_;
  std::vector<int> node_of_vertex_;
  std::vector<char> critical_;
  std::vector<Rational> levels_;
  std::vector<int> level_of_vertex_;
  // For every mesh map edge (index in mesh.map().edges()) spanning intervals
  // [first, first + size), the Reeb edge in each interval.
  std::vector<int> span_first_;
  std::vector<std::vector<int>> span_edges_;
  std::unordered_map<std::int64_t, int> map_edge_of_;  // u * V + w -> map edge
  int vertex_count_ = 0;
};

/// Sweep construction. Vertices are classified by their link: a vertex is
/// regular when its link splits into exactly one lower and one upper arc with
/// no neighbour at the same value, critical otherwise. Level components at
/// every vertex value and regular components on every open interval between
/// consecutive values are found with union-find over triangles, then chains
/// of regular components are collapsed into edges.
///
/// Throws Error(kDegenerateLevel) when a triangle is flat or a critical level
/// component also contains a regular vertex.
ReebGraph reeb_graph(const ScalarMesh& mesh);

/// Atom of the critical component at a saddle node, plus the correspondence
/// used by the star/face bijection.
struct ExtractedAtom {
  Atom atom;
  std::vector<int> mesh_vertex;  // atom vertex index -> mesh vertex
  std::vector<int> star_edge;    // atom face index -> incident Reeb edge of the node
};

/// Throws Error(kNotASaddleNode) for extremum nodes.
ExtractedAtom extract_atom(const ScalarMesh& mesh, const ReebGraph& reeb, int node);

}  // namespace reebsym
