#include "reebsym/reeb_graph.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include <boost/pending/disjoint_sets.hpp>

#include "reebsym/error.hpp"

namespace reebsym {

std::string_view tag_name(NodeTag tag) {
  switch (tag) {
    case NodeTag::kMinimum: return "minimum";
    case NodeTag::kMaximum: return "maximum";
    case NodeTag::kSaddle: return "saddle";
  }
  return "saddle";
}

namespace {

int sgn(const Rational& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

// Next dart of the same triangle: (a->b) becomes (b->c).
int next_in_triangle(int dart) { return 3 * (dart / 3) + (dart % 3 + 1) % 3; }

bool is_regular_vertex(const ScalarMesh& mesh, int v) {
  const std::vector<int> link = mesh.link(v);
  int changes = 0;
  for (std::size_t i = 0; i < link.size(); ++i) {
    const int s = sgn(mesh.value(link[i]) - mesh.value(v));
    if (s == 0) return false;
    const int t = sgn(mesh.value(link[(i + 1) % link.size()]) - mesh.value(v));
    if (s != t) ++changes;
  }
  return changes == 2;
}

// Mesh edge with endpoints ordered by value; spans the levels strictly
// between lo and hi (level instances) and the intervals lo..hi-1.
struct SpanEdge {
  int lower = -1;
  int upper = -1;
  int lo = 0;
  int hi = 0;
  std::size_t level_base = 0;
  std::size_t interval_base = 0;
};

}  // namespace

std::vector<int> ReebGraph::star(int node) const {
  std::vector<int> out;
  for (int e = 0; e < edge_count(); ++e) {
    if (edges_[e].lower == node || edges_[e].upper == node) out.push_back(e);
  }
  return out;
}

int ReebGraph::edge_at_interval(int u, int w, int interval) const {
  const auto it = map_edge_of_.find(static_cast<std::int64_t>(u) * vertex_count_ + w);
  if (it == map_edge_of_.end()) return -1;
  const int k = interval - span_first_[it->second];
  const auto& span = span_edges_[it->second];
  if (k < 0 || k >= static_cast<int>(span.size())) return -1;
  return span[k];
}

int ReebGraph::edge_above(int u, int w, const Rational& level) const {
  const auto it = std::lower_bound(levels_.begin(), levels_.end(), level);
  if (it == levels_.end() || *it != level) return -1;
  return edge_at_interval(u, w, static_cast<int>(it - levels_.begin()));
}

int ReebGraph::edge_below(int u, int w, const Rational& level) const {
  const auto it = std::lower_bound(levels_.begin(), levels_.end(), level);
  if (it == levels_.end() || *it != level) return -1;
  return edge_at_interval(u, w, static_cast<int>(it - levels_.begin()) - 1);
}

int ReebGraph::edge_at(int u, int w, const Rational& c) const {
  const auto it = std::lower_bound(levels_.begin(), levels_.end(), c);
  if (it != levels_.end() && *it == c) return -1;
  return edge_at_interval(u, w, static_cast<int>(it - levels_.begin()) - 1);
}

std::string ReebGraph::to_dot() const {
  std::ostringstream out;
  out << "graph reeb {\n";
  for (int n = 0; n < node_count(); ++n) {
    out << "  n" << n << " [label=\"v=" << format_rational(nodes_[n].value) << " ("
        << tag_name(nodes_[n].tag) << ")\"];\n";
  }
  for (const auto& e : edges_) out << "  n" << e.lower << " -- n" << e.upper << ";\n";
  out << "}\n";
  return out.str();
}

ReebGraph reeb_graph(const ScalarMesh& mesh) {
  ReebGraph g;
  const int vcount = mesh.vertex_count();
  const OrientedMap& m = mesh.map();
  g.vertex_count_ = vcount;

  g.levels_ = mesh.values();
  std::sort(g.levels_.begin(), g.levels_.end());
  g.levels_.erase(std::unique(g.levels_.begin(), g.levels_.end()), g.levels_.end());
  g.level_of_vertex_.resize(static_cast<std::size_t>(vcount));
  for (int v = 0; v < vcount; ++v) {
    g.level_of_vertex_[v] = static_cast<int>(
        std::lower_bound(g.levels_.begin(), g.levels_.end(), mesh.value(v)) - g.levels_.begin());
  }
  const auto level = [&](int v) { return g.level_of_vertex_[v]; };

  g.critical_.resize(static_cast<std::size_t>(vcount));
  for (int v = 0; v < vcount; ++v) g.critical_[v] = is_regular_vertex(mesh, v) ? 0 : 1;

  // Union-find instances: vertices first, then edge points on intermediate
  // levels, then edge points on open intervals.
  std::vector<SpanEdge> spans(static_cast<std::size_t>(m.edge_count()));
  std::size_t next_id = static_cast<std::size_t>(vcount);
  for (int e = 0; e < m.edge_count(); ++e) {
    const int d = m.edges()[e].front();
    int u = mesh.tail(d);
    int w = mesh.head(d);
    g.map_edge_of_[static_cast<std::int64_t>(u) * vcount + w] = e;
    g.map_edge_of_[static_cast<std::int64_t>(w) * vcount + u] = e;
    if (level(u) > level(w)) std::swap(u, w);
    SpanEdge& s = spans[e];
    s.lower = u;
    s.upper = w;
    s.lo = level(u);
    s.hi = level(w);
    s.level_base = next_id;
    next_id += static_cast<std::size_t>(std::max(0, s.hi - s.lo - 1));
  }
  const std::size_t first_interval_id = next_id;
  for (auto& s : spans) {
    s.interval_base = next_id;
    next_id += static_cast<std::size_t>(s.hi - s.lo);
  }
  const std::size_t total = next_id;
  const auto level_inst = [&](int e, int j) {
    return spans[e].level_base + static_cast<std::size_t>(j - spans[e].lo - 1);
  };
  const auto interval_inst = [&](int e, int j) {
    return spans[e].interval_base + static_cast<std::size_t>(j - spans[e].lo);
  };
  const auto edge_between = [&](int u, int w) {
    return g.map_edge_of_.at(static_cast<std::int64_t>(u) * vcount + w);
  };

  boost::disjoint_sets_with_storage<> dsu(total);

  // Elements of triangle t on level j: its vertices on j and its edges
  // strictly crossing j. The triangle meets the level in a connected set.
  const auto triangle_elements = [&](int t, int j) {
    std::vector<std::size_t> out;
    const Triangle& tri = mesh.triangles()[t];
    for (int i = 0; i < 3; ++i) {
      if (level(tri[i]) == j) out.push_back(static_cast<std::size_t>(tri[i]));
    }
    for (int i = 0; i < 3; ++i) {
      const int e = edge_between(tri[i], tri[(i + 1) % 3]);
      if (spans[e].lo < j && j < spans[e].hi) out.push_back(level_inst(e, j));
    }
    return out;
  };

  for (int t = 0; t < mesh.triangle_count(); ++t) {
    std::array<int, 3> tri = mesh.triangles()[t];
    std::sort(tri.begin(), tri.end(), [&](int a, int b) { return level(a) < level(b); });
    const int a = level(tri[0]);
    const int b = level(tri[1]);
    const int c = level(tri[2]);
    if (a == c) {
      throw Error(ErrorCode::kDegenerateLevel, "triangle " + std::to_string(t) + " is flat");
    }
    for (int j = a; j <= c; ++j) {
      const auto elems = triangle_elements(t, j);
      for (std::size_t i = 1; i < elems.size(); ++i) dsu.union_set(elems[0], elems[i]);
    }
    const int e_long = edge_between(tri[0], tri[2]);
    const int e_low = edge_between(tri[0], tri[1]);
    const int e_high = edge_between(tri[1], tri[2]);
    for (int j = a; j < c; ++j) {
      dsu.union_set(interval_inst(e_long, j), interval_inst(j < b ? e_low : e_high, j));
    }
  }

  // Level components.
  std::map<std::size_t, int> level_comp_of_root;
  struct LevelComp {
    int level = 0;
    std::vector<int> vertices;
    std::vector<int> edges;  // map edges crossing the level
    bool has_critical = false;
    bool has_regular = false;
    std::set<int> below;
    std::set<int> above;
  };
  std::vector<LevelComp> lcomps;
  const auto lcomp_of = [&](std::size_t inst, int j) {
    const std::size_t root = dsu.find_set(inst);
    auto [it, inserted] = level_comp_of_root.emplace(root, static_cast<int>(lcomps.size()));
    if (inserted) {
      lcomps.emplace_back();
      lcomps.back().level = j;
    }
    return it->second;
  };
  for (int v = 0; v < vcount; ++v) {
    LevelComp& lc = lcomps[lcomp_of(static_cast<std::size_t>(v), level(v))];
    lc.vertices.push_back(v);
    (g.critical_[v] ? lc.has_critical : lc.has_regular) = true;
  }
  for (int e = 0; e < m.edge_count(); ++e) {
    for (int j = spans[e].lo + 1; j < spans[e].hi; ++j) {
      lcomps[lcomp_of(level_inst(e, j), j)].edges.push_back(e);
    }
  }

  // Interval components and their attachments to the levels bounding them.
  std::map<std::size_t, int> icomp_of_root;
  struct IntervalComp {
    int interval = 0;
    int below = -1;  // level component at levels_[interval]
    int above = -1;  // level component at levels_[interval + 1]
    int witness_edge = -1;
    int reeb_edge = -1;
  };
  std::vector<IntervalComp> icomps;
  std::vector<int> icomp_of_inst(total - first_interval_id, -1);
  for (int e = 0; e < m.edge_count(); ++e) {
    const SpanEdge& s = spans[e];
    for (int j = s.lo; j < s.hi; ++j) {
      const std::size_t inst = interval_inst(e, j);
      const std::size_t root = dsu.find_set(inst);
      auto [it, inserted] = icomp_of_root.emplace(root, static_cast<int>(icomps.size()));
      const std::size_t lower_elem =
          s.lo == j ? static_cast<std::size_t>(s.lower) : level_inst(e, j);
      const std::size_t upper_elem =
          s.hi == j + 1 ? static_cast<std::size_t>(s.upper) : level_inst(e, j + 1);
      const int below = level_comp_of_root.at(dsu.find_set(lower_elem));
      const int above = level_comp_of_root.at(dsu.find_set(upper_elem));
      if (inserted) {
        icomps.push_back({j, below, above, e, -1});
        lcomps[below].above.insert(it->second);
        lcomps[above].below.insert(it->second);
      } else if (icomps[it->second].below != below || icomps[it->second].above != above) {
        throw std::logic_error("reeb_graph: regular component attaches to two level components");
      }
      icomp_of_inst[inst - first_interval_id] = it->second;
    }
  }

  // Nodes: level components holding critical vertices, ordered by (value, min vertex).
  std::vector<int> node_comps;
  for (int c = 0; c < static_cast<int>(lcomps.size()); ++c) {
    const LevelComp& lc = lcomps[c];
    if (lc.has_critical) {
      if (lc.has_regular) {
        throw Error(ErrorCode::kDegenerateLevel,
                    "critical level component at v=" + format_rational(g.levels_[lc.level]) +
                        " contains a regular vertex");
      }
      node_comps.push_back(c);
    } else if (lc.below.size() != 1 || lc.above.size() != 1) {
      throw std::logic_error("reeb_graph: regular level component is not a pass-through");
    }
  }
  std::sort(node_comps.begin(), node_comps.end(), [&](int x, int y) {
    const LevelComp& a = lcomps[x];
    const LevelComp& b = lcomps[y];
    if (a.level != b.level) return a.level < b.level;
    return a.vertices.front() < b.vertices.front();
  });
  std::vector<int> node_of_comp(lcomps.size(), -1);
  for (int n = 0; n < static_cast<int>(node_comps.size()); ++n) {
    const LevelComp& lc = lcomps[node_comps[n]];
    node_of_comp[node_comps[n]] = n;
    ReebNode node;
    node.value = g.levels_[lc.level];
    node.tag = lc.below.empty() ? NodeTag::kMinimum
               : lc.above.empty() ? NodeTag::kMaximum
                                  : NodeTag::kSaddle;
    node.vertices = lc.vertices;
    for (int e : lc.edges) node.crossing_edges.emplace_back(spans[e].lower, spans[e].upper);
    g.nodes_.push_back(std::move(node));
  }

  // Edges: walk each chain of regular components upward from its lower node.
  for (int n = 0; n < static_cast<int>(node_comps.size()); ++n) {
    for (int start : lcomps[node_comps[n]].above) {
      const int edge = static_cast<int>(g.edges_.size());
      int ic = start;
      while (true) {
        icomps[ic].reeb_edge = edge;
        const int up = icomps[ic].above;
        if (node_of_comp[up] >= 0) {
          g.edges_.push_back({n, node_of_comp[up]});
          break;
        }
        ic = *lcomps[up].above.begin();
      }
      const SpanEdge& s = spans[icomps[start].witness_edge];
      g.witness_.push_back({s.lower, s.upper, icomps[start].interval});
    }
  }

  g.span_first_.resize(spans.size());
  g.span_edges_.resize(spans.size());
  for (int e = 0; e < static_cast<int>(spans.size()); ++e) {
    g.span_first_[e] = spans[e].lo;
    for (int j = spans[e].lo; j < spans[e].hi; ++j) {
      g.span_edges_[e].push_back(
          icomps[icomp_of_inst[interval_inst(e, j) - first_interval_id]].reeb_edge);
    }
  }

  g.node_of_vertex_.assign(static_cast<std::size_t>(vcount), -1);
  for (int v = 0; v < vcount; ++v) {
    g.node_of_vertex_[v] = node_of_comp[level_comp_of_root.at(dsu.find_set(static_cast<std::size_t>(v)))];
  }
  for (int t = 0; t < mesh.triangle_count(); ++t) {
    const Triangle& tri = mesh.triangles()[t];
    const int lo = std::min({level(tri[0]), level(tri[1]), level(tri[2])});
    const int hi = std::max({level(tri[0]), level(tri[1]), level(tri[2])});
    for (int j = lo; j <= hi; ++j) {
      const auto elems = triangle_elements(t, j);
      const int n = node_of_comp[level_comp_of_root.at(dsu.find_set(elems.front()))];
      if (n >= 0) g.nodes_[n].triangles.push_back(t);
    }
  }
  return g;
}

ExtractedAtom extract_atom(const ScalarMesh& mesh, const ReebGraph& reeb, int node) {
  if (node < 0 || node >= reeb.node_count()) {
    throw Error(ErrorCode::kNotASaddleNode, "node " + std::to_string(node) + " does not exist");
  }
  const ReebNode& rn = reeb.nodes()[node];
  if (rn.tag != NodeTag::kSaddle) {
    throw Error(ErrorCode::kNotASaddleNode,
                "node " + std::to_string(node) + " is a " + std::string(tag_name(rn.tag)));
  }
  const Rational& c = rn.value;
  const auto rel = [&](int x) { return sgn(mesh.value(x) - c); };
  const OrientedMap& m = mesh.map();

  // A branch is one level-curve arc leaving a saddle: either along a mesh
  // edge to an equal-valued neighbour, or across a link edge whose ends lie
  // on opposite sides of the level.
  struct Branch {
    int vertex = -1;       // mesh vertex
    int sector_first = -1; // first link vertex of the sector after the branch
    int sector_sign = 0;
  };
  std::vector<Branch> branches;
  std::vector<int> block_start;
  std::map<int, int> by_out_dart;   // vertex branches keyed by the mesh dart v->w
  std::map<int, int> by_link_dart;  // crossing branches keyed by the link dart
  for (int v : rn.vertices) {
    block_start.push_back(static_cast<int>(branches.size()));
    const auto& out = mesh.outgoing(v);
    const std::size_t deg = out.size();
    for (std::size_t i = 0; i < deg; ++i) {
      const int x = mesh.head(out[i]);
      const int next = mesh.head(out[(i + 1) % deg]);
      if (rel(x) == 0) {
        if (rel(next) == 0) {
          throw Error(ErrorCode::kDegenerateLevel, "flat triangle at vertex " + std::to_string(v));
        }
        by_out_dart[out[i]] = static_cast<int>(branches.size());
        branches.push_back({v, next, rel(next)});
      }
      if (rel(x) * rel(next) < 0) {
        by_link_dart[next_in_triangle(out[i])] = static_cast<int>(branches.size());
        branches.push_back({v, next, rel(next)});
      }
    }
  }
  block_start.push_back(static_cast<int>(branches.size()));
  const int darts = static_cast<int>(branches.size());

  std::vector<int> sigma(static_cast<std::size_t>(darts));
  for (std::size_t b = 0; b + 1 < block_start.size(); ++b) {
    const int lo = block_start[b];
    const int hi = block_start[b + 1];
    for (int d = lo; d < hi; ++d) sigma[d] = d + 1 < hi ? d + 1 : lo;
  }

  std::vector<int> alpha(static_cast<std::size_t>(darts), -1);
  for (const auto& [out_dart, b] : by_out_dart) alpha[b] = by_out_dart.at(m.alpha(out_dart));
  const int step_limit = 4 * mesh.triangle_count() + 4;
  for (const auto& [link_dart, b] : by_link_dart) {
    int crossing = link_dart;  // directed mesh edge the level curve crosses
    for (int step = 0;; ++step) {
      if (step > step_limit) throw std::logic_error("extract_atom: level curve does not close");
      const int r = m.alpha(crossing);  // (b->a) in the next triangle
      const int r1 = next_in_triangle(r);
      const int r2 = next_in_triangle(r1);
      const int y = mesh.head(r1);
      if (rel(y) == 0) {
        alpha[b] = by_link_dart.at(r);
        break;
      }
      crossing = rel(y) == rel(mesh.head(r)) ? r2 : r1;
    }
  }

  OrientedMap map(darts, std::move(sigma), std::move(alpha));
  std::vector<int> sign(static_cast<std::size_t>(map.face_count()), 0);
  std::vector<int> star_edge(static_cast<std::size_t>(map.face_count()), -1);
  for (int d = 0; d < darts; ++d) {
    const int f = map.face_of(map.sigma(d));
    const Branch& br = branches[d];
    if (sign[f] != 0 && sign[f] != br.sector_sign) {
      throw std::logic_error("extract_atom: face with corners of both signs");
    }
    sign[f] = br.sector_sign;
    const int edge = br.sector_sign > 0 ? reeb.edge_above(br.vertex, br.sector_first, c)
                                        : reeb.edge_below(br.vertex, br.sector_first, c);
    if (star_edge[f] >= 0 && star_edge[f] != edge) {
      throw std::logic_error("extract_atom: face meets two star edges");
    }
    star_edge[f] = edge;
  }
  std::vector<Sign> face_sign;
  for (int s : sign) face_sign.push_back(s > 0 ? Sign::kPlus : Sign::kMinus);
  return ExtractedAtom{Atom(std::move(map), std::move(face_sign)), rn.vertices,
                       std::move(star_edge)};
}

}  // namespace reebsym
