#include "reebsym/verify.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "reebsym/automorphism.hpp"
#include "reebsym/error.hpp"
#include "reebsym/reeb_graph.hpp"
#include "reebsym/tree_action.hpp"

namespace reebsym {

using Json = nlohmann::ordered_json;

std::string_view status_name(CheckStatus status) {
  switch (status) {
    case CheckStatus::kPass: return "pass";
    case CheckStatus::kFail: return "fail";
    case CheckStatus::kNotApplicable: return "not-applicable";
  }
  return "fail";
}

bool VerificationReport::passed() const {
  return std::none_of(checks.begin(), checks.end(),
                      [](const Check& c) { return c.status == CheckStatus::kFail; });
}

const Check& VerificationReport::check(std::string_view name) const {
  for (const auto& c : checks) {
    if (c.name == name) return c;
  }
  throw std::out_of_range("no check named " + std::string(name));
}

Json VerificationReport::to_json() const {
  Json out;
  out["input"] = input;
  out["group_order"] = group_order;
  out["class"] = group_class;
  out["checks"] = Json::array();
  for (const auto& c : checks) {
    Json entry;
    entry["name"] = c.name;
    entry["status"] = status_name(c.status);
    entry["witness"] = c.witness;
    out["checks"].push_back(std::move(entry));
  }
  return out;
}

std::string VerificationReport::to_text() const {
  std::ostringstream out;
  out << "input: " << input << "\n"
      << "group order: " << group_order << "\n"
      << "class: " << group_class << "\n";
  for (const auto& c : checks) {
    out << c.name << ": " << status_name(c.status);
    if (c.status == CheckStatus::kFail) out << " " << c.witness.dump();
    out << "\n";
  }
  return out.str();
}

namespace {

Json images(const Permutation& p) {
  const auto span = p.images();
  return Json(std::vector<int>(span.begin(), span.end()));
}

Check make_check(std::string name, bool ok, Json witness) {
  return {std::move(name), ok ? CheckStatus::kPass : CheckStatus::kFail, std::move(witness)};
}

Check so3_check(const PermGroup& group) {
  const GroupClass cls = classify(group);
  Json witness;
  witness["class"] = cls.label();
  witness["order"] = group.order();
  Json profile = Json::object();
  for (const auto& [order, count] : order_profile(group)) profile[std::to_string(order)] = count;
  witness["order_profile"] = std::move(profile);
  if (cls.kind == GroupClass::Kind::kDihedral) {
    const auto dw = dihedral_witness(group);
    witness["dihedral_presentation"] = {{"r", images(dw->r)}, {"s", images(dw->s)}};
  }
  return make_check("SO3_CLASS", is_in_so3_list(cls), std::move(witness));
}

Check kernel_check(const Atom& atom, const PermGroup& group) {
  Json witness;
  std::vector<const Permutation*> kernel;
  for (const auto& g : group.elements()) {
    if (face_permutation(atom.map(), g).is_identity()) kernel.push_back(&g);
  }
  witness["kernel_order"] = kernel.size();
  if (kernel.size() != 1) {
    const auto bad = std::find_if(kernel.begin(), kernel.end(),
                                  [](const Permutation* p) { return !p->is_identity(); });
    witness["element"] = images(**bad);
    return make_check("KERNEL_TRIVIAL", false, std::move(witness));
  }
  witness["face_group_order"] = face_action(atom, group).order();
  return make_check("KERNEL_TRIVIAL", true, std::move(witness));
}

std::vector<CellStabilizer> stabilizers(const Atom& atom, const PermGroup& group, Cell::Dim dim) {
  const OrientedMap& m = atom.map();
  const int count = dim == Cell::Dim::kVertex ? m.vertex_count()
                    : dim == Cell::Dim::kEdge ? m.edge_count()
                                              : m.face_count();
  std::vector<CellStabilizer> out;
  for (int i = 0; i < count; ++i) out.push_back(cell_stabilizer(atom, group, Cell{dim, i}));
  return out;
}

Json stabilizer_record(const OrientedMap& m, const CellStabilizer& s) {
  Json r;
  r["cell"] = cell_name(m, s.cell);
  r["order"] = s.group.order();
  r["bound"] = s.bound;
  r["cyclic"] = s.cyclic;
  return r;
}

// Witness: the offending records on failure, otherwise the non-trivial ones.
Check split_check(std::string name, const std::vector<std::pair<bool, Json>>& records) {
  Json bad = Json::array();
  Json shown = Json::array();
  for (const auto& [ok, record] : records) (ok ? shown : bad).push_back(record);
  const bool pass = bad.empty();
  return make_check(std::move(name), pass, pass ? std::move(shown) : std::move(bad));
}

Check divides_check(std::string name, const Atom& atom, const std::vector<CellStabilizer>& stabs) {
  std::vector<std::pair<bool, Json>> records;
  for (const auto& s : stabs) {
    const bool ok = s.cyclic && s.divides;
    if (!ok || s.group.order() > 1) records.emplace_back(ok, stabilizer_record(atom.map(), s));
  }
  return split_check(std::move(name), records);
}

Check edge_check(const Atom& atom, const std::vector<CellStabilizer>& stabs) {
  Json witness;
  witness["edges"] = stabs.size();
  for (const auto& s : stabs) {
    if (s.group.order() != 1) {
      witness["counterexample"] = stabilizer_record(atom.map(), s);
      return make_check("EDGE_STAB_TRIVIAL", false, std::move(witness));
    }
  }
  return make_check("EDGE_STAB_TRIVIAL", true, std::move(witness));
}

Check free_check(const Atom& atom, const std::vector<CellStabilizer>& vertex_stabs,
                 const std::vector<CellStabilizer>& face_stabs) {
  std::vector<std::pair<bool, Json>> records;
  for (const auto* stabs : {&vertex_stabs, &face_stabs}) {
    for (const auto& s : *stabs) {
      if (s.group.order() == 1 && s.free_action) continue;
      Json r;
      r["cell"] = cell_name(atom.map(), s.cell);
      r["order"] = s.group.order();
      r["orbits"] = s.orbit_count;
      r["acted"] = s.acted_count;
      records.emplace_back(s.free_action, std::move(r));
    }
  }
  return split_check("FREE_SECTOR_ACTION", records);
}

}  // namespace

Check lefschetz_check(const Atom& atom, const PermGroup& group) {
  const int chi = atom.map().euler_characteristic();
  Json witness;
  witness["euler_characteristic"] = chi;
  witness["lefschetz_number"] = chi;
  if (group.is_trivial()) {
    witness["elements_checked"] = 0;
    return {"TWO_INVARIANT_CELLS", CheckStatus::kNotApplicable, std::move(witness)};
  }
  int checked = 0;
  for (const auto& g : group.elements()) {
    if (g.is_identity()) continue;
    const auto cells = invariant_cells_unchecked(atom.map(), g);
    ++checked;
    if (static_cast<int>(cells.size()) != chi) {
      witness["element"] = images(g);
      Json names = Json::array();
      for (const auto& c : cells) names.push_back(cell_name(atom.map(), c));
      witness["invariant_cells"] = std::move(names);
      return make_check("TWO_INVARIANT_CELLS", false, std::move(witness));
    }
  }
  witness["elements_checked"] = checked;
  return make_check("TWO_INVARIANT_CELLS", true, std::move(witness));
}

VerificationReport verify_atom(const Atom& atom,
                               const std::optional<std::vector<Permutation>>& subgroup,
                               std::string input) {
  const PermGroup group = subgroup ? subgroup_closure(atom, *subgroup) : automorphism_group(atom);
  VerificationReport report{std::move(input), group.order(), classify(group).label(), {}};
  const auto vertex_stabs = stabilizers(atom, group, Cell::Dim::kVertex);
  const auto edge_stabs = stabilizers(atom, group, Cell::Dim::kEdge);
  const auto face_stabs = stabilizers(atom, group, Cell::Dim::kFace);
  report.checks.push_back(so3_check(group));
  report.checks.push_back(kernel_check(atom, group));
  report.checks.push_back(divides_check("VERTEX_STAB_DIVIDES_K", atom, vertex_stabs));
  report.checks.push_back(edge_check(atom, edge_stabs));
  report.checks.push_back(divides_check("FACE_STAB_DIVIDES_N", atom, face_stabs));
  report.checks.push_back(lefschetz_check(atom, group));
  report.checks.push_back(free_check(atom, vertex_stabs, face_stabs));
  return report;
}

VerificationReport verify_mesh(const ScalarMesh& mesh,
                               const std::optional<std::vector<Permutation>>& generators,
                               std::string input) {
  if (mesh.genus() != 0) {
    throw Error(ErrorCode::kGenusNotZero, "mesh has genus " + std::to_string(mesh.genus()));
  }
  const PermGroup group = generators ? mesh_subgroup(mesh, *generators) : mesh_symmetry_group(mesh);
  VerificationReport report{std::move(input), group.order(), classify(group).label(), {}};
  const ReebGraph reeb = reeb_graph(mesh);
  const TreeAction action = reeb_action(mesh, reeb, group);

  std::optional<FixedSubtree> fix;
  {
    Json witness;
    try {
      fix = fixed_subtree(reeb, action);
      witness["nodes"] = fix->nodes;
      witness["edges"] = fix->edges;
      witness["has_edge"] = fix->has_edge;
      witness["connected"] = fix->connected;
      report.checks.push_back(make_check("FIX_NONEMPTY_SUBTREE", fix->connected, std::move(witness)));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kEmptyFixedSet) throw;
      witness["nodes"] = Json::array();
      witness["edges"] = Json::array();
      report.checks.push_back(make_check("FIX_NONEMPTY_SUBTREE", false, std::move(witness)));
    }
  }

  // Local stabilizers at every fixed node.
  std::vector<std::pair<int, PermGroup>> local;
  if (fix) {
    for (int n : fix->nodes) local.emplace_back(n, local_stabilizer(reeb, action, n));
  }
  const auto local_record = [&reeb](int node, const PermGroup& g) {
    Json r;
    r["node"] = node;
    r["degree"] = reeb.degree(node);
    r["order"] = g.order();
    r["class"] = classify(g).label();
    return r;
  };

  if (!fix || !fix->has_edge) {
    report.checks.push_back({"FIX_EDGE_IMPLIES_CYCLIC", CheckStatus::kNotApplicable, Json::object()});
  } else {
    std::vector<std::pair<bool, Json>> records;
    for (const auto& [node, g] : local) {
      records.emplace_back(classify(g).kind == GroupClass::Kind::kCyclic, local_record(node, g));
    }
    report.checks.push_back(split_check("FIX_EDGE_IMPLIES_CYCLIC", records));
  }

  // Single fixed vertex with a cyclic local stabilizer of order k >= 2.
  int single_k = 0;
  std::optional<ExtractedAtom> atom_at_v;
  if (fix && !fix->has_edge && fix->nodes.size() == 1) {
    const PermGroup& g = local.front().second;
    const GroupClass cls = classify(g);
    if (cls.kind == GroupClass::Kind::kCyclic && g.order() >= 2) {
      single_k = static_cast<int>(g.order());
      atom_at_v = extract_atom(mesh, reeb, fix->nodes.front());
    }
  }
  if (single_k == 0) {
    report.checks.push_back({"SINGLE_VERTEX_CASE", CheckStatus::kNotApplicable, Json::object()});
  } else {
    const ExtractedAtom& ex = *atom_at_v;
    std::vector<int> fixed;  // atom vertices fixed by the whole group
    for (int i = 0; i < static_cast<int>(ex.mesh_vertex.size()); ++i) {
      const int v = ex.mesh_vertex[i];
      if (std::all_of(group.generators().begin(), group.generators().end(),
                      [v](const Permutation& p) { return p(v) == v; })) {
        fixed.push_back(i);
      }
    }
    const auto order_of = [&ex](int i) { return ex.atom.saddle_order(i); };
    Json witness;
    witness["node"] = fix->nodes.front();
    witness["k"] = single_k;
    bool found = false;
    for (std::size_t a = 0; a < fixed.size() && !found; ++a) {
      for (std::size_t b = a + 1; b < fixed.size() && !found; ++b) {
        const int k1 = order_of(fixed[a]);
        const int k2 = order_of(fixed[b]);
        if (std::gcd(k1, k2) % single_k == 0) {
          found = true;
          witness["z1"] = {{"mesh_vertex", ex.mesh_vertex[fixed[a]]}, {"k", k1}};
          witness["z2"] = {{"mesh_vertex", ex.mesh_vertex[fixed[b]]}, {"k", k2}};
          witness["gcd"] = std::gcd(k1, k2);
        }
      }
    }
    if (!found) {
      Json list = Json::array();
      for (int i : fixed) list.push_back({{"mesh_vertex", ex.mesh_vertex[i]}, {"k", order_of(i)}});
      witness["fixed_vertices"] = std::move(list);
    }
    report.checks.push_back(make_check("SINGLE_VERTEX_CASE", found, std::move(witness)));
  }

  // Morse case: every saddle vertex of the mesh has order 2.
  bool morse = true;
  for (int n = 0; n < reeb.node_count() && morse; ++n) {
    if (reeb.nodes()[n].tag != NodeTag::kSaddle) continue;
    const ExtractedAtom ex = extract_atom(mesh, reeb, n);
    for (int v = 0; v < ex.atom.map().vertex_count(); ++v) morse = morse && ex.atom.saddle_order(v) == 2;
  }
  if (!morse || single_k == 0) {
    Json witness;
    witness["morse"] = morse;
    report.checks.push_back({"MORSE_K2", CheckStatus::kNotApplicable, std::move(witness)});
  } else {
    Json witness;
    witness["k"] = single_k;
    report.checks.push_back(make_check("MORSE_K2", single_k == 2, std::move(witness)));
  }
  return report;
}

}  // namespace reebsym
