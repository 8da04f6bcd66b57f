#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "reebsym/automorphism.hpp"
#include "reebsym/corpus.hpp"
#include "reebsym/error.hpp"
#include "reebsym/reeb_graph.hpp"
#include "reebsym/verify.hpp"

namespace reebsym::cli {

namespace {

using Json = nlohmann::ordered_json;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("IoError cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("IoError cannot write " + path);
  out << text;
}

bool looks_like_mesh(const std::string& text) {
  try {
    const auto doc = nlohmann::json::parse(text);
    return doc.is_object() && doc.contains("values");
  } catch (const nlohmann::json::parse_error&) {
    return false;
  }
}

std::string join(const std::vector<int>& xs, const char* sep = " ") {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(xs[i]);
  }
  return out;
}

// Orbits of a permutation group given by its elements, as sorted point lists.
std::vector<std::vector<int>> orbits(int degree, const std::vector<Permutation>& elements,
                                     const std::vector<int>& point_name) {
  std::vector<int> seen(static_cast<std::size_t>(degree), 0);
  std::vector<std::vector<int>> out;
  for (int x = 0; x < degree; ++x) {
    if (seen[x]) continue;
    std::vector<int> orbit;
    for (const auto& g : elements) {
      if (!seen[g(x)]) {
        seen[g(x)] = 1;
        orbit.push_back(point_name[g(x)]);
      }
    }
    if (elements.empty()) {
      seen[x] = 1;
      orbit.push_back(point_name[x]);
    }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

int cmd_validate(const std::string& path, std::ostream& out) {
  const Atom atom = parse_atom(read_file(path));
  const OrientedMap& m = atom.map();
  std::vector<int> orders;
  for (int v = 0; v < m.vertex_count(); ++v) orders.push_back(atom.saddle_order(v));
  out << "V=" << m.vertex_count() << " E=" << m.edge_count() << " F=" << m.face_count()
      << " chi=" << m.euler_characteristic() << "\n"
      << "saddle orders: " << join(orders) << "\n";
  return 0;
}

int cmd_analyze(const std::string& path, bool json, const std::string& generators,
                bool reversing, std::ostream& out) {
  const Atom atom = parse_atom(read_file(path));
  const OrientedMap& m = atom.map();
  const PermGroup group =
      generators.empty()
          ? automorphism_group(atom)
          : subgroup_closure(atom, parse_generators(read_file(generators), m.dart_count()));
  const PermGroup faces = face_action(atom, group);
  const GroupClass cls = classify(group);

  std::vector<int> face_ids;
  for (int f = 0; f < m.face_count(); ++f) face_ids.push_back(m.face_id(f));
  std::vector<int> vertex_ids(static_cast<std::size_t>(m.vertex_count()));
  for (int v = 0; v < m.vertex_count(); ++v) vertex_ids[v] = v;
  std::vector<Permutation> vertex_perms;
  for (const auto& g : group.elements()) {
    std::vector<int> img(static_cast<std::size_t>(m.vertex_count()));
    for (int v = 0; v < m.vertex_count(); ++v) img[v] = m.vertex_of(g(m.vertices()[v].front()));
    vertex_perms.emplace_back(std::move(img));
  }
  const auto face_orbits = orbits(m.face_count(), faces.elements(), face_ids);
  const auto vertex_orbits = orbits(m.vertex_count(), vertex_perms, vertex_ids);
  const std::size_t reversing_count =
      reversing ? orientation_reversing_automorphisms(atom).size() : 0;

  if (json) {
    Json doc;
    doc["input"] = path;
    doc["group_order"] = group.order();
    doc["class"] = cls.label();
    Json gens = Json::array();
    for (const auto& g : group.generators()) {
      gens.push_back(std::vector<int>(g.images().begin(), g.images().end()));
    }
    doc["generators"] = std::move(gens);
    doc["face_orbits"] = face_orbits;
    doc["vertex_orbits"] = vertex_orbits;
    if (reversing) doc["orientation_reversing"] = reversing_count;
    out << doc.dump(2) << "\n";
    return 0;
  }
  out << "order " << group.order() << ", class " << cls.label() << "\n";
  for (const auto& o : face_orbits) out << "face orbit: " << join(o) << "\n";
  for (const auto& o : vertex_orbits) out << "vertex orbit: " << join(o) << "\n";
  if (reversing) out << "orientation-reversing automorphisms: " << reversing_count << "\n";
  return 0;
}

int cmd_reeb(const std::string& path, const std::string& dot, bool json, std::ostream& out) {
  const ScalarMesh mesh = parse_mesh(read_file(path));
  const ReebGraph reeb = reeb_graph(mesh);
  if (!dot.empty()) write_file(dot, reeb.to_dot());
  int leaves = 0;
  for (int n = 0; n < reeb.node_count(); ++n) leaves += reeb.degree(n) == 1;
  if (json) {
    Json doc;
    doc["input"] = path;
    doc["tree"] = reeb.is_tree();
    doc["leaves"] = leaves;
    Json nodes = Json::array();
    for (int n = 0; n < reeb.node_count(); ++n) {
      const ReebNode& node = reeb.nodes()[n];
      nodes.push_back({{"value", format_rational(node.value)},
                       {"tag", tag_name(node.tag)},
                       {"degree", reeb.degree(n)},
                       {"vertices", node.vertices}});
    }
    doc["nodes"] = std::move(nodes);
    Json edges = Json::array();
    for (const auto& e : reeb.edges()) edges.push_back({e.lower, e.upper});
    doc["edges"] = std::move(edges);
    out << doc.dump(2) << "\n";
    return 0;
  }
  out << "nodes " << reeb.node_count() << ", edges " << reeb.edge_count() << ", leaves " << leaves
      << (reeb.is_tree() ? ", tree" : ", not a tree") << "\n";
  for (int n = 0; n < reeb.node_count(); ++n) {
    const ReebNode& node = reeb.nodes()[n];
    out << "n" << n << " v=" << format_rational(node.value) << " " << tag_name(node.tag)
        << " degree " << reeb.degree(n) << "\n";
  }
  for (const auto& e : reeb.edges()) out << "n" << e.lower << " -- n" << e.upper << "\n";
  return 0;
}

int cmd_verify(const std::string& path, bool json, const std::string& generators,
               std::ostream& out) {
  const std::string text = read_file(path);
  VerificationReport report;
  if (looks_like_mesh(text)) {
    const ScalarMesh mesh = parse_mesh(text);
    std::optional<std::vector<Permutation>> gens;
    if (!generators.empty()) gens = parse_generators(read_file(generators), mesh.vertex_count());
    report = verify_mesh(mesh, gens, path);
  } else {
    const Atom atom = parse_atom(text);
    std::optional<std::vector<Permutation>> gens;
    if (!generators.empty()) gens = parse_generators(read_file(generators), atom.map().dart_count());
    report = verify_atom(atom, gens, path);
  }
  out << (json ? report.to_json().dump(2) + "\n" : report.to_text());
  return report.passed() ? 0 : 2;
}

int cmd_corpus_list(std::ostream& out) {
  for (const auto& e : corpus_entries()) out << e.name << "\t" << e.file_name << "\n";
  return 0;
}

int cmd_corpus_emit(const std::string& name, const std::string& output, std::ostream& out) {
  const std::string text = corpus_text(name);
  if (output.empty()) {
    out << text;
  } else {
    write_file(output, text);
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Signed atoms, Reeb trees and their symmetry groups", "reebsym"};
  app.require_subcommand(1);

  std::string path;
  std::string generators;
  std::string dot;
  std::string name;
  std::string output;
  bool json = false;
  bool reversing = false;

  auto* validate = app.add_subcommand("validate", "Check an atom file and print its summary");
  validate->add_option("atom", path, "Atom JSON file")->required();

  auto* analyze = app.add_subcommand("analyze", "Symmetry group of an atom");
  analyze->add_option("atom", path, "Atom JSON file")->required();
  analyze->add_flag("--json", json, "JSON output");
  analyze->add_option("--generators", generators, "Subgroup generators (dart permutations)");
  analyze->add_flag("--reversing", reversing, "Also count orientation-reversing automorphisms");

  auto* reeb = app.add_subcommand("reeb", "Kronrod-Reeb graph of a mesh");
  reeb->add_option("mesh", path, "Mesh JSON file")->required();
  reeb->add_option("--dot", dot, "Write DOT to this path");
  reeb->add_flag("--json", json, "JSON output");

  auto* verify = app.add_subcommand("verify", "Run the theorem checks on an atom or mesh");
  verify->add_option("input", path, "Atom or mesh JSON file")->required();
  verify->add_flag("--json", json, "JSON output");
  verify->add_option("--generators", generators, "Subgroup generators");

  auto* corpus = app.add_subcommand("corpus", "Bundled examples");
  corpus->require_subcommand(1);
  auto* list = corpus->add_subcommand("list", "List bundled names");
  auto* emit = corpus->add_subcommand("emit", "Print or write a bundled file");
  emit->add_option("name", name, "Corpus name")->required();
  emit->add_option("-o,--output", output, "Output path");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "UsageError " << e.what() << "\n";
    return 1;
  }

  try {
    if (validate->parsed()) return cmd_validate(path, out);
    if (analyze->parsed()) return cmd_analyze(path, json, generators, reversing, out);
    if (reeb->parsed()) return cmd_reeb(path, dot, json, out);
    if (verify->parsed()) return cmd_verify(path, json, generators, out);
    if (list->parsed()) return cmd_corpus_list(out);
    if (emit->parsed()) return cmd_corpus_emit(name, output, out);
  } catch (const Error& e) {
    err << e.what() << "\n";
    return 1;
  } catch (const IoError& e) {
    err << e.what() << "\n";
    return 1;
  }
  return 1;
}

}  // namespace reebsym::cli
