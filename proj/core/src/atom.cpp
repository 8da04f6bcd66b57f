#include "reebsym/atom.hpp"

#include <charconv>
#include <sstream>

#include <nlohmann/json.hpp>

#include "reebsym/error.hpp"

namespace reebsym {

namespace {

std::string at_vertex(int v) { return "at vertex " + std::to_string(v); }

}  // namespace

Atom::Atom(OrientedMap map, std::vector<Sign> face_sign)
    : map_(std::move(map)), face_sign_(std::move(face_sign)) {
  if (static_cast<int>(face_sign_.size()) != map_.face_count()) {
    throw Error(ErrorCode::kSyntaxError, "expected " + std::to_string(map_.face_count()) +
                                             " face signs, got " +
                                             std::to_string(face_sign_.size()));
  }
  if (map_.vertex_count() == 0) throw Error(ErrorCode::kNoVertices, "");
  if (map_.euler_characteristic() != 2) {
    throw Error(ErrorCode::kGenusNonZero,
                "chi=" + std::to_string(map_.euler_characteristic()));
  }
  for (int v = 0; v < map_.vertex_count(); ++v) {
    if (map_.degree(v) % 2 != 0) throw Error(ErrorCode::kOddDegreeVertex, at_vertex(v));
  }
  for (int v = 0; v < map_.vertex_count(); ++v) {
    if (map_.degree(v) == 2) throw Error(ErrorCode::kDegreeTwoVertex, at_vertex(v));
  }
  for (int v = 0; v < map_.vertex_count(); ++v) {
    for (int d : map_.vertices()[v]) {
      if (dart_sign(d) == dart_sign(map_.sigma(d))) {
        throw Error(ErrorCode::kSignAlternationViolation,
                    at_vertex(v) + " between darts " + std::to_string(d) + " and " +
                        std::to_string(map_.sigma(d)));
      }
    }
  }
}

Atom validate_atom(OrientedMap map, std::vector<Sign> face_sign) {
  return Atom(std::move(map), std::move(face_sign));
}

namespace {

void write_array(std::ostringstream& out, std::span<const int> values) {
  out << '[';
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out << ", ";
    out << values[i];
  }
  out << ']';
}

[[noreturn]] void syntax(const std::string& what) { throw Error(ErrorCode::kSyntaxError, what); }

std::vector<int> int_array(const nlohmann::json& doc, const char* key, int expected) {
  const auto it = doc.find(key);
  if (it == doc.end() || !it->is_array()) syntax(std::string("field '") + key + "' must be an array");
  if (static_cast<int>(it->size()) != expected) {
    syntax(std::string("field '") + key + "' has " + std::to_string(it->size()) +
           " entries, expected " + std::to_string(expected));
  }
  std::vector<int> out;
  out.reserve(it->size());
  for (const auto& v : *it) {
    if (!v.is_number_integer()) syntax(std::string("field '") + key + "' must hold integers");
    out.push_back(v.get<int>());
  }
  return out;
}

}  // namespace

std::string serialize_atom(const Atom& atom) {
  const OrientedMap& m = atom.map();
  std::ostringstream out;
  out << "{\n  \"darts\": " << m.dart_count() << ",\n  \"sigma\": ";
  write_array(out, m.sigma_perm().images());
  out << ",\n  \"alpha\": ";
  write_array(out, m.alpha_perm().images());
  out << ",\n  \"signs\": {";
  // Faces are already ordered by canonical id.
  for (int f = 0; f < m.face_count(); ++f) {
    if (f) out << ", ";
    out << '"' << m.face_id(f) << "\": \"" << sign_char(atom.face_sign(f)) << '"';
  }
  out << "}\n}\n";
  return out.str();
}

Atom parse_atom(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    syntax(e.what());
  }
  if (!doc.is_object()) syntax("atom file must be a JSON object");
  for (const auto& [key, _] : doc.items()) {
    if (key != "darts" && key != "sigma" && key != "alpha" && key != "signs") {
      syntax("unexpected field '" + key + "'");
    }
  }
  const auto darts_it = doc.find("darts");
  if (darts_it == doc.end() || !darts_it->is_number_integer()) syntax("field 'darts' must be an integer");
  const int darts = darts_it->get<int>();
  if (darts <= 0) syntax("field 'darts' must be positive");
  std::vector<int> sigma = int_array(doc, "sigma", darts);
  std::vector<int> alpha = int_array(doc, "alpha", darts);

  OrientedMap map(darts, std::move(sigma), std::move(alpha));

  const auto signs_it = doc.find("signs");
  if (signs_it == doc.end() || !signs_it->is_object()) syntax("field 'signs' must be an object");
  std::vector<int> assigned(static_cast<std::size_t>(map.face_count()), 0);
  std::vector<Sign> face_sign(static_cast<std::size_t>(map.face_count()), Sign::kPlus);
  for (const auto& [key, value] : signs_it->items()) {
    int id = -1;
    const auto [ptr, ec] = std::from_chars(key.data(), key.data() + key.size(), id);
    if (ec != std::errc() || ptr != key.data() + key.size()) syntax("sign key '" + key + "' is not an integer");
    const int face = map.face_index_of_id(id);
    if (face < 0) syntax("sign key '" + key + "' is not a canonical face id");
    if (!value.is_string()) syntax("sign for face " + key + " must be \"+\" or \"-\"");
    const auto s = value.get<std::string>();
    if (s == "+") {
      face_sign[face] = Sign::kPlus;
    } else if (s == "-") {
      face_sign[face] = Sign::kMinus;
    } else {
      syntax("sign for face " + key + " must be \"+\" or \"-\"");
    }
    assigned[face] = 1;
  }
  for (int f = 0; f < map.face_count(); ++f) {
    if (!assigned[f]) syntax("missing sign for face " + std::to_string(map.face_id(f)));
  }
  return Atom(std::move(map), std::move(face_sign));
}

}  // namespace reebsym
