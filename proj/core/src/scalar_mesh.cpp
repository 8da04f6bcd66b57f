#include "reebsym/scalar_mesh.hpp"

#include <charconv>
#include <sstream>
#include <unordered_map>

#include <nlohmann/json.hpp>

#include "reebsym/error.hpp"

namespace reebsym {

Rational parse_rational(std::string_view text) {
  auto parse_int = [&](std::string_view part) {
    std::int64_t v = 0;
    const auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (part.empty() || ec != std::errc() || ptr != part.data() + part.size()) {
      throw Error(ErrorCode::kSyntaxError, "bad rational '" + std::string(text) + "'");
    }
    return v;
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  const std::int64_t num = parse_int(text.substr(0, slash));
  const std::int64_t den = parse_int(text.substr(slash + 1));
  if (den == 0) throw Error(ErrorCode::kSyntaxError, "zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

std::string format_rational(const Rational& value) {
  if (value.denominator() == 1) return std::to_string(value.numerator());
  return std::to_string(value.numerator()) + "/" + std::to_string(value.denominator());
}

namespace {

[[noreturn]] void not_closed(const std::string& what) {
  throw Error(ErrorCode::kNotClosedSurface, what);
}

std::string edge_name(int u, int w) { return std::to_string(u) + "->" + std::to_string(w); }

OrientedMap build_surface_map(int vertex_count, const std::vector<Triangle>& triangles) {
  if (vertex_count == 0 || triangles.empty()) not_closed("empty mesh");
  const auto key = [vertex_count](int u, int w) {
    return static_cast<std::int64_t>(u) * vertex_count + w;
  };
  std::unordered_map<std::int64_t, int> dart_of;
  std::vector<char> used(static_cast<std::size_t>(vertex_count), 0);
  for (std::size_t t = 0; t < triangles.size(); ++t) {
    const Triangle& tri = triangles[t];
    for (int i = 0; i < 3; ++i) {
      if (tri[i] < 0 || tri[i] >= vertex_count) {
        throw Error(ErrorCode::kSyntaxError,
                    "triangle " + std::to_string(t) + " references vertex " + std::to_string(tri[i]));
      }
      used[tri[i]] = 1;
    }
    if (tri[0] == tri[1] || tri[1] == tri[2] || tri[0] == tri[2]) {
      not_closed("degenerate triangle " + std::to_string(t));
    }
    for (int i = 0; i < 3; ++i) {
      const int u = tri[i];
      const int w = tri[(i + 1) % 3];
      if (!dart_of.emplace(key(u, w), static_cast<int>(3 * t + i)).second) {
        not_closed("edge " + edge_name(u, w) + " used twice in the same direction");
      }
    }
  }
  for (int v = 0; v < vertex_count; ++v) {
    if (!used[v]) not_closed("vertex " + std::to_string(v) + " is in no triangle");
  }
  const int darts = static_cast<int>(3 * triangles.size());
  std::vector<int> alpha(static_cast<std::size_t>(darts));
  for (int d = 0; d < darts; ++d) {
    const Triangle& tri = triangles[d / 3];
    const int u = tri[d % 3];
    const int w = tri[(d % 3 + 1) % 3];
    const auto it = dart_of.find(key(w, u));
    if (it == dart_of.end()) not_closed("edge " + edge_name(u, w) + " has no opposite triangle");
    alpha[d] = it->second;
  }
  std::vector<int> sigma(static_cast<std::size_t>(darts));
  for (int d = 0; d < darts; ++d) {
    // The next dart counterclockwise around the tail is the reverse of the
    // triangle edge that ends at the tail.
    const int t = d / 3;
    sigma[d] = alpha[3 * t + (d % 3 + 2) % 3];
  }
  try {
    OrientedMap map(darts, std::move(sigma), std::move(alpha));
    if (map.vertex_count() != vertex_count) {
      not_closed("a vertex link is not a single cycle");
    }
    return map;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kNotClosedSurface) throw;
    not_closed(std::string("surface map invalid: ") + e.what());
  }
}

}  // namespace

ScalarMesh::ScalarMesh(std::vector<Rational> values, std::vector<Triangle> triangles)
    : values_(std::move(values)),
      triangles_(std::move(triangles)),
      map_(build_surface_map(static_cast<int>(values_.size()), triangles_)) {
  vertex_orbit_.assign(values_.size(), -1);
  for (int orbit = 0; orbit < map_.vertex_count(); ++orbit) {
    vertex_orbit_[tail(map_.vertices()[orbit].front())] = orbit;
  }
}

int ScalarMesh::dart_between(int u, int w) const {
  for (int d : outgoing(u)) {
    if (head(d) == w) return d;
  }
  return -1;
}

std::vector<int> ScalarMesh::link(int v) const {
  std::vector<int> out;
  for (int d : outgoing(v)) out.push_back(head(d));
  return out;
}

std::string serialize_mesh(const ScalarMesh& mesh) {
  std::ostringstream out;
  out << "{\n  \"values\": [";
  for (int v = 0; v < mesh.vertex_count(); ++v) {
    if (v) out << ", ";
    const Rational& x = mesh.value(v);
    if (x.denominator() == 1) {
      out << x.numerator();
    } else {
      out << '"' << format_rational(x) << '"';
    }
  }
  out << "],\n  \"triangles\": [";
  for (int t = 0; t < mesh.triangle_count(); ++t) {
    const Triangle& tri = mesh.triangles()[t];
    if (t) out << ", ";
    out << '[' << tri[0] << ", " << tri[1] << ", " << tri[2] << ']';
  }
  out << "]\n}\n";
  return out.str();
}

ScalarMesh parse_mesh(std::string_view text) {
  const auto syntax = [](const std::string& what) { throw Error(ErrorCode::kSyntaxError, what); };
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    syntax(e.what());
  }
  if (!doc.is_object()) syntax("mesh file must be a JSON object");
  for (const auto& item : doc.items()) {
    if (item.key() != "values" && item.key() != "triangles") {
      syntax("unexpected field '" + item.key() + "'");
    }
  }
  const auto values_it = doc.find("values");
  const auto tris_it = doc.find("triangles");
  if (values_it == doc.end() || !values_it->is_array()) syntax("field 'values' must be an array");
  if (tris_it == doc.end() || !tris_it->is_array()) syntax("field 'triangles' must be an array");

  std::vector<Rational> values;
  for (const auto& v : *values_it) {
    if (v.is_number_integer()) {
      values.emplace_back(v.get<std::int64_t>());
    } else if (v.is_string()) {
      values.push_back(parse_rational(v.get<std::string>()));
    } else {
      syntax("values must be integers or \"p/q\" strings");
    }
  }
  std::vector<Triangle> triangles;
  for (const auto& t : *tris_it) {
    if (!t.is_array() || t.size() != 3) syntax("each triangle must be an array of 3 indices");
    Triangle tri{};
    for (int i = 0; i < 3; ++i) {
      if (!t[i].is_number_integer()) syntax("triangle indices must be integers");
      tri[i] = t[i].get<int>();
    }
    triangles.push_back(tri);
  }
  return ScalarMesh(std::move(values), std::move(triangles));
}

}  // namespace reebsym
