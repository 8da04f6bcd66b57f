#include "reebsym/perm_group.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include <nlohmann/json.hpp>

#include "reebsym/error.hpp"

namespace reebsym {

PermGroup::PermGroup(int degree) : degree_(degree) {
  elements_.push_back(Permutation::identity(degree));
}

bool PermGroup::contains(const Permutation& p) const {
  return std::binary_search(elements_.begin(), elements_.end(), p);
}

PermGroup closure(int degree, std::vector<Permutation> generators, std::size_t cap) {
  for (const auto& g : generators) {
    if (g.degree() != degree) {
      throw Error(ErrorCode::kDegreeMismatch, "generator of degree " + std::to_string(g.degree()) +
                                                  " in group of degree " + std::to_string(degree));
    }
  }
  std::set<Permutation> seen;
  std::deque<Permutation> queue;
  const Permutation id = Permutation::identity(degree);
  seen.insert(id);
  queue.push_back(id);
  while (!queue.empty()) {
    const Permutation current = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : generators) {
      Permutation next = g * current;
      if (seen.insert(next).second) {
        if (seen.size() > cap) {
          throw Error(ErrorCode::kGroupTooLarge, "more than " + std::to_string(cap) + " elements");
        }
        queue.push_back(std::move(next));
      }
    }
  }
  PermGroup group(degree);
  group.elements_.assign(seen.begin(), seen.end());
  group.generators_ = std::move(generators);
  return group;
}

PermGroup closure_with_reduced_generators(int degree, std::vector<Permutation> elements,
                                          std::size_t cap) {
  std::sort(elements.begin(), elements.end());
  std::vector<Permutation> kept;
  PermGroup current(degree);
  for (const auto& e : elements) {
    if (e.degree() != degree) {
      throw Error(ErrorCode::kDegreeMismatch, "element of degree " + std::to_string(e.degree()));
    }
    if (current.contains(e)) continue;
    kept.push_back(e);
    current = closure(degree, kept, cap);
  }
  return current;
}

std::map<std::int64_t, int> order_profile(const PermGroup& group) {
  std::map<std::int64_t, int> profile;
  for (const auto& e : group.elements()) ++profile[e.order()];
  return profile;
}

std::vector<Permutation> powers(const Permutation& p) {
  std::vector<Permutation> out{Permutation::identity(p.degree())};
  for (Permutation x = p; !x.is_identity(); x = p * x) out.push_back(x);
  return out;
}

std::string GroupClass::label() const {
  switch (kind) {
    case Kind::kCyclic: return "Z" + std::to_string(n);
    case Kind::kDihedral: return "D" + std::to_string(n);
    case Kind::kTetrahedral: return "A4";
    case Kind::kOctahedral: return "S4";
    case Kind::kIcosahedral: return "A5";
    case Kind::kOther: return "Other";
  }
  return "Other";
}

std::optional<DihedralWitness> dihedral_witness(const PermGroup& group) {
  const std::size_t order = group.order();
  if (order < 4 || order % 2 != 0) return std::nullopt;
  const auto n = static_cast<std::int64_t>(order / 2);
  for (const auto& r : group.elements()) {
    if (r.order() != n) continue;
    std::vector<Permutation> rotations = powers(r);
    std::sort(rotations.begin(), rotations.end());
    const Permutation* reflection = nullptr;
    bool ok = true;
    for (const auto& e : group.elements()) {
      if (std::binary_search(rotations.begin(), rotations.end(), e)) continue;
      if (e.order() != 2) {
        ok = false;
        break;
      }
      if (reflection == nullptr) reflection = &e;
    }
    if (ok && reflection != nullptr) return DihedralWitness{r, *reflection};
  }
  return std::nullopt;
}

GroupClass classify(const PermGroup& group) {
  using Kind = GroupClass::Kind;
  const auto order = static_cast<std::int64_t>(group.order());
  for (const auto& e : group.elements()) {
    if (e.order() == order) return {Kind::kCyclic, static_cast<int>(order)};
  }
  if (dihedral_witness(group)) return {Kind::kDihedral, static_cast<int>(order / 2)};
  const auto profile = order_profile(group);
  using Profile = std::map<std::int64_t, int>;
  if (order == 12 && profile == Profile{{1, 1}, {2, 3}, {3, 8}}) return {Kind::kTetrahedral, 0};
  if (order == 24 && profile == Profile{{1, 1}, {2, 9}, {3, 8}, {4, 6}}) {
    return {Kind::kOctahedral, 0};
  }
  if (order == 60 && profile == Profile{{1, 1}, {2, 15}, {3, 20}, {5, 24}}) {
    return {Kind::kIcosahedral, 0};
  }
  return {Kind::kOther, 0};
}

bool is_in_so3_list(const GroupClass& cls) {
  switch (cls.kind) {
    case GroupClass::Kind::kCyclic:
    case GroupClass::Kind::kDihedral: return cls.n >= 1;
    case GroupClass::Kind::kTetrahedral:
    case GroupClass::Kind::kOctahedral:
    case GroupClass::Kind::kIcosahedral: return true;
    case GroupClass::Kind::kOther: return false;
  }
  return false;
}

}  // namespace reebsym

namespace reebsym {

std::string serialize_generators(const std::vector<Permutation>& generators) {
  std::string out = "{\n  \"generators\": [";
  for (std::size_t i = 0; i < generators.size(); ++i) {
    out += i ? ",\n    [" : "\n    [";
    const auto images = generators[i].images();
    for (std::size_t j = 0; j < images.size(); ++j) {
      if (j) out += ", ";
      out += std::to_string(images[j]);
    }
    out += "]";
  }
  out += generators.empty() ? "]\n}\n" : "\n  ]\n}\n";
  return out;
}

std::vector<Permutation> parse_generators(std::string_view text, int degree) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::kSyntaxError, e.what());
  }
  if (!doc.is_object() || doc.size() != 1 || !doc.contains("generators") ||
      !doc["generators"].is_array()) {
    throw Error(ErrorCode::kSyntaxError, "generator file must be {\"generators\": [[...], ...]}");
  }
  std::vector<Permutation> out;
  for (const auto& entry : doc["generators"]) {
    if (!entry.is_array()) throw Error(ErrorCode::kSyntaxError, "generator must be an array");
    std::vector<int> images;
    for (const auto& x : entry) {
      if (!x.is_number_integer()) throw Error(ErrorCode::kSyntaxError, "generator entries must be integers");
      images.push_back(x.get<int>());
    }
    if (static_cast<int>(images.size()) != degree) {
      throw Error(ErrorCode::kDegreeMismatch, "generator " + std::to_string(out.size()) + " has " +
                                                  std::to_string(images.size()) + " entries, expected " +
                                                  std::to_string(degree));
    }
    out.emplace_back(std::move(images));
  }
  return out;
}

}  // namespace reebsym
