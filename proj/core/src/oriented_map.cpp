#include "reebsym/oriented_map.hpp"

#include <string>

#include "reebsym/error.hpp"

namespace reebsym {

std::vector<OrientedMap::Orbit> canonical_orbits(const Permutation& perm,
                                                  std::vector<int>* orbit_of) {
  const int n = perm.degree();
  std::vector<OrientedMap::Orbit> orbits;
  std::vector<int> owner(static_cast<std::size_t>(n), -1);
  // Scanning in increasing order makes every orbit start at its minimum and
  // leaves the orbit list sorted by minimum.
  for (int start = 0; start < n; ++start) {
    if (owner[start] >= 0) continue;
    const int idx = static_cast<int>(orbits.size());
    OrientedMap::Orbit orbit;
    for (int x = start; owner[x] < 0; x = perm(x)) {
      owner[x] = idx;
      orbit.push_back(x);
    }
    orbits.push_back(std::move(orbit));
  }
  if (orbit_of != nullptr) *orbit_of = std::move(owner);
  return orbits;
}

namespace {

Permutation checked_alpha(int dart_count, std::vector<int> alpha) {
  if (static_cast<int>(alpha.size()) != dart_count) {
    throw Error(ErrorCode::kNotAPermutation, "alpha has " + std::to_string(alpha.size()) +
                                                 " entries, expected " +
                                                 std::to_string(dart_count));
  }
  for (int d = 0; d < dart_count; ++d) {
    const int a = alpha[d];
    if (a < 0 || a >= dart_count) {
      throw Error(ErrorCode::kNotAPermutation,
                  "alpha maps dart " + std::to_string(d) + " out of range");
    }
    if (a == d) {
      throw Error(ErrorCode::kInvolutionViolation, "at dart " + std::to_string(d) + " (fixed)");
    }
    if (alpha[a] != d) {
      throw Error(ErrorCode::kInvolutionViolation, "at dart " + std::to_string(d));
    }
  }
  return Permutation(std::move(alpha));
}

}  // namespace

OrientedMap::OrientedMap(int dart_count, std::vector<int> sigma, std::vector<int> alpha) {
  if (dart_count <= 0) {
    throw Error(ErrorCode::kNotAPermutation, "dart count must be positive");
  }
  if (static_cast<int>(sigma.size()) != dart_count) {
    throw Error(ErrorCode::kNotAPermutation, "sigma has " + std::to_string(sigma.size()) +
                                                 " entries, expected " +
                                                 std::to_string(dart_count));
  }
  sigma_ = Permutation(std::move(sigma));
  alpha_ = checked_alpha(dart_count, std::move(alpha));
  sigma_inv_ = sigma_.inverse();

  // Connectivity of <sigma, alpha> by flood fill from dart 0.
  std::vector<char> seen(static_cast<std::size_t>(dart_count), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const int d = stack.back();
    stack.pop_back();
    for (int next : {sigma_(d), alpha_(d)}) {
      if (!seen[next]) {
        seen[next] = 1;
        ++reached;
        stack.push_back(next);
      }
    }
  }
  if (reached != dart_count) {
    throw Error(ErrorCode::kDisconnected, std::to_string(dart_count - reached) +
                                              " darts unreachable from dart 0");
  }

  vertices_ = canonical_orbits(sigma_, &vertex_of_);
  edges_ = canonical_orbits(alpha_, &edge_of_);
  faces_ = canonical_orbits(sigma_ * alpha_, &face_of_);
}

int OrientedMap::face_index_of_id(int id) const {
  if (id < 0 || id >= dart_count()) return -1;
  const int f = face_of_[id];
  return faces_[f].front() == id ? f : -1;
}

int OrientedMap::genus() const {
  const int chi = euler_characteristic();
  if (chi > 2 || chi % 2 != 0) {
    throw Error(ErrorCode::kGenusNegative, "chi=" + std::to_string(chi));
  }
  return (2 - chi) / 2;
}

}  // namespace reebsym
