#include "reebsym/permutation.hpp"

#include <numeric>

#include "reebsym/error.hpp"

namespace reebsym {

bool is_permutation(std::span<const int> images) {
  std::vector<char> seen(images.size(), 0);
  for (int x : images) {
    if (x < 0 || static_cast<std::size_t>(x) >= images.size() || seen[x]) return false;
    seen[x] = 1;
  }
  return true;
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  if (!is_permutation(images_)) {
    throw Error(ErrorCode::kNotAPermutation, "image array of size " +
                                                 std::to_string(images_.size()) +
                                                 " is not a bijection");
  }
}

Permutation Permutation::identity(int degree) {
  Permutation p;
  p.images_.resize(static_cast<std::size_t>(degree));
  std::iota(p.images_.begin(), p.images_.end(), 0);
  return p;
}

Permutation Permutation::inverse() const {
  Permutation p;
  p.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) p.images_[images_[i]] = static_cast<int>(i);
  return p;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != static_cast<int>(i)) return false;
  }
  return true;
}

std::int64_t Permutation::order() const {
  std::vector<char> seen(images_.size(), 0);
  std::int64_t result = 1;
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start]) continue;
    std::int64_t len = 0;
    for (std::size_t x = start; !seen[x]; x = static_cast<std::size_t>(images_[x])) {
      seen[x] = 1;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

std::string Permutation::cycle_string() const {
  std::string out;
  std::vector<char> seen(images_.size(), 0);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start] || images_[start] == static_cast<int>(start)) continue;
    out += '(';
    for (std::size_t x = start; !seen[x]; x = static_cast<std::size_t>(images_[x])) {
      seen[x] = 1;
      if (x != start) out += ' ';
      out += std::to_string(x);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Permutation operator*(const Permutation& g, const Permutation& h) {
  Permutation p;
  p.images_.resize(h.images_.size());
  for (std::size_t i = 0; i < h.images_.size(); ++i) p.images_[i] = g.images_[h.images_[i]];
  return p;
}

}  // namespace reebsym
