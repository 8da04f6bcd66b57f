#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace reebsym {

/// A bijection of {0..n-1} stored as its image array.
///
/// Composition follows function notation: (g * h)(x) == g(h(x)), i.e. h is
/// applied first.
class Permutation {
 public:
  Permutation() = default;

  /// Throws Error(kNotAPermutation) unless `images` is a bijection of
  /// {0..images.size()-1}.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int degree);

  int degree() const noexcept { return static_cast<int>(images_.size()); }
  int operator()(int x) const { return images_[static_cast<std::size_t>(x)]; }
  std::span<const int> images() const noexcept { return images_; }

  Permutation inverse() const;
  bool is_identity() const noexcept;

  /// Least common multiple of the cycle lengths.
  std::int64_t order() const;

  /// Cycles of length >= 2 in the form "(0 1 2)(3 4)"; "()" for the identity.
  std::string cycle_string() const;

  friend Permutation operator*(const Permutation& g, const Permutation& h);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

bool is_permutation(std::span<const int> images);

}  // namespace reebsym
