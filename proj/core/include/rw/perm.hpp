#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace rw {

/// A permutation of {0, …, degree−1}, stored as its image array.
///
/// Composition convention (fixed project-wide): compose(p, q) applies q
/// first, then p — i.e. compose(p, q)(x) = p(q(x)). Products written left
/// to right as words ("p q") follow the same convention: the rightmost
/// factor acts first.
class Permutation {
public:
  /// Identity of degree 0; useful only as a placeholder.
  Permutation() = default;

  /// Validates that `images` is a bijection on {0, …, images.size()−1}.
  /// Throws ParameterError otherwise.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int degree);

  int degree() const noexcept { return static_cast<int>(images_.size()); }
  int operator()(int point) const { return images_[static_cast<size_t>(point)]; }
  const std::vector<int>& images() const noexcept { return images_; }

  bool is_identity() const noexcept;

  friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
  std::vector<int> images_;
};

/// compose(p, q)(x) = p(q(x)) — q acts first. Throws DegreeMismatchError.
Permutation compose(const Permutation& p, const Permutation& q);

/// Inverse permutation: compose(p, inverse(p)) == identity.
Permutation inverse(const Permutation& p);

/// p^k for any integer k (negative powers use the inverse).
Permutation power(const Permutation& p, long long k);

/// Least k ≥ 1 with p^k = identity (lcm of cycle lengths).
std::uint64_t element_order(const Permutation& p);

/// True iff p moves every point.
bool is_derangement(const Permutation& p);

/// One-line image list, e.g. "[1,2,0]".
std::string to_image_string(const Permutation& p);

/// Cycle notation, e.g. "(0 1 2)(3 4)"; identity renders as "()".
std::string to_cycle_string(const Permutation& p);

/// Parses either an image list "[1,2,0]" or cycle notation "(0 1 2)(3 4)".
/// Points absent from cycle notation are fixed. Throws ParameterError on
/// malformed input or out-of-range points.
Permutation parse_permutation(const std::string& text, int degree);

} // namespace rw
