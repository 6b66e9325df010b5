#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace fpp {

/// Permutation of {1,...,d} stored as an image table.
/// Points are 1-based at the API boundary and 0-based internally.
/// Composition is the left action: (g * h)(x) = g(h(x)).
class Perm {
 public:
  static Perm identity(int degree);
  /// images[i] is the image of point i+1, values in {1,...,d}, each exactly once.
  static Perm from_images(const std::vector<int>& images_1based);

  int degree() const { return static_cast<int>(img_.size()); }

  /// Image of the 1-based point x.
  int apply(int x) const { return img_[static_cast<size_t>(x - 1)] + 1; }
  int apply0(int i) const { return img_[static_cast<size_t>(i)]; }

  Perm compose(const Perm& h) const;  // (*this)(h(x))
  Perm inverse() const;

  int fixed_points() const;
  bool is_identity() const;
  std::vector<int> images() const;  // 1-based

  /// Disjoint-cycle notation, fixed points omitted, "()" for the identity.
  std::string cycle_string() const;

  /// Nibble-packed key, usable when degree <= 16.
  std::uint64_t packed_key() const;

  friend auto operator<=>(const Perm& a, const Perm& b) = default;

 private:
  explicit Perm(std::vector<int> img0) : img_(std::move(img0)) {}
  std::vector<int> img_;  // 0-based image table
};

/// Parses cycle notation over {1,...,d}:
///   perm := "()" | cycle+ ; cycle := "(" int ("," int)+ ")"
/// Whitespace is ignored; cycles are read left to right and applied
/// right-to-left as functions. Throws ValidationError on malformed input,
/// points out of range, or d < 1.
Perm parse_perm(std::string_view text, int degree);

/// #{x : p(x) = x}.
int fixed_point_count(const Perm& p);

}  // namespace fpp
