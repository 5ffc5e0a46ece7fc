#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "chieftain/config.hpp"

namespace chieftain {

/// A permutation of the points 0..n-1 stored as its image table.
/// Points are 0-based internally; all textual I/O is 1-based.
///
/// Products act left-to-right: (p * q) maps x to q[p[x]], i.e. apply p
/// first. Conjugation h^g is g^-1 * h * g under that convention.
class Perm {
public:
  Perm() = default;

  static Perm identity(std::uint32_t degree);

  /// Validates that `images` is a bijection on 0..n-1.
  static Perm from_images(std::vector<std::uint32_t> images);

  std::uint32_t degree() const { return static_cast<std::uint32_t>(img_.size()); }
  std::uint32_t operator[](std::uint32_t point) const { return img_[point]; }
  const std::vector<std::uint32_t>& images() const { return img_; }

  bool is_identity() const;

  /// this applied first, then other.
  Perm operator*(const Perm& other) const;
  Perm inverse() const;
  Perm conjugated_by(const Perm& g) const;  // g^-1 * this * g
  Perm power(std::int64_t e) const;

  /// Multiplicative order (lcm of cycle lengths).
  std::uint64_t order() const;

  /// Smallest moved point, or degree() if identity.
  std::uint32_t smallest_moved() const;

  bool operator==(const Perm&) const = default;
  /// Lexicographic order on image tables; the canonical element order
  /// used everywhere determinism matters.
  std::strong_ordering operator<=>(const Perm& other) const {
    return img_ <=> other.img_;
  }

private:
  explicit Perm(std::vector<std::uint32_t> img) : img_(std::move(img)) {}
  std::vector<std::uint32_t> img_;
};

struct PermHash {
  std::size_t operator()(const Perm& p) const;
};

}  // namespace chieftain
