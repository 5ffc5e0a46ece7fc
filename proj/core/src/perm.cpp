#include "chieftain/perm.hpp"

#include <numeric>

namespace chieftain {

Perm Perm::identity(std::uint32_t degree) {
  std::vector<std::uint32_t> img(degree);
  std::iota(img.begin(), img.end(), 0u);
  return Perm(std::move(img));
}

Perm Perm::from_images(std::vector<std::uint32_t> images) {
  const auto n = static_cast<std::uint32_t>(images.size());
  std::vector<bool> seen(n, false);
  for (std::uint32_t x : images) {
    if (x >= n || seen[x])
      throw DomainError("image table is not a bijection on 0.." + std::to_string(n ? n - 1 : 0));
    seen[x] = true;
  }
  return Perm(std::move(images));
}

bool Perm::is_identity() const {
  for (std::uint32_t i = 0; i < degree(); ++i)
    if (img_[i] != i) return false;
  return true;
}

Perm Perm::operator*(const Perm& other) const {
  if (degree() != other.degree())
    throw DomainError("degree mismatch in permutation product");
  std::vector<std::uint32_t> img(degree());
  for (std::uint32_t i = 0; i < degree(); ++i) img[i] = other.img_[img_[i]];
  return Perm(std::move(img));
}

Perm Perm::inverse() const {
  std::vector<std::uint32_t> img(degree());
  for (std::uint32_t i = 0; i < degree(); ++i) img[img_[i]] = i;
  return Perm(std::move(img));
}

Perm Perm::conjugated_by(const Perm& g) const { return g.inverse() * (*this) * g; }

Perm Perm::power(std::int64_t e) const {
  if (e < 0) return inverse().power(-e);
  Perm acc = identity(degree());
  Perm base = *this;
  auto k = static_cast<std::uint64_t>(e);
  while (k) {
    if (k & 1) acc = acc * base;
    base = base * base;
    k >>= 1;
  }
  return acc;
}

std::uint64_t Perm::order() const {
  std::vector<bool> seen(degree(), false);
  std::uint64_t ord = 1;
  for (std::uint32_t i = 0; i < degree(); ++i) {
    if (seen[i]) continue;
    std::uint64_t len = 0;
    for (std::uint32_t j = i; !seen[j]; j = img_[j]) {
      seen[j] = true;
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return ord;
}

std::uint32_t Perm::smallest_moved() const {
  for (std::uint32_t i = 0; i < degree(); ++i)
    if (img_[i] != i) return i;
  return degree();
}

std::size_t PermHash::operator()(const Perm& p) const {
  std::uint64_t h = 14695981039346656037ull;
  for (std::uint32_t x : p.images()) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

}  // namespace chieftain
