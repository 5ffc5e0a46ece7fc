#include "chieftain/builtins.hpp"

#include <numeric>
#include <sstream>

#include "chieftain/numeric.hpp"
#include "chieftain/quotient.hpp"

namespace chieftain {

namespace {

Perm cycle_perm(std::uint32_t degree, const std::vector<std::uint32_t>& cycle) {
  std::vector<std::uint32_t> img(degree);
  std::iota(img.begin(), img.end(), 0u);
  for (std::size_t i = 0; i < cycle.size(); ++i)
    img[cycle[i]] = cycle[(i + 1) % cycle.size()];
  return Perm::from_images(std::move(img));
}

GroupPtr cyclic(std::uint64_t n, Config cfg) {
  if (n == 0) throw ParseError("cyclic order must be positive");
  if (n == 1) return Group::generate(1, {}, cfg);
  std::vector<std::uint32_t> cyc(n);
  std::iota(cyc.begin(), cyc.end(), 0u);
  return Group::generate(static_cast<std::uint32_t>(n), {cycle_perm(static_cast<std::uint32_t>(n), cyc)}, cfg);
}

GroupPtr dihedral(std::uint64_t order, Config cfg) {
  if (order < 6 || order % 2) throw ParseError("dihedral order must be even and >= 6");
  const auto n = static_cast<std::uint32_t>(order / 2);
  std::vector<std::uint32_t> cyc(n);
  std::iota(cyc.begin(), cyc.end(), 0u);
  std::vector<std::uint32_t> refl(n);
  for (std::uint32_t i = 0; i < n; ++i) refl[i] = (n - i) % n;
  return Group::generate(n, {cycle_perm(n, cyc), Perm::from_images(std::move(refl))}, cfg);
}

GroupPtr symmetric(std::uint64_t n, Config cfg) {
  if (n == 0) throw ParseError("symmetric degree must be positive");
  if (n == 1) return Group::generate(1, {}, cfg);
  const auto deg = static_cast<std::uint32_t>(n);
  std::vector<std::uint32_t> cyc(deg);
  std::iota(cyc.begin(), cyc.end(), 0u);
  return Group::generate(deg, {cycle_perm(deg, {0, 1}), cycle_perm(deg, cyc)}, cfg);
}

GroupPtr alternating(std::uint64_t n, Config cfg) {
  if (n < 3) throw ParseError("alternating degree must be >= 3");
  const auto deg = static_cast<std::uint32_t>(n);
  if (n == 3) return Group::generate(deg, {cycle_perm(deg, {0, 1, 2})}, cfg);
  std::vector<std::uint32_t> big;
  if (n % 2) {  // odd: (1 2 ... n) is even
    big.resize(deg);
    std::iota(big.begin(), big.end(), 0u);
  } else {  // even: (2 3 ... n)
    big.resize(deg - 1);
    std::iota(big.begin(), big.end(), 1u);
  }
  return Group::generate(deg, {cycle_perm(deg, {0, 1, 2}), cycle_perm(deg, big)}, cfg);
}

// Generalized quaternion of order 4m via its right-regular representation:
// x of order 2m, y with y^2 = x^m and x^y = x^-1. Elements are x^a y^b
// indexed as b*2m + a.
GroupPtr quaternion(std::uint64_t order, Config cfg) {
  if (order < 8 || order % 4) throw ParseError("quaternion order must be a multiple of 4, >= 8");
  const auto m = static_cast<std::uint32_t>(order / 4);
  const std::uint32_t two_m = 2 * m;
  const auto deg = static_cast<std::uint32_t>(order);
  auto idx = [two_m](std::uint32_t a, std::uint32_t b) { return b * two_m + a; };

  std::vector<std::uint32_t> xi(deg), yi(deg);
  for (std::uint32_t a = 0; a < two_m; ++a) {
    // right multiplication by x
    xi[idx(a, 0)] = idx((a + 1) % two_m, 0);
    xi[idx(a, 1)] = idx((a + two_m - 1) % two_m, 1);
    // right multiplication by y
    yi[idx(a, 0)] = idx(a, 1);
    yi[idx(a, 1)] = idx((a + m) % two_m, 0);
  }
  return Group::generate(deg, {Perm::from_images(std::move(xi)), Perm::from_images(std::move(yi))}, cfg);
}

GroupPtr elementary(std::uint64_t p, std::uint64_t k, Config cfg) {
  if (!is_prime(p)) throw ParseError("elementary abelian group needs a prime");
  if (k == 0) throw ParseError("elementary abelian rank must be positive");
  GroupPtr g = cyclic(p, cfg);
  for (std::uint64_t i = 1; i < k; ++i) g = direct_product(g, cyclic(p, cfg));
  return g;
}

GroupPtr example12(Config cfg) {
  return Group::generate(50, example12_generators(), cfg);
}

GroupPtr atom(const std::string& word, Config cfg) {
  std::istringstream in(word);
  std::string kind;
  in >> kind;
  auto arg = [&in, &word]() {
    std::uint64_t v = 0;
    if (!(in >> v)) throw ParseError("builtin needs a numeric argument: " + word);
    return v;
  };
  if (kind == "trivial") return cyclic(1, cfg);
  if (kind == "cyclic") return cyclic(arg(), cfg);
  if (kind == "dihedral") return dihedral(arg(), cfg);
  if (kind == "symmetric") return symmetric(arg(), cfg);
  if (kind == "alternating") return alternating(arg(), cfg);
  if (kind == "quaternion") return quaternion(arg(), cfg);
  if (kind == "elementary") {
    std::uint64_t p = arg();
    return elementary(p, arg(), cfg);
  }
  if (kind == "example12") return example12(cfg);
  throw ParseError("unknown builtin group: " + word);
}

}  // namespace

std::vector<Perm> example12_generators() {
  const std::uint32_t deg = 50;
  auto pt = [](std::uint32_t block, std::uint32_t i, std::uint32_t j) {
    return block * 25 + 5 * i + j;
  };
  auto translation = [&](std::uint32_t block, std::uint32_t di, std::uint32_t dj) {
    std::vector<std::uint32_t> img(deg);
    std::iota(img.begin(), img.end(), 0u);
    for (std::uint32_t i = 0; i < 5; ++i)
      for (std::uint32_t j = 0; j < 5; ++j)
        img[pt(block, i, j)] = pt(block, (i + di) % 5, (j + dj) % 5);
    return Perm::from_images(std::move(img));
  };
  // order-3 linear map (i,j) -> (-j, i-j) on both blocks
  std::vector<std::uint32_t> alpha(deg);
  for (std::uint32_t block = 0; block < 2; ++block)
    for (std::uint32_t i = 0; i < 5; ++i)
      for (std::uint32_t j = 0; j < 5; ++j)
        alpha[pt(block, i, j)] = pt(block, (5 - j) % 5, (i + 5 - j) % 5);

  return {translation(0, 1, 0), translation(0, 0, 1), translation(1, 1, 0),
          translation(1, 0, 1), Perm::from_images(std::move(alpha))};
}

GroupPtr builtin_group(const std::string& spec, Config cfg) {
  // split on " x " (direct product)
  std::vector<std::string> parts;
  std::size_t pos = 0;
  while (true) {
    std::size_t hit = spec.find(" x ", pos);
    if (hit == std::string::npos) {
      parts.push_back(spec.substr(pos));
      break;
    }
    parts.push_back(spec.substr(pos, hit - pos));
    pos = hit + 3;
  }
  GroupPtr g = atom(parts[0], cfg);
  for (std::size_t i = 1; i < parts.size(); ++i) g = direct_product(g, atom(parts[i], cfg));
  return g;
}

}  // namespace chieftain
