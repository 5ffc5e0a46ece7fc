#include <doctest.h>

#include <unordered_set>

#include "chieftain/builtins.hpp"
#include "chieftain/grp_io.hpp"
#include "chieftain/stab_chain.hpp"

using namespace chieftain;

namespace {

// Independent order oracle: plain product closure, no chain involved.
std::uint64_t naive_closure_order(std::uint32_t degree, const std::vector<Perm>& gens) {
  std::unordered_set<Perm, PermHash> seen{Perm::identity(degree)};
  std::vector<Perm> pool{Perm::identity(degree)};
  for (std::size_t k = 0; k < pool.size(); ++k)
    for (const Perm& s : gens) {
      Perm q = pool[k] * s;
      if (seen.insert(q).second) pool.push_back(q);
    }
  return pool.size();
}

}  // namespace

TEST_CASE("stabilizer chain orders match known values") {
  auto s3 = std::vector<Perm>{parse_cycles("(1 2)", 3), parse_cycles("(1 2 3)", 3)};
  CHECK(StabilizerChain(3, s3).order() == 6);

  CHECK(StabilizerChain(4, {}).order() == 1);

  auto s6 = builtin_group("symmetric 6");
  CHECK(s6->order() == 720);
  auto a5 = builtin_group("alternating 5");
  CHECK(a5->order() == 60);
  auto q16 = builtin_group("quaternion 16");
  CHECK(q16->order() == 16);
  auto d12 = builtin_group("dihedral 12");
  CHECK(d12->order() == 12);
}

TEST_CASE("example12 group has order 1875 = 5^4 * 3") {
  auto g = builtin_group("example12");
  CHECK(g->degree() == 50);
  CHECK(g->order() == 1875);
}

TEST_CASE("chain order equals naive closure order across builtins") {
  for (const char* spec : {"trivial", "cyclic 6", "cyclic 15", "symmetric 4", "symmetric 5",
                           "alternating 4", "alternating 5", "dihedral 8", "dihedral 10",
                           "quaternion 8", "quaternion 16", "elementary 3 2", "elementary 5 2",
                           "cyclic 3 x symmetric 3", "example12"}) {
    auto g = builtin_group(spec);
    CHECK_MESSAGE(g->order() == naive_closure_order(g->degree(), g->generators()), spec);
  }
}

TEST_CASE("membership via sifting") {
  auto a4 = builtin_group("alternating 4");
  CHECK_FALSE(a4->contains(parse_cycles("(1 2)", 4)));
  CHECK(a4->contains(parse_cycles("(1 2 3)", 4)));
  CHECK(a4->contains(Perm::identity(4)));
  CHECK_THROWS_AS(a4->contains(Perm::identity(5)), DomainError);

  // order = product of transversal sizes
  std::uint64_t prod = 1;
  for (auto s : a4->chain().orbit_sizes()) prod *= s;
  CHECK(prod == 12);
}

TEST_CASE("generation rejects out-of-cap orders") {
  Config tiny;
  tiny.max_order = 100;
  CHECK_THROWS_AS(builtin_group("symmetric 5", tiny), CapExceeded);
}
