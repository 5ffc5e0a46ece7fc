#include <doctest.h>

#include <random>

#include "chieftain/grp_io.hpp"
#include "chieftain/perm.hpp"

using namespace chieftain;

TEST_CASE("cycle parsing and formatting round-trip") {
  Perm p = parse_cycles("(1 2 3)(4 5)", 6);
  CHECK(p[0] == 1);
  CHECK(p[1] == 2);
  CHECK(p[2] == 0);
  CHECK(p[3] == 4);
  CHECK(p[4] == 3);
  CHECK(p[5] == 5);
  CHECK(format_cycles(p) == "(1 2 3)(4 5)");

  CHECK(parse_cycles("()", 4) == Perm::identity(4));
  CHECK(format_cycles(Perm::identity(4)) == "()");

  CHECK_THROWS_AS(parse_cycles("(1 7)", 5), ParseError);
  CHECK_THROWS_AS(parse_cycles("(1 1)", 5), ParseError);
  CHECK_THROWS_AS(parse_cycles("", 5), ParseError);
}

TEST_CASE("composition is left-to-right") {
  Perm a = parse_cycles("(1 2)", 3);
  Perm b = parse_cycles("(2 3)", 3);
  // apply a first: 1 -> 2 -> 3
  CHECK((a * b)[0] == 2);
  CHECK(format_cycles(a * b) == "(1 3 2)");
}

TEST_CASE("order is the lcm of cycle lengths") {
  CHECK(parse_cycles("(1 2 3)(4 5)", 5).order() == 6);
  CHECK(Perm::identity(3).order() == 1);
  CHECK(parse_cycles("(1 2 3 4)", 4).order() == 4);
}

TEST_CASE("inverse and conjugation satisfy the group axioms") {
  std::mt19937_64 rng(12345);
  const std::uint32_t n = 12;
  auto random_perm = [&rng, n] {
    std::vector<std::uint32_t> img(n);
    std::iota(img.begin(), img.end(), 0u);
    std::shuffle(img.begin(), img.end(), rng);
    return Perm::from_images(std::move(img));
  };
  for (int trial = 0; trial < 50; ++trial) {
    Perm p = random_perm(), q = random_perm(), r = random_perm();
    CHECK((p * p.inverse()).is_identity());
    CHECK((p.inverse() * p).is_identity());
    CHECK((p * q) * r == p * (q * r));
    CHECK(p.conjugated_by(q) == q.inverse() * p * q);
    CHECK(p.power(6) == p * p * p * p * p * p);
  }
}

TEST_CASE("parse_cycles_list splits on top-level commas") {
  auto gens = parse_cycles_list("(1 2 3),(4 5)", 5);
  REQUIRE(gens.size() == 2);
  CHECK(gens[0] == parse_cycles("(1 2 3)", 5));
  CHECK(gens[1] == parse_cycles("(4 5)", 5));
}
