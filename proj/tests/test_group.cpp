#include <doctest.h>

#include <random>
#include <set>

#include "chieftain/builtins.hpp"
#include "chieftain/grp_io.hpp"
#include "chieftain/numeric.hpp"
#include "chieftain/quotient.hpp"
#include "chieftain/subgroup_ops.hpp"

using namespace chieftain;

namespace {

Subgroup sub_of(const GroupPtr& g, const std::string& cycles) {
  return Subgroup::from_generators(g, parse_cycles_list(cycles, g->degree()));
}

// Brute-force product set, used as the oracle for the |HK| formula.
std::size_t brute_product_size(const Subgroup& h, const Subgroup& k) {
  std::set<std::uint32_t> out;
  for (auto a : h.ids())
    for (auto b : k.ids()) out.insert(h.parent()->mul(a, b));
  return out.size();
}

}  // namespace

TEST_CASE("subgroup closure and orders") {
  auto s4 = builtin_group("symmetric 4");
  Subgroup v4 = sub_of(s4, "(1 2)(3 4),(1 3)(2 4)");
  CHECK(v4.order() == 4);
  CHECK(v4.is_normal());

  Subgroup triv = Subgroup::from_generators(s4, {});
  CHECK(triv.order() == 1);

  auto ex = builtin_group("example12");
  auto gens = example12_generators();
  Subgroup hprime = Subgroup::from_generators(ex, {gens[0], gens[2]});  // <a, a'>
  CHECK(hprime.order() == 25);

  CHECK_THROWS_AS(Subgroup::from_generators(builtin_group("alternating 4"),
                                            {parse_cycles("(1 2)", 4)}),
                  DomainError);
}

TEST_CASE("Lagrange holds for every produced subgroup") {
  for (const char* spec : {"symmetric 4", "quaternion 16", "dihedral 12"}) {
    auto g = builtin_group(spec);
    for (const auto& h : enumerate_subgroups(g)) CHECK(g->order() % h.order() == 0);
  }
}

TEST_CASE("set_product size formula and closedness") {
  auto s3 = builtin_group("symmetric 3");
  Subgroup h = sub_of(s3, "(1 2)");
  Subgroup k = sub_of(s3, "(1 3)");
  auto r = set_product(h, k);
  CHECK(r.size == 4);
  CHECK_FALSE(r.is_subgroup);
  CHECK(brute_product_size(h, k) == 4);

  Subgroup c3 = sub_of(s3, "(1 2 3)");  // normal
  CHECK(set_product(c3, h).is_subgroup);
  CHECK(set_product(h, h).size == h.order());
  CHECK(set_product(h, h).is_subgroup);
}

TEST_CASE("set_product formula matches brute force on small groups") {
  for (const char* spec : {"symmetric 4", "dihedral 10", "quaternion 8", "cyclic 3 x symmetric 3"}) {
    auto g = builtin_group(spec);
    auto subs = enumerate_subgroups(g);
    for (const auto& h : subs)
      for (const auto& k : subs)
        CHECK(set_product(h, k).size == brute_product_size(h, k));
  }
}

TEST_CASE("intersection examples") {
  auto s4 = builtin_group("symmetric 4");
  Subgroup v4 = sub_of(s4, "(1 2)(3 4),(1 3)(2 4)");
  Subgroup c4 = sub_of(s4, "(1 2 3 4)");
  Subgroup meet = intersect(v4, c4);
  CHECK(meet.order() == 2);
  CHECK(meet.contains(parse_cycles("(1 3)(2 4)", 4)));
  CHECK(intersect(v4, v4).same_as(v4));
  CHECK(intersect(v4, Subgroup::trivial(s4)).is_trivial());
}

TEST_CASE("normalizer and centralizer by element filter") {
  auto s4 = builtin_group("symmetric 4");
  Subgroup k = sub_of(s4, "(1 3)(2 4)");
  CHECK(normalizer(k).order() == 8);  // a Sylow 2-subgroup of S4

  Subgroup v4 = sub_of(s4, "(1 2)(3 4),(1 3)(2 4)");
  CHECK(normalizer(v4).order() == 24);

  // |G : N_G(<a>)| = 3 in the example12 group
  auto ex = builtin_group("example12");
  Subgroup a = Subgroup::from_generators(ex, {example12_generators()[0]});
  CHECK(ex->order() / normalizer(a).order() == 3);

  // centralizer of a generating set is contained in the normalizer
  Subgroup cz = centralizer(k);
  CHECK(normalizer(k).contains_subgroup(cz));
}

TEST_CASE("core and normal closure") {
  auto s4 = builtin_group("symmetric 4");
  auto [core1, clo1] = core_and_closure(sub_of(s4, "(1 2)"));
  CHECK(core1.is_trivial());
  CHECK(clo1.order() == 24);  // transpositions generate S4

  auto [core2, clo2] = core_and_closure(sub_of(s4, "(1 3)(2 4)"));
  CHECK(core2.is_trivial());
  CHECK(clo2.order() == 4);  // V4

  Subgroup a4 = sub_of(s4, "(1 2 3),(2 3 4)");
  auto [core3, clo3] = core_and_closure(a4);
  CHECK(core3.same_as(a4));
  CHECK(clo3.same_as(a4));
}

TEST_CASE("derived series") {
  auto s4 = builtin_group("symmetric 4");
  auto series = derived_series(s4);
  REQUIRE(series.size() == 4);
  CHECK(series[0].order() == 24);
  CHECK(series[1].order() == 12);
  CHECK(series[2].order() == 4);
  CHECK(series[3].order() == 1);

  auto a5 = builtin_group("alternating 5");
  auto perfect = derived_series(a5);
  REQUIRE(perfect.size() == 1);
  CHECK(perfect[0].order() == 60);

  auto c6 = builtin_group("cyclic 6");
  CHECK(derived_series(c6).back().is_trivial());
}

TEST_CASE("quotients as coset actions") {
  auto s4 = builtin_group("symmetric 4");
  Subgroup v4 = sub_of(s4, "(1 2)(3 4),(1 3)(2 4)");
  auto q = Epimorphism::quotient(s4, v4);
  CHECK(q.target()->order() == 6);
  CHECK(q.target()->degree() == 6);
  CHECK_FALSE(is_abelian(Subgroup::full(q.target())));
  CHECK(q.source()->order() == q.target()->order() * q.kernel().order());

  // trivial kernel: isomorphic copy
  auto qid = Epimorphism::quotient(s4, Subgroup::trivial(s4));
  CHECK(qid.target()->order() == 24);

  // kernel = G: trivial target
  auto qall = Epimorphism::quotient(s4, Subgroup::full(s4));
  CHECK(qall.target()->order() == 1);

  CHECK_THROWS_AS(Epimorphism::quotient(s4, sub_of(s4, "(1 2)")), DomainError);

  // forward map is a homomorphism on sampled pairs
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(s4->order() - 1));
  for (int i = 0; i < 100; ++i) {
    std::uint32_t a = pick(rng), b = pick(rng);
    CHECK(q.image_of(s4->elem(a) * s4->elem(b)) == q.image_of(s4->elem(a)) * q.image_of(s4->elem(b)));
  }

  // preimage of the image of A4 is A4 again
  Subgroup a4 = sub_of(s4, "(1 2 3),(2 3 4)");
  CHECK(q.preimage_subgroup(q.image_subgroup(a4)).same_as(a4));
}

TEST_CASE("direct products") {
  auto c5c5 = builtin_group("cyclic 5 x cyclic 5");
  CHECK(c5c5->order() == 25);
  CHECK(c5c5->degree() == 10);

  auto g = builtin_group("symmetric 3 x trivial");
  CHECK(g->order() == 6);

  // L1 x L2 from example12 has order 625
  auto ex = builtin_group("example12");
  auto gens = example12_generators();
  Subgroup l1l2 = Subgroup::from_generators(ex, {gens[0], gens[1], gens[2], gens[3]});
  CHECK(l1l2.order() == 625);
}

TEST_CASE("sylow subgroups via normalizer growth") {
  auto s4 = builtin_group("symmetric 4");
  CHECK(sylow(s4, 2).order() == 8);
  CHECK(sylow(s4, 3).order() == 3);
  CHECK(sylow(s4, 5).order() == 1);  // p does not divide |G|

  auto ex = builtin_group("example12");
  CHECK(sylow(ex, 5).order() == 625);
  CHECK(sylow(ex, 3).order() == 3);

  for (const char* spec : {"symmetric 4", "alternating 5", "quaternion 16", "dihedral 12"}) {
    auto g = builtin_group(spec);
    for (std::uint32_t p : prime_divisors(g->order()))
      CHECK(sylow(g, p).order() == p_part(g->order(), p));
  }
}

TEST_CASE("all sylow subgroups") {
  auto s4 = builtin_group("symmetric 4");
  CHECK(all_sylow(s4, 2).size() == 3);
  CHECK(all_sylow(s4, 3).size() == 4);

  auto c12 = builtin_group("cyclic 12");
  CHECK(all_sylow(c12, 2).size() == 1);

  for (const char* spec : {"symmetric 4", "alternating 5", "dihedral 10"}) {
    auto g = builtin_group(spec);
    for (std::uint32_t p : prime_divisors(g->order()))
      CHECK(all_sylow(g, p).size() % p == 1);
  }
}

TEST_CASE("subgroup enumeration counts") {
  CHECK(enumerate_subgroups(builtin_group("symmetric 3")).size() == 6);
  CHECK(enumerate_subgroups(builtin_group("cyclic 6")).size() == 4);
  CHECK(enumerate_subgroups(builtin_group("quaternion 8")).size() == 6);
  CHECK(enumerate_subgroups(builtin_group("dihedral 8")).size() == 10);

  // p-only filter: the 2-subgroups of S4 are 1, 9 C2s?  count directly
  auto s4 = builtin_group("symmetric 4");
  SubgroupFilter f;
  f.p_only = 2;
  auto subs2 = enumerate_subgroups(s4, f);
  for (const auto& h : subs2) CHECK(is_p_power(h.order(), 2));
  // cross-check against the unfiltered scan
  std::size_t expected = 0;
  for (const auto& h : enumerate_subgroups(s4))
    if (is_p_power(h.order(), 2)) ++expected;
  CHECK(subs2.size() == expected);

  // scan cap refuses big groups
  Config cfg;
  cfg.max_scan_order = 20;
  auto s4_small_cap = builtin_group("symmetric 4", cfg);
  CHECK_THROWS_AS(enumerate_subgroups(s4_small_cap), CapExceeded);
}

TEST_CASE("maximal subgroups of p-groups") {
  auto c4 = builtin_group("cyclic 4");
  auto m4 = maximal_subgroups_of_p_group(Subgroup::full(c4));
  REQUIRE(m4.size() == 1);
  CHECK(m4[0].order() == 2);

  auto v4 = builtin_group("elementary 2 2");
  CHECK(maximal_subgroups_of_p_group(Subgroup::full(v4)).size() == 3);

  auto d8 = builtin_group("dihedral 8");
  auto md8 = maximal_subgroups_of_p_group(Subgroup::full(d8));
  REQUIRE(md8.size() == 3);
  for (const auto& m : md8) CHECK(m.order() == 4);

  // cross-check: maximal subgroups = proper subgroups maximal by inclusion
  auto q16 = builtin_group("quaternion 16");
  auto all = enumerate_subgroups(q16);
  std::vector<Subgroup> brute;
  for (const auto& h : all) {
    if (!h.is_proper()) continue;
    bool maximal = true;
    for (const auto& k : all)
      if (k.is_proper() && !k.same_as(h) && k.contains_subgroup(h)) maximal = false;
    if (maximal) brute.push_back(h);
  }
  auto fast = maximal_subgroups_of_p_group(Subgroup::full(q16));
  REQUIRE(fast.size() == brute.size());
  for (std::size_t i = 0; i < fast.size(); ++i) CHECK(fast[i].same_as(brute[i]));
}

TEST_CASE("cyclic subgroups of prime order and order 4") {
  auto q8 = builtin_group("quaternion 8");
  auto full = Subgroup::full(q8);
  auto order2 = cyclic_subgroups_of_prime_order(full, 2);
  REQUIRE(order2.size() == 1);  // unique involution
  CHECK(cyclic_subgroups_of_order4(full).size() == 3);

  auto v4 = builtin_group("elementary 2 2");
  CHECK(cyclic_subgroups_of_prime_order(Subgroup::full(v4), 2).size() == 3);
}

TEST_CASE("subnormal closure chains") {
  auto s4 = builtin_group("symmetric 4");
  Subgroup a4 = sub_of(s4, "(1 2 3),(2 3 4)");
  CHECK(subnormal_closure_test(a4));
  CHECK(subnormal_closure_test(sub_of(s4, "(1 3)(2 4)")));   // inside V4
  CHECK_FALSE(subnormal_closure_test(sub_of(s4, "(1 2)")));  // closure is S4
}

TEST_CASE("conjugacy classes and element orders") {
  auto s3 = builtin_group("symmetric 3");
  auto classes = s3->conjugacy_classes();
  REQUIRE(classes.size() == 3);
  std::vector<std::size_t> sizes;
  for (const auto& c : classes) sizes.push_back(c.size());
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<std::size_t>{1, 2, 3});

  auto c6 = builtin_group("cyclic 6");
  CHECK(c6->conjugacy_classes().size() == 6);

  CHECK(parse_cycles("(1 2 3)(4 5)", 5).order() == 6);
}
