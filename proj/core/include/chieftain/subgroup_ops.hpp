#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "chieftain/group.hpp"

namespace chieftain {

struct SetProductResult {
  std::uint64_t size = 0;    // |H||K| / |H ∩ K|
  bool is_subgroup = false;  // HK = KH as sets
};

/// Size and closedness of the product set HK.
SetProductResult set_product(const Subgroup& h, const Subgroup& k);

/// The product set HK as sorted ids. Not a subgroup in general.
std::vector<std::uint32_t> product_set_ids(const Subgroup& h, const Subgroup& k);

Subgroup intersect(const Subgroup& a, const Subgroup& b);
Subgroup join(const Subgroup& a, const Subgroup& b);

/// N_G(H) by element filter over the parent universe. Cached per parent.
Subgroup normalizer(const Subgroup& h);

/// Centralizer of an explicit element set in the parent universe.
Subgroup centralizer(const GroupPtr& g, const std::vector<std::uint32_t>& elem_ids);
Subgroup centralizer(const Subgroup& h);

/// (H_G, H^G): largest normal subgroup inside H and normal closure of H.
std::pair<Subgroup, Subgroup> core_and_closure(const Subgroup& h);

/// Normal closure of k inside ambient (k <= ambient required).
Subgroup normal_closure_in(const Subgroup& ambient, const Subgroup& k);

/// [A, B]: generated by generator commutators, normal-closed in <A, B>.
Subgroup commutator(const Subgroup& a, const Subgroup& b);

/// G >= G' >= G'' >= ... until stable.
std::vector<Subgroup> derived_series(const GroupPtr& g);

/// One Sylow p-subgroup (deterministic), via normalizer growth.
Subgroup sylow(const GroupPtr& g, std::uint32_t p);
Subgroup sylow_in(const Subgroup& ambient, std::uint32_t p);

/// All Sylow p-subgroups (conjugates of sylow), deterministically ordered.
std::vector<Subgroup> all_sylow(const GroupPtr& g, std::uint32_t p);
std::vector<Subgroup> all_sylow_in(const Subgroup& ambient, std::uint32_t p);

struct SubgroupFilter {
  std::optional<std::vector<std::uint64_t>> orders;  // keep only these orders
  std::optional<std::uint32_t> p_only;               // p-subgroups only
  bool up_to_conjugacy = false;
};

/// Complete, duplicate-free subgroup list (all-or-error under the scan cap).
std::vector<Subgroup> enumerate_subgroups(const GroupPtr& g, const SubgroupFilter& f = {});

/// Subgroups of the parent universe contained in `ambient`.
std::vector<Subgroup> enumerate_subgroups_within(const Subgroup& ambient,
                                                 const SubgroupFilter& f = {});

/// Frattini subgroup of a p-group: commutators and p-th powers.
Subgroup frattini_of_p_group(const Subgroup& p_sub);

/// Index-p subgroups of a p-group = preimages of hyperplanes of P/Phi(P).
std::vector<Subgroup> maximal_subgroups_of_p_group(const Subgroup& p_sub);

/// Distinct subgroups <x> with o(x) prime; restricted to one prime when given.
std::vector<Subgroup> cyclic_subgroups_of_prime_order(const Subgroup& h,
                                                      std::optional<std::uint32_t> p = {});
std::vector<Subgroup> cyclic_subgroups_of_order4(const Subgroup& h);

/// True iff the chain G |> K^G |> K^(K^G) |> ... terminates at K.
bool subnormal_closure_test(const Subgroup& k);

bool is_abelian(const Subgroup& h);

}  // namespace chieftain
