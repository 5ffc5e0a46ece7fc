#pragma once

#include <vector>

#include "chieftain/group.hpp"

namespace chieftain {

/// A quotient map G -> G/N materialized as the right-coset action of G on
/// the cosets of N. The target is an ordinary permutation group universe.
/// Quotients by the trivial subgroup are the identity map onto the source
/// itself (an isomorphic copy, with no regular-representation blowup).
class Epimorphism {
public:
  static Epimorphism quotient(GroupPtr source, const Subgroup& kernel);

  const GroupPtr& source() const { return source_; }
  const GroupPtr& target() const { return target_; }
  const Subgroup& kernel() const { return kernel_; }
  const std::vector<Perm>& gen_images() const { return gen_images_; }

  Perm image_of(const Perm& g) const;
  std::uint32_t image_id(std::uint32_t source_id) const;

  Subgroup image_subgroup(const Subgroup& h) const;
  Subgroup preimage_subgroup(const Subgroup& s) const;

private:
  Epimorphism(GroupPtr source, Subgroup kernel)
      : source_(std::move(source)), kernel_(std::move(kernel)) {}

  GroupPtr source_;
  GroupPtr target_;
  Subgroup kernel_;
  std::vector<Perm> gen_images_;
  bool identity_ = false;
  std::vector<std::uint32_t> coset_of_;   // source element id -> coset index
  std::vector<std::uint32_t> coset_rep_;  // coset index -> smallest member id
};

/// Generators act on disjoint blocks; degree and orders add/multiply.
GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b);

}  // namespace chieftain
