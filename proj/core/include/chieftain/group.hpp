#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "chieftain/config.hpp"
#include "chieftain/perm.hpp"
#include "chieftain/stab_chain.hpp"

namespace chieftain {

class Group;
using GroupPtr = std::shared_ptr<const Group>;

/// Type-erased per-group memo storage. Builders may race benignly (both
/// compute the same deterministic value); the first insert wins.
class CacheBox {
public:
  template <typename T>
  std::shared_ptr<T> get_or_build(const std::string& key,
                                  const std::function<std::shared_ptr<T>()>& build) const {
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = slots_.find(key);
      if (it != slots_.end()) return std::static_pointer_cast<T>(it->second);
    }
    std::shared_ptr<T> value = build();
    std::lock_guard<std::mutex> lock(mu_);
    auto [it, inserted] = slots_.emplace(key, value);
    return std::static_pointer_cast<T>(it->second);
  }

private:
  mutable std::mutex mu_;
  mutable std::unordered_map<std::string, std::shared_ptr<void>> slots_;
};

/// An immutable generated permutation group: the universe every derived
/// object (subgroups, lattices, quotients) lives in. Groups above the
/// element cap are rejected at generation time.
class Group : public std::enable_shared_from_this<Group> {
public:
  static GroupPtr generate(std::uint32_t degree, std::vector<Perm> generators,
                           Config cfg = Config{});

  std::uint32_t degree() const { return degree_; }
  std::uint64_t order() const { return chain_.order(); }
  const std::vector<Perm>& generators() const { return gens_; }
  const StabilizerChain& chain() const { return chain_; }
  const Config& config() const { return cfg_; }

  bool contains(const Perm& p) const;

  /// Full element table, sorted by image-table lexicographic order (so the
  /// identity is always element 0). Built by naive closure, independently
  /// of the stabilizer chain.
  const std::vector<Perm>& elements() const;
  const Perm& elem(std::uint32_t id) const { return elements()[id]; }
  std::uint32_t id_of(const Perm& p) const;
  std::uint32_t identity_id() const { return 0; }

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t inv(std::uint32_t a) const;
  std::uint32_t conj(std::uint32_t h, std::uint32_t g) const;  // g^-1 h g
  std::uint64_t element_order(std::uint32_t id) const { return elem(id).order(); }

  /// Conjugacy classes as sorted id vectors, ordered by smallest member.
  const std::vector<std::vector<std::uint32_t>>& conjugacy_classes() const;

  CacheBox& cache() const { return cache_; }

private:
  Group(std::uint32_t degree, std::vector<Perm> gens, Config cfg);

  std::uint32_t degree_;
  std::vector<Perm> gens_;
  Config cfg_;
  StabilizerChain chain_;

  mutable std::once_flag elems_once_;
  mutable std::vector<Perm> elems_;
  mutable std::unordered_map<Perm, std::uint32_t, PermHash> index_;

  mutable std::once_flag classes_once_;
  mutable std::vector<std::vector<std::uint32_t>> classes_;

  mutable CacheBox cache_;
};

using SubgroupKey = std::uint64_t;

/// A subgroup of a fixed parent universe, represented by its sorted member
/// ids plus a small generator list. Value type; copies are cheap.
class Subgroup {
public:
  static Subgroup from_generators(GroupPtr parent, std::vector<Perm> gens);
  static Subgroup from_gen_ids(GroupPtr parent, const std::vector<std::uint32_t>& gen_ids);
  /// `ids` must be the sorted, closed member set.
  static Subgroup from_ids(GroupPtr parent, std::vector<std::uint32_t> ids);
  static Subgroup trivial(GroupPtr parent);
  static Subgroup full(GroupPtr parent);

  const GroupPtr& parent() const { return parent_; }
  std::uint64_t order() const { return ids_->size(); }
  const std::vector<std::uint32_t>& ids() const { return *ids_; }
  SubgroupKey key() const { return key_; }
  std::string key_hex() const;

  bool contains_id(std::uint32_t id) const;
  bool contains(const Perm& p) const;
  bool contains_subgroup(const Subgroup& other) const;
  bool same_as(const Subgroup& other) const { return key_ == other.key_ && *ids_ == *other.ids_; }
  bool is_proper() const { return order() < parent_->order(); }
  bool is_trivial() const { return order() == 1; }

  /// Small generating set: the generators the subgroup was built from, or
  /// a deterministic greedy set when it came from a raw id set.
  const std::vector<Perm>& gens() const;
  /// Deterministic greedy minimal generating sequence (smallest ids first).
  std::vector<Perm> canonical_gens() const;

  bool is_normal() const;  // in the parent universe
  Subgroup conjugated(std::uint32_t g_id) const;

  /// This subgroup as its own universe (memoized per parent).
  GroupPtr as_group() const;

  /// Total order used for deterministic listings: by order, then ids.
  static bool order_then_ids_less(const Subgroup& a, const Subgroup& b);

private:
  Subgroup(GroupPtr parent, std::shared_ptr<const std::vector<std::uint32_t>> ids);

  GroupPtr parent_;
  std::shared_ptr<const std::vector<std::uint32_t>> ids_;
  SubgroupKey key_ = 0;
  mutable std::shared_ptr<std::vector<Perm>> gens_;  // lazy
};

/// BFS product closure of a set of generator ids; returns sorted ids.
std::vector<std::uint32_t> closure_ids(const Group& g, std::vector<std::uint32_t> gen_ids);

}  // namespace chieftain
