#include "chieftain/group.hpp"

#include <algorithm>
#include <sstream>

namespace chieftain {

Group::Group(std::uint32_t degree, std::vector<Perm> gens, Config cfg)
    : degree_(degree), gens_(std::move(gens)), cfg_(cfg), chain_(degree, gens_) {}

GroupPtr Group::generate(std::uint32_t degree, std::vector<Perm> generators, Config cfg) {
  if (degree == 0) throw DomainError("degree must be positive");
  for (const Perm& g : generators)
    if (g.degree() != degree)
      throw DomainError("generator degree " + std::to_string(g.degree()) +
                        " does not match group degree " + std::to_string(degree));
  auto g = GroupPtr(new Group(degree, std::move(generators), cfg));
  if (g->order() > cfg.max_order)
    throw CapExceeded("group order " + std::to_string(g->order()) + " exceeds cap " +
                      std::to_string(cfg.max_order));
  return g;
}

bool Group::contains(const Perm& p) const {
  if (p.degree() != degree_) throw DomainError("degree mismatch in membership test");
  return chain_.contains(p);
}

const std::vector<Perm>& Group::elements() const {
  std::call_once(elems_once_, [this] {
    // Naive closure, independent of the stabilizer chain by design: the two
    // order computations cross-check each other.
    std::vector<Perm> pool{Perm::identity(degree_)};
    std::unordered_map<Perm, std::uint32_t, PermHash> seen;
    seen.emplace(pool[0], 0u);
    for (std::size_t k = 0; k < pool.size(); ++k) {
      for (const Perm& s : gens_) {
        Perm q = pool[k] * s;
        if (seen.emplace(q, 0u).second) pool.push_back(std::move(q));
      }
    }
    std::sort(pool.begin(), pool.end());
    if (pool.size() != order())
      throw std::logic_error("closure size disagrees with stabilizer-chain order");
    index_.clear();
    for (std::uint32_t i = 0; i < pool.size(); ++i) index_.emplace(pool[i], i);
    elems_ = std::move(pool);
  });
  return elems_;
}

std::uint32_t Group::id_of(const Perm& p) const {
  elements();
  auto it = index_.find(p);
  if (it == index_.end()) throw DomainError("permutation is not a member of this group");
  return it->second;
}

std::uint32_t Group::mul(std::uint32_t a, std::uint32_t b) const {
  return id_of(elem(a) * elem(b));
}

std::uint32_t Group::inv(std::uint32_t a) const { return id_of(elem(a).inverse()); }

std::uint32_t Group::conj(std::uint32_t h, std::uint32_t g) const {
  return id_of(elem(h).conjugated_by(elem(g)));
}

const std::vector<std::vector<std::uint32_t>>& Group::conjugacy_classes() const {
  std::call_once(classes_once_, [this] {
    const auto n = static_cast<std::uint32_t>(elements().size());
    std::vector<bool> seen(n, false);
    for (std::uint32_t x = 0; x < n; ++x) {
      if (seen[x]) continue;
      std::vector<std::uint32_t> cls{x};
      seen[x] = true;
      for (std::size_t k = 0; k < cls.size(); ++k) {
        for (const Perm& s : gens_) {
          std::uint32_t y = id_of(elem(cls[k]).conjugated_by(s));
          if (!seen[y]) {
            seen[y] = true;
            cls.push_back(y);
          }
        }
      }
      std::sort(cls.begin(), cls.end());
      classes_.push_back(std::move(cls));
    }
  });
  return classes_;
}

std::vector<std::uint32_t> closure_ids(const Group& g, std::vector<std::uint32_t> gen_ids) {
  std::vector<bool> in(g.order(), false);
  std::vector<std::uint32_t> pool{g.identity_id()};
  in[g.identity_id()] = true;
  std::sort(gen_ids.begin(), gen_ids.end());
  gen_ids.erase(std::unique(gen_ids.begin(), gen_ids.end()), gen_ids.end());
  for (std::size_t k = 0; k < pool.size(); ++k) {
    for (std::uint32_t s : gen_ids) {
      std::uint32_t u = g.mul(pool[k], s);
      if (!in[u]) {
        in[u] = true;
        pool.push_back(u);
      }
    }
  }
  std::sort(pool.begin(), pool.end());
  return pool;
}

namespace {

SubgroupKey digest_ids(const std::vector<std::uint32_t>& ids) {
  std::uint64_t h = 14695981039346656037ull;
  auto mix = [&h](std::uint64_t v) {
    h ^= v;
    h *= 1099511628211ull;
  };
  mix(ids.size());
  for (std::uint32_t id : ids) mix(id);
  return h;
}

}  // namespace

Subgroup::Subgroup(GroupPtr parent, std::shared_ptr<const std::vector<std::uint32_t>> ids)
    : parent_(std::move(parent)), ids_(std::move(ids)), key_(digest_ids(*ids_)) {}

Subgroup Subgroup::from_ids(GroupPtr parent, std::vector<std::uint32_t> ids) {
  if (ids.empty() || ids[0] != parent->identity_id())
    throw DomainError("subgroup id set must contain the identity");
  return Subgroup(std::move(parent),
                  std::make_shared<const std::vector<std::uint32_t>>(std::move(ids)));
}

Subgroup Subgroup::from_gen_ids(GroupPtr parent, const std::vector<std::uint32_t>& gen_ids) {
  auto ids = closure_ids(*parent, gen_ids);
  Subgroup s = from_ids(std::move(parent), std::move(ids));
  std::vector<Perm> gens;
  for (std::uint32_t id : gen_ids) gens.push_back(s.parent()->elem(id));
  if (!gens.empty()) s.gens_ = std::make_shared<std::vector<Perm>>(std::move(gens));
  return s;
}

Subgroup Subgroup::from_generators(GroupPtr parent, std::vector<Perm> gens) {
  std::vector<std::uint32_t> gen_ids;
  for (const Perm& p : gens) {
    if (!parent->contains(p))
      throw DomainError("subgroup generator " + std::to_string(gen_ids.size()) +
                        " is not a member of the parent group");
    gen_ids.push_back(parent->id_of(p));
  }
  auto ids = closure_ids(*parent, gen_ids);
  Subgroup s = from_ids(std::move(parent), std::move(ids));
  if (!gens.empty()) s.gens_ = std::make_shared<std::vector<Perm>>(std::move(gens));
  return s;
}

Subgroup Subgroup::trivial(GroupPtr parent) {
  return from_ids(std::move(parent), {0u});
}

Subgroup Subgroup::full(GroupPtr parent) {
  std::vector<std::uint32_t> ids(parent->order());
  for (std::uint32_t i = 0; i < ids.size(); ++i) ids[i] = i;
  Subgroup s = from_ids(parent, std::move(ids));
  s.gens_ = std::make_shared<std::vector<Perm>>(parent->generators());
  return s;
}

std::string Subgroup::key_hex() const {
  std::ostringstream os;
  os << std::hex << key_;
  return os.str();
}

bool Subgroup::contains_id(std::uint32_t id) const {
  return std::binary_search(ids_->begin(), ids_->end(), id);
}

bool Subgroup::contains(const Perm& p) const {
  if (!parent_->contains(p)) return false;
  return contains_id(parent_->id_of(p));
}

bool Subgroup::contains_subgroup(const Subgroup& other) const {
  return std::includes(ids_->begin(), ids_->end(), other.ids_->begin(), other.ids_->end());
}

const std::vector<Perm>& Subgroup::gens() const {
  if (!gens_) gens_ = std::make_shared<std::vector<Perm>>(canonical_gens());
  return *gens_;
}

std::vector<Perm> Subgroup::canonical_gens() const {
  std::vector<Perm> gens;
  std::vector<std::uint32_t> gen_ids;
  std::vector<std::uint32_t> closed{parent_->identity_id()};
  for (std::uint32_t id : *ids_) {
    if (std::binary_search(closed.begin(), closed.end(), id)) continue;
    gen_ids.push_back(id);
    gens.push_back(parent_->elem(id));
    closed = closure_ids(*parent_, gen_ids);
    if (closed.size() == ids_->size()) break;
  }
  return gens;
}

bool Subgroup::is_normal() const {
  for (const Perm& g : parent_->generators())
    for (const Perm& h : gens())
      if (!contains(h.conjugated_by(g))) return false;
  return true;
}

Subgroup Subgroup::conjugated(std::uint32_t g_id) const {
  std::vector<std::uint32_t> ids;
  ids.reserve(ids_->size());
  for (std::uint32_t id : *ids_) ids.push_back(parent_->conj(id, g_id));
  std::sort(ids.begin(), ids.end());
  return from_ids(parent_, std::move(ids));
}

GroupPtr Subgroup::as_group() const {
  const std::string key = "universe:" + std::to_string(key_);
  auto boxed = parent_->cache().get_or_build<GroupPtr>(key, [this]() {
    return std::make_shared<GroupPtr>(
        Group::generate(parent_->degree(), gens(), parent_->config()));
  });
  return *boxed;
}

bool Subgroup::order_then_ids_less(const Subgroup& a, const Subgroup& b) {
  if (a.order() != b.order()) return a.order() < b.order();
  return a.ids() < b.ids();
}

}  // namespace chieftain
