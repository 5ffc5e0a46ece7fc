#include "chieftain/subgroup_ops.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "chieftain/numeric.hpp"

namespace chieftain {

namespace {

void require_same_parent(const Subgroup& a, const Subgroup& b) {
  if (a.parent() != b.parent())
    throw DomainError("subgroups live in different parent universes");
}

/// Exact (collision-safe) per-group memo from a query subgroup to a result.
struct SubgroupMemo {
  std::map<SubgroupKey, std::vector<std::pair<Subgroup, Subgroup>>> buckets;

  const Subgroup* find(const Subgroup& query) {
    auto it = buckets.find(query.key());
    if (it == buckets.end()) return nullptr;
    for (auto& [q, r] : it->second)
      if (q.same_as(query)) return &r;
    return nullptr;
  }
  void put(const Subgroup& query, const Subgroup& result) {
    buckets[query.key()].emplace_back(query, result);
  }
};

std::shared_ptr<SubgroupMemo> memo_of(const GroupPtr& g, const std::string& name) {
  return g->cache().get_or_build<SubgroupMemo>(
      name, [] { return std::make_shared<SubgroupMemo>(); });
}

}  // namespace

std::vector<std::uint32_t> product_set_ids(const Subgroup& h, const Subgroup& k) {
  require_same_parent(h, k);
  const Group& g = *h.parent();
  std::vector<bool> in(g.order(), false);
  std::vector<std::uint32_t> out;
  for (std::uint32_t hid : h.ids()) {
    if (in[hid]) continue;  // coset hK already swept
    for (std::uint32_t kid : k.ids()) {
      std::uint32_t u = g.mul(hid, kid);
      if (!in[u]) {
        in[u] = true;
        out.push_back(u);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

SetProductResult set_product(const Subgroup& h, const Subgroup& k) {
  require_same_parent(h, k);
  SetProductResult r;
  r.size = h.order() * k.order() / intersect(h, k).order();
  r.is_subgroup = (join(h, k).order() == r.size);
  return r;
}

Subgroup intersect(const Subgroup& a, const Subgroup& b) {
  require_same_parent(a, b);
  std::vector<std::uint32_t> ids;
  std::set_intersection(a.ids().begin(), a.ids().end(), b.ids().begin(), b.ids().end(),
                        std::back_inserter(ids));
  return Subgroup::from_ids(a.parent(), std::move(ids));
}

Subgroup join(const Subgroup& a, const Subgroup& b) {
  require_same_parent(a, b);
  if (a.contains_subgroup(b)) return a;
  if (b.contains_subgroup(a)) return b;
  std::vector<std::uint32_t> gen_ids;
  for (const Perm& p : a.gens()) gen_ids.push_back(a.parent()->id_of(p));
  for (const Perm& p : b.gens()) gen_ids.push_back(a.parent()->id_of(p));
  return Subgroup::from_gen_ids(a.parent(), gen_ids);
}

Subgroup normalizer(const Subgroup& h) {
  const GroupPtr& g = h.parent();
  auto memo = memo_of(g, "normalizer");
  if (const Subgroup* hit = memo->find(h)) return *hit;

  std::vector<std::uint32_t> ids;
  const auto& gens = h.gens();
  for (std::uint32_t gid = 0; gid < g->order(); ++gid) {
    const Perm& gp = g->elem(gid);
    const Perm gpi = gp.inverse();
    bool ok = true;
    for (const Perm& hp : gens) {
      if (!h.contains(gpi * hp * gp)) {
        ok = false;
        break;
      }
    }
    if (ok) ids.push_back(gid);
  }
  Subgroup result = Subgroup::from_ids(g, std::move(ids));
  memo->put(h, result);
  return result;
}

Subgroup centralizer(const GroupPtr& g, const std::vector<std::uint32_t>& elem_ids) {
  std::vector<std::uint32_t> ids;
  for (std::uint32_t gid = 0; gid < g->order(); ++gid) {
    const Perm& gp = g->elem(gid);
    bool ok = true;
    for (std::uint32_t s : elem_ids) {
      const Perm& sp = g->elem(s);
      if (!(gp * sp == sp * gp)) {
        ok = false;
        break;
      }
    }
    if (ok) ids.push_back(gid);
  }
  return Subgroup::from_ids(g, std::move(ids));
}

Subgroup centralizer(const Subgroup& h) {
  // Centralizing the generators centralizes the subgroup.
  std::vector<std::uint32_t> gen_ids;
  for (const Perm& p : h.gens()) gen_ids.push_back(h.parent()->id_of(p));
  return centralizer(h.parent(), gen_ids);
}

Subgroup normal_closure_in(const Subgroup& ambient, const Subgroup& k) {
  require_same_parent(ambient, k);
  const GroupPtr& g = ambient.parent();
  std::vector<std::uint32_t> gen_ids;
  for (const Perm& p : k.gens()) gen_ids.push_back(g->id_of(p));
  auto ids = closure_ids(*g, gen_ids);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < gen_ids.size(); ++i) {
      for (const Perm& a : ambient.gens()) {
        std::uint32_t c = g->id_of(g->elem(gen_ids[i]).conjugated_by(a));
        if (!std::binary_search(ids.begin(), ids.end(), c)) {
          gen_ids.push_back(c);
          ids = closure_ids(*g, gen_ids);
          changed = true;
        }
      }
    }
  }
  return Subgroup::from_ids(g, std::move(ids));
}

std::pair<Subgroup, Subgroup> core_and_closure(const Subgroup& h) {
  const GroupPtr& g = h.parent();
  Subgroup closure = normal_closure_in(Subgroup::full(g), h);
  Subgroup core = h;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const Perm& a : g->generators()) {
      Subgroup conj = core.conjugated(g->id_of(a));
      Subgroup next = intersect(core, conj);
      if (!next.same_as(core)) {
        core = next;
        changed = true;
      }
    }
  }
  return {core, closure};
}

Subgroup commutator(const Subgroup& a, const Subgroup& b) {
  require_same_parent(a, b);
  const GroupPtr& g = a.parent();
  std::vector<std::uint32_t> seeds;
  for (const Perm& x : a.gens())
    for (const Perm& y : b.gens())
      seeds.push_back(g->id_of(x.inverse() * y.inverse() * x * y));
  Subgroup seed_sub = Subgroup::from_gen_ids(g, seeds);
  return normal_closure_in(join(a, b), seed_sub);
}

std::vector<Subgroup> derived_series(const GroupPtr& g) {
  std::vector<Subgroup> series{Subgroup::full(g)};
  while (true) {
    Subgroup next = commutator(series.back(), series.back());
    if (next.same_as(series.back())) break;
    series.push_back(next);
    if (next.is_trivial()) break;
  }
  return series;
}

Subgroup sylow_in(const Subgroup& ambient, std::uint32_t p) {
  if (!is_prime(p)) throw DomainError("sylow requires a prime");
  const GroupPtr& g = ambient.parent();
  const std::uint64_t pk = p_part(ambient.order(), p);
  if (pk == 1) return Subgroup::trivial(g);

  // Seed with the p-part of the first element of order divisible by p.
  Subgroup psub = Subgroup::trivial(g);
  for (std::uint32_t id : ambient.ids()) {
    std::uint64_t ord = g->element_order(id);
    if (ord % p == 0) {
      std::uint64_t m = ord;
      while (m % p == 0) m /= p;
      psub = Subgroup::from_gen_ids(g, {g->id_of(g->elem(id).power(static_cast<std::int64_t>(m)))});
      break;
    }
  }

  while (psub.order() < pk) {
    Subgroup n = intersect(normalizer(psub), ambient);
    bool grew = false;
    for (std::uint32_t id : n.ids()) {
      if (psub.contains_id(id)) continue;
      // Order of the coset id*P in N/P: smallest k with id^k in P.
      std::uint64_t k = 1;
      std::uint32_t z = id;
      while (!psub.contains_id(z)) {
        z = g->mul(z, id);
        ++k;
      }
      if (k % p == 0) {
        std::uint32_t cand = g->id_of(g->elem(id).power(static_cast<std::int64_t>(k / p)));
        psub = join(psub, Subgroup::from_gen_ids(g, {cand}));
        grew = true;
        break;
      }
    }
    if (!grew)
      throw std::logic_error("sylow normalizer growth stalled below the p-part");
  }
  return psub;
}

Subgroup sylow(const GroupPtr& g, std::uint32_t p) { return sylow_in(Subgroup::full(g), p); }

std::vector<Subgroup> all_sylow_in(const Subgroup& ambient, std::uint32_t p) {
  Subgroup base = sylow_in(ambient, p);
  std::map<SubgroupKey, std::vector<Subgroup>> seen;
  std::vector<Subgroup> out;
  for (std::uint32_t gid : ambient.ids()) {
    Subgroup conj = base.conjugated(gid);
    auto& bucket = seen[conj.key()];
    bool dup = false;
    for (const Subgroup& s : bucket)
      if (s.same_as(conj)) dup = true;
    if (!dup) {
      bucket.push_back(conj);
      out.push_back(conj);
    }
  }
  std::sort(out.begin(), out.end(), Subgroup::order_then_ids_less);
  return out;
}

std::vector<Subgroup> all_sylow(const GroupPtr& g, std::uint32_t p) {
  return all_sylow_in(Subgroup::full(g), p);
}

namespace {

class SubgroupPool {
public:
  bool insert(const Subgroup& s) {
    auto& bucket = seen_[s.key()];
    for (const Subgroup& t : bucket)
      if (t.same_as(s)) return false;
    bucket.push_back(s);
    return true;
  }

private:
  std::map<SubgroupKey, std::vector<Subgroup>> seen_;
};

}  // namespace

std::vector<Subgroup> enumerate_subgroups_within(const Subgroup& ambient,
                                                 const SubgroupFilter& f) {
  const GroupPtr& g = ambient.parent();
  const Config& cfg = g->config();
  if (ambient.order() > cfg.max_scan_order)
    throw CapExceeded("subgroup scan refused: order " + std::to_string(ambient.order()) +
                      " exceeds scan cap " + std::to_string(cfg.max_scan_order));

  // Cyclic seeds; every subgroup arises by repeatedly joining cyclic ones
  // below it. In p-only mode p-element seeds reach every p-subgroup.
  std::vector<Subgroup> cyclics;
  {
    SubgroupPool pool;
    for (std::uint32_t id : ambient.ids()) {
      if (id == g->identity_id()) continue;
      if (f.p_only && !is_p_power(g->element_order(id), *f.p_only)) continue;
      Subgroup c = Subgroup::from_gen_ids(g, {id});
      if (pool.insert(c)) cyclics.push_back(c);
    }
  }

  SubgroupPool pool;
  std::vector<Subgroup> found{Subgroup::trivial(g)};
  pool.insert(found[0]);
  for (std::size_t k = 0; k < found.size(); ++k) {
    Subgroup h = found[k];  // copy: found reallocates
    for (const Subgroup& c : cyclics) {
      if (h.contains_subgroup(c)) continue;
      Subgroup j = join(h, c);
      if (f.p_only && !is_p_power(j.order(), *f.p_only)) continue;
      if (pool.insert(j)) {
        found.push_back(j);
        if (found.size() > cfg.max_subgroups)
          throw CapExceeded("subgroup scan exceeded the subgroup-count budget");
      }
    }
  }

  std::sort(found.begin(), found.end(), Subgroup::order_then_ids_less);

  if (f.orders) {
    std::vector<Subgroup> kept;
    for (const Subgroup& s : found)
      if (std::find(f.orders->begin(), f.orders->end(), s.order()) != f.orders->end())
        kept.push_back(s);
    found = std::move(kept);
  }

  if (f.up_to_conjugacy) {
    SubgroupPool marked;
    std::vector<Subgroup> reps;
    for (const Subgroup& s : found) {
      if (!marked.insert(s)) continue;  // already in some earlier orbit
      reps.push_back(s);
      for (std::uint32_t gid : ambient.ids()) marked.insert(s.conjugated(gid));
    }
    found = std::move(reps);
  }
  return found;
}

std::vector<Subgroup> enumerate_subgroups(const GroupPtr& g, const SubgroupFilter& f) {
  return enumerate_subgroups_within(Subgroup::full(g), f);
}

Subgroup frattini_of_p_group(const Subgroup& p_sub) {
  const GroupPtr& g = p_sub.parent();
  auto fac = factorize(p_sub.order());
  if (fac.size() != 1 && p_sub.order() != 1)
    throw DomainError("frattini_of_p_group requires a p-group");
  if (p_sub.order() == 1) return p_sub;
  const std::uint32_t p = fac[0].first;

  // Burnside basis: Phi(P) = P' * P^p.
  Subgroup derived = commutator(p_sub, p_sub);
  std::vector<std::uint32_t> power_gens;
  for (std::uint32_t id : p_sub.ids())
    power_gens.push_back(g->id_of(g->elem(id).power(p)));
  return join(derived, Subgroup::from_gen_ids(g, power_gens));
}

std::vector<Subgroup> maximal_subgroups_of_p_group(const Subgroup& p_sub) {
  const GroupPtr& g = p_sub.parent();
  if (p_sub.order() == 1) return {};
  auto fac = factorize(p_sub.order());
  if (fac.size() != 1) throw DomainError("maximal_subgroups_of_p_group requires a p-group");
  const std::uint32_t p = fac[0].first;

  Subgroup phi = frattini_of_p_group(p_sub);
  const std::uint64_t m = p_sub.order() / phi.order();

  // Coset space of Phi inside P, deterministic rep = smallest member id.
  std::vector<std::uint32_t> coset_of(g->order(), UINT32_MAX);
  std::vector<std::uint32_t> reps;
  std::vector<std::vector<std::uint32_t>> coset_members;
  for (std::uint32_t id : p_sub.ids()) {
    if (coset_of[id] != UINT32_MAX) continue;
    const auto c = static_cast<std::uint32_t>(reps.size());
    reps.push_back(id);
    coset_members.emplace_back();
    for (std::uint32_t f : phi.ids()) {
      std::uint32_t u = g->mul(f, id);
      coset_of[u] = c;
      coset_members[c].push_back(u);
    }
  }
  auto coset_mul = [&](std::uint32_t a, std::uint32_t b) {
    return coset_of[g->mul(reps[a], reps[b])];
  };

  // Greedy basis of the elementary abelian quotient P/Phi.
  std::vector<std::uint32_t> basis;
  std::vector<bool> in_span(m, false);
  in_span[coset_of[g->identity_id()]] = true;
  std::uint64_t span_size = 1;
  for (std::uint32_t c = 0; c < m && span_size < m; ++c) {
    if (in_span[c]) continue;
    basis.push_back(c);
    std::vector<std::uint32_t> frontier;
    for (std::uint32_t d = 0; d < m; ++d)
      if (in_span[d]) frontier.push_back(d);
    for (std::uint32_t d : frontier) {
      std::uint32_t cur = d;
      for (std::uint32_t e = 1; e < p; ++e) {
        cur = coset_mul(cur, c);
        if (!in_span[cur]) {
          in_span[cur] = true;
          ++span_size;
        }
      }
    }
  }
  const auto r = static_cast<std::uint32_t>(basis.size());

  // Coordinates of every coset with respect to the basis.
  std::vector<std::vector<std::uint32_t>> coords(m);
  {
    std::vector<std::uint32_t> tuple(r, 0);
    while (true) {
      std::uint32_t c = coset_of[g->identity_id()];
      for (std::uint32_t i = 0; i < r; ++i)
        for (std::uint32_t e = 0; e < tuple[i]; ++e) c = coset_mul(c, basis[i]);
      coords[c] = tuple;
      std::uint32_t i = 0;
      for (; i < r; ++i) {
        if (++tuple[i] < p) break;
        tuple[i] = 0;
      }
      if (i == r) break;
    }
  }

  // One maximal subgroup per functional, functionals normalized so the
  // first nonzero coefficient is 1.
  std::vector<Subgroup> out;
  std::vector<std::uint32_t> lam(r, 0);
  while (true) {
    std::uint32_t i = 0;
    for (; i < r; ++i) {
      if (++lam[i] < p) break;
      lam[i] = 0;
    }
    if (i == r) break;
    std::uint32_t first_nonzero = r;
    for (std::uint32_t j = r; j-- > 0;)
      if (lam[j]) first_nonzero = j;
    if (lam[first_nonzero] != 1) continue;

    std::vector<std::uint32_t> ids;
    for (std::uint32_t c = 0; c < m; ++c) {
      std::uint64_t dot = 0;
      for (std::uint32_t j = 0; j < r; ++j) dot += static_cast<std::uint64_t>(lam[j]) * coords[c][j];
      if (dot % p == 0)
        ids.insert(ids.end(), coset_members[c].begin(), coset_members[c].end());
    }
    std::sort(ids.begin(), ids.end());
    out.push_back(Subgroup::from_ids(g, std::move(ids)));
  }
  std::sort(out.begin(), out.end(), Subgroup::order_then_ids_less);
  return out;
}

std::vector<Subgroup> cyclic_subgroups_of_prime_order(const Subgroup& h,
                                                      std::optional<std::uint32_t> p) {
  const GroupPtr& g = h.parent();
  SubgroupPool pool;
  std::vector<Subgroup> out;
  for (std::uint32_t id : h.ids()) {
    std::uint64_t ord = g->element_order(id);
    if (!is_prime(ord)) continue;
    if (p && ord != *p) continue;
    Subgroup c = Subgroup::from_gen_ids(g, {id});
    if (pool.insert(c)) out.push_back(c);
  }
  return out;
}

std::vector<Subgroup> cyclic_subgroups_of_order4(const Subgroup& h) {
  const GroupPtr& g = h.parent();
  SubgroupPool pool;
  std::vector<Subgroup> out;
  for (std::uint32_t id : h.ids()) {
    if (g->element_order(id) != 4) continue;
    Subgroup c = Subgroup::from_gen_ids(g, {id});
    if (pool.insert(c)) out.push_back(c);
  }
  return out;
}

bool subnormal_closure_test(const Subgroup& k) {
  Subgroup cur = Subgroup::full(k.parent());
  while (true) {
    Subgroup next = normal_closure_in(cur, k);
    if (next.same_as(k)) return true;
    if (next.same_as(cur)) return false;
    cur = next;
  }
}

bool is_abelian(const Subgroup& h) {
  const auto& gens = h.gens();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (!(gens[i] * gens[j] == gens[j] * gens[i])) return false;
  return true;
}

}  // namespace chieftain
