#include "chieftain/stab_chain.hpp"

namespace chieftain {

StabilizerChain::StabilizerChain(std::uint32_t degree, const std::vector<Perm>& generators)
    : degree_(degree) {
  for (const Perm& g : generators) {
    if (g.degree() != degree_) throw DomainError("generator degree mismatch");
    if (!g.is_identity()) insert_generator(g, 0);
  }
  // Establish the strong-generation invariant: every Schreier generator of
  // every level must sift to the identity through the levels below it.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < levels_.size(); ++i) {
      if (fix_level(i)) {
        changed = true;
        break;  // orbits below may have changed shape; restart the sweep
      }
    }
  }
  order_ = 1;
  for (const auto& lvl : levels_) order_ *= lvl.orbit.size();
}

void StabilizerChain::insert_generator(Perm g, std::size_t level) {
  if (g.is_identity()) return;
  if (level == levels_.size()) {
    Level lvl;
    lvl.base = g.smallest_moved();
    lvl.pos.assign(degree_, -1);
    levels_.push_back(std::move(lvl));
  }
  levels_[level].gens.push_back(std::move(g));
  rebuild_orbit(level);
}

void StabilizerChain::rebuild_orbit(std::size_t i) {
  Level& lvl = levels_[i];
  lvl.pos.assign(degree_, -1);
  lvl.orbit.clear();
  lvl.transversal.clear();
  lvl.orbit.push_back(lvl.base);
  lvl.pos[lvl.base] = 0;
  lvl.transversal.push_back(Perm::identity(degree_));
  for (std::size_t k = 0; k < lvl.orbit.size(); ++k) {
    const std::uint32_t x = lvl.orbit[k];
    for (const Perm& s : lvl.gens) {
      const std::uint32_t y = s[x];
      if (lvl.pos[y] < 0) {
        lvl.pos[y] = static_cast<std::int32_t>(lvl.orbit.size());
        lvl.orbit.push_back(y);
        lvl.transversal.push_back(lvl.transversal[k] * s);
      }
    }
  }
}

std::pair<Perm, std::size_t> StabilizerChain::sift_from(Perm p, std::size_t from) const {
  for (std::size_t i = from; i < levels_.size(); ++i) {
    if (p.is_identity()) return {p, i};
    const Level& lvl = levels_[i];
    const std::uint32_t x = p[lvl.base];
    if (x == lvl.base) continue;
    if (lvl.pos[x] < 0) return {p, i};
    p = p * lvl.transversal[lvl.pos[x]].inverse();
  }
  return {p, levels_.size()};
}

bool StabilizerChain::fix_level(std::size_t i) {
  Level& lvl = levels_[i];
  for (std::size_t k = 0; k < lvl.orbit.size(); ++k) {
    for (const Perm& s : lvl.gens) {
      const std::uint32_t y = s[lvl.orbit[k]];
      Perm schreier = lvl.transversal[k] * s * lvl.transversal[lvl.pos[y]].inverse();
      auto [residue, j] = sift_from(std::move(schreier), i + 1);
      if (!residue.is_identity()) {
        insert_generator(std::move(residue), j);
        return true;
      }
    }
  }
  return false;
}

bool StabilizerChain::contains(const Perm& p) const {
  if (p.degree() != degree_) throw DomainError("degree mismatch in membership test");
  auto [residue, level] = sift_from(p, 0);
  (void)level;
  return residue.is_identity();
}

std::vector<std::uint32_t> StabilizerChain::base() const {
  std::vector<std::uint32_t> b;
  for (const auto& lvl : levels_) b.push_back(lvl.base);
  return b;
}

std::vector<std::uint64_t> StabilizerChain::orbit_sizes() const {
  std::vector<std::uint64_t> s;
  for (const auto& lvl : levels_) s.push_back(lvl.orbit.size());
  return s;
}

}  // namespace chieftain
