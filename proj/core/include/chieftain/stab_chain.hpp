#pragma once

#include <cstdint>
#include <vector>

#include "chieftain/perm.hpp"

namespace chieftain {

/// Deterministic Schreier-Sims stabilizer chain: base points with explicit
/// transversals. Gives group order and membership without enumerating
/// elements, so it is the one structure that works above the element cap.
class StabilizerChain {
public:
  StabilizerChain(std::uint32_t degree, const std::vector<Perm>& generators);

  std::uint64_t order() const { return order_; }
  bool contains(const Perm& p) const;

  std::vector<std::uint32_t> base() const;
  std::vector<std::uint64_t> orbit_sizes() const;

private:
  struct Level {
    std::uint32_t base = 0;
    std::vector<Perm> gens;
    std::vector<std::int32_t> pos;    // point -> orbit index, -1 outside
    std::vector<std::uint32_t> orbit;  // discovery order
    std::vector<Perm> transversal;     // transversal[k] maps base to orbit[k]
  };

  void rebuild_orbit(std::size_t i);
  // Sifts p through levels [from, end); returns the residue and the level
  // it got stuck at (levels_.size() if it passed every level).
  std::pair<Perm, std::size_t> sift_from(Perm p, std::size_t from) const;
  void insert_generator(Perm g, std::size_t level);
  bool fix_level(std::size_t i);  // returns true if a residue was inserted

  std::uint32_t degree_;
  std::vector<Level> levels_;
  std::uint64_t order_ = 1;
};

}  // namespace chieftain
