#pragma once

#include <string>

#include "chieftain/group.hpp"

namespace chieftain {

/// Constructs a named builtin group. Grammar (atoms joined by " x " for
/// direct products):
///   trivial | cyclic N | dihedral N (order N, even >= 6) | symmetric N |
///   alternating N | quaternion N (N = 4m >= 8) | elementary P K | example12
///
/// example12 is the degree-50 group of order 1875 = 5^4 * 3: two regular
/// copies of C5 x C5 on points 1-25 and 26-50, extended by an order-3
/// linear map acting as (i,j) -> (-j, i-j) on both blocks.
GroupPtr builtin_group(const std::string& spec, Config cfg = Config{});

/// The generators of example12 in construction order a, b, a', b', alpha.
std::vector<Perm> example12_generators();

}  // namespace chieftain
