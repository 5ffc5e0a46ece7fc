#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace chieftain {

/// Resource limits shared by every operation. All computations are
/// desk-scale and exact; anything that would exceed a cap fails loudly
/// instead of degrading to sampling.
struct Config {
  /// Operations that need a full element table (normalizers, subgroup
  /// enumeration, conjugacy classes, lattices) refuse larger groups.
  std::uint64_t max_order = 20000;

  /// Coset actions (quotients, induced factor actions) refuse to act on
  /// more points than this.
  std::uint32_t max_degree = 20000;

  /// all_maximal_chains refuses lattices with more chains than this.
  std::uint64_t max_chains = 1000000;

  /// Full subgroup-lattice scans (supplement quantifiers, Frattini sweeps,
  /// quasinormality against every subgroup) refuse groups above this order;
  /// they blow up much earlier than element tables do.
  std::uint64_t max_scan_order = 2000;

  /// Hard ceiling on the number of subgroups a scan may collect.
  std::uint64_t max_subgroups = 200000;
};

/// A requested computation does not fit under the configured caps.
/// Callers translate this into exit code 3; it is never silent.
class CapExceeded : public std::runtime_error {
public:
  explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed textual input (.grp / .sub / cycle strings / manifests).
class ParseError : public std::runtime_error {
public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// A precondition on group-theoretic arguments failed (degree mismatch,
/// generator outside the parent group, quotient by a non-normal subgroup).
class DomainError : public std::runtime_error {
public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace chieftain
