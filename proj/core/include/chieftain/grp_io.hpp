#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "chieftain/perm.hpp"

namespace chieftain {

/// Textual group description: a degree plus generators.
struct GroupText {
  std::uint32_t degree = 0;
  std::vector<Perm> generators;
};

/// Disjoint-cycle notation with 1-based points: "(1 2 3)(4 5)"; the
/// identity is written "()".
Perm parse_cycles(const std::string& text, std::uint32_t degree);
std::string format_cycles(const Perm& p);

/// Comma-separated list of cycle strings, e.g. "(1 2 3),(4 5)".
std::vector<Perm> parse_cycles_list(const std::string& text, std::uint32_t degree);

/// .grp format: first meaningful line `degree n`, then `gen <cycles>`
/// lines. Blank lines and `#` comments are ignored.
GroupText read_grp(std::istream& in);
GroupText read_grp_file(const std::string& path);
void write_grp(std::ostream& out, const GroupText& g);
void write_grp_file(const std::string& path, const GroupText& g);

/// .sub format: `gen <cycles>` lines for a subgroup of a known parent;
/// an optional leading `degree n` line must match the parent degree.
std::vector<Perm> read_sub(std::istream& in, std::uint32_t degree);
std::vector<Perm> read_sub_file(const std::string& path, std::uint32_t degree);

}  // namespace chieftain
