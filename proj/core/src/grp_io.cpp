#include "chieftain/grp_io.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

namespace chieftain {

namespace {

std::string strip(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

Perm parse_cycles(const std::string& text, std::uint32_t degree) {
  std::vector<std::uint32_t> img(degree);
  std::iota(img.begin(), img.end(), 0u);
  std::vector<bool> used(degree, false);

  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  };
  skip_ws();
  if (i == text.size()) throw ParseError("empty permutation");

  bool any_cycle = false;
  while (i < text.size()) {
    skip_ws();
    if (i == text.size()) break;
    if (text[i] != '(') throw ParseError("expected '(' in cycle notation: " + text);
    ++i;
    std::vector<std::uint32_t> cyc;
    while (true) {
      skip_ws();
      if (i == text.size()) throw ParseError("unterminated cycle: " + text);
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (text[i] == ',') {  // tolerate comma separators inside cycles
        ++i;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw ParseError("unexpected character in cycle: " + text);
      std::uint64_t v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + (text[i] - '0');
        ++i;
      }
      if (v == 0 || v > degree)
        throw ParseError("point " + std::to_string(v) + " out of range for degree " +
                         std::to_string(degree));
      const auto pt = static_cast<std::uint32_t>(v - 1);
      if (used[pt]) throw ParseError("point repeated in cycle notation: " + text);
      used[pt] = true;
      cyc.push_back(pt);
    }
    any_cycle = true;
    for (std::size_t k = 0; k < cyc.size(); ++k)
      img[cyc[k]] = cyc[(k + 1) % cyc.size()];
  }
  if (!any_cycle) throw ParseError("no cycles found in: " + text);
  return Perm::from_images(std::move(img));
}

std::string format_cycles(const Perm& p) {
  std::string out;
  std::vector<bool> seen(p.degree(), false);
  for (std::uint32_t i = 0; i < p.degree(); ++i) {
    if (seen[i] || p[i] == i) continue;
    out += '(';
    bool first = true;
    for (std::uint32_t j = i; !seen[j]; j = p[j]) {
      seen[j] = true;
      if (!first) out += ' ';
      out += std::to_string(j + 1);
      first = false;
    }
    out += ')';
  }
  if (out.empty()) out = "()";
  return out;
}

std::vector<Perm> parse_cycles_list(const std::string& text, std::uint32_t degree) {
  // Split on commas that sit between cycles, i.e. outside parentheses.
  std::vector<Perm> out;
  std::string cur;
  int depth = 0;
  for (char c : text) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      if (!strip(cur).empty()) out.push_back(parse_cycles(strip(cur), degree));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!strip(cur).empty()) out.push_back(parse_cycles(strip(cur), degree));
  return out;
}

namespace {

struct Line {
  std::string text;
  int number;
};

std::vector<Line> meaningful_lines(std::istream& in) {
  std::vector<Line> lines;
  std::string raw;
  int no = 0;
  while (std::getline(in, raw)) {
    ++no;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw = raw.substr(0, hash);
    raw = strip(raw);
    if (!raw.empty()) lines.push_back({raw, no});
  }
  return lines;
}

}  // namespace

GroupText read_grp(std::istream& in) {
  auto lines = meaningful_lines(in);
  if (lines.empty()) throw ParseError("empty .grp input");

  std::istringstream hdr(lines[0].text);
  std::string kw;
  std::uint64_t n = 0;
  hdr >> kw >> n;
  if (kw != "degree" || n == 0 || !hdr)
    throw ParseError("line " + std::to_string(lines[0].number) +
                     ": expected 'degree n' header");
  GroupText g;
  g.degree = static_cast<std::uint32_t>(n);

  for (std::size_t i = 1; i < lines.size(); ++i) {
    std::istringstream ls(lines[i].text);
    std::string tag;
    ls >> tag;
    if (tag != "gen")
      throw ParseError("line " + std::to_string(lines[i].number) + ": expected 'gen <cycles>'");
    std::string rest;
    std::getline(ls, rest);
    rest = strip(rest);
    if (rest.empty())
      throw ParseError("line " + std::to_string(lines[i].number) + ": missing cycles after 'gen'");
    g.generators.push_back(parse_cycles(rest, g.degree));
  }
  return g;
}

GroupText read_grp_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open group file: " + path);
  return read_grp(in);
}

void write_grp(std::ostream& out, const GroupText& g) {
  out << "degree " << g.degree << "\n";
  for (const auto& p : g.generators) out << "gen " << format_cycles(p) << "\n";
}

void write_grp_file(const std::string& path, const GroupText& g) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open file for writing: " + path);
  write_grp(out, g);
}

std::vector<Perm> read_sub(std::istream& in, std::uint32_t degree) {
  auto lines = meaningful_lines(in);
  std::vector<Perm> gens;
  for (const auto& line : lines) {
    std::istringstream ls(line.text);
    std::string tag;
    ls >> tag;
    if (tag == "degree") {
      std::uint64_t n = 0;
      ls >> n;
      if (n != degree)
        throw ParseError("subgroup file degree " + std::to_string(n) +
                         " does not match parent degree " + std::to_string(degree));
      continue;
    }
    if (tag != "gen")
      throw ParseError("line " + std::to_string(line.number) + ": expected 'gen <cycles>'");
    std::string rest;
    std::getline(ls, rest);
    gens.push_back(parse_cycles(strip(rest), degree));
  }
  return gens;
}

std::vector<Perm> read_sub_file(const std::string& path, std::uint32_t degree) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open subgroup file: " + path);
  return read_sub(in, degree);
}

}  // namespace chieftain
