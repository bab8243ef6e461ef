#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "bierkit/poset.hpp"

namespace bierkit {

struct NamedPoset {
  std::string name;
  Poset poset;
};

// Text format:
//   poset <name>
//   elements <k>
//   <id> <rank> <label>     x k, ids 0..k-1 in any order
//   covers <m>
//   <a> <b>                 x m
//   end
// Duplicate ids, structural defects (rank skips, multiple bottoms, ...) and a
// missing trailing "end" are rejected.
NamedPoset read_poset(std::istream& in);
NamedPoset read_poset_file(const std::string& path);
void write_poset(std::ostream& out, const std::string& name, const Poset& p);
void write_poset_file(const std::string& path, const std::string& name, const Poset& p);

// One element id per line; '#' starts a comment; blank lines ignored.
std::vector<int> read_ideal_file(const std::string& path);

// One "<a> <b> <label>" triple per line, '#' comments allowed.
std::map<std::pair<int, int>, int> read_labels_file(const std::string& path);
void write_labels_file(const std::string& path, const std::map<std::pair<int, int>, int>& labels);

}  // namespace bierkit
