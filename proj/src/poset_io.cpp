#include "bierkit/poset_io.hpp"

#include <fstream>
#include <sstream>

#include "bierkit/errors.hpp"

namespace bierkit {

namespace {

std::string next_token(std::istream& in, const char* what) {
  std::string tok;
  if (!(in >> tok)) fail(errc::parse_error, std::string("unexpected end of input, expected ") + what);
  return tok;
}

long parse_int(const std::string& tok, const char* what) {
  try {
    std::size_t pos = 0;
    long v = std::stol(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    fail(errc::parse_error, std::string("expected ") + what + ", got '" + tok + "'");
  }
}

void expect_keyword(std::istream& in, const char* kw) {
  std::string tok = next_token(in, kw);
  if (tok != kw) fail(errc::parse_error, std::string("expected '") + kw + "', got '" + tok + "'");
}

}  // namespace

NamedPoset read_poset(std::istream& in) {
  expect_keyword(in, "poset");
  std::string name = next_token(in, "poset name");
  expect_keyword(in, "elements");
  long k = parse_int(next_token(in, "element count"), "element count");
  require(k >= 1, errc::parse_error, "element count must be positive");

  std::vector<PosetElement> elems(static_cast<std::size_t>(k));
  std::vector<char> seen(static_cast<std::size_t>(k), 0);
  for (long i = 0; i < k; ++i) {
    long id = parse_int(next_token(in, "element id"), "element id");
    long rank = parse_int(next_token(in, "element rank"), "element rank");
    std::string label = next_token(in, "element label");
    require(id >= 0 && id < k, errc::parse_error, "element id out of range: " + std::to_string(id));
    require(!seen[static_cast<std::size_t>(id)], errc::parse_error,
            "duplicate element id " + std::to_string(id));
    require(rank >= 0, errc::parse_error, "element rank must be nonnegative");
    seen[static_cast<std::size_t>(id)] = 1;
    elems[static_cast<std::size_t>(id)] = PosetElement{static_cast<int>(rank), std::move(label)};
  }

  expect_keyword(in, "covers");
  long m = parse_int(next_token(in, "cover count"), "cover count");
  require(m >= 0, errc::parse_error, "cover count must be nonnegative");
  std::vector<std::pair<int, int>> covers;
  covers.reserve(static_cast<std::size_t>(m));
  for (long i = 0; i < m; ++i) {
    long a = parse_int(next_token(in, "cover endpoint"), "cover endpoint");
    long b = parse_int(next_token(in, "cover endpoint"), "cover endpoint");
    require(a >= 0 && a < k && b >= 0 && b < k, errc::parse_error,
            "cover endpoint out of range: " + std::to_string(a) + " " + std::to_string(b));
    covers.emplace_back(static_cast<int>(a), static_cast<int>(b));
  }
  expect_keyword(in, "end");

  return NamedPoset{std::move(name), Poset::build(std::move(elems), std::move(covers))};
}

NamedPoset read_poset_file(const std::string& path) {
  std::ifstream in(path);
  require(static_cast<bool>(in), errc::io_error, "cannot open poset file: " + path);
  return read_poset(in);
}

void write_poset(std::ostream& out, const std::string& name, const Poset& p) {
  out << "poset " << name << "\n";
  out << "elements " << p.size() << "\n";
  for (int i = 0; i < p.size(); ++i)
    out << i << " " << p.element_rank(i) << " " << p.label(i) << "\n";
  out << "covers " << p.covers().size() << "\n";
  for (auto [a, b] : p.covers()) out << a << " " << b << "\n";
  out << "end\n";
}

void write_poset_file(const std::string& path, const std::string& name, const Poset& p) {
  std::ofstream out(path);
  require(static_cast<bool>(out), errc::io_error, "cannot write poset file: " + path);
  write_poset(out, name, p);
}

std::vector<int> read_ideal_file(const std::string& path) {
  std::ifstream in(path);
  require(static_cast<bool>(in), errc::io_error, "cannot open ideal file: " + path);
  std::vector<int> ids;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) ids.push_back(static_cast<int>(parse_int(tok, "element id")));
  }
  return ids;
}

std::map<std::pair<int, int>, int> read_labels_file(const std::string& path) {
  std::ifstream in(path);
  require(static_cast<bool>(in), errc::io_error, "cannot open labels file: " + path);
  std::map<std::pair<int, int>, int> labels;
  std::string line;
  long lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string ta, tb, tl;
    if (!(ls >> ta)) continue;
    require(static_cast<bool>(ls >> tb >> tl), errc::parse_error,
            "labels line " + std::to_string(lineno) + " needs '<a> <b> <label>'");
    std::string extra;
    require(!(ls >> extra), errc::parse_error,
            "labels line " + std::to_string(lineno) + " has trailing tokens");
    int a = static_cast<int>(parse_int(ta, "cover endpoint"));
    int b = static_cast<int>(parse_int(tb, "cover endpoint"));
    int l = static_cast<int>(parse_int(tl, "label"));
    require(!labels.count({a, b}), errc::parse_error,
            "duplicate label for cover " + ta + " -> " + tb);
    labels[{a, b}] = l;
  }
  return labels;
}

void write_labels_file(const std::string& path, const std::map<std::pair<int, int>, int>& labels) {
  std::ofstream out(path);
  require(static_cast<bool>(out), errc::io_error, "cannot write labels file: " + path);
  for (const auto& [cover, label] : labels)
    out << cover.first << " " << cover.second << " " << label << "\n";
}

}  // namespace bierkit
