#include "bierkit/verify.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "bierkit/errors.hpp"

namespace bierkit {

EulerianReport is_eulerian(const Poset& p) {
  require(p.has_bottom() && p.unique_top().has_value(), errc::not_bounded,
          "the balance condition is defined for bounded posets");
  const int n = p.size();
  Bitset even(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    if (p.element_rank(i) % 2 == 0) even.set(static_cast<std::size_t>(i));
  for (int a = 0; a < n; ++a) {
    const Bitset& up = p.up_set(a);
    for (std::size_t b = up.find_first(); b != Bitset::npos; b = up.find_next(b)) {
      if (static_cast<int>(b) == a) continue;
      Bitset interval = up & p.down_set(static_cast<int>(b));
      if (2 * (interval & even).count() != interval.count())
        return {false, {a, static_cast<int>(b)}};
    }
  }
  return {};
}

namespace {

constexpr std::size_t kMaxFaces = 200000;

// every face of the complex, grouped and indexed by dimension
struct FaceTable {
  std::vector<std::vector<std::vector<int>>> by_dim;
  std::vector<std::map<std::vector<int>, int>> index;
  int dim = -1;
};

FaceTable enumerate_faces(const std::vector<std::vector<int>>& facets) {
  FaceTable t;
  for (const auto& f : facets) {
    require(f.size() <= 24, errc::too_large, "facet too large for subset enumeration");
    t.dim = std::max(t.dim, static_cast<int>(f.size()) - 1);
  }
  if (t.dim < 0) return t;
  t.by_dim.resize(static_cast<std::size_t>(t.dim) + 1);
  std::set<std::vector<int>> seen;
  for (const auto& facet : facets) {
    std::vector<int> verts = facet;
    std::sort(verts.begin(), verts.end());
    const std::size_t m = verts.size();
    for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
      std::vector<int> face;
      for (std::size_t i = 0; i < m; ++i)
        if (mask & (1u << i)) face.push_back(verts[i]);
      if (seen.insert(face).second) {
        require(seen.size() <= kMaxFaces, errc::too_large, "complex has too many faces");
        t.by_dim[face.size() - 1].push_back(std::move(face));
      }
    }
  }
  t.index.resize(static_cast<std::size_t>(t.dim) + 1);
  for (int k = 0; k <= t.dim; ++k) {
    auto& level = t.by_dim[static_cast<std::size_t>(k)];
    std::sort(level.begin(), level.end());
    for (std::size_t i = 0; i < level.size(); ++i)
      t.index[static_cast<std::size_t>(k)][level[i]] = static_cast<int>(i);
  }
  return t;
}

// GF(2) rank of the boundary map C_k -> C_{k-1}; k = 0 is the augmentation
// onto the empty face.
long long boundary_rank(const FaceTable& t, int k) {
  if (k > t.dim) return 0;
  const auto& cols = t.by_dim[static_cast<std::size_t>(k)];
  if (cols.empty()) return 0;
  const std::size_t rows = (k == 0) ? 1 : t.by_dim[static_cast<std::size_t>(k) - 1].size();
  std::vector<Bitset> pivots;
  std::vector<std::size_t> pivot_row;
  long long rank = 0;
  for (const auto& face : cols) {
    Bitset col(rows);
    if (k == 0) {
      col.set(0);
    } else {
      std::vector<int> sub(face.begin() + 1, face.end());
      for (std::size_t drop = 0; drop < face.size(); ++drop) {
        col.set(static_cast<std::size_t>(t.index[static_cast<std::size_t>(k) - 1].at(sub)));
        if (drop + 1 < face.size()) sub[drop] = face[drop];
      }
    }
    for (std::size_t i = 0; i < pivots.size(); ++i)
      if (col.test(pivot_row[i])) col ^= pivots[i];
    std::size_t lead = col.find_first();
    if (lead != Bitset::npos) {
      pivots.push_back(std::move(col));
      pivot_row.push_back(lead);
      ++rank;
    }
  }
  return rank;
}

std::vector<long long> betti_from_table(const FaceTable& t) {
  if (t.dim < 0) return {};
  std::vector<long long> rank(static_cast<std::size_t>(t.dim) + 2, 0);
  for (int k = 0; k <= t.dim; ++k) rank[static_cast<std::size_t>(k)] = boundary_rank(t, k);
  std::vector<long long> betti(static_cast<std::size_t>(t.dim) + 1, 0);
  for (int k = 0; k <= t.dim; ++k) {
    auto uk = static_cast<std::size_t>(k);
    betti[uk] = static_cast<long long>(t.by_dim[uk].size()) - rank[uk] - rank[uk + 1];
  }
  return betti;
}

std::string face_name(const std::vector<int>& face) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < face.size(); ++i) os << (i ? "," : "") << face[i];
  os << "}";
  return os.str();
}

// facets of the link of `face`: maximal sets F - face over facets F
// containing face
std::vector<std::vector<int>> link_facets(const std::vector<std::vector<int>>& facets,
                                          const std::vector<int>& face) {
  std::set<std::vector<int>> cand;
  for (const auto& f : facets) {
    std::vector<int> sorted = f;
    std::sort(sorted.begin(), sorted.end());
    if (!std::includes(sorted.begin(), sorted.end(), face.begin(), face.end())) continue;
    std::vector<int> rest;
    std::set_difference(sorted.begin(), sorted.end(), face.begin(), face.end(),
                        std::back_inserter(rest));
    cand.insert(std::move(rest));
  }
  std::vector<std::vector<int>> out;
  for (const auto& c : cand) {
    bool maximal = true;
    for (const auto& other : cand)
      if (&other != &c && other.size() > c.size() &&
          std::includes(other.begin(), other.end(), c.begin(), c.end()))
        maximal = false;
    if (maximal) out.push_back(c);
  }
  return out;
}

}  // namespace

std::vector<long long> betti_gf2(const SimplicialComplexModel& complex) {
  return betti_from_table(enumerate_faces(complex.facets));
}

bool is_sphere_profile(const std::vector<long long>& betti, int d) {
  if (d < 0) return betti.empty();
  if (static_cast<int>(betti.size()) != d + 1) return false;
  for (int k = 0; k < d; ++k)
    if (betti[static_cast<std::size_t>(k)] != 0) return false;
  return betti[static_cast<std::size_t>(d)] == 1;
}

GorensteinReport is_gorenstein_star(const Poset& p, int link_dim_cap, bool check_all_links) {
  auto balance = is_eulerian(adjoin_top(p, "1"));
  if (!balance.ok) {
    return {false, "poset with adjoined top is not balanced at interval [" +
                       std::to_string(balance.witness.first) + ", " +
                       std::to_string(balance.witness.second) + "]"};
  }
  SimplicialComplexModel complex = order_complex(p, /*strip_bottom=*/true);
  const int dim = p.rank() - 1;
  require(dim >= 0, errc::bad_parameters, "poset has no proper part");
  for (const auto& f : complex.facets)
    if (static_cast<int>(f.size()) != dim + 1)
      return {false, "chain complex is not pure: facet " + face_name(f) + " has dimension " +
                         std::to_string(f.size() - 1) + ", expected " + std::to_string(dim)};

  FaceTable table = enumerate_faces(complex.facets);
  if (!is_sphere_profile(betti_from_table(table), dim))
    return {false, "chain complex does not have the Betti profile of a sphere of dimension " +
                       std::to_string(dim)};

  const int cap = check_all_links ? dim : std::min(dim, link_dim_cap);
  for (int k = 0; k <= cap; ++k) {
    for (const auto& face : table.by_dim[static_cast<std::size_t>(k)]) {
      const int expected = dim - k - 1;
      auto link = link_facets(complex.facets, face);
      bool link_ok;
      if (link.size() == 1 && link[0].empty())
        link_ok = (expected == -1);
      else
        link_ok = is_sphere_profile(betti_from_table(enumerate_faces(link)), expected);
      if (!link_ok)
        return {false, "link of face " + face_name(face) +
                           " is not a homology sphere of dimension " + std::to_string(expected)};
    }
  }
  return {};
}

}  // namespace bierkit
