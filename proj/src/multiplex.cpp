#include "bierkit/multiplex.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <string>

#include "bierkit/errors.hpp"

namespace bierkit {

namespace {

long long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

std::vector<int> mask_to_list(std::uint64_t mask) {
  std::vector<int> out;
  for (int v = 0; mask; ++v, mask >>= 1)
    if (mask & 1) out.push_back(v);
  return out;
}

std::string face_label(const std::vector<int>& verts) {
  if (verts.empty()) return "e";
  std::string s;
  for (std::size_t i = 0; i < verts.size(); ++i) {
    if (i) s += '.';
    s += std::to_string(verts[i]);
  }
  return s;
}

// Face lattice of a polytope presented by facet vertex sets: close under
// intersection, add the empty face and the full set, order by inclusion.
// Ids are assigned by (cardinality, lexicographic vertex list), so the bottom
// is id 0 and the top is the last id.
Poset lattice_from_facets(const std::vector<std::uint64_t>& facets, std::uint64_t full,
                          std::vector<std::vector<int>>* face_vertices,
                          std::vector<int>* facet_ids_out) {
  std::set<std::uint64_t> faces(facets.begin(), facets.end());
  faces.insert(full);
  faces.insert(0);
  std::vector<std::uint64_t> fresh(faces.begin(), faces.end());
  while (!fresh.empty()) {
    std::vector<std::uint64_t> next;
    for (std::uint64_t a : fresh)
      for (std::uint64_t b : faces) {
        std::uint64_t c = a & b;
        if (!faces.count(c)) {
          faces.insert(c);
          next.push_back(c);
        }
      }
    fresh = std::move(next);
  }

  std::vector<std::vector<int>> lists;
  lists.reserve(faces.size());
  for (std::uint64_t f : faces) lists.push_back(mask_to_list(f));
  std::sort(lists.begin(), lists.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });

  std::map<std::uint64_t, int> id_of;
  std::vector<std::uint64_t> mask_of(lists.size());
  for (std::size_t i = 0; i < lists.size(); ++i) {
    std::uint64_t m = 0;
    for (int v : lists[i]) m |= (std::uint64_t{1} << v);
    id_of[m] = static_cast<int>(i);
    mask_of[i] = m;
  }

  // Covers: b covers a iff a < b with no face strictly between.
  std::vector<std::pair<int, int>> covers;
  for (std::size_t b = 0; b < lists.size(); ++b) {
    std::vector<std::size_t> strictly_below;
    for (std::size_t a = 0; a < b; ++a)
      if ((mask_of[a] & mask_of[b]) == mask_of[a] && mask_of[a] != mask_of[b])
        strictly_below.push_back(a);
    for (std::size_t a : strictly_below) {
      bool maximal = true;
      for (std::size_t c : strictly_below)
        if (c != a && (mask_of[a] & mask_of[c]) == mask_of[a]) {
          maximal = false;
          break;
        }
      if (maximal) covers.emplace_back(static_cast<int>(a), static_cast<int>(b));
    }
  }

  std::vector<PosetElement> elems;
  elems.reserve(lists.size());
  for (const auto& l : lists) elems.push_back(PosetElement{-1, face_label(l)});

  if (face_vertices) *face_vertices = lists;
  if (facet_ids_out) {
    facet_ids_out->clear();
    for (std::uint64_t f : facets) facet_ids_out->push_back(id_of.at(f));
  }
  return Poset::build(std::move(elems), std::move(covers));
}

}  // namespace

std::vector<std::vector<int>> multiplex_facets(int d, int n) {
  require(d >= 2, errc::bad_parameters, "multiplex needs d >= 2");
  require(n >= d, errc::bad_parameters, "multiplex needs n >= d");
  require(n + 1 <= 62, errc::too_large, "vertex count beyond the supported range");
  std::vector<std::vector<int>> facets;
  facets.reserve(static_cast<std::size_t>(n) + 1);
  auto clamp = [&](int j) { return j < 0 ? 0 : (j > n ? n : j); };
  for (int i = 0; i <= n; ++i) {
    std::set<int> f;
    for (int j = i - d + 1; j <= i + d - 1; ++j) {
      if (j == i) continue;
      f.insert(clamp(j));
    }
    facets.emplace_back(f.begin(), f.end());
  }
  std::set<std::vector<int>> distinct(facets.begin(), facets.end());
  require(distinct.size() == facets.size(), errc::internal_check,
          "facet sets of the multiplex are not distinct");
  return facets;
}

MultiplexModel build_multiplex(int d, int n) {
  MultiplexModel m;
  m.d = d;
  m.n = n;
  m.facet_sets = multiplex_facets(d, n);

  std::vector<std::uint64_t> facet_masks;
  for (const auto& f : m.facet_sets) {
    std::uint64_t mask = 0;
    for (int v : f) mask |= (std::uint64_t{1} << v);
    facet_masks.push_back(mask);
  }
  std::uint64_t full = (std::uint64_t{1} << (n + 1)) - 1;
  m.lattice = lattice_from_facets(facet_masks, full, &m.face_vertices, &m.facet_ids);

  // Hard gate: the face numbers must match C(d+1,i+1) + (n-d) C(d-1,i).
  require(m.lattice.rank() == d + 1, errc::face_count_mismatch,
          "face lattice rank is " + std::to_string(m.lattice.rank()) + ", expected " +
              std::to_string(d + 1));
  for (int i = 0; i < d; ++i) {
    long long expect = binom(d + 1, i + 1) + static_cast<long long>(n - d) * binom(d - 1, i);
    long long got = static_cast<long long>(m.lattice.elements_of_rank(i + 1).size());
    require(got == expect, errc::face_count_mismatch,
            "f_" + std::to_string(i) + " = " + std::to_string(got) + ", expected " +
                std::to_string(expect));
  }
  require(m.lattice.elements_of_rank(0).size() == 1 &&
              m.lattice.elements_of_rank(d + 1).size() == 1,
          errc::face_count_mismatch, "face lattice must be bounded");

  // Ranks must agree with face dimension: rank = |vertices| only for vertices,
  // in general dimension + 1; vertices-per-rank was pinned by the f-vector, so
  // it remains to check that atoms below each face are exactly its vertices.
  for (int e = 0; e < m.lattice.size(); ++e) {
    std::vector<int> atoms;
    const Bitset& below = m.lattice.down_set(e);
    for (std::size_t z = below.find_first(); z != Bitset::npos; z = below.find_next(z))
      if (m.lattice.element_rank(static_cast<int>(z)) == 1) atoms.push_back(static_cast<int>(z));
    std::vector<int> averts;
    for (int a : atoms) averts.push_back(m.face_vertices[static_cast<std::size_t>(a)][0]);
    std::sort(averts.begin(), averts.end());
    require(averts == m.face_vertices[static_cast<std::size_t>(e)], errc::internal_check,
            "atoms below face " + m.lattice.label(e) + " disagree with its vertex set");
  }
  return m;
}

Poset boundary(const MultiplexModel& m) {
  int top = m.lattice.size() - 1;
  return subposet(m.lattice, IntervalSpec{m.lattice.bottom(), top, false, true}).poset;
}

std::vector<int> quad_2faces(const MultiplexModel& m) {
  std::vector<int> quads;
  const int top = m.lattice.size() - 1;
  for (int e : m.lattice.elements_of_rank(3)) {
    if (e == top) continue;  // only proper faces count as 2-faces
    if (m.face_vertices[static_cast<std::size_t>(e)].size() != 4) continue;
    int edges = 0;
    const Bitset& below = m.lattice.down_set(e);
    for (std::size_t z = below.find_first(); z != Bitset::npos; z = below.find_next(z))
      if (m.lattice.element_rank(static_cast<int>(z)) == 2) ++edges;
    if (edges == 4) quads.push_back(e);
  }

  // A polygon has no proper 2-faces at all, so the index-pattern description
  // of the quadrilaterals only applies from d = 3 on.
  if (m.d >= 3) {
    std::set<std::vector<int>> expected;
    for (int i = 0; i + m.d + 1 <= m.n; ++i)
      expected.insert({i, i + 1, i + m.d, i + m.d + 1});
    std::set<std::vector<int>> got;
    for (int q : quads) got.insert(m.face_vertices[static_cast<std::size_t>(q)]);
    require(got == expected, errc::internal_check,
            "quad 2-faces do not match the index pattern");
  }
  return quads;
}

IsoResult verify_self_dual(const MultiplexModel& m) {
  return is_isomorphic(m.lattice, dual(m.lattice, true));
}

bool verify_faces_and_quotients(const MultiplexModel& m) {
  const Poset& l = m.lattice;
  int top = l.size() - 1;
  for (int t = 0; t < l.size(); ++t) {
    int k = l.element_rank(t);
    if (k == 0) continue;
    if (k >= 1 && t != top) {
      Poset lower = subposet(l, IntervalSpec{l.bottom(), t, false, false}).poset;
      int verts = static_cast<int>(m.face_vertices[static_cast<std::size_t>(t)].size());
      Poset model = comparison_face_lattice(k - 1, verts);
      if (!is_isomorphic(lower, model).isomorphic) return false;
    }
    if (t != top) {
      Poset upper = subposet(l, IntervalSpec{t, top, false, false}).poset;
      Poset up_dual = dual(upper, true);
      int facets_above = 0;
      for (int c : l.lower_covers(top))
        if (l.leq(t, c)) ++facets_above;
      Poset model = comparison_face_lattice(m.d - k, facets_above);
      if (!is_isomorphic(up_dual, model).isomorphic) return false;
    }
  }
  return true;
}

bool verify_flag_pyramid(const MultiplexModel& m) {
  Poset pyr = polygon_face_lattice(m.n - m.d + 3);
  Poset chain2 = Poset::build({PosetElement{0, "0"}, PosetElement{1, "1"}}, {{0, 1}});
  for (int k = 0; k < m.d - 2; ++k) pyr = product(pyr, chain2);

  Poset mb = boundary(m);
  Poset pb = subposet(pyr, IntervalSpec{pyr.bottom(), *pyr.unique_top(), false, true}).poset;
  if (mb.rank() != pb.rank()) return false;

  // All 2^d rank sets.
  std::vector<int> ranks;
  for (int r = 1; r <= m.d; ++r) ranks.push_back(r);
  for (std::uint64_t sel = 0; sel < (std::uint64_t{1} << ranks.size()); ++sel) {
    std::set<int> s;
    for (std::size_t i = 0; i < ranks.size(); ++i)
      if (sel & (std::uint64_t{1} << i)) s.insert(ranks[i]);
    if (flag_f(mb, s) != flag_f(pb, s)) return false;
  }
  return true;
}

Poset polygon_face_lattice(int mgon) {
  require(mgon >= 3, errc::bad_parameters, "polygon needs at least 3 vertices");
  require(mgon <= 60, errc::too_large, "polygon beyond the supported range");
  std::vector<std::uint64_t> facets;
  for (int i = 0; i < mgon; ++i) {
    int j = (i + 1) % mgon;
    facets.push_back((std::uint64_t{1} << i) | (std::uint64_t{1} << j));
  }
  std::uint64_t full = (std::uint64_t{1} << mgon) - 1;
  return lattice_from_facets(facets, full, nullptr, nullptr);
}

Poset comparison_face_lattice(int dim, int nverts) {
  require(dim >= 0, errc::bad_parameters, "dimension must be nonnegative");
  if (dim == 0) {
    require(nverts == 1, errc::bad_parameters, "a point has one vertex");
    return Poset::build({PosetElement{0, "e"}, PosetElement{1, "0"}}, {{0, 1}});
  }
  if (dim == 1) {
    require(nverts == 2, errc::bad_parameters, "a segment has two vertices");
    return Poset::build({PosetElement{0, "e"}, PosetElement{1, "0"}, PosetElement{1, "1"},
                         PosetElement{2, "0.1"}},
                        {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
  }
  require(nverts >= dim + 1, errc::bad_parameters,
          "a " + std::to_string(dim) + "-multiplex needs at least " + std::to_string(dim + 1) +
              " vertices");
  return build_multiplex(dim, nverts - 1).lattice;
}

}  // namespace bierkit
