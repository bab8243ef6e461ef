#pragma once

#include <string>
#include <utility>
#include <vector>

#include "bierkit/poset.hpp"

namespace bierkit {

// Balance condition on a bounded graded poset: every closed interval [a,b]
// with a < b holds as many elements of even rank as of odd rank.  On failure
// `witness` names the first offending interval (ids in p).
struct EulerianReport {
  bool ok = true;
  std::pair<int, int> witness{-1, -1};
};
EulerianReport is_eulerian(const Poset& p);

// Reduced Betti numbers over GF(2), indexed by dimension 0..dim(K).  Both
// the void complex and the complex consisting of only the empty face give an
// empty vector.
std::vector<long long> betti_gf2(const SimplicialComplexModel& complex);

// True when `betti` is the reduced profile of a d-sphere: a single 1 in
// dimension d, zero elsewhere, and no dimensions above d.  d = -1 accepts
// exactly the empty vector.
bool is_sphere_profile(const std::vector<long long>& betti, int d);

struct GorensteinReport {
  bool ok = true;
  std::string detail;
};

// Homology-sphere surrogate for a poset p with bottom: adjoin_top(p) must be
// Eulerian, the order complex of p minus its bottom must have the Betti
// profile of a sphere of dimension rank(p)-1, and the link of every face of
// dimension <= link_dim_cap (every face when check_all_links is set) must
// have the sphere profile of its complementary dimension.
GorensteinReport is_gorenstein_star(const Poset& p, int link_dim_cap = 2,
                                    bool check_all_links = false);

}  // namespace bierkit
