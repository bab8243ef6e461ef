#pragma once

#include <vector>

#include "bierkit/poset.hpp"

namespace bierkit {

// Combinatorial model of the multiplex M^{d,n} (2 <= d <= n): vertices
// x_0..x_n, facet i spanned by x_{i-d+1},..,x_{i-1},x_{i+1},..,x_{i+d-1} with
// indices clamped into [0, n] and set semantics.  The face lattice is the
// closure of the facet vertex sets under intersection, ordered by inclusion,
// with the empty face as bottom and the full vertex set as top (always the
// last element id).  Construction cross-checks the face numbers against
//   f_i = C(d+1, i+1) + (n-d) C(d-1, i)
// and fails hard (face_count_mismatch) on any disagreement.
struct MultiplexModel {
  int d = 0, n = 0;
  std::vector<std::vector<int>> facet_sets;      // n+1 sorted vertex lists
  Poset lattice;                                 // face lattice including the top
  std::vector<std::vector<int>> face_vertices;   // per element id, sorted vertex list
  std::vector<int> facet_ids;                    // lattice id of facet i, aligned with facet_sets
};

std::vector<std::vector<int>> multiplex_facets(int d, int n);
MultiplexModel build_multiplex(int d, int n);

// The boundary poset: the lattice minus its top.  Ids coincide with the
// lattice's ids (the top is the last id), so faces keep their identities.
Poset boundary(const MultiplexModel& m);

// Lattice ids of the quadrilateral 2-faces (rank 3, four vertices, four
// edges), cross-checked against the index pattern {x_i, x_{i+1}, x_{i+d},
// x_{i+d+1}}, 0 <= i <= n-d-1.
std::vector<int> quad_2faces(const MultiplexModel& m);

IsoResult verify_self_dual(const MultiplexModel& m);

// Every lower interval [0,t] must be a multiplex face lattice and every upper
// interval [t,1] must dualize to one, with parameters read off from the atom
// and coatom counts.
bool verify_faces_and_quotients(const MultiplexModel& m);

// Flag f-vector comparison against the (d-2)-fold pyramid over the
// (n-d+3)-gon, built at the lattice level as polygon x (2-chain)^(d-2);
// compared over every rank set S subseteq {1..d} on the boundary posets.
bool verify_flag_pyramid(const MultiplexModel& m);

// Face lattice (with top) of the m-gon, m >= 3.
Poset polygon_face_lattice(int m);

// Face lattice (with top) of a dim-dimensional multiplex on nverts vertices;
// handles the degenerate dimensions 0 (point) and 1 (segment) that the facet
// pattern does not reach.
Poset comparison_face_lattice(int dim, int nverts);

}  // namespace bierkit
