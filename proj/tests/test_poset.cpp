#include "doctest.h"

#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "bierkit/errors.hpp"
#include "bierkit/poset.hpp"
#include "bierkit/poset_io.hpp"

using namespace bierkit;

namespace {

// Boolean lattice on n atoms, elements indexed by subset bitmask.
Poset boolean_lattice(int n) {
  std::vector<PosetElement> elems;
  std::vector<std::pair<int, int>> covers;
  for (int mask = 0; mask < (1 << n); ++mask) {
    elems.push_back(PosetElement{-1, "s" + std::to_string(mask)});
    for (int i = 0; i < n; ++i)
      if (!(mask & (1 << i))) covers.emplace_back(mask, mask | (1 << i));
  }
  return Poset::build(std::move(elems), std::move(covers));
}

Poset chain(int len) {  // len covers, len + 1 elements
  std::vector<PosetElement> elems;
  std::vector<std::pair<int, int>> covers;
  for (int i = 0; i <= len; ++i) {
    elems.push_back(PosetElement{-1, "c" + std::to_string(i)});
    if (i) covers.emplace_back(i - 1, i);
  }
  return Poset::build(std::move(elems), std::move(covers));
}

}  // namespace

TEST_CASE("boolean lattice basics") {
  Poset b3 = boolean_lattice(3);
  CHECK(b3.size() == 8);
  CHECK(b3.rank() == 3);
  CHECK(b3.elements_of_rank(0).size() == 1);
  CHECK(b3.elements_of_rank(1).size() == 3);
  CHECK(b3.elements_of_rank(2).size() == 3);
  CHECK(b3.elements_of_rank(3).size() == 1);
  CHECK(b3.has_bottom());
  CHECK(b3.bottom() == 0);
  REQUIRE(b3.unique_top().has_value());
  CHECK(*b3.unique_top() == 7);
  CHECK(b3.covers().size() == 12);

  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      CHECK(b3.leq(a, b) == ((a & b) == a));
      CHECK(b3.less(a, b) == (a != b && (a & b) == a));
    }
  CHECK(b3.up_set(0).count() == 8);
  CHECK(b3.down_set(7).count() == 8);
  CHECK(b3.down_set(3).count() == 4);
  CHECK(b3.upper_covers(0).size() == 3);
  CHECK(b3.lower_covers(5).size() == 2);
  CHECK(b3.label(6) == "s6");
}

TEST_CASE("meets joins and the semilattice check") {
  Poset b3 = boolean_lattice(3);
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      auto m = meet(b3, a, b);
      auto j = join(b3, a, b);
      REQUIRE(m.has_value());
      REQUIRE(j.has_value());
      CHECK(*m == (a & b));
      CHECK(*j == (a | b));
    }
  CHECK(is_meet_semilattice(b3).ok);

  // two atoms under two coatoms: the coatoms have no meet
  Poset crossed = Poset::build({PosetElement{-1, "0"}, PosetElement{-1, "a"},
                                PosetElement{-1, "b"}, PosetElement{-1, "x"},
                                PosetElement{-1, "y"}},
                               {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}});
  CHECK(!meet(crossed, 3, 4).has_value());
  CHECK(!join(crossed, 1, 2).has_value());
  MeetSemilatticeReport rep = is_meet_semilattice(crossed);
  CHECK(!rep.ok);
  std::set<int> witness{rep.witness.first, rep.witness.second};
  CHECK(witness == std::set<int>{3, 4});
}

TEST_CASE("construction validation") {
  CHECK_THROWS_AS(Poset::build({}, {}), Error);
  // self-cover
  CHECK_THROWS_AS(Poset::build({PosetElement{-1, "x"}}, {{0, 0}}), Error);
  // endpoint out of range
  CHECK_THROWS_AS(Poset::build({PosetElement{-1, "x"}}, {{0, 1}}), Error);
  // duplicate cover
  CHECK_THROWS_AS(Poset::build({PosetElement{-1, "a"}, PosetElement{-1, "b"}}, {{0, 1}, {0, 1}}),
                  Error);
  // cover jumping two ranks
  CHECK_THROWS_AS(Poset::build({PosetElement{-1, "a"}, PosetElement{-1, "b"},
                                PosetElement{-1, "c"}},
                               {{0, 1}, {1, 2}, {0, 2}}),
                  Error);
  // two minimal elements need require_bottom = false
  std::vector<PosetElement> vee{PosetElement{-1, "a"}, PosetElement{-1, "b"},
                                PosetElement{-1, "t"}};
  std::vector<std::pair<int, int>> vee_covers{{0, 2}, {1, 2}};
  CHECK_THROWS_AS(Poset::build(vee, vee_covers), Error);
  Poset raw = Poset::build(vee, vee_covers, false);
  CHECK(!raw.has_bottom());
  CHECK_THROWS_AS((void)raw.bottom(), Error);
  CHECK(raw.minimal_elements() == std::vector<int>{0, 1});
  CHECK(raw.maximal_elements() == std::vector<int>{2});

  // explicit ranks are validated, not trusted
  CHECK_THROWS_AS(Poset::build({PosetElement{0, "a"}, PosetElement{2, "b"}}, {{0, 1}}), Error);
  Poset explicit_ranks = Poset::build({PosetElement{0, "a"}, PosetElement{1, "b"}}, {{0, 1}});
  CHECK(explicit_ranks.rank() == 1);
}

TEST_CASE("dual flips covers and keeps ids") {
  Poset b3 = boolean_lattice(3);
  Poset d = dual(b3);
  CHECK(d.size() == 8);
  CHECK(d.rank() == 3);
  for (int i = 0; i < 8; ++i) {
    CHECK(d.label(i) == b3.label(i));
    CHECK(d.element_rank(i) == 3 - b3.element_rank(i));
  }
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) CHECK(d.leq(a, b) == b3.leq(b, a));
  CHECK(is_isomorphic(b3, d).isomorphic);

  // two maximal elements: no dual bottom unless allowed as raw
  Poset fork = Poset::build({PosetElement{-1, "0"}, PosetElement{-1, "a"}, PosetElement{-1, "b"}},
                            {{0, 1}, {0, 2}});
  CHECK_THROWS_AS((void)dual(fork, true), Error);
  Poset raw = dual(fork);
  CHECK(!raw.has_bottom());
  CHECK(raw.maximal_elements() == std::vector<int>{0});
}

TEST_CASE("interval subposets") {
  Poset b3 = boolean_lattice(3);

  SubposetResult up = subposet(b3, IntervalSpec{1, 7, false, false});
  CHECK(up.poset.size() == 4);
  CHECK(up.poset.rank() == 2);
  CHECK(is_isomorphic(up.poset, boolean_lattice(2)).isomorphic);
  for (std::size_t i = 0; i < up.original_ids.size(); ++i)
    CHECK(up.poset.label(static_cast<int>(i)) == b3.label(up.original_ids[i]));

  SubposetResult open_below = subposet(b3, IntervalSpec{1, 7, true, false});
  CHECK(open_below.poset.size() == 3);
  CHECK(!open_below.poset.has_bottom());
  CHECK(open_below.poset.rank() == 1);

  SubposetResult strict = subposet(b3, IntervalSpec{0, 7, true, true});
  CHECK(strict.poset.size() == 6);

  SubposetResult down = subposet(b3, IntervalSpec{-1, 3, false, false});
  CHECK(down.poset.size() == 4);
  CHECK(down.poset.has_bottom());

  SubposetResult all = subposet(b3, IntervalSpec{});
  CHECK(all.poset.size() == 8);

  CHECK_THROWS_AS(subposet(b3, IntervalSpec{1, 2, false, false}), Error);  // incomparable
  CHECK_THROWS_AS(subposet(b3, IntervalSpec{1, 1, true, false}), Error);   // empty selection
}

TEST_CASE("products") {
  Poset c1 = chain(1);
  Poset square = product(c1, c1);
  CHECK(square.size() == 4);
  CHECK(square.rank() == 2);
  CHECK(square.covers().size() == 4);
  CHECK(is_isomorphic(square, boolean_lattice(2)).isomorphic);

  Poset b3_like = product(square, c1);
  CHECK(is_isomorphic(b3_like, boolean_lattice(3)).isomorphic);

  // id layout: (a, b) -> a * q.size() + b
  Poset c2 = chain(2);
  Poset prod = product(c2, c1);
  CHECK(prod.size() == 6);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 2; ++b)
      CHECK(prod.element_rank(a * 2 + b) == a + b);
}

TEST_CASE("adjoining bounds") {
  Poset fork = Poset::build({PosetElement{-1, "0"}, PosetElement{-1, "a"}, PosetElement{-1, "b"}},
                            {{0, 1}, {0, 2}});
  Poset diamond = adjoin_top(fork, "1");
  CHECK(diamond.size() == 4);
  CHECK(diamond.rank() == 2);
  REQUIRE(diamond.unique_top().has_value());
  CHECK(*diamond.unique_top() == 3);
  CHECK(diamond.label(3) == "1");
  CHECK(diamond.lower_covers(3).size() == 2);

  Poset two = Poset::build({PosetElement{-1, "a"}, PosetElement{-1, "b"}}, {}, false);
  Poset vee = adjoin_bottom(two, "base");
  CHECK(vee.size() == 3);
  CHECK(vee.has_bottom());
  CHECK(vee.label(vee.bottom()) == "base");
  CHECK(vee.upper_covers(vee.bottom()).size() == 2);
}

TEST_CASE("isomorphism finds maps and rejects lookalikes") {
  Poset b3 = boolean_lattice(3);
  Poset cube = product(product(chain(1), chain(1)), chain(1));
  IsoResult iso = is_isomorphic(b3, cube);
  REQUIRE(iso.isomorphic);
  REQUIRE(iso.mapping.size() == 8);
  // the mapping must carry covers to covers
  for (auto [a, b] : b3.covers()) {
    bool found = false;
    for (int w : cube.upper_covers(iso.mapping[static_cast<std::size_t>(a)]))
      found = found || w == iso.mapping[static_cast<std::size_t>(b)];
    CHECK(found);
  }

  // same size, ranks and cover degrees; only the incidence pattern differs
  auto rank2_lattice = [](const std::vector<std::vector<int>>& edges) {
    std::vector<PosetElement> elems{PosetElement{-1, "bot"}};
    std::vector<std::pair<int, int>> covers;
    for (int v = 1; v <= 4; ++v) {
      elems.push_back(PosetElement{-1, "v" + std::to_string(v)});
      covers.emplace_back(0, v);
    }
    int id = 5;
    for (const auto& e : edges) {
      elems.push_back(PosetElement{-1, "e" + std::to_string(id)});
      covers.emplace_back(e[0], id);
      covers.emplace_back(e[1], id);
      ++id;
    }
    elems.push_back(PosetElement{-1, "top"});
    for (int e = 5; e < id; ++e) covers.emplace_back(e, id);
    return Poset::build(std::move(elems), std::move(covers));
  };
  Poset cycle = rank2_lattice({{1, 2}, {2, 3}, {3, 4}, {4, 1}});
  Poset doubled = rank2_lattice({{1, 2}, {1, 2}, {3, 4}, {3, 4}});
  CHECK(!is_isomorphic(cycle, doubled).isomorphic);
  CHECK(!is_isomorphic(b3, boolean_lattice(2)).isomorphic);

  CHECK_THROWS_AS(is_isomorphic(b3, cube, 4), Error);
}

TEST_CASE("order complex and flag counts") {
  Poset b3 = boolean_lattice(3);
  SimplicialComplexModel full = order_complex(b3, false);
  CHECK(full.facets.size() == 6);
  for (const auto& f : full.facets) CHECK(f.size() == 4);
  SimplicialComplexModel stripped = order_complex(b3, true);
  CHECK(stripped.facets.size() == 6);
  for (const auto& f : stripped.facets) CHECK(f.size() == 3);

  CHECK(flag_f(b3, {}) == 1);
  CHECK(flag_f(b3, {1}) == 3);
  CHECK(flag_f(b3, {2}) == 3);
  CHECK(flag_f(b3, {1, 2}) == 6);
  CHECK(flag_f(b3, {1, 2, 3}) == 6);
  CHECK(flag_f(b3, {1, 3}) == 3);
  CHECK_THROWS_AS(flag_f(b3, {4}), Error);
  CHECK_THROWS_AS(flag_f(b3, {0}), Error);
}

TEST_CASE("poset files round trip") {
  Poset b3 = boolean_lattice(3);
  std::ostringstream out;
  write_poset(out, "b3", b3);
  std::istringstream in(out.str());
  NamedPoset back = read_poset(in);
  CHECK(back.name == "b3");
  REQUIRE(back.poset.size() == b3.size());
  for (int i = 0; i < 8; ++i) {
    CHECK(back.poset.label(i) == b3.label(i));
    CHECK(back.poset.element_rank(i) == b3.element_rank(i));
  }
  CHECK(back.poset.covers() == b3.covers());

  std::istringstream bad1("poset x elements 0 covers 0 end");
  CHECK_THROWS_AS(read_poset(bad1), Error);
  std::istringstream bad2("poset x elements 2 0 0 a 0 0 b covers 0 end");
  CHECK_THROWS_AS(read_poset(bad2), Error);  // duplicate id
  std::istringstream bad3("poset x elements 1 0 0 a covers 1 0 9 end");
  CHECK_THROWS_AS(read_poset(bad3), Error);  // endpoint out of range
  std::istringstream bad4("poset x elements 1 0 0 a covers 0");
  CHECK_THROWS_AS(read_poset(bad4), Error);  // truncated input

  const std::string dir = "io_scratch_";
  {
    std::ofstream ideal(dir + "ideal.txt");
    ideal << "0 1 # the bottom and one atom\n# full-line comment\n3\n";
  }
  CHECK(read_ideal_file(dir + "ideal.txt") == std::vector<int>{0, 1, 3});
  CHECK_THROWS_AS(read_ideal_file(dir + "missing.txt"), Error);

  std::map<std::pair<int, int>, int> labels{{{0, 1}, 5}, {{1, 3}, -2}};
  write_labels_file(dir + "labels.txt", labels);
  CHECK(read_labels_file(dir + "labels.txt") == labels);
  {
    std::ofstream bad(dir + "labels_bad.txt");
    bad << "0 1 2 3\n";
  }
  CHECK_THROWS_AS(read_labels_file(dir + "labels_bad.txt"), Error);
}
