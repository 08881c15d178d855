#include <doctest.h>

#include <random>

#include "mixgeo/analysis.hpp"
#include "mixgeo/groups.hpp"
#include "oracles.hpp"

using namespace mixgeo;

namespace {

int involutions(const GroupTable& g) {
  int count = 0;
  for (int x = 0; x < g.order(); ++x) count += g.element_order(x) == 2;
  return count;
}

bool connected(const MixedGraph& g) {
  const auto d = distance_report(g);
  return d.diameter != DistanceReport::kInfinity;
}

}  // namespace

TEST_CASE("closure from generators") {
  Permutation shift{1, 2, 3, 4, 0}, dbl{0, 2, 4, 1, 3};
  const auto agl = closure_from_generators({shift, dbl});
  CHECK(agl.order() == 20);
  CHECK(oracle::groups_isomorphic(agl, affine(5)));
  CHECK(closure_from_generators({Permutation{0, 1, 2}}).order() == 1);
  const auto s3 = closure_from_generators({Permutation{1, 0, 2}, Permutation{1, 2, 0}});
  CHECK(s3.order() == 6);
  CHECK(oracle::groups_isomorphic(s3, symmetric(3)));
  CHECK_THROWS_AS(closure_from_generators({Permutation{1, 2, 3, 4, 5, 6, 7, 0}, Permutation{1, 0, 2, 3, 4, 5, 6, 7}}, 100),
                  Error);
}

TEST_CASE("presets") {
  const auto dic = dicyclic(12);
  CHECK(dic.order() == 12);
  CHECK(involutions(dic) == 1);
  const auto dih = dihedral(12);
  CHECK(involutions(dih) == 7);
  CHECK(affine(5).order() == 20);
  CHECK(symmetric(4).order() == 24);
  CHECK(alternating(4).order() == 12);
  CHECK(preset("cyclic:12").order() == 12);
  CHECK(preset("product:cyclic:3,sym:3").order() == 18);
  CHECK(oracle::groups_isomorphic(preset("dicyclic:12"), dic));
  CHECK(oracle::groups_isomorphic(preset("alt:4"), alternating(4)));
  CHECK_THROWS_AS(preset("bogus:3"), Error);
  CHECK_THROWS_AS(affine(6), Error);
}

TEST_CASE("catalog counts and pairwise distinctness") {
  const int counts[] = {1, 1, 1, 2, 1, 2, 1, 5, 2, 2, 1, 5, 1, 2, 1, 14, 1, 5, 1, 5, 2, 2, 1, 15};
  for (int n = 1; n <= 24; ++n) {
    CAPTURE(n);
    const auto groups = catalog(n);
    REQUIRE(static_cast<int>(groups.size()) == counts[n - 1]);
    for (std::size_t i = 0; i < groups.size(); ++i) {
      CHECK(groups[i].order() == n);
      for (std::size_t j = i + 1; j < groups.size(); ++j) CHECK_FALSE(oracle::groups_isomorphic(groups[i], groups[j]));
    }
  }
  const auto c6 = catalog(6);
  CHECK(oracle::groups_isomorphic(c6[0], symmetric(3)));
  CHECK(oracle::groups_isomorphic(c6[1], cyclic(6)));
  const auto c12 = catalog(12);
  bool has_dic = false, has_dih = false;
  for (const auto& g : c12) {
    has_dic |= oracle::groups_isomorphic(g, dicyclic(12));
    has_dih |= oracle::groups_isomorphic(g, dihedral(12));
  }
  CHECK(has_dic);
  CHECK(has_dih);
  CHECK_THROWS_AS(catalog(25), Error);
}

TEST_CASE("catalog follows the standard numbering where names pin it down") {
  CHECK(catalog(12)[0].name() == "Dic12");
  CHECK(catalog(12)[2].name() == "A4");
  CHECK(catalog(12)[3].name() == "D12");
  CHECK(catalog(20)[2].name() == "AGL(1,5)");
  CHECK(catalog(24)[2].name() == "SL(2,3)");
  CHECK(catalog(24)[11].name() == "S4");
  CHECK(oracle::groups_isomorphic(catalog(24)[11], symmetric(4)));
  CHECK(oracle::groups_isomorphic(catalog(20)[2], affine(5)));
  CHECK(oracle::groups_isomorphic(preset("small:12:3"), alternating(4)));
}

TEST_CASE("group axioms are enforced") {
  MulTable bad(2, 2);
  bad << 0, 1, 1, 1;
  CHECK_THROWS_AS(GroupTable(bad, "bad"), Error);
  MulTable nonassoc(3, 3);
  nonassoc << 0, 1, 2, 1, 0, 2, 2, 2, 0;
  CHECK_THROWS_AS(GroupTable(nonassoc, "bad"), Error);
}

TEST_CASE("group table text round trip") {
  const auto g = dicyclic(12);
  const auto text = write_group_table(g);
  CHECK(text.rfind("grp 1\nn 12\n", 0) == 0);
  const auto h = parse_group_table(text);
  CHECK(h.table() == g.table());
  CHECK_THROWS_AS(parse_group_table("grp 1\nn 2\n0 1\n1 1\n"), Error);
  CHECK_THROWS_AS(parse_group_table("grp 1\nn 2\n0 1\n"), Error);
}

TEST_CASE("homomorphisms and products") {
  const auto z6 = cyclic(6);
  const auto z3z2 = direct_product(cyclic(3), cyclic(2));
  CHECK(oracle::groups_isomorphic(z6, z3z2));
  const auto map = hom_from_generators(cyclic(6), {1}, cyclic(3), {1});
  CHECK(map.size() == 6);
  CHECK_THROWS_AS(hom_from_generators(cyclic(6), {1}, cyclic(4), {1}), Error);
}

TEST_CASE("Cayley graphs") {
  const auto s3 = symmetric(3);
  int transposition = -1, three_cycle = -1;
  for (int x = 0; x < 6; ++x) {
    if (s3.element_order(x) == 2 && transposition < 0) transposition = x;
    if (s3.element_order(x) == 3 && three_cycle < 0) three_cycle = x;
  }
  const auto s = make_connection_set(s3, {transposition, three_cycle});
  CHECK(s.r == 1);
  CHECK(s.z == 1);
  const auto g = cayley_mixed(s3, s);
  CHECK(g.order() == 6);
  CHECK(geodecity_report(g, 2).is_k_geodetic);
  CHECK(*excess_report(g, 1, 1, 2).excess == 0);

  const auto c5 = cayley_mixed(cyclic(5), make_connection_set(cyclic(5), {1, 4}));
  CHECK(c5.edges().size() == 5);
  CHECK(c5.arcs().empty());
  CHECK(geodetic_girth(c5, 5) == 2);

  CHECK_THROWS_AS(make_connection_set(cyclic(5), {0, 1}), Error);
}

TEST_CASE("connection set enumeration") {
  CHECK(connection_sets(cyclic(3), 0, 1).size() == 2);
  CHECK(connection_sets(symmetric(3), 1, 1).size() == 6);
  CHECK(connection_sets(cyclic(4), 2, 2).empty());
  CHECK(connection_sets(cyclic(3), 0, 3).empty());
  const auto all = connection_sets(dihedral(12), 2, 1);
  const auto reduced = connection_sets(dihedral(12), 2, 1, true);
  CHECK(reduced.size() < all.size());
  CHECK(std::is_sorted(all.begin(), all.end(),
                       [](const ConnectionSet& a, const ConnectionSet& b) { return a.elements < b.elements; }));
}

TEST_CASE("left multiplication is an automorphism of every Cayley graph") {
  for (int n = 3; n <= kCatalogMaxOrder; ++n) {
    for (const auto& grp : catalog(n)) {
      const auto sets = connection_sets(grp, 1, 1);
      if (sets.empty()) continue;
      const auto g = cayley_mixed(grp, sets.front());
      for (int a = 0; a < grp.order(); ++a) {
        std::vector<Vertex> perm(grp.order());
        for (int x = 0; x < grp.order(); ++x) perm[x] = grp.mul(a, x);
        CHECK(is_automorphism(g, perm));
      }
    }
  }
}

TEST_CASE("Cayley degree split and connectivity on random samples") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 23);
    const auto groups = catalog(n);
    const auto& grp = groups[rng() % groups.size()];
    std::vector<int> elems;
    for (int x = 0; x < n; ++x)
      if (x != grp.identity() && rng() % 3 == 0) elems.push_back(x);
    if (elems.empty()) continue;
    const auto s = make_connection_set(grp, elems);
    const auto g = cayley_mixed(grp, s);
    const auto p = degree_profile(g);
    CHECK(p.min_undirected == s.r);
    CHECK(p.max_undirected == s.r);
    CHECK(p.min_out == s.z);
    CHECK(p.max_out == s.z);
    CHECK(connected(g) == generates(grp, s.elements));
  }
}
