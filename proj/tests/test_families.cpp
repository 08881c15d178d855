#include <doctest.h>

#include "mixgeo/analysis.hpp"
#include "mixgeo/bounds.hpp"
#include "mixgeo/families.hpp"
#include "oracles.hpp"

using namespace mixgeo;
using Pairs = std::vector<VertexPair>;

namespace {

std::uint64_t falling(int d, int k) {
  std::uint64_t v = 1;
  for (int i = 0; i < k; ++i) v *= static_cast<std::uint64_t>(d + k - i);
  return v;
}

}  // namespace

TEST_CASE("permutation digraphs") {
  const auto p22 = permutation_digraph(2, 2);
  CHECK(p22.order() == 12);
  CHECK(p22.arcs().size() == 24);
  CHECK(geodetic_girth(p22, 4) == 2);
  CHECK(permutation_digraph(2, 3).order() == 60);
  CHECK(permutation_digraph(3, 2).order() == 20);
  CHECK(permutation_label(2, 2, 0) == std::vector<int>{0, 1});
  for (int d = 2; d <= 4; ++d)
    for (int k = 2; k <= 4; ++k) {
      const auto g = permutation_digraph(d, k);
      CHECK(static_cast<std::uint64_t>(g.order()) == falling(d, k));
      CHECK(regularity_report(g, 0, d).totally_regular);
      CHECK(g.edges().empty());
      CHECK(geodetic_girth(g, k + 1) == k);
    }
  CHECK_THROWS_AS(permutation_digraph(6, 6, 1000), Error);
}

TEST_CASE("permutation digraph arcs follow the shift rule") {
  const int d = 2, k = 3;
  const auto g = permutation_digraph(d, k);
  for (const auto& a : g.arcs()) {
    const auto x = permutation_label(d, k, a.tail);
    const auto y = permutation_label(d, k, a.head);
    for (int i = 0; i + 1 < k; ++i) CHECK(y[i] == x[i + 1]);
    CHECK(std::find(x.begin(), x.end(), y.back()) == x.end());
  }
}

TEST_CASE("mixed Kautz graphs are Moore graphs") {
  const int order[] = {6, 12, 20, 30, 42};
  for (int z = 1; z <= 5; ++z) {
    const auto g = kautz_mixed(z);
    CHECK(g.order() == order[z - 1]);
    CHECK(static_cast<std::uint64_t>(g.order()) == moore_mixed(1, z, 2));
    CHECK(*excess_report(g, 1, z, 2).excess == 0);
    CHECK(distance_report(g).diameter == 2);
  }
}

TEST_CASE("cycles") {
  const auto d7 = cycle(7, true);
  for (int k = 1; k <= 6; ++k) CHECK(geodecity_report(d7, k).is_k_geodetic);
  const auto c9 = cycle(9, false);
  CHECK(geodecity_report(c9, 4).is_k_geodetic);
  CHECK(distance_report(c9).diameter == 4);
  CHECK(moore_mixed(2, 0, 4) == 9);
  const auto d3 = cycle(3, true);
  CHECK(distance_report(d3).diameter == 2);
  CHECK(*defect_report(d3, 0, 1, 2).defect == 0);
  CHECK(undirected_girth(petersen()) == 5);
  CHECK(undirected_girth(c9) == 9);
}

TEST_CASE("every fixture passes its self-check") {
  CHECK(fixture_catalog().size() == 12);
  for (const auto& info : fixture_catalog()) {
    CAPTURE(info.name);
    const auto g = fixture(info.name);
    const auto check = verify_fixture(g, info);
    CHECK(check.ok);
    CHECK(g.order() == info.n);
    if (info.tag == FixtureTagKind::Excess) {
      CHECK(oracle::is_k_geodetic(g, info.k));
      CHECK(static_cast<std::uint64_t>(g.order()) == moore_mixed(info.r, info.z, info.k) + info.value);
    } else {
      CHECK(static_cast<std::uint64_t>(g.order()) + info.value == moore_mixed(info.r, info.z, info.k));
    }
  }
  CHECK(fixture_info("fig3_excess_one").value == 1);
  CHECK(fixture("fig_d3k2n16").order() == 16);
  CHECK(fixture("fig_r1z1k4").order() == 30);
  CHECK_THROWS_AS(fixture("no_such_graph"), Error);
}

TEST_CASE("a tampered fixture fails verification") {
  const auto& info = fixture_info("fig3_excess_one");
  const auto g = fixture(info.name);
  auto arcs = g.arc_pairs();
  arcs.pop_back();
  CHECK_FALSE(verify_fixture(build_graph(g.order(), g.edge_pairs(), arcs), info).ok);
}

TEST_CASE("truncation construction") {
  const auto g = truncate_compose(cycle(5, false), permutation_digraph(5, 2), 1, 2);
  CHECK(g.order() == 210);
  CHECK(regularity_report(g, 2, 1).out_regular);
  const auto p = degree_profile(g);
  CHECK(p.min_undirected == 2);
  CHECK(p.max_undirected == 2);
  CHECK(p.min_out == 1);
  CHECK(p.max_out == 1);
  CHECK(geodecity_report(g, 2).is_k_geodetic);
  CHECK_THROWS_AS(truncate_compose(cycle(5, false), permutation_digraph(4, 2), 1, 2), Error);
  CHECK_THROWS_AS(truncate_compose(cycle(4, false), permutation_digraph(4, 2), 1, 2), Error);
}

TEST_CASE("truncation of the Petersen graph") {
  const auto g = truncate_compose(petersen(), permutation_digraph(10, 2), 1, 2);
  CHECK(g.order() == 1320);
  CHECK(geodecity_report(g, 2).is_k_geodetic);
}

TEST_CASE("reducing geodecity") {
  const auto odd = reduce_k(fixture("fig_r1z1k4"), 3);
  CHECK(odd.order() == 28);
  CHECK(geodecity_report(odd, 3).is_k_geodetic);
  const auto even = reduce_k(cycle(9, false), 3);
  CHECK(even.order() == 8);
  CHECK(geodecity_report(even, 3).is_k_geodetic);
  const auto dig = reduce_k(permutation_digraph(2, 3), 2);
  CHECK(dig.order() == 59);
  CHECK(dig.edges().empty());
  CHECK(geodecity_report(dig, 2).is_k_geodetic);
  for (const char* name : {"fig_r1z1k3_a", "fig_r1z1k3_b", "fig_d2k3n20_a"}) {
    const auto g = fixture(name);
    const auto h = reduce_k(g, 2);
    CHECK((h.order() == g.order() - 1 || h.order() == g.order() - 2));
    CHECK(geodecity_report(h, 2).is_k_geodetic);
  }
}

TEST_CASE("dropping one arc per vertex") {
  const auto p = drop_arc_per_vertex(permutation_digraph(2, 2));
  CHECK(p.order() == 12);
  CHECK(degree_profile(p).max_out == 1);
  CHECK(degree_profile(p).min_out == 1);
  CHECK(geodecity_report(p, 2).is_k_geodetic);
  const auto k = drop_arc_per_vertex(kautz_mixed(2));
  CHECK(degree_profile(k).max_out == 1);
  CHECK(geodecity_report(k, 2).is_k_geodetic);
  const auto last = drop_arc_per_vertex(kautz_mixed(2), [](Vertex, std::span<const Vertex> heads) {
    return heads.back();
  });
  CHECK(geodecity_report(last, 2).is_k_geodetic);
  CHECK_THROWS_AS(drop_arc_per_vertex(build_graph(2, Pairs{}, Pairs{{0, 1}})), Error);
}
