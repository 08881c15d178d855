#include <doctest.h>

#include <cmath>
#include <random>

#include "mixgeo/analysis.hpp"
#include "mixgeo/bounds.hpp"
#include "mixgeo/families.hpp"
#include "oracles.hpp"

using namespace mixgeo;

TEST_CASE("Moore bound values") {
  CHECK(moore_mixed(3, 3, 2) == 40);
  CHECK(moore_mixed(3, 1, 2) == 18);
  CHECK(moore_mixed(0, 2, 2) == 7);
  CHECK(moore_mixed(1, 1, 5) == 32);
  const std::uint64_t digraph[] = {7, 15, 31, 63, 127, 255};
  for (int k = 2; k <= 7; ++k) CHECK(moore_mixed(0, 2, k) == digraph[k - 2]);
  const std::uint64_t unit[] = {6, 11, 19, 32};
  for (int k = 2; k <= 5; ++k) CHECK(moore_mixed(1, 1, k) == unit[k - 2]);
}

TEST_CASE("Moore bound for k = 3 matches the cubic expression") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const long long r = rng() % 12, z = 1 + rng() % 12;
    const long long want = r * r * r + z * z * z + 3 * r * z * z + 3 * r * r * z - r * r + z * z + r + z + 1;
    CHECK(moore_mixed(static_cast<int>(r), static_cast<int>(z), 3) == static_cast<std::uint64_t>(want));
  }
}

TEST_CASE("Moore bound equals the explicit tree and the pure cases") {
  for (int r = 0; r <= 4; ++r)
    for (int z = 0; z <= 4; ++z)
      for (int k = 1; k <= 5; ++k) {
        if (r + z == 0) continue;
        CHECK(moore_mixed(r, z, k) == oracle::moore_tree_order(r, z, k));
      }
  for (int d = 1; d <= 12; ++d)
    for (int k = 1; k <= 8; ++k) {
      std::uint64_t dig = 0, pw = 1;
      for (int i = 0; i <= k; ++i, pw *= d) dig += pw;
      CHECK(moore_mixed(0, d, k) == dig);
      std::uint64_t und = 1, term = static_cast<std::uint64_t>(d);
      for (int i = 0; i < k; ++i, term *= static_cast<std::uint64_t>(d - 1)) und += term;
      CHECK(moore_mixed(d, 0, k) == und);
    }
}

TEST_CASE("levels") {
  const auto lv = moore_levels(1, 1, 4);
  CHECK(lv.M == 19);
  CHECK(lv.U.size() == lv.Z.size());
}

TEST_CASE("closed form agrees with the recurrence") {
  CHECK(std::abs(moore_closed_form(3, 3, 2) - 40.0) < 1e-6);
  CHECK(std::abs(moore_closed_form(0, 2, 4) - 31.0) < 1e-6);
  CHECK_THROWS_AS(moore_closed_form(2, 0, 3), Error);
  CHECK_THROWS_AS(moore_closed_form(1, 0, 3), Error);
  for (int r = 0; r <= 20; ++r)
    for (int z = 0; r + z <= 20; ++z)
      for (int k = 1; k <= 10; ++k) {
        if (r + z == 0 || r + 2 * z == 2 || (r == 1 && z == 0)) continue;
        const double exact = static_cast<double>(moore_mixed(r, z, k));
        CHECK(std::abs(moore_closed_form<long double>(r, z, k) - exact) / exact < 1e-6);
      }
}

TEST_CASE("arrow count") {
  CHECK(arrow_count(4, 9, 3) == 36);
  CHECK(arrow_count(3, 2, 4) == 30);
  CHECK(arrow_count(1, 1, 5) == 4);
  for (int r = 1; r <= 4; ++r)
    for (int z = 1; z <= 4; ++z)
      for (int k = 2; k <= 6; ++k) CHECK(arrow_count(r, z, k) == oracle::arrow_vertices(r, z, k));
  for (int r = 1; r <= 12; ++r)
    for (int z = 1; z <= 12; ++z) {
      CHECK(arrow_count(r, z, 3) == static_cast<std::uint64_t>(r * z));
      CHECK(arrow_count(r, z, 4) == static_cast<std::uint64_t>(r * z * z + z * r * r));
      const long long a5 = 1LL * r * z * z * z + 2LL * r * r * z * z + 1LL * r * r * r * z - 1LL * r * r * z + r * z;
      CHECK(arrow_count(r, z, 5) == static_cast<std::uint64_t>(a5));
    }
}

TEST_CASE("arrow count closed form") {
  for (int r = 1; r <= 19; ++r)
    for (int z = 1; r + z <= 20; ++z)
      for (int k = 3; k <= 10; ++k) {
        const double exact = static_cast<double>(arrow_count(r, z, k));
        CHECK(std::abs(arrow_count_closed_form<long double>(r, z, k) - exact) / exact < 1e-6);
      }
}

TEST_CASE("excess lower bounds") {
  CHECK(excess_lb_totally_regular(3, 2, 4) == 15);
  CHECK(excess_lb_totally_regular(1, 1, 4) == 2);
  CHECK(excess_lb_totally_regular(15, 6, 4) == 315);
  for (int r = 1; r <= 12; ++r)
    for (int z = 1; z <= 12; ++z) CHECK(excess_lb_totally_regular(r, z, 3) == static_cast<std::uint64_t>(r));
  CHECK(excess_lb_general(4, 9, 3) == 2);
  CHECK(excess_lb_general(1, 2, 4) == 1);
  CHECK(excess_lb_general(1, 1, 3) == 1);
}

TEST_CASE("chain decomposition and defect bound") {
  const auto cd = chain_decomposition(8);
  CHECK(cd.chains.size() == 13);
  CHECK(cd.total_transversal == 15);
  CHECK(defect_lb_unit(8) == 15);
  CHECK(defect_lb_unit(3) == 1);
  CHECK(defect_lb_unit(4) == 2);
  const auto c3 = chain_decomposition(3);
  REQUIRE(c3.chains.size() == 1);
  CHECK(c3.chains[0].length() == 2);
  for (int k = 3; k <= 20; ++k) {
    const auto census = oracle::chain_census(k);
    const auto dec = chain_decomposition(k);
    CHECK(defect_lb_unit(k) == census.transversal);
    CHECK(dec.total_transversal == census.transversal);
    CHECK(static_cast<int>(dec.chains.size()) == census.chains);
  }
}

TEST_CASE("Bosak condition") {
  CHECK(bosak_admissible(3, 1) == 3);
  CHECK(bosak_admissible(7, 2) == 5);
  CHECK_FALSE(bosak_admissible(2, 1));
  for (int z = 1; z <= 10; ++z) CHECK(bosak_admissible(1, z) == 1);
}

TEST_CASE("defect one and excess one conditions") {
  for (int z = 1; z <= 10; ++z) {
    CHECK(defect_one_admissible(2, z).admissible);
    CHECK(defect_one_admissible(2, z).clause == DefectOneClause::RIsTwo);
    CHECK_FALSE(defect_one_admissible(3, z).admissible);
    CHECK(excess_one_admissible(2, z));
  }
  const auto d61 = defect_one_admissible(6, 1);
  CHECK(d61.admissible);
  CHECK(d61.c == 5);
  CHECK(excess_one_possible(2, 1, 2));
  for (int k = 3; k <= 8; ++k)
    for (int r = 1; r <= 50; ++r)
      for (int z = 1; z <= 50; ++z) CHECK_FALSE(excess_one_possible(r, z, k));
}

TEST_CASE("measured excess respects the totally regular bound") {
  int checked = 0;
  for (const auto& info : fixture_catalog()) {
    if (info.tag != FixtureTagKind::Excess || info.k < 3 || info.z < 1) continue;
    const auto g = fixture(info.name);
    if (!regularity_report(g, info.r, info.z).totally_regular) continue;
    const auto eps = *excess_report(g, info.r, info.z, info.k).excess;
    CHECK(static_cast<std::uint64_t>(eps) >= excess_lb_totally_regular(info.r, info.z, info.k));
    ++checked;
  }
  CHECK(checked >= 3);
}

TEST_CASE("invalid parameters") {
  CHECK_THROWS_AS(moore_mixed(0, 0, 2), Error);
  CHECK_THROWS_AS(moore_mixed(-1, 2, 2), Error);
  CHECK_THROWS_AS(defect_lb_unit(2), Error);
  CHECK_THROWS_AS(moore_mixed(50, 50, 40), Error);
}
