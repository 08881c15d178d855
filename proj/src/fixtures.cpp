#include <algorithm>

#include "fixture_data.hpp"
#include "mixgeo/analysis.hpp"
#include "mixgeo/bounds.hpp"
#include "mixgeo/families.hpp"

namespace mixgeo {

const std::vector<FixtureInfo>& fixture_catalog() {
  using K = FixtureTagKind;
  static const std::vector<FixtureInfo> cat = {
      {"fig2_almost_moore", 10, 2, 1, 2, K::Defect, 1, "mixed almost Moore graph"},
      {"fig3_excess_one", 12, 2, 1, 2, K::Excess, 1, "mixed graph with excess one"},
      {"fig_p22", 12, 0, 2, 2, K::Excess, 5, "permutation digraph P(2,2)"},
      {"fig_d2k2n7_a", 9, 0, 2, 2, K::Excess, 2, "(2,2,+2) digraph, first class"},
      {"fig_d2k2n7_b", 9, 0, 2, 2, K::Excess, 2, "(2,2,+2) digraph, second class"},
      {"fig_d2k3n20_a", 20, 0, 2, 3, K::Excess, 5, "digraph d=2 k=3, first drawing"},
      {"fig_d2k3n20_b", 20, 0, 2, 3, K::Excess, 5, "digraph d=2 k=3, second drawing"},
      {"fig_d3k2n16", 16, 0, 3, 2, K::Excess, 3, "extremal digraph d=3 k=2"},
      {"fig_r1z1k3_a", 16, 1, 1, 3, K::Excess, 5, "mixed graph r=1 z=1 k=3, first drawing"},
      {"fig_r1z1k3_b", 16, 1, 1, 3, K::Excess, 5, "mixed graph r=1 z=1 k=3, second drawing"},
      {"fig_r1z1k4", 30, 1, 1, 4, K::Excess, 11, "mixed graph r=1 z=1 k=4"},
      {"fig_r2z2k2", 21, 2, 2, 2, K::Excess, 2, "extremal mixed graph r=2 z=2 k=2"},
  };
  return cat;
}

const FixtureInfo& fixture_info(std::string_view name) {
  for (const auto& f : fixture_catalog())
    if (f.name == name) return f;
  throw Error(ErrorKind::UnknownFixture, "no fixture named '" + std::string(name) + "'");
}

FixtureCheck verify_fixture(const MixedGraph& g, const FixtureInfo& info) {
  auto fail = [](std::string msg) { return FixtureCheck{false, std::move(msg)}; };
  if (g.order() != info.n) return fail("order " + std::to_string(g.order()) + ", expected " + std::to_string(info.n));
  const auto p = degree_profile(g);
  if (p.min_undirected != info.r || p.max_undirected != info.r)
    return fail("undirected degree is not constantly " + std::to_string(info.r));
  if (p.min_out != info.z || p.max_out != info.z) return fail("out-degree is not constantly " + std::to_string(info.z));
  const auto m = static_cast<long long>(moore_mixed(info.r, info.z, info.k));
  if (info.tag == FixtureTagKind::Excess) {
    const auto rep = geodecity_report(g, info.k);
    if (!rep.is_k_geodetic) return fail("not " + std::to_string(info.k) + "-geodetic");
    if (g.order() - m != info.value) return fail("excess " + std::to_string(g.order() - m));
  } else {
    const auto dr = distance_report(g);
    if (dr.diameter > info.k) return fail("diameter exceeds " + std::to_string(info.k));
    if (m - g.order() != info.value) return fail("defect " + std::to_string(m - g.order()));
  }
  return {true, "ok"};
}

MixedGraph fixture(std::string_view name) {
  const FixtureInfo& info = fixture_info(name);
  const auto& data = detail::embedded_fixtures();
  auto it = std::find_if(data.begin(), data.end(), [&](const auto& e) { return e.first == name; });
  if (it == data.end()) throw Error(ErrorKind::UnknownFixture, "fixture '" + info.name + "' is not embedded");
  MixedGraph g = parse_mgf(it->second);
  const auto check = verify_fixture(g, info);
  if (!check.ok) throw Error(ErrorKind::FixtureSelfCheckFailed, info.name + ": " + check.detail);
  return g;
}

}  // namespace mixgeo
