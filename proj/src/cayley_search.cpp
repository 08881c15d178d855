#include <algorithm>
#include <functional>

#include "mixgeo/analysis.hpp"
#include "mixgeo/bounds.hpp"
#include "mixgeo/search.hpp"

namespace mixgeo {

CayleyOutcome search_cayley_group(const GroupTable& g, int r, int z, int k, std::size_t witness_limit,
                                  bool reduce_inner) {
  CayleyOutcome out;
  if (static_cast<std::uint64_t>(g.order()) < moore_mixed(r, z, k)) return out;
  for_each_connection_set(g, r, z, reduce_inner, [&](const ConnectionSet& s) {
    ++out.sets_tested;
    if (geodecity_report(cayley_mixed(g, s), k).is_k_geodetic) {
      out.sets.push_back(s);
      if (witness_limit && out.sets.size() >= witness_limit) return false;
    }
    return true;
  });
  out.verdict = out.sets.empty() ? Verdict::ExhaustedNone : Verdict::Found;
  return out;
}

SmallestCayleyResult smallest_cayley(int r, int z, int k, int max_order, const std::vector<GroupTable>& extra) {
  const auto m = moore_mixed(r, z, k);
  SmallestCayleyResult res;
  for (int order = static_cast<int>(std::min<std::uint64_t>(m, 1u << 30)); order <= max_order; ++order) {
    std::vector<GroupTable> groups;
    if (order <= kCatalogMaxOrder) {
      groups = catalog(order);
    } else {
      for (const auto& g : extra)
        if (g.order() == order) groups.push_back(g);
      if (groups.empty())
        throw Error(ErrorKind::CatalogIncomplete, "no groups of order " + std::to_string(order) + " available");
    }
    CayleyOrderVerdict verdict{order, static_cast<int>(groups.size()), 0};
    for (std::size_t i = 0; i < groups.size(); ++i) {
      const auto o = search_cayley_group(groups[i], r, z, k, 1, true);
      verdict.sets_tested += o.sets_tested;
      if (o.verdict == Verdict::Found) {
        res.order = order;
        res.group = groups[i].name();
        res.catalog_index = static_cast<int>(i) + 1;
        res.set = o.sets.front();
        return res;
      }
    }
    res.negatives.push_back(verdict);
  }
  return res;
}

bool cayley_words_distinct(const GroupTable& g, const ConnectionSet& s, int k) {
  std::vector<char> seen(g.order(), 0);
  seen[g.identity()] = 1;
  bool ok = true;
  auto undirected = [&](int x) { return std::binary_search(s.elements.begin(), s.elements.end(), g.inverse(x)); };
  std::function<void(int, int, int)> extend = [&](int value, int prev, int len) {
    if (!ok || len == k) return;
    for (int x : s.elements) {
      if (prev >= 0 && undirected(prev) && x == g.inverse(prev)) continue;
      const int next = g.mul(value, x);
      if (seen[next]) {
        ok = false;
        return;
      }
      seen[next] = 1;
      extend(next, x, len + 1);
      if (!ok) return;
    }
  };
  extend(g.identity(), -1, 0);
  return ok;
}

}  // namespace mixgeo
