#include "mixgeo/bounds.hpp"

#include <cstdlib>

#include "checked.hpp"

namespace mixgeo {

namespace detail {

void check_degree_args(int r, int z, int k, int k_min) {
  if (r < 0 || z < 0 || r + z < 1)
    throw Error(ErrorKind::InvalidParam, "degrees must satisfy r, z >= 0 and r + z >= 1");
  if (k < k_min) throw Error(ErrorKind::InvalidParam, "k must be at least " + std::to_string(k_min));
}

}  // namespace detail

MooreLevels moore_levels(int r, int z, int k) {
  detail::check_degree_args(r, z, k, 1);
  MooreLevels lv;
  lv.r = r;
  lv.z = z;
  lv.k = k;
  const std::uint64_t R = r, Z = z;
  std::uint64_t e = R, a = Z;
  std::uint64_t total = 1;
  for (int t = 1; t <= k; ++t) {
    lv.U.push_back(e);
    lv.Z.push_back(a);
    total = checked_add(total, checked_add(e, a));
    if (t == k) break;
    const std::uint64_t ne = r == 0 ? 0 : checked_add(checked_mul(R - 1, e), checked_mul(R, a));
    const std::uint64_t na = checked_mul(Z, checked_add(e, a));
    e = ne;
    a = na;
  }
  lv.M = total;
  return lv;
}

std::uint64_t moore_mixed(int r, int z, int k) { return moore_levels(r, z, k).M; }

std::uint64_t arrow_count(int r, int z, int k) {
  detail::check_degree_args(r, z, k, 2);
  const std::uint64_t c1 = static_cast<std::uint64_t>(r + z - 1), c0 = z;
  std::uint64_t prev = 0, cur = checked_mul(static_cast<std::uint64_t>(r), c0);
  // Z_1 = 0 contributes nothing; add Z_2..Z_{k-1}.
  std::uint64_t sum = 0;
  for (int t = 2; t <= k - 1; ++t) {
    sum = checked_add(sum, cur);
    const std::uint64_t next = checked_add(checked_mul(c1, cur), checked_mul(c0, prev));
    prev = cur;
    cur = next;
  }
  return sum;
}

std::uint64_t excess_lb_totally_regular(int r, int z, int k) {
  if (r < 0 || z < 1 || k < 3)
    throw Error(ErrorKind::PreconditionFailed, "excess bound for totally regular graphs needs r >= 0, z >= 1, k >= 3");
  const std::uint64_t a = arrow_count(r, z, k);
  return (a + z - 1) / z;
}

std::uint64_t excess_lb_general(int r, int z, int k) {
  if (r < 1 || z < 1 || k < 3)
    throw Error(ErrorKind::PreconditionFailed, "general excess bound needs r >= 1, z >= 1, k >= 3");
  const std::uint64_t a = arrow_count(r, z, k);
  const std::uint64_t d = 2 * static_cast<std::uint64_t>(r) + 3 * static_cast<std::uint64_t>(z);
  return (a + d - 1) / d;
}

ChainDecomposition chain_decomposition(int k) {
  if (k < 3) throw Error(ErrorKind::PreconditionFailed, "chain decomposition needs k >= 3");
  if (k > 40) throw Error(ErrorKind::TooLarge, "explicit branch for k > 40 is too large");

  // Node layout of the undirected branch with r = z = 1. Position p is
  // stored at index p; index 0 is unused.
  struct Node {
    int level;
    bool arc_entered;
    int edge_child = 0;
    int arc_child = 0;
  };
  std::vector<Node> nodes(2);
  nodes[1] = {1, false};
  std::size_t head = 1;
  while (head < nodes.size()) {
    const Node cur = nodes[head];
    if (cur.level < k) {
      if (cur.arc_entered) {
        nodes[head].edge_child = static_cast<int>(nodes.size());
        nodes.push_back({cur.level + 1, false});
      }
      nodes[head].arc_child = static_cast<int>(nodes.size());
      nodes.push_back({cur.level + 1, true});
    }
    ++head;
  }

  ChainDecomposition cd;
  cd.k = k;
  cd.z_prime.assign(k - 2, 0);
  std::vector<int> starts{1};
  for (std::size_t p = 2; p < nodes.size(); ++p) {
    if (nodes[p].arc_entered && nodes[p].level >= 2 && nodes[p].level <= k - 2) {
      cd.arrow_positions.push_back(static_cast<int>(p));
      starts.push_back(static_cast<int>(p));
    }
  }
  for (int s : starts) {
    Chain c;
    c.start_level = nodes[s].level;
    int p = s;
    while (p != 0) {
      c.positions.push_back(p);
      const int a = nodes[p].arc_child;
      p = a == 0 ? 0 : nodes[a].edge_child;
    }
    cd.z_prime[c.start_level - 1] += 1;
    cd.total_transversal += static_cast<std::uint64_t>(c.transversal());
    cd.chains.push_back(std::move(c));
  }
  return cd;
}

std::uint64_t defect_lb_unit(int k) {
  if (k < 3) throw Error(ErrorKind::PreconditionFailed, "defect bound needs k >= 3");
  // Z_t with r = z = 1: Z_1 = 0, Z_2 = 1, Z_{t+2} = Z_{t+1} + Z_t.
  std::vector<std::uint64_t> Z(k + 1, 0);
  if (k >= 2) Z[2] = 1;
  for (int t = 3; t <= k; ++t) Z[t] = checked_add(Z[t - 1], Z[t - 2]);
  std::uint64_t total = 0;
  for (int t = 1; t <= k - 2; ++t) {
    const std::uint64_t zp = t == 1 ? 1 : Z[t];
    const std::uint64_t ell = 1 + static_cast<std::uint64_t>((k - t) / 2);
    total = checked_add(total, checked_mul(zp, (ell + 2) / 3));
  }
  return total;
}

namespace {

/// Nonnegative integer square root of x if x is a perfect square.
std::optional<long long> exact_sqrt(long long x) {
  if (x < 0) return std::nullopt;
  long long c = static_cast<long long>(std::llround(std::sqrt(static_cast<double>(x))));
  while (c * c > x) --c;
  while ((c + 1) * (c + 1) <= x) ++c;
  if (c * c != x) return std::nullopt;
  return c;
}

bool divides(long long c, long long value) { return c != 0 && std::llabs(value) % c == 0; }

}  // namespace

std::optional<long long> bosak_admissible(int r, int z) {
  auto c = exact_sqrt(4LL * r - 3);
  if (!c || *c % 2 == 0) return std::nullopt;
  const long long Z = z;
  if (!divides(*c, (4 * Z - 3) * (4 * Z + 5))) return std::nullopt;
  return c;
}

DefectOneResult defect_one_admissible(int r, int z) {
  DefectOneResult res;
  if (r % 2 != 0) return res;
  const long long Z = z;
  if (r == 2) return {true, DefectOneClause::RIsTwo, 0};
  if (auto c = exact_sqrt(4LL * r + 1); c && *c % 2 == 1 && divides(*c, (4 * Z + 1) * (4 * Z - 7)))
    return {true, DefectOneClause::FourRPlusOne, *c};
  if (auto c = exact_sqrt(4LL * r - 7); c && *c % 2 == 1 && divides(*c, 16 * Z * Z + 40 * Z - 23))
    return {true, DefectOneClause::FourRMinusSeven, *c};
  return res;
}

bool excess_one_admissible(int r, int z) {
  const long long Z = z;
  if (r == 2) return true;
  if (auto c = exact_sqrt(4LL * r + 1); c && divides(*c, 16 * Z * Z - 24 * Z + 25)) return true;
  if (auto c = exact_sqrt(4LL * r - 7); c && divides(*c, 16 * Z * Z + 40 * Z + 9)) return true;
  return false;
}

bool excess_one_possible(int r, int z, int k) {
  if (k >= 3) return false;
  return excess_one_admissible(r, z);
}

}  // namespace mixgeo
