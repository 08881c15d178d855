#include "mixgeo/families.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "mixgeo/analysis.hpp"
#include "mixgeo/bounds.hpp"

namespace mixgeo {

namespace {

/// (m)(m-1)...(m-len+1), or 0 if it exceeds cap.
std::uint64_t falling(int m, int len, std::uint64_t cap) {
  std::uint64_t v = 1;
  for (int i = 0; i < len; ++i) {
    v *= static_cast<std::uint64_t>(m - i);
    if (v > cap) return 0;
  }
  return v;
}

}  // namespace

std::vector<int> permutation_label(int d, int k, int index) {
  const int m = d + k;
  std::vector<int> avail(m);
  std::iota(avail.begin(), avail.end(), 0);
  std::vector<int> seq;
  for (int i = 0; i < k; ++i) {
    const auto block = static_cast<int>(falling(m - i - 1, k - i - 1, UINT64_MAX));
    const int pick = index / block;
    index %= block;
    seq.push_back(avail[pick]);
    avail.erase(avail.begin() + pick);
  }
  return seq;
}

MixedGraph permutation_digraph(int d, int k, std::uint64_t vertex_cap) {
  if (d < 2 || k < 2) throw Error(ErrorKind::InvalidParam, "permutation digraph needs d, k >= 2");
  const int m = d + k;
  const std::uint64_t order = falling(m, k, vertex_cap);
  if (order == 0) throw Error(ErrorKind::TooLarge, "permutation digraph exceeds the vertex cap");

  std::vector<std::uint64_t> block(k);
  for (int i = 0; i < k; ++i) block[i] = falling(m - i - 1, k - i - 1, UINT64_MAX);
  auto rank = [&](const std::vector<int>& seq) {
    std::uint64_t r = 0;
    std::vector<char> used(m, 0);
    for (int i = 0; i < k; ++i) {
      int smaller = 0;
      for (int s = 0; s < seq[i]; ++s)
        if (!used[s]) ++smaller;
      r += smaller * block[i];
      used[seq[i]] = 1;
    }
    return static_cast<Vertex>(r);
  };

  std::vector<VertexPair> arcs;
  arcs.reserve(order * d);
  std::vector<int> seq(k), next(k);
  for (std::uint64_t idx = 0; idx < order; ++idx) {
    seq = permutation_label(d, k, static_cast<int>(idx));
    std::copy(seq.begin() + 1, seq.end(), next.begin());
    for (int y = 0; y < m; ++y) {
      if (std::find(seq.begin(), seq.end(), y) != seq.end()) continue;
      next[k - 1] = y;
      arcs.emplace_back(static_cast<Vertex>(idx), rank(next));
    }
  }
  return build_graph(static_cast<int>(order), {}, arcs);
}

MixedGraph kautz_mixed(int z) {
  if (z < 1) throw Error(ErrorKind::InvalidParam, "Kautz graph needs z >= 1");
  const int q = z + 2;
  auto id = [q](int a, int b) { return a * (q - 1) + (b < a ? b : b - 1); };
  std::vector<VertexPair> edges, arcs;
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b) {
      if (a == b) continue;
      if (a < b) edges.emplace_back(id(a, b), id(b, a));
      for (int c = 0; c < q; ++c)
        if (c != a && c != b) arcs.emplace_back(id(a, b), id(b, c));
    }
  return build_graph(q * (q - 1), edges, arcs);
}

MixedGraph cycle(int n, bool directed) {
  if (n < 3) throw Error(ErrorKind::InvalidParam, "cycle needs n >= 3");
  std::vector<VertexPair> pairs;
  for (int i = 0; i < n; ++i) pairs.emplace_back(i, (i + 1) % n);
  return directed ? build_graph(n, {}, pairs) : build_graph(n, pairs, {});
}

MixedGraph petersen() {
  std::vector<VertexPair> e;
  for (int i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(5 + i, 5 + (i + 2) % 5);
    e.emplace_back(i, 5 + i);
  }
  return build_graph(10, e, {});
}

int undirected_girth(const MixedGraph& h) {
  const int n = h.order();
  int best = 0;
  std::vector<int> dist(n), parent(n);
  for (Vertex s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    std::vector<Vertex> queue{s};
    dist[s] = 0;
    parent[s] = -1;
    for (std::size_t qh = 0; qh < queue.size(); ++qh) {
      const Vertex u = queue[qh];
      for (Vertex v : h.neighbours(u)) {
        if (v == parent[u]) continue;
        if (dist[v] < 0) {
          dist[v] = dist[u] + 1;
          parent[v] = u;
          queue.push_back(v);
        } else {
          const int len = dist[u] + dist[v] + 1;
          if (best == 0 || len < best) best = len;
        }
      }
    }
  }
  return best;
}

MixedGraph truncate_compose(const MixedGraph& h, const MixedGraph& hp, int z, int k) {
  if (z < 1 || k < 1) throw Error(ErrorKind::InvalidParam, "truncation needs z, k >= 1");
  if (!h.arcs().empty()) throw Error(ErrorKind::PreconditionFailed, "H must be undirected");
  const int nh = h.order();
  const auto ph = degree_profile(h);
  if (ph.min_undirected != ph.max_undirected) throw Error(ErrorKind::PreconditionFailed, "H is not regular");
  const int g = undirected_girth(h);
  if (g != 0 && g < 2 * k + 1)
    throw Error(ErrorKind::PreconditionFailed,
                "H has girth " + std::to_string(g) + ", needs at least " + std::to_string(2 * k + 1));
  if (!hp.edges().empty()) throw Error(ErrorKind::PreconditionFailed, "H' must be a digraph");
  const auto pp = degree_profile(hp);
  if (pp.min_out != nh * z || pp.max_out != nh * z)
    throw Error(ErrorKind::PreconditionFailed, "H' out-degree must equal |V(H)| * z = " + std::to_string(nh * z));
  if (!geodecity_report(hp, k).is_k_geodetic)
    throw Error(ErrorKind::PreconditionFailed, "H' is not " + std::to_string(k) + "-geodetic");

  const long long total = static_cast<long long>(nh) * hp.order();
  if (total > (1LL << 30)) throw Error(ErrorKind::TooLarge, "composed graph too large");
  std::vector<VertexPair> edges, arcs;
  for (Vertex u = 0; u < hp.order(); ++u) {
    for (const Edge& e : h.edges()) edges.emplace_back(u * nh + e.u, u * nh + e.v);
    const auto heads = hp.out_neighbours(u);
    for (std::size_t i = 0; i < heads.size(); ++i) {
      const int copy_vertex = static_cast<int>(i) / z;
      arcs.emplace_back(u * nh + copy_vertex, heads[i] * nh);
    }
  }
  return build_graph(static_cast<int>(total), edges, arcs);
}

namespace {

/// Deletes `gone` and adds the replacement elements, renumbering the rest
/// in their original order.
MixedGraph delete_and_rewire(const MixedGraph& g, const std::vector<Vertex>& gone,
                             const std::vector<VertexPair>& new_edges, const std::vector<VertexPair>& new_arcs) {
  std::vector<Vertex> relabel(g.order(), -1);
  int next = 0;
  for (Vertex v = 0; v < g.order(); ++v)
    if (std::find(gone.begin(), gone.end(), v) == gone.end()) relabel[v] = next++;
  std::vector<VertexPair> edges, arcs;
  for (const Edge& e : g.edges())
    if (relabel[e.u] >= 0 && relabel[e.v] >= 0) edges.emplace_back(relabel[e.u], relabel[e.v]);
  for (const Arc& a : g.arcs())
    if (relabel[a.tail] >= 0 && relabel[a.head] >= 0) arcs.emplace_back(relabel[a.tail], relabel[a.head]);
  for (auto [a, b] : new_edges) edges.emplace_back(relabel[a], relabel[b]);
  for (auto [a, b] : new_arcs) arcs.emplace_back(relabel[a], relabel[b]);
  return build_graph(next, edges, arcs);
}

void rewire_around(const MixedGraph& g, Vertex u, Vertex skip, std::vector<VertexPair>& edges,
                   std::vector<VertexPair>& arcs) {
  std::vector<Vertex> nb;
  for (Vertex w : g.neighbours(u))
    if (w != skip) nb.push_back(w);
  for (std::size_t i = 0; i + 1 < nb.size(); i += 2) edges.emplace_back(nb[i], nb[i + 1]);
  const auto in = g.in_neighbours(u);
  const auto out = g.out_neighbours(u);
  if (!in.empty() && out.empty())
    throw Error(ErrorKind::PreconditionFailed, "vertex " + std::to_string(u) + " has in-arcs but no out-arcs");
  for (std::size_t i = 0; i < in.size(); ++i) arcs.emplace_back(in[i], out[i % out.size()]);
}

}  // namespace

MixedGraph reduce_k(const MixedGraph& g, int k) {
  if (k < 1) throw Error(ErrorKind::InvalidParam, "k must be at least 1");
  std::vector<VertexPair> edges, arcs;
  for (Vertex u = 0; u < g.order(); ++u) {
    if (g.undirected_degree(u) % 2 == 0) {
      rewire_around(g, u, -1, edges, arcs);
      return delete_and_rewire(g, {u}, edges, arcs);
    }
  }
  if (g.edges().empty() || g.order() < 3)
    throw Error(ErrorKind::PreconditionFailed, "no vertex of even undirected degree and no usable edge");
  const Edge e = g.edges().front();
  rewire_around(g, e.u, e.v, edges, arcs);
  rewire_around(g, e.v, e.u, edges, arcs);
  return delete_and_rewire(g, {e.u, e.v}, edges, arcs);
}

MixedGraph drop_arc_per_vertex(const MixedGraph& g, const DropStrategy& strategy) {
  std::vector<VertexPair> arcs;
  for (Vertex u = 0; u < g.order(); ++u) {
    const auto heads = g.out_neighbours(u);
    if (heads.empty())
      throw Error(ErrorKind::PreconditionFailed, "vertex " + std::to_string(u) + " has no out-arc");
    const Vertex drop = strategy ? strategy(u, heads) : heads.front();
    if (std::find(heads.begin(), heads.end(), drop) == heads.end())
      throw Error(ErrorKind::InvalidParam, "strategy chose a non-existent arc");
    for (Vertex h : heads)
      if (h != drop) arcs.emplace_back(u, h);
  }
  return build_graph(g.order(), g.edge_pairs(), arcs);
}

}  // namespace mixgeo
