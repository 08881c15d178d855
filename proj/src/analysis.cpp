#include "mixgeo/analysis.hpp"

#include <algorithm>
#include <deque>

#include "checked.hpp"
#include "mixgeo/bounds.hpp"

namespace mixgeo {

namespace {

/// Each edge {u,v} contributes darts 2i (u->v) and 2i+1 (v->u); arcs follow.
struct Darts {
  int edge_darts = 0;
  std::vector<Vertex> tail, head;
  std::vector<std::vector<int>> into;

  explicit Darts(const MixedGraph& g) : into(g.order()) {
    for (const Edge& e : g.edges()) {
      add(e.u, e.v);
      add(e.v, e.u);
    }
    edge_darts = static_cast<int>(tail.size());
    for (const Arc& a : g.arcs()) add(a.tail, a.head);
  }

  void add(Vertex t, Vertex h) {
    into[h].push_back(static_cast<int>(tail.size()));
    tail.push_back(t);
    head.push_back(h);
  }

  int size() const { return static_cast<int>(tail.size()); }
  bool is_edge(int d) const { return d < edge_darts; }
  static int rev(int d) { return d ^ 1; }
};

/// Walk counts from one source, one length at a time.
class SourceDp {
 public:
  SourceDp(const Darts& darts, int n) : d_(darts), n_(n) {}

  void reset(Vertex s) {
    s_ = s;
    layers_.clear();
    std::vector<std::uint64_t> f(d_.size(), 0);
    for (int d = 0; d < d_.size(); ++d)
      if (d_.tail[d] == s) f[d] = 1;
    layers_.push_back(std::move(f));
  }

  /// Advances to the next length; layers_.back() holds walks of length
  /// layers_.size().
  void step() {
    const auto& f = layers_.back();
    std::vector<std::uint64_t> sums(n_, 0);
    for (int d = 0; d < d_.size(); ++d)
      if (f[d]) sums[d_.head[d]] = checked_add(sums[d_.head[d]], f[d]);
    std::vector<std::uint64_t> next(d_.size(), 0);
    for (int d = 0; d < d_.size(); ++d) {
      std::uint64_t v = sums[d_.tail[d]];
      if (d_.is_edge(d)) v -= f[Darts::rev(d)];
      next[d] = v;
    }
    layers_.push_back(std::move(next));
  }

  int length() const { return static_cast<int>(layers_.size()); }

  /// Number of walks of the current length ending at each vertex.
  std::vector<std::uint64_t> ending_counts() const {
    std::vector<std::uint64_t> w(n_, 0);
    const auto& f = layers_.back();
    for (int d = 0; d < d_.size(); ++d)
      if (f[d]) w[d_.head[d]] = checked_add(w[d_.head[d]], f[d]);
    return w;
  }

  std::uint64_t count_at(int len, Vertex v) const {
    std::uint64_t c = 0;
    for (int d : d_.into[v]) c += layers_[len - 1][d];
    return c;
  }

  /// Up to `limit` distinct walks of length len from the source to v.
  std::vector<Walk> walks(int len, Vertex v, std::size_t limit) const {
    std::vector<Walk> out;
    std::vector<Vertex> rev_path{v};
    for (int d : d_.into[v]) {
      if (out.size() >= limit) break;
      if (layers_[len - 1][d]) collect(len, d, rev_path, out, limit);
    }
    return out;
  }

 private:
  void collect(int len, int d, std::vector<Vertex>& rev_path, std::vector<Walk>& out, std::size_t limit) const {
    rev_path.push_back(d_.tail[d]);
    if (len == 1) {
      out.emplace_back(rev_path.rbegin(), rev_path.rend());
    } else {
      for (int p : d_.into[d_.tail[d]]) {
        if (out.size() >= limit) break;
        if (d_.is_edge(d) && p == Darts::rev(d)) continue;
        if (layers_[len - 2][p]) collect(len - 1, p, rev_path, out, limit);
      }
    }
    rev_path.pop_back();
  }

  const Darts& d_;
  int n_;
  Vertex s_ = 0;
  std::vector<std::vector<std::uint64_t>> layers_;
};

}  // namespace

std::vector<CountMatrix> nb_walk_counts(const MixedGraph& g, int k) {
  if (k < 0) throw Error(ErrorKind::InvalidParam, "k must be nonnegative");
  const int n = g.order();
  std::vector<CountMatrix> W(k + 1, CountMatrix::Zero(n, n));
  W[0].setIdentity();
  if (k == 0) return W;
  Darts darts(g);
  SourceDp dp(darts, n);
  for (Vertex s = 0; s < n; ++s) {
    dp.reset(s);
    for (int len = 1; len <= k; ++len) {
      if (len > 1) dp.step();
      const auto w = dp.ending_counts();
      for (Vertex v = 0; v < n; ++v) W[len](s, v) = w[v];
    }
  }
  return W;
}

GeodecityReport geodecity_report(const MixedGraph& g, int k) {
  if (k < 1) throw Error(ErrorKind::InvalidParam, "k must be at least 1");
  const int n = g.order();
  Darts darts(g);
  SourceDp dp(darts, n);

  GeodecityReport rep;
  rep.k_tested = k;
  int first_fail = k + 1;
  std::vector<std::uint64_t> cum(n);

  for (Vertex s = 0; s < n && first_fail > 1; ++s) {
    std::fill(cum.begin(), cum.end(), 0);
    cum[s] = 1;
    dp.reset(s);
    for (int len = 1; len < first_fail; ++len) {
      if (len > 1) dp.step();
      const auto w = dp.ending_counts();
      bool failed = false;
      for (Vertex v = 0; v < n; ++v) {
        cum[v] = checked_add(cum[v], w[v]);
        if (cum[v] >= 2) failed = true;
      }
      if (!failed) continue;

      first_fail = len;
      rep.violation.reset();
      rep.closed_walk_violation.reset();
      if (w[s] > 0) rep.closed_walk_violation = ClosedWalkViolation{s, dp.walks(len, s, 1).front()};
      for (Vertex v = 0; v < n; ++v) {
        if (v == s || cum[v] < 2) continue;
        PairViolation pv{s, v, {}, {}};
        int shorter = 0;
        for (int j = 1; j < len && !shorter; ++j)
          if (dp.count_at(j, v) > 0) shorter = j;
        if (shorter) {
          pv.first = dp.walks(shorter, v, 1).front();
          pv.second = dp.walks(len, v, 1).front();
        } else {
          auto two = dp.walks(len, v, 2);
          pv.first = two[0];
          pv.second = two[1];
        }
        rep.violation = std::move(pv);
        break;
      }
      break;
    }
  }
  rep.girth = std::min(k, first_fail - 1);
  rep.is_k_geodetic = first_fail > k;
  return rep;
}

int geodetic_girth(const MixedGraph& g, int cap) { return geodecity_report(g, cap).girth; }

DistanceReport distance_report(const MixedGraph& g) {
  const int n = g.order();
  DistanceReport rep;
  rep.dist = DistanceMatrix::Constant(n, n, DistanceReport::kInfinity);
  rep.diameter = 0;
  std::vector<Vertex> queue(n);
  for (Vertex s = 0; s < n; ++s) {
    std::size_t qh = 0, qt = 0;
    queue[qt++] = s;
    rep.dist(s, s) = 0;
    while (qh < qt) {
      const Vertex u = queue[qh++];
      const int du = rep.dist(s, u);
      auto visit = [&](Vertex v) {
        if (rep.dist(s, v) == DistanceReport::kInfinity) {
          rep.dist(s, v) = du + 1;
          queue[qt++] = v;
        }
      };
      for (Vertex v : g.neighbours(u)) visit(v);
      for (Vertex v : g.out_neighbours(u)) visit(v);
    }
  }
  rep.diameter = n > 0 ? rep.dist.maxCoeff() : 0;
  return rep;
}

namespace {

std::vector<std::vector<Vertex>> outlier_sets(const DistanceReport& dr, int k) {
  const int n = static_cast<int>(dr.dist.rows());
  std::vector<std::vector<Vertex>> out(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v)
      if (dr.dist(u, v) > k) out[u].push_back(v);
  return out;
}

/// Multiplicity of each vertex in the depth-k Moore tree rooted at u.
std::vector<std::uint64_t> moore_tree_multiplicity(const MixedGraph& g, Vertex u, int k) {
  constexpr std::size_t kNodeCap = 50'000'000;
  struct Node {
    Vertex v;
    Vertex edge_parent;  // -1 when entered by an arc
  };
  std::vector<std::uint64_t> mult(g.order(), 0);
  mult[u] = 1;
  std::vector<Node> level, next;
  for (Vertex v : g.neighbours(u)) level.push_back({v, u});
  for (Vertex v : g.out_neighbours(u)) level.push_back({v, -1});
  std::size_t total = 1;
  for (int t = 1; t <= k && !level.empty(); ++t) {
    total += level.size();
    if (total > kNodeCap) throw Error(ErrorKind::TooLarge, "Moore tree expansion exceeds node cap");
    for (const Node& x : level) ++mult[x.v];
    if (t == k) break;
    next.clear();
    for (const Node& x : level) {
      for (Vertex w : g.neighbours(x.v))
        if (w != x.edge_parent) next.push_back({w, x.v});
      for (Vertex w : g.out_neighbours(x.v)) next.push_back({w, -1});
    }
    std::swap(level, next);
  }
  return mult;
}

}  // namespace

ExcessDefectReport excess_report(const MixedGraph& g, int r, int z, int k) {
  const auto prof = degree_profile(g);
  if (prof.min_undirected < r)
    throw Error(ErrorKind::PreconditionFailed, "minimum undirected degree is below r");
  if (prof.min_out < z) throw Error(ErrorKind::PreconditionFailed, "minimum out-degree is below z");
  if (!geodecity_report(g, k).is_k_geodetic)
    throw Error(ErrorKind::PreconditionFailed, "graph is not " + std::to_string(k) + "-geodetic");
  ExcessDefectReport rep;
  rep.moore = moore_mixed(r, z, k);
  rep.excess = static_cast<std::int64_t>(g.order()) - static_cast<std::int64_t>(rep.moore);
  rep.outliers = outlier_sets(distance_report(g), k);
  return rep;
}

ExcessDefectReport defect_report(const MixedGraph& g, int r, int z, int k) {
  const auto prof = degree_profile(g);
  if (prof.max_undirected > r)
    throw Error(ErrorKind::PreconditionFailed, "maximum undirected degree exceeds r");
  if (prof.max_out > z) throw Error(ErrorKind::PreconditionFailed, "maximum out-degree exceeds z");
  const auto dr = distance_report(g);
  if (dr.diameter > k) throw Error(ErrorKind::PreconditionFailed, "diameter exceeds " + std::to_string(k));
  ExcessDefectReport rep;
  rep.moore = moore_mixed(r, z, k);
  rep.defect = static_cast<std::int64_t>(rep.moore) - static_cast<std::int64_t>(g.order());
  rep.outliers = outlier_sets(dr, k);
  rep.repeats.resize(g.order());
  for (Vertex u = 0; u < g.order(); ++u) {
    const auto mult = moore_tree_multiplicity(g, u, k);
    for (Vertex v = 0; v < g.order(); ++v)
      for (std::uint64_t c = 1; c < mult[v]; ++c) rep.repeats[u].push_back(v);
  }
  return rep;
}

bool is_automorphism(const MixedGraph& g, const std::vector<Vertex>& perm) {
  const int n = g.order();
  if (static_cast<int>(perm.size()) != n) return false;
  std::vector<char> seen(n, 0);
  for (Vertex p : perm) {
    if (p < 0 || p >= n || seen[p]) return false;
    seen[p] = 1;
  }
  for (const Edge& e : g.edges())
    if (!g.has_edge(perm[e.u], perm[e.v])) return false;
  for (const Arc& a : g.arcs())
    if (!g.has_arc(perm[a.tail], perm[a.head])) return false;
  return true;
}

OutlierMapResult outlier_automorphism_check(const MixedGraph& g, int r, int z, int k) {
  const auto rep = excess_report(g, r, z, k);
  if (*rep.excess != 1)
    throw Error(ErrorKind::PreconditionFailed, "excess is " + std::to_string(*rep.excess) + ", expected 1");
  OutlierMapResult res;
  res.map.resize(g.order());
  for (Vertex u = 0; u < g.order(); ++u) {
    if (rep.outliers[u].size() != 1)
      throw Error(ErrorKind::PreconditionFailed, "vertex " + std::to_string(u) + " does not have exactly one outlier");
    res.map[u] = rep.outliers[u].front();
  }
  std::vector<Vertex> sorted = res.map;
  std::sort(sorted.begin(), sorted.end());
  res.bijective = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
  res.is_automorphism = res.bijective && is_automorphism(g, res.map);
  return res;
}

}  // namespace mixgeo
