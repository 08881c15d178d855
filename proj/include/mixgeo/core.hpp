#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mixgeo/error.hpp"

namespace mixgeo {

using Vertex = int;
using VertexPair = std::pair<Vertex, Vertex>;

/// Undirected edge, stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  auto operator<=>(const Edge&) const = default;
};

/// Directed arc tail -> head.
struct Arc {
  Vertex tail = 0;
  Vertex head = 0;
  auto operator<=>(const Arc&) const = default;
};

/// A simple mixed graph on the vertex set 0..n-1.
///
/// Instances are only produced by build_graph (or the parsers that call it),
/// so every live object satisfies the model invariants: no loops, no
/// duplicate elements, no arc pair (u,v)/(v,u), and no arc parallel to an
/// edge. Edges and arcs are kept in canonical sorted order.
class MixedGraph {
 public:
  MixedGraph() = default;

  int order() const noexcept { return n_; }
  std::span<const Edge> edges() const noexcept { return edges_; }
  std::span<const Arc> arcs() const noexcept { return arcs_; }

  std::span<const Vertex> neighbours(Vertex u) const { return nbr_[u]; }
  std::span<const Vertex> out_neighbours(Vertex u) const { return out_[u]; }
  std::span<const Vertex> in_neighbours(Vertex u) const { return in_[u]; }

  int undirected_degree(Vertex u) const { return static_cast<int>(nbr_[u].size()); }
  int out_degree(Vertex u) const { return static_cast<int>(out_[u].size()); }
  int in_degree(Vertex u) const { return static_cast<int>(in_[u].size()); }

  bool has_edge(Vertex u, Vertex v) const;
  bool has_arc(Vertex tail, Vertex head) const;
  /// True when u and v are joined by an edge or by an arc in either direction.
  bool adjacent(Vertex u, Vertex v) const;

  std::vector<VertexPair> edge_pairs() const;
  std::vector<VertexPair> arc_pairs() const;

  /// Image under the vertex map perm (perm[old] = new).
  MixedGraph relabeled(std::span<const Vertex> perm) const;

  bool operator==(const MixedGraph& other) const {
    return n_ == other.n_ && edges_ == other.edges_ && arcs_ == other.arcs_;
  }

 private:
  friend MixedGraph build_graph(int, std::span<const VertexPair>, std::span<const VertexPair>);

  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<Arc> arcs_;
  std::vector<std::vector<Vertex>> nbr_;
  std::vector<std::vector<Vertex>> out_;
  std::vector<std::vector<Vertex>> in_;
};

/// Validates and builds a graph. Duplicate entries are collapsed first; the
/// remaining violations raise LoopRejected, OutOfRange or DigonConflict with
/// the offending pair in the message.
MixedGraph build_graph(int n, std::span<const VertexPair> edges, std::span<const VertexPair> arcs);

inline MixedGraph build_graph(int n, const std::vector<VertexPair>& edges,
                              const std::vector<VertexPair>& arcs) {
  return build_graph(n, std::span<const VertexPair>(edges), std::span<const VertexPair>(arcs));
}

struct DegreeProfile {
  std::vector<int> undirected;
  std::vector<int> out;
  std::vector<int> in;
  int min_undirected = 0, max_undirected = 0;
  int min_out = 0, max_out = 0;
  int min_in = 0, max_in = 0;
};

DegreeProfile degree_profile(const MixedGraph& g);

struct RegularityReport {
  bool out_regular = false;
  bool totally_regular = false;
  /// Vertices with in-degree below z.
  std::vector<Vertex> deficient;
  /// Vertices with in-degree above z.
  std::vector<Vertex> surplus;
  /// Total deficiency: sum over deficient vertices of z - in-degree.
  std::int64_t sigma = 0;
  /// Total surplus: sum over surplus vertices of in-degree - z.
  std::int64_t surplus_total = 0;
};

RegularityReport regularity_report(const MixedGraph& g, int r, int z);

// MGF text format.
MixedGraph parse_mgf(std::string_view text);
std::string write_mgf(const MixedGraph& g);
MixedGraph read_mgf_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view text);

/// Graphviz rendering: edges drawn without arrowheads, arcs directed.
std::string write_dot(const MixedGraph& g);

}  // namespace mixgeo
