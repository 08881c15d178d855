#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include <Eigen/Core>

#include "mixgeo/core.hpp"

namespace mixgeo {

using CountMatrix = Eigen::Matrix<std::uint64_t, Eigen::Dynamic, Eigen::Dynamic>;
using DistanceMatrix = Eigen::Matrix<int, Eigen::Dynamic, Eigen::Dynamic>;

/// A walk given by its vertex sequence. In a simple mixed graph consecutive
/// vertices determine the traversed element, so this is unambiguous.
using Walk = std::vector<Vertex>;

/// W[l](u, v) is the number of non-backtracking walks of length exactly l
/// from u to v, for l = 0..k. Throws Overflow rather than wrapping.
std::vector<CountMatrix> nb_walk_counts(const MixedGraph& g, int k);

struct PairViolation {
  Vertex u = 0;
  Vertex v = 0;
  Walk first;
  Walk second;
};

struct ClosedWalkViolation {
  Vertex u = 0;
  Walk walk;
};

struct GeodecityReport {
  int k_tested = 0;
  /// Largest k' <= k_tested for which the graph is k'-geodetic.
  int girth = 0;
  bool is_k_geodetic = false;
  /// Witnesses found at length girth + 1, the shortest failing length.
  std::optional<PairViolation> violation;
  std::optional<ClosedWalkViolation> closed_walk_violation;
};

GeodecityReport geodecity_report(const MixedGraph& g, int k);

/// Geodetic girth without the witness walks, up to `cap`.
int geodetic_girth(const MixedGraph& g, int cap);

struct DistanceReport {
  static constexpr int kInfinity = std::numeric_limits<int>::max();
  DistanceMatrix dist;
  /// kInfinity when some pair is unreachable.
  int diameter = 0;
};

DistanceReport distance_report(const MixedGraph& g);

struct ExcessDefectReport {
  std::uint64_t moore = 0;
  std::optional<std::int64_t> excess;
  std::optional<std::int64_t> defect;
  /// outliers[u] = O(u), sorted.
  std::vector<std::vector<Vertex>> outliers;
  /// repeats[u] = R(u) as a sorted multiset.
  std::vector<std::vector<Vertex>> repeats;
};

ExcessDefectReport excess_report(const MixedGraph& g, int r, int z, int k);
ExcessDefectReport defect_report(const MixedGraph& g, int r, int z, int k);

struct OutlierMapResult {
  /// map[u] is the unique outlier of u.
  std::vector<Vertex> map;
  bool bijective = false;
  bool is_automorphism = false;
};

/// Requires an excess-one k-geodetic graph whose outlier sets are singletons.
OutlierMapResult outlier_automorphism_check(const MixedGraph& g, int r, int z, int k);

/// True when perm maps edges onto edges and arcs onto arcs.
bool is_automorphism(const MixedGraph& g, const std::vector<Vertex>& perm);

}  // namespace mixgeo
