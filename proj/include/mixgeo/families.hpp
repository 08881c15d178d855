#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mixgeo/core.hpp"

namespace mixgeo {

/// P(d,k): k-permutations of d+k symbols, arcs x1..xk -> x2..xk y.
/// Vertices are numbered in lexicographic order of their sequences.
MixedGraph permutation_digraph(int d, int k, std::uint64_t vertex_cap = 1'000'000);

/// The k-sequence labelling vertex i of permutation_digraph(d, k).
std::vector<int> permutation_label(int d, int k, int index);

/// Mixed Kautz graph over an alphabet of z+2 letters: edge ab ~ ba and
/// arc ab -> bc for c not in {a, b}.
MixedGraph kautz_mixed(int z);

MixedGraph cycle(int n, bool directed);
MixedGraph petersen();

enum class FixtureTagKind { Excess, Defect };

struct FixtureInfo {
  std::string name;
  int n = 0, r = 0, z = 0, k = 0;
  FixtureTagKind tag = FixtureTagKind::Excess;
  int value = 0;  ///< epsilon or delta
  std::string description;
};

const std::vector<FixtureInfo>& fixture_catalog();
const FixtureInfo& fixture_info(std::string_view name);

/// Loads an embedded fixture and verifies it against its catalog entry.
MixedGraph fixture(std::string_view name);

struct FixtureCheck {
  bool ok = false;
  std::string detail;
};

FixtureCheck verify_fixture(const MixedGraph& g, const FixtureInfo& info);

/// Undirected girth, 0 if acyclic. Arcs are ignored.
int undirected_girth(const MixedGraph& h);

/// Replaces every vertex of the digraph hp by a copy of the undirected
/// graph h and distributes its out-arcs, z per copy vertex.
MixedGraph truncate_compose(const MixedGraph& h, const MixedGraph& hp, int z, int k);

/// Builds a k-geodetic graph of smaller order from a (k+1)-geodetic one.
MixedGraph reduce_k(const MixedGraph& g, int k);

/// Picks which out-arc of vertex u to drop, given its sorted out-neighbours.
using DropStrategy = std::function<Vertex(Vertex u, std::span<const Vertex> heads)>;

MixedGraph drop_arc_per_vertex(const MixedGraph& g, const DropStrategy& strategy = {});

}  // namespace mixgeo
