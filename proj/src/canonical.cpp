#include <algorithm>
#include <array>
#include <map>

#include "mixgeo/search.hpp"

namespace mixgeo {

namespace {

constexpr int kMaxCanonicalOrder = 12;

/// 0 none, 1 edge, 2 arc u->v, 3 arc v->u.
std::uint8_t relation(const MixedGraph& g, Vertex u, Vertex v) {
  if (g.has_edge(u, v)) return 1;
  if (g.has_arc(u, v)) return 2;
  if (g.has_arc(v, u)) return 3;
  return 0;
}

/// Colour refinement starting from the degree triple.
std::vector<int> refined_colours(const MixedGraph& g, const std::vector<std::vector<std::uint8_t>>& rel) {
  const int n = g.order();
  std::vector<int> colour(n);
  {
    std::map<std::array<int, 3>, int> ids;
    std::vector<std::array<int, 3>> sig(n);
    for (Vertex v = 0; v < n; ++v) {
      sig[v] = {g.undirected_degree(v), g.out_degree(v), g.in_degree(v)};
      ids[sig[v]] = 0;
    }
    int next = 0;
    for (auto& [k, id] : ids) id = next++;
    for (Vertex v = 0; v < n; ++v) colour[v] = ids[sig[v]];
  }
  int classes = *std::max_element(colour.begin(), colour.end()) + 1;
  while (true) {
    std::vector<std::vector<int>> sig(n);
    for (Vertex v = 0; v < n; ++v) {
      sig[v].push_back(colour[v]);
      std::vector<int> around;
      for (Vertex w = 0; w < n; ++w)
        if (rel[v][w]) around.push_back(rel[v][w] * 1000 + colour[w]);
      std::sort(around.begin(), around.end());
      sig[v].insert(sig[v].end(), around.begin(), around.end());
    }
    std::map<std::vector<int>, int> ids;
    for (auto& s : sig) ids[s] = 0;
    int next = 0;
    for (auto& [k, id] : ids) id = next++;
    for (Vertex v = 0; v < n; ++v) colour[v] = ids[sig[v]];
    if (next == classes) break;
    classes = next;
  }
  return colour;
}

struct CanonicalSearch {
  int n;
  const std::vector<std::vector<std::uint8_t>>& rel;
  std::vector<int> slot_colour;  // colour required at each position
  const std::vector<int>& colour;
  std::vector<Vertex> placed;
  std::vector<char> used;
  std::vector<std::uint8_t> code, best;
  bool have_best = false;
  int improvements = 0;

  void run(int pos, bool strictly_less) {
    if (pos == n) {
      if (!have_best || strictly_less) {
        best = code;
        have_best = true;
        ++improvements;
      }
      return;
    }
    const int seen = improvements;
    for (Vertex v = 0; v < n; ++v) {
      if (used[v] || colour[v] != slot_colour[pos]) continue;
      // A new best found below shares the current prefix, so later siblings
      // must be compared against it from here on.
      if (improvements != seen) strictly_less = false;
      const std::size_t mark = code.size();
      bool less = strictly_less, prune = false;
      for (int q = 0; q < pos; ++q) {
        const std::uint8_t e = rel[placed[q]][v];
        if (have_best && !less) {
          const std::uint8_t b = best[code.size()];
          if (e > b) {
            prune = true;
            break;
          }
          if (e < b) less = true;
        }
        code.push_back(e);
      }
      if (!prune) {
        used[v] = 1;
        placed.push_back(v);
        run(pos + 1, less);
        placed.pop_back();
        used[v] = 0;
      }
      code.resize(mark);
    }
  }
};

}  // namespace

std::vector<std::uint8_t> canonical_key(const MixedGraph& g) {
  const int n = g.order();
  if (n > kMaxCanonicalOrder)
    throw Error(ErrorKind::TooLarge, "canonical form supports at most " + std::to_string(kMaxCanonicalOrder) + " vertices");
  std::vector<std::vector<std::uint8_t>> rel(n, std::vector<std::uint8_t>(n, 0));
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v)
      if (u != v) rel[u][v] = relation(g, u, v);
  const auto colour = refined_colours(g, rel);
  std::vector<int> slots = colour;
  std::sort(slots.begin(), slots.end());
  CanonicalSearch cs{n, rel, slots, colour, {}, std::vector<char>(n, 0), {}, {}, false, 0};
  cs.run(0, false);
  std::vector<std::uint8_t> key{static_cast<std::uint8_t>(n)};
  // Colour classes are part of the key so that the code is compared only
  // between equally refined graphs.
  for (int c : slots) key.push_back(static_cast<std::uint8_t>(c));
  key.insert(key.end(), cs.best.begin(), cs.best.end());
  return key;
}

std::vector<MixedGraph> iso_distinct(const std::vector<MixedGraph>& graphs) {
  std::vector<MixedGraph> out;
  std::vector<std::vector<std::uint8_t>> keys;
  for (const auto& g : graphs) {
    auto key = canonical_key(g);
    if (std::find(keys.begin(), keys.end(), key) != keys.end()) continue;
    keys.push_back(std::move(key));
    out.push_back(g);
  }
  return out;
}

}  // namespace mixgeo
