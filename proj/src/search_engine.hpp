#pragma once

#include <cstdint>
#include <vector>

#include "mixgeo/core.hpp"

namespace mixgeo::detail {

/// Partial mixed graph that stays k-geodetic under insertion.
///
/// dist(s, t) is the length of the unique non-backtracking walk of length
/// at most k from s to t, or kNone. Inserting an element only creates walks
/// that use it once (a second use would close a short walk that the first
/// use already reports), so each insertion is checked by composing the
/// walks into its tail with the walks out of its head.
class GeodeticState {
 public:
  static constexpr std::uint8_t kNone = 255;
  enum Rel : std::uint8_t { kNoRel = 0, kEdge = 1, kArcOut = 2, kArcIn = 3 };

  GeodeticState(int n, int k);

  int order() const { return n_; }
  int k() const { return k_; }
  std::uint8_t dist(int s, int t) const { return dist_[s * n_ + t]; }
  std::uint8_t rel(int u, int v) const { return rel_[u * n_ + v]; }
  int undirected_degree(int u) const { return deg_e_[u]; }
  int out_degree(int u) const { return deg_a_[u]; }
  int incidence(int u) const { return incid_[u]; }

  /// Each returns false and leaves the state unchanged if the element
  /// clashes with an existing one or breaks k-geodecity.
  bool add_edge(int a, int b);
  bool add_arc(int a, int b);
  /// Removes the most recently added element.
  void undo();
  std::size_t elements() const { return log_.size(); }

  MixedGraph graph() const;

 private:
  struct Pending {
    int s, t;
    std::uint8_t len;
  };
  struct LogEntry {
    int a, b;
    bool edge;
    std::size_t dist_mark;
  };

  bool collect(int a, int b, bool second_dart);

  int n_, k_;
  std::vector<std::uint8_t> dist_;
  std::vector<std::uint8_t> rel_;
  std::vector<int> deg_e_, deg_a_, incid_;
  std::vector<std::uint32_t> stamp_;
  std::uint32_t epoch_ = 0;
  std::vector<Pending> pending_;
  std::vector<int> changed_;  ///< flat indices written, for undo
  std::vector<LogEntry> log_;
};

}  // namespace mixgeo::detail
