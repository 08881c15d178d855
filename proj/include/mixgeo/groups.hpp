#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "mixgeo/core.hpp"

namespace mixgeo {

using MulTable = Eigen::Matrix<int, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using Permutation = std::vector<int>;

/// A finite group given by its multiplication table, table(a, b) = a*b.
/// The constructor verifies the group axioms and throws InvalidParam if
/// any fails.
class GroupTable {
 public:
  GroupTable(MulTable table, std::string name);

  int order() const { return static_cast<int>(table_.rows()); }
  int mul(int a, int b) const { return table_(a, b); }
  int identity() const { return identity_; }
  int inverse(int a) const { return inverse_[a]; }
  const std::string& name() const { return name_; }
  const MulTable& table() const { return table_; }

  int element_order(int a) const;
  int power(int a, long long e) const;
  GroupTable renamed(std::string name) const;

 private:
  MulTable table_;
  int identity_ = 0;
  std::vector<int> inverse_;
  std::string name_;
};

/// Breadth-first closure under composition, (a*b)(x) = b(a(x)).
GroupTable closure_from_generators(const std::vector<Permutation>& gens, std::size_t cap = 2000,
                                   std::string name = "");

GroupTable cyclic(int n);
/// Dihedral group of the given order (2n).
GroupTable dihedral(int order);
/// Dicyclic group of the given order (4m).
GroupTable dicyclic(int order);
GroupTable symmetric(int n);
GroupTable alternating(int n);
GroupTable affine(int p);
GroupTable direct_product(const GroupTable& a, const GroupTable& b);

/// Elements x^i y^j with x^m = 1, y^n = x^s and y^-1 x y = x^a.
GroupTable metacyclic(int m, int n, int a, int s, std::string name);

/// N x| H where generator hgens[i] of H acts on N by the element map
/// actions[i]. The action is extended to all of H and checked.
GroupTable semidirect(const GroupTable& N, const GroupTable& H, const std::vector<int>& hgens,
                      const std::vector<std::vector<int>>& actions, std::string name);

/// Extends gens[i] -> images[i] to a homomorphism from g into h, returned
/// as an element map. Throws InvalidParam if the assignment is inconsistent
/// or the generators do not generate g.
std::vector<int> hom_from_generators(const GroupTable& g, const std::vector<int>& gens, const GroupTable& h,
                                     const std::vector<int>& images);

/// Parses tokens such as cyclic:12, dihedral:12, dicyclic:12, sym:4,
/// alt:4, affine:5, product:cyclic:3,sym:3 and small:16:3.
GroupTable preset(std::string_view token);

constexpr int kCatalogMaxOrder = 24;

/// One group per isomorphism class, in the standard small-group order.
std::vector<GroupTable> catalog(int order);

GroupTable parse_group_table(std::string_view text, std::string name = "table");
std::string write_group_table(const GroupTable& g);

struct ConnectionSet {
  std::vector<int> elements;  ///< sorted
  int r = 0;
  int z = 0;
};

ConnectionSet make_connection_set(const GroupTable& g, std::vector<int> elements);

/// Elements reachable from the identity by right multiplication by S.
bool generates(const GroupTable& g, const std::vector<int>& elements);

MixedGraph cayley_mixed(const GroupTable& g, const ConnectionSet& s);

/// Calls fn for every generating connection set with split (r, z), in
/// lexicographic order of the sorted element list, until fn returns false.
/// With reduce_inner set, only sets that are lexicographically least among
/// their conjugates are visited.
void for_each_connection_set(const GroupTable& g, int r, int z, bool reduce_inner,
                             const std::function<bool(const ConnectionSet&)>& fn);

std::vector<ConnectionSet> connection_sets(const GroupTable& g, int r, int z, bool reduce_inner = false);

}  // namespace mixgeo
