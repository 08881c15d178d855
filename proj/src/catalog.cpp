#include <array>

#include "mixgeo/groups.hpp"

namespace mixgeo {

namespace {

GroupTable prod(const GroupTable& a, const GroupTable& b) { return direct_product(a, b); }

GroupTable named(GroupTable g, std::string name) { return g.renamed(std::move(name)); }

/// Automorphism of N given by images of its generators, as an element map.
std::vector<int> automorphism(const GroupTable& N, const std::vector<int>& gens, const std::vector<int>& images) {
  return hom_from_generators(N, gens, N, images);
}

GroupTable z4z2_extension(std::vector<int> images, std::string name) {
  // Z4 x Z2 indexed a*2+b; generators (1,0) -> 2 and (0,1) -> 1.
  const GroupTable N = prod(cyclic(4), cyclic(2));
  return semidirect(N, cyclic(2), {1}, {automorphism(N, {2, 1}, images)}, std::move(name));
}

GroupTable sl23() {
  // Q8 as x^i y^j (index i + 4j): i = x -> 1, j = y -> 4, k = xy -> 5.
  const GroupTable q8 = metacyclic(4, 2, 3, 2, "Q8");
  return semidirect(q8, cyclic(3), {1}, {automorphism(q8, {1, 4}, {4, 5})}, "SL(2,3)");
}

GroupTable z3_by_d8() {
  const GroupTable d8 = dihedral(8);
  // Rotation x (index 1) inverts Z3, reflection y (index 4) acts trivially.
  return semidirect(cyclic(3), d8, {1, 4}, {{0, 2, 1}, {0, 1, 2}}, "Z3:D8");
}

GroupTable generalized_dihedral_z3z3() {
  const GroupTable N = prod(cyclic(3), cyclic(3));
  std::vector<int> inv(N.order());
  for (int x = 0; x < N.order(); ++x) inv[x] = N.inverse(x);
  return semidirect(N, cyclic(2), {1}, {inv}, "(Z3xZ3):Z2");
}

std::vector<GroupTable> build(int order) {
  const auto Z = cyclic;
  switch (order) {
    case 4: return {Z(4), prod(Z(2), Z(2))};
    case 6: return {named(dihedral(6), "S3"), Z(6)};
    case 8:
      return {Z(8), prod(Z(4), Z(2)), dihedral(8), metacyclic(4, 2, 3, 2, "Q8"), prod(prod(Z(2), Z(2)), Z(2))};
    case 9: return {Z(9), prod(Z(3), Z(3))};
    case 10: return {dihedral(10), Z(10)};
    case 12: return {dicyclic(12), Z(12), alternating(4), dihedral(12), prod(Z(6), Z(2))};
    case 14: return {dihedral(14), Z(14)};
    case 16: {
      const GroupTable z2 = Z(2);
      return {Z(16),
              prod(Z(4), Z(4)),
              z4z2_extension({3, 1}, "(Z4xZ2):Z2"),
              metacyclic(4, 4, 3, 0, "Z4:Z4"),
              prod(Z(8), z2),
              metacyclic(8, 2, 5, 0, "M16"),
              dihedral(16),
              metacyclic(8, 2, 3, 0, "SD16"),
              metacyclic(8, 2, 7, 4, "Q16"),
              prod(prod(Z(4), z2), z2),
              prod(dihedral(8), z2),
              prod(metacyclic(4, 2, 3, 2, "Q8"), z2),
              z4z2_extension({2, 5}, "Pauli"),
              prod(prod(prod(z2, z2), z2), z2)};
    }
    case 18:
      return {dihedral(18), Z(18), prod(named(dihedral(6), "S3"), Z(3)), generalized_dihedral_z3z3(),
              prod(Z(6), Z(3))};
    case 20: return {dicyclic(20), Z(20), affine(5), dihedral(20), prod(Z(10), Z(2))};
    case 21: return {metacyclic(7, 3, 2, 0, "Z7:Z3"), Z(21)};
    case 22: return {dihedral(22), Z(22)};
    case 24: {
      const GroupTable s3 = named(dihedral(6), "S3");
      const GroupTable z2 = Z(2);
      return {metacyclic(3, 8, 2, 0, "Z3:Z8"),
              Z(24),
              sl23(),
              dicyclic(24),
              prod(Z(4), s3),
              dihedral(24),
              prod(z2, dicyclic(12)),
              z3_by_d8(),
              prod(Z(12), z2),
              prod(Z(3), dihedral(8)),
              prod(Z(3), metacyclic(4, 2, 3, 2, "Q8")),
              symmetric(4),
              prod(z2, alternating(4)),
              prod(prod(z2, z2), s3),
              prod(prod(Z(6), z2), z2)};
    }
    default:
      // Every remaining order up to 24 is 1, a prime, or 15 = 3 * 5, with
      // only the cyclic group.
      return {Z(order)};
  }
}

}  // namespace

std::vector<GroupTable> catalog(int order) {
  if (order < 1) throw Error(ErrorKind::InvalidParam, "group order must be positive");
  if (order > kCatalogMaxOrder)
    throw Error(ErrorKind::CatalogIncomplete,
                "embedded catalog covers orders up to " + std::to_string(kCatalogMaxOrder) + "; supply a group table");
  static const auto all = [] {
    std::array<std::vector<GroupTable>, kCatalogMaxOrder + 1> a;
    for (int n = 1; n <= kCatalogMaxOrder; ++n) a[n] = build(n);
    return a;
  }();
  return all[order];
}

}  // namespace mixgeo
