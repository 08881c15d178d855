#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mixgeo/error.hpp"

namespace mixgeo {

/// Census of the mixed Moore tree: U[t-1] edge-entered and Z[t-1]
/// arc-entered vertices at depth t, for t = 1..k.
struct MooreLevels {
  int r = 0, z = 0, k = 0;
  std::vector<std::uint64_t> U;
  std::vector<std::uint64_t> Z;
  std::uint64_t M = 0;
};

MooreLevels moore_levels(int r, int z, int k);
std::uint64_t moore_mixed(int r, int z, int k);

/// Quantities appearing in the real closed forms. Note v equals phi^2.
template <typename Scalar>
struct BoundSpectrum {
  Scalar phi{}, lambda1{}, lambda2{};
  Scalar v{}, u1{}, u2{}, A{}, B{};

  static BoundSpectrum compute(int r, int z) {
    using std::sqrt;
    BoundSpectrum s;
    const Scalar R(r), Z(z);
    s.phi = sqrt((R + Z - Scalar(1)) * (R + Z - Scalar(1)) + Scalar(4) * Z);
    s.lambda1 = (R + Z - Scalar(1) + s.phi) / Scalar(2);
    s.lambda2 = (R + Z - Scalar(1) - s.phi) / Scalar(2);
    s.v = (Z + R) * (Z + R) + Scalar(2) * (Z - R) + Scalar(1);
    const Scalar sv = sqrt(s.v);
    s.u1 = (Z + R - Scalar(1) - sv) / Scalar(2);
    s.u2 = (Z + R - Scalar(1) + sv) / Scalar(2);
    if (s.v > Scalar(0)) {
      s.A = (sv - (Z + R + Scalar(1))) / (Scalar(2) * sv);
      s.B = (sv + (Z + R + Scalar(1))) / (Scalar(2) * sv);
    }
    return s;
  }
};

namespace detail {
void check_degree_args(int r, int z, int k, int k_min);
}

/// Real-valued Moore bound. Throws DegenerateRoot when a root of the
/// characteristic quadratic equals 1 (r + 2z = 2) or the roots coincide
/// (r = 1, z = 0).
template <typename Scalar = double>
Scalar moore_closed_form(int r, int z, int k) {
  using std::pow;
  detail::check_degree_args(r, z, k, 1);
  if (r + 2 * z == 2)
    throw Error(ErrorKind::DegenerateRoot, "a root equals 1 for r=" + std::to_string(r) + ", z=" + std::to_string(z));
  if (r == 1 && z == 0) throw Error(ErrorKind::DegenerateRoot, "repeated root for r=1, z=0");
  const auto s = BoundSpectrum<Scalar>::compute(r, z);
  auto geo = [k](Scalar u) { return (pow(u, Scalar(k + 1)) - Scalar(1)) / (u - Scalar(1)); };
  return s.A * geo(s.u1) + s.B * geo(s.u2);
}

/// A(r,z,k): arc-entered vertices in one undirected branch of the Moore
/// tree down to depth k-1.
std::uint64_t arrow_count(int r, int z, int k);

template <typename Scalar = double>
Scalar arrow_count_closed_form(int r, int z, int k) {
  using std::pow;
  detail::check_degree_args(r, z, k, 2);
  if (r == 0 || z == 0) return Scalar(0);
  const auto s = BoundSpectrum<Scalar>::compute(r, z);
  // sum_{i=0}^{k-2} lambda^i
  auto geo = [&](Scalar lam, bool unit) {
    if (unit) return Scalar(k - 1);
    return (pow(lam, Scalar(k - 1)) - Scalar(1)) / (lam - Scalar(1));
  };
  const bool unit = (r + 2 * z == 2);
  return Scalar(r) * Scalar(z) / s.phi * (geo(s.lambda1, unit) - geo(s.lambda2, false));
}

std::uint64_t excess_lb_totally_regular(int r, int z, int k);
std::uint64_t excess_lb_general(int r, int z, int k);

struct Chain {
  int start_level = 0;
  /// Vertex positions in the undirected branch, numbered breadth first
  /// from 1 with the edge child before the arc child.
  std::vector<int> positions;
  int length() const { return static_cast<int>(positions.size()); }
  int transversal() const { return (length() + 2) / 3; }
};

struct ChainDecomposition {
  int k = 0;
  std::vector<Chain> chains;
  /// z_prime[t-1] = Z'_t for t = 1..k-2.
  std::vector<std::uint64_t> z_prime;
  /// Positions of arc-entered vertices at levels 2..k-2.
  std::vector<int> arrow_positions;
  std::uint64_t total_transversal = 0;
};

/// Builds the undirected branch explicitly for r = z = 1.
ChainDecomposition chain_decomposition(int k);
/// Evaluates the chain-transversal defect bound for r = z = 1 directly.
std::uint64_t defect_lb_unit(int k);

/// Odd c with c^2 = 4r-3 and c | (4z-3)(4z+5), if any.
std::optional<long long> bosak_admissible(int r, int z);

enum class DefectOneClause { None, RIsTwo, FourRPlusOne, FourRMinusSeven };

struct DefectOneResult {
  bool admissible = false;
  DefectOneClause clause = DefectOneClause::None;
  long long c = 0;
};

DefectOneResult defect_one_admissible(int r, int z);
bool excess_one_admissible(int r, int z);
bool excess_one_possible(int r, int z, int k);

}  // namespace mixgeo
