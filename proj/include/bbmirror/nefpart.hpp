#pragma once

// Nef partitions, their duals, Cayley cones and splittings.

#include <optional>
#include <string>
#include <vector>

#include "bbmirror/polyhedra.hpp"

namespace bbm {

struct NefPartition {
  std::vector<LatticePolytope> parts;
  std::vector<IntVec> base_points;
  LatticePolytope ambient;  // Minkowski sum of the parts
  IntVec m;                 // sum of the base points
  std::size_t rank() const { return ambient.ambient_dim(); }
  std::size_t length() const { return parts.size(); }
};

/// Throws InputError naming the violated condition.
NefPartition validate_nef_partition(const std::vector<LatticePolytope>& parts, const std::vector<IntVec>& base_points);

/// r-subsets of affinely independent lattice points of p with every facet
/// containing exactly r-1 of them. Sorted tuples, sorted list.
std::vector<std::vector<IntVec>> special_simplices(const LatticePolytope& p, std::size_t r);

/// nabla_j = {n : <x - p_i, n> >= -delta_ij for x in Delta_i}. Throws InputError
/// if some nabla_j has a non-integral vertex.
std::vector<LatticePolytope> dual_nef_partition(const NefPartition& p);

struct CayleyData {
  LatticePolytope polytope;   // conv(Delta_i x e_i) in M + Z^r
  RationalCone cone;          // cone over it
  std::vector<IntVec> fiber_basis;  // e_i
  std::optional<GorensteinData> gorenstein;
  std::size_t rank = 0;  // of M
  std::size_t length = 0;
};

CayleyData cayley(const std::vector<LatticePolytope>& parts);

struct SplittingData {
  std::vector<IntVec> vectors;  // sorted
  bool repeated = false;        // some vector occurs twice
  std::vector<LatticePolytope> recovered;  // one polytope per vector, in recovery coordinates
  friend bool operator==(const SplittingData& a, const SplittingData& b) { return a.vectors == b.vectors; }
};

/// All r-multisets of lattice points of k's dual at level <., deg> = 1 that sum
/// to deg_dual(k). Empty when r differs from the index. Throws InputError if k
/// is not reflexive Gorenstein.
std::vector<SplittingData> splittings(const RationalCone& k, std::size_t r);

/// Splittings of the dual of the Cayley cone; the vectors are lattice points of
/// the Cayley polytope.
std::vector<SplittingData> splittings(const CayleyData& c);

/// Polytopes {y in k : <y, f_j> = delta_ij}, written in coordinates of the
/// common kernel of the f_j. When the last r coordinates of the f_j form a
/// unimodular block, the chart simply drops those coordinates.
std::vector<LatticePolytope> recover_partition(const RationalCone& k, const std::vector<IntVec>& f);

/// Lexicographically first base points making the parts a nef partition, if any.
std::optional<std::vector<IntVec>> find_base_points(const std::vector<LatticePolytope>& parts);

struct CayleyDualityReport {
  bool cones_dual = false;         // dual of Cayley(Delta_i - p_i) = Cayley(nabla_j)
  bool conv_delta_dual_nabla = false;  // conv(Delta_i - p_i) dual to sum nabla_j
  bool conv_nabla_dual_delta = false;  // conv(nabla_j) dual to Delta - m
  bool all() const { return cones_dual && conv_delta_dual_nabla && conv_nabla_dual_delta; }
};

CayleyDualityReport cayley_duality_check(const NefPartition& p);

}  // namespace bbm
