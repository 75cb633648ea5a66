#pragma once

// Triangulations of point configurations lying on an affine hyperplane
// <., h> = 1, regular subdivisions from weights, and GKZ chambers.

#include <optional>
#include <string>
#include <vector>

#include "bbmirror/cox.hpp"
#include "bbmirror/fans.hpp"

namespace bbm {

struct PointConfig {
  std::vector<IntVec> points;
  RatVec height;  // <v, height> = 1 for every point
  std::size_t dim = 0;

  /// Throws InputError when the points do not lie on a common hyperplane off the origin
  /// or do not span Q^dim.
  static PointConfig make(std::vector<IntVec> points, std::size_t dim);
  std::optional<std::size_t> label_of(const IntVec& x) const;
};

struct Triangulation {
  std::vector<std::vector<std::size_t>> simplices;  // sorted labels, sorted list
  friend bool operator==(const Triangulation&, const Triangulation&) = default;
  std::vector<std::size_t> used_labels() const;
  std::vector<std::size_t> unused_labels(std::size_t n) const;
};

std::string to_string(const Triangulation& t);

/// Projected lower hull of the lifted configuration. Cells are the extreme
/// points of lower faces.
struct Subdivision {
  std::vector<std::vector<std::size_t>> cells;
  bool simplicial = false;  // every cell is a simplex
  bool generic = false;     // additionally no non-extreme point lies on the lower hull
  Triangulation triangulation() const { return {cells}; }
};

Subdivision triangulation_from_weights(const PointConfig& nu, const RatVec& weights);

/// Empty when T is a triangulation of Cone(nu): full rank simplices, proper
/// pairwise intersections, and coverage (each interior ridge in exactly two simplices).
std::string check_triangulation(const PointConfig& nu, const Triangulation& t);

/// Rows l with l.w > 0 for all weights w inducing T (one per simplex and outside point).
std::vector<IntVec> regularity_inequalities(const PointConfig& nu, const Triangulation& t);

/// Integral weights inducing T, or absent when T is not regular. Throws InputError
/// if T is not a triangulation.
std::optional<RatVec> regularity_certificate(const PointConfig& nu, const Triangulation& t);

/// Simplices = maximal cones of a simplicial fan whose rays are points of nu.
Triangulation triangulation_of_bundle_fan(const Fan& f, const PointConfig& nu);

struct ChamberDescription {
  std::vector<IntVec> weight_inequalities;  // strict, on Q^t
  RatVec certificate;
  TorusSubgroupData degrees;                     // s_nu(nu)
  std::vector<RatVec> character_inequalities;  // strict, on the free part of the character space
  RatVec character_certificate;

  bool contains_weight(const RatVec& w) const;
  bool contains_character(const RatVec& chi) const;
};

/// Throws InputError when T is not a regular triangulation.
ChamberDescription chamber_of_triangulation(const PointConfig& nu, const Triangulation& t);

}  // namespace bbm
