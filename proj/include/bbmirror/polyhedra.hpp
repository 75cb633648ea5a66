#pragma once

// Exact lattice polytopes and rational polyhedral cones.
//
// Hulls and duals are computed with the double description method over GMP
// integers. Vertex, facet and generator lists are kept in lexicographic order
// so that equality of polytopes and cones is plain list comparison.

#include <optional>
#include <string>
#include <vector>

#include "bbmirror/exactalg.hpp"

namespace bbm {

/// Which lattice a point lives in. M pairs with N; MBar = M + Z^r pairs with NBar.
enum class Lattice { M, N, MBar, NBar };

struct LatticePoint {
  IntVec coords;
  Lattice tag = Lattice::M;
  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
};

/// Extended pairing <(m,a),(n,b)> = <m,n> + sum a_i b_i. Rejects pairs that are
/// not dual to each other and rank mismatches.
Int pairing(const LatticePoint& a, const LatticePoint& b);

// ---------------------------------------------------------------------------
// Cone primitives

struct ConeHRep {
  std::vector<IntVec> facets;     // n.x >= 0, primitive, sorted
  std::vector<IntVec> equations;  // e.x == 0, basis of the orthogonal complement of the span
};

/// Facet description of the cone generated by `gens` in Q^dim.
ConeHRep cone_facets(const std::vector<IntVec>& gens, std::size_t dim);

/// Extreme rays of the pointed cone {y : a.y >= 0 for a in ineqs}. Throws
/// InputError if the cone has a lineality space.
std::vector<IntVec> cone_rays(const std::vector<IntVec>& ineqs, std::size_t dim);

// ---------------------------------------------------------------------------

/// Inequality <x, normal> >= -offset (or == -offset for equations).
struct Facet {
  IntVec normal;
  Int offset;
  friend bool operator==(const Facet&, const Facet&) = default;
  friend bool operator<(const Facet& a, const Facet& b) {
    if (a.normal != b.normal) return a.normal < b.normal;
    return a.offset < b.offset;
  }
};

class LatticePolytope {
 public:
  /// Convex hull of a nonempty list of integer points of common length.
  static LatticePolytope hull(std::vector<IntVec> points);

  const std::vector<IntVec>& vertices() const { return vertices_; }
  const std::vector<Facet>& facets() const { return facets_; }
  const std::vector<Facet>& equations() const { return equations_; }
  std::size_t dim() const { return dim_; }
  std::size_t ambient_dim() const { return ambient_; }
  bool full_dimensional() const { return dim_ == ambient_; }

  bool contains(const IntVec& x) const;
  bool contains(const RatVec& x) const;
  /// Relative interior.
  bool contains_interior(const IntVec& x) const;
  /// All lattice points in lexicographic order.
  std::vector<IntVec> lattice_points() const;
  std::vector<IntVec> interior_lattice_points() const;

  LatticePolytope translate(const IntVec& t) const;
  LatticePolytope dilate(const Int& k) const;

  friend bool operator==(const LatticePolytope& a, const LatticePolytope& b) {
    return a.vertices_ == b.vertices_;
  }

 private:
  std::vector<IntVec> vertices_;
  std::vector<Facet> facets_;
  std::vector<Facet> equations_;
  std::size_t dim_ = 0;
  std::size_t ambient_ = 0;
};

std::string to_string(const LatticePolytope& p);

/// Dual of P with respect to an interior base point; vertices may be rational.
struct DualPolytope {
  std::vector<RatVec> vertices;  // sorted
  bool integral = false;
  std::optional<LatticePolytope> polytope;  // present when integral
};

DualPolytope dual_polytope(const LatticePolytope& p, const IntVec& base);

/// True when base is interior and every facet sits at lattice distance 1 from it.
bool is_reflexive_wrt(const LatticePolytope& p, const IntVec& base);
/// Reflexive with respect to its unique interior lattice point, which is returned.
std::optional<IntVec> reflexive_center(const LatticePolytope& p);

/// Vertices (sorted) of the polytope {x : <x, normal> >= -offset}. Throws
/// InputError if it is empty or unbounded.
std::vector<RatVec> polytope_vertices(const std::vector<Facet>& ineqs, std::size_t dim);

LatticePolytope minkowski_sum(const LatticePolytope& p, const LatticePolytope& q);

struct GorensteinPolytopeData {
  Int index;
  IntVec interior_point;  // the interior point of index * P
};

/// Smallest r <= dim + 1 with rP - m reflexive for an interior lattice point m.
std::optional<GorensteinPolytopeData> gorenstein_polytope_data(const LatticePolytope& p);

// ---------------------------------------------------------------------------

class RationalCone {
 public:
  /// Strictly convex cone generated by the given vectors (zero vectors ignored).
  static RationalCone from_generators(const std::vector<IntVec>& gens, std::size_t dim);
  /// Pointed cone {x : n.x >= 0}.
  static RationalCone from_inequalities(const std::vector<IntVec>& normals, std::size_t dim);

  const std::vector<IntVec>& generators() const { return generators_; }
  const std::vector<IntVec>& facet_normals() const { return facets_; }
  const std::vector<IntVec>& equations() const { return equations_; }
  std::size_t dim() const { return ambient_ - equations_.size(); }
  std::size_t ambient_dim() const { return ambient_; }
  bool full_dimensional() const { return equations_.empty(); }
  bool contains(const IntVec& x) const;
  bool contains_interior(const IntVec& x) const;

  friend bool operator==(const RationalCone& a, const RationalCone& b) {
    return a.ambient_ == b.ambient_ && a.generators_ == b.generators_;
  }

 private:
  friend RationalCone dual_cone(const RationalCone& c);
  std::vector<IntVec> generators_;
  std::vector<IntVec> facets_;
  std::vector<IntVec> equations_;
  std::size_t ambient_ = 0;
};

/// Dual cone of a full-dimensional strictly convex cone.
RationalCone dual_cone(const RationalCone& c);

/// Extreme, primitive, sorted, deduplicated generators of the cone spanned by gens.
std::vector<IntVec> extreme_generators(const std::vector<IntVec>& gens, std::size_t dim);

struct GorensteinData {
  IntVec deg_dual;            // <g, deg_dual> = 1 on every generator g
  std::optional<IntVec> deg;  // degree element of the dual cone, if Gorenstein
  std::optional<Int> index;   // <deg, deg_dual>
};

/// Lattice chart for the slices <x, deg_dual> = k: to_chart maps x to
/// (k, y) with y in Z^{n-1}; from_chart is its inverse.
struct SliceChart {
  IntMatrix to_chart;
  IntMatrix from_chart;
  IntVec project(const IntVec& x) const;         // drops the height coordinate
  IntVec lift(const IntVec& y, const Int& k) const;
};

SliceChart slice_chart(const IntVec& deg_dual);

/// The slice polytope {x in C : <x, deg_dual> = k} in chart coordinates.
LatticePolytope slice_polytope(const RationalCone& c, const SliceChart& chart, const Int& k);

/// The three equivalent characterizations of a reflexive Gorenstein cone of
/// index r, each computed by its own route. Absent means "no such r".
struct ReflexiveGorensteinCharacterizations {
  std::optional<Int> dual_is_gorenstein_index;  // a) index of a reflexive Gorenstein cone
  std::optional<Int> reflexive_slice;           // b) smallest k with slice k reflexive
  std::optional<Int> slice_one_gorenstein;      // c) Gorenstein index of slice 1
  bool interior_point_is_deg = true;            // slice r has interior point deg
  bool agree() const;
};

ReflexiveGorensteinCharacterizations characterize_gorenstein(const RationalCone& c, const GorensteinData& g);

/// Degree element(s) of a full-dimensional strictly convex cone, with the
/// equivalences re-verified. Throws VerificationError if the characterizations disagree.
std::optional<GorensteinData> gorenstein_cone_data(const RationalCone& c);

IntMatrix inverse_unimodular(const IntMatrix& v);

}  // namespace bbm
