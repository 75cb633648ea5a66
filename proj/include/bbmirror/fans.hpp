#pragma once

// Fans stored by their maximal cones. Faces are implicit and validity (cones
// meet in common faces) is only checked when validate() is called.

#include <string>
#include <vector>

#include "bbmirror/polyhedra.hpp"

namespace bbm {

struct Fan {
  std::vector<IntVec> rays;                    // primitive
  std::vector<std::vector<std::size_t>> cones;  // sorted ray indices per maximal cone, sorted list
  std::size_t ambient = 0;

  std::vector<IntVec> cone_rays(std::size_t i) const;
  RationalCone cone(std::size_t i) const;
  bool simplicial() const;
  friend bool operator==(const Fan&, const Fan&) = default;
};

/// Coefficients a_rho of a torus invariant divisor, indexed by the rays of a fan.
struct DivisorData {
  IntVec coefficients;
};

/// Inner normal fan of a full-dimensional polytope: rays are the primitive
/// facet normals (sorted), one maximal cone per vertex (in vertex order).
Fan normal_fan(const LatticePolytope& p);

struct CoxData {
  std::vector<std::vector<std::size_t>> cones;  // Cone(e_rho | rho in sigma), as index sets
  std::vector<std::vector<std::size_t>> primitive_collections;  // minimal ray sets in no cone
};

CoxData cox_data(const Fan& f);

/// Fan of the total space of the split bundle: rays u_rho - sum_i c_{i rho} e_i
/// followed by e_1..e_r, maximal cones sigma~ + Cone(e_1..e_r).
Fan bundle_fan(const Fan& base, const std::vector<DivisorData>& divisors);

/// Simplicial fan with the same rays, obtained by star subdivisions at rays in
/// lexicographic order (a pulling refinement).
Fan simplicial_refinement(const Fan& f);

/// Empty string when every cone is generated by its listed rays irredundantly and
/// every pair of cones meets in a common face; otherwise a description of the first problem.
std::string validate(const Fan& f);

/// True if x lies in some maximal cone.
bool in_support(const Fan& f, const IntVec& x);

}  // namespace bbm
