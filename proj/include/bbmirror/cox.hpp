#pragma once

// Subgroups S of a torus G_m^n, kept as the presentation of their character
// group coker(f_nu) together with the degree of every coordinate.

#include <optional>
#include <string>
#include <vector>

#include "bbmirror/exactalg.hpp"
#include "bbmirror/fans.hpp"

namespace bbm {

struct Character {
  IntVec free_part;
  IntVec torsion_part;  // residues in [0, d_j)
  friend bool operator==(const Character&, const Character&) = default;
  bool trivial() const;
};

std::string to_string(const Character& c);

struct TorusSubgroupData {
  AbelianPresentation presentation;
  std::vector<Character> coordinate_degrees;

  std::size_t coordinates() const { return coordinate_degrees.size(); }
  Character character(const IntVec& exponents) const;  // of a Laurent monomial in the coordinates
  Character add(const Character& a, const Character& b) const;
  Character zero() const;
};

/// S_nu for points v_1..v_n of Z^d: f_nu(m) = (<v_i, m>)_i.
TorusSubgroupData s_nu(const std::vector<IntVec>& nu, std::size_t d);

/// The subgroup of G_m^n that is the image of G_m^k x prod mu_{d_j} under the
/// given coordinate degrees; returned in canonical form.
TorusSubgroupData subgroup_from_degrees(const IntMatrix& free_degrees, const IntMatrix& torsion_degrees,
                                        const IntVec& torsion_orders);

/// Lattice of Laurent monomials of trivial degree (= im f_nu), in Hermite normal form.
IntMatrix relation_lattice(const TorusSubgroupData& s);

/// True when both describe the same subgroup of G_m^n.
bool same_subgroup(const TorusSubgroupData& a, const TorusSubgroupData& b);

/// nu(S): one point per coordinate, in Z^{rank of the relation lattice}.
std::vector<IntVec> nu_of_subgroup(const TorusSubgroupData& s);

/// W with nu2_i = W nu1_i for all i and det W = +-1, if it exists. Both lists
/// must span their ambient space.
std::optional<IntMatrix> unimodular_equivalence(const std::vector<IntVec>& nu1, const std::vector<IntVec>& nu2);

/// Sum of all coordinate degrees has zero free part.
bool quasi_cy(const TorusSubgroupData& s);

/// Some m with <m, v_i> = 1 for every i.
std::optional<IntVec> cy_condition(const std::vector<IntVec>& nu, std::size_t d);

/// chi_D = sum a_rho deg(x_rho).
Character char_of_divisor(const TorusSubgroupData& s, const DivisorData& d);

/// Rows: free generators, then torsion generators as "mod d"; columns: coordinates.
std::string degree_matrix_text(const TorusSubgroupData& s);

}  // namespace bbm
