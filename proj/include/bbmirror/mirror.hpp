#pragma once

// The double mirror pipeline: one nef partition with two systems of base
// points, the shared cone sigma, the coordinate set nu, both bundle-fan
// triangulations and the superpotential bookkeeping.

#include <string>
#include <vector>

#include "bbmirror/cox.hpp"
#include "bbmirror/fans.hpp"
#include "bbmirror/nefpart.hpp"
#include "bbmirror/secondary.hpp"

namespace bbm {

struct DoubleMirrorInput {
  std::vector<LatticePolytope> parts;
  std::vector<IntVec> base_points;
  std::vector<IntVec> alt_base_points;
};

struct TranslatedPartition {
  NefPartition partition;  // parts Delta_i - p_i + p'_i with base points p'_i
  IntMatrix shear;         // on M + Z^r, sends (x, e_i) to (x - p_i + p'_i, e_i)
};

/// Throws InputError if an alternative point lies outside its part or the sums differ.
TranslatedPartition translated_partition(const NefPartition& p, const std::vector<IntVec>& alt);

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// One side of the double mirror, built from one system of base points q.
struct MirrorSide {
  std::vector<IntVec> base_points;
  std::vector<LatticePolytope> nabla;
  LatticePolytope nabla_sum;
  Fan base_fan;                      // simplicial refinement of the normal fan of nabla_sum
  std::vector<DivisorData> divisors;  // coefficients of E_j on base_fan's rays
  Fan bundle;                        // rays written as points of nu
  std::vector<IntVec> splitting;     // (q_j, e_j)
  std::vector<std::size_t> fiber_labels;  // labels of the splitting vectors in nu
  std::vector<std::size_t> base_labels;   // labels of the lifted base rays in nu
  Triangulation triangulation;
  RatVec certificate;
  ChamberDescription chamber;
  TorusSubgroupData ambient_degrees;  // s_nu of the base fan rays
  std::vector<LatticePolytope> recovered;
};

struct MonomialRow {
  IntVec point;  // lattice point of sigma at level 1
  std::string coefficient;
  IntVec exponents;  // <v, point> for v in nu
  std::size_t group = 0;      // w_i for the base splitting
  std::size_t group_alt = 0;  // w'_i for the alternative splitting
};

struct SuperpotentialSkeleton {
  std::vector<MonomialRow> rows;  // sorted by point
};

struct MonomialTableRow {
  IntVec point;
  std::string coefficient;
  IntVec exponents;  // over the side's columns
  std::size_t group = 0;
};

struct MonomialTable {
  std::vector<std::size_t> columns;  // labels in nu: fiber coordinates first, then base rays
  std::vector<MonomialTableRow> rows;
};

struct RChargeRecord {
  std::vector<std::size_t> fiber;      // shared labels first
  std::vector<std::size_t> fiber_alt;  // shared labels first, same order
  std::size_t overlap = 0;
  bool relation_verified = false;
  IntVec witness;  // over nu
  bool witness_in_kernel = false;
  bool splitting_character = false;
};

struct DoubleMirrorReport {
  std::vector<LatticePolytope> parts;  // after moving m to the origin
  IntVec translation;                  // applied to part 1 and its base points
  CayleyData cayley;
  RationalCone sigma;
  GorensteinData sigma_gorenstein;
  std::vector<SplittingData> splittings;
  PointConfig nu;
  TorusSubgroupData nu_degrees;
  bool quasi_cy = false;
  std::optional<IntVec> cy_witness;
  MirrorSide side;
  MirrorSide side_alt;
  IntMatrix shear;
  RChargeRecord rcharge;
  SuperpotentialSkeleton skeleton;
  MonomialTable table;
  MonomialTable table_alt;
  bool identical_splittings = false;
  std::vector<Check> checks;
  bool passed() const;
};

/// Throws InputError when either base point system fails the nef partition axioms.
/// Verification failures are recorded in checks.
DoubleMirrorReport double_mirror_pipeline(const DoubleMirrorInput& in);

MonomialTable monomial_table(const SuperpotentialSkeleton& s, const MirrorSide& side, bool alt);

RChargeRecord rcharge_check(const PointConfig& nu, const std::vector<IntVec>& f, const std::vector<IntVec>& f_alt,
                            const TorusSubgroupData& s);

/// Every splitting of sigma written back as a base point system (q_1..q_r)
/// with q_i in Delta_i and sum q_i = m. Two or more systems mean a double mirror.
struct BasePointSystems {
  std::vector<std::vector<IntVec>> systems;  // sorted
  std::vector<bool> repeated;
};

/// Throws InputError when the base points do not make a nef partition.
BasePointSystems base_point_systems(const std::vector<LatticePolytope>& parts, const std::vector<IntVec>& base_points);

/// "a^2 b c'" style rendering of an exponent vector over named columns.
std::string monomial_string(const IntVec& exponents, const std::vector<std::string>& names);

/// Human readable report with the two monomial columns side by side.
std::string report_text(const DoubleMirrorReport& r);

}  // namespace bbm
