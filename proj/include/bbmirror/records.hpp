#pragma once

// File formats. The plain format is a "d n" header followed by n rows of d
// integers. Structured records are JSON objects with a "type" field; large
// integers are written as decimal strings and rationals as "p/q" strings.

#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "bbmirror/mirror.hpp"

namespace bbm {

using Json = nlohmann::ordered_json;

/// Parses the plain format. Errors name the line and what was expected.
std::vector<IntVec> parse_plain_rows(std::istream& in);
LatticePolytope parse_plain_polytope(std::istream& in);
std::string emit_plain_polytope(const LatticePolytope& p);

struct NefPartitionRecord {
  std::vector<std::vector<IntVec>> parts;  // vertex lists
  std::vector<IntVec> base_points;
  std::vector<IntVec> alt_base_points;  // empty unless a second system is given
  std::string name;
  friend bool operator==(const NefPartitionRecord&, const NefPartitionRecord&) = default;
};

struct TriangulationRecord {
  std::vector<IntVec> points;
  std::vector<std::vector<std::size_t>> simplices;
  std::optional<RatVec> weights;
  friend bool operator==(const TriangulationRecord&, const TriangulationRecord&) = default;
};

struct DegreeRecord {
  IntVec torsion_orders;
  std::vector<IntVec> free_parts;     // one per coordinate
  std::vector<IntVec> torsion_parts;  // one per coordinate
  friend bool operator==(const DegreeRecord&, const DegreeRecord&) = default;
};

DegreeRecord degree_record(const TorusSubgroupData& s);

struct TableRecord {
  std::vector<std::size_t> columns;
  std::vector<IntVec> points;
  std::vector<std::string> coefficients;
  std::vector<IntVec> exponents;
  std::vector<std::size_t> groups;
  friend bool operator==(const TableRecord&, const TableRecord&) = default;
};

struct SideRecord {
  std::vector<IntVec> base_points;
  std::vector<std::vector<IntVec>> nabla;
  std::vector<IntVec> nabla_sum;
  std::vector<IntVec> base_rays;
  std::vector<std::vector<std::size_t>> base_cones;
  std::vector<IntVec> divisors;
  std::vector<IntVec> bundle_rays;
  std::vector<std::size_t> fiber_labels;
  std::vector<std::size_t> base_labels;
  std::vector<std::vector<std::size_t>> triangulation;
  RatVec certificate;
  std::vector<IntVec> chamber;
  DegreeRecord ambient_degrees;
  TableRecord table;
  friend bool operator==(const SideRecord&, const SideRecord&) = default;
};

/// The serialized form of a DoubleMirrorReport.
struct ReportRecord {
  bool passed = false;
  IntVec translation;
  std::vector<IntVec> nu;
  DegreeRecord nu_degrees;
  bool quasi_cy = false;
  std::optional<IntVec> cy_witness;
  std::vector<std::vector<IntVec>> splittings;
  std::vector<IntVec> skeleton_points;
  std::vector<std::size_t> groups;
  std::vector<std::size_t> groups_alt;
  std::size_t overlap = 0;
  bool identical_splittings = false;
  std::vector<std::size_t> fiber;
  std::vector<std::size_t> fiber_alt;
  IntVec witness;
  bool relation_verified = false;
  bool witness_in_kernel = false;
  bool splitting_character = false;
  SideRecord side;
  SideRecord side_alt;
  std::vector<std::string> check_names;
  std::vector<bool> check_passed;
  std::vector<std::string> check_details;
  friend bool operator==(const ReportRecord&, const ReportRecord&) = default;
};

ReportRecord report_record(const DoubleMirrorReport& r);

Json to_json(const LatticePolytope& p);
Json to_json(const NefPartitionRecord& r);
Json to_json(const TriangulationRecord& r);
Json to_json(const DegreeRecord& r);
Json to_json(const ReportRecord& r);

/// Each parser checks the "type" field and throws InputError naming the field.
LatticePolytope polytope_from_json(const Json& j);
NefPartitionRecord nef_partition_from_json(const Json& j);
TriangulationRecord triangulation_from_json(const Json& j);
DegreeRecord degree_from_json(const Json& j);
ReportRecord report_from_json(const Json& j);

std::vector<LatticePolytope> polytopes_of(const NefPartitionRecord& r);
DoubleMirrorInput mirror_input_of(const NefPartitionRecord& r);

/// Reads a whole file. JSON if the first non-blank character is '{', else plain.
/// Throws InputError for missing files.
std::string read_file(const std::string& path);
bool looks_like_json(const std::string& text);
Json parse_json(const std::string& text, const std::string& where);

}  // namespace bbm
