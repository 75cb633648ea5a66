#include "bbmirror/records.hpp"

#include <fstream>
#include <sstream>

#include "bbmirror/errors.hpp"

namespace bbm {

namespace {

std::optional<Int> parse_int(std::string s) {
  if (!s.empty() && s[0] == '+') s.erase(0, 1);
  std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
  if (s.size() == start) return std::nullopt;
  for (std::size_t i = start; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') return std::nullopt;
  return Int(s, 10);
}

Json jint(const Int& x) {
  if (x.fits_slong_p()) return x.get_si();
  return x.get_str();
}

Json jvec(const IntVec& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(jint(x));
  return a;
}

Json jvecs(const std::vector<IntVec>& vs) {
  Json a = Json::array();
  for (const auto& v : vs) a.push_back(jvec(v));
  return a;
}

Json jrat(const RatVec& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(x.get_str());
  return a;
}

template <class T>
Json jlist(const std::vector<T>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(x);
  return a;
}

Json jlabels(const std::vector<std::vector<std::size_t>>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(jlist(x));
  return a;
}

[[noreturn]] void bad(const std::string& field, const std::string& what) {
  throw InputError("record field '" + field + "': expected " + what);
}

const Json& field(const Json& j, const std::string& name) {
  if (!j.is_object()) bad(name, "an enclosing object");
  auto it = j.find(name);
  if (it == j.end()) throw InputError("record field '" + name + "' is missing");
  return *it;
}

Int int_of(const Json& j, const std::string& name) {
  if (j.is_number_integer()) return Int(static_cast<long>(j.get<long long>()));
  if (j.is_number_unsigned()) return Int(std::to_string(j.get<unsigned long long>()), 10);
  if (j.is_string())
    if (auto x = parse_int(j.get<std::string>())) return *x;
  bad(name, "an integer");
}

IntVec vec_of(const Json& j, const std::string& name) {
  if (!j.is_array()) bad(name, "an array of integers");
  IntVec v;
  for (const auto& x : j) v.push_back(int_of(x, name));
  return v;
}

std::vector<IntVec> vecs_of(const Json& j, const std::string& name, std::optional<std::size_t> len = {}) {
  if (!j.is_array()) bad(name, "an array of integer vectors");
  std::vector<IntVec> out;
  for (const auto& x : j) {
    out.push_back(vec_of(x, name));
    if (len && out.back().size() != *len)
      bad(name, "vectors of length " + std::to_string(*len) + ", found length " + std::to_string(out.back().size()));
  }
  return out;
}

RatVec rat_of(const Json& j, const std::string& name) {
  if (!j.is_array()) bad(name, "an array of rationals");
  RatVec v;
  for (const auto& x : j) {
    if (x.is_number_integer() || x.is_number_unsigned()) {
      v.push_back(Rat(int_of(x, name)));
      continue;
    }
    if (!x.is_string()) bad(name, "rationals written as \"p/q\"");
    std::string s = x.get<std::string>();
    auto slash = s.find('/');
    auto num = parse_int(s.substr(0, slash));
    auto den = slash == std::string::npos ? std::optional<Int>(Int(1)) : parse_int(s.substr(slash + 1));
    if (!num || !den || *den == 0) bad(name, "rationals written as \"p/q\"");
    Rat q(*num, *den);
    q.canonicalize();
    v.push_back(q);
  }
  return v;
}

std::size_t size_of(const Json& j, const std::string& name) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0)) bad(name, "a nonnegative integer");
  return j.get<std::size_t>();
}

std::vector<std::size_t> labels_of(const Json& j, const std::string& name) {
  if (!j.is_array()) bad(name, "an array of labels");
  std::vector<std::size_t> v;
  for (const auto& x : j) v.push_back(size_of(x, name));
  return v;
}

std::vector<std::vector<std::size_t>> label_lists_of(const Json& j, const std::string& name) {
  if (!j.is_array()) bad(name, "an array of label lists");
  std::vector<std::vector<std::size_t>> v;
  for (const auto& x : j) v.push_back(labels_of(x, name));
  return v;
}

bool bool_of(const Json& j, const std::string& name) {
  if (!j.is_boolean()) bad(name, "true or false");
  return j.get<bool>();
}

std::string string_of(const Json& j, const std::string& name) {
  if (!j.is_string()) bad(name, "a string");
  return j.get<std::string>();
}

void expect_type(const Json& j, const std::string& type) {
  if (!j.is_object()) throw InputError("expected a JSON object record of type '" + type + "'");
  auto t = string_of(field(j, "type"), "type");
  if (t != type) throw InputError("record field 'type': expected '" + type + "', found '" + t + "'");
}

std::size_t dim_of(const Json& j) {
  std::size_t d = size_of(field(j, "dim"), "dim");
  if (d == 0) bad("dim", "a positive dimension");
  return d;
}

}  // namespace

std::vector<IntVec> parse_plain_rows(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  std::optional<std::pair<std::size_t, std::size_t>> header;
  std::vector<IntVec> rows;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    const std::string at = "line " + std::to_string(lineno) + ": ";
    if (!header) {
      auto d = tok.size() == 2 ? parse_int(tok[0]) : std::nullopt;
      auto n = tok.size() == 2 ? parse_int(tok[1]) : std::nullopt;
      if (!d || !n || *d <= 0 || *n <= 0 || !d->fits_ulong_p() || !n->fits_ulong_p())
        throw InputError(at + "expected header \"d n\" with two positive integers");
      header = {d->get_ui(), n->get_ui()};
      continue;
    }
    if (rows.size() == header->second) throw InputError(at + "unexpected content after " + std::to_string(rows.size()) + " rows");
    if (tok.size() != header->first)
      throw InputError(at + "expected " + std::to_string(header->first) + " integers, found " + std::to_string(tok.size()) + " fields");
    IntVec row;
    for (const auto& t : tok) {
      auto x = parse_int(t);
      if (!x) throw InputError(at + "expected an integer, found '" + t + "'");
      row.push_back(*x);
    }
    rows.push_back(std::move(row));
  }
  if (!header) throw InputError("line " + std::to_string(lineno + 1) + ": expected header \"d n\"");
  if (rows.size() != header->second)
    throw InputError("line " + std::to_string(lineno + 1) + ": expected " + std::to_string(header->second) + " rows, found " +
                     std::to_string(rows.size()));
  return rows;
}

LatticePolytope parse_plain_polytope(std::istream& in) { return LatticePolytope::hull(parse_plain_rows(in)); }

std::string emit_plain_polytope(const LatticePolytope& p) {
  std::ostringstream os;
  os << p.ambient_dim() << " " << p.vertices().size() << "\n";
  for (const auto& v : p.vertices()) {
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i];
    os << "\n";
  }
  return os.str();
}

DegreeRecord degree_record(const TorusSubgroupData& s) {
  DegreeRecord r;
  r.torsion_orders = s.presentation.torsion_orders;
  for (const auto& c : s.coordinate_degrees) {
    r.free_parts.push_back(c.free_part);
    r.torsion_parts.push_back(c.torsion_part);
  }
  return r;
}

namespace {

TableRecord table_record(const MonomialTable& t) {
  TableRecord r;
  r.columns = t.columns;
  for (const auto& row : t.rows) {
    r.points.push_back(row.point);
    r.coefficients.push_back(row.coefficient);
    r.exponents.push_back(row.exponents);
    r.groups.push_back(row.group);
  }
  return r;
}

SideRecord side_record(const MirrorSide& s, const MonomialTable& t) {
  SideRecord r;
  r.base_points = s.base_points;
  for (const auto& n : s.nabla) r.nabla.push_back(n.vertices());
  r.nabla_sum = s.nabla_sum.vertices();
  r.base_rays = s.base_fan.rays;
  r.base_cones = s.base_fan.cones;
  for (const auto& d : s.divisors) r.divisors.push_back(d.coefficients);
  r.bundle_rays = s.bundle.rays;
  r.fiber_labels = s.fiber_labels;
  r.base_labels = s.base_labels;
  r.triangulation = s.triangulation.simplices;
  r.certificate = s.certificate;
  r.chamber = s.chamber.weight_inequalities;
  r.ambient_degrees = degree_record(s.ambient_degrees);
  r.table = table_record(t);
  return r;
}

Json table_json(const TableRecord& t) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < t.points.size(); ++i)
    rows.push_back({{"point", jvec(t.points[i])},
                    {"coefficient", t.coefficients[i]},
                    {"exponents", jvec(t.exponents[i])},
                    {"group", t.groups[i]}});
  return {{"columns", jlist(t.columns)}, {"rows", rows}};
}

TableRecord table_from(const Json& j) {
  TableRecord t;
  t.columns = labels_of(field(j, "columns"), "columns");
  const Json& rows = field(j, "rows");
  if (!rows.is_array()) bad("rows", "an array");
  for (const auto& row : rows) {
    t.points.push_back(vec_of(field(row, "point"), "point"));
    t.coefficients.push_back(string_of(field(row, "coefficient"), "coefficient"));
    t.exponents.push_back(vec_of(field(row, "exponents"), "exponents"));
    t.groups.push_back(size_of(field(row, "group"), "group"));
  }
  return t;
}

Json side_json(const SideRecord& s) {
  Json nabla = Json::array();
  for (const auto& n : s.nabla) nabla.push_back(jvecs(n));
  return {{"base_points", jvecs(s.base_points)},
          {"nabla", nabla},
          {"nabla_sum", jvecs(s.nabla_sum)},
          {"base_rays", jvecs(s.base_rays)},
          {"base_cones", jlabels(s.base_cones)},
          {"divisors", jvecs(s.divisors)},
          {"bundle_rays", jvecs(s.bundle_rays)},
          {"fiber_labels", jlist(s.fiber_labels)},
          {"base_labels", jlist(s.base_labels)},
          {"triangulation", jlabels(s.triangulation)},
          {"certificate", jrat(s.certificate)},
          {"chamber", jvecs(s.chamber)},
          {"ambient_degrees", to_json(s.ambient_degrees)},
          {"table", table_json(s.table)}};
}

SideRecord side_from(const Json& j) {
  SideRecord s;
  s.base_points = vecs_of(field(j, "base_points"), "base_points");
  const Json& nabla = field(j, "nabla");
  if (!nabla.is_array()) bad("nabla", "an array of vertex lists");
  for (const auto& n : nabla) s.nabla.push_back(vecs_of(n, "nabla"));
  s.nabla_sum = vecs_of(field(j, "nabla_sum"), "nabla_sum");
  s.base_rays = vecs_of(field(j, "base_rays"), "base_rays");
  s.base_cones = label_lists_of(field(j, "base_cones"), "base_cones");
  s.divisors = vecs_of(field(j, "divisors"), "divisors");
  s.bundle_rays = vecs_of(field(j, "bundle_rays"), "bundle_rays");
  s.fiber_labels = labels_of(field(j, "fiber_labels"), "fiber_labels");
  s.base_labels = labels_of(field(j, "base_labels"), "base_labels");
  s.triangulation = label_lists_of(field(j, "triangulation"), "triangulation");
  s.certificate = rat_of(field(j, "certificate"), "certificate");
  s.chamber = vecs_of(field(j, "chamber"), "chamber");
  s.ambient_degrees = degree_from_json(field(j, "ambient_degrees"));
  s.table = table_from(field(j, "table"));
  return s;
}

}  // namespace

ReportRecord report_record(const DoubleMirrorReport& r) {
  ReportRecord o;
  o.passed = r.passed();
  o.translation = r.translation;
  o.nu = r.nu.points;
  o.nu_degrees = degree_record(r.nu_degrees);
  o.quasi_cy = r.quasi_cy;
  o.cy_witness = r.cy_witness;
  for (const auto& s : r.splittings) o.splittings.push_back(s.vectors);
  for (const auto& row : r.skeleton.rows) {
    o.skeleton_points.push_back(row.point);
    o.groups.push_back(row.group);
    o.groups_alt.push_back(row.group_alt);
  }
  o.overlap = r.rcharge.overlap;
  o.identical_splittings = r.identical_splittings;
  o.fiber = r.rcharge.fiber;
  o.fiber_alt = r.rcharge.fiber_alt;
  o.witness = r.rcharge.witness;
  o.relation_verified = r.rcharge.relation_verified;
  o.witness_in_kernel = r.rcharge.witness_in_kernel;
  o.splitting_character = r.rcharge.splitting_character;
  o.side = side_record(r.side, r.table);
  o.side_alt = side_record(r.side_alt, r.table_alt);
  for (const auto& c : r.checks) {
    o.check_names.push_back(c.name);
    o.check_passed.push_back(c.passed);
    o.check_details.push_back(c.detail);
  }
  return o;
}

Json to_json(const LatticePolytope& p) {
  return {{"type", "polytope"}, {"dim", p.ambient_dim()}, {"vertices", jvecs(p.vertices())}};
}

Json to_json(const NefPartitionRecord& r) {
  Json parts = Json::array();
  for (const auto& p : r.parts) parts.push_back(jvecs(p));
  std::size_t dim = r.parts.empty() || r.parts[0].empty() ? 0 : r.parts[0][0].size();
  Json j = {{"type", "nef_partition"}};
  if (!r.name.empty()) j["name"] = r.name;
  j["dim"] = dim;
  j["parts"] = parts;
  j["base_points"] = jvecs(r.base_points);
  if (!r.alt_base_points.empty()) j["alt_base_points"] = jvecs(r.alt_base_points);
  return j;
}

Json to_json(const TriangulationRecord& r) {
  Json j = {{"type", "triangulation"},
            {"dim", r.points.empty() ? 0 : r.points[0].size()},
            {"points", jvecs(r.points)},
            {"simplices", jlabels(r.simplices)}};
  if (r.weights) j["weights"] = jrat(*r.weights);
  return j;
}

Json to_json(const DegreeRecord& r) {
  return {{"type", "degrees"},
          {"torsion_orders", jvec(r.torsion_orders)},
          {"free_parts", jvecs(r.free_parts)},
          {"torsion_parts", jvecs(r.torsion_parts)}};
}

Json to_json(const ReportRecord& r) {
  Json checks = Json::array();
  for (std::size_t i = 0; i < r.check_names.size(); ++i)
    checks.push_back({{"name", r.check_names[i]}, {"passed", static_cast<bool>(r.check_passed[i])}, {"detail", r.check_details[i]}});
  Json splits = Json::array();
  for (const auto& s : r.splittings) splits.push_back(jvecs(s));
  return {{"type", "mirror_report"},
          {"passed", r.passed},
          {"translation", jvec(r.translation)},
          {"nu", jvecs(r.nu)},
          {"nu_degrees", to_json(r.nu_degrees)},
          {"quasi_cy", r.quasi_cy},
          {"cy_witness", r.cy_witness ? jvec(*r.cy_witness) : Json(nullptr)},
          {"splittings", splits},
          {"skeleton_points", jvecs(r.skeleton_points)},
          {"groups", jlist(r.groups)},
          {"groups_alt", jlist(r.groups_alt)},
          {"rcharge",
           {{"overlap", r.overlap},
            {"identical_splittings", r.identical_splittings},
            {"fiber", jlist(r.fiber)},
            {"fiber_alt", jlist(r.fiber_alt)},
            {"witness", jvec(r.witness)},
            {"relation_verified", r.relation_verified},
            {"witness_in_kernel", r.witness_in_kernel},
            {"splitting_character", r.splitting_character}}},
          {"side", side_json(r.side)},
          {"side_alt", side_json(r.side_alt)},
          {"checks", checks}};
}

LatticePolytope polytope_from_json(const Json& j) {
  expect_type(j, "polytope");
  std::size_t d = dim_of(j);
  auto v = vecs_of(field(j, "vertices"), "vertices", d);
  if (v.empty()) bad("vertices", "at least one vertex");
  return LatticePolytope::hull(v);
}

NefPartitionRecord nef_partition_from_json(const Json& j) {
  expect_type(j, "nef_partition");
  std::size_t d = dim_of(j);
  NefPartitionRecord r;
  if (j.contains("name")) r.name = string_of(j["name"], "name");
  const Json& parts = field(j, "parts");
  if (!parts.is_array() || parts.empty()) bad("parts", "a nonempty array of vertex lists");
  for (const auto& p : parts) {
    r.parts.push_back(vecs_of(p, "parts", d));
    if (r.parts.back().empty()) bad("parts", "nonempty vertex lists");
  }
  r.base_points = vecs_of(field(j, "base_points"), "base_points", d);
  if (r.base_points.size() != r.parts.size()) bad("base_points", "one point per part");
  if (j.contains("alt_base_points")) {
    r.alt_base_points = vecs_of(j["alt_base_points"], "alt_base_points", d);
    if (r.alt_base_points.size() != r.parts.size()) bad("alt_base_points", "one point per part");
  }
  return r;
}

TriangulationRecord triangulation_from_json(const Json& j) {
  expect_type(j, "triangulation");
  std::size_t d = dim_of(j);
  TriangulationRecord r;
  r.points = vecs_of(field(j, "points"), "points", d);
  if (j.contains("simplices")) r.simplices = label_lists_of(j["simplices"], "simplices");
  if (j.contains("weights") && !j["weights"].is_null()) {
    r.weights = rat_of(j["weights"], "weights");
    if (r.weights->size() != r.points.size()) bad("weights", "one weight per point");
  }
  for (const auto& s : r.simplices)
    for (auto l : s)
      if (l >= r.points.size()) bad("simplices", "labels below the number of points");
  return r;
}

DegreeRecord degree_from_json(const Json& j) {
  expect_type(j, "degrees");
  DegreeRecord r;
  r.torsion_orders = vec_of(field(j, "torsion_orders"), "torsion_orders");
  r.free_parts = vecs_of(field(j, "free_parts"), "free_parts");
  r.torsion_parts = vecs_of(field(j, "torsion_parts"), "torsion_parts", r.torsion_orders.size());
  if (r.free_parts.size() != r.torsion_parts.size()) bad("torsion_parts", "one entry per coordinate");
  return r;
}

ReportRecord report_from_json(const Json& j) {
  expect_type(j, "mirror_report");
  ReportRecord r;
  r.passed = bool_of(field(j, "passed"), "passed");
  r.translation = vec_of(field(j, "translation"), "translation");
  r.nu = vecs_of(field(j, "nu"), "nu");
  r.nu_degrees = degree_from_json(field(j, "nu_degrees"));
  r.quasi_cy = bool_of(field(j, "quasi_cy"), "quasi_cy");
  if (!field(j, "cy_witness").is_null()) r.cy_witness = vec_of(j["cy_witness"], "cy_witness");
  const Json& splits = field(j, "splittings");
  if (!splits.is_array()) bad("splittings", "an array");
  for (const auto& s : splits) r.splittings.push_back(vecs_of(s, "splittings"));
  r.skeleton_points = vecs_of(field(j, "skeleton_points"), "skeleton_points");
  r.groups = labels_of(field(j, "groups"), "groups");
  r.groups_alt = labels_of(field(j, "groups_alt"), "groups_alt");
  const Json& rc = field(j, "rcharge");
  r.overlap = size_of(field(rc, "overlap"), "overlap");
  r.identical_splittings = bool_of(field(rc, "identical_splittings"), "identical_splittings");
  r.fiber = labels_of(field(rc, "fiber"), "fiber");
  r.fiber_alt = labels_of(field(rc, "fiber_alt"), "fiber_alt");
  r.witness = vec_of(field(rc, "witness"), "witness");
  r.relation_verified = bool_of(field(rc, "relation_verified"), "relation_verified");
  r.witness_in_kernel = bool_of(field(rc, "witness_in_kernel"), "witness_in_kernel");
  r.splitting_character = bool_of(field(rc, "splitting_character"), "splitting_character");
  r.side = side_from(field(j, "side"));
  r.side_alt = side_from(field(j, "side_alt"));
  const Json& checks = field(j, "checks");
  if (!checks.is_array()) bad("checks", "an array");
  for (const auto& c : checks) {
    r.check_names.push_back(string_of(field(c, "name"), "name"));
    r.check_passed.push_back(bool_of(field(c, "passed"), "passed"));
    r.check_details.push_back(string_of(field(c, "detail"), "detail"));
  }
  return r;
}

std::vector<LatticePolytope> polytopes_of(const NefPartitionRecord& r) {
  std::vector<LatticePolytope> out;
  for (const auto& p : r.parts) out.push_back(LatticePolytope::hull(p));
  return out;
}

DoubleMirrorInput mirror_input_of(const NefPartitionRecord& r) {
  if (r.alt_base_points.empty()) throw InputError("record field 'alt_base_points' is missing");
  return {polytopes_of(r), r.base_points, r.alt_base_points};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

bool looks_like_json(const std::string& text) {
  for (char c : text) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
    return c == '{';
  }
  return false;
}

Json parse_json(const std::string& text, const std::string& where) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(where + ": malformed record: " + e.what());
  }
}

}  // namespace bbm
