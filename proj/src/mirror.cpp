#include "bbmirror/mirror.hpp"

#include <algorithm>
#include <sstream>

#include "bbmirror/errors.hpp"

namespace bbm {

namespace {

bool same_polytope_set(std::vector<LatticePolytope> a, std::vector<LatticePolytope> b) {
  auto less = [](const LatticePolytope& x, const LatticePolytope& y) { return x.vertices() < y.vertices(); };
  std::sort(a.begin(), a.end(), less);
  std::sort(b.begin(), b.end(), less);
  return a == b;
}

std::vector<IntVec> splitting_vectors(const std::vector<IntVec>& q, std::size_t d) {
  const std::size_t r = q.size();
  std::vector<IntVec> f;
  for (std::size_t j = 0; j < r; ++j) {
    IntVec x = q[j];
    x.resize(d + r, Int(0));
    x[d + j] = 1;
    f.push_back(std::move(x));
  }
  return f;
}

// index i with <m, f_j> = delta_ij, or f.size() if m is not split by f
std::size_t group_of(const IntVec& m, const std::vector<IntVec>& f) {
  std::size_t hit = f.size();
  for (std::size_t j = 0; j < f.size(); ++j) {
    Int val = dot(m, f[j]);
    if (val == 1 && hit == f.size())
      hit = j;
    else if (val != 0)
      return f.size();
  }
  return hit;
}

struct CheckList {
  std::vector<Check>& out;
  void add(std::string name, bool ok, std::string detail = {}) { out.push_back({std::move(name), ok, std::move(detail)}); }
};

MirrorSide build_side(const std::vector<LatticePolytope>& parts, const std::vector<IntVec>& q, const PointConfig& nu,
                      const RationalCone& sigma, const CayleyData& cay, CheckList& checks, const std::string& tag) {
  const std::size_t d = parts[0].ambient_dim(), r = parts.size();
  MirrorSide s;
  s.base_points = q;
  s.nabla = dual_nef_partition(validate_nef_partition(parts, q));
  s.nabla_sum = s.nabla[0];
  for (std::size_t j = 1; j < r; ++j) s.nabla_sum = minkowski_sum(s.nabla_sum, s.nabla[j]);
  s.base_fan = simplicial_refinement(normal_fan(s.nabla_sum));
  for (std::size_t j = 0; j < r; ++j) {
    DivisorData a;
    for (const auto& u : s.base_fan.rays) {
      Int lo = dot(s.nabla[j].vertices()[0], u);
      for (const auto& w : s.nabla[j].vertices()) lo = std::min(lo, Int(dot(w, u)));
      a.coefficients.push_back(-lo);
    }
    s.divisors.push_back(std::move(a));
  }
  std::vector<DivisorData> neg = s.divisors;
  for (auto& a : neg)
    for (auto& x : a.coefficients) x = -x;
  Fan b = bundle_fan(s.base_fan, neg);
  // undo the shear between Cayley(Delta_i - q_i) and Cayley(Delta_i)
  for (auto& ray : b.rays)
    for (std::size_t j = 0; j < r; ++j)
      for (std::size_t k = 0; k < d; ++k) ray[k] += ray[d + j] * q[j][k];
  s.bundle = b;
  s.splitting = splitting_vectors(q, d);

  bool labels_ok = true;
  for (std::size_t i = 0; i < b.rays.size(); ++i) {
    auto l = nu.label_of(b.rays[i]);
    if (!l) {
      labels_ok = false;
      continue;
    }
    (i < s.base_fan.rays.size() ? s.base_labels : s.fiber_labels).push_back(*l);
  }
  checks.add("bundle fan rays lie in nu (" + tag + ")", labels_ok);
  if (!labels_ok) throw VerificationError("bundle fan ray outside the coordinate set nu (" + tag + ")");

  checks.add("dual of the bundle fan support is sigma (" + tag + ")",
             RationalCone::from_generators(b.rays, d + r) == cay.cone);

  s.triangulation = triangulation_of_bundle_fan(s.bundle, nu);
  auto cert = regularity_certificate(nu, s.triangulation);
  checks.add("bundle fan triangulation is regular (" + tag + ")", cert.has_value(), to_string(s.triangulation));
  if (!cert) throw VerificationError("bundle fan triangulation is not regular (" + tag + ")");
  s.certificate = *cert;
  s.chamber = chamber_of_triangulation(nu, s.triangulation);
  checks.add("chamber contains the certificate (" + tag + ")", s.chamber.contains_weight(s.certificate));
  s.ambient_degrees = s_nu(s.base_fan.rays, d);
  s.recovered = recover_partition(sigma, s.splitting);
  checks.add("recovery from the splitting gives the dual nef partition (" + tag + ")",
             same_polytope_set(s.recovered, s.nabla));
  return s;
}

}  // namespace

TranslatedPartition translated_partition(const NefPartition& p, const std::vector<IntVec>& alt) {
  if (alt.size() != p.length()) throw InputError("alternative base points: need one per part");
  std::vector<LatticePolytope> parts;
  IntVec sum(p.rank(), Int(0));
  const std::size_t d = p.rank(), r = p.length();
  IntMatrix shear = IntMatrix::identity(d + r);
  for (std::size_t i = 0; i < r; ++i) {
    if (alt[i].size() != d) throw InputError("alternative base points: wrong rank");
    if (!p.parts[i].contains(alt[i]))
      throw InputError("alternative base point p" + std::to_string(i + 1) + "' = " + to_string(alt[i]) +
                       " is not a lattice point of part " + std::to_string(i + 1));
    IntVec t = sub(alt[i], p.base_points[i]);
    parts.push_back(p.parts[i].translate(t));
    for (std::size_t k = 0; k < d; ++k) shear(k, d + i) = t[k];
    sum = add(sum, alt[i]);
  }
  if (sum != p.m)
    throw InputError("alternative base points sum to " + to_string(sum) + " but the base points sum to m = " +
                     to_string(p.m) + "; both systems must sum to the same interior point");
  return {validate_nef_partition(parts, alt), shear};
}

RChargeRecord rcharge_check(const PointConfig& nu, const std::vector<IntVec>& f, const std::vector<IntVec>& f_alt,
                            const TorusSubgroupData& s) {
  if (f.size() != f_alt.size() || f.empty()) throw InputError("rcharge_check: splittings of different length");
  std::vector<std::size_t> a, b;
  for (const auto& x : f) {
    auto l = nu.label_of(x);
    if (!l) throw InputError("rcharge_check: splitting vector " + to_string(x) + " is not a point of nu");
    a.push_back(*l);
  }
  for (const auto& x : f_alt) {
    auto l = nu.label_of(x);
    if (!l) throw InputError("rcharge_check: splitting vector " + to_string(x) + " is not a point of nu");
    b.push_back(*l);
  }
  IntVec sa(nu.dim, Int(0)), sb(nu.dim, Int(0));
  for (const auto& x : f) sa = add(sa, x);
  for (const auto& x : f_alt) sb = add(sb, x);
  if (sa != sb) throw InputError("rcharge_check: splittings have different sums");
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  std::vector<std::size_t> shared, ra, rb;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(shared));
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(ra));
  std::set_difference(b.begin(), b.end(), a.begin(), a.end(), std::back_inserter(rb));

  RChargeRecord rec;
  rec.overlap = shared.size();
  rec.fiber = shared;
  rec.fiber.insert(rec.fiber.end(), ra.begin(), ra.end());
  rec.fiber_alt = shared;
  rec.fiber_alt.insert(rec.fiber_alt.end(), rb.begin(), rb.end());

  IntVec ea(nu.dim, Int(0)), eb(nu.dim, Int(0));
  for (auto l : ra) ea = add(ea, nu.points[l]);
  for (auto l : rb) eb = add(eb, nu.points[l]);
  rec.relation_verified = ea == eb;

  rec.witness.assign(nu.points.size(), Int(0));
  for (auto l : ra) rec.witness[l] -= 1;
  for (auto l : rb) rec.witness[l] += 1;
  IntVec image(nu.dim, Int(0));
  for (std::size_t i = 0; i < nu.points.size(); ++i) image = add(image, scale(nu.points[i], rec.witness[i]));
  // the one-parameter subgroup lies in S_nu iff it kills every trivial-degree monomial
  IntMatrix rel = relation_lattice(s);
  rec.witness_in_kernel = is_zero(image) && is_zero(rel.apply(rec.witness));
  rec.splitting_character = rb.empty() || rec.witness[rec.fiber_alt.back()] == 1;
  return rec;
}

MonomialTable monomial_table(const SuperpotentialSkeleton& s, const MirrorSide& side, bool alt) {
  MonomialTable t;
  t.columns = side.fiber_labels;
  t.columns.insert(t.columns.end(), side.base_labels.begin(), side.base_labels.end());
  for (const auto& row : s.rows) {
    MonomialTableRow out{row.point, row.coefficient, {}, alt ? row.group_alt : row.group};
    for (auto c : t.columns) {
      if (c >= row.exponents.size()) throw InputError("monomial_table: column outside nu");
      out.exponents.push_back(row.exponents[c]);
    }
    t.rows.push_back(std::move(out));
  }
  return t;
}

bool DoubleMirrorReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

DoubleMirrorReport double_mirror_pipeline(const DoubleMirrorInput& in) {
  DoubleMirrorReport rep;
  CheckList checks{rep.checks};
  auto base = validate_nef_partition(in.parts, in.base_points);
  auto moved = translated_partition(base, in.alt_base_points);
  const std::size_t d = base.rank(), r = base.length();

  // move m to the origin through part 1
  rep.translation = scale(base.m, Int(-1));
  rep.parts = in.parts;
  rep.parts[0] = rep.parts[0].translate(rep.translation);
  std::vector<IntVec> q = in.base_points, qa = in.alt_base_points;
  q[0] = add(q[0], rep.translation);
  qa[0] = add(qa[0], rep.translation);
  rep.shear = moved.shear;

  rep.cayley = cayley(rep.parts);
  bool gor = rep.cayley.gorenstein && rep.cayley.gorenstein->index &&
             *rep.cayley.gorenstein->index == Int(static_cast<unsigned long>(r));
  checks.add("Cayley cone is reflexive Gorenstein of index r", gor);
  if (!gor) throw VerificationError("Cayley cone is not reflexive Gorenstein of index r");
  rep.sigma = dual_cone(rep.cayley.cone);
  rep.sigma_gorenstein = *gorenstein_cone_data(rep.sigma);
  rep.splittings = splittings(rep.cayley);

  auto f = splitting_vectors(q, d), fa = splitting_vectors(qa, d);
  auto found = [&](std::vector<IntVec> v) {
    std::sort(v.begin(), v.end());
    return std::any_of(rep.splittings.begin(), rep.splittings.end(),
                       [&](const SplittingData& s) { return s.vectors == v; });
  };
  checks.add("base points give a splitting of sigma", found(f));
  checks.add("alternative base points give a splitting of sigma", found(fa));
  bool repeated = std::any_of(rep.splittings.begin(), rep.splittings.end(), [](auto& s) { return s.repeated; });
  checks.add("splittings without repeated vectors", true, repeated ? "repeated vectors occur" : "");

  rep.nu = PointConfig::make(rep.cayley.polytope.lattice_points(), d + r);
  rep.nu_degrees = s_nu(rep.nu.points, d + r);
  rep.quasi_cy = quasi_cy(rep.nu_degrees);
  rep.cy_witness = cy_condition(rep.nu.points, d + r);
  checks.add("S_nu satisfies the quasi-Calabi-Yau condition", rep.quasi_cy);
  checks.add("CY condition holds for nu", rep.cy_witness.has_value(),
             rep.cy_witness ? to_string(*rep.cy_witness) : "");

  rep.side = build_side(rep.parts, q, rep.nu, rep.sigma, rep.cayley, checks, "base");
  rep.side_alt = build_side(rep.parts, qa, rep.nu, rep.sigma, rep.cayley, checks, "alternative");

  rep.rcharge = rcharge_check(rep.nu, f, fa, rep.nu_degrees);
  rep.identical_splittings = rep.rcharge.overlap == r;
  checks.add("sum of the non-shared fiber points agree", rep.rcharge.relation_verified);
  checks.add("one-parameter witness lies in S_nu", rep.rcharge.witness_in_kernel);
  checks.add("witness splits off the last alternative fiber coordinate", rep.rcharge.splitting_character);

  // superpotential skeleton over the lattice points of sigma at level 1
  SliceChart chart = slice_chart(rep.sigma_gorenstein.deg_dual);
  std::vector<IntVec> pts;
  for (const auto& y : slice_polytope(rep.sigma, chart, Int(1)).lattice_points()) pts.push_back(chart.lift(y, Int(1)));
  std::sort(pts.begin(), pts.end());
  bool nonneg = true, partition = true, partition_alt = true, divisible = true;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    MonomialRow row;
    row.point = pts[i];
    row.coefficient = "c" + std::to_string(i + 1);
    for (const auto& v : rep.nu.points) {
      row.exponents.push_back(dot(v, pts[i]));
      if (row.exponents.back() < 0) nonneg = false;
    }
    row.group = group_of(pts[i], f);
    row.group_alt = group_of(pts[i], fa);
    if (row.group == r) partition = false;
    if (row.group_alt == r) partition_alt = false;
    for (std::size_t j = 0; j < r && partition && partition_alt; ++j) {
      if (row.exponents[rep.side.fiber_labels[j]] != (row.group == j ? 1 : 0)) divisible = false;
      if (row.exponents[rep.side_alt.fiber_labels[j]] != (row.group_alt == j ? 1 : 0)) divisible = false;
    }
    rep.skeleton.rows.push_back(std::move(row));
  }
  checks.add("monomial exponents are nonnegative", nonneg);
  checks.add("grouping w_i is a partition", partition);
  checks.add("grouping w'_i is a partition", partition_alt);
  checks.add("fiber divisibility on both groupings", divisible);

  bool same_degree = true;
  Character first = rep.nu_degrees.character(rep.skeleton.rows.at(0).exponents);
  for (const auto& row : rep.skeleton.rows)
    if (!(rep.nu_degrees.character(row.exponents) == first)) same_degree = false;
  checks.add("all monomials have the same S_nu degree", same_degree, to_string(first));

  rep.table = monomial_table(rep.skeleton, rep.side, false);
  rep.table_alt = monomial_table(rep.skeleton, rep.side_alt, true);
  // stripped rows over the base rays have the degree of E_i on the base
  auto sections_ok = [&](const MirrorSide& s, const MonomialTable& t) {
    for (const auto& row : t.rows) {
      IntVec base(row.exponents.begin() + static_cast<long>(r), row.exponents.end());
      if (!(s.ambient_degrees.character(base) == char_of_divisor(s.ambient_degrees, s.divisors[row.group])))
        return false;
    }
    return true;
  };
  checks.add("section degrees match E_i (base)", sections_ok(rep.side, rep.table));
  checks.add("section degrees match E_i (alternative)", sections_ok(rep.side_alt, rep.table_alt));
  checks.add("triangulations differ exactly when the splittings differ",
             (rep.side.triangulation == rep.side_alt.triangulation) == rep.identical_splittings);
  return rep;
}

BasePointSystems base_point_systems(const std::vector<LatticePolytope>& parts, const std::vector<IntVec>& base_points) {
  auto p = validate_nef_partition(parts, base_points);
  const std::size_t d = p.rank(), r = p.length();
  std::vector<LatticePolytope> moved = parts;
  moved[0] = moved[0].translate(scale(p.m, Int(-1)));
  std::vector<std::pair<std::vector<IntVec>, bool>> found;
  for (const auto& s : splittings(cayley(moved))) {
    std::vector<IntVec> q(r);
    for (const auto& f : s.vectors)
      for (std::size_t j = 0; j < r; ++j)
        if (f[d + j] == 1) q[j] = IntVec(f.begin(), f.begin() + static_cast<long>(d));
    q[0] = add(q[0], p.m);
    found.emplace_back(std::move(q), s.repeated);
  }
  std::sort(found.begin(), found.end());
  BasePointSystems out;
  for (auto& [q, rep] : found) {
    out.systems.push_back(std::move(q));
    out.repeated.push_back(rep);
  }
  return out;
}

std::string monomial_string(const IntVec& exponents, const std::vector<std::string>& names) {
  std::string s;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] == 0) continue;
    if (!s.empty()) s += " ";
    s += names.at(i);
    if (exponents[i] != 1) s += "^" + exponents[i].get_str();
  }
  return s.empty() ? "1" : s;
}

namespace {

std::vector<std::string> column_names(std::size_t r, std::size_t k, const std::string& suffix) {
  std::vector<std::string> n;
  for (std::size_t j = 0; j < r; ++j) n.push_back("u" + std::to_string(j + 1) + suffix);
  for (std::size_t j = 0; j < k; ++j) n.push_back("x" + std::to_string(j + 1) + suffix);
  return n;
}

std::string degree_row(const TorusSubgroupData& s) {
  std::string out = degree_matrix_text(s);
  for (auto& c : out)
    if (c == '\n') c = ';';
  if (!out.empty()) out.pop_back();
  return out;
}

}  // namespace

std::string report_text(const DoubleMirrorReport& r) {
  std::ostringstream os;
  const std::size_t len = r.side.splitting.size();
  os << "double mirror report: " << (r.passed() ? "PASS" : "FAIL") << "\n";
  os << "translation of part 1: " << to_string(r.translation) << "\n";
  os << "nu: " << r.nu.points.size() << " points";
  for (std::size_t i = 0; i < r.nu.points.size(); ++i) os << (i ? ", " : " ") << i << "=" << to_string(r.nu.points[i]);
  os << "\n";
  os << "splittings of sigma: " << r.splittings.size() << "\n";
  if (r.identical_splittings) os << "splittings identical; trivial wall-crossing\n";
  os << "overlap c = " << r.rcharge.overlap << "\n";
  for (int alt = 0; alt < 2; ++alt) {
    const MirrorSide& s = alt ? r.side_alt : r.side;
    os << (alt ? "alternative" : "base") << " side:\n";
    os << "  base points:";
    for (const auto& q : s.base_points) os << " " << to_string(q);
    os << "\n  nabla:";
    for (const auto& n : s.nabla) os << " " << to_string(n);
    os << "\n  nabla sum: " << to_string(s.nabla_sum) << "\n";
    os << "  ambient degrees: " << degree_row(s.ambient_degrees) << "\n";
    os << "  triangulation: " << to_string(s.triangulation) << "\n";
    os << "  certificate: " << to_string(s.certificate) << "\n";
    os << "  columns:";
    auto names = column_names(len, s.base_labels.size(), alt ? "'" : "");
    const auto& t = alt ? r.table_alt : r.table;
    for (std::size_t i = 0; i < t.columns.size(); ++i)
      os << " " << names[i] << "=" << to_string(r.nu.points[t.columns[i]]);
    os << "\n";
  }
  os << "monomials:\n";
  auto n0 = column_names(len, r.side.base_labels.size(), "");
  auto n1 = column_names(len, r.side_alt.base_labels.size(), "'");
  std::size_t w0 = 4, w1 = 4;
  for (std::size_t i = 0; i < r.table.rows.size(); ++i) {
    w0 = std::max(w0, monomial_string(r.table.rows[i].exponents, n0).size() + 5);
    w1 = std::max(w1, monomial_string(r.table_alt.rows[i].exponents, n1).size() + 5);
  }
  for (std::size_t i = 0; i < r.table.rows.size(); ++i) {
    const auto& a = r.table.rows[i];
    const auto& b = r.table_alt.rows[i];
    std::string left = monomial_string(a.exponents, n0) + "  w" + std::to_string(a.group + 1);
    std::string right = monomial_string(b.exponents, n1) + "  w" + std::to_string(b.group + 1) + "'";
    os << "  " << a.coefficient << "  " << left << std::string(w0 + 2 - std::min(left.size(), w0 + 2), ' ') << right
       << "\n";
  }
  os << "checks:\n";
  for (const auto& c : r.checks)
    os << "  [" << (c.passed ? "ok" : "FAIL") << "] " << c.name << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
  return os.str();
}

}  // namespace bbm
