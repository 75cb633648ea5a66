#include "bbmirror/secondary.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "bbmirror/errors.hpp"
#include "bbmirror/lp.hpp"

namespace bbm {

namespace {

Int lcm_of_denominators(const RatVec& v) {
  Int l = 1;
  for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  return l;
}

IntVec clear_denominators(const RatVec& v) {
  Int l = lcm_of_denominators(v);
  IntVec out;
  for (const auto& x : v) {
    Rat y = x * l;
    out.push_back(y.get_num());
  }
  return out;
}

Rat rdot(const RatVec& a, const RatVec& b) {
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace

PointConfig PointConfig::make(std::vector<IntVec> points, std::size_t dim) {
  if (points.empty() || dim == 0) throw InputError("point configuration is empty");
  for (const auto& p : points)
    if (p.size() != dim) throw InputError("point configuration: point of wrong rank");
  {
    auto s = points;
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) throw InputError("point configuration: repeated point");
  }
  IntMatrix a = IntMatrix::from_rows(points, dim);
  if (rank(a) != dim) throw InputError("point configuration does not span");
  auto h = solve_rational(a, RatVec(points.size(), Rat(1)));
  if (!h) throw InputError("point configuration does not lie on an affine hyperplane off the origin");
  PointConfig c;
  c.points = std::move(points);
  c.height = *h;
  c.dim = dim;
  return c;
}

std::optional<std::size_t> PointConfig::label_of(const IntVec& x) const {
  for (std::size_t i = 0; i < points.size(); ++i)
    if (points[i] == x) return i;
  return std::nullopt;
}

std::vector<std::size_t> Triangulation::used_labels() const {
  std::set<std::size_t> s;
  for (const auto& c : simplices) s.insert(c.begin(), c.end());
  return {s.begin(), s.end()};
}

std::vector<std::size_t> Triangulation::unused_labels(std::size_t n) const {
  auto used = used_labels();
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n; ++i)
    if (!std::binary_search(used.begin(), used.end(), i)) out.push_back(i);
  return out;
}

std::string to_string(const Triangulation& t) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < t.simplices.size(); ++i) {
    os << (i ? " " : "") << "[";
    for (std::size_t j = 0; j < t.simplices[i].size(); ++j) os << (j ? "," : "") << t.simplices[i][j];
    os << "]";
  }
  os << "}";
  return os.str();
}

Subdivision triangulation_from_weights(const PointConfig& nu, const RatVec& weights) {
  const std::size_t t = nu.points.size(), d = nu.dim;
  if (weights.size() != t) throw InputError("weight vector length mismatch");
  IntVec w = clear_denominators(weights);
  std::vector<IntVec> lifted;
  for (std::size_t i = 0; i < t; ++i) {
    IntVec x = nu.points[i];
    x.push_back(w[i]);
    lifted.push_back(std::move(x));
  }
  std::vector<IntVec> gens = lifted;
  IntVec up(d + 1, Int(0));
  up[d] = 1;
  gens.push_back(up);
  ConeHRep h = cone_facets(gens, d + 1);

  Subdivision s;
  s.simplicial = true;
  s.generic = true;
  std::set<std::vector<std::size_t>> cells;
  for (const auto& n : h.facets) {
    if (n[d] <= 0) continue;
    std::vector<std::size_t> face;
    std::vector<IntVec> pts;
    for (std::size_t i = 0; i < t; ++i)
      if (dot(n, lifted[i]) == 0) {
        face.push_back(i);
        pts.push_back(lifted[i]);
      }
    auto ext = extreme_generators(pts, d + 1);
    std::vector<std::size_t> cell;
    for (auto i : face)
      if (std::binary_search(ext.begin(), ext.end(), primitive(lifted[i]))) cell.push_back(i);
    if (cell.size() != face.size()) s.generic = false;
    if (cell.size() != d) s.simplicial = false;
    cells.insert(cell);
  }
  s.cells.assign(cells.begin(), cells.end());
  if (!s.simplicial) s.generic = false;
  return s;
}

std::string check_triangulation(const PointConfig& nu, const Triangulation& t) {
  const std::size_t d = nu.dim, n = nu.points.size();
  if (t.simplices.empty()) return "no simplices";
  for (const auto& s : t.simplices) {
    if (s.size() != d) return "simplex of wrong size";
    for (auto i : s)
      if (i >= n) return "label out of range";
    std::vector<IntVec> v;
    for (auto i : s) v.push_back(nu.points[i]);
    if (determinant(IntMatrix::from_rows(v, d)) == 0) return "degenerate simplex";
  }
  for (std::size_t i = 0; i < t.simplices.size(); ++i)
    for (std::size_t j = i + 1; j < t.simplices.size(); ++j) {
      const auto& a = t.simplices[i];
      const auto& b = t.simplices[j];
      std::vector<IntVec> strict, equal;
      for (auto x : a)
        if (std::binary_search(b.begin(), b.end(), x))
          equal.push_back(nu.points[x]);
        else
          strict.push_back(nu.points[x]);
      for (auto x : b)
        if (!std::binary_search(a.begin(), a.end(), x)) strict.push_back(scale(nu.points[x], Int(-1)));
      if (strict.empty()) return "repeated simplex";
      if (!lp::strict_feasible(strict, {}, equal, d)) return "simplices " + std::to_string(i) + " and " +
                                                             std::to_string(j) + " overlap improperly";
    }
  if (d == 1) return t.simplices.size() == 1 ? "" : "too many simplices";
  std::vector<IntVec> boundary = cone_facets(nu.points, d).facets;
  std::map<std::vector<std::size_t>, int> ridges;
  for (const auto& s : t.simplices)
    for (std::size_t drop = 0; drop < d; ++drop) {
      auto r = s;
      r.erase(r.begin() + static_cast<long>(drop));
      ++ridges[r];
    }
  for (const auto& [r, count] : ridges) {
    if (count > 2) return "ridge in more than two simplices";
    if (count == 2) continue;
    bool on_boundary = false;
    for (const auto& f : boundary) {
      bool all = true;
      for (auto i : r)
        if (dot(f, nu.points[i]) != 0) all = false;
      if (all) on_boundary = true;
    }
    if (!on_boundary) return "simplices do not cover the configuration";
  }
  return {};
}

std::vector<IntVec> regularity_inequalities(const PointConfig& nu, const Triangulation& t) {
  const std::size_t d = nu.dim, n = nu.points.size();
  std::set<IntVec> rows;
  for (const auto& s : t.simplices) {
    std::vector<IntVec> cols;
    for (auto i : s) cols.push_back(nu.points[i]);
    IntMatrix b = IntMatrix::from_cols(cols, d);
    for (std::size_t j = 0; j < n; ++j) {
      if (std::binary_search(s.begin(), s.end(), j)) continue;
      auto lam = solve_rational(b, to_rat(nu.points[j]));
      RatVec row(n, Rat(0));
      row[j] = 1;
      for (std::size_t k = 0; k < s.size(); ++k) row[s[k]] -= (*lam)[k];
      rows.insert(primitive(clear_denominators(row)));
    }
  }
  return {rows.begin(), rows.end()};
}

std::optional<RatVec> regularity_certificate(const PointConfig& nu, const Triangulation& t) {
  std::string err = check_triangulation(nu, t);
  if (!err.empty()) throw InputError("not a triangulation: " + err);
  auto rows = regularity_inequalities(nu, t);
  RatVec w;
  if (rows.empty()) {
    w.assign(nu.points.size(), Rat(0));
  } else {
    auto y = lp::strict_feasible(rows, {}, {}, nu.points.size());
    if (!y) return std::nullopt;
    w = to_rat(clear_denominators(*y));
  }
  Subdivision s = triangulation_from_weights(nu, w);
  if (!s.generic || s.triangulation() != t)
    throw VerificationError("regularity certificate does not reproduce the triangulation");
  return w;
}

Triangulation triangulation_of_bundle_fan(const Fan& f, const PointConfig& nu) {
  if (f.ambient != nu.dim) throw InputError("fan and configuration have different rank");
  std::vector<std::size_t> label(f.rays.size());
  for (std::size_t i = 0; i < f.rays.size(); ++i) {
    auto l = nu.label_of(f.rays[i]);
    if (!l) throw InputError("fan ray " + to_string(f.rays[i]) + " is not a point of the configuration");
    label[i] = *l;
  }
  Triangulation t;
  for (const auto& c : f.cones) {
    if (c.size() != nu.dim) throw InputError("fan is not simplicial");
    std::vector<std::size_t> s;
    for (auto r : c) s.push_back(label[r]);
    std::sort(s.begin(), s.end());
    t.simplices.push_back(std::move(s));
  }
  std::sort(t.simplices.begin(), t.simplices.end());
  std::string err = check_triangulation(nu, t);
  if (!err.empty()) throw InputError("fan does not triangulate the configuration: " + err);
  return t;
}

bool ChamberDescription::contains_weight(const RatVec& w) const {
  for (const auto& r : weight_inequalities)
    if (rdot(to_rat(r), w) <= 0) return false;
  return true;
}

bool ChamberDescription::contains_character(const RatVec& chi) const {
  for (const auto& r : character_inequalities)
    if (rdot(r, chi) <= 0) return false;
  return true;
}

ChamberDescription chamber_of_triangulation(const PointConfig& nu, const Triangulation& t) {
  auto cert = regularity_certificate(nu, t);
  if (!cert) throw InputError("triangulation is not regular");
  ChamberDescription c;
  c.weight_inequalities = regularity_inequalities(nu, t);
  c.certificate = *cert;
  c.degrees = s_nu(nu.points, nu.dim);
  const std::size_t k = c.degrees.presentation.free_rank, n = nu.points.size();
  IntMatrix pt(n, k);  // transpose of the free projection
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < k; ++j) pt(i, j) = c.degrees.coordinate_degrees[i].free_part[j];
  for (const auto& row : c.weight_inequalities) {
    auto l = solve_rational(pt, to_rat(row));
    if (!l) throw VerificationError("chamber inequality does not factor through the degree map");
    c.character_inequalities.push_back(*l);
  }
  c.character_certificate.assign(k, Rat(0));
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t i = 0; i < n; ++i) c.character_certificate[j] += pt(i, j) * c.certificate[i];
  if (!c.contains_character(c.character_certificate))
    throw VerificationError("chamber certificate violates its own inequalities");
  return c;
}

}  // namespace bbm
