#include "bbmirror/nefpart.hpp"

#include <algorithm>
#include <functional>

#include "bbmirror/errors.hpp"

namespace bbm {

namespace {

std::vector<IntVec> cayley_points(const std::vector<LatticePolytope>& parts) {
  const std::size_t d = parts.at(0).ambient_dim(), r = parts.size();
  std::vector<IntVec> pts;
  for (std::size_t i = 0; i < r; ++i) {
    if (parts[i].ambient_dim() != d) throw InputError("cayley: parts live in different lattices");
    for (const auto& v : parts[i].vertices()) {
      IntVec x = v;
      x.resize(d + r, Int(0));
      x[d + i] = 1;
      pts.push_back(std::move(x));
    }
  }
  return pts;
}

LatticePolytope sum_of(const std::vector<LatticePolytope>& parts) {
  LatticePolytope s = parts.at(0);
  for (std::size_t i = 1; i < parts.size(); ++i) s = minkowski_sum(s, parts[i]);
  return s;
}

}  // namespace

NefPartition validate_nef_partition(const std::vector<LatticePolytope>& parts, const std::vector<IntVec>& base_points) {
  if (parts.empty()) throw InputError("nef partition: no parts");
  if (parts.size() != base_points.size()) throw InputError("nef partition: need one base point per part");
  const std::size_t d = parts[0].ambient_dim();
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].ambient_dim() != d || base_points[i].size() != d)
      throw InputError("nef partition: parts and base points must share one lattice");
    if (!parts[i].contains(base_points[i]))
      throw InputError("nef partition: base point p" + std::to_string(i + 1) + " = " + to_string(base_points[i]) +
                       " is not a lattice point of part " + std::to_string(i + 1));
  }
  NefPartition p;
  p.parts = parts;
  p.base_points = base_points;
  p.ambient = sum_of(parts);
  p.m = IntVec(d, Int(0));
  for (const auto& b : base_points) p.m = add(p.m, b);
  if (!p.ambient.full_dimensional())
    throw InputError("nef partition: Minkowski sum " + to_string(p.ambient) + " is not full-dimensional");
  if (!is_reflexive_wrt(p.ambient, p.m))
    throw InputError("nef partition: Minkowski sum " + to_string(p.ambient) +
                     " is not reflexive with respect to m = " + to_string(p.m));
  return p;
}

std::vector<std::vector<IntVec>> special_simplices(const LatticePolytope& p, std::size_t r) {
  if (!p.full_dimensional()) throw InputError("special_simplices: polytope must be full-dimensional");
  if (r == 0) throw InputError("special_simplices: r must be positive");
  const auto pts = p.lattice_points();
  const auto& facets = p.facets();
  const std::size_t n = pts.size(), nf = facets.size(), d = p.ambient_dim();
  std::vector<std::vector<bool>> on(n, std::vector<bool>(nf));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t f = 0; f < nf; ++f) on[i][f] = dot(pts[i], facets[f].normal) == -facets[f].offset;

  std::vector<std::vector<IntVec>> out;
  std::vector<std::size_t> pick;
  std::vector<std::size_t> count(nf, 0);
  std::function<void(std::size_t)> go = [&](std::size_t start) {
    const std::size_t left = r - pick.size();
    for (std::size_t f = 0; f < nf; ++f)
      if (count[f] + left < r - 1) return;
    if (left == 0) {
      std::vector<IntVec> rows;
      for (auto i : pick) {
        IntVec h = pts[i];
        h.emplace_back(1);
        rows.push_back(std::move(h));
      }
      if (rank(rows, d + 1) != r) return;
      std::vector<IntVec> s;
      for (auto i : pick) s.push_back(pts[i]);
      out.push_back(std::move(s));
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      bool ok = true;
      for (std::size_t f = 0; f < nf && ok; ++f)
        if (on[i][f] && count[f] + 1 > r - 1) ok = false;
      if (!ok) continue;
      pick.push_back(i);
      for (std::size_t f = 0; f < nf; ++f) count[f] += on[i][f];
      go(i + 1);
      for (std::size_t f = 0; f < nf; ++f) count[f] -= on[i][f];
      pick.pop_back();
    }
  };
  go(0);
  return out;
}

std::vector<LatticePolytope> dual_nef_partition(const NefPartition& p) {
  const std::size_t d = p.rank(), r = p.length();
  std::vector<LatticePolytope> out;
  for (std::size_t j = 0; j < r; ++j) {
    std::vector<Facet> ineqs;
    for (std::size_t i = 0; i < r; ++i)
      for (const auto& v : p.parts[i].vertices()) ineqs.push_back({sub(v, p.base_points[i]), Int(i == j ? 1 : 0)});
    std::vector<IntVec> verts;
    for (const auto& v : polytope_vertices(ineqs, d)) {
      auto iv = to_int(v);
      if (!iv)
        throw InputError("dual nef partition: part " + std::to_string(j + 1) + " has the non-integral vertex " +
                         to_string(v));
      verts.push_back(std::move(*iv));
    }
    out.push_back(LatticePolytope::hull(std::move(verts)));
  }
  return out;
}

CayleyData cayley(const std::vector<LatticePolytope>& parts) {
  if (parts.empty()) throw InputError("cayley: no parts");
  CayleyData c;
  c.rank = parts[0].ambient_dim();
  c.length = parts.size();
  auto pts = cayley_points(parts);
  c.polytope = LatticePolytope::hull(pts);
  c.cone = RationalCone::from_generators(pts, c.rank + c.length);
  for (std::size_t i = 0; i < c.length; ++i) {
    IntVec e(c.rank + c.length, Int(0));
    e[c.rank + i] = 1;
    c.fiber_basis.push_back(std::move(e));
  }
  if (c.cone.full_dimensional()) c.gorenstein = gorenstein_cone_data(c.cone);
  return c;
}

std::vector<LatticePolytope> recover_partition(const RationalCone& k, const std::vector<IntVec>& f) {
  const std::size_t n = k.ambient_dim(), r = f.size();
  if (r == 0 || r > n) throw InputError("recover_partition: bad number of splitting vectors");
  IntMatrix fm = IntMatrix::from_rows(f, n);
  IntMatrix block(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) block(i, j) = fm(i, n - r + j);
  std::function<IntVec(const IntVec&)> chart;
  if (abs(determinant(block)) == 1) {
    chart = [n, r](const IntVec& y) { return IntVec(y.begin(), y.begin() + static_cast<long>(n - r)); };
  } else {
    SmithForm s = smith_normal_form(fm);
    for (std::size_t i = 0; i < r; ++i)
      if (s.D(i, i) != 1) throw InputError("recover_partition: splitting vectors are not part of a lattice basis");
    IntMatrix vinv = inverse_unimodular(s.V);
    chart = [vinv, r](const IntVec& y) {
      IntVec z = vinv.apply(y);
      return IntVec(z.begin() + static_cast<long>(r), z.end());
    };
  }
  std::vector<std::vector<IntVec>> groups(r);
  for (const auto& g : k.generators()) {
    IntVec h = fm.apply(g);
    std::size_t hit = r;
    for (std::size_t i = 0; i < r; ++i) {
      if (h[i] == 1 && hit == r)
        hit = i;
      else if (h[i] != 0)
        hit = r + 1;
    }
    if (hit >= r) throw InputError("recover_partition: generator " + to_string(g) + " is not split by the vectors");
    groups[hit].push_back(chart(g));
  }
  std::vector<LatticePolytope> out;
  for (std::size_t i = 0; i < r; ++i) {
    if (groups[i].empty()) throw InputError("recover_partition: empty part");
    out.push_back(LatticePolytope::hull(groups[i]));
  }
  return out;
}

std::vector<SplittingData> splittings(const RationalCone& k, std::size_t r) {
  auto g = gorenstein_cone_data(k);
  if (!g || !g->index) throw InputError("splittings: cone is not reflexive Gorenstein");
  if (Int(static_cast<unsigned long>(r)) != *g->index) return {};
  RationalCone d = dual_cone(k);
  SliceChart chart = slice_chart(*g->deg);
  std::vector<IntVec> pts;
  for (const auto& y : slice_polytope(d, chart, Int(1)).lattice_points()) pts.push_back(chart.lift(y, Int(1)));
  std::sort(pts.begin(), pts.end());

  std::vector<SplittingData> out;
  std::vector<std::size_t> pick;
  std::function<void(std::size_t, const IntVec&)> go = [&](std::size_t start, const IntVec& rest) {
    if (pick.size() == r) {
      if (!is_zero(rest)) return;
      SplittingData s;
      for (auto i : pick) s.vectors.push_back(pts[i]);
      s.repeated = std::adjacent_find(pick.begin(), pick.end()) != pick.end();
      s.recovered = recover_partition(k, s.vectors);
      out.push_back(std::move(s));
      return;
    }
    if (!d.contains(rest)) return;
    for (std::size_t i = start; i < pts.size(); ++i) {
      pick.push_back(i);
      go(i, sub(rest, pts[i]));
      pick.pop_back();
    }
  };
  go(0, g->deg_dual);
  return out;
}

std::vector<SplittingData> splittings(const CayleyData& c) {
  if (!c.gorenstein) throw InputError("splittings: Cayley cone is not Gorenstein");
  return splittings(dual_cone(c.cone), c.length);
}

std::optional<std::vector<IntVec>> find_base_points(const std::vector<LatticePolytope>& parts) {
  if (parts.empty()) return std::nullopt;
  LatticePolytope s = sum_of(parts);
  auto center = reflexive_center(s);
  if (!center) return std::nullopt;
  std::vector<std::vector<IntVec>> pts;
  for (const auto& p : parts) pts.push_back(p.lattice_points());
  std::vector<IntVec> pick;
  std::function<bool(std::size_t, const IntVec&)> go = [&](std::size_t i, const IntVec& rest) {
    if (i == parts.size()) return is_zero(rest);
    for (const auto& x : pts[i]) {
      pick.push_back(x);
      if (go(i + 1, sub(rest, x))) return true;
      pick.pop_back();
    }
    return false;
  };
  if (!go(0, *center)) return std::nullopt;
  return pick;
}

CayleyDualityReport cayley_duality_check(const NefPartition& p) {
  CayleyDualityReport rep;
  const std::size_t d = p.rank(), r = p.length();
  std::vector<LatticePolytope> shifted;
  for (std::size_t i = 0; i < r; ++i) shifted.push_back(p.parts[i].translate(scale(p.base_points[i], Int(-1))));
  auto nabla = dual_nef_partition(p);
  IntVec zero(d, Int(0));

  auto c = RationalCone::from_generators(cayley_points(shifted), d + r);
  auto cn = RationalCone::from_generators(cayley_points(nabla), d + r);
  rep.cones_dual = c.full_dimensional() && dual_cone(c) == cn;

  auto dual_equals = [&](const std::vector<LatticePolytope>& ps, const LatticePolytope& target) {
    std::vector<IntVec> all;
    for (const auto& q : ps) all.insert(all.end(), q.vertices().begin(), q.vertices().end());
    LatticePolytope u = LatticePolytope::hull(all);
    if (!u.full_dimensional() || !u.contains_interior(zero)) return false;
    DualPolytope dp = dual_polytope(u, zero);
    return dp.integral && *dp.polytope == target;
  };
  rep.conv_delta_dual_nabla = dual_equals(shifted, sum_of(nabla));
  rep.conv_nabla_dual_delta = dual_equals(nabla, p.ambient.translate(scale(p.m, Int(-1))));
  return rep;
}

}  // namespace bbm
