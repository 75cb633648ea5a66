#include "bbmirror/fans.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "bbmirror/errors.hpp"
#include "bbmirror/lp.hpp"

namespace bbm {

std::vector<IntVec> Fan::cone_rays(std::size_t i) const {
  std::vector<IntVec> out;
  for (auto r : cones.at(i)) out.push_back(rays.at(r));
  return out;
}

RationalCone Fan::cone(std::size_t i) const { return RationalCone::from_generators(cone_rays(i), ambient); }

bool Fan::simplicial() const {
  for (std::size_t i = 0; i < cones.size(); ++i)
    if (rank(cone_rays(i), ambient) != cones[i].size()) return false;
  return true;
}

Fan normal_fan(const LatticePolytope& p) {
  if (!p.full_dimensional() || p.dim() == 0) throw InputError("normal_fan: polytope must be full-dimensional");
  Fan f;
  f.ambient = p.ambient_dim();
  for (const auto& fc : p.facets()) f.rays.push_back(fc.normal);
  std::sort(f.rays.begin(), f.rays.end());
  for (const auto& v : p.vertices()) {
    std::vector<std::size_t> c;
    for (std::size_t i = 0; i < f.rays.size(); ++i) {
      const Facet* fc = nullptr;
      for (const auto& x : p.facets())
        if (x.normal == f.rays[i]) fc = &x;
      if (dot(v, fc->normal) == -fc->offset) c.push_back(i);
    }
    f.cones.push_back(std::move(c));
  }
  std::sort(f.cones.begin(), f.cones.end());
  return f;
}

CoxData cox_data(const Fan& f) {
  CoxData out;
  out.cones = f.cones;
  const std::size_t n = f.rays.size();
  auto is_face = [&](const std::vector<std::size_t>& s) {
    for (const auto& c : f.cones)
      if (std::includes(c.begin(), c.end(), s.begin(), s.end())) return true;
    return false;
  };
  // level-wise: candidates of size k are extensions of faces of size k-1 by a larger index
  std::vector<std::vector<std::size_t>> faces{{}};
  while (!faces.empty()) {
    std::set<std::vector<std::size_t>> next_faces;
    std::set<std::vector<std::size_t>> seen;
    std::set<std::vector<std::size_t>> level(faces.begin(), faces.end());
    for (const auto& s : faces) {
      for (std::size_t j = s.empty() ? 0 : s.back() + 1; j < n; ++j) {
        auto t = s;
        t.push_back(j);
        if (!seen.insert(t).second) continue;
        bool all_faces = true;
        for (std::size_t drop = 0; drop + 1 < t.size() && all_faces; ++drop) {
          auto u = t;
          u.erase(u.begin() + static_cast<long>(drop));
          if (!level.count(u)) all_faces = false;
        }
        if (!all_faces) continue;
        if (is_face(t))
          next_faces.insert(t);
        else
          out.primitive_collections.push_back(t);
      }
    }
    faces.assign(next_faces.begin(), next_faces.end());
  }
  std::sort(out.primitive_collections.begin(), out.primitive_collections.end());
  return out;
}

Fan bundle_fan(const Fan& base, const std::vector<DivisorData>& divisors) {
  if (divisors.empty()) throw InputError("bundle_fan: need at least one divisor");
  const std::size_t d = base.ambient, r = divisors.size(), k = base.rays.size();
  for (const auto& D : divisors)
    if (D.coefficients.size() != k) throw InputError("bundle_fan: coefficient length mismatch");
  Fan f;
  f.ambient = d + r;
  for (std::size_t i = 0; i < k; ++i) {
    IntVec v = base.rays[i];
    for (const auto& D : divisors) v.push_back(-D.coefficients[i]);
    f.rays.push_back(std::move(v));
  }
  for (std::size_t j = 0; j < r; ++j) {
    IntVec e(d + r, Int(0));
    e[d + j] = 1;
    f.rays.push_back(std::move(e));
  }
  for (const auto& c : base.cones) {
    auto cc = c;
    for (std::size_t j = 0; j < r; ++j) cc.push_back(k + j);
    f.cones.push_back(std::move(cc));
  }
  std::sort(f.cones.begin(), f.cones.end());
  return f;
}

namespace {

// Pulling triangulation of Cone(rays in s) of dimension `dim`, pulling the
// lexicographically smallest ray first. order[i] is the lex rank of ray i.
void pull(const Fan& f, const std::vector<std::size_t>& order, std::vector<std::size_t> s, std::size_t dim,
          std::vector<std::vector<std::size_t>>& out) {
  if (s.size() == dim) {
    std::sort(s.begin(), s.end());
    out.push_back(std::move(s));
    return;
  }
  std::size_t v = *std::min_element(s.begin(), s.end(), [&](auto a, auto b) { return order[a] < order[b]; });
  std::vector<IntVec> g;
  for (auto i : s) g.push_back(f.rays[i]);
  ConeHRep h = cone_facets(g, f.ambient);
  for (const auto& n : h.facets) {
    if (dot(n, f.rays[v]) == 0) continue;
    std::vector<std::size_t> face;
    for (auto i : s)
      if (dot(n, f.rays[i]) == 0) face.push_back(i);
    std::vector<std::vector<std::size_t>> sub;
    pull(f, order, face, dim - 1, sub);
    for (auto& t : sub) {
      t.push_back(v);
      std::sort(t.begin(), t.end());
      out.push_back(std::move(t));
    }
  }
}

}  // namespace

Fan simplicial_refinement(const Fan& f) {
  std::vector<std::size_t> idx(f.rays.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](auto a, auto b) { return f.rays[a] < f.rays[b]; });
  std::vector<std::size_t> order(idx.size());
  for (std::size_t i = 0; i < idx.size(); ++i) order[idx[i]] = i;

  Fan out;
  out.rays = f.rays;
  out.ambient = f.ambient;
  std::set<std::vector<std::size_t>> cones;
  for (std::size_t i = 0; i < f.cones.size(); ++i) {
    std::vector<std::vector<std::size_t>> pieces;
    pull(f, order, f.cones[i], rank(f.cone_rays(i), f.ambient), pieces);
    cones.insert(pieces.begin(), pieces.end());
  }
  out.cones.assign(cones.begin(), cones.end());
  return out;
}

std::string validate(const Fan& f) {
  for (const auto& r : f.rays) {
    if (r.size() != f.ambient) return "ray of wrong length";
    if (is_zero(r) || primitive(r) != r) return "ray " + to_string(r) + " is not primitive";
  }
  for (std::size_t i = 0; i < f.cones.size(); ++i) {
    for (auto r : f.cones[i])
      if (r >= f.rays.size()) return "cone index out of range";
    auto g = f.cone_rays(i);
    auto ext = extreme_generators(g, f.ambient);
    std::sort(g.begin(), g.end());
    if (ext != g) return "cone " + std::to_string(i) + " has redundant or non-extreme rays";
  }
  for (std::size_t i = 0; i < f.cones.size(); ++i)
    for (std::size_t j = i + 1; j < f.cones.size(); ++j) {
      const auto& a = f.cones[i];
      const auto& b = f.cones[j];
      std::vector<IntVec> strict, equal;
      for (auto r : a)
        if (std::binary_search(b.begin(), b.end(), r))
          equal.push_back(f.rays[r]);
        else
          strict.push_back(f.rays[r]);
      for (auto r : b)
        if (!std::binary_search(a.begin(), a.end(), r)) strict.push_back(scale(f.rays[r], Int(-1)));
      if (strict.empty()) return "cones " + std::to_string(i) + " and " + std::to_string(j) + " coincide";
      if (!lp::strict_feasible(strict, {}, equal, f.ambient))
        return "cones " + std::to_string(i) + " and " + std::to_string(j) + " do not meet in a common face";
    }
  return {};
}

bool in_support(const Fan& f, const IntVec& x) {
  for (std::size_t i = 0; i < f.cones.size(); ++i)
    if (f.cone(i).contains(x)) return true;
  return false;
}

}  // namespace bbm
