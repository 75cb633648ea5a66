#include "bbmirror/polyhedra.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>

#include "bbmirror/errors.hpp"

namespace bbm {

Int pairing(const LatticePoint& a, const LatticePoint& b) {
  auto dual = [](Lattice x, Lattice y) {
    return (x == Lattice::M && y == Lattice::N) || (x == Lattice::N && y == Lattice::M) ||
           (x == Lattice::MBar && y == Lattice::NBar) || (x == Lattice::NBar && y == Lattice::MBar);
  };
  if (!dual(a.tag, b.tag)) throw InputError("pairing: lattices are not dual to each other");
  if (a.coords.size() != b.coords.size()) throw InputError("pairing: rank mismatch");
  return dot(a.coords, b.coords);
}

namespace {

// Fixed-size bitset over inequality indices.
class Bits {
 public:
  explicit Bits(std::size_t n = 0) : words_((n + 63) / 64, 0) {}
  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  Bits operator&(const Bits& o) const {
    Bits r = *this;
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] &= o.words_[i];
    return r;
  }
  bool contains(const Bits& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if ((o.words_[i] & ~words_[i]) != 0) return false;
    return true;
  }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(__builtin_popcountll(w));
    return c;
  }

 private:
  std::vector<std::uint64_t> words_;
};

struct Ray {
  IntVec v;
  Bits zero;
};

void sort_unique(std::vector<IntVec>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

std::vector<IntVec> cone_rays(const std::vector<IntVec>& ineqs_in, std::size_t dim) {
  if (dim == 0) return {};
  std::vector<IntVec> ineqs;
  for (const auto& a : ineqs_in) {
    if (a.size() != dim) throw InputError("cone_rays: inequality length mismatch");
    if (!is_zero(a)) ineqs.push_back(primitive(a));
  }
  sort_unique(ineqs);
  if (rank(ineqs, dim) < dim) throw InputError("cone_rays: cone is not pointed");

  // greedy choice of dim independent rows for the initial simplicial cone
  std::vector<std::size_t> chosen;
  std::vector<RatVec> acc;
  for (std::size_t i = 0; i < ineqs.size() && chosen.size() < dim; ++i) {
    acc.push_back(to_rat(ineqs[i]));
    if (rref(acc, dim, nullptr).size() > chosen.size())
      chosen.push_back(i);
    else
      acc.pop_back();
  }
  IntMatrix b(dim, dim);
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < dim; ++c) b(r, c) = ineqs[chosen[r]][c];

  const std::size_t m = ineqs.size();
  std::vector<Ray> rays;
  for (std::size_t j = 0; j < dim; ++j) {
    RatVec e(dim, Rat(0));
    e[j] = 1;
    auto x = solve_rational(b, e);
    Ray r{primitive_direction(*x), Bits(m)};
    for (std::size_t i = 0; i < dim; ++i)
      if (i != j) r.zero.set(chosen[i]);
    rays.push_back(std::move(r));
  }

  std::vector<bool> used(m, false);
  for (auto c : chosen) used[c] = true;
  for (std::size_t idx = 0; idx < m; ++idx) {
    if (used[idx]) continue;
    const IntVec& a = ineqs[idx];
    std::vector<Int> val(rays.size());
    bool any_neg = false;
    for (std::size_t k = 0; k < rays.size(); ++k) {
      val[k] = dot(a, rays[k].v);
      if (val[k] < 0) any_neg = true;
    }
    if (!any_neg) {
      for (std::size_t k = 0; k < rays.size(); ++k)
        if (val[k] == 0) rays[k].zero.set(idx);
      continue;
    }
    std::vector<Ray> next;
    for (std::size_t k = 0; k < rays.size(); ++k) {
      if (val[k] > 0) next.push_back(rays[k]);
      if (val[k] == 0) {
        next.push_back(rays[k]);
        next.back().zero.set(idx);
      }
    }
    for (std::size_t p = 0; p < rays.size(); ++p) {
      if (val[p] <= 0) continue;
      for (std::size_t n = 0; n < rays.size(); ++n) {
        if (val[n] >= 0) continue;
        Bits common = rays[p].zero & rays[n].zero;
        if (common.count() + 2 < dim) continue;
        bool adjacent = true;
        for (std::size_t o = 0; o < rays.size() && adjacent; ++o)
          if (o != p && o != n && rays[o].zero.contains(common)) adjacent = false;
        if (!adjacent) continue;
        IntVec v = sub(scale(rays[n].v, val[p]), scale(rays[p].v, val[n]));
        Ray r{primitive(std::move(v)), common};
        r.zero.set(idx);
        next.push_back(std::move(r));
      }
    }
    rays = std::move(next);
  }
  std::vector<IntVec> out;
  out.reserve(rays.size());
  for (auto& r : rays) out.push_back(std::move(r.v));
  sort_unique(out);
  return out;
}

ConeHRep cone_facets(const std::vector<IntVec>& gens_in, std::size_t dim) {
  std::vector<IntVec> gens;
  for (const auto& g : gens_in) {
    if (g.size() != dim) throw InputError("cone_facets: generator length mismatch");
    if (!is_zero(g)) gens.push_back(g);
  }
  ConeHRep h;
  if (gens.empty()) {
    for (std::size_t i = 0; i < dim; ++i) {
      IntVec e(dim, Int(0));
      e[i] = 1;
      h.equations.push_back(std::move(e));
    }
    return h;
  }
  std::vector<RatVec> rows;
  for (const auto& g : gens) rows.push_back(to_rat(g));
  std::vector<std::size_t> piv;
  rref(rows, dim, &piv);
  h.equations = rational_kernel(IntMatrix::from_rows(gens, dim));

  // Within the span, the pivot coordinates are a linear chart.
  const std::size_t k = piv.size();
  std::vector<IntVec> local;
  for (const auto& g : gens) {
    IntVec x(k);
    for (std::size_t i = 0; i < k; ++i) x[i] = g[piv[i]];
    local.push_back(std::move(x));
  }
  for (const auto& y : cone_rays(local, k)) {
    IntVec f(dim, Int(0));
    for (std::size_t i = 0; i < k; ++i) f[piv[i]] = y[i];
    h.facets.push_back(primitive(std::move(f)));
  }
  sort_unique(h.facets);
  return h;
}

namespace {

std::vector<IntVec> extreme_from_hrep(const std::vector<IntVec>& gens, const ConeHRep& h, std::size_t dim) {
  std::vector<IntVec> cand;
  for (const auto& g : gens)
    if (!is_zero(g)) cand.push_back(primitive(g));
  sort_unique(cand);
  std::vector<IntVec> out;
  for (const auto& g : cand) {
    std::vector<IntVec> tight = h.equations;
    for (const auto& f : h.facets)
      if (dot(f, g) == 0) tight.push_back(f);
    if (rank(tight, dim) + 1 == dim) out.push_back(g);
  }
  return out;
}

}  // namespace

std::vector<IntVec> extreme_generators(const std::vector<IntVec>& gens, std::size_t dim) {
  return extreme_from_hrep(gens, cone_facets(gens, dim), dim);
}

// ---------------------------------------------------------------------------

LatticePolytope LatticePolytope::hull(std::vector<IntVec> pts) {
  if (pts.empty()) throw InputError("hull: empty point list");
  const std::size_t d = pts[0].size();
  for (const auto& p : pts)
    if (p.size() != d) throw InputError("hull: points of different lengths");
  sort_unique(pts);

  std::vector<IntVec> homog;
  for (const auto& p : pts) {
    IntVec h = p;
    h.emplace_back(1);
    homog.push_back(std::move(h));
  }
  ConeHRep h = cone_facets(homog, d + 1);

  LatticePolytope poly;
  poly.ambient_ = d;
  std::vector<IntVec> eq_h = h.equations;
  for (const auto& e : h.equations) poly.equations_.push_back({IntVec(e.begin(), e.end() - 1), e.back()});
  poly.dim_ = d - poly.equations_.size();
  if (poly.dim_ > 0)
    for (const auto& f : h.facets) poly.facets_.push_back({IntVec(f.begin(), f.end() - 1), f.back()});
  std::sort(poly.facets_.begin(), poly.facets_.end());

  if (pts.size() == 1) {
    poly.vertices_ = pts;
    return poly;
  }
  for (std::size_t i = 0; i < pts.size(); ++i) {
    std::vector<IntVec> tight = eq_h;
    for (const auto& f : h.facets)
      if (dot(f, homog[i]) == 0) tight.push_back(f);
    if (rank(tight, d + 1) == d) poly.vertices_.push_back(pts[i]);
  }
  return poly;
}

bool LatticePolytope::contains(const IntVec& x) const {
  if (x.size() != ambient_) throw InputError("LatticePolytope::contains: dimension mismatch");
  for (const auto& e : equations_)
    if (dot(e.normal, x) + e.offset != 0) return false;
  for (const auto& f : facets_)
    if (dot(f.normal, x) + f.offset < 0) return false;
  return true;
}

bool LatticePolytope::contains(const RatVec& x) const {
  if (x.size() != ambient_) throw InputError("LatticePolytope::contains: dimension mismatch");
  for (const auto& e : equations_)
    if (dot(to_rat(e.normal), x) + e.offset != 0) return false;
  for (const auto& f : facets_)
    if (dot(to_rat(f.normal), x) + f.offset < 0) return false;
  return true;
}

bool LatticePolytope::contains_interior(const IntVec& x) const {
  if (x.size() != ambient_) throw InputError("LatticePolytope::contains_interior: dimension mismatch");
  for (const auto& e : equations_)
    if (dot(e.normal, x) + e.offset != 0) return false;
  for (const auto& f : facets_)
    if (dot(f.normal, x) + f.offset <= 0) return false;
  return true;
}

namespace {

template <class Pred>
std::vector<IntVec> box_scan(const std::vector<IntVec>& vertices, std::size_t d, Pred keep) {
  IntVec lo = vertices[0], hi = vertices[0];
  for (const auto& v : vertices)
    for (std::size_t i = 0; i < d; ++i) {
      if (v[i] < lo[i]) lo[i] = v[i];
      if (v[i] > hi[i]) hi[i] = v[i];
    }
  std::vector<IntVec> out;
  IntVec x = lo;
  while (true) {
    if (keep(x)) out.push_back(x);
    std::size_t i = d;
    while (i > 0) {
      --i;
      if (x[i] < hi[i]) {
        ++x[i];
        for (std::size_t j = i + 1; j < d; ++j) x[j] = lo[j];
        break;
      }
      if (i == 0) return out;
    }
    if (d == 0) return out;
  }
}

}  // namespace

std::vector<IntVec> LatticePolytope::lattice_points() const {
  return box_scan(vertices_, ambient_, [this](const IntVec& x) { return contains(x); });
}

std::vector<IntVec> LatticePolytope::interior_lattice_points() const {
  return box_scan(vertices_, ambient_, [this](const IntVec& x) { return contains_interior(x); });
}

LatticePolytope LatticePolytope::translate(const IntVec& t) const {
  std::vector<IntVec> v;
  for (const auto& x : vertices_) v.push_back(add(x, t));
  return hull(std::move(v));
}

LatticePolytope LatticePolytope::dilate(const Int& k) const {
  std::vector<IntVec> v;
  for (const auto& x : vertices_) v.push_back(scale(x, k));
  return hull(std::move(v));
}

std::string to_string(const LatticePolytope& p) {
  std::ostringstream os;
  os << "Conv{";
  for (std::size_t i = 0; i < p.vertices().size(); ++i) os << (i ? "," : "") << to_string(p.vertices()[i]);
  os << '}';
  return os.str();
}

DualPolytope dual_polytope(const LatticePolytope& p, const IntVec& base) {
  if (!p.full_dimensional()) throw InputError("dual_polytope: polytope must be full-dimensional");
  if (!p.contains_interior(base)) throw InputError("dual_polytope: base point is not interior");
  DualPolytope d;
  d.integral = true;
  for (const auto& f : p.facets()) {
    Int h = f.offset + dot(f.normal, base);
    RatVec v(f.normal.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
      v[i] = Rat(f.normal[i], h);
      v[i].canonicalize();
    }
    if (!to_int(v)) d.integral = false;
    d.vertices.push_back(std::move(v));
  }
  std::sort(d.vertices.begin(), d.vertices.end());
  if (d.integral) {
    std::vector<IntVec> iv;
    for (const auto& v : d.vertices) iv.push_back(*to_int(v));
    d.polytope = LatticePolytope::hull(std::move(iv));
  }
  return d;
}

bool is_reflexive_wrt(const LatticePolytope& p, const IntVec& base) {
  if (!p.full_dimensional() || !p.contains_interior(base)) return false;
  for (const auto& f : p.facets())
    if (f.offset + dot(f.normal, base) != 1) return false;
  return true;
}

std::optional<IntVec> reflexive_center(const LatticePolytope& p) {
  if (!p.full_dimensional()) return std::nullopt;
  auto inner = p.interior_lattice_points();
  if (inner.size() != 1 || !is_reflexive_wrt(p, inner[0])) return std::nullopt;
  return inner[0];
}

std::vector<RatVec> polytope_vertices(const std::vector<Facet>& ineqs, std::size_t dim) {
  std::vector<IntVec> rows;
  for (const auto& f : ineqs) {
    if (f.normal.size() != dim) throw InputError("polytope_vertices: inequality length mismatch");
    IntVec r = f.normal;
    r.push_back(f.offset);
    rows.push_back(std::move(r));
  }
  IntVec t(dim + 1, Int(0));
  t[dim] = 1;
  rows.push_back(t);
  std::vector<IntVec> rays;
  try {
    rays = cone_rays(rows, dim + 1);
  } catch (const InputError&) {
    throw InputError("polytope_vertices: polyhedron is unbounded");
  }
  std::vector<RatVec> out;
  for (const auto& r : rays) {
    if (r[dim] == 0) throw InputError("polytope_vertices: polyhedron is unbounded");
    RatVec v(dim);
    for (std::size_t i = 0; i < dim; ++i) {
      v[i] = Rat(r[i], r[dim]);
      v[i].canonicalize();
    }
    out.push_back(std::move(v));
  }
  if (out.empty()) throw InputError("polytope_vertices: polyhedron is empty");
  std::sort(out.begin(), out.end());
  return out;
}

LatticePolytope minkowski_sum(const LatticePolytope& p, const LatticePolytope& q) {
  if (p.ambient_dim() != q.ambient_dim()) throw InputError("minkowski_sum: ambient dimension mismatch");
  std::vector<IntVec> pts;
  for (const auto& a : p.vertices())
    for (const auto& b : q.vertices()) pts.push_back(add(a, b));
  return LatticePolytope::hull(std::move(pts));
}

std::optional<GorensteinPolytopeData> gorenstein_polytope_data(const LatticePolytope& p) {
  if (!p.full_dimensional()) throw InputError("gorenstein_polytope_data: polytope is not full-dimensional");
  const std::size_t bound = p.dim() + 1;
  for (std::size_t r = 1; r <= bound; ++r) {
    LatticePolytope rp = p.dilate(Int(static_cast<unsigned long>(r)));
    for (const auto& m : rp.interior_lattice_points())
      if (is_reflexive_wrt(rp, m)) return GorensteinPolytopeData{Int(static_cast<unsigned long>(r)), m};
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------

RationalCone RationalCone::from_generators(const std::vector<IntVec>& gens, std::size_t dim) {
  for (const auto& g : gens)
    if (g.size() != dim) throw InputError("RationalCone: generator length mismatch");
  ConeHRep h = cone_facets(gens, dim);
  std::vector<IntVec> all = h.facets;
  all.insert(all.end(), h.equations.begin(), h.equations.end());
  if (rank(all, dim) < dim) throw InputError("RationalCone: cone is not strictly convex");
  RationalCone c;
  c.ambient_ = dim;
  c.generators_ = extreme_from_hrep(gens, h, dim);
  c.facets_ = std::move(h.facets);
  c.equations_ = std::move(h.equations);
  return c;
}

RationalCone RationalCone::from_inequalities(const std::vector<IntVec>& normals, std::size_t dim) {
  return from_generators(cone_rays(normals, dim), dim);
}

bool RationalCone::contains(const IntVec& x) const {
  for (const auto& e : equations_)
    if (dot(e, x) != 0) return false;
  for (const auto& f : facets_)
    if (dot(f, x) < 0) return false;
  return true;
}

bool RationalCone::contains_interior(const IntVec& x) const {
  for (const auto& e : equations_)
    if (dot(e, x) != 0) return false;
  for (const auto& f : facets_)
    if (dot(f, x) <= 0) return false;
  return true;
}

RationalCone dual_cone(const RationalCone& c) {
  if (!c.full_dimensional()) throw InputError("dual_cone: cone must be full-dimensional");
  RationalCone d;
  d.ambient_ = c.ambient_;
  d.generators_ = c.facets_;
  d.facets_ = c.generators_;
  return d;
}

IntMatrix inverse_unimodular(const IntMatrix& v) {
  const std::size_t n = v.rows();
  std::vector<IntVec> cols;
  for (std::size_t j = 0; j < n; ++j) {
    RatVec e(n, Rat(0));
    e[j] = 1;
    auto x = solve_rational(v, e);
    if (!x) throw InputError("inverse_unimodular: singular matrix");
    auto xi = to_int(*x);
    if (!xi) throw InputError("inverse_unimodular: matrix is not unimodular");
    cols.push_back(std::move(*xi));
  }
  return IntMatrix::from_cols(cols, n);
}

IntVec SliceChart::project(const IntVec& x) const {
  IntVec y = to_chart.apply(x);
  return IntVec(y.begin() + 1, y.end());
}

IntVec SliceChart::lift(const IntVec& y, const Int& k) const {
  IntVec z;
  z.reserve(y.size() + 1);
  z.push_back(k);
  z.insert(z.end(), y.begin(), y.end());
  return from_chart.apply(z);
}

SliceChart slice_chart(const IntVec& deg_dual) {
  const std::size_t n = deg_dual.size();
  IntMatrix row(1, n);
  for (std::size_t j = 0; j < n; ++j) row(0, j) = deg_dual[j];
  SmithForm s = smith_normal_form(row);
  if (s.D(0, 0) != 1) throw InputError("slice_chart: degree element is not primitive");
  IntMatrix v = s.V;
  if (s.U(0, 0) == -1) v.negate_col(0);
  return SliceChart{inverse_unimodular(v), v};
}

LatticePolytope slice_polytope(const RationalCone& c, const SliceChart& chart, const Int& k) {
  std::vector<IntVec> pts;
  for (const auto& g : c.generators()) {
    IntVec y = chart.to_chart.apply(g);
    if (y[0] != 1) throw InputError("slice_polytope: generator not at height 1");
    pts.emplace_back(y.begin() + 1, y.end());
  }
  return LatticePolytope::hull(std::move(pts)).dilate(k);
}

bool ReflexiveGorensteinCharacterizations::agree() const {
  return dual_is_gorenstein_index == reflexive_slice && reflexive_slice == slice_one_gorenstein &&
         interior_point_is_deg;
}

ReflexiveGorensteinCharacterizations characterize_gorenstein(const RationalCone& c, const GorensteinData& g) {
  ReflexiveGorensteinCharacterizations out;
  out.dual_is_gorenstein_index = g.index;
  SliceChart chart = slice_chart(g.deg_dual);
  const std::size_t n = c.ambient_dim();
  for (std::size_t k = 1; k <= n; ++k) {
    Int kk(static_cast<unsigned long>(k));
    LatticePolytope slice = slice_polytope(c, chart, kk);
    auto inner = slice.interior_lattice_points();
    if (inner.size() != 1) continue;
    DualPolytope d = dual_polytope(slice, inner[0]);
    if (!d.integral) continue;
    out.reflexive_slice = kk;
    if (g.deg) out.interior_point_is_deg = chart.lift(inner[0], kk) == *g.deg;
    break;
  }
  if (auto gp = gorenstein_polytope_data(slice_polytope(c, chart, Int(1)))) out.slice_one_gorenstein = gp->index;
  return out;
}

std::optional<GorensteinData> gorenstein_cone_data(const RationalCone& c) {
  if (!c.full_dimensional()) throw InputError("gorenstein_cone_data: cone must be full-dimensional");
  const std::size_t n = c.ambient_dim();
  IntVec ones_g(c.generators().size(), Int(1));
  auto deg_dual = solve_integer(IntMatrix::from_rows(c.generators(), n), ones_g);
  if (!deg_dual) return std::nullopt;
  GorensteinData g;
  g.deg_dual = *deg_dual;
  IntVec ones_f(c.facet_normals().size(), Int(1));
  if (auto deg = solve_integer(IntMatrix::from_rows(c.facet_normals(), n), ones_f)) {
    g.deg = *deg;
    g.index = dot(*deg, g.deg_dual);
  }
  auto ch = characterize_gorenstein(c, g);
  if (!ch.agree())
    throw VerificationError("gorenstein_cone_data: reflexive Gorenstein characterizations disagree");
  return g;
}

}  // namespace bbm
