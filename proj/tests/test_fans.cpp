#include <algorithm>
#include <random>

#include "bbmirror/errors.hpp"
#include "bbmirror/fans.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace bbm;

namespace {

std::vector<IntVec> pts(std::initializer_list<std::initializer_list<long>> l) {
  std::vector<IntVec> out;
  for (auto& p : l) out.push_back(make_vec(p));
  std::sort(out.begin(), out.end());
  return out;
}

LatticePolytope poly(std::initializer_list<std::initializer_list<long>> l) { return LatticePolytope::hull(pts(l)); }

DivisorData divisor_of(const Fan& f, const LatticePolytope& p) {
  DivisorData d;
  for (const auto& u : f.rays) {
    Int m = dot(p.vertices()[0], u);
    for (const auto& v : p.vertices()) m = std::min(m, Int(dot(v, u)));
    d.coefficients.push_back(-m);
  }
  return d;
}

DivisorData negate(DivisorData d) {
  for (auto& a : d.coefficients) a = -a;
  return d;
}

void check_complete(const Fan& f, std::mt19937_64& rng) {
  for (int t = 0; t < 1000; ++t) {
    IntVec x = testing::random_vec(rng, f.ambient, -50, 50);
    CHECK(in_support(f, x));
  }
}

void check_refinement(const Fan& in, const Fan& out) {
  CHECK(out.rays == in.rays);
  CHECK(out.simplicial());
  CHECK(validate(out).empty());
  for (std::size_t i = 0; i < out.cones.size(); ++i) {
    bool inside = false;
    for (const auto& c : in.cones)
      if (std::includes(c.begin(), c.end(), out.cones[i].begin(), out.cones[i].end())) inside = true;
    CHECK(inside);
  }
}

const LatticePolytope D1 = poly({{0, 0}, {1, 1}, {-1, 1}});
const LatticePolytope D2 = poly({{0, 0}, {0, -1}});
const LatticePolytope N1 = poly({{0, -1}, {1, 0}, {-1, 0}});
const LatticePolytope N2 = poly({{0, 0}, {1, 1}, {-1, 1}});

}  // namespace

TEST_CASE("normal fans") {
  std::mt19937_64 rng(31);
  Fan sq = normal_fan(poly({{1, 1}, {1, -1}, {-1, 1}, {-1, -1}}));
  CHECK(sq.rays == pts({{1, 0}, {-1, 0}, {0, 1}, {0, -1}}));
  CHECK(sq.cones.size() == 4);
  CHECK(validate(sq).empty());
  check_complete(sq, rng);

  Fan nab = normal_fan(poly({{0, -1}, {2, 1}, {-2, 1}}));
  CHECK(nab.rays == pts({{1, 1}, {-1, 1}, {0, -1}}));
  check_complete(nab, rng);

  Fan p2 = normal_fan(poly({{1, 0}, {0, 1}, {-1, -1}}));
  CHECK(p2.rays == pts({{2, -1}, {-1, 2}, {-1, -1}}));
  CHECK(p2.cones.size() == 3);

  Fan oct = normal_fan(poly({{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}}));
  CHECK(oct.rays.size() == 8);
  CHECK(oct.cones.size() == 6);
  CHECK(!oct.simplicial());
  CHECK(validate(oct).empty());
  check_complete(oct, rng);

  CHECK_THROWS_AS(normal_fan(poly({{0, 0}, {1, 1}})), InputError);
}

TEST_CASE("normal fans of random polytopes have one cone per vertex and are complete") {
  std::mt19937_64 rng(32);
  int done = 0;
  for (int t = 0; t < 50 && done < 8; ++t) {
    std::vector<IntVec> v;
    for (int i = 0; i < 7; ++i) v.push_back(testing::random_vec(rng, 3, -2, 2));
    auto p = LatticePolytope::hull(v);
    if (!p.full_dimensional()) continue;
    ++done;
    Fan f = normal_fan(p);
    CHECK(f.cones.size() == p.vertices().size());
    CHECK(validate(f).empty());
    check_complete(f, rng);
    check_refinement(f, simplicial_refinement(f));
  }
}

TEST_CASE("cox data") {
  auto p2 = cox_data(normal_fan(poly({{1, 0}, {0, 1}, {-1, -1}})));
  CHECK(p2.primitive_collections == std::vector<std::vector<std::size_t>>{{0, 1, 2}});
  CHECK(p2.cones.size() == 3);

  Fan sq = normal_fan(poly({{1, 1}, {1, -1}, {-1, 1}, {-1, -1}}));
  auto c = cox_data(sq);
  // rays sorted: (-1,0) (0,-1) (0,1) (1,0)
  CHECK(c.primitive_collections == std::vector<std::vector<std::size_t>>{{0, 3}, {1, 2}});

  Fan one{pts({{1, 0}}), {{0}}, 2};
  CHECK(cox_data(one).primitive_collections.empty());
  CHECK(cox_data(one).cones.size() == 1);
}

TEST_CASE("bundle fans") {
  Fan p1{pts({{1}, {-1}}), {{0}, {1}}, 1};  // rays (-1), (1)
  Fan z = bundle_fan(p1, {DivisorData{make_vec({0, 0})}});
  CHECK(z.rays == std::vector<IntVec>{make_vec({-1, 0}), make_vec({1, 0}), make_vec({0, 1})});
  CHECK(validate(z).empty());

  // D with a = 2 on the ray (1) and 0 on (-1), passed as -D
  Fan o2 = bundle_fan(p1, {DivisorData{make_vec({0, -2})}});
  auto rays = o2.rays;
  std::sort(rays.begin(), rays.end());
  CHECK(rays == pts({{1, 2}, {-1, 0}, {0, 1}}));
  CHECK(validate(o2).empty());

  CHECK_THROWS_AS(bundle_fan(p1, {DivisorData{make_vec({0})}}), InputError);
  CHECK_THROWS_AS(bundle_fan(p1, {}), InputError);
}

TEST_CASE("bundle fan of the nef partition has the Cayley cone as dual support") {
  Fan s = normal_fan(minkowski_sum(D1, D2));
  DivisorData a1 = divisor_of(s, D1), a2 = divisor_of(s, D2);
  Fan b = bundle_fan(s, {negate(a1), negate(a2)});
  CHECK(validate(b).empty());
  CHECK(b.simplicial());
  // every ray pairs to 1 with (0,0,1,1)
  for (const auto& r : b.rays) CHECK(dot(r, make_vec({0, 0, 1, 1})) == 1);
  auto support = RationalCone::from_generators(b.rays, 4);
  auto cayley = RationalCone::from_generators(
      pts({{0, 0, 1, 0}, {1, 1, 1, 0}, {-1, 1, 1, 0}, {0, 0, 0, 1}, {0, -1, 0, 1}}), 4);
  CHECK(dual_cone(support) == cayley);
  // the support is convex: random points of the cone lie in some maximal cone
  std::mt19937_64 rng(33);
  for (int t = 0; t < 200; ++t) {
    IntVec x(4, Int(0));
    for (const auto& g : support.generators()) x = add(x, scale(g, Int(testing::random_vec(rng, 1, 0, 5)[0])));
    CHECK(in_support(b, x));
  }
}

TEST_CASE("simplicial refinement") {
  Fan p2 = normal_fan(poly({{1, 0}, {0, 1}, {-1, -1}}));
  CHECK(simplicial_refinement(p2) == p2);

  Fan sq{pts({{1, 1, 1}, {1, -1, 1}, {-1, 1, 1}, {-1, -1, 1}}), {{0, 1, 2, 3}}, 3};
  Fan r = simplicial_refinement(sq);
  // rays sorted: (-1,-1,1)=0 (-1,1,1)=1 (1,-1,1)=2 (1,1,1)=3; pulled at ray 0
  CHECK(r.cones == std::vector<std::vector<std::size_t>>{{0, 1, 3}, {0, 2, 3}});
  check_refinement(sq, r);

  Fan nab = normal_fan(minkowski_sum(N1, N2));
  Fan b = bundle_fan(nab, {negate(divisor_of(nab, N1)), negate(divisor_of(nab, N2))});
  check_refinement(b, simplicial_refinement(b));

  Fan oct = normal_fan(poly({{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}}));
  Fan ro = simplicial_refinement(oct);
  check_refinement(oct, ro);
  CHECK(ro.cones.size() == 12);
}

TEST_CASE("validate catches overlapping cones") {
  Fan bad{pts({{1, 0}, {0, 1}, {1, 1}}), {{0, 1}, {0, 2}}, 2};
  CHECK(!validate(bad).empty());
  Fan redundant{pts({{1, 0}, {0, 1}, {1, 1}}), {{0, 1, 2}}, 2};
  CHECK(!validate(redundant).empty());
}
