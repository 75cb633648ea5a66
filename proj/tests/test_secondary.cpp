#include <algorithm>
#include <functional>
#include <random>

#include "bbmirror/errors.hpp"
#include "bbmirror/secondary.hpp"
#include "doctest.h"
#include "generators.hpp"
#include "support.hpp"

using namespace bbm;
using testing::all_triangulations;
using testing::mother;

namespace {

std::vector<IntVec> vecs(std::initializer_list<std::initializer_list<long>> l) {
  std::vector<IntVec> out;
  for (auto& p : l) out.push_back(make_vec(p));
  return out;
}

RatVec rat(std::initializer_list<long> l) { return to_rat(make_vec(l)); }

using Simplices = std::vector<std::vector<std::size_t>>;

const PointConfig line3 = PointConfig::make(vecs({{0, 1}, {1, 1}, {2, 1}}), 2);

}  // namespace

TEST_CASE("point configurations") {
  CHECK(line3.height == rat({0, 1}));
  CHECK_THROWS_AS(PointConfig::make(vecs({{1, 0}, {0, 1}, {1, 1}}), 2), InputError);
  CHECK_THROWS_AS(PointConfig::make(vecs({{1, 1}, {2, 2}}), 2), InputError);
  CHECK_THROWS_AS(PointConfig::make(vecs({{0, 1}, {0, 1}, {1, 1}}), 2), InputError);
}

TEST_CASE("subdivisions from weights on three collinear points") {
  Subdivision flat = triangulation_from_weights(line3, rat({0, 0, 0}));
  CHECK(flat.cells == Simplices{{0, 2}});
  CHECK(flat.simplicial);
  CHECK(!flat.generic);
  Subdivision fine = triangulation_from_weights(line3, rat({1, 0, 1}));
  CHECK(fine.cells == Simplices{{0, 1}, {1, 2}});
  CHECK(fine.generic);
  Subdivision coarse = triangulation_from_weights(line3, rat({0, 1, 0}));
  CHECK(coarse.cells == Simplices{{0, 2}});
  CHECK(coarse.generic);
  // rational weights
  CHECK(triangulation_from_weights(line3, {Rat(1, 2), Rat(0), Rat(1, 3)}).cells == Simplices{{0, 1}, {1, 2}});
}

TEST_CASE("regularity certificates round trip") {
  Triangulation fine{{{0, 1}, {1, 2}}};
  auto w = regularity_certificate(line3, fine);
  REQUIRE(w);
  CHECK((*w)[0] + (*w)[2] > 2 * (*w)[1]);
  Triangulation coarse{{{0, 2}}};
  auto wc = regularity_certificate(line3, coarse);
  REQUIRE(wc);
  CHECK((*wc)[0] + (*wc)[2] < 2 * (*wc)[1]);
  CHECK_THROWS_AS(regularity_certificate(line3, Triangulation{{{0, 1}}}), InputError);
}

TEST_CASE("chambers in character space") {
  auto fine = chamber_of_triangulation(line3, Triangulation{{{0, 1}, {1, 2}}});
  auto coarse = chamber_of_triangulation(line3, Triangulation{{{0, 2}}});
  REQUIRE(fine.degrees.presentation.free_rank == 1);
  // degrees (1,-2,1) up to sign of the generator
  Int sgn = fine.degrees.coordinate_degrees[0].free_part[0];
  CHECK(abs(sgn) == 1);
  CHECK(fine.degrees.coordinate_degrees[1].free_part[0] == -2 * sgn);
  CHECK(fine.contains_character({Rat(sgn)}));
  CHECK(!fine.contains_character({Rat(-sgn)}));
  CHECK(coarse.contains_character({Rat(-sgn)}));
  CHECK(!coarse.contains_character({Rat(sgn)}));
  CHECK(fine.contains_weight(fine.certificate));
  CHECK(!fine.contains_weight(coarse.certificate));
}

TEST_CASE("random weights give triangulations that round trip") {
  std::mt19937_64 rng(51);
  auto nu = PointConfig::make(vecs({{0, 0, 1}, {3, 0, 1}, {0, 3, 1}, {1, 1, 1}, {2, 0, 1}, {1, 2, 1}, {3, 3, 1}}), 3);
  int generic = 0;
  for (int t = 0; t < 60; ++t) {
    RatVec w = to_rat(testing::random_vec(rng, nu.points.size(), -10, 10));
    Subdivision s = triangulation_from_weights(nu, w);
    if (!s.generic) continue;
    ++generic;
    Triangulation tr = s.triangulation();
    CHECK(check_triangulation(nu, tr).empty());
    auto cert = regularity_certificate(nu, tr);
    REQUIRE(cert);
    CHECK(triangulation_from_weights(nu, *cert).triangulation() == tr);
    auto ch = chamber_of_triangulation(nu, tr);
    CHECK(ch.contains_weight(w));
  }
  CHECK(generic > 30);
}

TEST_CASE("chamber soundness by sampling") {
  std::mt19937_64 rng(52);
  auto nu = PointConfig::make(vecs({{0, 0, 1}, {2, 0, 1}, {0, 2, 1}, {1, 1, 1}, {1, 0, 1}, {2, 2, 1}}), 3);
  Subdivision s = triangulation_from_weights(nu, rat({0, 0, 0, 1, -1, 3}));
  REQUIRE(s.generic);
  auto ch = chamber_of_triangulation(nu, s.triangulation());
  int inside = 0, outside = 0;
  for (int t = 0; t < 2000 && (inside < 100 || outside < 100); ++t) {
    RatVec w = to_rat(testing::random_vec(rng, nu.points.size(), -6, 6));
    if (t % 2 == 0)
      for (std::size_t i = 0; i < w.size(); ++i) w[i] += 4 * ch.certificate[i];
    Subdivision got = triangulation_from_weights(nu, w);
    if (ch.contains_weight(w)) {
      ++inside;
      CHECK(got.generic);
      CHECK(got.triangulation() == s.triangulation());
    } else {
      ++outside;
      CHECK(!(got.generic && got.triangulation() == s.triangulation()));
    }
  }
  CHECK(inside >= 100);
  CHECK(outside >= 100);
}

TEST_CASE("a non-regular triangulation exists for the twisted six point configuration") {
  PointConfig nu = mother();
  auto all = all_triangulations(nu);
  CHECK(!all.empty());
  int non_regular = 0;
  for (const auto& t : all) {
    auto cert = regularity_certificate(nu, t);
    if (!cert) {
      ++non_regular;
      CHECK(t.simplices.size() == 7);
      CHECK(t.unused_labels(6).empty());
    }
  }
  CHECK(non_regular >= 1);
}

TEST_CASE("triangulation of a simplicial fan") {
  auto nu = PointConfig::make(vecs({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}), 3);
  Fan f{nu.points, {{0, 1, 2}}, 3};
  CHECK(triangulation_of_bundle_fan(f, nu) == Triangulation{{{0, 1, 2}}});
  Fan bad{vecs({{1, 0, 0}, {0, 1, 0}, {0, 0, 2}}), {{0, 1, 2}}, 3};
  CHECK_THROWS_AS(triangulation_of_bundle_fan(bad, nu), InputError);
  auto big = PointConfig::make(vecs({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, 1, 1}}), 3);
  CHECK_THROWS_AS(triangulation_of_bundle_fan(Fan{nu.points, {{0, 1, 2}}, 3}, big), InputError);
}
