#include <random>

#include "bbmirror/cox.hpp"
#include "bbmirror/errors.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace bbm;

namespace {

std::vector<IntVec> vecs(std::initializer_list<std::initializer_list<long>> l) {
  std::vector<IntVec> out;
  for (auto& p : l) out.push_back(make_vec(p));
  return out;
}

Character ch(std::initializer_list<long> f) { return {make_vec(f), {}}; }

}  // namespace

TEST_CASE("s_nu of the weighted projective plane") {
  auto s = s_nu(vecs({{1, 1}, {-1, 1}, {0, -1}}), 2);
  CHECK(s.presentation.free_rank == 1);
  CHECK(s.presentation.torsion_orders.empty());
  CHECK(s.coordinate_degrees == std::vector<Character>{ch({1}), ch({1}), ch({2})});
  CHECK(char_of_divisor(s, {make_vec({0, 0, 1})}) == ch({2}));
  CHECK(char_of_divisor(s, {make_vec({0, 0, 0})}).trivial());
  CHECK(!quasi_cy(s));
  CHECK(!cy_condition(vecs({{1, 1}, {-1, 1}, {0, -1}}), 2));
}

TEST_CASE("s_nu of P1 x P1") {
  auto s = s_nu(vecs({{1, 0}, {-1, 0}, {0, 1}, {0, -1}}), 2);
  CHECK(s.presentation.free_rank == 2);
  CHECK(s.coordinate_degrees == std::vector<Character>{ch({1, 0}), ch({1, 0}), ch({0, 1}), ch({0, 1})});
  CHECK(char_of_divisor(s, {make_vec({1, 1, 0, 0})}) == ch({2, 0}));
  CHECK_THROWS_AS(char_of_divisor(s, {make_vec({1, 1})}), InputError);
  CHECK(degree_matrix_text(s) == "1 1 0 0\n0 0 1 1\n");
}

TEST_CASE("s_nu of a standard basis is trivial") {
  auto s = s_nu(vecs({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}), 3);
  CHECK(s.presentation.free_rank == 0);
  CHECK(s.presentation.torsion_orders.empty());
  CHECK(nu_of_subgroup(s) == vecs({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
}

TEST_CASE("s_nu with torsion") {
  // points spanning an index-3 sublattice give Z/3 torsion
  auto s = s_nu(vecs({{3, 0}, {0, 1}, {-3, -1}}), 2);
  CHECK(s.presentation.free_rank == 1);
  CHECK(s.presentation.torsion_orders == make_vec({3}));
  CHECK(quasi_cy(s) == false);
  std::string text = degree_matrix_text(s);
  CHECK(text.find("mod 3") != std::string::npos);
}

TEST_CASE("nu of the diagonal subgroup") {
  auto s = subgroup_from_degrees(IntMatrix{{1, 1, 1}}, IntMatrix(0, 3), {});
  auto nu = nu_of_subgroup(s);
  REQUIRE(nu.size() == 3);
  CHECK(add(add(nu[0], nu[1]), nu[2]) == make_vec({0, 0}));
  CHECK(rank(nu, 2) == 2);
  CHECK(!quasi_cy(s));
  CHECK(quasi_cy(subgroup_from_degrees(IntMatrix{{1, -1}}, IntMatrix(0, 2), {})));
}

TEST_CASE("subgroup round trip S -> nu(S) -> S") {
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<int> kd(0, 3), td(0, 1);
  for (int t = 0; t < 30; ++t) {
    std::size_t k = kd(rng), m = td(rng);
    IntMatrix q = testing::random_matrix(rng, k, 6, -3, 3);
    IntMatrix tor = testing::random_matrix(rng, m, 6, 0, 5);
    IntVec orders;
    for (std::size_t i = 0; i < m; ++i) orders.push_back(Int(2 + i * 2));
    auto s = subgroup_from_degrees(q, tor, orders);
    auto nu = nu_of_subgroup(s);
    auto back = s_nu(nu, nu.empty() ? 0 : nu[0].size());
    CHECK(same_subgroup(s, back));
    CHECK(back.presentation == s.presentation);
  }
}

TEST_CASE("configuration round trip nu -> S -> nu(S) up to a unimodular map") {
  std::mt19937_64 rng(42);
  int done = 0;
  for (int t = 0; t < 100 && done < 25; ++t) {
    std::vector<IntVec> nu;
    for (int i = 0; i < 6; ++i) nu.push_back(testing::random_vec(rng, 3, -3, 3));
    if (rank(nu, 3) < 3) continue;
    ++done;
    auto back = nu_of_subgroup(s_nu(nu, 3));
    REQUIRE(back.size() == 6);
    REQUIRE(back[0].size() == 3);
    auto w = unimodular_equivalence(nu, back);
    REQUIRE(w);
    for (std::size_t i = 0; i < nu.size(); ++i) CHECK(w->apply(nu[i]) == back[i]);
  }
  CHECK(done >= 20);
  CHECK(!unimodular_equivalence(vecs({{1, 0}, {0, 1}}), vecs({{2, 0}, {0, 1}})));
}

TEST_CASE("cy condition and quasi-cy") {
  auto sq = vecs({{1, 1, 1}, {1, -1, 1}, {-1, 1, 1}, {-1, -1, 1}});
  CHECK(cy_condition(sq, 3) == make_vec({0, 0, 1}));
  CHECK(quasi_cy(s_nu(sq, 3)));
  // slice-1 lattice points of the Cayley cone of the small example
  auto cay = vecs({{0, 0, 1, 0}, {1, 1, 1, 0}, {-1, 1, 1, 0}, {0, 1, 1, 0}, {0, 0, 0, 1}, {0, -1, 0, 1}});
  CHECK(cy_condition(cay, 4) == make_vec({0, 0, 1, 1}));
  CHECK(quasi_cy(s_nu(cay, 4)));
}

TEST_CASE("divisor characters are additive") {
  std::mt19937_64 rng(43);
  auto s = s_nu(vecs({{3, 0}, {0, 1}, {-3, -1}, {1, 2}}), 2);
  for (int t = 0; t < 50; ++t) {
    IntVec a = testing::random_vec(rng, 4, -5, 5), b = testing::random_vec(rng, 4, -5, 5);
    CHECK(char_of_divisor(s, {add(a, b)}) == s.add(char_of_divisor(s, {a}), char_of_divisor(s, {b})));
  }
}
