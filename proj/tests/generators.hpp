#pragma once

// Seeded generators and exhaustive searches shared by the unit tests and the
// acceptance binary.

#include <algorithm>
#include <functional>
#include <random>
#include <set>

#include "bbmirror/secondary.hpp"
#include "support.hpp"

namespace bbm::testing {

inline std::vector<IntVec> points(std::initializer_list<std::initializer_list<long>> l) {
  std::vector<IntVec> out;
  for (auto& p : l) out.push_back(make_vec(p));
  return out;
}

inline std::vector<LatticePolytope> random_reflexive(std::mt19937_64& rng, std::size_t want) {
  std::vector<LatticePolytope> out;
  std::set<std::vector<IntVec>> seen;
  std::uniform_int_distribution<int> dimd(1, 3), cnt(0, 5);
  for (int t = 0; t < 20000 && out.size() < want; ++t) {
    std::size_t d = dimd(rng);
    std::vector<IntVec> v;
    std::size_t n = d + 1 + cnt(rng);
    for (std::size_t i = 0; i < n; ++i) v.push_back(random_vec(rng, d, -2, 2));
    LatticePolytope p = LatticePolytope::hull(v);
    if (!p.full_dimensional()) continue;
    auto c = reflexive_center(p);
    if (!c || !is_zero(*c)) continue;
    if (seen.insert(p.vertices()).second) out.push_back(p);
  }
  return out;
}

// Outer triangle and a rotated inner triangle, lifted to height 1.
inline PointConfig mother() {
  return PointConfig::make(testing::points({{4, 0, 1}, {0, 4, 1}, {0, 0, 1}, {2, 1, 1}, {1, 2, 1}, {1, 1, 1}}), 3);
}

// All triangulations of a configuration by clique search over pairwise compatible simplices.
inline std::vector<Triangulation> all_triangulations(const PointConfig& nu) {
  const std::size_t n = nu.points.size(), d = nu.dim;
  std::vector<std::vector<std::size_t>> simp;
  std::vector<std::size_t> cur;
  std::function<void(std::size_t)> choose = [&](std::size_t start) {
    if (cur.size() == d) {
      std::vector<IntVec> v;
      for (auto i : cur) v.push_back(nu.points[i]);
      if (determinant(IntMatrix::from_rows(v, d)) != 0) simp.push_back(cur);
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      cur.push_back(i);
      choose(i + 1);
      cur.pop_back();
    }
  };
  choose(0);
  const std::size_t m = simp.size();
  std::vector<std::vector<bool>> ok(m, std::vector<bool>(m, false));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      Triangulation pair{{simp[i], simp[j]}};
      std::string e = check_triangulation(nu, pair);
      ok[i][j] = ok[j][i] = e.find("overlap") == std::string::npos;
    }
  std::vector<Triangulation> out;
  std::vector<std::size_t> pick;
  std::function<void(std::size_t)> grow = [&](std::size_t start) {
    if (!pick.empty()) {
      Triangulation t;
      for (auto i : pick) t.simplices.push_back(simp[i]);
      std::sort(t.simplices.begin(), t.simplices.end());
      if (check_triangulation(nu, t).empty()) out.push_back(t);
    }
    for (std::size_t i = start; i < m; ++i) {
      bool fits = true;
      for (auto j : pick) fits = fits && ok[i][j];
      if (!fits) continue;
      pick.push_back(i);
      grow(i + 1);
      pick.pop_back();
    }
  };
  grow(0);
  return out;
}

}  // namespace bbm::testing
