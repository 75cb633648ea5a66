#pragma once

// Desk corpus of nef partitions used by the unit and acceptance tests.

#include <string>
#include <vector>

#include "bbmirror/nefpart.hpp"

namespace bbm::testing {

struct CorpusEntry {
  std::string name;
  std::vector<std::vector<IntVec>> parts;  // vertex lists
  std::vector<IntVec> base;
  std::vector<IntVec> alt;  // second base point system (may equal base)

  std::vector<LatticePolytope> polytopes() const {
    std::vector<LatticePolytope> out;
    for (const auto& p : parts) out.push_back(LatticePolytope::hull(p));
    return out;
  }
};

inline IntVec v(std::initializer_list<long> l) { return make_vec(l); }

inline std::vector<CorpusEntry> corpus() {
  return {
      {"small",
       {{v({0, 0}), v({1, 1}), v({-1, 1})}, {v({0, 0}), v({0, -1})}},
       {v({0, 0}), v({0, 0})},
       {v({0, 1}), v({0, -1})}},
      {"square_r1", {{v({1, 1}), v({1, -1}), v({-1, 1}), v({-1, -1})}}, {v({0, 0})}, {v({0, 0})}},
      {"square_split",
       {{v({-1, 0}), v({1, 0})}, {v({0, -1}), v({0, 1})}},
       {v({0, 0}), v({0, 0})},
       {v({0, 0}), v({0, 0})}},
      {"p2_split",
       {{v({0, 0}), v({1, 0}), v({0, 1})}, {v({-1, -1}), v({1, -1}), v({-1, 1})}},
       {v({0, 0}), v({0, 0})},
       {v({1, 0}), v({-1, 0})}},
      {"cube_r3",
       {{v({-1, 0, 0}), v({1, 0, 0})}, {v({0, -1, 0}), v({0, 1, 0})}, {v({0, 0, -1}), v({0, 0, 1})}},
       {v({0, 0, 0}), v({0, 0, 0}), v({0, 0, 0})},
       {v({0, 0, 0}), v({0, 0, 0}), v({0, 0, 0})}},
      {"prism_r2",
       {{v({0, 0, 0}), v({1, 1, 0}), v({-1, 1, 0})}, {v({0, 0, -1}), v({0, -1, -1}), v({0, 0, 1}), v({0, -1, 1})}},
       {v({0, 0, 0}), v({0, 0, 0})},
       {v({0, 1, 0}), v({0, -1, 0})}},
  };
}

}  // namespace bbm::testing
