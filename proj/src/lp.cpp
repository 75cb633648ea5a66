#include "bbmirror/lp.hpp"

#include "bbmirror/errors.hpp"

namespace bbm::lp {

Solution maximize(const std::vector<RatVec>& A, const RatVec& b, const RatVec& c) {
  const std::size_t m = A.size();
  const std::size_t n = c.size();
  if (b.size() != m) throw InputError("lp::maximize: rhs length mismatch");
  for (const auto& r : b)
    if (r < 0) throw InputError("lp::maximize: origin must be feasible (b >= 0)");

  // Tableau over variables x_0..x_{n-1}, slacks s_0..s_{m-1}.
  const std::size_t cols = n + m;
  std::vector<RatVec> t(m, RatVec(cols + 1, Rat(0)));
  for (std::size_t i = 0; i < m; ++i) {
    if (A[i].size() != n) throw InputError("lp::maximize: row length mismatch");
    for (std::size_t j = 0; j < n; ++j) t[i][j] = A[i][j];
    t[i][n + i] = 1;
    t[i][cols] = b[i];
  }
  // reduced costs: z - c.x, stored as -c
  RatVec obj(cols + 1, Rat(0));
  for (std::size_t j = 0; j < n; ++j) obj[j] = -c[j];
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) basis[i] = n + i;

  while (true) {
    std::size_t enter = cols;
    for (std::size_t j = 0; j < cols; ++j)
      if (obj[j] < 0) {
        enter = j;
        break;
      }
    if (enter == cols) break;

    std::size_t leave = m;
    Rat best;
    for (std::size_t i = 0; i < m; ++i) {
      if (t[i][enter] <= 0) continue;
      Rat ratio = t[i][cols] / t[i][enter];
      if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == m) return {true, Rat(0), {}};

    Rat piv = t[leave][enter];
    for (auto& x : t[leave]) x /= piv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      Rat f = t[i][enter];
      for (std::size_t j = 0; j <= cols; ++j) t[i][j] -= f * t[leave][j];
    }
    if (obj[enter] != 0) {
      Rat f = obj[enter];
      for (std::size_t j = 0; j <= cols; ++j) obj[j] -= f * t[leave][j];
    }
    basis[leave] = enter;
  }

  Solution s;
  s.x.assign(n, Rat(0));
  for (std::size_t i = 0; i < m; ++i)
    if (basis[i] < n) s.x[basis[i]] = t[i][cols];
  s.value = obj[cols];
  return s;
}

std::optional<RatVec> strict_feasible(const std::vector<IntVec>& strict, const std::vector<IntVec>& weak,
                                      const std::vector<IntVec>& equal, std::size_t dim) {
  // variables: y+ (dim), y- (dim), t
  const std::size_t n = 2 * dim + 1;
  std::vector<RatVec> A;
  RatVec b;
  auto push = [&](const IntVec& row, const Rat& sign, bool with_t) {
    if (row.size() != dim) throw InputError("strict_feasible: row length mismatch");
    RatVec r(n, Rat(0));
    for (std::size_t j = 0; j < dim; ++j) {
      r[j] = sign * row[j];
      r[dim + j] = -sign * row[j];
    }
    if (with_t) r[2 * dim] = 1;
    A.push_back(std::move(r));
    b.push_back(0);
  };
  for (const auto& s : strict) push(s, -1, true);  // -s.y + t <= 0
  for (const auto& w : weak) push(w, -1, false);   // -w.y <= 0
  for (const auto& e : equal) {
    push(e, 1, false);
    push(e, -1, false);
  }
  RatVec cap(n, Rat(0));
  cap[2 * dim] = 1;
  A.push_back(cap);
  b.push_back(1);

  RatVec c(n, Rat(0));
  c[2 * dim] = 1;
  Solution sol = maximize(A, b, c);
  if (sol.unbounded) throw VerificationError("strict_feasible: bounded problem reported unbounded");
  if (sol.value <= 0) return std::nullopt;
  RatVec y(dim);
  for (std::size_t j = 0; j < dim; ++j) y[j] = sol.x[j] - sol.x[dim + j];
  return y;
}

}  // namespace bbm::lp
