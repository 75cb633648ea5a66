#include "bbmirror/exactalg.hpp"

#include <algorithm>
#include <sstream>

#include "bbmirror/errors.hpp"

namespace bbm {

IntVec make_vec(std::initializer_list<long> xs) {
  IntVec v;
  v.reserve(xs.size());
  for (long x : xs) v.emplace_back(x);
  return v;
}

Int dot(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) throw InputError("dot: length mismatch");
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rat dot(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw InputError("dot: length mismatch");
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

IntVec add(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) throw InputError("add: length mismatch");
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

IntVec sub(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) throw InputError("sub: length mismatch");
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

IntVec scale(const IntVec& a, const Int& s) {
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * s;
  return r;
}

bool is_zero(const IntVec& a) {
  return std::all_of(a.begin(), a.end(), [](const Int& x) { return x == 0; });
}

IntVec primitive(IntVec a) {
  Int g = 0;
  for (const auto& x : a) g = gcd(g, x);
  if (g > 1)
    for (auto& x : a) x /= g;
  return a;
}

IntVec primitive_direction(const RatVec& a) {
  Int l = 1;
  for (const auto& x : a) l = lcm(l, x.get_den());
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    Rat t = a[i] * l;
    r[i] = t.get_num();
  }
  return primitive(std::move(r));
}

RatVec to_rat(const IntVec& a) {
  RatVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  return r;
}

std::optional<IntVec> to_int(const RatVec& a) {
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].get_den() != 1) return std::nullopt;
    r[i] = a[i].get_num();
  }
  return r;
}

std::string to_string(const IntVec& a) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < a.size(); ++i) os << (i ? "," : "") << a[i].get_str();
  os << ')';
  return os.str();
}

std::string to_string(const RatVec& a) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < a.size(); ++i) os << (i ? "," : "") << a[i].get_str();
  os << ')';
  return os.str();
}

// ---------------------------------------------------------------------------

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Int(0)) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw InputError("IntMatrix: ragged initializer");
    for (long x : r) data_.emplace_back(x);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVec>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw InputError("IntMatrix::from_rows: row length mismatch");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::from_cols(const std::vector<IntVec>& cols, std::size_t rows) {
  IntMatrix m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) throw InputError("IntMatrix::from_cols: column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

IntVec IntMatrix::row(std::size_t i) const {
  return IntVec(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

IntVec IntMatrix::col(std::size_t j) const {
  IntVec c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

std::vector<IntVec> IntMatrix::row_list() const {
  std::vector<IntVec> r;
  r.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) r.push_back(row(i));
  return r;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntVec IntMatrix::apply(const IntVec& x) const {
  if (x.size() != cols_) throw InputError("IntMatrix::apply: dimension mismatch");
  IntVec y(rows_, Int(0));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) y[i] += (*this)(i, j) * x[j];
  return y;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::add_row(std::size_t dst, std::size_t src, const Int& k) {
  if (k == 0) return;
  for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += k * (*this)(src, j);
}

void IntMatrix::add_col(std::size_t dst, std::size_t src, const Int& k) {
  if (k == 0) return;
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += k * (*this)(i, src);
}

void IntMatrix::negate_row(std::size_t i) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
}

void IntMatrix::negate_col(std::size_t j) {
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = -(*this)(i, j);
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw InputError("IntMatrix product: dimension mismatch");
  IntMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Int& x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += x * b(k, j);
    }
  return c;
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << '[';
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m(i, j).get_str();
    os << "]\n";
  }
  return os;
}

Int determinant(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw InputError("determinant: matrix not square");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  IntMatrix m = a;
  Int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Int t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        m(i, j) = t;
      }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

std::vector<RatVec> rref(std::vector<RatVec> rows, std::size_t cols, std::vector<std::size_t>* pivots) {
  std::size_t r = 0;
  std::vector<std::size_t> piv;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    Rat inv = 1 / rows[r][c];
    for (auto& x : rows[r]) x *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      Rat f = rows[i][c];
      for (std::size_t j = c; j < cols; ++j) rows[i][j] -= f * rows[r][j];
    }
    piv.push_back(c);
    ++r;
  }
  rows.resize(r);
  if (pivots) *pivots = std::move(piv);
  return rows;
}

std::size_t rank(const std::vector<IntVec>& rows, std::size_t cols) {
  std::vector<RatVec> r;
  r.reserve(rows.size());
  for (const auto& v : rows) r.push_back(to_rat(v));
  return rref(std::move(r), cols, nullptr).size();
}

std::size_t rank(const IntMatrix& a) { return rank(a.row_list(), a.cols()); }

// ---------------------------------------------------------------------------

namespace {

// Floor division quotient used for reductions; keeps remainders small in
// absolute value when combined with smallest-pivot selection.
Int round_quotient(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& a) {
  const std::size_t m = a.rows(), n = a.cols();
  IntMatrix d = a;
  IntMatrix u = IntMatrix::identity(m);
  IntMatrix v = IntMatrix::identity(n);
  const std::size_t steps = std::min(m, n);
  for (std::size_t t = 0; t < steps; ++t) {
    while (true) {
      // smallest nonzero |entry| in the trailing block
      std::size_t pi = m, pj = n;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (d(i, j) != 0 && (pi == m || abs(d(i, j)) < abs(d(pi, pj)))) {
            pi = i;
            pj = j;
          }
      if (pi == m) return {u, d, v};
      d.swap_rows(t, pi);
      u.swap_rows(t, pi);
      d.swap_cols(t, pj);
      v.swap_cols(t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (d(i, t) == 0) continue;
        Int q = round_quotient(d(i, t), d(t, t));
        d.add_row(i, t, -q);
        u.add_row(i, t, -q);
        if (d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (d(t, j) == 0) continue;
        Int q = round_quotient(d(t, j), d(t, t));
        d.add_col(j, t, -q);
        v.add_col(j, t, -q);
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      std::size_t bad = m;
      for (std::size_t i = t + 1; i < m && bad == m; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (d(i, j) % d(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad == m) break;
      d.add_row(t, bad, 1);
      u.add_row(t, bad, 1);
    }
    if (d(t, t) < 0) {
      d.negate_row(t);
      u.negate_row(t);
    }
  }
  return {u, d, v};
}

IntMatrix hermite_normal_form(const IntMatrix& a) {
  IntMatrix h = a;
  const std::size_t m = h.rows(), n = h.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    while (true) {
      std::size_t p = m;
      for (std::size_t i = r; i < m; ++i)
        if (h(i, c) != 0 && (p == m || abs(h(i, c)) < abs(h(p, c)))) p = i;
      if (p == m) break;
      h.swap_rows(r, p);
      bool done = true;
      for (std::size_t i = r + 1; i < m; ++i) {
        if (h(i, c) == 0) continue;
        h.add_row(i, r, -round_quotient(h(i, c), h(r, c)));
        if (h(i, c) != 0) done = false;
      }
      if (done) break;
    }
    if (h(r, c) == 0) continue;
    if (h(r, c) < 0) h.negate_row(r);
    for (std::size_t i = 0; i < r; ++i) h.add_row(i, r, -round_quotient(h(i, c), h(r, c)));
    ++r;
  }
  IntMatrix out(r, n);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = h(i, j);
  return out;
}

IntVec AbelianPresentation::project(const IntVec& x) const {
  IntVec y = projection.apply(x);
  for (std::size_t j = 0; j < torsion_orders.size(); ++j) {
    Int& t = y[free_rank + j];
    mpz_fdiv_r(t.get_mpz_t(), t.get_mpz_t(), torsion_orders[j].get_mpz_t());
  }
  return y;
}

AbelianPresentation cokernel(const IntMatrix& a) {
  const std::size_t m = a.rows();
  SmithForm s = smith_normal_form(a);
  std::size_t rk = 0;
  while (rk < std::min(m, a.cols()) && s.D(rk, rk) != 0) ++rk;

  AbelianPresentation p;
  p.free_rank = m - rk;
  std::vector<IntVec> free_rows;
  for (std::size_t i = rk; i < m; ++i) free_rows.push_back(s.U.row(i));
  std::vector<IntVec> rows;
  if (!free_rows.empty()) rows = hermite_normal_form(IntMatrix::from_rows(free_rows, m)).row_list();
  for (std::size_t i = 0; i < rk; ++i) {
    const Int& d = s.D(i, i);
    if (d == 1) continue;
    IntVec r = s.U.row(i);
    for (auto& x : r) mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), d.get_mpz_t());
    p.torsion_orders.push_back(d);
    rows.push_back(std::move(r));
  }
  p.projection = IntMatrix::from_rows(rows, m);
  return p;
}

std::optional<IntVec> solve_integer(const IntMatrix& a, const IntVec& b) {
  if (b.size() != a.rows()) throw InputError("solve_integer: right-hand side length does not match row count");
  SmithForm s = smith_normal_form(a);
  IntVec ub = s.U.apply(b);
  IntVec y(a.cols(), Int(0));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    const Int d = i < a.cols() ? s.D(i, i) : Int(0);
    if (d == 0) {
      if (ub[i] != 0) return std::nullopt;
      continue;
    }
    if (ub[i] % d != 0) return std::nullopt;
    y[i] = ub[i] / d;
  }
  return s.V.apply(y);
}

IntMatrix integer_kernel(const IntMatrix& a) {
  SmithForm s = smith_normal_form(a);
  std::size_t rk = 0;
  while (rk < std::min(a.rows(), a.cols()) && s.D(rk, rk) != 0) ++rk;
  std::vector<IntVec> cols;
  for (std::size_t j = rk; j < a.cols(); ++j) cols.push_back(s.V.col(j));
  if (cols.empty()) return IntMatrix(a.cols(), 0);
  // canonical basis: HNF of the kernel lattice
  IntMatrix h = hermite_normal_form(IntMatrix::from_rows(cols, a.cols()));
  return h.transpose();
}

std::vector<IntVec> rational_kernel(const IntMatrix& a) {
  const std::size_t n = a.cols();
  std::vector<RatVec> rows;
  for (std::size_t i = 0; i < a.rows(); ++i) rows.push_back(to_rat(a.row(i)));
  std::vector<std::size_t> piv;
  auto r = rref(std::move(rows), n, &piv);
  std::vector<bool> is_piv(n, false);
  for (auto p : piv) is_piv[p] = true;
  std::vector<IntVec> basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_piv[f]) continue;
    RatVec x(n, Rat(0));
    x[f] = 1;
    for (std::size_t i = 0; i < piv.size(); ++i) x[piv[i]] = -r[i][f];
    basis.push_back(primitive_direction(x));
  }
  return basis;
}

std::optional<RatVec> solve_rational(const IntMatrix& a, const RatVec& b) {
  if (b.size() != a.rows()) throw InputError("solve_rational: right-hand side length does not match row count");
  const std::size_t n = a.cols();
  std::vector<RatVec> rows;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    RatVec r = to_rat(a.row(i));
    r.push_back(b[i]);
    rows.push_back(std::move(r));
  }
  std::vector<std::size_t> piv;
  auto r = rref(std::move(rows), n + 1, &piv);
  if (!piv.empty() && piv.back() == n) return std::nullopt;
  RatVec x(n, Rat(0));
  for (std::size_t i = 0; i < piv.size(); ++i) x[piv[i]] = r[i][n];
  return x;
}

}  // namespace bbm
