#include "bbmirror/cox.hpp"

#include <sstream>

#include "bbmirror/errors.hpp"

namespace bbm {

bool Character::trivial() const { return is_zero(free_part) && is_zero(torsion_part); }

std::string to_string(const Character& c) {
  std::string s = to_string(c.free_part);
  if (!c.torsion_part.empty()) s += " + torsion " + to_string(c.torsion_part);
  return s;
}

namespace {

Int mod(const Int& a, const Int& d) {
  Int r = a % d;
  if (r < 0) r += d;
  return r;
}

TorusSubgroupData from_presentation(AbelianPresentation p, std::size_t n) {
  TorusSubgroupData s;
  s.presentation = std::move(p);
  for (std::size_t j = 0; j < n; ++j) {
    IntVec e(n, Int(0));
    e[j] = 1;
    IntVec img = s.presentation.project(e);
    Character c;
    c.free_part.assign(img.begin(), img.begin() + static_cast<long>(s.presentation.free_rank));
    c.torsion_part.assign(img.begin() + static_cast<long>(s.presentation.free_rank), img.end());
    s.coordinate_degrees.push_back(std::move(c));
  }
  return s;
}

}  // namespace

Character TorusSubgroupData::zero() const {
  return {IntVec(presentation.free_rank, Int(0)), IntVec(presentation.torsion_orders.size(), Int(0))};
}

Character TorusSubgroupData::add(const Character& a, const Character& b) const {
  Character c{bbm::add(a.free_part, b.free_part), bbm::add(a.torsion_part, b.torsion_part)};
  for (std::size_t j = 0; j < c.torsion_part.size(); ++j)
    c.torsion_part[j] = mod(c.torsion_part[j], presentation.torsion_orders[j]);
  return c;
}

Character TorusSubgroupData::character(const IntVec& exponents) const {
  if (exponents.size() != coordinates()) throw InputError("character: exponent length mismatch");
  Character c = zero();
  for (std::size_t j = 0; j < exponents.size(); ++j) {
    const auto& d = coordinate_degrees[j];
    c.free_part = bbm::add(c.free_part, scale(d.free_part, exponents[j]));
    c.torsion_part = bbm::add(c.torsion_part, scale(d.torsion_part, exponents[j]));
  }
  return add(c, zero());
}

TorusSubgroupData s_nu(const std::vector<IntVec>& nu, std::size_t d) {
  for (const auto& v : nu)
    if (v.size() != d) throw InputError("s_nu: point of wrong rank");
  return from_presentation(cokernel(IntMatrix::from_rows(nu, d)), nu.size());
}

namespace {

// HNF basis of {x in Z^n : Q x = 0, T x = 0 mod d}.
IntMatrix degree_kernel(const IntMatrix& q, const IntMatrix& t, const IntVec& orders, std::size_t n) {
  const std::size_t k = q.rows(), m = t.rows();
  IntMatrix a(k + m, n + m);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = q(i, j);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) a(k + i, j) = t(i, j);
    a(k + i, n + i) = orders[i];
  }
  IntMatrix ker = integer_kernel(a);
  std::vector<IntVec> gens;
  for (std::size_t c = 0; c < ker.cols(); ++c) {
    IntVec x = ker.col(c);
    x.resize(n);
    gens.push_back(std::move(x));
  }
  if (gens.empty()) return IntMatrix(0, n);
  return hermite_normal_form(IntMatrix::from_rows(gens, n));
}

}  // namespace

TorusSubgroupData subgroup_from_degrees(const IntMatrix& free_degrees, const IntMatrix& torsion_degrees,
                                        const IntVec& torsion_orders) {
  const std::size_t n = free_degrees.cols();
  if (torsion_degrees.rows() != torsion_orders.size() ||
      (torsion_degrees.rows() > 0 && torsion_degrees.cols() != n))
    throw InputError("subgroup_from_degrees: shape mismatch");
  IntMatrix l = degree_kernel(free_degrees, torsion_degrees, torsion_orders, n);
  return from_presentation(cokernel(l.transpose()), n);
}

IntMatrix relation_lattice(const TorusSubgroupData& s) {
  const auto& p = s.presentation;
  const std::size_t n = s.coordinates();
  IntMatrix free(p.free_rank, n), tors(p.torsion_orders.size(), n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < p.free_rank; ++i) free(i, j) = s.coordinate_degrees[j].free_part[i];
    for (std::size_t i = 0; i < p.torsion_orders.size(); ++i) tors(i, j) = s.coordinate_degrees[j].torsion_part[i];
  }
  return degree_kernel(free, tors, p.torsion_orders, n);
}

bool same_subgroup(const TorusSubgroupData& a, const TorusSubgroupData& b) {
  return a.coordinates() == b.coordinates() && relation_lattice(a) == relation_lattice(b);
}

std::vector<IntVec> nu_of_subgroup(const TorusSubgroupData& s) {
  IntMatrix l = relation_lattice(s);
  std::vector<IntVec> out;
  for (std::size_t j = 0; j < s.coordinates(); ++j) out.push_back(l.col(j));
  return out;
}

std::optional<IntMatrix> unimodular_equivalence(const std::vector<IntVec>& nu1, const std::vector<IntVec>& nu2) {
  if (nu1.size() != nu2.size() || nu1.empty()) return std::nullopt;
  const std::size_t d = nu1[0].size();
  if (nu2[0].size() != d) return std::nullopt;
  IntMatrix a = IntMatrix::from_rows(nu1, d);
  if (rank(a) != d) throw InputError("unimodular_equivalence: points do not span");
  IntMatrix b = IntMatrix::from_rows(nu2, d);
  // a W^T = b, one column of W^T at a time
  IntMatrix wt(d, d);
  for (std::size_t c = 0; c < d; ++c) {
    auto x = solve_rational(a, to_rat(b.col(c)));
    if (!x) return std::nullopt;
    for (std::size_t i = 0; i < d; ++i) {
      if ((*x)[i].get_den() != 1) return std::nullopt;
      wt(i, c) = (*x)[i].get_num();
    }
  }
  if (!(a * wt == b)) return std::nullopt;
  if (abs(determinant(wt)) != 1) return std::nullopt;
  return wt.transpose();
}

bool quasi_cy(const TorusSubgroupData& s) {
  return is_zero(s.character(IntVec(s.coordinates(), Int(1))).free_part);
}

std::optional<IntVec> cy_condition(const std::vector<IntVec>& nu, std::size_t d) {
  if (nu.empty()) return IntVec(d, Int(0));
  return solve_integer(IntMatrix::from_rows(nu, d), IntVec(nu.size(), Int(1)));
}

Character char_of_divisor(const TorusSubgroupData& s, const DivisorData& d) {
  if (d.coefficients.size() != s.coordinates()) throw InputError("char_of_divisor: coefficient length mismatch");
  return s.character(d.coefficients);
}

std::string degree_matrix_text(const TorusSubgroupData& s) {
  std::ostringstream os;
  const auto& p = s.presentation;
  for (std::size_t i = 0; i < p.free_rank; ++i) {
    for (std::size_t j = 0; j < s.coordinates(); ++j) os << (j ? " " : "") << s.coordinate_degrees[j].free_part[i];
    os << "\n";
  }
  for (std::size_t i = 0; i < p.torsion_orders.size(); ++i) {
    for (std::size_t j = 0; j < s.coordinates(); ++j)
      os << (j ? " " : "") << s.coordinate_degrees[j].torsion_part[i];
    os << " mod " << p.torsion_orders[i] << "\n";
  }
  return os.str();
}

}  // namespace bbm
