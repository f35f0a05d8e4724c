#include "nilsys/lattice.hpp"
#include "nilsys/error.hpp"

namespace nilsys {

AdditiveLattice AdditiveLattice::span(std::size_t n, const std::vector<Vector> &rows) {
  AdditiveLattice l(n);
  if (rows.empty())
    return l;
  Integer common = 1;
  for (const auto &r : rows) {
    if (r.size() != n)
      throw std::invalid_argument("lattice row length mismatch");
    common = lcm(common, lcm_of_denominators(r));
  }
  IntMatrix m;
  for (const auto &r : rows) {
    std::vector<Integer> row(n);
    for (std::size_t j = 0; j < n; ++j) {
      Rational x = r[j] * common;
      row[j] = x.get_num();
    }
    m.push_back(std::move(row));
  }
  HermiteForm h = hermite_normal_form(std::move(m), n);
  Integer g = common;
  for (const auto &row : h.rows)
    for (const auto &x : row)
      g = gcd(g, x);
  l.scale_ = common / g;
  for (auto &row : h.rows)
    for (auto &x : row)
      x /= g;
  l.hnf_ = std::move(h.rows);
  l.pivots_ = std::move(h.pivots);
  return l;
}

AdditiveLattice AdditiveLattice::standard(std::size_t n) {
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < n; ++i)
    rows.push_back(unit_vector(n, i));
  return span(n, rows);
}

AdditiveLattice AdditiveLattice::diagonal(const Vector &entries) {
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < entries.size(); ++i)
    rows.push_back(entries[i] * unit_vector(entries.size(), i));
  return span(entries.size(), rows);
}

std::vector<Vector> AdditiveLattice::basis() const {
  std::vector<Vector> out;
  for (const auto &row : hnf_) {
    Vector v(ambient_);
    for (std::size_t j = 0; j < ambient_; ++j) {
      v[j] = Rational(row[j], scale_);
      v[j].canonicalize();
    }
    out.push_back(std::move(v));
  }
  return out;
}

bool AdditiveLattice::contains(const Vector &v) const {
  std::vector<Integer> x(ambient_);
  for (std::size_t j = 0; j < ambient_; ++j) {
    Rational y = v[j] * scale_;
    if (y.get_den() != 1)
      return false;
    x[j] = y.get_num();
  }
  std::size_t col = 0;
  for (std::size_t t = 0; t < hnf_.size(); ++t) {
    std::size_t p = pivots_[t];
    for (; col < p; ++col)
      if (sgn(x[col]) != 0)
        return false;
    if (!mpz_divisible_p(x[p].get_mpz_t(), hnf_[t][p].get_mpz_t()))
      return false;
    Integer q = x[p] / hnf_[t][p];
    for (std::size_t j = p; j < ambient_; ++j)
      x[j] -= q * hnf_[t][j];
    col = p + 1;
  }
  for (; col < ambient_; ++col)
    if (sgn(x[col]) != 0)
      return false;
  return true;
}

bool AdditiveLattice::contains(const AdditiveLattice &other) const {
  for (const auto &v : other.basis())
    if (!contains(v))
      return false;
  return true;
}

AdditiveLattice AdditiveLattice::operator+(const AdditiveLattice &other) const {
  auto rows = basis();
  for (auto &v : other.basis())
    rows.push_back(std::move(v));
  return span(ambient_, rows);
}

AdditiveLattice AdditiveLattice::scaled(const Rational &t) const {
  std::vector<Vector> rows;
  for (const auto &v : basis())
    rows.push_back(t * v);
  return span(ambient_, rows);
}

AdditiveLattice AdditiveLattice::transformed(const Matrix &m) const {
  std::vector<Vector> rows;
  for (const auto &v : basis())
    rows.push_back(v * m);
  return span(m.cols(), rows);
}

std::string GLength::str() const {
  if (w == 1)
    return to_string(q);
  return to_string(q) + "^(1/" + std::to_string(w) + ")";
}

int compare(const GLength &a, const GLength &b) {
  Rational lhs = pow(a.q, b.w);
  Rational rhs = pow(b.q, a.w);
  return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
}

GLength guivarch_length(const std::vector<int> &weights, const Vector &v) {
  GLength best;
  for (std::size_t i = 0; i < v.size(); ++i) {
    GLength g{abs(v[i]), weights[i]};
    if (g > best)
      best = g;
  }
  return best;
}

Rational covolume(const AdditiveLattice &l) {
  if (!l.full_rank())
    throw RankDeficient(l.rank(), l.ambient_dim());
  Rational det = 1;
  for (std::size_t t = 0; t < l.rank(); ++t)
    det *= Rational(l.hnf()[t][l.pivots()[t]], l.scale());
  det.canonicalize();
  return det;
}

std::vector<Rational> flag_covolumes(const AdditiveLattice &l,
                                     const std::vector<std::size_t> &blocks) {
  std::vector<Rational> out;
  std::size_t start = 0;
  for (std::size_t q = 0; q < blocks.size(); ++q) {
    Rational a = 1;
    for (std::size_t p = start; p < start + blocks[q]; ++p) {
      if (p >= l.rank() || l.pivots()[p] != p)
        throw NotFlagCompatible(q);
      a *= Rational(l.hnf()[p][p], l.scale());
    }
    a.canonicalize();
    out.push_back(a);
    start += blocks[q];
  }
  if (start != l.ambient_dim())
    throw std::invalid_argument("block sizes do not add up to the dimension");
  return out;
}

std::optional<SubringWitness> is_subring(const AdditiveLattice &l, const LieAlgebra &a) {
  auto b = l.basis();
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = i + 1; j < b.size(); ++j) {
      Vector v = a.bracket(b[i], b[j]);
      if (!l.contains(v))
        return SubringWitness{i, j, std::move(v)};
    }
  return std::nullopt;
}

Matrix standard_symplectic(std::size_t n) {
  Matrix phi(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    phi(2 * i, 2 * i + 1) = 1;
    phi(2 * i + 1, 2 * i) = -1;
  }
  return phi;
}

Rational symplectic_value_group(const AdditiveLattice &l, const Matrix &phi) {
  const std::size_t d = phi.rows();
  if (d % 2 != 0 || phi.cols() != d || l.ambient_dim() != d)
    throw OddDimension();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      if (phi(i, j) != -phi(j, i))
        throw NotUnimodularForm();
  if (determinant(phi) != 1)
    throw NotUnimodularForm();
  auto b = l.basis();
  Rational s = 0;
  for (std::size_t i = 0; i < b.size(); ++i) {
    Vector pi = b[i] * phi;
    for (std::size_t j = i + 1; j < b.size(); ++j)
      s = gcd(s, dot(pi, b[j]));
  }
  return s;
}

bool minkowski_check(const AdditiveLattice &l, const std::vector<int> &weights) {
  if (systole(l, weights).length < GLength{1, 1})
    return true;
  return covolume(l) >= 1;
}

AdditiveLattice dilate(const AdditiveLattice &l, const std::vector<int> &weights,
                       const Rational &r) {
  Matrix u(weights.size(), weights.size());
  for (std::size_t i = 0; i < weights.size(); ++i)
    u(i, i) = pow(r, weights[i]);
  return l.transformed(u);
}

} // namespace nilsys
