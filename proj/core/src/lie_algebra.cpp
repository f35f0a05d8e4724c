#include "nilsys/lie_algebra.hpp"
#include "nilsys/error.hpp"

namespace nilsys {

LieAlgebra LieAlgebra::validate(std::size_t dim, const StructureConstants &constants,
                                std::string name) {
  if (dim == 0)
    throw IndexOutOfRange("dimension must be positive");
  std::vector<Vector> table(dim * dim, zero_vector(dim));
  for (const auto &[ij, v] : constants) {
    auto [i, j] = ij;
    if (i >= dim || j >= dim)
      throw IndexOutOfRange("bracket index out of range: (" + std::to_string(i + 1) + "," +
                            std::to_string(j + 1) + ")");
    if (i >= j)
      throw IndexOutOfRange("bracket must be given with i < j: (" + std::to_string(i + 1) +
                            "," + std::to_string(j + 1) + ")");
    if (v.size() != dim)
      throw IndexOutOfRange("bracket target has wrong length at (" + std::to_string(i + 1) +
                            "," + std::to_string(j + 1) + ")");
    table[i * dim + j] = v;
    table[j * dim + i] = -v;
  }
  LieAlgebra a(dim, std::move(table), std::move(name));

  // J(i,j,k) = [e_i,[e_j,e_k]] + [e_j,[e_k,e_i]] + [e_k,[e_i,e_j]]
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = i + 1; j < dim; ++j)
      for (std::size_t k = j + 1; k < dim; ++k) {
        Vector ei = unit_vector(dim, i), ej = unit_vector(dim, j), ek = unit_vector(dim, k);
        Vector r = a.bracket(ei, a.bracket(j, k)) + a.bracket(ej, a.bracket(k, i)) +
                   a.bracket(ek, a.bracket(i, j));
        if (!nilsys::is_zero(r))
          throw JacobiViolation(i, j, k, r);
      }

  Subspace term = Subspace::full(dim);
  std::size_t step = 1;
  while (!term.is_zero()) {
    Subspace next = a.bracket(Subspace::full(dim), term);
    if (next == term)
      throw NotNilpotent(term.dim(), step);
    term = std::move(next);
    ++step;
  }
  return a;
}

Vector LieAlgebra::bracket(const Vector &x, const Vector &y) const {
  Vector out = zero_vector(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (sgn(x[i]) == 0)
      continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (sgn(y[j]) == 0 || i == j)
        continue;
      const Vector &b = table_[i * dim_ + j];
      Rational f = x[i] * y[j];
      for (std::size_t k = 0; k < dim_; ++k)
        if (sgn(b[k]) != 0)
          out[k] += f * b[k];
    }
  }
  return out;
}

Subspace LieAlgebra::bracket(const Subspace &a, const Subspace &b) const {
  std::vector<Vector> rows;
  for (const auto &x : a.vectors())
    for (const auto &y : b.vectors()) {
      Vector v = bracket(x, y);
      if (!nilsys::is_zero(v))
        rows.push_back(std::move(v));
    }
  return Subspace::span(dim_, rows);
}

StructureConstants LieAlgebra::constants() const {
  StructureConstants out;
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i + 1; j < dim_; ++j)
      if (!nilsys::is_zero(bracket(i, j)))
        out[{i, j}] = bracket(i, j);
  return out;
}

bool LieAlgebra::is_integral() const {
  for (const auto &v : table_)
    for (const auto &x : v)
      if (!nilsys::is_integral(x))
        return false;
  return true;
}

bool LieAlgebra::is_abelian() const {
  for (const auto &v : table_)
    if (!nilsys::is_zero(v))
      return false;
  return true;
}

bool LieAlgebra::is_ideal(const Subspace &s) const {
  return s.contains(bracket(Subspace::full(dim_), s));
}

std::vector<Subspace> lower_central_series(const LieAlgebra &a) {
  std::vector<Subspace> out{Subspace::full(a.dim())};
  while (!out.back().is_zero())
    out.push_back(a.bracket(Subspace::full(a.dim()), out.back()));
  return out;
}

std::vector<Subspace> upper_central_series(const LieAlgebra &a) {
  std::vector<Subspace> out;
  Subspace current(a.dim());
  const Subspace g = Subspace::full(a.dim());
  while (!current.is_full()) {
    current = centralizer(a, g, current);
    out.push_back(current);
  }
  return out;
}

Subspace centralizer(const LieAlgebra &a, const Subspace &s, const Subspace &m) {
  if (!a.is_ideal(m))
    throw MNotIdeal();
  const std::size_t d = a.dim();
  if (s.is_zero())
    return Subspace::full(d);
  auto gens = s.vectors();
  // Row a of the map is the concatenation of [e_a, s_t] mod m over t.
  Matrix map(d, d * gens.size());
  for (std::size_t i = 0; i < d; ++i) {
    Vector ei = unit_vector(d, i);
    for (std::size_t t = 0; t < gens.size(); ++t) {
      Vector r = m.reduce(a.bracket(ei, gens[t]));
      for (std::size_t k = 0; k < d; ++k)
        map(i, t * d + k) = r[k];
    }
  }
  return Subspace::span(d, null_space(map.transpose()).row_list());
}

std::size_t nilpotency_class(const LieAlgebra &a) { return lower_central_series(a).size() - 1; }

std::size_t homogeneous_dimension(const LieAlgebra &a) {
  std::size_t total = 0;
  for (const auto &s : lower_central_series(a))
    total += s.dim();
  return total;
}

Rational k_c(const LieAlgebra &a) {
  auto lcs = lower_central_series(a);
  const long c = static_cast<long>(lcs.size()) - 1;
  const long upper = (c + 1) / 2 - 1; // ⌈c/2⌉ - 1
  Rational total = 0;
  for (long i = 1; i <= upper; ++i) {
    auto layer = lcs[i - 1].dim() - lcs[i].dim();
    total += (Rational(c) / 2 - i) * static_cast<long>(layer);
  }
  return total;
}

} // namespace nilsys
