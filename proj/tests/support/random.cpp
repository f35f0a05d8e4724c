#include "random.hpp"
#include "oracles.hpp"

#include "nilsys/matrix.hpp"

namespace testing_support {

using nilsys::Integer;
using nilsys::LieAlgebra;
using nilsys::Matrix;
using nilsys::Rational;
using nilsys::Vector;

long uniform(Rng &rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

namespace {

// Index of the unknown ω(e_i, e_j), i < j.
std::size_t pair_index(std::size_t n, std::size_t i, std::size_t j) {
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

} // namespace

LieAlgebra random_nilpotent_algebra(Rng &rng, std::size_t dim) {
  std::size_t start = std::min<std::size_t>(dim, static_cast<std::size_t>(uniform(rng, 1, 3)));
  nilsys::StructureConstants sc;
  LieAlgebra a = LieAlgebra::validate(start, sc, "random");
  for (std::size_t n = start; n < dim; ++n) {
    const std::size_t pairs = n * (n - 1) / 2;
    // dω(e_i, e_j, e_k) = ω([e_i,e_j], e_k) + ω([e_j,e_k], e_i) + ω([e_k,e_i], e_j)
    std::vector<Vector> rows;
    auto add_term = [&](Vector &row, const Vector &v, std::size_t k, int sign) {
      for (std::size_t a2 = 0; a2 < n; ++a2) {
        if (v[a2] == 0 || a2 == k)
          continue;
        if (a2 < k)
          row[pair_index(n, a2, k)] += sign * v[a2];
        else
          row[pair_index(n, k, a2)] -= sign * v[a2];
      }
    };
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        for (std::size_t k = j + 1; k < n; ++k) {
          Vector row(pairs, 0);
          add_term(row, a.bracket(i, j), k, 1);
          add_term(row, a.bracket(j, k), i, 1);
          add_term(row, a.bracket(k, i), j, 1);
          rows.push_back(row);
        }
    Matrix cocycles;
    if (rows.empty())
      cocycles = Matrix::identity(pairs);
    else
      cocycles = nilsys::null_space(Matrix::from_rows(rows, pairs));
    Vector omega(pairs, 0);
    for (std::size_t r = 0; r < cocycles.rows(); ++r) {
      Vector b = cocycles.row(r);
      Integer l = nilsys::lcm_of_denominators(b);
      long coef = uniform(rng, -2, 2);
      for (std::size_t p = 0; p < pairs; ++p)
        omega[p] += coef * l * b[p];
    }
    nilsys::StructureConstants next;
    for (const auto &[ij, v] : a.constants()) {
      Vector w = v;
      w.push_back(0);
      next[ij] = w;
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        Rational o = omega[pair_index(n, i, j)];
        if (o == 0)
          continue;
        auto it = next.find({i, j});
        if (it == next.end())
          it = next.emplace(std::make_pair(i, j), Vector(n + 1, 0)).first;
        it->second[n] = o;
      }
    a = LieAlgebra::validate(n + 1, next, "random");
  }
  return a;
}

std::vector<std::vector<long>> random_integer_basis(Rng &rng, std::size_t n, long range) {
  while (true) {
    std::vector<std::vector<long>> rows(n, std::vector<long>(n));
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        m(i, j) = rows[i][j] = uniform(rng, -range, range);
    if (oracle::cofactor_determinant(m) != 0)
      return rows;
  }
}

std::vector<int> random_weights(Rng &rng, std::size_t n, int max_weight) {
  std::vector<int> w(n, 1);
  for (std::size_t i = 1; i < n; ++i)
    w[i] = std::min(max_weight, w[i - 1] + static_cast<int>(uniform(rng, 0, 1)));
  return w;
}

Vector to_vector(const std::vector<long> &row) {
  Vector v;
  for (long x : row)
    v.emplace_back(x);
  return v;
}

nilsys::AdditiveLattice to_lattice(const std::vector<std::vector<long>> &rows) {
  std::vector<Vector> vs;
  for (const auto &r : rows)
    vs.push_back(to_vector(r));
  return nilsys::AdditiveLattice::span(rows.size(), vs);
}

Vector random_rational_vector(Rng &rng, std::size_t n, long range, long den) {
  Vector v;
  for (std::size_t i = 0; i < n; ++i)
    v.emplace_back(uniform(rng, -range, range), uniform(rng, 1, den));
  for (auto &q : v)
    q.canonicalize();
  return v;
}

} // namespace testing_support
