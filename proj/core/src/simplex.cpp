#include "nilsys/simplex.hpp"
#include "nilsys/error.hpp"

#include <stdexcept>

namespace nilsys {

namespace {

// Standard form: columns [x+ | x- | surplus | artificial], rows flipped so the
// right-hand side is nonnegative.
class Tableau {
public:
  Tableau(const Matrix &g, const Vector &h) : m_(g.rows()), n_(g.cols()) {
    cols_ = 2 * n_ + 2 * m_;
    t_ = Matrix(m_, cols_ + 1);
    sign_.assign(m_, 1);
    basis_.resize(m_);
    for (std::size_t i = 0; i < m_; ++i) {
      int s = sgn(h[i]) < 0 ? -1 : 1;
      sign_[i] = s;
      for (std::size_t j = 0; j < n_; ++j) {
        t_(i, j) = g(i, j) * s;
        t_(i, n_ + j) = -g(i, j) * s;
      }
      t_(i, 2 * n_ + i) = -s;
      t_(i, artificial(i)) = 1;
      t_(i, cols_) = h[i] * s;
      basis_[i] = artificial(i);
    }
  }

  std::size_t artificial(std::size_t i) const { return 2 * n_ + m_ + i; }
  bool is_artificial(std::size_t col) const { return col >= 2 * n_ + m_; }

  // Minimizes cost over the current basic feasible solution. Returns false if
  // unbounded. Artificial columns may never enter when allow_artificial is off.
  bool optimize(const Vector &cost, bool allow_artificial) {
    for (;;) {
      Vector reduced = reduced_costs(cost);
      std::size_t enter = cols_;
      for (std::size_t j = 0; j < cols_; ++j) {
        if (!allow_artificial && is_artificial(j))
          continue;
        if (sgn(reduced[j]) < 0) {
          enter = j;
          break;
        }
      }
      if (enter == cols_)
        return true;
      std::size_t leave = m_;
      Rational best_ratio;
      for (std::size_t i = 0; i < m_; ++i) {
        if (sgn(t_(i, enter)) <= 0)
          continue;
        Rational ratio = t_(i, cols_) / t_(i, enter);
        if (leave == m_ || ratio < best_ratio ||
            (ratio == best_ratio && basis_[i] < basis_[leave])) {
          leave = i;
          best_ratio = ratio;
        }
      }
      if (leave == m_)
        return false;
      pivot(leave, enter);
    }
  }

  Vector reduced_costs(const Vector &cost) const {
    Vector r = cost;
    for (std::size_t i = 0; i < m_; ++i) {
      const Rational &cb = cost[basis_[i]];
      if (sgn(cb) == 0)
        continue;
      for (std::size_t j = 0; j < cols_; ++j)
        if (sgn(t_(i, j)) != 0)
          r[j] -= cb * t_(i, j);
    }
    return r;
  }

  void pivot(std::size_t row, std::size_t col) {
    Rational inv = 1 / t_(row, col);
    for (std::size_t j = 0; j <= cols_; ++j)
      if (sgn(t_(row, j)) != 0)
        t_(row, j) *= inv;
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == row || sgn(t_(i, col)) == 0)
        continue;
      Rational f = t_(i, col);
      for (std::size_t j = 0; j <= cols_; ++j)
        if (sgn(t_(row, j)) != 0)
          t_(i, j) -= f * t_(row, j);
    }
    basis_[row] = col;
    ++pivots_;
  }

  // Pivots zero-level artificials out of the basis where a structural column allows.
  void drive_out_artificials() {
    for (std::size_t i = 0; i < m_; ++i) {
      if (!is_artificial(basis_[i]))
        continue;
      for (std::size_t j = 0; j < 2 * n_ + m_; ++j)
        if (sgn(t_(i, j)) != 0) {
          pivot(i, j);
          break;
        }
    }
  }

  Rational value(const Vector &cost) const {
    Rational v = 0;
    for (std::size_t i = 0; i < m_; ++i)
      v += cost[basis_[i]] * t_(i, cols_);
    return v;
  }

  Vector solution() const {
    Vector z = zero_vector(cols_);
    for (std::size_t i = 0; i < m_; ++i)
      z[basis_[i]] = t_(i, cols_);
    Vector x(n_);
    for (std::size_t j = 0; j < n_; ++j)
      x[j] = z[j] - z[n_ + j];
    return x;
  }

  // y_i = sign_i · (cost_B B^{-1})_i, read off the artificial columns whose
  // original entries form the identity.
  Vector dual(const Vector &cost) const {
    Vector r = reduced_costs(cost);
    Vector y(m_);
    for (std::size_t i = 0; i < m_; ++i)
      y[i] = -r[artificial(i)] * sign_[i];
    return y;
  }

  std::size_t cols() const { return cols_; }
  std::size_t pivots() const { return pivots_; }

private:
  std::size_t m_, n_, cols_;
  Matrix t_;
  std::vector<int> sign_;
  std::vector<std::size_t> basis_;
  std::size_t pivots_ = 0;
};

} // namespace

LPCertificate lp_minimize(const Matrix &g, const Vector &h, const Vector &c) {
  if (g.rows() != h.size() || g.cols() != c.size())
    throw std::invalid_argument("LP shape mismatch");
  const std::size_t m = g.rows(), n = g.cols();
  Tableau tab(g, h);

  Vector phase1 = zero_vector(tab.cols());
  for (std::size_t i = 0; i < m; ++i)
    phase1[tab.artificial(i)] = 1;
  tab.optimize(phase1, true);
  if (sgn(tab.value(phase1)) != 0)
    throw Infeasible();
  tab.drive_out_artificials();

  Vector phase2 = zero_vector(tab.cols());
  for (std::size_t j = 0; j < n; ++j) {
    phase2[j] = c[j];
    phase2[n + j] = -c[j];
  }
  if (!tab.optimize(phase2, false))
    throw Unbounded();

  LPCertificate cert;
  cert.optimum = tab.value(phase2);
  cert.primal = tab.solution();
  cert.dual = tab.dual(phase2);
  cert.pivots = tab.pivots();
  if (!verify(cert, g, h, c))
    throw std::logic_error("simplex produced a certificate that does not verify");
  return cert;
}

bool verify(const LPCertificate &cert, const Matrix &g, const Vector &h, const Vector &c) {
  const std::size_t m = g.rows(), n = g.cols();
  if (cert.primal.size() != n || cert.dual.size() != m)
    return false;
  for (std::size_t i = 0; i < m; ++i) {
    Rational lhs = 0;
    for (std::size_t j = 0; j < n; ++j)
      lhs += g(i, j) * cert.primal[j];
    if (lhs < h[i])
      return false;
    if (sgn(cert.dual[i]) < 0)
      return false;
  }
  Vector yg = cert.dual * g;
  if (yg != c)
    return false;
  return dot(cert.dual, h) == cert.optimum && dot(c, cert.primal) == cert.optimum;
}

} // namespace nilsys
