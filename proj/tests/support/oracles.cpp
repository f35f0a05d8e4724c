#include "oracles.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace oracle {

using nilsys::operator+;

Rational cofactor_determinant(const Matrix &m) {
  const std::size_t n = m.rows();
  if (n == 0)
    return 1;
  if (n == 1)
    return m(0, 0);
  Rational det = 0;
  for (std::size_t col = 0; col < n; ++col) {
    if (m(0, col) == 0)
      continue;
    Matrix minor(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t j = 0, jj = 0; j < n; ++j)
        if (j != col)
          minor(i - 1, jj++) = m(i, j);
    Rational term = m(0, col) * cofactor_determinant(minor);
    det += col % 2 == 0 ? term : Rational(-term);
  }
  return det;
}

namespace {

Integer ipow(long base, long e) {
  Integer out = 1;
  for (long i = 0; i < e; ++i)
    out *= base;
  return out;
}

// a^{1/wa} < b^{1/wb} with a, b >= 0 integers
bool less_root(long a, int wa, long b, int wb) { return ipow(a, wb) < ipow(b, wa); }

} // namespace

std::optional<nilsys::GLength> brute_force_systole(const std::vector<std::vector<long>> &basis,
                                                   const std::vector<int> &weights,
                                                   std::size_t max_points) {
  const std::size_t n = basis.size();
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m(i, j) = basis[i][j];
  Rational det = cofactor_determinant(m);
  // adj(M) with M^{-1} = adj / det; c = v·adj / det must be integral.
  std::vector<std::vector<long>> adj(n, std::vector<long>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Matrix minor(n - 1, n - 1);
      for (std::size_t a = 0, aa = 0; a < n; ++a) {
        if (a == j)
          continue;
        for (std::size_t b = 0, bb = 0; b < n; ++b)
          if (b != i)
            minor(aa, bb++) = m(a, b);
        ++aa;
      }
      Rational c = cofactor_determinant(minor);
      if ((i + j) % 2 == 1)
        c = -c;
      adj[i][j] = c.get_num().get_si();
    }
  long d = det.get_num().get_si();

  // Shortest basis row bounds the search box.
  long best_q = 0;
  int best_w = 1;
  bool have = false;
  auto length_of = [&](const std::vector<long> &v, long &q, int &w) {
    q = 0;
    w = 1;
    for (std::size_t i = 0; i < n; ++i) {
      long a = std::labs(v[i]);
      if (less_root(q, w, a, weights[i])) {
        q = a;
        w = weights[i];
      }
    }
  };
  for (const auto &row : basis) {
    long q;
    int w;
    length_of(row, q, w);
    if (!have || less_root(q, w, best_q, best_w)) {
      best_q = q;
      best_w = w;
      have = true;
    }
  }
  std::vector<long> bound(n);
  double points = 1;
  for (std::size_t i = 0; i < n; ++i) {
    // largest t with t^{best_w} <= best_q^{w_i}
    long t = 0;
    Integer cap = ipow(best_q, weights[i]);
    while (ipow(t + 1, best_w) <= cap)
      ++t;
    bound[i] = t;
    points *= static_cast<double>(2 * t + 1);
  }
  if (points > static_cast<double>(max_points))
    return std::nullopt;

  std::vector<long> v(n);
  for (std::size_t i = 0; i < n; ++i)
    v[i] = -bound[i];
  while (true) {
    bool nonzero = std::any_of(v.begin(), v.end(), [](long x) { return x != 0; });
    if (nonzero) {
      bool member = true;
      for (std::size_t j = 0; j < n && member; ++j) {
        long s = 0;
        for (std::size_t i = 0; i < n; ++i)
          s += v[i] * adj[i][j];
        member = s % d == 0;
      }
      if (member) {
        long q;
        int w;
        length_of(v, q, w);
        if (less_root(q, w, best_q, best_w)) {
          best_q = q;
          best_w = w;
        }
      }
    }
    std::size_t i = 0;
    while (i < n && v[i] == bound[i]) {
      v[i] = -bound[i];
      ++i;
    }
    if (i == n)
      break;
    ++v[i];
  }
  return nilsys::GLength{best_q, best_w};
}

std::optional<Rational> vertex_lp(const Matrix &g, const Vector &h, const Vector &c) {
  const std::size_t rows = g.rows(), n = g.cols();
  std::vector<bool> pick(rows, false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(n), true);
  std::optional<Rational> best;
  do {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < rows; ++i)
      if (pick[i])
        idx.push_back(i);
    Matrix a(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t j = 0; j < n; ++j)
        a(r, j) = g(idx[r], j);
    Rational det = cofactor_determinant(a);
    if (det == 0)
      continue;
    // Cramer's rule
    Vector x(n);
    for (std::size_t j = 0; j < n; ++j) {
      Matrix aj = a;
      for (std::size_t r = 0; r < n; ++r)
        aj(r, j) = h[idx[r]];
      x[j] = cofactor_determinant(aj) / det;
    }
    bool feasible = true;
    for (std::size_t r = 0; r < rows && feasible; ++r) {
      Rational s = 0;
      for (std::size_t j = 0; j < n; ++j)
        s += g(r, j) * x[j];
      feasible = s >= h[r];
    }
    if (!feasible)
      continue;
    Rational val = 0;
    for (std::size_t j = 0; j < n; ++j)
      val += c[j] * x[j];
    if (!best || val < *best)
      best = val;
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return best;
}

Poly multiply(const Poly &a, const Poly &b, int max_degree) {
  Poly out;
  for (const auto &[wa, ca] : a)
    for (const auto &[wb, cb] : b) {
      if (static_cast<int>(wa.size() + wb.size()) > max_degree)
        continue;
      Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      out[w] += ca * cb;
    }
  std::erase_if(out, [](const auto &kv) { return kv.second == 0; });
  return out;
}

namespace {

void add_scaled(Poly &acc, const Poly &p, const Rational &s) {
  for (const auto &[w, c] : p)
    acc[w] += s * c;
  std::erase_if(acc, [](const auto &kv) { return kv.second == 0; });
}

} // namespace

Poly exp_series(const Poly &a, int max_degree) {
  Poly out{{Word{}, 1}};
  Poly power{{Word{}, 1}};
  Rational fact = 1;
  for (int k = 1; k <= max_degree; ++k) {
    power = multiply(power, a, max_degree);
    fact *= k;
    add_scaled(out, power, 1 / fact);
  }
  return out;
}

Poly log_series(const Poly &one_plus_a, int max_degree) {
  Poly a = one_plus_a;
  a.erase(Word{});
  Poly out;
  Poly power{{Word{}, 1}};
  for (int k = 1; k <= max_degree; ++k) {
    power = multiply(power, a, max_degree);
    add_scaled(out, power, Rational(k % 2 == 1 ? 1 : -1, k));
  }
  return out;
}

Poly bch_part(int n) {
  Poly x{{Word{0}, 1}}, y{{Word{1}, 1}};
  Poly full = log_series(multiply(exp_series(x, n), exp_series(y, n), n), n);
  Poly out;
  for (const auto &[w, c] : full)
    if (static_cast<int>(w.size()) == n)
      out[w] = c;
  return out;
}

Poly expand_right_normed(const Word &letters) {
  Poly head{{Word{letters.front()}, 1}};
  if (letters.size() == 1)
    return head;
  Poly rest = expand_right_normed(Word(letters.begin() + 1, letters.end()));
  int deg = static_cast<int>(letters.size());
  Poly out = multiply(head, rest, deg);
  add_scaled(out, multiply(rest, head, deg), -1);
  return out;
}

Integer denominator_lcm(const Poly &p) {
  Integer out = 1;
  for (const auto &kv : p) {
    Integer den = kv.second.get_den();
    mpz_lcm(out.get_mpz_t(), out.get_mpz_t(), den.get_mpz_t());
  }
  return out;
}

Vector heisenberg_product(const nilsys::LieAlgebra &a, const Vector &x, const Vector &y) {
  Vector out = x + y;
  Vector b = a.bracket(x, y);
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] += b[i] / 2;
  return out;
}

Integer pairwise_gcd(const std::vector<std::vector<long>> &basis, const Matrix &phi) {
  Integer g = 0;
  for (std::size_t a = 0; a < basis.size(); ++a)
    for (std::size_t b = a + 1; b < basis.size(); ++b) {
      Rational s = 0;
      for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = 0; j < basis.size(); ++j)
          s += basis[a][i] * phi(i, j) * basis[b][j];
      Integer v = s.get_num();
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    }
  return g;
}

} // namespace oracle
