#include "nilsys/error.hpp"
#include "nilsys/lattice.hpp"

#include <cstdlib>
#include <limits>

namespace nilsys {

namespace {

struct Search {
  Search(const IntMatrix &h, const std::vector<int> &weights, const Integer &scale,
         std::size_t d, std::size_t cap)
      : h(h), weights(weights), scale(scale), d(d), cap(cap), a(d, 0), x(d, 0) {}

  const IntMatrix &h;
  const std::vector<int> &weights;
  const Integer &scale;
  std::size_t d;
  std::size_t cap;
  std::size_t nodes = 0;
  GLength best;
  std::vector<Integer> best_x;
  std::vector<Integer> a;
  std::vector<Integer> x;  // running coordinates, integer (times scale)

  // Largest U >= 0 with U^{wb} < best.q^{w_j} · scale^{wb}, or -1 if none.
  Integer bound(std::size_t j) const {
    Rational rhs = pow(best.q, weights[j]) * pow(Rational(scale), best.w);
    Integer fl = floor(rhs);
    if (sgn(fl) < 0)
      return -1;
    Integer r;
    mpz_root(r.get_mpz_t(), fl.get_mpz_t(), static_cast<unsigned long>(best.w));
    Integer rp;
    mpz_pow_ui(rp.get_mpz_t(), r.get_mpz_t(), static_cast<unsigned long>(best.w));
    if (Rational(rp) >= rhs)
      r -= 1;
    return r;
  }

  void descend(std::size_t j, bool prefix_zero) {
    if (++nodes > cap)
      throw EnumerationLimit(cap);
    if (j == d) {
      if (prefix_zero)
        return;
      Vector v(d);
      for (std::size_t t = 0; t < d; ++t) {
        v[t] = Rational(x[t], scale);
        v[t].canonicalize();
      }
      best = guivarch_length(weights, v);
      best_x = x;
      return;
    }
    Integer u = bound(j);
    if (sgn(u) < 0)
      return;
    const Integer &piv = h[j][j];
    const Integer c = x[j];  // contribution of earlier rows
    Integer lo, hi;
    Integer num_lo = -u - c, num_hi = u - c;
    mpz_cdiv_q(lo.get_mpz_t(), num_lo.get_mpz_t(), piv.get_mpz_t());
    mpz_fdiv_q(hi.get_mpz_t(), num_hi.get_mpz_t(), piv.get_mpz_t());
    if (prefix_zero && lo < 0)
      lo = 0;
    for (Integer k = lo; k <= hi; ++k) {
      for (std::size_t t = j; t < d; ++t)
        if (sgn(h[j][t]) != 0)
          x[t] += k * h[j][t];
      a[j] = k;
      descend(j + 1, prefix_zero && sgn(k) == 0);
      for (std::size_t t = j; t < d; ++t)
        if (sgn(h[j][t]) != 0)
          x[t] -= k * h[j][t];
      // The bound may have tightened below; stop once k leaves the new range.
      Integer nu = bound(j);
      if (sgn(nu) < 0)
        break;
      Integer nhi, num = nu - c;
      mpz_fdiv_q(nhi.get_mpz_t(), num.get_mpz_t(), piv.get_mpz_t());
      if (nhi < hi)
        hi = nhi;
    }
    a[j] = 0;
  }
};

std::size_t enumeration_cap() {
  if (const char *env = std::getenv("NILSYS_MAX_ENUM")) {
    char *end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && v > 0)
      return static_cast<std::size_t>(v);
  }
  return std::numeric_limits<std::size_t>::max();
}

} // namespace

SystoleResult systole(const AdditiveLattice &l, const std::vector<int> &weights) {
  if (!l.full_rank())
    throw RankDeficient(l.rank(), l.ambient_dim());
  const std::size_t d = l.ambient_dim();
  Search s(l.hnf(), weights, l.scale(), d, enumeration_cap());
  auto rows = l.basis();
  std::size_t start = 0;
  s.best = guivarch_length(weights, rows[0]);
  for (std::size_t t = 1; t < d; ++t) {
    GLength g = guivarch_length(weights, rows[t]);
    if (g < s.best) {
      s.best = g;
      start = t;
    }
  }
  s.best_x = l.hnf()[start];
  s.descend(0, true);
  SystoleResult out;
  out.length = s.best;
  out.nodes = s.nodes;
  out.witness.resize(d);
  for (std::size_t t = 0; t < d; ++t) {
    out.witness[t] = Rational(s.best_x[t], l.scale());
    out.witness[t].canonicalize();
  }
  return out;
}

} // namespace nilsys
