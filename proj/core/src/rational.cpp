#include "nilsys/rational.hpp"
#include "nilsys/error.hpp"

#include <stdexcept>

namespace nilsys {

std::string to_string(const Rational &q) { return q.get_str(); }

std::string to_string(const Vector &v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i)
      out += ", ";
    out += to_string(v[i]);
  }
  return out + ")";
}

Rational parse_rational(std::string_view text) {
  auto valid_int = [](std::string_view s, bool allow_sign) {
    if (s.empty())
      return false;
    std::size_t start = 0;
    if (allow_sign && (s[0] == '-' || s[0] == '+'))
      start = 1;
    if (start == s.size())
      return false;
    for (std::size_t i = start; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9')
        return false;
    return true;
  };
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!valid_int(num, true) || !valid_int(den, false))
    throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
  std::string n(num);
  if (!n.empty() && n[0] == '+')
    n.erase(0, 1);
  Integer d(std::string(den), 10);
  if (d == 0)
    throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
  Rational q(Integer(n, 10), d);
  q.canonicalize();
  return q;
}

Vector zero_vector(std::size_t n) { return Vector(n, Rational(0)); }

Vector unit_vector(std::size_t n, std::size_t i) {
  Vector v(n, Rational(0));
  v[i] = 1;
  return v;
}

bool is_zero(const Vector &v) {
  for (const auto &x : v)
    if (sgn(x) != 0)
      return false;
  return true;
}

Vector operator+(const Vector &a, const Vector &b) {
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    r[i] = a[i] + b[i];
  return r;
}

Vector operator-(const Vector &a, const Vector &b) {
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    r[i] = a[i] - b[i];
  return r;
}

Vector operator-(const Vector &a) {
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    r[i] = -a[i];
  return r;
}

Vector operator*(const Rational &s, const Vector &v) {
  Vector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    r[i] = s * v[i];
  return r;
}

Rational dot(const Vector &a, const Vector &b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (sgn(a[i]) != 0 && sgn(b[i]) != 0)
      s += a[i] * b[i];
  return s;
}

bool is_integral(const Rational &q) { return q.get_den() == 1; }

Integer floor(const Rational &q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer ceil(const Rational &q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Rational gcd(const Rational &a, const Rational &b) {
  // gcd(p/q, r/s) = gcd(p s, r q) / (q s)
  Integer g = ::gcd(Integer(a.get_num() * b.get_den()), Integer(b.get_num() * a.get_den()));
  Rational r(g, Integer(a.get_den() * b.get_den()));
  r.canonicalize();
  return abs(r);
}

Integer lcm_of_denominators(const Vector &v) {
  Integer l = 1;
  for (const auto &x : v)
    l = ::lcm(l, Integer(x.get_den()));
  return l;
}

Rational pow(const Rational &q, long e) {
  if (e < 0) {
    if (sgn(q) == 0)
      throw std::domain_error("zero to a negative power");
    return pow(Rational(1) / q, -e);
  }
  Integer n, d;
  mpz_pow_ui(n.get_mpz_t(), q.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(d.get_mpz_t(), q.get_den_mpz_t(), static_cast<unsigned long>(e));
  return Rational(n, d);
}

JacobiViolation::JacobiViolation(std::size_t i, std::size_t j, std::size_t k, Vector residual)
    : Error("Jacobi identity fails on (e" + std::to_string(i + 1) + ", e" + std::to_string(j + 1) +
            ", e" + std::to_string(k + 1) + "): residual " + to_string(residual)),
      i(i), j(j), k(k), residual(std::move(residual)) {}

NotNilpotent::NotNilpotent(std::size_t stable_dim, std::size_t step)
    : Error("lower central series stabilizes at a nonzero term of dimension " +
            std::to_string(stable_dim) + " (term " + std::to_string(step) + ")"),
      stable_dim(stable_dim), step(step) {}

ClosureFailure::ClosureFailure(std::size_t i, std::size_t j, Vector bracket)
    : Error("bracket of basis vectors " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
            " leaves the lattice: " + to_string(bracket)),
      i(i), j(j), bracket(std::move(bracket)) {}

} // namespace nilsys
