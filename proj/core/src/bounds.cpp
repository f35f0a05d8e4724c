#include "nilsys/bounds.hpp"
#include "nilsys/error.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace nilsys {

Setup prepare(const LieAlgebra &a, FlagMode mode) {
  return prepare(a, mode == FlagMode::Auto ? solid_flag(a) : lcs_flag(a));
}

Setup prepare(const LieAlgebra &a, SolidFlag flag) {
  CompatibleFrame frame = compatible_frame(a, flag.chain);
  LieAlgebra fa = frame_algebra(a, frame);
  GradedBracket graded = dilated_bracket(a, frame);
  return {std::move(flag), std::move(frame), std::move(fa), std::move(graded)};
}

LowerBound lower_bound_exponent(const Setup &s, const std::set<ConstraintClass> &disabled) {
  LowerBound out{0,
                 generate_constraints(s.frame_algebra, s.frame.weights, s.frame.blocks,
                                      disabled),
                 {}};
  auto bad = replay(s.frame_algebra, out.system);
  if (bad >= 0)
    throw std::logic_error("constraint " +
                           out.system.constraints[static_cast<std::size_t>(bad)].provenance.str() +
                           " failed replay");
  out.certificate = lp_minimize(out.system.matrix(), out.system.rhs(), out.system.objective());
  out.h = out.certificate.optimum;
  return out;
}

UpperBound upper_bound_exponent(const Setup &s) {
  const std::size_t d = s.frame.dim();
  Matrix g(0, d);
  Vector h;
  for (std::size_t i = 0; i < d; ++i) {
    g.append_row(unit_vector(d, i));
    h.push_back(0);
  }
  for (const auto &e : s.graded.entries) {
    Vector row = zero_vector(d);
    row[e.i] += 1;
    row[e.j] += 1;
    row[e.k] -= 1;
    g.append_row(row);
    h.push_back(e.m);
  }
  Vector c(d, Rational(1));
  UpperBound out;
  out.certificate = lp_minimize(g, h, c);
  out.h = out.certificate.optimum;
  out.theta = out.certificate.primal;
  return out;
}

bool DiagonalLattice::ok() const {
  return subring && systole == GLength{Rational(r), 1} && covolume == expected_covolume &&
         leading_integral;
}

DiagonalLattice build_diagonal_lattice(const Setup &s, const Vector &theta, const Integer &r) {
  const std::size_t d = s.frame.dim();
  if (theta.size() != d)
    throw std::invalid_argument("theta has the wrong length");
  if (!s.frame_algebra.is_integral())
    throw NonIntegralScale("frame structure constants are not integral");
  DiagonalLattice out;
  out.r = r;
  Vector diag(d);
  Rational exponent = 0;
  out.leading_integral = true;
  for (std::size_t i = 0; i < d; ++i) {
    if (sgn(theta[i]) < 0)
      throw NonIntegralScale("negative exponent");
    // r^{θ_i} with θ_i = p/q needs r to be a q-th power.
    const Integer &q = theta[i].get_den();
    Integer root;
    int exact = mpz_root(root.get_mpz_t(), r.get_mpz_t(), q.get_ui());
    if (!exact)
      throw NonIntegralScale("r = " + r.get_str() + " is not a " + q.get_str() +
                             "-th power");
    Integer lead;
    mpz_pow_ui(lead.get_mpz_t(), root.get_mpz_t(), theta[i].get_num().get_ui());
    Integer scale;
    mpz_pow_ui(scale.get_mpz_t(), r.get_mpz_t(), static_cast<unsigned long>(s.frame.weights[i]));
    diag[i] = Rational(scale * lead);
    exponent += s.frame.weights[i] + theta[i];
  }
  out.lattice = AdditiveLattice::diagonal(diag);
  if (auto w = is_subring(out.lattice, s.frame_algebra))
    throw ClosureFailure(w->i, w->j, w->bracket);
  out.subring = true;
  auto sys = systole(out.lattice, s.frame.weights);
  out.systole = sys.length;
  out.systole_witness = sys.witness;
  out.covolume = covolume(out.lattice);
  // r^{D + Σθ}: the exponent has denominator q and r is a q-th power.
  const Integer &q = exponent.get_den();
  Integer root;
  mpz_root(root.get_mpz_t(), r.get_mpz_t(), q.get_ui());
  Integer e;
  mpz_pow_ui(e.get_mpz_t(), root.get_mpz_t(), exponent.get_num().get_ui());
  out.expected_covolume = Rational(e);
  return out;
}

std::vector<Integer> r_samples(const Vector &theta, const std::vector<long> &bases) {
  Integer q = lcm_of_denominators(theta);
  std::vector<Integer> out;
  for (long b : bases) {
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(b), q.get_ui());
    out.push_back(r);
  }
  return out;
}

AdditiveLattice kc_lattice(const Setup &s, const Integer &n) {
  const std::size_t d = s.frame.dim();
  const int c = *std::max_element(s.frame.weights.begin(), s.frame.weights.end());
  Integer root = n;
  if (c % 2 == 1) {
    if (!mpz_perfect_square_p(n.get_mpz_t()))
      throw BadParams("n must be a perfect square for odd nilpotency class");
    mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
  }
  Vector diag(d);
  for (std::size_t i = 0; i < d; ++i) {
    // n^{max(c/2, w)} = root^{max(c, 2w)} when c is odd, n^{max(c/2, w)} otherwise.
    Integer v;
    if (c % 2 == 1)
      mpz_pow_ui(v.get_mpz_t(), root.get_mpz_t(),
                 static_cast<unsigned long>(std::max(c, 2 * s.frame.weights[i])));
    else
      mpz_pow_ui(v.get_mpz_t(), n.get_mpz_t(),
                 static_cast<unsigned long>(std::max(c / 2, s.frame.weights[i])));
    diag[i] = Rational(v);
  }
  return AdditiveLattice::diagonal(diag);
}

Baselines baseline_exponents(const LieAlgebra &a) {
  Rational c(static_cast<long>(nilpotency_class(a)));
  Rational d(static_cast<long>(a.dim()));
  return {c * d, Rational(static_cast<long>(homogeneous_dimension(a))) + k_c(a)};
}

bool BoundReport::consistent() const {
  return sgn(lower.h) >= 0 && lower.h <= upper.h && upper.h <= k_c;
}

bool BoundReport::witnesses_ok() const {
  return std::all_of(witnesses.begin(), witnesses.end(), [](const auto &w) { return w.ok(); });
}

BoundReport bound_report(const LieAlgebra &a, const BoundOptions &options,
                         const std::vector<long> &r_bases) {
  Setup setup = prepare(a, options.flag);
  LowerBound lower = lower_bound_exponent(setup, options.disabled);
  if (options.flag == FlagMode::Auto) {
    // Any certified longest chain gives a valid system; keep the strongest.
    auto flags = solid_flags(a);
    for (std::size_t i = 1; i < flags.size(); ++i) {
      Setup alt = prepare(a, std::move(flags[i]));
      LowerBound l = lower_bound_exponent(alt, options.disabled);
      if (l.h > lower.h) {
        setup = std::move(alt);
        lower = std::move(l);
      }
    }
  }
  UpperBound upper = upper_bound_exponent(setup);
  BoundReport rep{.name = a.name(),
                  .dim = a.dim(),
                  .nilpotency_class = nilpotency_class(a),
                  .D = homogeneous_dimension(a),
                  .k_c = k_c(a),
                  .baselines = baseline_exponents(a),
                  .setup = std::move(setup),
                  .lower = std::move(lower),
                  .upper = std::move(upper),
                  .witnesses = {},
                  .carnot_verdict = {}};
  if (rep.setup.frame_algebra.is_integral())
    for (const auto &r : r_samples(rep.upper.theta, r_bases))
      rep.witnesses.push_back(build_diagonal_lattice(rep.setup, rep.upper.theta, r));
  if (sgn(rep.lower.h) > 0)
    rep.carnot_verdict = "non-Carnot (certified)";
  else if (!rep.setup.graded.has_positive_exponent())
    rep.carnot_verdict = "Carnot-graded limit equals input constants";
  else
    rep.carnot_verdict = "inconclusive";
  return rep;
}

} // namespace nilsys
