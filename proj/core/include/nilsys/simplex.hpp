#pragma once

#include "nilsys/matrix.hpp"

#include <cstddef>

namespace nilsys {

/// Optimum of min c·x subject to G x >= h with x free, plus the dual
/// multipliers y >= 0 with y G = c and y·h = optimum.
struct LPCertificate {
  Rational optimum;
  Vector primal;
  Vector dual;
  std::size_t pivots = 0;
};

/// Two-phase dense simplex over Q with Bland's rule. Throws Infeasible or
/// Unbounded. The returned certificate has already passed verify().
LPCertificate lp_minimize(const Matrix &g, const Vector &h, const Vector &c);

/// Exact substitution check of primal feasibility, dual feasibility and
/// equality of both objective values.
bool verify(const LPCertificate &cert, const Matrix &g, const Vector &h, const Vector &c);

} // namespace nilsys
