#pragma once

// Randomized and catalog-wide checks shared by the unit tests and the
// acceptance binary. Each returns the number of cases run and the first
// failure, if any.

#include <cstdint>
#include <string>

namespace checks {

struct Outcome {
  bool ok = true;
  std::size_t cases = 0;
  std::string detail;  // first failure

  void fail(const std::string &what) {
    if (ok)
      detail = what;
    ok = false;
  }
};

Outcome systole_vs_bruteforce(std::uint64_t seed, std::size_t cases);
Outcome covolume_vs_cofactor(std::uint64_t seed, std::size_t cases);
Outcome minkowski(std::uint64_t seed, std::size_t cases);
Outcome covollati(std::uint64_t seed, std::size_t cases);
Outcome flag_covolume_product(std::uint64_t seed, std::size_t cases);
/// Random LPs against vertex enumeration, plus every catalog lower-bound
/// system; duals re-substituted by hand.
Outcome lp_duals(std::uint64_t seed, std::size_t cases);
/// Disabling a constraint class never raises the optimum (catalog entries
/// plus random algebras).
Outcome lp_ablation(std::uint64_t seed, std::size_t cases);

/// k_c against the closed forms (c <= 6) or the defining sum, catalog only.
Outcome kc_formulas();
/// k <= d^2/6 - d/2 + 1/2 and k + D <= (5d^2 - 4d)/8 on the catalog and on
/// random algebras of dimension 3..7.
Outcome kc_inequalities(std::uint64_t seed, std::size_t random_cases);

Outcome bch_heisenberg(std::uint64_t seed, std::size_t cases);
/// Associativity, inverse and unit on every reproduction entry of class <= 6.
Outcome bch_associativity(std::uint64_t seed, std::size_t triples_per_algebra);
Outcome bch_denominators();
Outcome strong_subring_closure(std::uint64_t seed, std::size_t cases);
/// Group index equals additive index on random strong-subring pairs in
/// heisenberg(n=1) and witt(5).
Outcome index_equality(std::uint64_t seed, std::size_t pairs_per_algebra);

} // namespace checks
