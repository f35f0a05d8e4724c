#pragma once

#include "nilsys/lie_algebra.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace nilsys {

enum class SolidRule {
  Zero,
  Whole,
  LowerCentral,  // index = term number (1-based)
  UpperCentral,  // index = term number (1-based)
  Bracket,       // [X, Y]
  Centralizer,   // {x : [x, X] ⊆ Y}
  Sum,
  Intersection,
};

std::string to_string(SolidRule rule);

struct SolidIdeal {
  Subspace space;
  SolidRule rule;
  std::size_t index = 0;              // series term for seed rules
  std::vector<std::size_t> parents;   // closure indices for derived rules
};

struct SolidClosure {
  std::vector<SolidIdeal> ideals;     // discovery order; parents precede children
  bool capped = false;

  std::ptrdiff_t find(const Subspace &s) const;
};

constexpr std::size_t kSolidClosureCap = 10000;

/// Saturates {0, g, lower and upper central terms} under bracket, relative
/// centralizer, sum and intersection.
SolidClosure solid_closure(const LieAlgebra &a, std::size_t cap = kSolidClosureCap);

/// Recomputes every ideal from its trace; true when all match.
bool replay(const LieAlgebra &a, const SolidClosure &closure);

struct SolidFlag {
  std::vector<Subspace> chain;                // g = W_1 > ... > W_k = 0
  std::vector<std::size_t> blocks;            // dim W_j / W_{j+1}
  std::vector<std::size_t> certificates;      // closure index of each chain term
  SolidClosure closure;
};

/// A longest chain of certified ideals through every lower central term.
SolidFlag solid_flag(const LieAlgebra &a);
/// All longest such chains (at most `limit`), solid_flag's choice first.
std::vector<SolidFlag> solid_flags(const LieAlgebra &a, std::size_t limit = 16);
/// The lower central series itself, certified by the seed rule.
SolidFlag lcs_flag(const LieAlgebra &a);

} // namespace nilsys
