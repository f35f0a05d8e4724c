#pragma once

#include "nilsys/lie_algebra.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace nilsys {

// Text format, 1-based indices, '#' starts a comment:
//   dim 5
//   name L55
//   bracket 1 2 = 1*4
//   bracket 2 3 = 1/2*5 - 3*4
LieAlgebra parse_algebra(std::istream &in);
LieAlgebra parse_algebra_string(const std::string &text);
LieAlgebra read_algebra_file(const std::string &path);
std::string format_algebra(const LieAlgebra &a);

/// One basis vector per line, whitespace-separated rationals.
std::vector<Vector> parse_lattice(std::istream &in, std::size_t dim);
std::vector<Vector> read_lattice_file(const std::string &path, std::size_t dim);

} // namespace nilsys
