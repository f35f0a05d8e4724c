#pragma once

#include "nilsys/lie_algebra.hpp"

#include <map>
#include <string>
#include <vector>

namespace nilsys::catalog {

using Params = std::map<std::string, long>;

struct Expected {
  std::size_t D = 0;
  std::size_t c = 0;
  Rational k_c;
  Rational h;
  Rational residual_girth;  // c · d
  std::string note;
};

struct Info {
  std::string name;
  std::string params;  // human-readable parameter range
  std::string source;
};

/// Throws UnknownName or BadParams.
LieAlgebra build(const std::string &name, const Params &params = {});
Expected expected(const std::string &name, const Params &params = {});
std::vector<Info> list();

/// "name" or "name(k=v,...)".
std::string label(const std::string &name, const Params &params);
/// Parses "k=v[,k=v]".
Params parse_params(const std::string &text);

struct Instance {
  std::string name;
  Params params;
};

/// Every instance reproduced by the report command.
std::vector<Instance> reproduction_set();

} // namespace nilsys::catalog
