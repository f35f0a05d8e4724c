#pragma once

#include "nilsys/rational.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nilsys {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
  ParseError(std::size_t line, const std::string &what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

private:
  std::size_t line_;
};

class IndexOutOfRange : public Error {
public:
  using Error::Error;
};

// Indices reported 0-based; what() prints them 1-based.
class JacobiViolation : public Error {
public:
  JacobiViolation(std::size_t i, std::size_t j, std::size_t k, Vector residual);
  std::size_t i, j, k;
  Vector residual;
};

class NotNilpotent : public Error {
public:
  NotNilpotent(std::size_t stable_dim, std::size_t step);
  std::size_t stable_dim;
  std::size_t step;
};

class MNotIdeal : public Error {
public:
  MNotIdeal() : Error("modulus subspace is not an ideal") {}
};

class FlagNotRefining : public Error {
public:
  using Error::Error;
};

class UnsupportedDegree : public Error {
public:
  explicit UnsupportedDegree(int degree)
      : Error("BCH data supported up to degree 7, requested " + std::to_string(degree)),
        degree(degree) {}
  int degree;
};

class NotContained : public Error {
public:
  NotContained() : Error("sublattice is not contained in the lattice") {}
};

class NotSubring : public Error {
public:
  using Error::Error;
};

class RankDeficient : public Error {
public:
  RankDeficient(std::size_t rank, std::size_t dim)
      : Error("lattice has rank " + std::to_string(rank) + " in dimension " +
              std::to_string(dim)) {}
};

class NotFlagCompatible : public Error {
public:
  explicit NotFlagCompatible(std::size_t j)
      : Error("lattice does not meet flag term " + std::to_string(j + 1) + " in a lattice"),
        position(j) {}
  std::size_t position;
};

class OddDimension : public Error {
public:
  OddDimension() : Error("symplectic pairing needs even dimension") {}
};

class NotUnimodularForm : public Error {
public:
  NotUnimodularForm() : Error("pairing is not antisymmetric of determinant 1") {}
};

class ClosureFailure : public Error {
public:
  ClosureFailure(std::size_t i, std::size_t j, Vector bracket);
  std::size_t i, j;
  Vector bracket;
};

class NonIntegralScale : public Error {
public:
  using Error::Error;
};

class Unbounded : public Error {
public:
  Unbounded() : Error("linear program is unbounded below") {}
};

class Infeasible : public Error {
public:
  Infeasible() : Error("linear program is infeasible") {}
};

class EnumerationLimit : public Error {
public:
  explicit EnumerationLimit(std::size_t nodes)
      : Error("systole enumeration exceeded " + std::to_string(nodes) + " nodes") {}
};

class UnknownName : public Error {
public:
  explicit UnknownName(const std::string &name) : Error("unknown catalog entry: " + name) {}
};

class BadParams : public Error {
public:
  using Error::Error;
};

} // namespace nilsys
