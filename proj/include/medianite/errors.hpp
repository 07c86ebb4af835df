#pragma once

#include <stdexcept>
#include <string>

namespace medianite {

/// Base class for all domain errors thrown by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A declared or closed order relation breaks one of the poc-set axioms.
struct AxiomViolation : Error {
  enum class Kind { dagger, antisymmetry, degenerate_pair };

  Kind kind;
  int witness_a;  // element ids of the offending pair
  int witness_b;

  AxiomViolation(Kind k, int a, int b, const std::string& msg)
      : Error(msg), kind(k), witness_a(a), witness_b(b) {}
};

struct MissingWeight : Error {
  int wall;
  MissingWeight(int w, const std::string& msg) : Error(msg), wall(w) {}
};

struct SameWall : Error {
  using Error::Error;
};

struct NotATree : Error {
  using Error::Error;
};

struct NotMinimal : Error {
  using Error::Error;
};

struct TooManyWalls : Error {
  using Error::Error;
};

struct WeightMismatch : Error {
  int wall;
  WeightMismatch(int w, const std::string& msg) : Error(msg), wall(w) {}
};

struct DegenerateWall : Error {
  int wall;
  DegenerateWall(int w, const std::string& msg) : Error(msg), wall(w) {}
};

struct NotSeparated : Error {
  using Error::Error;
};

struct GridTooFine : Error {
  using Error::Error;
};

}  // namespace medianite
