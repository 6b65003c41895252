#pragma once

#include <stdexcept>
#include <string>

#include "mtkit/mask.hpp"

namespace mtkit {

/// Base of all input-validation failures. The CLI maps these to exit code 1.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

class NotATopology : public ValidationError {
 public:
  NotATopology(const std::string& what, Mask a, Mask b)
      : ValidationError("not a topology: " + what), witness_a(a), witness_b(b) {}
  Mask witness_a, witness_b;
};

class NotALattice : public ValidationError {
 public:
  NotALattice(const std::string& what, int a, int b)
      : ValidationError("not a lattice: " + what), witness_a(a), witness_b(b) {}
  int witness_a, witness_b;
};

class NotDistributive : public ValidationError {
 public:
  NotDistributive(int a, int b, int c)
      : ValidationError("not distributive"), witness_a(a), witness_b(b), witness_c(c) {}
  int witness_a, witness_b, witness_c;
};

class NotAPoset : public ValidationError {
 public:
  NotAPoset(const std::string& what, int a, int b)
      : ValidationError("not a poset: " + what), witness_a(a), witness_b(b) {}
  int witness_a, witness_b;
};

class NotOpen : public ValidationError {
 public:
  explicit NotOpen(Mask e) : ValidationError("element is not open"), element(e) {}
  Mask element;
};

class NotClosed : public ValidationError {
 public:
  explicit NotClosed(Mask e) : ValidationError("element is not closed"), element(e) {}
  Mask element;
};

class NotContinuous : public ValidationError {
 public:
  explicit NotContinuous(Mask open)
      : ValidationError("point map is not continuous"), witness_open(open) {}
  /// An open set of the source space whose preimage is not open.
  Mask witness_open;
};

class NotAFrameHom : public ValidationError {
 public:
  NotAFrameHom(const std::string& what, int a, int b)
      : ValidationError("not a frame homomorphism: " + what), witness_a(a), witness_b(b) {}
  int witness_a, witness_b;
};

class NotNormal : public ValidationError {
 public:
  NotNormal() : ValidationError("algebra is not normal") {}
};

class NotRatherBelow : public ValidationError {
 public:
  NotRatherBelow(Mask a, Mask b)
      : ValidationError("rather-below relation does not hold"), lhs(a), rhs(b) {}
  Mask lhs, rhs;
};

class PreconditionViolated : public ValidationError {
 public:
  explicit PreconditionViolated(const std::string& what)
      : ValidationError("precondition violated: " + what) {}
};

class BoundExceeded : public ValidationError {
 public:
  BoundExceeded(int requested, int bound)
      : ValidationError("point-count bound exceeded (" + std::to_string(requested) +
                        " > " + std::to_string(bound) + ")"),
        requested(requested),
        bound(bound) {}
  int requested, bound;
};

/// Malformed input documents. The CLI maps these to exit code 3.
class SchemaError : public std::runtime_error {
 public:
  SchemaError(const std::string& path, const std::string& what)
      : std::runtime_error("schema error at " + path + ": " + what), path(path) {}
  std::string path;
};

}  // namespace mtkit
