#pragma once

#include <stdexcept>
#include <string>

namespace ixc {

/// Malformed external input (JSON shape, types, missing keys).
class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Structurally well-formed input that violates a model invariant
/// (index out of range, demand/side-info overlap, non-prime field, ...).
class InvariantError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class EmptySubset : public InvariantError {
 public:
  using InvariantError::InvariantError;
};

/// Vector/subspace length or field disagreement.
class DimensionMismatch : public InvariantError {
 public:
  using InvariantError::InvariantError;
};

/// Sampling a nonzero vector from the zero subspace.
class ZeroSubspace : public InvariantError {
 public:
  using InvariantError::InvariantError;
};

class NotAnAlignmentSet : public InvariantError {
 public:
  using InvariantError::InvariantError;
};

class NotAlignmentEdge : public InvariantError {
 public:
  using InvariantError::InvariantError;
};

class EndpointsInConflict : public InvariantError {
 public:
  using InvariantError::InvariantError;
};

/// Vertex maps or histories that do not fit the problem they are applied to.
class IndexMismatch : public InvariantError {
 public:
  using InvariantError::InvariantError;
};

/// A contraction that still has a contractible alignment edge where a
/// maximal one is required.
class NotMaximal : public InvariantError {
 public:
  using InvariantError::InvariantError;
};

/// Running an assignment stage whose structural precondition failed.
class ConditionViolation : public InvariantError {
 public:
  using InvariantError::InvariantError;
};

/// A precoding assignment that does not cover every message.
class CoverageError : public InvariantError {
 public:
  using InvariantError::InvariantError;
};

/// No explored maximal contraction met the structural conditions the
/// length-3 construction needs.
class NoQualifyingContraction : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Randomized assignment failed verification on every allowed retry.
class RetryExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exhaustive search hit its node cap before reaching an answer; the outcome
/// is unknown, which is distinct from infeasible.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ixc
