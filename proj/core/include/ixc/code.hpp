#pragma once

#include <string>
#include <vector>

#include "ixc/gf.hpp"
#include "ixc/problem.hpp"

namespace ixc {

/// Candidate scalar-linear code: one length-L vector per message. A message
/// is recovered from its vector's coordinate combination of the codeword, so
/// decodability at receiver j demanding k is exactly
/// V_k not in span{V_m : m interferes with k at j}.
struct PrecodingAssignment {
  int L = 0;
  Field field{};
  std::vector<FVector> vectors;  // indexed by message

  friend bool operator==(const PrecodingAssignment&, const PrecodingAssignment&) = default;
};

/// One failed decodability constraint.
struct Violation {
  int receiver;
  Msg demand;
  MsgSet interference;
  std::string detail;
};

/// Every (receiver, demanded message) constraint, including the degenerate
/// one: a demand with empty interference still needs a nonzero vector.
/// Throws CoverageError when a message has no vector of the right length.
std::vector<Violation> verify_code(const Problem& p, const PrecodingAssignment& code);

/// JSON {"L":..,"q":..,"vectors":{"1":[..],..}}; message keys are 1-based.
std::string code_to_json(const PrecodingAssignment& code);

}  // namespace ixc
