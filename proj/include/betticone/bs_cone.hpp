#pragma once

#include "betticone/error.hpp"
#include "betticone/tables.hpp"

#include <optional>
#include <string>
#include <vector>

namespace betticone {

/// Degree sequence of a pure table: homological degrees 0..pd contiguous,
/// one internal degree each, strictly increasing. Empty otherwise.
std::optional<DegreeSequence> is_pure(const GradedBettiTable& t);

struct DecompositionPart {
  Rational coefficient;  // > 0
  PureTable pure;        // gcd-normalized
};

struct Decomposition {
  std::vector<DecompositionPart> parts;
  GradedBettiTable residual;
  std::size_t iterations = 0;

  bool complete() const noexcept { return residual.empty(); }
  /// sum of coefficient * pure plus the residual.
  GradedBettiTable resum() const;
};

/// Raised when greedy elimination stops with a nonzero residual. This says the
/// greedy chain got stuck, not that the table lies outside the cone.
class DecompositionStuck : public Error {
 public:
  DecompositionStuck(const std::string& message, Decomposition partial)
      : Error(ErrorCode::NotInConeCandidate, message), partial_(std::move(partial)) {}

  const Decomposition& partial() const noexcept { return partial_; }

 private:
  Decomposition partial_;
};

/// Greedy elimination along the bottom strand: take d_i = min{j : beta_{i,j} > 0},
/// subtract the largest multiple of hk_pure_table(d) that keeps entries
/// nonnegative, repeat. Throws DecompositionStuck on failure (the exception
/// carries the partial decomposition).
Decomposition decompose_graded(const GradedBettiTable& t);

}  // namespace betticone
