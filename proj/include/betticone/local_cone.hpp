#pragma once

// Ungraded Betti vectors over an n-dimensional regular local ring. The cone
// of finite-length tables is the open cone spanned by rho_i = e_i + e_{i+1},
// i = 0..n-1, inside the hyperplane of vanishing alternating sum.

#include "betticone/rational.hpp"
#include "betticone/tables.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace betticone {

struct LocalBettiVector {
  std::vector<Rational> entries;  // beta_0..beta_n

  int dimension() const noexcept { return static_cast<int>(entries.size()) - 1; }
  friend bool operator==(const LocalBettiVector&, const LocalBettiVector&) = default;
};

struct LocalRay {
  int index = 0;  // 0 <= index <= n-1

  LocalBettiVector materialize(int n) const;
};

LocalBettiVector local_from_graded(const GradedBettiTable& t);

struct LocalVerdict {
  enum class Kind { Inside, Boundary, Outside };
  Kind kind = Kind::Outside;
  Rational alternating_sum;
  /// partial_sums[i-1] = sum_{k=i}^{n} (-1)^{k-i} beta_k for i = 1..n.
  std::vector<Rational> partial_sums;
};

const char* to_string(LocalVerdict::Kind kind);

/// Inside iff the alternating sum vanishes and every partial sum from the back
/// is strictly positive; Boundary if they are merely nonnegative with one zero.
/// Throws Error(InvalidArgument) for vectors of length < 2.
LocalVerdict is_in_local_cone(const LocalBettiVector& v);

/// Unique c with v = sum c_i rho_i. Throws Error(NotOnHyperplane) if the
/// alternating sum is nonzero.
std::vector<Rational> local_ray_coefficients(const LocalBettiVector& v);

LocalBettiVector combine_rays(const std::vector<Rational>& coefficients);

/// b(d^{i,j}) with d_k = kj for k <= i and (k-1)j + 1 for k > i, scaled so
/// entry i equals 1. Throws Error(DegenerateSequence) for j < 2.
LocalBettiVector limit_table(int i, int j, int n);

/// max_k |a_k - b_k|.
Rational sup_distance(const LocalBettiVector& a, const LocalBettiVector& b);

/// Writes an Inside vector as a sum of two Inside vectors that are not
/// proportional to it. Empty when no such split exists (n = 1 or not Inside).
std::optional<std::pair<LocalBettiVector, LocalBettiVector>> split_inside(
    const LocalBettiVector& v);

}  // namespace betticone
