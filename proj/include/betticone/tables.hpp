#pragma once

#include "betticone/rational.hpp"

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <vector>

namespace betticone {

class BigradedBettiTable;

struct BettiKey {
  int i = 0;  // homological degree
  int j = 0;  // internal degree
  auto operator<=>(const BettiKey&) const = default;
};

/// Graded Betti table over S = k[x_1..x_n]: a sparse map (i, j) -> beta_{i,j}.
///
/// Entries are nonnegative rationals so that cone elements (positive
/// combinations of tables) are representable. Zero entries are never stored,
/// so equality is plain map equality.
class GradedBettiTable {
 public:
  using Entries = std::map<BettiKey, Rational>;

  explicit GradedBettiTable(int nvars);
  /// Throws Error(InvalidArgument) on negative entries or i outside [0, nvars].
  GradedBettiTable(int nvars, Entries entries);

  int nvars() const noexcept { return nvars_; }
  const Entries& entries() const noexcept { return entries_; }
  bool empty() const noexcept { return entries_.empty(); }
  std::size_t size() const noexcept { return entries_.size(); }

  Rational at(int i, int j) const;
  /// Largest homological degree carrying a nonzero entry.
  std::optional<int> projective_dimension() const;

  friend bool operator==(const GradedBettiTable&, const GradedBettiTable&) = default;

 private:
  int nvars_;
  Entries entries_;
};

/// Entrywise sum; both tables must have the same nvars.
GradedBettiTable operator+(const GradedBettiTable& a, const GradedBettiTable& b);
GradedBettiTable scaled(const GradedBettiTable& t, const Rational& factor);
/// True iff a = c * b for some rational c > 0 (cross-multiplication, no division).
bool proportional(const GradedBettiTable& a, const GradedBettiTable& b);

/// Strictly increasing d_0 < d_1 < ... < d_n.
class DegreeSequence {
 public:
  /// Throws Error(NonIncreasingDegrees) unless strictly increasing and nonempty.
  explicit DegreeSequence(std::vector<int> degrees);

  const std::vector<int>& values() const noexcept { return degrees_; }
  std::size_t size() const noexcept { return degrees_.size(); }
  /// n, the length of the corresponding resolution.
  int length() const noexcept { return static_cast<int>(degrees_.size()) - 1; }
  int operator[](std::size_t k) const { return degrees_[k]; }
  int front() const { return degrees_.front(); }
  int back() const { return degrees_.back(); }

  friend bool operator==(const DegreeSequence&, const DegreeSequence&) = default;

 private:
  std::vector<int> degrees_;
};

struct PureTable {
  DegreeSequence degrees;
  std::vector<Integer> multiplicities;

  /// Table over nvars variables; nvars defaults to the length n of the sequence.
  GradedBettiTable to_table(std::optional<int> nvars = std::nullopt) const;

  friend bool operator==(const PureTable&, const PureTable&) = default;
};

bool proportional(const PureTable& a, const PureTable& b);

/// Minimal positive integral multiplicities of a pure resolution of type d,
/// proportional to 1 / prod_{j != i} |d_i - d_j|, normalized to gcd 1.
PureTable hk_pure_table(const DegreeSequence& d);

/// sum_{i,j} (-1)^i j^k beta_{i,j} == 0 for all 0 <= k < nvars.
bool check_hk_equations(const GradedBettiTable& t);

struct HilbertNumerator {
  std::map<int, Integer> coefficients;  // nonzero only

  bool is_zero() const noexcept { return coefficients.empty(); }
  Integer at(int degree) const;
  friend bool operator==(const HilbertNumerator&, const HilbertNumerator&) = default;
};

HilbertNumerator operator+(const HilbertNumerator& a, const HilbertNumerator& b);

/// numerator == scale * sum_{i,j} (-1)^i beta_{i,j} t^j, where scale is the
/// least common denominator of the table entries (1 for integral tables).
struct ScaledNumerator {
  HilbertNumerator numerator;
  Integer scale;
};

ScaledNumerator hilbert_numerator(const GradedBettiTable& t);

/// True iff (1 - t)^nvars divides the (Laurent) numerator over Z.
bool is_finite_length_numerator(const HilbertNumerator& h, int nvars);

/// Total-degree coarsening of a bigraded table: j = alpha_1 + alpha_2, nvars = 2.
GradedBettiTable coarsen(const BigradedBettiTable& bt);

}  // namespace betticone
