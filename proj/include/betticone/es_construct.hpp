#pragma once

// Degree bookkeeping for the Eisenbud-Schreyer pushforward construction of a
// pure resolution of type d: a Koszul complex on d_n multilinear forms over
// Spec(S') x P^{m_1} x ... x P^{m_n}, twisted so that every term of degree
// strictly between d_{i-1} and d_i meets a line bundle on P^{m_i} without
// cohomology. Only ranks, twists and degrees are computed here.

#include "betticone/rational.hpp"
#include "betticone/tables.hpp"

#include <optional>
#include <span>
#include <vector>

namespace betticone {

struct LineBundleCohomology {
  Integer h0;
  Integer top;  // h^m

  friend bool operator==(const LineBundleCohomology&, const LineBundleCohomology&) = default;
};

/// (h^0, h^m) of O(e) on P^m. For m = 0 the point has h^0 = 1 and top is reported as 0.
LineBundleCohomology line_bundle_cohomology(int m, int e);

struct ProjectiveFactor {
  int gap_index = 0;  // i in 1..n
  int dimension = 0;  // m_i > 0
  int twist = 0;      // d_{i-1}: factor i of the Koszul term of degree t is O(d_{i-1} - t)

  friend bool operator==(const ProjectiveFactor&, const ProjectiveFactor&) = default;
};

struct ESPlan {
  DegreeSequence degrees;  // translated so that d_0 = 0
  int shift = 0;           // original d_0
  std::vector<int> gaps;   // m_i = d_i - d_{i-1} - 1, i = 1..n
  std::vector<ProjectiveFactor> factors;  // omits m_i = 0
  int ambient_vars = 0;    // d_n, the number of variables of S'
  int ambient_dim_check = 0;  // d_n - n = dim of the product of projective spaces
};

ESPlan es_plan(const DegreeSequence& d);

struct TwistRow {
  int koszul_index = 0;       // t
  int ambient_degree = 0;     // -t
  std::vector<int> twists;    // per factor: d_{i-1} - t
  bool survivor = false;
  std::optional<std::size_t> vanishing_factor;  // index into plan.factors for collapsed rows
};

struct TwistTable {
  std::vector<TwistRow> rows;  // t = 0..d_n
};

/// Throws Error(InternalInconsistency) if a collapsed row has no vanishing factor.
TwistTable twist_table(const ESPlan& p);

/// Ranks beta_k = C(d_n, d_k) * prod_i h(P^{m_i}, O(d_{i-1} - d_k)), not normalized.
/// Degrees are the plan's degrees translated back by the plan shift.
PureTable es_ranks(const ESPlan& p);

enum class CohomologyKind { H0, Top };

struct CollapsedIndex {
  int old_index = 0;
  int new_index = 0;
  CohomologyKind cohomology = CohomologyKind::H0;

  friend bool operator==(const CollapsedIndex&, const CollapsedIndex&) = default;
};

/// One pushforward along P^m of a complex with terms G_i ⊠ O(-e_i). Requires
/// (e_{k+1}, ..., e_{k+m}) = (1, ..., m); returns the surviving indices with
/// their new positions. Throws Error(NoCollapsibleWindow) otherwise.
std::vector<CollapsedIndex> collapse_step(std::span<const int> twists, int m, int k);

/// Pushes forward along the plan's factors in the given order (indices into
/// plan.factors) starting from the Koszul terms 0..d_n, and returns the
/// original Koszul indices that survive.
std::vector<int> iterate_collapses(const ESPlan& p, std::span<const std::size_t> order);

}  // namespace betticone
