#include "betticone/es_construct.hpp"

#include "betticone/error.hpp"

#include <algorithm>
#include <string>

namespace betticone {

LineBundleCohomology line_bundle_cohomology(int m, int e) {
  if (m < 0) {
    throw Error(ErrorCode::InvalidArgument, "projective dimension must be nonnegative");
  }
  if (m == 0) return {1, 0};
  if (e >= 0) return {binomial(e + m, m), 0};
  if (e <= -m - 1) return {0, binomial(-e - 1, m)};
  return {0, 0};
}

ESPlan es_plan(const DegreeSequence& d) {
  std::vector<int> shifted(d.values());
  const int shift = d.front();
  for (int& v : shifted) v -= shift;
  DegreeSequence translated(std::move(shifted));

  ESPlan plan{translated, shift, {}, {}, translated.back(), 0};
  const int n = translated.length();
  for (int i = 1; i <= n; ++i) {
    const int gap = translated[i] - translated[i - 1] - 1;
    plan.gaps.push_back(gap);
    if (gap > 0) plan.factors.push_back({i, gap, translated[i - 1]});
  }
  plan.ambient_dim_check = plan.ambient_vars - n;
  return plan;
}

namespace {

bool vanishes(const ProjectiveFactor& f, int twist) {
  return twist >= -f.dimension && twist <= -1;
}

}  // namespace

TwistTable twist_table(const ESPlan& p) {
  TwistTable table;
  const auto& d = p.degrees.values();
  for (int t = 0; t <= p.ambient_vars; ++t) {
    TwistRow row;
    row.koszul_index = t;
    row.ambient_degree = -t;
    row.survivor = std::binary_search(d.begin(), d.end(), t);
    for (std::size_t f = 0; f < p.factors.size(); ++f) {
      const int twist = p.factors[f].twist - t;
      row.twists.push_back(twist);
      if (!row.vanishing_factor && vanishes(p.factors[f], twist)) row.vanishing_factor = f;
    }
    if (!row.survivor && !row.vanishing_factor) {
      throw Error(ErrorCode::InternalInconsistency,
                  "collapsed Koszul term " + std::to_string(t) + " has no vanishing factor");
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

PureTable es_ranks(const ESPlan& p) {
  const auto& d = p.degrees.values();
  std::vector<Integer> ranks;
  for (int dk : d) {
    Integer rank = binomial(p.ambient_vars, dk);
    for (const ProjectiveFactor& f : p.factors) {
      const int twist = f.twist - dk;
      if (vanishes(f, twist)) {
        throw Error(ErrorCode::CollapsedSurvivor,
                    "surviving degree " + std::to_string(dk) + " meets a vanishing twist on P^" +
                        std::to_string(f.dimension));
      }
      const LineBundleCohomology h = line_bundle_cohomology(f.dimension, twist);
      rank *= twist >= 0 ? h.h0 : h.top;
    }
    ranks.push_back(std::move(rank));
  }
  std::vector<int> original(d);
  for (int& v : original) v += p.shift;
  return PureTable{DegreeSequence(std::move(original)), std::move(ranks)};
}

std::vector<CollapsedIndex> collapse_step(std::span<const int> twists, int m, int k) {
  const int count = static_cast<int>(twists.size());
  for (int i = 1; i < count; ++i) {
    if (twists[i] <= twists[i - 1]) {
      throw Error(ErrorCode::InvalidArgument, "twists must be strictly increasing");
    }
  }
  if (m < 0) throw Error(ErrorCode::InvalidArgument, "m must be nonnegative");

  std::vector<CollapsedIndex> out;
  if (m == 0) {
    for (int i = 0; i < count; ++i) out.push_back({i, i, CohomologyKind::H0});
    return out;
  }
  // k ranges over -1..N-m where N = count - 1.
  if (k < -1 || k > count - 1 - m) {
    throw Error(ErrorCode::NoCollapsibleWindow, "window position outside the complex");
  }
  for (int s = 1; s <= m; ++s) {
    if (twists[k + s] != s) {
      throw Error(ErrorCode::NoCollapsibleWindow,
                  "twists at positions " + std::to_string(k + 1) + ".." + std::to_string(k + m) +
                      " are not 1.." + std::to_string(m));
    }
  }
  for (int i = 0; i <= k; ++i) out.push_back({i, i, CohomologyKind::H0});
  for (int i = k + m + 1; i < count; ++i) out.push_back({i, i - m, CohomologyKind::Top});
  return out;
}

std::vector<int> iterate_collapses(const ESPlan& p, std::span<const std::size_t> order) {
  std::vector<int> alive;
  for (int t = 0; t <= p.ambient_vars; ++t) alive.push_back(t);

  for (std::size_t f : order) {
    if (f >= p.factors.size()) {
      throw Error(ErrorCode::InvalidArgument, "factor index out of range");
    }
    const ProjectiveFactor& factor = p.factors[f];
    // The term of Koszul degree t carries O(d_{i-1} - t) = O(-e) with e = t - d_{i-1}.
    std::vector<int> e;
    for (int t : alive) e.push_back(t - factor.twist);
    const auto first = std::find(e.begin(), e.end(), 1);
    if (first == e.end()) {
      throw Error(ErrorCode::NoCollapsibleWindow, "no twist 1 left for this factor");
    }
    const int k = static_cast<int>(first - e.begin()) - 1;
    std::vector<int> next(alive.size() - static_cast<std::size_t>(factor.dimension));
    for (const CollapsedIndex& c : collapse_step(e, factor.dimension, k)) {
      next[static_cast<std::size_t>(c.new_index)] = alive[static_cast<std::size_t>(c.old_index)];
    }
    alive = std::move(next);
  }
  return alive;
}

}  // namespace betticone
