#include "betticone/local_cone.hpp"

#include "betticone/error.hpp"

#include <string>

namespace betticone {

LocalBettiVector LocalRay::materialize(int n) const {
  if (index < 0 || index >= n) {
    throw Error(ErrorCode::InvalidArgument, "ray index outside [0, n-1]");
  }
  LocalBettiVector v{std::vector<Rational>(static_cast<std::size_t>(n + 1), Rational(0))};
  v.entries[static_cast<std::size_t>(index)] = 1;
  v.entries[static_cast<std::size_t>(index + 1)] = 1;
  return v;
}

LocalBettiVector local_from_graded(const GradedBettiTable& t) {
  LocalBettiVector v{std::vector<Rational>(static_cast<std::size_t>(t.nvars() + 1), Rational(0))};
  for (const auto& [key, value] : t.entries()) v.entries[static_cast<std::size_t>(key.i)] += value;
  return v;
}

const char* to_string(LocalVerdict::Kind kind) {
  switch (kind) {
    case LocalVerdict::Kind::Inside: return "INSIDE";
    case LocalVerdict::Kind::Boundary: return "BOUNDARY";
    case LocalVerdict::Kind::Outside: return "OUTSIDE";
  }
  return "?";
}

namespace {

Rational alternating_sum(const LocalBettiVector& v) {
  Rational sum = 0;
  for (std::size_t k = 0; k < v.entries.size(); ++k) {
    if (k % 2 == 0) {
      sum += v.entries[k];
    } else {
      sum -= v.entries[k];
    }
  }
  return sum;
}

// back[i] = sum_{k=i}^{n} (-1)^{k-i} beta_k, computed from the back.
std::vector<Rational> back_sums(const LocalBettiVector& v) {
  std::vector<Rational> back(v.entries.size() + 1, Rational(0));
  for (std::size_t k = v.entries.size(); k-- > 0;) back[k] = v.entries[k] - back[k + 1];
  return back;
}

}  // namespace

LocalVerdict is_in_local_cone(const LocalBettiVector& v) {
  if (v.entries.size() < 2) {
    throw Error(ErrorCode::InvalidArgument, "local Betti vector needs length at least 2");
  }
  LocalVerdict verdict;
  verdict.alternating_sum = alternating_sum(v);
  const std::vector<Rational> back = back_sums(v);
  bool all_positive = true;
  bool all_nonnegative = true;
  for (std::size_t i = 1; i < v.entries.size(); ++i) {
    verdict.partial_sums.push_back(back[i]);
    if (back[i] <= 0) all_positive = false;
    if (back[i] < 0) all_nonnegative = false;
  }
  if (verdict.alternating_sum != 0 || !all_nonnegative) {
    verdict.kind = LocalVerdict::Kind::Outside;
  } else {
    verdict.kind = all_positive ? LocalVerdict::Kind::Inside : LocalVerdict::Kind::Boundary;
  }
  return verdict;
}

std::vector<Rational> local_ray_coefficients(const LocalBettiVector& v) {
  if (v.entries.size() < 2) {
    throw Error(ErrorCode::InvalidArgument, "local Betti vector needs length at least 2");
  }
  if (alternating_sum(v) != 0) {
    throw Error(ErrorCode::NotOnHyperplane, "alternating sum is nonzero");
  }
  const std::vector<Rational> back = back_sums(v);
  // c_i = sum_{k=i+1}^{n} (-1)^{k-i-1} beta_k.
  return std::vector<Rational>(back.begin() + 1, back.end() - 1);
}

LocalBettiVector combine_rays(const std::vector<Rational>& coefficients) {
  LocalBettiVector v{std::vector<Rational>(coefficients.size() + 1, Rational(0))};
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    v.entries[i] += coefficients[i];
    v.entries[i + 1] += coefficients[i];
  }
  return v;
}

LocalBettiVector limit_table(int i, int j, int n) {
  if (n < 1 || i < 0 || i > n - 1) {
    throw Error(ErrorCode::InvalidArgument, "limit_table needs 0 <= i <= n-1");
  }
  if (j < 2) {
    throw Error(ErrorCode::DegenerateSequence, "limit sequences need j >= 2");
  }
  std::vector<int> d;
  for (int k = 0; k <= n; ++k) d.push_back(k <= i ? k * j : (k - 1) * j + 1);
  const PureTable pure = hk_pure_table(DegreeSequence(std::move(d)));
  const Rational pivot(pure.multiplicities[static_cast<std::size_t>(i)]);
  LocalBettiVector v;
  for (const Integer& m : pure.multiplicities) v.entries.push_back(Rational(m) / pivot);
  return v;
}

Rational sup_distance(const LocalBettiVector& a, const LocalBettiVector& b) {
  if (a.entries.size() != b.entries.size()) {
    throw Error(ErrorCode::InvalidArgument, "vectors of different length");
  }
  Rational best = 0;
  for (std::size_t k = 0; k < a.entries.size(); ++k) {
    Rational diff = a.entries[k] - b.entries[k];
    if (diff < 0) diff = -diff;
    if (diff > best) best = diff;
  }
  return best;
}

std::optional<std::pair<LocalBettiVector, LocalBettiVector>> split_inside(
    const LocalBettiVector& v) {
  if (v.entries.size() < 3) return std::nullopt;
  if (is_in_local_cone(v).kind != LocalVerdict::Kind::Inside) return std::nullopt;
  std::vector<Rational> c = local_ray_coefficients(v);
  // Move weight between rho_0 and every other ray: the two halves then have
  // different coefficient ratios, hence are not proportional to v.
  std::vector<Rational> first(c.size());
  std::vector<Rational> second(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    const Rational share = i == 0 ? Rational(3, 4) : Rational(1, 4);
    first[i] = c[i] * share;
    second[i] = c[i] - first[i];
  }
  return std::make_pair(combine_rays(first), combine_rays(second));
}

}  // namespace betticone
