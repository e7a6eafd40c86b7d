#include "betticone/bs_cone.hpp"

#include <algorithm>
#include <sstream>

namespace betticone {

std::optional<DegreeSequence> is_pure(const GradedBettiTable& t) {
  if (t.empty()) return std::nullopt;
  std::vector<int> degrees;
  int expected = 0;
  for (const auto& [key, value] : t.entries()) {
    // Entries are ordered by (i, j); a repeated i means two internal degrees.
    if (key.i != expected) return std::nullopt;
    degrees.push_back(key.j);
    ++expected;
  }
  for (std::size_t k = 1; k < degrees.size(); ++k) {
    if (degrees[k] <= degrees[k - 1]) return std::nullopt;
  }
  return DegreeSequence(std::move(degrees));
}

GradedBettiTable Decomposition::resum() const {
  GradedBettiTable sum = residual;
  for (const DecompositionPart& part : parts) {
    sum = sum + scaled(part.pure.to_table(residual.nvars()), part.coefficient);
  }
  return sum;
}

namespace {

std::string describe(const std::vector<int>& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t k = 0; k < v.size(); ++k) os << (k ? "," : "") << v[k];
  os << ')';
  return os.str();
}

}  // namespace

Decomposition decompose_graded(const GradedBettiTable& t) {
  Decomposition result{{}, t, 0};
  if (!check_hk_equations(t)) {
    throw DecompositionStuck("table fails the Herzog-Kuhl equations; not a finite-length candidate",
                             std::move(result));
  }
  if (!t.empty() && t.projective_dimension() != t.nvars()) {
    throw DecompositionStuck("projective dimension " + std::to_string(*t.projective_dimension()) +
                                 " differs from nvars " + std::to_string(t.nvars()),
                             std::move(result));
  }

  GradedBettiTable::Entries current = t.entries();
  while (!current.empty()) {
    GradedBettiTable table(t.nvars(), current);
    const int pd = *table.projective_dimension();
    if (pd != t.nvars()) {
      result.residual = table;
      throw DecompositionStuck("greedy chain stuck: residual has projective dimension " +
                                   std::to_string(pd),
                               std::move(result));
    }
    std::vector<int> bottom(static_cast<std::size_t>(pd + 1));
    std::vector<bool> seen(bottom.size(), false);
    for (const auto& [key, value] : current) {
      if (!seen[static_cast<std::size_t>(key.i)]) {
        bottom[static_cast<std::size_t>(key.i)] = key.j;
        seen[static_cast<std::size_t>(key.i)] = true;
      }
    }
    if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
      result.residual = table;
      throw DecompositionStuck("greedy chain stuck: residual has an empty column",
                               std::move(result));
    }
    const auto descent = std::adjacent_find(bottom.begin(), bottom.end(),
                                            [](int a, int b) { return b <= a; });
    if (descent != bottom.end()) {
      result.residual = table;
      throw DecompositionStuck("greedy chain stuck: bottom strand " + describe(bottom) +
                                   " is not strictly increasing",
                               std::move(result));
    }

    PureTable pure = hk_pure_table(DegreeSequence(bottom));
    Rational c;
    for (std::size_t k = 0; k < bottom.size(); ++k) {
      const Rational ratio =
          current.at({static_cast<int>(k), bottom[k]}) / Rational(pure.multiplicities[k]);
      if (k == 0 || ratio < c) c = ratio;
    }
    for (std::size_t k = 0; k < bottom.size(); ++k) {
      const BettiKey key{static_cast<int>(k), bottom[k]};
      Rational& slot = current.at(key);
      slot -= c * pure.multiplicities[k];
      if (slot == 0) current.erase(key);
    }
    result.parts.push_back({c, std::move(pure)});
    ++result.iterations;
  }
  result.residual = GradedBettiTable(t.nvars());
  return result;
}

}  // namespace betticone
