#include "betticone/ray_enumeration.hpp"

#include "betticone/error.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <sstream>

namespace betticone {

int max_box_bound() {
  if (const char* env = std::getenv("BETTICONE_MAX_BOX")) {
    char* end = nullptr;
    const long value = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && value >= 0 && value <= 1000) return static_cast<int>(value);
  }
  return 6;
}

namespace {

Polynomial monomial(const Rational& c, int a, int b) {
  if (c == 0) return {};
  return {Term{c, {a, b}}};
}

std::string describe(const std::vector<Bidegree>& gens) {
  std::ostringstream os;
  os << '<';
  for (std::size_t k = 0; k < gens.size(); ++k) os << (k ? "," : "") << to_string(gens[k]);
  os << '>';
  return os.str();
}

// Every monomial ideal with minimal generators in [0,B1] x [0,B2], as a
// staircase: threshold[a] = least b with x^a y^b in the ideal (B2+1 = none),
// nonincreasing in a.
std::vector<std::vector<Bidegree>> staircases(Bidegree bound) {
  std::vector<std::vector<Bidegree>> out;
  std::vector<int> threshold(static_cast<std::size_t>(bound.x + 1));
  auto recurse = [&](auto&& self, int a, int ceiling) -> void {
    if (a > bound.x) {
      std::vector<Bidegree> gens;
      int previous = bound.y + 1;
      for (int col = 0; col <= bound.x; ++col) {
        const int b = threshold[static_cast<std::size_t>(col)];
        if (b < previous) gens.push_back({col, b});
        previous = b;
      }
      out.push_back(std::move(gens));
      return;
    }
    for (int b = 0; b <= ceiling; ++b) {
      threshold[static_cast<std::size_t>(a)] = b;
      self(self, a + 1, b);
    }
  };
  recurse(recurse, 0, bound.y + 1);
  std::sort(out.begin(), out.end());
  return out;
}

bool finite_quotient(const std::vector<Bidegree>& I, const std::vector<Bidegree>& J) {
  if (I.empty()) return false;
  for (const Bidegree& g : I) {
    const bool x_ok = std::any_of(J.begin(), J.end(), [&](const Bidegree& h) { return h.y <= g.y; });
    const bool y_ok = std::any_of(J.begin(), J.end(), [&](const Bidegree& h) { return h.x <= g.x; });
    if (!x_ok || !y_ok) return false;
  }
  return std::all_of(J.begin(), J.end(), [&](const Bidegree& j) { return contains(I, j); });
}

bool fits(const BigradedBettiTable& t, Bidegree bound) {
  const auto [lo, hi] = t.bounding_box();
  return lo.x >= 0 && lo.y >= 0 && hi.x <= bound.x && hi.y <= bound.y;
}

}  // namespace

PresentationMatrix heart_shape_presentation() {
  PresentationMatrix m;
  m.row_degrees = {{1, 0}, {0, 1}};
  m.col_degrees = {{3, 0}, {2, 1}, {1, 2}, {0, 3}};
  m.entries = {
      {monomial(1, 2, 0), monomial(1, 1, 1), monomial(1, 0, 2), {}},
      {{}, monomial(1, 2, 0), monomial(1, 1, 1), monomial(1, 0, 2)},
  };
  return m;
}

PresentationMatrix pacman_presentation(const Rational& a1, const Rational& a2) {
  PresentationMatrix m;
  m.row_degrees = {{0, 0}, {1, 1}};
  m.col_degrees = {{3, 0}, {2, 1}, {1, 3}, {0, 2}};
  m.entries = {
      {monomial(1, 3, 0), monomial(a1, 2, 1), monomial(a2, 1, 3), monomial(1, 0, 2)},
      {{}, monomial(-1, 1, 0), monomial(1, 0, 2), {}},
  };
  return m;
}

std::vector<CatalogueSeed> seed_catalogue() {
  FiniteModule heart = coker_presentation(heart_shape_presentation());
  FiniteModule dual = matlis_dual(heart);
  return {{"heart-shape", std::move(heart)}, {"heart-shape dual", std::move(dual)}};
}

RayEnumeration enumerate_box_rays(Bidegree bound) {
  if (bound.x < 0 || bound.y < 0) {
    throw Error(ErrorCode::InvalidArgument, "box bound must be nonnegative");
  }
  const int cap = max_box_bound();
  if (bound.x > cap || bound.y > cap) {
    throw Error(ErrorCode::BoundTooLarge, "box bound exceeds " + std::to_string(cap) +
                                              " (set BETTICONE_MAX_BOX to override)");
  }

  RayEnumeration result;
  result.bound = bound;
  std::map<BigradedBettiTable, BoxRay> found;

  auto consider = [&](const BigradedBettiTable& table, const std::string& witness, bool monomial) {
    if (table.empty() || !fits(table, bound)) return;
    if (!check_extremality_certificate(table).certified()) return;
    auto [it, inserted] = found.try_emplace(table.primitive());
    BoxRay& ray = it->second;
    if (inserted) {
      ray.table = it->first;
      ray.witness = witness;
    }
    (monomial ? ray.from_monomial : ray.from_catalogue) = true;
  };

  const auto ideals = staircases(bound);
  for (const auto& I : ideals) {
    for (const auto& J : ideals) {
      if (!finite_quotient(I, J)) continue;
      ++result.modules_examined;
      const BigradedBettiTable table = bigraded_betti(monomial_quotient({I, J}));
      consider(table, "I=" + describe(I) + " J=" + describe(J), true);
    }
  }

  for (const CatalogueSeed& seed : seed_catalogue()) {
    ++result.modules_examined;
    const BigradedBettiTable table = bigraded_betti(seed.module);
    if (table.empty()) continue;
    const Bidegree lo = table.bounding_box().first;
    const BigradedBettiTable anchored = table.translated(Bidegree{0, 0} - lo);
    const Bidegree extent = anchored.bounding_box().second;
    for (int sx = 0; sx + extent.x <= bound.x; ++sx) {
      for (int sy = 0; sy + extent.y <= bound.y; ++sy) {
        consider(anchored.translated({sx, sy}),
                 seed.name + " shifted by " + to_string(Bidegree{sx, sy} - lo), false);
      }
    }
  }

  std::set<BigradedBettiTable> swap_classes;
  for (auto& [table, ray] : found) {
    if (ray.from_monomial) ++result.monomial_rays;
    if (!ray.from_monomial && ray.from_catalogue) ++result.catalogue_only_rays;
    swap_classes.insert(std::min(table, table.swapped().primitive()));
    result.rays.push_back(std::move(ray));
  }
  result.swap_classes = swap_classes.size();
  return result;
}

}  // namespace betticone
