#pragma once

#include "betticone/bigraded.hpp"
#include "betticone/module_engine.hpp"

#include <string>
#include <vector>

namespace betticone {

/// Largest admissible enumeration bound; BETTICONE_MAX_BOX overrides the default 6.
int max_box_bound();

/// The heart-shaped 2x4 presentation: rows (1,0),(0,1); columns
/// (3,0),(2,1),(1,2),(0,3); entries x^2, xy, y^2, 0 / 0, x^2, xy, y^2.
PresentationMatrix heart_shape_presentation();

/// The pac-man matrix with free scalars a1, a2: rows (0,0),(1,1); columns
/// (3,0),(2,1),(1,3),(0,2); entries x^3, a1 x^2y, a2 xy^3, y^2 / 0, -x, y^2, 0.
PresentationMatrix pacman_presentation(const Rational& a1, const Rational& a2);

struct CatalogueSeed {
  std::string name;
  FiniteModule module;
};

/// Non-monomial seeds: the heart-shape cokernel and its Matlis dual.
std::vector<CatalogueSeed> seed_catalogue();

struct BoxRay {
  BigradedBettiTable table;        // primitive representative
  std::string witness;             // first module (in enumeration order) realizing it
  bool from_monomial = false;
  bool from_catalogue = false;
};

struct RayEnumeration {
  Bidegree bound;
  std::vector<BoxRay> rays;  // sorted by table
  std::size_t monomial_rays = 0;        // rays realized by some monomial quotient
  std::size_t catalogue_only_rays = 0;  // rays realized only by catalogue seeds
  std::size_t swap_classes = 0;         // rays up to the x <-> y exchange
  std::size_t modules_examined = 0;
};

/// Certified-extremal rays whose Betti support lies in [0,B1] x [0,B2], from
/// all monomial quotients I/J plus every translate of the catalogue seeds,
/// deduplicated up to positive scalar. Throws Error(BoundTooLarge) above
/// max_box_bound().
RayEnumeration enumerate_box_rays(Bidegree bound);

}  // namespace betticone
