#pragma once

// Finite-length bigraded modules over T = k[x, y] held concretely as
// bidegree-wise vector spaces over Q with commuting x and y maps, plus the
// Koszul-homology computation of their bigraded Betti tables.

#include "betticone/bigraded.hpp"
#include "betticone/linalg.hpp"

#include <map>
#include <optional>
#include <vector>

namespace betticone {

struct Box {
  Bidegree lo;
  Bidegree hi;

  bool contains(Bidegree a) const { return lo.divides(a) && a.divides(hi); }
  friend bool operator==(const Box&, const Box&) = default;
};

class FiniteModule {
 public:
  using DimMap = std::map<Bidegree, int>;
  using MapTable = std::map<Bidegree, Matrix>;

  FiniteModule() = default;
  /// mult_x[a] : M_a -> M_{a+(1,0)}, mult_y[a] : M_a -> M_{a+(0,1)}; missing
  /// maps are zero. Throws Error(InvalidArgument) on shape mismatches and
  /// Error(NotCommutative) if x and y do not commute.
  FiniteModule(DimMap dims, MapTable mult_x, MapTable mult_y);

  int dim(Bidegree a) const;
  Matrix x_map(Bidegree a) const;
  Matrix y_map(Bidegree a) const;
  const DimMap& dims() const noexcept { return dims_; }
  long long total_dimension() const;
  std::optional<Box> support_box() const;
  bool is_commutative() const;

  FiniteModule translated(Bidegree shift) const;

 private:
  DimMap dims_;  // positive entries only
  MapTable mult_x_;
  MapTable mult_y_;
};

/// Hom_k(M, k) with (M^v)_a = (M_{-a})^* and transposed multiplication maps.
FiniteModule matlis_dual(const FiniteModule& m);

/// Minimal generators of the monomial ideal generated by the given exponents.
std::vector<Bidegree> minimal_generators(std::vector<Bidegree> gens);

struct MonomialPair {
  std::vector<Bidegree> gens_I;
  std::vector<Bidegree> gens_J;

  /// Both lists replaced by their minimal generators, sorted.
  MonomialPair normalized() const;
};

bool contains(const std::vector<Bidegree>& ideal_gens, Bidegree monomial);

/// I/J with basis the monomials of I not in J. Throws Error(NotContained) if
/// J is not inside I, Error(NotFiniteLength) if I \ J is infinite.
FiniteModule monomial_quotient(const MonomialPair& p);

struct Term {
  Rational coefficient;
  Bidegree exponent;
};
using Polynomial = std::vector<Term>;  // empty = 0

/// Matrix of F_0 = ⊕ T(-row_degrees) <- F_1 = ⊕ T(-col_degrees). Entry (r, c)
/// must be bihomogeneous of bidegree col_degrees[c] - row_degrees[r].
struct PresentationMatrix {
  std::vector<Bidegree> row_degrees;
  std::vector<Bidegree> col_degrees;
  std::vector<std::vector<Polynomial>> entries;

  /// Throws Error(InvalidArgument) on shape or homogeneity violations.
  void validate() const;
  /// Scalar c with entry = c * x^a y^b (the bidegree is forced).
  Rational scalar(std::size_t r, std::size_t c) const;
};

/// Bidegree-wise cokernel on the given box. Throws
/// Error(NotFiniteLengthWithinBox) unless the two outermost layers vanish.
FiniteModule coker_presentation(const PresentationMatrix& m, const Box& box);
/// Auto-grown box: hull of the input degrees plus a margin of 2, doubled up to 64.
FiniteModule coker_presentation(const PresentationMatrix& m);

/// beta_{i,a} = dim H_i of M_{a-(1,1)} -> M_{a-(1,0)} ⊕ M_{a-(0,1)} -> M_a.
BigradedBettiTable bigraded_betti(const FiniteModule& m);

struct KernelGenerator {
  Bidegree degree;
  int multiplicity = 0;
  friend bool operator==(const KernelGenerator&, const KernelGenerator&) = default;
};

/// Bidegrees of minimal generators of ker(F_1 -> F_0). Throws
/// Error(KernelNotFinitelyResolvedInBox) if generators reach the outer two layers.
std::vector<KernelGenerator> kernel_generator_degrees(const PresentationMatrix& m,
                                                      const Box& box);
std::vector<KernelGenerator> kernel_generator_degrees(const PresentationMatrix& m);

}  // namespace betticone
