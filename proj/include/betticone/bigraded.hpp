#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace betticone {

/// A bidegree alpha in Z^2 for T = k[x, y], deg x = (1,0), deg y = (0,1).
struct Bidegree {
  int x = 0;
  int y = 0;

  auto operator<=>(const Bidegree&) const = default;

  Bidegree operator+(const Bidegree& o) const { return {x + o.x, y + o.y}; }
  Bidegree operator-(const Bidegree& o) const { return {x - o.x, y - o.y}; }
  /// Componentwise <=, i.e. divisibility of the corresponding monomials.
  bool divides(const Bidegree& o) const { return x <= o.x && y <= o.y; }
};

inline constexpr Bidegree kDegX{1, 0};
inline constexpr Bidegree kDegY{0, 1};

std::string to_string(const Bidegree& a);

struct BigradedKey {
  int i = 0;
  Bidegree degree;
  auto operator<=>(const BigradedKey&) const = default;
};

/// Bigraded Betti table: (i in {0,1,2}, alpha) -> beta_{i,alpha} > 0.
class BigradedBettiTable {
 public:
  using Entries = std::map<BigradedKey, std::int64_t>;

  BigradedBettiTable() = default;
  /// Drops zeros; throws Error(InvalidArgument) on negative values or i outside {0,1,2}.
  explicit BigradedBettiTable(Entries entries);

  const Entries& entries() const noexcept { return entries_; }
  bool empty() const noexcept { return entries_.empty(); }
  std::size_t size() const noexcept { return entries_.size(); }
  std::int64_t at(int i, Bidegree a) const;

  /// Entries divided by their common gcd (the canonical ray representative).
  BigradedBettiTable primitive() const;
  BigradedBettiTable translated(Bidegree shift) const;
  /// x <-> y exchange.
  BigradedBettiTable swapped() const;
  /// Smallest rectangle containing every Betti degree; requires a nonempty table.
  std::pair<Bidegree, Bidegree> bounding_box() const;

  friend bool operator==(const BigradedBettiTable&, const BigradedBettiTable&) = default;
  friend auto operator<=>(const BigradedBettiTable& a, const BigradedBettiTable& b) {
    return a.entries_ <=> b.entries_;
  }

 private:
  Entries entries_;
};

BigradedBettiTable operator+(const BigradedBettiTable& a, const BigradedBettiTable& b);

/// K_M(s1, s2) = sum_i sum_alpha (-1)^i beta_{i,alpha} s^alpha.
struct KPolynomial {
  std::map<Bidegree, std::int64_t> coefficients;  // nonzero only

  std::int64_t at(Bidegree a) const;
  friend bool operator==(const KPolynomial&, const KPolynomial&) = default;
};

KPolynomial k_polynomial(const BigradedBettiTable& t);

/// K(s1, 1) == 0 and K(1, s2) == 0, i.e. K lies in <1 - s1> ∩ <1 - s2>.
bool finite_length_check(const KPolynomial& k);

struct MatchingVertex {
  std::int64_t weight = 0;
  std::set<int> homological_support;
};

struct MatchingGraph {
  std::map<Bidegree, MatchingVertex> vertices;
  std::vector<std::pair<Bidegree, Bidegree>> x_edges;  // equal first coordinate
  std::vector<std::pair<Bidegree, Bidegree>> y_edges;  // equal second coordinate

  std::size_t x_valency(Bidegree v) const;
  std::size_t y_valency(Bidegree v) const;
  bool connected() const;
};

MatchingGraph matching_graph(const BigradedBettiTable& t);

/// Graphviz rendering: x-edges solid, y-edges dashed, labels "(a,b):weight".
std::string to_dot(const MatchingGraph& g);

enum class CertificateCondition {
  XValency,
  YValency,
  Disconnected,
  MixedHomologicalDegree,
  EmptyTable,
};

const char* to_string(CertificateCondition c);

struct CertificateFailure {
  CertificateCondition condition;
  std::vector<Bidegree> vertices;  // offending vertices, sorted
  std::vector<std::size_t> counts;  // valency per offending vertex (valency failures only)
};

/// The (1,1)-valent, connected matching-graph certificate. The certificate is
/// sufficient only, so a failed check is Inconclusive, never "not extremal".
struct CertificateVerdict {
  enum class Kind { CertifiedExtremal, Inconclusive };
  Kind kind = Kind::Inconclusive;
  std::vector<CertificateFailure> failures;

  bool certified() const noexcept { return kind == Kind::CertifiedExtremal; }
};

/// Throws Error(NotFiniteLength) if the K-polynomial test fails.
CertificateVerdict check_extremality_certificate(const BigradedBettiTable& t);

}  // namespace betticone
