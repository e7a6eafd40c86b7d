#include "betticone/tables.hpp"

#include "betticone/bigraded.hpp"
#include "betticone/error.hpp"

#include <algorithm>
#include <string>

namespace betticone {

GradedBettiTable::GradedBettiTable(int nvars) : nvars_(nvars) {
  if (nvars < 0) {
    throw Error(ErrorCode::InvalidArgument, "nvars must be nonnegative");
  }
}

GradedBettiTable::GradedBettiTable(int nvars, Entries entries) : GradedBettiTable(nvars) {
  for (auto& [key, value] : entries) {
    if (value < 0) {
      throw Error(ErrorCode::InvalidArgument, "Betti entries must be nonnegative");
    }
    if (value == 0) continue;
    if (key.i < 0 || key.i > nvars_) {
      throw Error(ErrorCode::InvalidArgument,
                  "homological degree " + std::to_string(key.i) + " outside [0, " +
                      std::to_string(nvars_) + "]");
    }
    entries_.emplace(key, std::move(value));
  }
}

Rational GradedBettiTable::at(int i, int j) const {
  const auto it = entries_.find({i, j});
  return it == entries_.end() ? Rational(0) : it->second;
}

std::optional<int> GradedBettiTable::projective_dimension() const {
  std::optional<int> pd;
  for (const auto& [key, value] : entries_) {
    if (!pd || key.i > *pd) pd = key.i;
  }
  return pd;
}

GradedBettiTable operator+(const GradedBettiTable& a, const GradedBettiTable& b) {
  if (a.nvars() != b.nvars()) {
    throw Error(ErrorCode::InvalidArgument, "cannot add tables over different rings");
  }
  GradedBettiTable::Entries sum = a.entries();
  for (const auto& [key, value] : b.entries()) sum[key] += value;
  return GradedBettiTable(a.nvars(), std::move(sum));
}

GradedBettiTable scaled(const GradedBettiTable& t, const Rational& factor) {
  if (factor < 0) {
    throw Error(ErrorCode::InvalidArgument, "scale factor must be nonnegative");
  }
  GradedBettiTable::Entries out;
  for (const auto& [key, value] : t.entries()) out.emplace(key, value * factor);
  return GradedBettiTable(t.nvars(), std::move(out));
}

bool proportional(const GradedBettiTable& a, const GradedBettiTable& b) {
  if (a.nvars() != b.nvars() || a.size() != b.size()) return false;
  if (a.empty()) return true;
  const Rational& a0 = a.entries().begin()->second;
  const Rational& b0 = b.entries().begin()->second;
  auto ita = a.entries().begin();
  auto itb = b.entries().begin();
  for (; ita != a.entries().end(); ++ita, ++itb) {
    if (ita->first != itb->first) return false;
    if (ita->second * b0 != itb->second * a0) return false;
  }
  return true;
}

DegreeSequence::DegreeSequence(std::vector<int> degrees) : degrees_(std::move(degrees)) {
  if (degrees_.empty()) {
    throw Error(ErrorCode::NonIncreasingDegrees, "degree sequence must be nonempty");
  }
  for (std::size_t k = 1; k < degrees_.size(); ++k) {
    if (degrees_[k] <= degrees_[k - 1]) {
      throw Error(ErrorCode::NonIncreasingDegrees, "degrees must be strictly increasing");
    }
  }
}

GradedBettiTable PureTable::to_table(std::optional<int> nvars) const {
  const int n = nvars.value_or(degrees.length());
  GradedBettiTable::Entries entries;
  for (std::size_t k = 0; k < degrees.size(); ++k) {
    entries.emplace(BettiKey{static_cast<int>(k), degrees[k]}, Rational(multiplicities[k]));
  }
  return GradedBettiTable(n, std::move(entries));
}

bool proportional(const PureTable& a, const PureTable& b) {
  if (!(a.degrees == b.degrees)) return false;
  for (std::size_t k = 0; k < a.multiplicities.size(); ++k) {
    if (a.multiplicities[k] * b.multiplicities[0] != b.multiplicities[k] * a.multiplicities[0]) {
      return false;
    }
  }
  return true;
}

PureTable hk_pure_table(const DegreeSequence& d) {
  const std::size_t size = d.size();
  std::vector<Integer> products(size, Integer(1));
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = 0; j < size; ++j) {
      if (i != j) products[i] *= std::abs(d[i] - d[j]);
    }
  }
  Integer common = 1;
  for (const Integer& p : products) common = lcm(common, p);

  std::vector<Integer> mult(size);
  Integer g = 0;
  for (std::size_t i = 0; i < size; ++i) {
    mult[i] = common / products[i];
    g = gcd(g, mult[i]);
  }
  for (Integer& m : mult) m /= g;
  return PureTable{d, std::move(mult)};
}

bool check_hk_equations(const GradedBettiTable& t) {
  for (int k = 0; k < t.nvars(); ++k) {
    Rational moment = 0;
    for (const auto& [key, value] : t.entries()) {
      Integer power = boost::multiprecision::pow(Integer(key.j), static_cast<unsigned>(k));
      Rational term = value * power;
      if (key.i % 2 == 0) {
        moment += term;
      } else {
        moment -= term;
      }
    }
    if (moment != 0) return false;
  }
  return true;
}

Integer HilbertNumerator::at(int degree) const {
  const auto it = coefficients.find(degree);
  return it == coefficients.end() ? Integer(0) : it->second;
}

HilbertNumerator operator+(const HilbertNumerator& a, const HilbertNumerator& b) {
  HilbertNumerator out = a;
  for (const auto& [deg, c] : b.coefficients) {
    Integer& slot = out.coefficients[deg];
    slot += c;
    if (slot == 0) out.coefficients.erase(deg);
  }
  return out;
}

ScaledNumerator hilbert_numerator(const GradedBettiTable& t) {
  Integer scale = 1;
  for (const auto& [key, value] : t.entries()) {
    scale = lcm(scale, boost::multiprecision::denominator(value));
  }
  std::map<int, Rational> acc;
  for (const auto& [key, value] : t.entries()) {
    if (key.i % 2 == 0) {
      acc[key.j] += value;
    } else {
      acc[key.j] -= value;
    }
  }
  HilbertNumerator h;
  for (const auto& [deg, c] : acc) {
    const Rational s = c * scale;
    if (s != 0) h.coefficients.emplace(deg, boost::multiprecision::numerator(s));
  }
  return ScaledNumerator{std::move(h), scale};
}

bool is_finite_length_numerator(const HilbertNumerator& h, int nvars) {
  if (h.is_zero()) return true;
  // Dense coefficients of t^{-low} * h, constant term first.
  const int low = h.coefficients.begin()->first;
  const int high = h.coefficients.rbegin()->first;
  std::vector<Integer> coeffs(static_cast<std::size_t>(high - low + 1));
  for (const auto& [deg, c] : h.coefficients) coeffs[static_cast<std::size_t>(deg - low)] = c;

  for (int round = 0; round < nvars; ++round) {
    // Synthetic division by (t - 1), highest coefficient first.
    if (coeffs.size() < 2) return false;
    std::vector<Integer> quotient(coeffs.size() - 1);
    Integer carry = 0;
    for (std::size_t k = coeffs.size(); k-- > 1;) {
      carry += coeffs[k];
      quotient[k - 1] = carry;
    }
    if (carry + coeffs[0] != 0) return false;
    coeffs = std::move(quotient);
  }
  return true;
}

GradedBettiTable coarsen(const BigradedBettiTable& bt) {
  GradedBettiTable::Entries out;
  for (const auto& [key, value] : bt.entries()) {
    out[BettiKey{key.i, key.degree.x + key.degree.y}] += Rational(value);
  }
  return GradedBettiTable(2, std::move(out));
}

}  // namespace betticone
