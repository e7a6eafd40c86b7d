#include "betticone/error.hpp"
#include "betticone/module_engine.hpp"
#include "betticone/ray_enumeration.hpp"

#include "doctest.h"

#include <algorithm>
#include <random>

using namespace betticone;

namespace {

BigradedBettiTable table(std::initializer_list<std::pair<int, std::vector<Bidegree>>> spec) {
  BigradedBettiTable::Entries e;
  for (const auto& [i, degrees] : spec) {
    for (const Bidegree& a : degrees) e[{i, a}] += 1;
  }
  return BigradedBettiTable(e);
}

Polynomial mono(const Rational& c, int a, int b) { return {Term{c, {a, b}}}; }

// Staircase formula for T/J: beta_1 at the generators, beta_2 at the lcm of
// consecutive generators (sorted by x-degree).
BigradedBettiTable staircase_table(std::vector<Bidegree> gens) {
  gens = minimal_generators(gens);
  std::sort(gens.begin(), gens.end());
  BigradedBettiTable::Entries e;
  e[{0, {0, 0}}] = 1;
  for (const Bidegree& g : gens) e[{1, g}] += 1;
  for (std::size_t k = 1; k < gens.size(); ++k) e[{2, {gens[k].x, gens[k - 1].y}}] += 1;
  return BigradedBettiTable(e);
}

// Random staircase whose minimal generators include a pure power of x and of y.
std::vector<Bidegree> random_artinian(std::mt19937& rng, int bx, int by) {
  std::vector<Bidegree> gens{{1 + static_cast<int>(rng() % bx), 0},
                             {0, 1 + static_cast<int>(rng() % by)}};
  const int extra = static_cast<int>(rng() % 4);
  for (int k = 0; k < extra; ++k) {
    gens.push_back({static_cast<int>(rng() % (bx + 1)), static_cast<int>(rng() % (by + 1))});
  }
  return minimal_generators(gens);
}

std::map<Bidegree, std::int64_t> hilbert_times_koszul(const FiniteModule& m) {
  std::map<Bidegree, std::int64_t> out;
  for (const auto& [a, d] : m.dims()) {
    out[a] += d;
    out[a + kDegX] -= d;
    out[a + kDegY] -= d;
    out[a + kDegX + kDegY] += d;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

BigradedBettiTable reflected_dual_table(const BigradedBettiTable& t) {
  BigradedBettiTable::Entries e;
  for (const auto& [key, v] : t.entries()) e[{2 - key.i, Bidegree{1, 1} - key.degree}] = v;
  return BigradedBettiTable(e);
}

}  // namespace

TEST_CASE("monomial_quotient examples") {
  const FiniteModule a = monomial_quotient({{{0, 0}}, {{2, 0}, {1, 1}, {0, 2}}});
  CHECK(a.dims() == FiniteModule::DimMap{{{0, 0}, 1}, {{0, 1}, 1}, {{1, 0}, 1}});
  const FiniteModule b = monomial_quotient({{{1, 0}, {0, 1}}, {{2, 0}, {1, 2}, {0, 3}}});
  CHECK(b.dims() == FiniteModule::DimMap{{{0, 1}, 1}, {{0, 2}, 1}, {{1, 0}, 1}, {{1, 1}, 1}});
  const FiniteModule c =
      monomial_quotient({{{4, 0}, {1, 2}, {2, 1}, {0, 4}}, {{6, 0}, {3, 3}, {0, 6}}});
  CHECK(c.total_dimension() > 0);
  CHECK(c.x_map({1, 0}) == Matrix(0, 0));
  CHECK(c.x_map({4, 0})(0, 0) == 1);
  CHECK(c.x_map({5, 0}).rows() == 0);
  CHECK(c.is_commutative());
}

TEST_CASE("monomial_quotient errors") {
  try {
    monomial_quotient({{{1, 0}}, {{0, 2}}});
    FAIL("expected NotContained");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotContained);
  }
  try {
    monomial_quotient({{{0, 0}}, {{2, 0}}});
    FAIL("expected NotFiniteLength");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotFiniteLength);
  }
  CHECK(monomial_quotient({{{1, 1}}, {{1, 1}}}).total_dimension() == 0);
}

TEST_CASE("FiniteModule validates shapes and commutativity") {
  FiniteModule::DimMap dims{{{0, 0}, 1}, {{1, 0}, 1}, {{0, 1}, 1}, {{1, 1}, 1}};
  Matrix one(1, 1);
  one(0, 0) = 1;
  Matrix two(1, 1);
  two(0, 0) = 2;
  FiniteModule::MapTable x{{{0, 0}, one}, {{0, 1}, one}};
  FiniteModule::MapTable y{{{0, 0}, one}, {{1, 0}, two}};
  try {
    FiniteModule(dims, x, y);
    FAIL("expected NotCommutative");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotCommutative);
  }
  y[{1, 0}] = one;
  CHECK(FiniteModule(dims, x, y).is_commutative());
  FiniteModule::MapTable bad{{{0, 0}, Matrix(2, 1)}};
  CHECK_THROWS_AS(FiniteModule(dims, bad, {}), Error);
}

TEST_CASE("bigraded_betti examples") {
  const FiniteModule k = monomial_quotient({{{0, 0}}, {{1, 0}, {0, 1}}});
  CHECK(bigraded_betti(k) == table({{0, {{0, 0}}}, {1, {{1, 0}, {0, 1}}}, {2, {{1, 1}}}}));
  CHECK(bigraded_betti(monomial_quotient({{{0, 0}}, {{2, 0}, {1, 1}, {0, 2}}})) ==
        table({{0, {{0, 0}}}, {1, {{2, 0}, {1, 1}, {0, 2}}}, {2, {{2, 1}, {1, 2}}}}));
  const auto m = bigraded_betti(monomial_quotient({{{1, 0}, {0, 1}}, {{2, 0}, {1, 2}, {0, 3}}}));
  const auto a = bigraded_betti(monomial_quotient({{{1, 0}}, {{2, 0}, {1, 2}}}));
  const auto b = bigraded_betti(monomial_quotient({{{0, 1}}, {{1, 1}, {0, 3}}}));
  CHECK(m == a + b);
  CHECK(bigraded_betti(FiniteModule{}).empty());
}

TEST_CASE("Betti tables of T/J follow the staircase formula") {
  std::mt19937 rng(2718);
  for (int trial = 0; trial < 150; ++trial) {
    const auto gens = random_artinian(rng, 5, 5);
    if (gens.front() == Bidegree{0, 0}) continue;
    CHECK(bigraded_betti(monomial_quotient({{{0, 0}}, gens})) == staircase_table(gens));
  }
}

TEST_CASE("Euler characteristic, generators and duality on random monomial quotients") {
  std::mt19937 rng(161803);
  int checked = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const auto J = random_artinian(rng, 5, 5);
    std::vector<Bidegree> I;
    for (const Bidegree& j : J) {
      if (rng() % 2) I.push_back({std::max(0, j.x - static_cast<int>(rng() % 3)), std::max(0, j.y - static_cast<int>(rng() % 3))});
    }
    if (I.empty()) I.push_back({0, 0});
    const MonomialPair p{minimal_generators(I), J};
    bool ok = true;
    for (const Bidegree& j : p.gens_J) ok = ok && contains(p.gens_I, j);
    if (!ok) continue;
    const FiniteModule m = monomial_quotient(p);
    CHECK(m.is_commutative());
    const BigradedBettiTable t = bigraded_betti(m);
    CHECK(finite_length_check(k_polynomial(t)));
    CHECK(k_polynomial(t).coefficients == hilbert_times_koszul(m));

    std::vector<Bidegree> generators;
    for (const Bidegree& g : p.gens_I) {
      if (!contains(p.gens_J, g)) generators.push_back(g);
    }
    std::vector<Bidegree> beta0;
    for (const auto& [key, v] : t.entries()) {
      if (key.i == 0) beta0.push_back(key.degree);
    }
    std::sort(generators.begin(), generators.end());
    CHECK(beta0 == generators);

    const FiniteModule dual = matlis_dual(m);
    CHECK(dual.is_commutative());
    CHECK(dual.total_dimension() == m.total_dimension());
    CHECK(bigraded_betti(dual) == reflected_dual_table(t));
    ++checked;
  }
  CHECK(checked > 100);
}

TEST_CASE("Matlis dual of T/<x^2,xy,y^2> flips the Betti table") {
  const FiniteModule m = monomial_quotient({{{0, 0}}, {{2, 0}, {1, 1}, {0, 2}}});
  const FiniteModule d = matlis_dual(m);
  CHECK(d.dims() == FiniteModule::DimMap{{{-1, 0}, 1}, {{0, -1}, 1}, {{0, 0}, 1}});
  CHECK(bigraded_betti(d) ==
        table({{0, {{-1, 0}, {0, -1}}}, {1, {{1, -1}, {0, 0}, {-1, 1}}}, {2, {{1, 1}}}}));
  CHECK(matlis_dual(d).dims() == m.dims());
}

TEST_CASE("coker_presentation examples") {
  PresentationMatrix xonly;
  xonly.row_degrees = {{0, 0}};
  xonly.col_degrees = {{1, 0}};
  xonly.entries = {{mono(1, 1, 0)}};
  try {
    coker_presentation(xonly);
    FAIL("expected NotFiniteLengthWithinBox");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotFiniteLengthWithinBox);
  }

  PresentationMatrix koszul;
  koszul.row_degrees = {{0, 0}};
  koszul.col_degrees = {{1, 0}, {0, 1}};
  koszul.entries = {{mono(1, 1, 0), mono(1, 0, 1)}};
  const FiniteModule k = coker_presentation(koszul);
  CHECK(k.dims() == FiniteModule::DimMap{{{0, 0}, 1}});
  CHECK(coker_presentation(koszul, Box{{-3, -3}, {6, 6}}).dims() == k.dims());
  CHECK_THROWS_AS(coker_presentation(xonly, Box{{0, 0}, {5, 5}}), Error);
}

TEST_CASE("cokernel of a monomial row agrees with the monomial quotient") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const auto gens = random_artinian(rng, 4, 4);
    PresentationMatrix p;
    p.row_degrees = {{0, 0}};
    p.col_degrees = gens;
    p.entries.resize(1);
    for (const Bidegree& g : gens) p.entries[0].push_back(mono(Rational(1 + static_cast<int>(rng() % 3)), g.x, g.y));
    const FiniteModule c = coker_presentation(p);
    const FiniteModule q = monomial_quotient({{{0, 0}}, gens});
    CHECK(c.is_commutative());
    CHECK(c.dims() == q.dims());
    CHECK(bigraded_betti(c) == bigraded_betti(q));
  }
}

TEST_CASE("presentation validation") {
  PresentationMatrix p;
  p.row_degrees = {{0, 0}};
  p.col_degrees = {{1, 0}};
  p.entries = {{mono(1, 0, 1)}};
  CHECK_THROWS_AS(p.validate(), Error);
  p.entries = {{mono(1, 1, 0), mono(1, 0, 1)}};
  CHECK_THROWS_AS(p.validate(), Error);
  p.entries = {{{Term{1, {1, 0}}, Term{2, {1, 0}}}}};
  CHECK_NOTHROW(p.validate());
  CHECK(p.scalar(0, 0) == 3);
}

TEST_CASE("heart-shape cokernel") {
  const FiniteModule h = coker_presentation(heart_shape_presentation());
  CHECK(h.is_commutative());
  CHECK(h.total_dimension() == 9);
  const auto t = bigraded_betti(h);
  CHECK(t == table({{0, {{1, 0}, {0, 1}}},
                    {1, {{3, 0}, {2, 1}, {1, 2}, {0, 3}}},
                    {2, {{2, 2}, {3, 3}}}}));
  const auto dual = bigraded_betti(matlis_dual(h));
  CHECK(dual == reflected_dual_table(t));
}

TEST_CASE("kernel generator degrees") {
  CHECK(kernel_generator_degrees(pacman_presentation(0, 0)) ==
        std::vector<KernelGenerator>{{{2, 3}, 1}, {{3, 2}, 1}});
  CHECK(kernel_generator_degrees(heart_shape_presentation()) ==
        std::vector<KernelGenerator>{{{2, 2}, 1}, {{3, 3}, 1}});
  PresentationMatrix koszul;
  koszul.row_degrees = {{0, 0}};
  koszul.col_degrees = {{1, 0}, {0, 1}};
  koszul.entries = {{mono(1, 1, 0), mono(1, 0, 1)}};
  CHECK(kernel_generator_degrees(koszul) == std::vector<KernelGenerator>{{{1, 1}, 1}});
  CHECK(kernel_generator_degrees(koszul, Box{{0, 0}, {5, 5}}) ==
        std::vector<KernelGenerator>{{{1, 1}, 1}});
  try {
    kernel_generator_degrees(koszul, Box{{0, 0}, {2, 2}});
    FAIL("expected KernelNotFinitelyResolvedInBox");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::KernelNotFinitelyResolvedInBox);
  }
}

TEST_CASE("translation shifts Betti degrees") {
  const FiniteModule m = monomial_quotient({{{0, 0}}, {{2, 0}, {1, 1}, {0, 2}}});
  CHECK(bigraded_betti(m.translated({3, -2})) == bigraded_betti(m).translated({3, -2}));
  CHECK(m.support_box() == Box{{0, 0}, {1, 1}});
  CHECK_FALSE(FiniteModule{}.support_box().has_value());
}
