#include "betticone/bigraded.hpp"
#include "betticone/bs_cone.hpp"
#include "betticone/error.hpp"
#include "betticone/module_engine.hpp"
#include "betticone/ray_enumeration.hpp"

#include "doctest.h"

#include <algorithm>
#include <random>

using namespace betticone;

namespace {

BigradedBettiTable quotient_table(std::vector<Bidegree> I, std::vector<Bidegree> J) {
  return bigraded_betti(monomial_quotient({std::move(I), std::move(J)}));
}

using Edge = std::pair<Bidegree, Bidegree>;

std::vector<Edge> sorted_edges(std::vector<Edge> e) {
  for (Edge& x : e) {
    if (x.second < x.first) std::swap(x.first, x.second);
  }
  std::sort(e.begin(), e.end());
  return e;
}

// Repeated breadth-first flooding as a connectivity oracle.
bool connected_by_flooding(const MatchingGraph& g) {
  if (g.vertices.empty()) return true;
  std::set<Bidegree> seen{g.vertices.begin()->first};
  bool grew = true;
  while (grew) {
    grew = false;
    for (const auto* edges : {&g.x_edges, &g.y_edges}) {
      for (const auto& [a, b] : *edges) {
        if (seen.count(a) != seen.count(b)) {
          seen.insert(a);
          seen.insert(b);
          grew = true;
        }
      }
    }
  }
  return seen.size() == g.vertices.size();
}

}  // namespace

TEST_CASE("matching graph of T/<x^2,xy,y^2>") {
  const MatchingGraph g = matching_graph(quotient_table({{0, 0}}, {{2, 0}, {1, 1}, {0, 2}}));
  CHECK(g.vertices.size() == 6);
  for (const auto& [a, v] : g.vertices) CHECK(v.weight == 1);
  CHECK(sorted_edges(g.x_edges) == std::vector<Edge>{{{0, 0}, {0, 2}}, {{1, 1}, {1, 2}}, {{2, 0}, {2, 1}}});
  CHECK(sorted_edges(g.y_edges) == std::vector<Edge>{{{0, 0}, {2, 0}}, {{0, 2}, {1, 2}}, {{1, 1}, {2, 1}}});
  CHECK(g.connected());
  CHECK(g.vertices.at({2, 1}).homological_support == std::set<int>{2});
}

TEST_CASE("matching graph of k is a 4-cycle") {
  const MatchingGraph g = matching_graph(quotient_table({{0, 0}}, {{1, 0}, {0, 1}}));
  CHECK(g.vertices.size() == 4);
  CHECK(g.x_edges.size() == 2);
  CHECK(g.y_edges.size() == 2);
  for (const auto& [a, v] : g.vertices) {
    CHECK(g.x_valency(a) == 1);
    CHECK(g.y_valency(a) == 1);
  }
  CHECK(g.connected());
  CHECK(matching_graph(BigradedBettiTable{}).vertices.empty());
  CHECK(matching_graph(BigradedBettiTable{}).connected());
}

TEST_CASE("certificate examples") {
  const auto m2 = quotient_table({{0, 0}}, {{2, 0}, {1, 1}, {0, 2}});
  CHECK(check_extremality_certificate(m2).certified());
  CHECK(check_extremality_certificate(quotient_table({{0, 0}}, {{1, 0}, {0, 1}})).certified());

  const auto v = check_extremality_certificate(quotient_table({{1, 0}, {0, 1}}, {{2, 0}, {1, 2}, {0, 3}}));
  CHECK_FALSE(v.certified());
  bool found = false;
  for (const CertificateFailure& f : v.failures) {
    if (f.condition != CertificateCondition::XValency) continue;
    found = true;
    for (std::size_t k = 0; k < f.vertices.size(); ++k) {
      CHECK(f.vertices[k].x == 1);
      CHECK(f.counts[k] == 3);
    }
    CHECK(f.vertices.size() == 4);
  }
  CHECK(found);

  try {
    check_extremality_certificate(BigradedBettiTable({{{0, {0, 0}}, 1}}));
    FAIL("expected NotFiniteLength");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotFiniteLength);
  }
  const auto empty = check_extremality_certificate(BigradedBettiTable{});
  CHECK_FALSE(empty.certified());
  REQUIRE(empty.failures.size() == 1);
  CHECK(empty.failures[0].condition == CertificateCondition::EmptyTable);
}

TEST_CASE("mixed homological support is inconclusive") {
  // k(-1,-1) ⊕ k: the Koszul tables overlap at (1,1) in degrees 0 and 2.
  const auto k = quotient_table({{0, 0}}, {{1, 0}, {0, 1}});
  const auto t = k + k.translated({1, 1});
  const auto v = check_extremality_certificate(t);
  CHECK_FALSE(v.certified());
  bool mixed = false;
  for (const CertificateFailure& f : v.failures) {
    if (f.condition == CertificateCondition::MixedHomologicalDegree) {
      mixed = true;
      CHECK(f.vertices == std::vector<Bidegree>{{1, 1}});
    }
  }
  CHECK(mixed);
}

TEST_CASE("disconnected graphs are inconclusive") {
  const auto k = quotient_table({{0, 0}}, {{1, 0}, {0, 1}});
  const auto v = check_extremality_certificate(k + k.translated({5, 7}));
  CHECK_FALSE(v.certified());
  CHECK(std::any_of(v.failures.begin(), v.failures.end(), [](const CertificateFailure& f) {
    return f.condition == CertificateCondition::Disconnected;
  }));
}

TEST_CASE("k_polynomial and finite_length_check") {
  const auto k = k_polynomial(quotient_table({{0, 0}}, {{1, 0}, {0, 1}}));
  CHECK(k.coefficients == std::map<Bidegree, std::int64_t>{{{0, 0}, 1}, {{1, 0}, -1}, {{0, 1}, -1}, {{1, 1}, 1}});
  CHECK(finite_length_check(k));
  const auto m2 = k_polynomial(quotient_table({{0, 0}}, {{2, 0}, {1, 1}, {0, 2}}));
  CHECK(m2.coefficients == std::map<Bidegree, std::int64_t>{{{0, 0}, 1}, {{2, 0}, -1}, {{1, 1}, -1}, {{0, 2}, -1}, {{2, 1}, 1}, {{1, 2}, 1}});
  CHECK(finite_length_check(m2));
  CHECK_FALSE(finite_length_check(KPolynomial{{{{0, 0}, 1}, {{1, 0}, -1}}}));
  CHECK(k_polynomial(BigradedBettiTable{}).coefficients.empty());
  CHECK(finite_length_check(KPolynomial{}));
}

TEST_CASE("certified tables of the enumeration satisfy the structural invariants") {
  const RayEnumeration e = enumerate_box_rays({3, 3});
  for (const BoxRay& r : e.rays) {
    std::set<std::int64_t> values;
    std::map<int, int> per_x;
    for (const auto& [key, v] : r.table.entries()) {
      values.insert(v);
      ++per_x[key.degree.x];
    }
    CHECK(values.size() == 1);
    for (const auto& [x, count] : per_x) CHECK(count == 2);
    const MatchingGraph g = matching_graph(r.table);
    CHECK(connected_by_flooding(g));
    CHECK(finite_length_check(k_polynomial(r.table)));
  }
}

TEST_CASE("edge counts and connectivity agree with direct construction on random tables") {
  std::mt19937 rng(8675309);
  for (int trial = 0; trial < 300; ++trial) {
    BigradedBettiTable::Entries e;
    const int size = 1 + static_cast<int>(rng() % 8);
    for (int k = 0; k < size; ++k) {
      e[{static_cast<int>(rng() % 3), {static_cast<int>(rng() % 5), static_cast<int>(rng() % 5)}}] = 1 + rng() % 3;
    }
    const BigradedBettiTable t(e);
    const MatchingGraph g = matching_graph(t);
    std::map<int, std::size_t> xs;
    std::map<int, std::size_t> ys;
    for (const auto& [a, v] : g.vertices) {
      ++xs[a.x];
      ++ys[a.y];
      std::int64_t w = 0;
      for (int i = 0; i <= 2; ++i) w += t.at(i, a);
      CHECK(v.weight == w);
    }
    std::size_t ex = 0;
    std::size_t ey = 0;
    for (const auto& [x, c] : xs) ex += c * (c - 1) / 2;
    for (const auto& [y, c] : ys) ey += c * (c - 1) / 2;
    CHECK(g.x_edges.size() == ex);
    CHECK(g.y_edges.size() == ey);
    for (const auto& [a, v] : g.vertices) {
      CHECK(g.x_valency(a) == xs[a.x] - 1);
      CHECK(g.y_valency(a) == ys[a.y] - 1);
    }
    CHECK(g.connected() == connected_by_flooding(g));
  }
}

TEST_CASE("extremal tables may coarsen to non-pure tables") {
  const auto t = quotient_table({{4, 0}, {1, 2}, {2, 1}, {0, 4}}, {{6, 0}, {3, 3}, {0, 6}});
  CHECK(check_extremality_certificate(t).certified());
  CHECK_FALSE(is_pure(coarsen(t)).has_value());
}

TEST_CASE("heart-shape table") {
  const auto t = bigraded_betti(coker_presentation(heart_shape_presentation()));
  const MatchingGraph g = matching_graph(t);
  CHECK(g.vertices.size() == 8);
  for (const auto& [a, v] : g.vertices) CHECK(v.weight == 1);
  CHECK(check_extremality_certificate(t).certified());
}

TEST_CASE("table helpers") {
  const BigradedBettiTable t({{{0, {0, 0}}, 4}, {{1, {1, 2}}, 6}});
  CHECK(t.primitive() == BigradedBettiTable({{{0, {0, 0}}, 2}, {{1, {1, 2}}, 3}}));
  CHECK(t.swapped().at(1, {2, 1}) == 6);
  CHECK(t.translated({1, -1}).at(1, {2, 1}) == 6);
  CHECK(t.bounding_box() == std::pair<Bidegree, Bidegree>{{0, 0}, {1, 2}});
  CHECK_THROWS_AS(BigradedBettiTable({{{3, {0, 0}}, 1}}), Error);
  CHECK_THROWS_AS(BigradedBettiTable({{{0, {0, 0}}, -1}}), Error);
  CHECK(BigradedBettiTable({{{0, {0, 0}}, 0}}).empty());
  CHECK(to_string(Bidegree{3, -2}) == "(3,-2)");
}

TEST_CASE("DOT rendering") {
  const std::string dot = to_dot(matching_graph(quotient_table({{0, 0}}, {{1, 0}, {0, 1}})));
  CHECK(dot.find("label=\"(1,1):1\"") != std::string::npos);
  CHECK(dot.find("\"(0,0)\" -- \"(0,1)\" [style=solid]") != std::string::npos);
  CHECK(dot.find("\"(0,0)\" -- \"(1,0)\" [style=dashed]") != std::string::npos);
}

TEST_CASE("small box enumerations") {
  CHECK(enumerate_box_rays({0, 0}).rays.empty());
  const RayEnumeration one = enumerate_box_rays({1, 1});
  REQUIRE(one.rays.size() == 1);
  CHECK(one.rays[0].table == quotient_table({{0, 0}}, {{1, 0}, {0, 1}}));
  const RayEnumeration two = enumerate_box_rays({2, 2});
  CHECK(two.rays.size() == 11);
  CHECK_THROWS_AS(enumerate_box_rays({-1, 2}), Error);
  try {
    enumerate_box_rays({7, 1});
    FAIL("expected BoundTooLarge");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BoundTooLarge);
  }
}

TEST_CASE("box enumeration is symmetric and deterministic") {
  const RayEnumeration a = enumerate_box_rays({3, 3});
  const RayEnumeration b = enumerate_box_rays({3, 3});
  REQUIRE(a.rays.size() == b.rays.size());
  std::set<BigradedBettiTable> tables;
  for (std::size_t k = 0; k < a.rays.size(); ++k) {
    CHECK(a.rays[k].table == b.rays[k].table);
    CHECK(a.rays[k].witness == b.rays[k].witness);
    tables.insert(a.rays[k].table);
    if (k > 0) CHECK(a.rays[k - 1].table < a.rays[k].table);
  }
  for (const BigradedBettiTable& t : tables) {
    CHECK(tables.count(t.swapped()) == 1);
    BigradedBettiTable::Entries reflected;
    for (const auto& [key, v] : t.entries()) reflected[{2 - key.i, Bidegree{3, 3} - key.degree}] = v;
    CHECK(tables.count(BigradedBettiTable(reflected)) == 1);
  }
  const RayEnumeration tall = enumerate_box_rays({1, 3});
  const RayEnumeration wide = enumerate_box_rays({3, 1});
  CHECK(tall.rays.size() == wide.rays.size());
}
