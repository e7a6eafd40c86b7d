#include "betticone/bigraded.hpp"

#include "betticone/error.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace betticone {

std::string to_string(const Bidegree& a) {
  return "(" + std::to_string(a.x) + "," + std::to_string(a.y) + ")";
}

BigradedBettiTable::BigradedBettiTable(Entries entries) {
  for (const auto& [key, value] : entries) {
    if (value < 0) throw Error(ErrorCode::InvalidArgument, "Betti entries must be nonnegative");
    if (value == 0) continue;
    if (key.i < 0 || key.i > 2) {
      throw Error(ErrorCode::InvalidArgument, "homological degree outside {0,1,2}");
    }
    entries_.emplace(key, value);
  }
}

std::int64_t BigradedBettiTable::at(int i, Bidegree a) const {
  const auto it = entries_.find({i, a});
  return it == entries_.end() ? 0 : it->second;
}

BigradedBettiTable BigradedBettiTable::primitive() const {
  std::int64_t g = 0;
  for (const auto& [key, value] : entries_) g = std::gcd(g, value);
  if (g <= 1) return *this;
  Entries out;
  for (const auto& [key, value] : entries_) out.emplace(key, value / g);
  return BigradedBettiTable(std::move(out));
}

BigradedBettiTable BigradedBettiTable::translated(Bidegree shift) const {
  Entries out;
  for (const auto& [key, value] : entries_) out.emplace(BigradedKey{key.i, key.degree + shift}, value);
  return BigradedBettiTable(std::move(out));
}

BigradedBettiTable BigradedBettiTable::swapped() const {
  Entries out;
  for (const auto& [key, value] : entries_) {
    out.emplace(BigradedKey{key.i, {key.degree.y, key.degree.x}}, value);
  }
  return BigradedBettiTable(std::move(out));
}

std::pair<Bidegree, Bidegree> BigradedBettiTable::bounding_box() const {
  if (entries_.empty()) throw Error(ErrorCode::InvalidArgument, "empty table has no bounding box");
  Bidegree lo = entries_.begin()->first.degree;
  Bidegree hi = lo;
  for (const auto& [key, value] : entries_) {
    lo = {std::min(lo.x, key.degree.x), std::min(lo.y, key.degree.y)};
    hi = {std::max(hi.x, key.degree.x), std::max(hi.y, key.degree.y)};
  }
  return {lo, hi};
}

BigradedBettiTable operator+(const BigradedBettiTable& a, const BigradedBettiTable& b) {
  BigradedBettiTable::Entries sum = a.entries();
  for (const auto& [key, value] : b.entries()) sum[key] += value;
  return BigradedBettiTable(std::move(sum));
}

std::int64_t KPolynomial::at(Bidegree a) const {
  const auto it = coefficients.find(a);
  return it == coefficients.end() ? 0 : it->second;
}

KPolynomial k_polynomial(const BigradedBettiTable& t) {
  std::map<Bidegree, std::int64_t> acc;
  for (const auto& [key, value] : t.entries()) {
    acc[key.degree] += key.i % 2 == 0 ? value : -value;
  }
  KPolynomial k;
  for (const auto& [a, c] : acc) {
    if (c != 0) k.coefficients.emplace(a, c);
  }
  return k;
}

bool finite_length_check(const KPolynomial& k) {
  std::map<int, std::int64_t> at_s2_one;  // K(s1, 1), indexed by the s1 exponent
  std::map<int, std::int64_t> at_s1_one;  // K(1, s2)
  for (const auto& [a, c] : k.coefficients) {
    at_s2_one[a.x] += c;
    at_s1_one[a.y] += c;
  }
  auto vanishes = [](const std::map<int, std::int64_t>& m) {
    return std::all_of(m.begin(), m.end(), [](const auto& kv) { return kv.second == 0; });
  };
  return vanishes(at_s2_one) && vanishes(at_s1_one);
}

namespace {

/// Union-find over vertex indices with path halving and union by size.
class DisjointSet {
 public:
  explicit DisjointSet(std::size_t n) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t v) {
    while (parent_[v] != v) {
      parent_[v] = parent_[parent_[v]];
      v = parent_[v];
    }
    return v;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
  }

  std::size_t component_size(std::size_t v) { return size_[find(v)]; }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
};

std::size_t count_incident(const std::vector<std::pair<Bidegree, Bidegree>>& edges, Bidegree v) {
  return static_cast<std::size_t>(std::count_if(edges.begin(), edges.end(), [&](const auto& e) {
    return e.first == v || e.second == v;
  }));
}

}  // namespace

std::size_t MatchingGraph::x_valency(Bidegree v) const { return count_incident(x_edges, v); }
std::size_t MatchingGraph::y_valency(Bidegree v) const { return count_incident(y_edges, v); }

bool MatchingGraph::connected() const {
  if (vertices.empty()) return true;
  std::map<Bidegree, std::size_t> index;
  for (const auto& [a, v] : vertices) index.emplace(a, index.size());
  DisjointSet dsu(index.size());
  for (const auto* edges : {&x_edges, &y_edges}) {
    for (const auto& [a, b] : *edges) dsu.unite(index.at(a), index.at(b));
  }
  return dsu.component_size(0) == index.size();
}

MatchingGraph matching_graph(const BigradedBettiTable& t) {
  MatchingGraph g;
  for (const auto& [key, value] : t.entries()) {
    MatchingVertex& v = g.vertices[key.degree];
    v.weight += value;
    v.homological_support.insert(key.i);
  }
  for (auto it = g.vertices.begin(); it != g.vertices.end(); ++it) {
    for (auto jt = std::next(it); jt != g.vertices.end(); ++jt) {
      if (it->first.x == jt->first.x) g.x_edges.emplace_back(it->first, jt->first);
      if (it->first.y == jt->first.y) g.y_edges.emplace_back(it->first, jt->first);
    }
  }
  return g;
}

std::string to_dot(const MatchingGraph& g) {
  std::ostringstream os;
  os << "graph matching {\n";
  for (const auto& [a, v] : g.vertices) {
    os << "  \"" << to_string(a) << "\" [label=\"" << to_string(a) << ":" << v.weight
       << "\", pos=\"" << a.x << "," << a.y << "!\"];\n";
  }
  for (const auto& [a, b] : g.x_edges) {
    os << "  \"" << to_string(a) << "\" -- \"" << to_string(b) << "\" [style=solid];\n";
  }
  for (const auto& [a, b] : g.y_edges) {
    os << "  \"" << to_string(a) << "\" -- \"" << to_string(b) << "\" [style=dashed];\n";
  }
  os << "}\n";
  return os.str();
}

const char* to_string(CertificateCondition c) {
  switch (c) {
    case CertificateCondition::XValency: return "x-valency";
    case CertificateCondition::YValency: return "y-valency";
    case CertificateCondition::Disconnected: return "disconnected";
    case CertificateCondition::MixedHomologicalDegree: return "mixed-homological-degree";
    case CertificateCondition::EmptyTable: return "empty-table";
  }
  return "?";
}

CertificateVerdict check_extremality_certificate(const BigradedBettiTable& t) {
  if (!finite_length_check(k_polynomial(t))) {
    throw Error(ErrorCode::NotFiniteLength,
                "K-polynomial is not divisible by (1-s1) and (1-s2); not a finite-length table");
  }
  CertificateVerdict verdict;
  if (t.empty()) {
    verdict.failures.push_back({CertificateCondition::EmptyTable, {}, {}});
    return verdict;
  }
  const MatchingGraph g = matching_graph(t);
  CertificateFailure x_fail{CertificateCondition::XValency, {}, {}};
  CertificateFailure y_fail{CertificateCondition::YValency, {}, {}};
  CertificateFailure mixed{CertificateCondition::MixedHomologicalDegree, {}, {}};
  for (const auto& [a, v] : g.vertices) {
    if (const auto n = g.x_valency(a); n != 1) {
      x_fail.vertices.push_back(a);
      x_fail.counts.push_back(n);
    }
    if (const auto n = g.y_valency(a); n != 1) {
      y_fail.vertices.push_back(a);
      y_fail.counts.push_back(n);
    }
    if (v.homological_support.size() != 1) mixed.vertices.push_back(a);
  }
  for (auto* f : {&x_fail, &y_fail, &mixed}) {
    if (!f->vertices.empty()) verdict.failures.push_back(std::move(*f));
  }
  if (!g.connected()) verdict.failures.push_back({CertificateCondition::Disconnected, {}, {}});
  verdict.kind = verdict.failures.empty() ? CertificateVerdict::Kind::CertifiedExtremal
                                          : CertificateVerdict::Kind::Inconclusive;
  return verdict;
}

}  // namespace betticone
