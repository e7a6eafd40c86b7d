#include "betticone/json_io.hpp"

#include "betticone/error.hpp"

#include <fstream>
#include <sstream>

namespace betticone {

namespace {

[[noreturn]] void fail(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

const Json& field(const Json& j, const char* name) {
  if (!j.is_object()) fail("expected a JSON object");
  const auto it = j.find(name);
  if (it == j.end()) fail(std::string("missing field \"") + name + "\"");
  return *it;
}

void expect_kind(const Json& j, const char* kind) {
  const Json& k = field(j, "kind");
  if (!k.is_string() || k.get<std::string>() != kind) {
    fail(std::string("expected \"kind\": \"") + kind + "\"");
  }
}

const Json& array_field(const Json& j, const char* name) {
  const Json& a = field(j, name);
  if (!a.is_array()) fail(std::string("field \"") + name + "\" must be an array");
  return a;
}

int as_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) fail(std::string(what) + " must be an integer");
  const auto v = j.get<std::int64_t>();
  if (v < -1000000 || v > 1000000) fail(std::string(what) + " out of range");
  return static_cast<int>(v);
}

Rational as_rational(const Json& j, const char* what) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  fail(std::string(what) + " must be a rational string or an integer");
}

Bidegree as_bidegree(const Json& j) {
  if (!j.is_array() || j.size() != 2) fail("bidegree must be a pair [a,b]");
  return {as_int(j[0], "bidegree coordinate"), as_int(j[1], "bidegree coordinate")};
}

std::vector<Bidegree> bidegree_list(const Json& j, const char* name) {
  std::vector<Bidegree> out;
  for (const Json& e : array_field(j, name)) out.push_back(as_bidegree(e));
  return out;
}

}  // namespace

Json to_json(Bidegree a) { return Json::array({a.x, a.y}); }

Json to_json(const GradedBettiTable& t) {
  Json entries = Json::array();
  for (const auto& [key, value] : t.entries()) {
    entries.push_back({{"i", key.i}, {"j", key.j}, {"b", format_rational(value)}});
  }
  return {{"kind", "graded"}, {"nvars", t.nvars()}, {"entries", std::move(entries)}};
}

Json to_json(const PureTable& p) {
  Json mult = Json::array();
  for (const Integer& m : p.multiplicities) {
    if (m >= INT64_MIN && m <= INT64_MAX) {
      mult.push_back(static_cast<std::int64_t>(m));
    } else {
      mult.push_back(m.str());
    }
  }
  return {{"kind", "pure"}, {"degrees", p.degrees.values()}, {"mult", std::move(mult)}};
}

Json to_json(const BigradedBettiTable& t) {
  Json entries = Json::array();
  for (const auto& [key, value] : t.entries()) {
    entries.push_back({{"i", key.i}, {"deg", to_json(key.degree)}, {"b", value}});
  }
  return {{"kind", "bigraded"}, {"entries", std::move(entries)}};
}

Json to_json(const MonomialPair& p) {
  Json I = Json::array();
  Json J = Json::array();
  for (const Bidegree& g : p.gens_I) I.push_back(to_json(g));
  for (const Bidegree& g : p.gens_J) J.push_back(to_json(g));
  return {{"kind", "monomial_quotient"}, {"I", std::move(I)}, {"J", std::move(J)}};
}

Json to_json(const PresentationMatrix& m) {
  Json rows = Json::array();
  Json cols = Json::array();
  for (const Bidegree& r : m.row_degrees) rows.push_back(to_json(r));
  for (const Bidegree& c : m.col_degrees) cols.push_back(to_json(c));
  Json entries = Json::array();
  for (const auto& row : m.entries) {
    Json jrow = Json::array();
    for (const Polynomial& poly : row) {
      Json jp = Json::array();
      for (const Term& term : poly) {
        jp.push_back(Json::array({format_rational(term.coefficient), to_json(term.exponent)}));
      }
      jrow.push_back(std::move(jp));
    }
    entries.push_back(std::move(jrow));
  }
  return {{"kind", "presentation"},
          {"rows", std::move(rows)},
          {"cols", std::move(cols)},
          {"entries", std::move(entries)}};
}

GradedBettiTable graded_from_json(const Json& j) {
  expect_kind(j, "graded");
  const int nvars = as_int(field(j, "nvars"), "nvars");
  GradedBettiTable::Entries entries;
  for (const Json& e : array_field(j, "entries")) {
    const BettiKey key{as_int(field(e, "i"), "i"), as_int(field(e, "j"), "j")};
    const Rational b = as_rational(field(e, "b"), "b");
    if (!entries.emplace(key, b).second) fail("duplicate entry in graded table");
  }
  return GradedBettiTable(nvars, std::move(entries));
}

PureTable pure_from_json(const Json& j) {
  expect_kind(j, "pure");
  std::vector<int> degrees;
  for (const Json& d : array_field(j, "degrees")) degrees.push_back(as_int(d, "degree"));
  std::vector<Integer> mult;
  for (const Json& m : array_field(j, "mult")) {
    if (m.is_number_integer()) {
      mult.emplace_back(m.get<std::int64_t>());
    } else if (m.is_string()) {
      const Rational r = parse_rational(m.get<std::string>());
      if (denominator(r) != 1) fail("multiplicities must be integers");
      mult.push_back(numerator(r));
    } else {
      fail("multiplicities must be integers");
    }
  }
  if (mult.size() != degrees.size()) fail("\"degrees\" and \"mult\" differ in length");
  return PureTable{DegreeSequence(std::move(degrees)), std::move(mult)};
}

BigradedBettiTable bigraded_from_json(const Json& j) {
  expect_kind(j, "bigraded");
  BigradedBettiTable::Entries entries;
  for (const Json& e : array_field(j, "entries")) {
    const BigradedKey key{as_int(field(e, "i"), "i"), as_bidegree(field(e, "deg"))};
    const Json& b = field(e, "b");
    if (!b.is_number_integer()) fail("bigraded entries must be integers");
    if (!entries.emplace(key, b.get<std::int64_t>()).second) {
      fail("duplicate entry in bigraded table");
    }
  }
  return BigradedBettiTable(std::move(entries));
}

MonomialPair monomial_pair_from_json(const Json& j) {
  expect_kind(j, "monomial_quotient");
  return MonomialPair{bidegree_list(j, "I"), bidegree_list(j, "J")};
}

PresentationMatrix presentation_from_json(const Json& j) {
  expect_kind(j, "presentation");
  PresentationMatrix m;
  m.row_degrees = bidegree_list(j, "rows");
  m.col_degrees = bidegree_list(j, "cols");
  for (const Json& row : array_field(j, "entries")) {
    if (!row.is_array()) fail("presentation rows must be arrays");
    std::vector<Polynomial> prow;
    for (const Json& poly : row) {
      if (!poly.is_array()) fail("presentation entries must be arrays of terms");
      Polynomial p;
      for (const Json& term : poly) {
        if (!term.is_array() || term.size() != 2) fail("a term is [coefficient, [a,b]]");
        p.push_back(Term{as_rational(term[0], "coefficient"), as_bidegree(term[1])});
      }
      prow.push_back(std::move(p));
    }
    m.entries.push_back(std::move(prow));
  }
  m.validate();
  return m;
}

ModuleInput module_input_from_json(const Json& j) {
  const Json& kind = field(j, "kind");
  if (kind == "monomial_quotient") return monomial_pair_from_json(j);
  if (kind == "presentation") return presentation_from_json(j);
  fail("module kind must be \"monomial_quotient\" or \"presentation\"");
}

FiniteModule build_module(const ModuleInput& input) {
  if (const auto* pair = std::get_if<MonomialPair>(&input)) return monomial_quotient(*pair);
  return coker_presentation(std::get<PresentationMatrix>(input));
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(std::string("invalid JSON: ") + e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_json(buffer.str());
}

}  // namespace betticone
