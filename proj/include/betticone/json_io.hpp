#pragma once

// JSON forms of tables and module inputs. Rationals travel as "p" or "p/q"
// strings; bigraded entries and bidegrees as plain integers.

#include "betticone/bigraded.hpp"
#include "betticone/module_engine.hpp"
#include "betticone/tables.hpp"

#include <json.hpp>

#include <string>
#include <variant>

namespace betticone {

using Json = nlohmann::ordered_json;

Json to_json(const GradedBettiTable& t);
Json to_json(const PureTable& p);
Json to_json(const BigradedBettiTable& t);
Json to_json(const MonomialPair& p);
Json to_json(const PresentationMatrix& m);
Json to_json(Bidegree a);

// All readers throw Error(ParseError) on schema violations. Domain
// validation (e.g. DegreeSequence) raises its own error codes.
GradedBettiTable graded_from_json(const Json& j);
PureTable pure_from_json(const Json& j);
BigradedBettiTable bigraded_from_json(const Json& j);
MonomialPair monomial_pair_from_json(const Json& j);
PresentationMatrix presentation_from_json(const Json& j);

using ModuleInput = std::variant<MonomialPair, PresentationMatrix>;
/// Dispatches on "kind": "monomial_quotient" or "presentation".
ModuleInput module_input_from_json(const Json& j);
FiniteModule build_module(const ModuleInput& input);

/// Parses text, mapping syntax errors to Error(ParseError).
Json parse_json(const std::string& text);
/// Reads and parses a file; unreadable files raise Error(InvalidArgument).
Json read_json_file(const std::string& path);

}  // namespace betticone
