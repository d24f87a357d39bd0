#pragma once

#include <string>

#include "hybrid/connect.hpp"
#include "hybrid/hybrid_set.hpp"

#include <json.hpp>

namespace hybrid {

// Syntax error carrying the 0-based offset of the offending character.
struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, size_t pos)
        : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"),
          position(pos) {}
    size_t position;
};

// Canonical text form of a string-keyed hybrid set: "{a,b,b|c}" with the
// positive part left of the bar and the negative part right, each sorted
// ascending with elements repeated per multiplicity.
std::string render_set(const HybridSet<std::string>& f);
HybridSet<std::string> parse_set(const std::string& text);

// JSON form: object mapping element to (nonzero) multiplicity.
nlohmann::json set_to_json(const HybridSet<std::string>& f);
HybridSet<std::string> set_from_json(const nlohmann::json& j);

// Monic rational functions as products of factors "(x-c)" with "/(x-c)"
// for poles and "1" for the empty numerator; c is a rational literal and
// "(x+c)" is accepted as sugar for a negative root. Rendering uses "(x+c)"
// for negative roots so the canonical text never contains "--".
MonicRationalFn parse_rational_fn(const std::string& text);
std::string render_rational_fn(const MonicRationalFn& f);

// Basis sequences restricted to the affine family "b_i = u*i + v" and the
// geometric family "b_i = c*v^(i-1)" with v a variable name (e.g. q). The
// leading "b_i =" is optional.
PersistantSequence parse_basis(const std::string& text);

// Doubled half-integer in canonical form: "3" or "3/2".
std::string half_to_string(long long doubled);

}  // namespace hybrid
