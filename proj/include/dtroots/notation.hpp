#pragma once

// Text and JSON forms of data sets.
//
// Text:  "(n, gt, a; (c1, x1), ..., (cl, xl))", the trivial set as "(1, g, 1;)".
// JSON:  {"n": int, "gt": int, "a": int, "cones": [[c, x], ...]}

#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "dtroots/core.hpp"

namespace dtroots {

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

[[nodiscard]] std::string to_text(const RawTuple& t);
[[nodiscard]] std::string to_text(const DataSet& d);

[[nodiscard]] nlohmann::ordered_json to_json(const DataSet& d);

/// Parses the text notation. Whitespace is free-form. Negative residues
/// (a or any c) are reduced to least positive representatives; every other
/// value is returned untouched so that `validate` can report it.
[[nodiscard]] RawTuple parse_text(std::string_view text);

[[nodiscard]] RawTuple parse_json(const nlohmann::json& j);

/// Dispatches on the first non-blank character: '{' is JSON, '(' is text.
[[nodiscard]] RawTuple parse_literal(std::string_view literal);

}  // namespace dtroots
