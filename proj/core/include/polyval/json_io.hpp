#pragma once

#include <nlohmann/json.hpp>

#include <string_view>

#include "polyval/harness.hpp"

namespace polyval {

using Json = nlohmann::ordered_json;

/// Raised for malformed polytope documents.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// {"dim": n, "vertices": [[x, ...], ...]} where each x is an integer or a
/// "p/q" string. Ragged rows, a row length different from dim and an empty
/// vertex list are rejected.
Polytope polytope_from_json(const Json& doc);
Polytope polytope_from_json_text(std::string_view text);

Json to_json(const Rat& r);
Json to_json(const Vec& v);
Json to_json(const Polytope& p);
/// {"suite", "seed", "cases", "failures", "witnesses", ...}
Json to_json(const CheckReport& r);

}  // namespace polyval
