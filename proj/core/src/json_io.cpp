#include "polyval/json_io.hpp"

namespace polyval {

namespace {

Rat coordinate(const Json& x) {
  if (x.is_number_integer()) return Rat(std::to_string(x.get<long long>()));
  if (x.is_string()) {
    try {
      return parse_rat(x.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what());
    }
  }
  throw ParseError("coordinates must be integers or \"p/q\" strings");
}

}  // namespace

Polytope polytope_from_json(const Json& doc) {
  if (!doc.is_object() || !doc.contains("dim") || !doc.contains("vertices")) {
    throw ParseError("expected an object with \"dim\" and \"vertices\"");
  }
  if (!doc["dim"].is_number_integer() || doc["dim"].get<long long>() < 1) {
    throw ParseError("\"dim\" must be a positive integer");
  }
  const auto n = static_cast<std::size_t>(doc["dim"].get<long long>());
  const Json& rows = doc["vertices"];
  if (!rows.is_array() || rows.empty()) throw ParseError("\"vertices\" must be a nonempty array");
  std::vector<Vec> pts;
  for (const auto& row : rows) {
    if (!row.is_array() || row.size() != n) {
      throw ParseError("ragged vertex row: expected " + std::to_string(n) + " coordinates");
    }
    std::vector<Rat> coords;
    for (const auto& x : row) coords.push_back(coordinate(x));
    pts.emplace_back(std::move(coords));
  }
  return Polytope::hull(pts);
}

Polytope polytope_from_json_text(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(e.what());
  }
  return polytope_from_json(doc);
}

Json to_json(const Rat& r) { return to_string(r); }

Json to_json(const Vec& v) {
  Json out = Json::array();
  for (const auto& c : v.coords()) out.push_back(to_string(c));
  return out;
}

Json to_json(const Polytope& p) {
  Json verts = Json::array();
  for (const auto& v : p.vertices()) verts.push_back(to_json(v));
  return Json{{"dim", p.ambient_dim()}, {"vertices", std::move(verts)}};
}

Json to_json(const CheckReport& r) {
  Json witnesses = Json::array();
  for (const auto& w : r.witnesses) {
    witnesses.push_back(Json{{"input", w.input}, {"expected", w.expected}, {"actual", w.actual}});
  }
  Json out{{"suite", r.suite},
           {"seed", r.seed},
           {"cases", r.cases_run},
           {"failures", r.failures},
           {"passed", r.passed()}};
  if (r.expected_fail) out["expected_fail"] = true;
  if (r.informational) out["informational"] = true;
  if (!r.tallies.empty()) {
    Json t = Json::object();
    for (const auto& [k, v] : r.tallies) t[k] = v;
    out["tallies"] = std::move(t);
  }
  out["witnesses"] = std::move(witnesses);
  return out;
}

}  // namespace polyval
