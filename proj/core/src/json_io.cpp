#include "dispheres/json_io.hpp"

namespace dispheres {

namespace {

Rat rational_from_json(const Json& j, const char* what) {
  if (!j.is_string()) {
    throw Error(ErrorCode::BadInput, std::string(what) + ": expected a \"p/q\" string");
  }
  const auto value = parse_rational(j.get<std::string>());
  if (!value) {
    throw Error(ErrorCode::BadInput,
                std::string(what) + ": cannot parse rational '" + j.get<std::string>() + "'");
  }
  return *value;
}

}  // namespace

Json point_to_json(const Point& p) {
  Json out = Json::array();
  for (const Rat& c : p.coords()) out.push_back(to_fraction_string(c));
  return out;
}

Point point_from_json(const Json& j) {
  if (!j.is_array()) throw Error(ErrorCode::BadInput, "point: expected an array of rationals");
  std::vector<Rat> coords;
  coords.reserve(j.size());
  for (const Json& c : j) coords.push_back(rational_from_json(c, "point coordinate"));
  return Point(std::move(coords));
}

Json dipath_to_json(const Dipath& path) {
  Json waypoints = Json::array();
  for (const Point& w : path.waypoints()) waypoints.push_back(point_to_json(w));
  Json stages = Json::array();
  for (const Rat& s : path.stages()) stages.push_back(to_fraction_string(s));
  Json out;
  out["waypoints"] = std::move(waypoints);
  out["stages"] = std::move(stages);
  return out;
}

Dipath dipath_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("waypoints") || !j.contains("stages")) {
    throw Error(ErrorCode::BadInput, "dipath: expected {\"waypoints\":[...],\"stages\":[...]}");
  }
  const Json& jw = j.at("waypoints");
  const Json& js = j.at("stages");
  if (!jw.is_array() || !js.is_array()) {
    throw Error(ErrorCode::BadInput, "dipath: waypoints and stages must be arrays");
  }
  std::vector<Point> waypoints;
  waypoints.reserve(jw.size());
  for (const Json& w : jw) waypoints.push_back(point_from_json(w));
  std::vector<Rat> stages;
  stages.reserve(js.size());
  for (const Json& s : js) stages.push_back(rational_from_json(s, "stage"));
  return Dipath(std::move(waypoints), std::move(stages));
}

Json diagnostics_to_json(const ReachDiagnostics& diag) {
  Json out;
  out["on_boundary"] = Json::array({diag.x_on_boundary, diag.y_on_boundary});
  out["ordered"] = diag.ordered;
  const auto condition = [](const ConditionWitness& w) {
    Json c;
    c["holds"] = w.holds;
    if (w.index) c["index"] = *w.index;
    return c;
  };
  out["u1"] = condition(diag.u1);
  out["u2"] = condition(diag.u2);
  return out;
}

Json error_to_json(const Error& error) {
  Json out;
  out["code"] = std::string(error_code_name(error.code()));
  out["message"] = error.what();
  if (error.diagnostics()) out["witness"] = diagnostics_to_json(*error.diagnostics());
  return out;
}

}  // namespace dispheres
