#pragma once

#include <nlohmann/json.hpp>
#include <string_view>

#include "dispheres/dipath.hpp"
#include "dispheres/errors.hpp"
#include "dispheres/point.hpp"

namespace dispheres {

/// Version tag carried by every top-level CLI document.
inline constexpr std::string_view kSchemaTag = "dispheres/1";

/// Insertion-ordered JSON so identical inputs give identical bytes.
using Json = nlohmann::ordered_json;

/// Points serialize as arrays of canonical "p/q" strings: ["0/1","1/2","1/1"].
Json point_to_json(const Point& p);
Point point_from_json(const Json& j);

/// Dipaths serialize as {"waypoints":[...], "stages":[...]} with the same
/// rational encoding. Round-trips are bit-exact.
Json dipath_to_json(const Dipath& path);
Dipath dipath_from_json(const Json& j);

Json diagnostics_to_json(const ReachDiagnostics& diag);
Json error_to_json(const Error& error);

}  // namespace dispheres
