#pragma once

#include "zpd/decomposition.hpp"
#include "zpd/four_tuple.hpp"
#include "zpd/point_set.hpp"
#include "zpd/spectrum.hpp"
#include "zpd/weak_tiling.hpp"

#include <nlohmann/json.hpp>

#include <string_view>

namespace zpd::json {

using Json = nlohmann::json; // std::map keys, so dumps are key-sorted

// Parses JSON text; syntax errors become InputError with line and column.
Json parse(std::string_view text);

// Readers throw InputError naming the offending field path, e.g.
// "h.lines[2].value: not a rational".

Json to_json(const Point &x);
Point point_from_json(const Json &j, const GroupParams &g, const std::string &path = "point");

Json to_json(const PointSet &a);
PointSet point_set_from_json(const Json &j, const std::string &path = "set");

// Rationals as strings; only lines with a nonzero value are written.
Json to_json(const RayFn &f);
RayFn ray_fn_from_json(const Json &j, const std::string &path = "fn");

Json to_json(const Spectrum &s);
Spectrum spectrum_from_json(const Json &j, const std::string &path = "spectrum");

Json to_json(const PointSet &a, const Certificate &c);
std::pair<PointSet, Certificate> certificate_from_json(const Json &j);

Json to_json(const FourTuple &t);
FourTuple four_tuple_from_json(const Json &j);

Json to_json(const Decomposition &dec);

Json to_json(const AxiomReport &r);

Json to_json(const Rational &q);
Rational rational_from_json(const Json &j, const std::string &path);

} // namespace zpd::json
