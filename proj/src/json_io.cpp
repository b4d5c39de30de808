#include "hodgecalc/json_io.hpp"

namespace hodgecalc {

namespace {

const Int& max_safe_integer() {
  static const Int value = (Int(1) << 53) - 1;
  return value;
}

long long require_int_field(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer())
    throw ArgumentError(std::string("expected integer field \"") + key + "\"");
  return j[key].get<long long>();
}

}  // namespace

nlohmann::ordered_json int_to_json(const Int& value) {
  if (value >= -max_safe_integer() && value <= max_safe_integer())
    return static_cast<long long>(value);
  return value.str();
}

Int int_from_json(const nlohmann::json& j) {
  if (j.is_number_unsigned()) return Int(j.get<unsigned long long>());
  if (j.is_number_integer()) return Int(j.get<long long>());
  if (j.is_string()) {
    const std::string text = j.get<std::string>();
    const size_t digits_from = text.size() > 0 && (text[0] == '-') ? 1 : 0;
    const bool decimal =
        text.size() > digits_from &&
        text.find_first_not_of("0123456789", digits_from) == std::string::npos;
    if (!decimal) throw ArgumentError("\"" + text + "\" is not a decimal integer");
    return Int(text);
  }
  throw ArgumentError("expected an integer or a decimal string, got " + j.dump());
}

nlohmann::ordered_json grid_to_json(const HodgeGrid& g) {
  nlohmann::ordered_json j;
  j["dim"] = g.dim;
  j["char"] = g.characteristic;
  j["twisted"] = g.twisted;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& row : g.h) {
    nlohmann::ordered_json out_row = nlohmann::ordered_json::array();
    for (const auto& entry : row) out_row.push_back(int_to_json(entry));
    rows.push_back(std::move(out_row));
  }
  j["h"] = std::move(rows);
  return j;
}

HodgeGrid grid_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ArgumentError("grid JSON must be an object");
  HodgeGrid g;
  g.dim = static_cast<int>(require_int_field(j, "dim"));
  g.characteristic = require_int_field(j, "char");
  if (!j.contains("twisted") || !j["twisted"].is_boolean())
    throw ArgumentError("expected boolean field \"twisted\"");
  g.twisted = j["twisted"].get<bool>();
  if (!j.contains("h") || !j["h"].is_array())
    throw ArgumentError("expected array field \"h\"");
  for (const auto& row : j["h"]) {
    if (!row.is_array()) throw ArgumentError("grid rows must be arrays");
    std::vector<Int> out_row;
    for (const auto& entry : row) out_row.push_back(int_from_json(entry));
    g.h.push_back(std::move(out_row));
  }
  return g;
}

nlohmann::ordered_json de_rham_to_json(const DeRhamDims& b) {
  nlohmann::ordered_json j;
  j["dim"] = b.dim;
  nlohmann::ordered_json entries = nlohmann::ordered_json::array();
  for (const auto& entry : b.b) entries.push_back(int_to_json(entry));
  j["b"] = std::move(entries);
  return j;
}

DeRhamDims de_rham_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ArgumentError("de Rham JSON must be an object");
  const int dim = static_cast<int>(require_int_field(j, "dim"));
  if (!j.contains("b") || !j["b"].is_array())
    throw ArgumentError("expected array field \"b\"");
  std::vector<Int> b;
  for (const auto& entry : j["b"]) b.push_back(int_from_json(entry));
  return make_de_rham(dim, std::move(b));
}

nlohmann::ordered_json hochschild_to_json(const HochschildDims& hh) {
  nlohmann::ordered_json j;
  j["dim"] = hh.dim;
  nlohmann::ordered_json degrees;
  for (int l = -hh.dim; l <= hh.dim; ++l)
    degrees[std::to_string(l)] = int_to_json(hh.at(l));
  j["hh"] = std::move(degrees);
  return j;
}

HochschildDims hochschild_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ArgumentError("Hochschild JSON must be an object");
  const int dim = static_cast<int>(require_int_field(j, "dim"));
  if (dim < 0) throw ArgumentError("Hochschild dimension must be non-negative");
  if (!j.contains("hh") || !j["hh"].is_object())
    throw ArgumentError("expected object field \"hh\"");
  const auto& degrees = j["hh"];
  if (degrees.size() != 2 * static_cast<size_t>(dim) + 1)
    throw ArgumentError("expected one \"hh\" entry per degree -n..n");
  std::vector<Int> hh(2 * dim + 1);
  for (int l = -dim; l <= dim; ++l) {
    const std::string key = std::to_string(l);
    if (!degrees.contains(key)) throw ArgumentError("missing \"hh\" degree " + key);
    hh[l + dim] = int_from_json(degrees[key]);
  }
  return make_hochschild(dim, std::move(hh));
}

nlohmann::ordered_json defect_to_json(const DefectVector& d) {
  nlohmann::ordered_json entries = nlohmann::ordered_json::array();
  const int lo = d.min_degree();
  for (int l = lo; l <= lo + 2 * d.dim; ++l) {
    nlohmann::ordered_json entry;
    entry["degree"] = l;
    entry["defect"] = int_to_json(d.at(l));
    entries.push_back(std::move(entry));
  }
  return entries;
}

nlohmann::ordered_json fan_to_json(const Fan& f) {
  nlohmann::ordered_json j;
  j["dim"] = f.dim;
  j["rays"] = f.rays;
  j["max_cones"] = f.max_cones;
  return j;
}

Fan fan_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ArgumentError("fan JSON must be an object");
  Fan f;
  f.dim = static_cast<int>(require_int_field(j, "dim"));
  if (!j.contains("rays") || !j["rays"].is_array())
    throw ArgumentError("expected array field \"rays\"");
  if (!j.contains("max_cones") || !j["max_cones"].is_array())
    throw ArgumentError("expected array field \"max_cones\"");
  for (const auto& ray : j["rays"]) {
    if (!ray.is_array()) throw ArgumentError("rays must be arrays of integers");
    f.rays.push_back(ray.get<std::vector<long long>>());
  }
  for (const auto& cone : j["max_cones"]) {
    if (!cone.is_array()) throw ArgumentError("max_cones must be arrays of indices");
    f.max_cones.push_back(cone.get<std::vector<int>>());
  }
  return f;
}

}  // namespace hodgecalc
