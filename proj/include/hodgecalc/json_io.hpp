#ifndef HODGECALC_JSON_IO_HPP
#define HODGECALC_JSON_IO_HPP

#include <json.hpp>

#include "hodgecalc/grid.hpp"
#include "hodgecalc/spectral.hpp"
#include "hodgecalc/toric.hpp"

namespace hodgecalc {

// Wire formats. Integers are emitted as JSON numbers up to 2^53 - 1 and as
// decimal strings beyond; readers accept both. Emission uses a fixed key
// order, so print-parse-print is byte-stable.

nlohmann::ordered_json int_to_json(const Int& value);
Int int_from_json(const nlohmann::json& j);

/// {"dim": n, "char": c, "twisted": b, "h": [[row p=0], ..., [row p=n]]}
nlohmann::ordered_json grid_to_json(const HodgeGrid& g);
/// Accepts any table shape so that validate() can report shape violations.
HodgeGrid grid_from_json(const nlohmann::json& j);

/// {"dim": n, "b": [...]}
nlohmann::ordered_json de_rham_to_json(const DeRhamDims& b);
DeRhamDims de_rham_from_json(const nlohmann::json& j);

/// {"dim": n, "hh": {"-n": v, ..., "n": v}} with degree keys spelled out.
nlohmann::ordered_json hochschild_to_json(const HochschildDims& hh);
HochschildDims hochschild_from_json(const nlohmann::json& j);

/// [{"degree": l, "defect": d}, ...] over the carried degree range.
nlohmann::ordered_json defect_to_json(const DefectVector& d);

/// {"dim": n, "rays": [[...], ...], "max_cones": [[indices], ...]}
nlohmann::ordered_json fan_to_json(const Fan& f);
Fan fan_from_json(const nlohmann::json& j);

}  // namespace hodgecalc

#endif
