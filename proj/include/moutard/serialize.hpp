#pragma once

#include <json.hpp>
#include <string>

#include "moutard/ratfun.hpp"
#include "moutard/tripoly.hpp"

namespace moutard {

using Json = nlohmann::ordered_json;

/// [{"ez":int,"ew":int,"et":int,"re":"p/q","im":"p/q"}, ...] in ascending
/// exponent-key order.
Json to_json(const TriPoly& p);
/// {"num": term list, "den": term list} with the denominator expanded.
Json to_json(const RatFun& f);

/// Inverse of to_json(TriPoly). Throws ParseError on malformed input.
TriPoly tripoly_from_json(const Json& j);
RatFun ratfun_from_json(const Json& j);

/// Deterministic report text: two-space indentation, insertion-ordered keys,
/// floating-point numbers with 17 significant digits (non-finite as null).
std::string dump_report(const Json& j);

}  // namespace moutard
