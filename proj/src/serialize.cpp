#include "moutard/serialize.hpp"

#include <cmath>
#include <cstdio>

#include "moutard/errors.hpp"

namespace moutard {

Json to_json(const TriPoly& p) {
  Json terms = Json::array();
  for (const auto& term : p.terms()) {
    const Exponents e = TriPoly::unpack(term.key);
    Json t;
    t["ez"] = e.ez;
    t["ew"] = e.ew;
    t["et"] = e.et;
    t["re"] = rational_to_string(term.coeff.re());
    t["im"] = rational_to_string(term.coeff.im());
    terms.push_back(std::move(t));
  }
  return terms;
}

Json to_json(const RatFun& f) {
  Json j;
  j["num"] = to_json(f.num());
  j["den"] = to_json(f.den());
  return j;
}

TriPoly tripoly_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("TriPoly JSON must be an array of terms");
  std::vector<std::pair<Exponents, GaussianRational>> terms;
  try {
    for (const auto& t : j) {
      Exponents e{t.at("ez").get<std::uint32_t>(), t.at("ew").get<std::uint32_t>(),
                  t.at("et").get<std::uint32_t>()};
      terms.emplace_back(e, GaussianRational(parse_rational(t.at("re").get<std::string>()),
                                             parse_rational(t.at("im").get<std::string>())));
    }
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(std::string("malformed TriPoly term: ") + ex.what());
  }
  return TriPoly::from_terms(std::move(terms));
}

RatFun ratfun_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("num") || !j.contains("den")) {
    throw ParseError("RatFun JSON must be an object with \"num\" and \"den\"");
  }
  TriPoly den = tripoly_from_json(j["den"]);
  if (den.is_zero()) throw ParseError("RatFun JSON has a zero denominator");
  return RatFun(tripoly_from_json(j["num"]), std::move(den));
}

namespace {

void dump_into(const Json& j, int depth, std::string& out) {
  const std::string pad(2 * (depth + 1), ' ');
  const std::string close(2 * depth, ' ');
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (const auto& [key, value] : j.items()) {
        if (!first) out += ",\n";
        first = false;
        out += pad + Json(key).dump() + ": ";
        dump_into(value, depth + 1, out);
      }
      out += "\n" + close + "}";
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      out += "[\n";
      for (std::size_t k = 0; k < j.size(); ++k) {
        if (k) out += ",\n";
        out += pad;
        dump_into(j[k], depth + 1, out);
      }
      out += "\n" + close + "]";
      return;
    }
    case Json::value_t::number_float: {
      const double v = j.get<double>();
      if (!std::isfinite(v)) {
        out += "null";
        return;
      }
      char buf[40];
      std::snprintf(buf, sizeof buf, "%.17g", v);
      out += buf;
      return;
    }
    default:
      out += j.dump();
  }
}

}  // namespace

std::string dump_report(const Json& j) {
  std::string out;
  dump_into(j, 0, out);
  out += "\n";
  return out;
}

}  // namespace moutard
