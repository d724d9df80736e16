#include "aks/trace_json.hpp"

#include <nlohmann/json.hpp>

#include "aks/error.hpp"

namespace aks {

namespace {

using nlohmann::json;

json number(const Natural& x) { return to_string(x); }

template <class T>
json optional_number(const std::optional<T>& x) {
  return x ? number(*x) : json(nullptr);
}

Natural parse_number(const json& j, const char* field) {
  if (!j.is_string()) throw PreconditionError(std::string("trace: field '") + field + "' must be a decimal string");
  auto v = parse_natural(j.get<std::string>());
  if (!v) throw PreconditionError(std::string("trace: field '") + field + "' is not a natural number");
  return *v;
}

std::optional<Natural> parse_optional_number(const json& j, const char* field) {
  if (j.is_null()) return std::nullopt;
  return parse_number(j, field);
}

}  // namespace

std::string trace_to_json(const AksTrace& trace, int indent) {
  json checks = json::array();
  for (const auto& c : trace.congruence_checks) checks.push_back({{"a", number(c.a)}, {"ok", c.ok}});
  json doc = {
      {"schema_version", trace.schema_version},
      {"n", number(trace.n)},
      {"perfect_power", trace.perfect_power
                            ? json{{"base", number(trace.perfect_power->base)},
                                   {"exp", std::to_string(trace.perfect_power->exponent)}}
                            : json(nullptr)},
      {"r", optional_number(trace.r)},
      {"ord_r_n", optional_number(trace.ord_r_n)},
      {"gcd_hit", trace.gcd_hit ? json{{"a", number(trace.gcd_hit->a)}, {"g", number(trace.gcd_hit->g)}}
                                : json(nullptr)},
      {"small_n_shortcut", trace.small_n_shortcut},
      {"ell", optional_number(trace.ell)},
      {"congruence_checks", checks},
      {"verdict", to_string(trace.verdict)},
  };
  return doc.dump(indent);
}

AksTrace trace_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw PreconditionError(std::string("trace: invalid JSON: ") + e.what());
  }
  try {
    AksTrace t;
    t.schema_version = doc.at("schema_version").get<std::string>();
    if (t.schema_version != AksTrace::kSchemaVersion) {
      throw PreconditionError("trace: unsupported schema_version " + t.schema_version);
    }
    t.n = parse_number(doc.at("n"), "n");
    if (const auto& pp = doc.at("perfect_power"); !pp.is_null()) {
      t.perfect_power = PerfectPower{parse_number(pp.at("base"), "perfect_power.base"),
                                     to_u64(parse_number(pp.at("exp"), "perfect_power.exp"))};
    }
    t.r = parse_optional_number(doc.at("r"), "r");
    t.ord_r_n = parse_optional_number(doc.at("ord_r_n"), "ord_r_n");
    if (const auto& g = doc.at("gcd_hit"); !g.is_null()) {
      t.gcd_hit = GcdHit{parse_number(g.at("a"), "gcd_hit.a"), parse_number(g.at("g"), "gcd_hit.g")};
    }
    t.small_n_shortcut = doc.at("small_n_shortcut").get<bool>();
    t.ell = parse_optional_number(doc.at("ell"), "ell");
    for (const auto& c : doc.at("congruence_checks")) {
      t.congruence_checks.push_back({parse_number(c.at("a"), "congruence_checks.a"), c.at("ok").get<bool>()});
    }
    const std::string verdict = doc.at("verdict").get<std::string>();
    if (verdict == "PRIME") {
      t.verdict = Verdict::prime;
    } else if (verdict == "COMPOSITE") {
      t.verdict = Verdict::composite;
    } else {
      throw PreconditionError("trace: unknown verdict " + verdict);
    }
    return t;
  } catch (const json::exception& e) {
    throw PreconditionError(std::string("trace: malformed document: ") + e.what());
  }
}

}  // namespace aks
