#pragma once

#include <set>
#include <string>

#include "json.hpp"

#include "helixforge/curves/construct.hpp"
#include "helixforge/field/ratfun.hpp"

namespace helixforge::cli {

using nlohmann::json;

/// A JSON object whose keys are checked off as they are read. finish() rejects
/// whatever was never asked for.
class Fields {
 public:
  Fields(const json& j, std::string where);

  bool has(const std::string& key) const;
  const json& required(const std::string& key);
  const json* optional(const std::string& key);
  void finish() const;
  const std::string& where() const { return where_; }

 private:
  const json& j_;
  std::string where_;
  std::set<std::string> seen_;
};

[[noreturn]] void schema_error(const std::string& where, const std::string& what);

/// "p/q", "-3", "0.25" or a JSON integer. Floating JSON numbers are rejected.
Rational parse_rational(const json& j, const std::string& where);
/// Plain JSON number or integer (for tolerances and intervals).
double parse_double(const json& j, const std::string& where);
long parse_int(const json& j, const std::string& where, long lo, long hi);
std::string parse_enum(const json& j, const std::string& where, std::initializer_list<const char*> allowed);

/// Ascending coefficient list ["1", "-3"] for 1 - 3t.
field::Polynomial parse_polynomial(const json& j, const std::string& where);
/// Either a coefficient list or {"num": [...], "den": [...]}, or a cubic rational
/// Bezier {"bezier": [c0, c1, c2, c3], "weights": [w1, w2]}.
field::RatFun parse_ratfun(const json& j, const std::string& where);
std::array<Rational, 3> parse_vec3(const json& j, const std::string& where);

json dump_scalar(const field::SurdScalar& x);
json dump_polynomial(const field::Polynomial& p);
json dump_ratfun(const field::RatFun& f);
json dump_rvf3(const curves::RVF3& v);

}  // namespace helixforge::cli
