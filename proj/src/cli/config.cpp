#include "helixforge/cli/config.hpp"

#include <sstream>

namespace helixforge::cli {

using field::Polynomial;
using field::RatFun;
using field::SurdScalar;

void schema_error(const std::string& where, const std::string& what) {
  throw Error(ErrorKind::Schema, where + ": " + what);
}

Fields::Fields(const json& j, std::string where) : j_(j), where_(std::move(where)) {
  if (!j.is_object()) schema_error(where_, "expected an object");
}

bool Fields::has(const std::string& key) const { return j_.contains(key); }

const json& Fields::required(const std::string& key) {
  if (!j_.contains(key)) schema_error(where_, "missing key \"" + key + "\"");
  seen_.insert(key);
  return j_.at(key);
}

const json* Fields::optional(const std::string& key) {
  if (!j_.contains(key)) return nullptr;
  seen_.insert(key);
  return &j_.at(key);
}

void Fields::finish() const {
  for (auto it = j_.begin(); it != j_.end(); ++it)
    if (!seen_.count(it.key())) schema_error(where_, "unknown key \"" + it.key() + "\"");
}

Rational parse_rational(const json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) {
    try {
      return helixforge::parse_rational(j.get<std::string>());
    } catch (const std::exception& e) {
      schema_error(where, "not an exact rational: \"" + j.get<std::string>() + "\"");
    }
  }
  schema_error(where, "expected an exact rational as an integer or a \"p/q\" string");
}

double parse_double(const json& j, const std::string& where) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) return parse_rational(j, where).convert_to<double>();
  schema_error(where, "expected a number");
}

long parse_int(const json& j, const std::string& where, long lo, long hi) {
  if (!j.is_number_integer()) schema_error(where, "expected an integer");
  long v = j.get<long>();
  if (v < lo || v > hi)
    schema_error(where, "value " + std::to_string(v) + " outside [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  return v;
}

std::string parse_enum(const json& j, const std::string& where, std::initializer_list<const char*> allowed) {
  if (j.is_string()) {
    std::string s = j.get<std::string>();
    for (const char* a : allowed)
      if (s == a) return s;
  }
  std::string list;
  for (const char* a : allowed) list += std::string(list.empty() ? "" : ", ") + a;
  schema_error(where, "expected one of: " + list);
}

Polynomial parse_polynomial(const json& j, const std::string& where) {
  if (!j.is_array() || j.empty()) schema_error(where, "expected a nonempty coefficient list (ascending powers of t)");
  std::vector<SurdScalar> c;
  for (std::size_t i = 0; i < j.size(); ++i) c.emplace_back(parse_rational(j[i], where + "[" + std::to_string(i) + "]"));
  return Polynomial(std::move(c));
}

RatFun parse_ratfun(const json& j, const std::string& where) {
  if (j.is_array()) return RatFun(parse_polynomial(j, where));
  if (j.is_number_integer() || j.is_string()) return RatFun(SurdScalar(parse_rational(j, where)));
  Fields f(j, where);
  if (f.has("bezier")) {
    const json& c = f.required("bezier");
    if (!c.is_array() || c.size() != 4) schema_error(where + ".bezier", "expected four control values");
    std::array<SurdScalar, 4> cs;
    for (int i = 0; i < 4; ++i) cs[i] = parse_rational(c[i], where + ".bezier[" + std::to_string(i) + "]");
    SurdScalar w1(1), w2(1);
    if (const json* w = f.optional("weights")) {
      if (!w->is_array() || w->size() != 2) schema_error(where + ".weights", "expected two interior weights");
      w1 = parse_rational((*w)[0], where + ".weights[0]");
      w2 = parse_rational((*w)[1], where + ".weights[1]");
    }
    f.finish();
    return curves::rational_bezier3(cs[0], cs[1], cs[2], cs[3], w1, w2);
  }
  Polynomial num = parse_polynomial(f.required("num"), where + ".num");
  Polynomial den = parse_polynomial(f.required("den"), where + ".den");
  f.finish();
  if (den.is_zero()) schema_error(where + ".den", "zero denominator");
  return RatFun(num, den);
}

std::array<Rational, 3> parse_vec3(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 3) schema_error(where, "expected three coordinates");
  return {parse_rational(j[0], where + "[0]"), parse_rational(j[1], where + "[1]"),
          parse_rational(j[2], where + "[2]")};
}

json dump_scalar(const SurdScalar& x) {
  if (x.is_rational()) return helixforge::to_string(x.rational_part());
  return json{{"rational", helixforge::to_string(x.rational_part())},
              {"surd", helixforge::to_string(x.surd_part())},
              {"sqrt", x.discriminant()}};
}

json dump_polynomial(const Polynomial& p) {
  json out = json::array();
  for (const auto& c : p.coefficients()) out.push_back(dump_scalar(c));
  return out;
}

json dump_ratfun(const RatFun& f) {
  std::ostringstream text;
  text << f;
  return json{{"num", dump_polynomial(f.num())}, {"den", dump_polynomial(f.den())}, {"text", text.str()}};
}

json dump_rvf3(const curves::RVF3& v) {
  return json{{"x", dump_ratfun(v[0])}, {"y", dump_ratfun(v[1])}, {"z", dump_ratfun(v[2])}};
}

}  // namespace helixforge::cli
