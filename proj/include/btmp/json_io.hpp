#pragma once

#include <charconv>
#include <string>

#include <json.hpp>

#include "btmp/meijer.hpp"
#include "btmp/positivity.hpp"
#include "btmp/quadrature.hpp"

// JSON views of the library's report and spec types. Rationals are emitted
// as canonical "num/den" strings (plain integer when den == 1); doubles use
// the shortest round-trip decimal form so output is byte-reproducible.

namespace btmp {

using Json = nlohmann::ordered_json;

inline std::string rational_to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline std::string format_double(double v) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

inline Json to_json(const std::vector<Rational>& list) {
  Json arr = Json::array();
  for (const auto& q : list) arr.push_back(rational_to_string(q));
  return arr;
}

inline Json to_json(const MeijerGSpec& s) {
  Json j;
  j["m"] = s.m;
  j["n"] = s.n;
  j["p"] = s.p;
  j["q"] = s.q;
  j["alpha"] = to_json(s.alpha);
  j["beta"] = to_json(s.beta);
  j["prefactor"] = format_double(s.prefactor);
  j["arg_scale"] = rational_to_string(s.arg_scale);
  j["arg_sign"] = s.arg_sign;
  return j;
}

inline Json to_json(const HypTerm& t) {
  Json j;
  j["coefficient"] = format_double(t.coefficient);
  j["exponent"] = rational_to_string(t.exponent);
  j["num_params"] = to_json(t.num_params);
  j["den_params"] = to_json(t.den_params);
  return j;
}

inline Json to_json(const WeightRepresentation& rep) {
  Json j;
  j["M"] = rep.M;
  j["normalized"] = rep.normalized;
  Json terms = Json::array();
  for (const auto& t : rep.terms) terms.push_back(to_json(t));
  j["terms"] = terms;
  Json dropped = Json::array();
  for (const auto& e : rep.dropped_exponents) dropped.push_back(rational_to_string(e));
  j["dropped_exponents"] = dropped;
  return j;
}

inline Json to_json(const PositivityReport& r) {
  Json j;
  j["M"] = r.M;
  j["status"] = r.certified ? "certified-positive" : "not-certifiable";
  Json pairing = Json::array();
  for (const auto& [a, b] : r.pairing) {
    pairing.push_back(Json::array({rational_to_string(a), rational_to_string(b)}));
  }
  j["pairing"] = pairing;
  if (r.witness) {
    Json w;
    w["index"] = r.witness->index;
    w["a"] = rational_to_string(r.witness->a);
    w["b"] = rational_to_string(r.witness->b);
    j["witness"] = w;
  }
  return j;
}

inline Json to_json(const VerificationReport& r) {
  Json j;
  j["name"] = r.name;
  j["M"] = r.M;
  j["parameter"] = format_double(r.parameter);
  j["expected"] = format_double(r.expected);
  j["computed"] = format_double(r.computed);
  j["rel_error"] = format_double(r.rel_error);
  j["passed"] = r.passed;
  j["tolerance"] = format_double(r.tolerance);
  return j;
}

}  // namespace btmp
