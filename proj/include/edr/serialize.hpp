#pragma once

// JSON documents for certificates and reports. Needs nlohmann/json
// ("json.hpp") on the include path.

#include "edr/adequate.hpp"
#include "edr/checkers.hpp"
#include "edr/complete.hpp"
#include "edr/error.hpp"
#include "edr/literal.hpp"
#include "edr/matrix.hpp"
#include "edr/reduce.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace edr::json {

using Json = nlohmann::ordered_json;

inline Json element(const RingElement& e) { return to_literal(e); }

inline Json elements(const std::vector<RingElement>& v) {
  Json out = Json::array();
  for (const auto& e : v) out.push_back(to_literal(e));
  return out;
}

inline Json matrix(const RingMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_literal(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline Json bezout(const BezoutData& d) {
  return {{"g", element(d.g)}, {"x", element(d.x)}, {"y", element(d.y)}, {"a1", element(d.a1)},
          {"b1", element(d.b1)}};
}

inline Json reduction(const ReductionCertificate& c) {
  return {{"kind", "reduction"},    {"ring", c.D.ring().to_string()}, {"P", matrix(c.P)},
          {"D", matrix(c.D)},       {"Q", matrix(c.Q)},               {"detP", element(c.detP)},
          {"detQ", element(c.detQ)}};
}

inline Json completion(const CompletionCertificate& c) {
  Json steps = Json::array();
  for (const auto& s : c.steps) {
    Json step = {{"size", s.size}, {"rule", s.rule}, {"coefficients", elements(s.coefficients)}};
    step["shift"] = s.shift ? element(*s.shift) : Json(nullptr);
    steps.push_back(std::move(step));
  }
  return {{"kind", "completion"},
          {"ring", c.A.ring().to_string()},
          {"A", matrix(c.A)},
          {"first_row", elements(c.first_row)},
          {"det_target", element(c.det_target)},
          {"det_value", element(c.det_value)},
          {"steps", std::move(steps)}};
}

inline Json split(const RingElement& a, const RingElement& b, const AdequateSplit& s) {
  return {{"kind", "split"},         {"ring", a.ring().to_string()}, {"a", element(a)},
          {"b", element(b)},         {"r", element(s.r)},            {"s", element(s.s)},
          {"power", s.power},        {"witness", bezout(s.witness)}};
}

inline Json series_split(const RingElement& f, const RingElement& g, const SeriesSplit& s) {
  return {{"kind", "series_split"}, {"ring", f.ring().to_string()}, {"f", element(f)},
          {"g", element(g)},        {"s", element(s.s)},            {"t", element(s.t)}};
}

inline Json predicate(const RingDescriptor& ring, const PredicateReport& r) {
  Json out = {{"kind", "predicate"},
              {"ring", ring.to_string()},
              {"predicate", std::string(to_string(r.predicate))},
              {"holds", r.holds}};
  out["witness"] = r.witness ? elements(*r.witness) : Json(nullptr);
  out["elements_scanned"] = r.elements_scanned;
  out["note"] = r.note;
  return out;
}

inline Json verification(const VerificationReport& r) {
  return {{"kind", "verification"}, {"holds", r.holds}, {"failures", r.failures}};
}

inline Json error(const Error& e) {
  return {{"error", {{"code", std::string(to_string(e.code()))}, {"message", e.detail()}}}};
}

namespace detail {

inline const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(0, std::string("missing field '") + key + "'");
  return j.at(key);
}

inline std::string text(const Json& j, const char* key) {
  const auto& v = field(j, key);
  if (!v.is_string()) throw ParseError(0, std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

inline RingElement element_at(const RingDescriptor& ring, const Json& j, const char* key) {
  return parse_element(ring, text(j, key));
}

inline std::vector<RingElement> element_list(const RingDescriptor& ring, const Json& v) {
  if (!v.is_array()) throw ParseError(0, "expected an array of element literals");
  std::vector<RingElement> out;
  for (const auto& e : v) {
    if (!e.is_string()) throw ParseError(0, "element literals must be strings");
    out.push_back(parse_element(ring, e.get<std::string>()));
  }
  return out;
}

inline RingMatrix matrix_at(const RingDescriptor& ring, const Json& j, const char* key) {
  const auto& rows = field(j, key);
  if (!rows.is_array() || rows.empty()) throw ParseError(0, std::string("field '") + key + "' must be a nonempty array");
  std::vector<RingElement> entries;
  std::size_t cols = 0;
  for (const auto& row : rows) {
    auto v = element_list(ring, row);
    if (entries.empty()) cols = v.size();
    if (v.size() != cols || cols == 0) throw ParseError(0, std::string("ragged matrix in '") + key + "'");
    entries.insert(entries.end(), v.begin(), v.end());
  }
  return RingMatrix(ring, rows.size(), cols, std::move(entries));
}

}  // namespace detail

inline Json parse_document(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.byte, "invalid JSON document");
  }
}

inline RingDescriptor ring_of(const Json& j) { return parse_descriptor(detail::text(j, "ring")); }

inline ReductionCertificate reduction_from(const Json& j) {
  auto ring = ring_of(j);
  return {detail::matrix_at(ring, j, "P"), detail::matrix_at(ring, j, "D"),
          detail::matrix_at(ring, j, "Q"), detail::element_at(ring, j, "detP"),
          detail::element_at(ring, j, "detQ")};
}

inline CompletionCertificate completion_from(const Json& j) {
  auto ring = ring_of(j);
  CompletionCertificate c;
  c.A = detail::matrix_at(ring, j, "A");
  c.first_row = detail::element_list(ring, detail::field(j, "first_row"));
  c.det_target = detail::element_at(ring, j, "det_target");
  c.det_value = detail::element_at(ring, j, "det_value");
  return c;
}

}  // namespace edr::json
