#pragma once

// Structured command reports and their JSON / text renderings.
//
// JSON schema (keys sorted, complex numbers as [re, im]):
//   { "command", "counts": {"degenerate","fail","pass"}, "details": {...},
//     "seed", "tol", "verdict": "pass"|"fail"|"inconclusive",
//     "witnesses": [ {"point": [[re,im],...], "residual", "signed_distance"} ] }

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "gausslucas/geometry.hpp"
#include "gausslucas/harness.hpp"
#include "gausslucas/poly.hpp"

namespace gausslucas {

using Json = nlohmann::json;

struct Witness {
  ComplexVector point;
  double residual = 0;
  double signed_distance = 0;
};

struct Report {
  std::string command;
  std::uint64_t seed = 0;
  double tol = kDefaultTol;
  Verdict verdict = Verdict::pass;
  Json details = Json::object();
  std::vector<Witness> witnesses;
  std::size_t pass = 0, fail = 0, degenerate = 0;
};

enum class Format { text, json };

inline Json complex_json(Complex c) { return Json::array({c.real(), c.imag()}); }

inline Json complex_list_json(std::span<const Complex> v) {
  Json out = Json::array();
  for (Complex c : v) out.push_back(complex_json(c));
  return out;
}

inline Json point_json(const Point2& p) { return Json::array({p.x, p.y}); }

inline Json box_union_json(const BoxUnion& bu) {
  Json boxes = Json::array();
  for (const auto& b : bu.boxes) boxes.push_back({{"lo", b.lo}, {"hi", b.hi}});
  return boxes;
}

inline Json polygon_json(const ConvexPolygon& hull) {
  Json v = Json::array();
  for (const auto& p : hull.vertices) v.push_back(point_json(p));
  return v;
}

inline Json to_json(const Report& r) {
  Json witnesses = Json::array();
  for (const auto& w : r.witnesses)
    witnesses.push_back({{"point", complex_list_json(w.point)}, {"residual", w.residual},
                         {"signed_distance", w.signed_distance}});
  return Json{{"command", r.command},
              {"seed", r.seed},
              {"tol", r.tol},
              {"verdict", to_string(r.verdict)},
              {"details", r.details},
              {"witnesses", witnesses},
              {"counts", {{"pass", r.pass}, {"fail", r.fail}, {"degenerate", r.degenerate}}}};
}

/// One line per top-level key; the details object is flattened one level.
inline std::string to_text(const Report& r) {
  const Json j = to_json(r);
  std::string out;
  for (const auto& [key, value] : j.items()) {
    if (key == "details" && value.is_object()) {
      for (const auto& [dk, dv] : value.items()) out += "details." + dk + ": " + dv.dump() + "\n";
    } else if (key == "witnesses") {
      out += "witnesses: " + std::to_string(value.size()) + "\n";
      for (const auto& w : value) out += "  witness: " + w.dump() + "\n";
    } else {
      out += key + ": " + (value.is_string() ? value.get<std::string>() : value.dump()) + "\n";
    }
  }
  return out;
}

inline std::string emit_report(const Report& r, Format f) {
  return f == Format::json ? to_json(r).dump(2) + "\n" : to_text(r);
}

inline int exit_code(Verdict v) {
  switch (v) {
    case Verdict::pass: return 0;
    case Verdict::fail: return 1;
    default: return 3;
  }
}

}  // namespace gausslucas
