#pragma once

#include <json.hpp>

#include "distcat/coherence.hpp"
#include "distcat/quantum.hpp"
#include "distcat/shor.hpp"

namespace distcat {

// Field order is fixed (ordered_json throughout) so identical invocations
// serialise byte for byte.
using Json = nlohmann::ordered_json;

inline Json to_json(const CMor& m) {
  Json entries = Json::array();
  for (const auto& z : m.entries()) entries.push_back(Json::array({z.real(), z.imag()}));
  return Json{{"dom", m.dom().str()},
              {"cod", m.cod().str()},
              {"rows", m.rows()},
              {"cols", m.cols()},
              {"entries", std::move(entries)}};
}

inline Json to_json(const BMor& m) {
  Json entries = Json::array();
  for (const auto& b : m.entries()) entries.push_back(static_cast<int>(b));
  return Json{{"dom", m.dom().str()},
              {"cod", m.cod().str()},
              {"rows", m.rows()},
              {"cols", m.cols()},
              {"entries", std::move(entries)}};
}

Json to_json(const DiagramReport& r);
Json to_json(const Circuit& c);
Json to_json(const shor::FactorRun& run);

}  // namespace distcat
