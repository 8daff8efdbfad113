#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "cutsetlab/vertex_set.hpp"

namespace cutsetlab {

using json = nlohmann::json;

struct VerdictStats {
  std::uint64_t faces_examined = 0;
  std::uint64_t links_checked = 0;
  std::uint64_t work_units = 0;
};

/// Outcome of a check. A false verdict always carries a witness that can be
/// replayed through the operation that produced it.
struct VerdictReport {
  bool verdict = true;
  /// False when the check's hypotheses do not hold for the input; verdict
  /// is then false and the witness names the failed hypothesis.
  bool applicable = true;
  json witness;  // null when absent
  VerdictStats stats;

  static VerdictReport pass(json witness = nullptr) {
    VerdictReport r;
    r.witness = std::move(witness);
    return r;
  }
  static VerdictReport fail(json witness) {
    VerdictReport r;
    r.verdict = false;
    r.witness = std::move(witness);
    return r;
  }
  static VerdictReport not_applicable(std::string reason) {
    VerdictReport r;
    r.verdict = false;
    r.applicable = false;
    r.witness = {{"hypotheses_unmet", std::move(reason)}};
    return r;
  }

  json to_json() const;
};

inline json to_json(VertexSet s) { return s.to_vector(); }

inline json to_json(const std::vector<VertexSet>& sets) {
  json out = json::array();
  for (VertexSet s : sets) out.push_back(s.to_vector());
  return out;
}

/// Reads [1,2,5] back into a VertexSet. Throws json::exception on bad shape.
VertexSet vertex_set_from_json(const json& j);

}  // namespace cutsetlab
