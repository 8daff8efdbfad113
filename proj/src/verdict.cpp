#include "cutsetlab/verdict.hpp"

namespace cutsetlab {

json VerdictReport::to_json() const {
  return {
      {"verdict", verdict},
      {"applicable", applicable},
      {"witness", witness},
      {"stats",
       {{"faces_examined", stats.faces_examined},
        {"links_checked", stats.links_checked},
        {"work_units", stats.work_units}}},
  };
}

VertexSet vertex_set_from_json(const json& j) {
  VertexSet out;
  for (const auto& v : j) out.insert(v.get<int>());
  return out;
}

}  // namespace cutsetlab
