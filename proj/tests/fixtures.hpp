#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "cutsetlab/graph.hpp"

namespace fixtures {

inline std::string data_path(const std::string& name) {
  return std::string(CUTSETLAB_TEST_DATA) + "/" + name;
}

inline std::string read(const std::string& name) {
  std::ifstream in(data_path(name));
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

using cutsetlab::Graph;

// Five vertices, cut sets {}, {2}, {1,2}.
inline Graph g5() { return Graph::from_edges(5, {{1, 2}, {2, 3}, {1, 4}, {2, 4}, {2, 5}, {1, 5}}); }

// Seven vertices; accessible cut-set family that is not strongly accessible.
inline Graph g7() {
  return Graph::from_edges(7, {{3, 6}, {2, 3}, {1, 2}, {1, 4}, {2, 4}, {2, 5}, {1, 5}, {3, 7}});
}

// Nine-vertex accessible graph used by the bridging examples.
inline Graph g9() {
  return Graph::from_edges(9, {{1, 2}, {2, 3}, {3, 5}, {4, 5}, {2, 4}, {2, 8},
                               {7, 8}, {4, 7}, {6, 7}, {3, 8}, {8, 9}, {5, 8}});
}

inline Graph p4() { return Graph::path(4); }

}  // namespace fixtures
