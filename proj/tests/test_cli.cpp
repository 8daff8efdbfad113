#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cutsetlab/cli.hpp"
#include "cutsetlab/verdict.hpp"
#include "fixtures.hpp"

using cutsetlab::json;
namespace cli = cutsetlab::cli;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "cutsetlab");
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const char* name) { return fixtures::data_path(name); }

std::string temp_file(const std::string& name, const std::string& contents) {
  const auto path = std::filesystem::temp_directory_path() / ("cutsetlab-test-" + name);
  std::ofstream(path) << contents;
  return path.string();
}

}  // namespace

TEST_CASE("cutsets prints the family and unmixedness") {
  const auto r = run({"cutsets", data("g5.txt")});
  CHECK(r.code == cli::kExitTrue);
  CHECK(r.out == "C(G) = {∅,{2},{1,2}}\nunmixed: true\n");

  const auto j = run({"cutsets", data("g7.txt"), "--format", "json"});
  CHECK(j.code == cli::kExitTrue);
  const json parsed = json::parse(j.out);
  CHECK(parsed["unmixed"] == false);
  CHECK(parsed["unmixed_witness"]["S"] == json::array({3}));
  CHECK(parsed["cut_sets"].size() == 5);
}

TEST_CASE("graph6 input") {
  const auto r = run({"cutsets", "--graph6", temp_file("p4.g6", "Ch\n")});
  CHECK(r.code == cli::kExitTrue);
  CHECK(r.out.rfind("C(G) = {∅,{2},{3}}", 0) == 0);
}

TEST_CASE("accessible exits by the graph verdict") {
  CHECK(run({"accessible", data("g5.txt")}).code == cli::kExitTrue);
  const auto seven = run({"accessible", data("g7.txt"), "--format", "json"});
  CHECK(seven.code == cli::kExitFalse);
  const json j = json::parse(seven.out);
  CHECK(j["accessible_system"]["verdict"] == true);
  CHECK(j["strongly_accessible"]["verdict"] == false);
  CHECK(j["strongly_accessible"]["witness"]["S"] == json::array({3}));
}

TEST_CASE("complex lists facets") {
  const auto r = run({"complex", data("g5.txt")});
  CHECK(r.code == cli::kExitTrue);
  CHECK(r.out.find("x3x4x5y3y4y5\n") != std::string::npos);
  CHECK(r.out.find("facets: 9\n") != std::string::npos);
  CHECK(r.out.find("pure: true\n") != std::string::npos);
  CHECK(r.out.find("dimension: 5\n") != std::string::npos);

  const auto j = json::parse(run({"complex", data("g5.txt"), "--format", "json"}).out);
  CHECK(j["facets"].size() == 9);
  CHECK(j["facets"][5]["facet"] == "x1x3y1y3y4y5");

  const auto split = temp_file("split.txt", "4\n1 2\n3 4\n");
  CHECK(run({"complex", split}).code == cli::kExitUsage);
}

TEST_CASE("s2 on graphs and complex files") {
  CHECK(run({"s2", data("g9.txt")}).code == cli::kExitTrue);
  CHECK(run({"s2", data("g7.txt")}).code == cli::kExitFalse);
  const auto two = run({"s2", data("two-triangles.txt"), "--format", "json"});
  CHECK(two.code == cli::kExitFalse);
  CHECK(json::parse(two.out)["witness"]["face"] == "1");
  CHECK(run({"s2", "--complex", data("two-triangles.txt")}).code == cli::kExitFalse);
}

TEST_CASE("reduce") {
  const auto r = run({"reduce", data("g9.txt"), "--set", "1,2,3,4,8"});
  CHECK(r.code == cli::kExitTrue);
  CHECK(r.out.find("result: {3,4,8}") != std::string::npos);

  const auto avoid = run({"reduce", data("g9.txt"), "--set", "1,2,3,4,8", "--avoid", "1,3",
                          "--format", "json"});
  CHECK(avoid.code == cli::kExitTrue);
  CHECK(json::parse(avoid.out)["result"] == json::array({2, 4, 8}));

  const auto p4 = temp_file("p4.txt", "4\n1 2\n2 3\n3 4\n");
  CHECK(run({"reduce", p4, "--set", "2,3", "--avoid", "2,3"}).code == cli::kExitFalse);
  CHECK(run({"reduce", p4, "--set", "2,9"}).code == cli::kExitUsage);
  CHECK(run({"reduce", p4, "--set", "2,x"}).code == cli::kExitUsage);
  CHECK(run({"reduce", p4, "--set", "1,2,3,4"}).code == cli::kExitUsage);
}

TEST_CASE("lemma variants") {
  const auto nested = run({"lemma", data("g9.txt"), "--variant", "4.3", "--t1", "7,8", "--t2",
                           "3,4,8", "--w1", "1,6,9", "--w2", "1,5,6,9"});
  CHECK(nested.code == cli::kExitTrue);
  CHECK(nested.out.rfind("T = {4,8}\n", 0) == 0);

  const auto enclosed =
      run({"lemma", data("g9.txt"), "--variant", "enclosed-neighborhood", "--t1", "2,4,8", "--t2",
           "2,5,7,8", "--w1", "1,3,6,9", "--w2", "1,3,4,6,9"});
  CHECK(enclosed.code == cli::kExitTrue);
  CHECK(enclosed.out.rfind("T = {2,7,8}\n", 0) == 0);

  const auto shared = run({"lemma", data("g9.txt"), "--variant", "4.7", "--t1", "3,4,8", "--t2",
                           "2,7,8", "--w", "1,5,6,9", "--format", "json"});
  CHECK(shared.code == cli::kExitTrue);
  CHECK(json::parse(shared.out)["witness"]["T"] == json::array({2, 4, 8}));

  CHECK(run({"lemma", data("g9.txt"), "--variant", "4.3", "--t1", "3,4,8", "--t2", "7,8", "--w1",
             "1,5,6,9", "--w2", "1,6,9"})
            .code == cli::kExitFalse);
  CHECK(run({"lemma", data("g9.txt"), "--variant", "4.4", "--t1", "7,8", "--t2", "3,4,8", "--w1",
             "1,6,9"})
            .code == cli::kExitUsage);
}

TEST_CASE("sweep") {
  const auto one = run({"sweep", "--max-n", "4", "--check", "s2-equiv-accessible", "--format",
                        "json"});
  CHECK(one.code == cli::kExitTrue);
  const json j = json::parse(one.out);
  CHECK(j.is_object());
  CHECK(j["graphs"] == 1 + 1 + 4 + 38);
  CHECK(j["failures"] == 0);

  const auto many = run({"sweep", "--max-n", "3", "--check", "all", "--format", "json"});
  CHECK(many.code == cli::kExitTrue);
  CHECK(json::parse(many.out).is_array());

  CHECK(run({"sweep", "--max-n", "3", "--check", "bogus"}).code == cli::kExitUsage);
  CHECK(run({"sweep", "--max-n", "8", "--check", "union-remark"}).code == cli::kExitUsage);
  CHECK(run({"sweep", "--max-n", "3", "--min-n", "4", "--check", "union-remark"}).code ==
        cli::kExitUsage);
  CHECK(run({"sweep", "--max-n", "3", "--range", "5", "--check", "union-remark"}).code ==
        cli::kExitUsage);
  CHECK(run({"sweep", "--max-n", "3", "--range", "0:4", "--check", "union-remark"}).code ==
        cli::kExitTrue);
}

TEST_CASE("the order cap follows CUTSETLAB_MAX_N") {
  setenv("CUTSETLAB_MAX_N", "3", 1);
  CHECK(run({"sweep", "--max-n", "4", "--check", "union-remark"}).code == cli::kExitUsage);
  CHECK(run({"realize", "--system", data("triangle-pairs.json"), "--max-n", "4"}).code ==
        cli::kExitUsage);
  setenv("CUTSETLAB_MAX_N", "20", 1);
  CHECK(run({"sweep", "--max-n", "9", "--check", "union-remark"}).code == cli::kExitUsage);
  setenv("CUTSETLAB_MAX_N", "abc", 1);
  CHECK(run({"sweep", "--max-n", "3", "--check", "union-remark"}).code == cli::kExitUsage);
  unsetenv("CUTSETLAB_MAX_N");
}

TEST_CASE("realize and system") {
  const auto none = run({"realize", "--system", data("triangle-pairs.json"), "--max-n", "5"});
  CHECK(none.code == cli::kExitFalse);
  CHECK(none.out == "none within bound (max_n = 5)\n");

  const auto five = temp_file("five.json", R"({"n": 5, "sets": [[], [2], [1, 2]]})");
  const auto r = run({"realize", "--system", five, "--max-n", "5", "--format", "json"});
  CHECK(r.code == cli::kExitTrue);
  CHECK(json::parse(r.out)["witness"]["status"] == "realized");

  const auto seven = temp_file("seven.json", R"({"n": 3, "sets": [[], [2], [3], [1, 2], [1, 2, 3]]})");
  const auto sys = run({"system", "--system", seven, "--format", "json"});
  CHECK(sys.code == cli::kExitTrue);
  const json j = json::parse(sys.out);
  CHECK(j["accessible"]["verdict"] == true);
  CHECK(j["forms_agree"] == true);
  CHECK(j["strongly_accessible"]["deletion"]["verdict"] == false);

  const auto missing = temp_file("missing.json", R"({"n": 2, "sets": [[1]]})");
  CHECK(run({"realize", "--system", missing, "--max-n", "3"}).code == cli::kExitUsage);
  const auto broken = temp_file("broken.json", "{");
  CHECK(run({"system", "--system", broken}).code == cli::kExitUsage);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == cli::kExitUsage);
  CHECK(run({"frobnicate"}).code == cli::kExitUsage);
  CHECK(run({"cutsets", "/nonexistent/graph.txt"}).code == cli::kExitUsage);
  CHECK(run({"cutsets", data("g5.txt"), "--format", "xml"}).code == cli::kExitUsage);
  CHECK(run({"cutsets", temp_file("bad.txt", "3\n1 4\n")}).code == cli::kExitUsage);
  CHECK(run({"--help"}).code == cli::kExitTrue);
  CHECK_FALSE(run({"frobnicate"}).err.empty());
}

TEST_CASE("JSON output re-serializes byte for byte") {
  const std::vector<std::vector<std::string>> commands{
      {"cutsets", data("g9.txt")},
      {"accessible", data("g7.txt")},
      {"complex", data("g5.txt")},
      {"s2", data("g9.txt")},
      {"reduce", data("g9.txt"), "--set", "1,2,3,4,8"},
      {"system", "--system", data("triangle-pairs.json")},
  };
  for (auto args : commands) {
    args.push_back("--format");
    args.push_back("json");
    const auto r = run(args);
    INFO(args.front());
    CHECK(json::parse(r.out).dump(2) + "\n" == r.out);
  }
}
