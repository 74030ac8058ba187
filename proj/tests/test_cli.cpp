#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include <json.hpp>

#include "permtree/cli.hpp"

using namespace permtree;

namespace {

namespace fs = std::filesystem;

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

struct Workdir {
  fs::path dir;
  Workdir() {
    dir = fs::temp_directory_path() / ("permtree_cli_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    write("alt5.gens", "degree 5\n(0 1 2)\n(2 3 4)\n");
    write("sym3.gens", "# symmetric group\ndegree 3\n(0 1)\n(0 1 2)\n");
    write("alt3.gens", "degree 3\n(0 1 2)\n");
    write("wreath.gens", "degree 10\n(0 1 2)\n(2 3 4)\n(0 5)(1 6)(2 7)(3 8)(4 9)\n");
  }
  ~Workdir() { fs::remove_all(dir); }
  std::string path(const std::string& name) const { return (dir / name).string(); }
  void write(const std::string& name, const std::string& text) const { std::ofstream(dir / name) << text; }
  std::string read(const std::string& name) const {
    std::ifstream f(dir / name);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
  }
};

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("tree command writes JSON with the C3 edge") {
  Workdir w;
  auto r = run({"tree", "--in", w.path("alt5.gens"), "--out", w.path("tree.json")});
  CHECK(r.code == kExitOk);
  CHECK(r.out.empty());
  auto j = nlohmann::json::parse(w.read("tree.json"));
  std::size_t c3 = 0;
  for (const auto& e : j["edges"])
    if (e["color"] == "C3") {
      ++c3;
      CHECK(e["payload"] == 5);
    }
  CHECK(c3 == 1);
  CHECK_FALSE(fs::exists(w.path("tree.json.tmp")));

  // re-reading and re-serializing is byte-identical
  auto again = run({"tree", "--in", w.path("tree.json")});
  CHECK(again.code == kExitOk);
  CHECK(again.out == w.read("tree.json"));

  auto dot = run({"tree", "--in", w.path("alt5.gens"), "--format", "dot"});
  CHECK(dot.out.rfind("digraph", 0) == 0);
}

TEST_CASE("cuts round trip") {
  Workdir w;
  auto r = run({"cuts", "--in", w.path("wreath.gens"), "--r", "2", "--out", w.path("cuts.json")});
  CHECK(r.code == kExitOk);
  auto again = run({"cuts", "--in", w.path("cuts.json"), "--r", "2"});
  CHECK(again.out == w.read("cuts.json"));
  auto j = nlohmann::json::parse(again.out);
  CHECK(j["r"] == 2);
  CHECK(j["cuts"].size() >= 3);
}

TEST_CASE("bound ledger for Alt(5)") {
  Workdir w;
  auto r = run({"bound", "--in", w.path("alt5.gens"), "--r", "3"});
  CHECK(r.code == kExitOk);
  auto j = nlohmann::json::parse(r.out);
  double expect = std::log(17.0) + 4 * std::log(5.0) + std::log(60.0);
  CHECK(j["total_log"].get<double>() == doctest::Approx(expect));
  std::size_t c3 = 0;
  for (const auto& e : j["ledger"])
    if (e["kind"] == "C3") {
      ++c3;
      CHECK(e["alt_source"] == "order");
    }
  CHECK(c3 == 1);
  CHECK(j["seed"] == 1);

  auto text = run({"bound", "--in", w.path("alt5.gens"), "--format", "text", "--constants", "C1=2"});
  CHECK(text.out.find("seed=1") != std::string::npos);
  CHECK(text.out.find("C1=2") != std::string::npos);

  auto same = run({"bound", "--in", w.path("alt5.gens"), "--r", "3"});
  CHECK(same.out == r.out);
}

TEST_CASE("diam-exact and schreier") {
  Workdir w;
  auto r = run({"diam-exact", "--in", w.path("sym3.gens")});
  CHECK(r.code == kExitOk);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["diameter"] == 3);
  CHECK(j["mode"] == "EXACT_GROUP");
  CHECK(j["generators"].size() == 3);

  auto s = run({"schreier", "--in", w.path("sym3.gens"), "--sub", w.path("alt3.gens")});
  CHECK(s.code == kExitOk);
  auto sj = nlohmann::json::parse(s.out);
  CHECK(sj["index"] == 2);
  CHECK(sj["diameter"] == 1);

  auto limited = run({"schreier", "--in", w.path("sym3.gens"), "--sub", w.path("alt3.gens"), "--max-cosets", "1"});
  CHECK(limited.code == kExitResource);
  auto big = run({"diam-exact", "--in", w.path("alt5.gens")});
  CHECK(big.code == kExitResource);
}

TEST_CASE("conjecture harness from an instance file") {
  Workdir w;
  w.write("inst.jsonl",
          R"j({"name":"A4/V4","factors":[{"degree":4,"G":["(0 1 2)","(1 2 3)"],"Gprime":["(0 1)(2 3)","(0 2)(1 3)"]}]})j"
          "\n"
          R"j({"name":"S3xS3","factors":[{"degree":3,"G":["(0 1)","(0 1 2)"],"Gprime":["(0 1 2)"]},{"degree":3,"G":["(0 1)","(0 1 2)"],"Gprime":["(0 1 2)"]}]})j"
          "\n");
  auto r = run({"conjecture", "--in", w.path("inst.jsonl"), "--threshold", "36"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.rfind("name,k,", 0) == 0);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 3);
  auto js = run({"conjecture", "--in", w.path("inst.jsonl"), "--threshold", "36", "--format", "json"});
  CHECK(nlohmann::json::parse(js.out.substr(0, js.out.find('\n')))["max_index"] == 3);
}

TEST_CASE("usage errors and configuration") {
  Workdir w;
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"frobnicate"}).code == kExitUsage);
  CHECK(run({"tree"}).code == kExitUsage);
  CHECK(run({"tree", "--in", w.path("missing.gens")}).code == kExitUsage);
  CHECK(run({"tree", "--in", w.path("alt5.gens"), "--format", "csv"}).code == kExitUsage);
  CHECK(run({"bound", "--in", w.path("alt5.gens"), "--constants", "C7=1"}).code == kExitUsage);
  CHECK(run({"bound", "--in", w.path("alt5.gens"), "--r", "0"}).code == kExitUsage);
  CHECK(run({"--help"}).code == kExitOk);

  w.write("cfg.ini", "r = 2\nconstants = \"C2=3\"\nseed = 9\n");
  ::setenv("PERMTREE_CONFIG", w.path("cfg.ini").c_str(), 1);
  auto r = run({"bound", "--in", w.path("alt5.gens")});
  ::unsetenv("PERMTREE_CONFIG");
  CHECK(r.code == kExitOk);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["constants"]["r"] == "2");
  CHECK(j["constants"]["C2"] == "3");
  CHECK(j["seed"] == 9);
}

TEST_CASE("verify command") {
  auto r = run({"verify"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("all invariants hold") != std::string::npos);
}

}
