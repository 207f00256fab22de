#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <sys/wait.h>

#include "cli.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = mcx::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

#ifdef MCX_BINARY
Run run_binary(const std::string& args) {
  const std::string cmd = std::string(MCX_BINARY) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, got);
  int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out, ""};
}
#endif

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("generate") {
  Run h = run({"generate", "--family", "honeycomb", "--r", "1", "--s", "1", "--t", "2"});
  CHECK(h.code == 0);
  CHECK(first_line(h.out) == "10 11");
  Run c = run({"generate", "--family", "caterpillar", "--legs", "2,0,3"});
  CHECK(c.code == 0);
  CHECK(first_line(c.out) == "8 7");
  Run p = run({"generate", "--family", "polygon-line", "--n", "4", "--t", "2"});
  CHECK(first_line(p.out) == "14 15");
  Run j = run({"generate", "path:4", "--format", "json"});
  auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["n"] == 4);
  CHECK(doc["edges"].size() == 3);
}

TEST_CASE("generate writes a file that loads back") {
  auto dir = std::filesystem::temp_directory_path() / "mcx-cli-test";
  std::filesystem::create_directories(dir);
  const std::string path = (dir / "hc.txt").string();
  CHECK(run({"generate", "honeycomb:1,1,2", "-o", path}).code == 0);
  Run v = run({"homology", "--graph", path, "--format", "json"});
  CHECK(v.code == 0);
  CHECK(nlohmann::json::parse(v.out)["betti"]["2"] == 2);
  std::filesystem::remove_all(dir);
}

TEST_CASE("verify") {
  Run h = run({"verify", "honeycomb:1,1,2", "--format", "json"});
  CHECK(h.code == 0);
  auto doc = nlohmann::json::parse(h.out);
  CHECK(doc["ok"] == true);
  CHECK(doc["stages"]["homology"]["betti"]["2"] == 2);

  Run c = run({"verify", "caterpillar:2,2", "--format", "json"});
  CHECK(c.code == 0);
  auto cdoc = nlohmann::json::parse(c.out);
  bool saw = false;
  for (const auto& chk : cdoc["checks"])
    if (chk["name"] == "formula-vs-oracle") {
      saw = true;
      CHECK(chk["pass"] == true);
    }
  CHECK(saw);
  CHECK(c.out.find("S^0 v S^1") != std::string::npos);

  Run p = run({"verify", "path:5"});
  CHECK(p.code == 0);
  CHECK(p.out.find("point") != std::string::npos);
}

TEST_CASE("homotopy and tables") {
  Run h = run({"homotopy", "caterpillar:2,2"});
  CHECK(h.code == 0);
  CHECK(h.out.find("S^0 v S^1") != std::string::npos);
  Run m = run({"homotopy", "--M-poly", "4,2"});
  CHECK(m.out.find("t1t2 + t1t4 + t3t4") != std::string::npos);
  Run l = run({"homotopy", "--L-poly", "2"});
  CHECK(l.out.find("a1 + a2 + a1a2") != std::string::npos);
  Run t = run({"tables", "2"});
  CHECK(t.code == 0);
  CHECK(t.out.find("G4(m1,...,m4) | 0 | 1 | t1t2 + t1t4 + t3t4 | t1t2t3t4") != std::string::npos);
  Run pl = run({"homotopy", "polygon-line:2,3"});
  CHECK(pl.code == 0);
  CHECK(pl.out.find("no closed form") != std::string::npos);
  Run chk = run({"tables", "3", "--values", "1,2,1,1,1,1,2", "--check"});
  CHECK(chk.code == 0);
}

TEST_CASE("exit codes") {
  CHECK(run({"homology", "honeycomb:1,1"}).code == 2);
  CHECK(run({"homology", "blob:3"}).code == 2);
  CHECK(run({"verify", "--nonsense"}).code == 2);
  CHECK(run({"homology", "cycle:2"}).code == 3);
  CHECK(run({"homotopy", "polygon-line:1,3"}).code == 3);
  CHECK(run({"tables", "5"}).code == 3);
  CHECK(run({"homology", "honeycomb:1,1,2", "--face-budget", "10"}).code == 4);
  Run bad = run({"verify", "cycle:6", "--strategy", "avoid", "--avoid", "0,1,2,3,4,5"});
  CHECK(bad.code == 1);
  CHECK(!bad.err.empty());
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("json output is deterministic") {
  for (const char* spec : {"honeycomb:1,1,2", "caterpillar:3,0,2,1", "polygon-line:3,2"}) {
    Run a = run({"verify", spec, "--format", "json"});
    Run b = run({"verify", spec, "--format", "json"});
    CHECK(a.out == b.out);
  }
  Run s1 = run({"sweep", "--family", "caterpillar", "--max-n", "3", "--max-leg", "2", "--jobs", "4", "--format", "json"});
  Run s2 = run({"sweep", "--family", "caterpillar", "--max-n", "3", "--max-leg", "2", "--jobs", "1", "--format", "json"});
  CHECK(s1.code == 0);
  CHECK(s1.out == s2.out);
}

#ifdef MCX_BINARY
TEST_CASE("binary exit codes and output") {
  Run ok = run_binary("verify honeycomb:1,1,2 --format json");
  CHECK(ok.code == 0);
  CHECK(ok.out == run({"verify", "honeycomb:1,1,2", "--format", "json"}).out);
  CHECK(run_binary("homology honeycomb:1").code == 2);
  CHECK(run_binary("homology path:1").code == 3);
  CHECK(run_binary("homology honeycomb:2,2,2 --face-budget 100").code == 4);
  CHECK(run_binary("verify cycle:6 --strategy avoid --avoid 0,1,2,3,4,5").code == 1);
}
#endif

}  // TEST_SUITE
