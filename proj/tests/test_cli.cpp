#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include <nlohmann/json.hpp>

// LUCAS_COUNT and LUCAS_DATA come from the build.

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  const std::string cmd = "cd '" LUCAS_DATA "' && " + env + " '" LUCAS_COUNT "' " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

nlohmann::json results(const std::string& args) {
  const auto r = run(args);
  REQUIRE(r.code == 0);
  return nlohmann::json::parse(r.out).at("results");
}

}  // namespace

TEST_CASE("luc") {
  auto r = results("luc triangle.json");
  CHECK(r["count"] == "2");
  CHECK(r["m"] == "9");
  r = results("luc t3.json");
  CHECK(r["count"] == "10");
  CHECK(r["m"] == "104");
  CHECK(results("luc empty-vertex.json")["m"] == "2");
  CHECK(results("luc wheel4.json")["count"] == "12");
  const auto listed = results("luc t3.json --list");
  CHECK(listed["colorings"].size() == 10);
  CHECK(run("luc t5.json --list --limit 3").code == 4);
}

TEST_CASE("reports are byte-identical across runs and thread counts") {
  for (const std::string args : {"luc t4.json", "match t5.json", "karoubi trefoil.json", "asm enum --n 4",
                                 "verify 2 --random 5 --seed 7"}) {
    const auto a = run(args);
    const auto b = run(args);
    const auto c = run("--jobs 3 " + args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out == c.out);
  }
  CHECK(run("luc t4.json", "LUCAS_COUNT_JOBS=2").out == run("luc t4.json").out);
}

TEST_CASE("input records carry a digest") {
  const auto doc = nlohmann::json::parse(run("luc triangle.json").out);
  CHECK(doc["command"] == "luc");
  REQUIRE(doc["inputs"].contains("triangle.json"));
  CHECK(doc["inputs"]["triangle.json"].get<std::string>().size() == 40);
  CHECK_FALSE(doc.contains("elapsed_ms"));
  CHECK(nlohmann::json::parse(run("--timing luc triangle.json").out).contains("elapsed_ms"));
}

TEST_CASE("blowup, match and statesum") {
  const auto b = results("blowup triangle.json --dot");
  CHECK(b["vertex_origin"].size() == 6);
  CHECK(b["matchings"] == "9");
  CHECK(b["m_of_source"] == "9");
  CHECK(results("match t3.json")["matchings"] == "2");
  CHECK(results("match t5.json --method frontier")["matchings"] == results("match t5.json --method bitmask")["matchings"]);
  const auto p = results("match polygon4.json --list");
  CHECK(p["matchings"] == "2");
  CHECK(p["list"].size() == 2);
  const auto s = results("statesum line4.json --distinguished 0 3");
  CHECK(s["state_sum"]["terms"]["yy"] == "1");
  CHECK(s["state_sum"]["terms"]["nn"] == "1");
  CHECK(run("statesum line4.json --distinguished 0 0").code == 3);
}

TEST_CASE("asm and aztec") {
  const auto e = results("asm enum --n 4");
  CHECK(e["count"] == "42");
  CHECK(e["restricted_count"] == "42");
  const auto c = results("asm to-coloring asm3.json");
  CHECK(c["boundary"]["1"] == "y");
  CHECK(results("aztec --n 3")["matchings"] == "64");
}

TEST_CASE("regions") {
  CHECK(results("region hex --a 2 --b 2 --c 2")["matchings"] == "20");
  const auto t = results("region ta --a 3");
  CHECK(t["matchings"] == "104");
  CHECK(t["table"] == "104");
  CHECK(t["cells"] == 36);
}

TEST_CASE("karoubi and verify") {
  const auto k = results("karoubi hopf.json");
  CHECK(k["report"]["summands"] == "6");
  CHECK(k["report"]["luc"] == "6");
  CHECK(k["link_components"] == 2);
  CHECK(results("karoubi torus-2-6.json")["report"]["summands"] == "66");
  CHECK(run("verify 1 --n 3").code == 0);
  CHECK(run("verify 2 --proj borromean.json").code == 0);
  CHECK(run("verify 3 --n 4").code == 0);
  CHECK(run("verify 4 --a 5").code == 0);
  CHECK(run("verify 5 --map wheel4.json").code == 0);
}

TEST_CASE("exit codes") {
  CHECK(run("").code == 2);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("luc").code == 2);
  CHECK(run("luc malformed.json").code == 2);
  CHECK(run("luc no-such-file.json").code == 2);
  CHECK(run("luc loop.json").code == 3);
  CHECK(run("karoubi triangle.json").code == 2);
  CHECK(run("verify 4 --a 6").code == 4);
  CHECK(run("asm enum --n 9").code == 4);
  CHECK(run("--jobs 0 luc triangle.json").code == 2);
}
