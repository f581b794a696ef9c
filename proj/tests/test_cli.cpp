#include <cstdio>
#include <fstream>
#include <sstream>

#include "doctest.h"

#include "paracyclic/cli.hpp"
#include "paracyclic/constructions.hpp"
#include "paracyclic/serialize.hpp"

using namespace paracyclic;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(TEST_DATA_DIR) + "/" + name; }

std::string temp_file(const std::string& name, const std::string& content) {
  std::string path = "/tmp/paracyclic_test_" + name;
  std::ofstream(path) << content;
  return path;
}

}  // namespace

TEST_CASE("check succeeds on built-ins") {
  for (const char* name : {"ground-ring", "simplex-1", "dual-numbers-twisted", "scalar-twisted-u"}) {
    CAPTURE(name);
    Run r = run({"check", "--builtin", name, "--ring", "Q", "--max-degree", "3"});
    CHECK(r.code == 0);
    CHECK(r.out.find("PASS") != std::string::npos);
    CHECK(r.out.find("class:") != std::string::npos);
  }
}

TEST_CASE("check is deterministic") {
  std::vector<std::string> args{"check", "--builtin", "dual-numbers", "--max-degree", "3",
                                "--format", "structured"};
  Run a = run(args), b = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  Json j = Json::parse(a.out);
  CHECK(j["passed"] == true);
  CHECK(j["class"] == "cyclic");
}

TEST_CASE("build") {
  Run list = run({"build", "--list"});
  CHECK(list.code == 0);
  CHECK(list.out.find("scalar-twisted-u") != std::string::npos);
  CHECK(list.out.find("duchain-file") != std::string::npos);
  Run s = run({"build", "--builtin", "simplex-0", "--max-degree", "2", "--format", "structured"});
  REQUIRE(s.code == 0);
  TruncatedDuplicialModule m = module_from_json(Json::parse(s.out));
  CHECK(m.n_max == 2);
  Run table = run({"build", "--builtin", "ground-ring", "--max-degree", "2"});
  CHECK(table.code == 0);
  CHECK(table.out.find("face") != std::string::npos);
}

TEST_CASE("structured module output feeds back as input") {
  Run s = run({"build", "--builtin", "dual-numbers-twisted", "--max-degree", "2", "--format", "structured"});
  REQUIRE(s.code == 0);
  std::string path = temp_file("module.json", s.out);
  Run c = run({"check", "--input", path});
  CHECK(c.code == 0);
  std::remove(path.c_str());
}

TEST_CASE("decompose") {
  Run r = run({"decompose", "--builtin", "ground-ring", "--degree", "1", "--element", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("s(0)") != std::string::npos);
  Run bad = run({"decompose", "--builtin", "ground-ring", "--degree", "1", "--element", "1,2"});
  CHECK(bad.code == 2);
  Run range = run({"decompose", "--builtin", "ground-ring", "--max-degree", "2", "--degree", "5",
                   "--element", "1"});
  CHECK(range.code == 4);
}

TEST_CASE("homology") {
  Run h = run({"homology", "--builtin", "simplex-1", "--ring", "Z", "--max-degree", "4"});
  CHECK(h.code == 0);
  CHECK(h.out.find("agree: yes") != std::string::npos);
  Run mixed = run({"homology", "--builtin", "ground-ring", "--max-degree", "5", "--weight", "2",
                   "--mixed", "bB", "--format", "structured"});
  REQUIRE(mixed.code == 0);
  Json j = Json::parse(mixed.out);
  CHECK(j["groups"][0]["free_rank"] == 1);
  CHECK(j["groups"][1]["free_rank"] == 0);
  CHECK(j["groups"][2]["free_rank"] == 1);
  Run para = run({"homology", "--builtin", "scalar-twisted-u", "--weight", "1", "--mixed", "bB"});
  CHECK(para.code == 4);
  CHECK_FALSE(para.err.empty());
}

TEST_CASE("dump") {
  Run k = run({"dump", "--builtin", "ground-ring", "--op", "kappa", "--degree", "1"});
  CHECK(k.code == 0);
  CHECK(k.out.rfind("[0]", 0) == 0);
  Run t = run({"dump", "--builtin", "scalar-twisted-u", "--u", "3", "--op", "T", "--degree", "0",
               "--format", "structured"});
  REQUIRE(t.code == 0);
  CHECK(Json::parse(t.out)["matrix"] == Json::parse(R"([["3"]])"));
  Run top = run({"dump", "--builtin", "ground-ring", "--max-degree", "2", "--op", "d", "--degree", "2"});
  CHECK(top.code == 4);
}

TEST_CASE("exit codes for bad input") {
  CHECK(run({"check", "--input", data("malformed.json")}).code == 2);
  CHECK(run({"check", "--input", "/nonexistent.json"}).code == 2);
  CHECK(run({"check", "--builtin", "no-such-module"}).code == 2);
  CHECK(run({"check", "--builtin", "ground-ring", "--ring", "C"}).code == 4);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"homology", "--builtin", "simplex-1", "--ring", "Z/6"}).code == 4);
}

TEST_CASE("a corrupted module exits 3 with a named identity and a witness") {
  Run r = run({"check", "--input", data("ground_ring_corrupted.json")});
  CHECK(r.code == 3);
  CHECK(r.out.find("FAIL") != std::string::npos);
  CHECK(r.out.find("witness") != std::string::npos);
  Run d = run({"dump", "--input", data("ground_ring_corrupted.json"), "--op", "b", "--degree", "1"});
  CHECK(d.code == 3);
  CHECK_FALSE(d.err.empty());
}

TEST_CASE("duchain and algebra files") {
  std::string duchain = temp_file("duchain.json", R"({"ring":"Q","n_max":3,"ranks":[1,1,0,0],
    "b":[[],[["1"]],[],[]],"d":[[["0"]],[],[]]})");
  Run r = run({"check", "--builtin", "duchain-file", "--input", duchain, "--max-degree", "2"});
  CHECK(r.code == 0);
  std::remove(duchain.c_str());
  Json a = to_json(AlgebraSpec::dual_numbers());
  std::string alg = temp_file("algebra.json", a.dump());
  Run h = run({"homology", "--algebra", alg, "--max-degree", "3", "--format", "structured"});
  CHECK(h.code == 0);
  CHECK(Json::parse(h.out)["homology"][0]["free_rank"] == 2);
  std::remove(alg.c_str());
}

TEST_CASE("output file") {
  std::string path = "/tmp/paracyclic_test_out.txt";
  Run r = run({"dump", "--builtin", "ground-ring", "--op", "t", "--degree", "0", "--output", path});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::string line;
  std::getline(in, line);
  CHECK(line == "[1]");
  std::remove(path.c_str());
}
