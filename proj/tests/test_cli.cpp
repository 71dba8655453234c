#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "glcaps/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "glcaps");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = glcaps::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("cli examples") {
  const auto d = run({"diagram", "--p", "5", "--n", "5", "--s1", "1", "--s2", "1", "--lambda", "4/4"});
  CHECK(d.code == 0);
  CHECK(d.out.rfind("OOVOA\n", 0) == 0);
  CHECK(d.out.find("wall=") != std::string::npos);

  const auto u = run({"--unicode", "diagram", "--p", "5", "--n", "5", "--s1", "1", "--s2", "1", "--lambda", "4/4"});
  CHECK(u.out.rfind("oo∨o∧", 0) == 0);

  const auto n = run({"decnum", "--p", "5", "--n", "7", "--s1", "2", "--s2", "3", "--lambda", "3,1/2,1", "--mu", "2/1"});
  CHECK(n.code == 0);
  CHECK(n.out == "1\n");

  const auto v = run({"verify", "jsf-reduced", "--p", "3", "--n", "4", "--max-size", "6"});
  CHECK(v.code == 0);
  CHECK(v.out.find("PASS") != std::string::npos);
}

TEST_CASE("cli subcommands") {
  CHECK(run({"tilting", "--p", "5", "--n", "7", "--s1", "2", "--s2", "3", "--lambda", "3,2/2,1,1", "--mu", "3/2"}).out ==
        "0\n");
  CHECK(run({"brauer", "count", "--r", "2", "--s", "2"}).out == "24\n");
  CHECK(run({"brauer", "mul", "--a", "1 1 | T1-T2,B1-B2", "--b", "1 1 | T1-T2,B1-B2"}).out ==
        "d * [1 1 | T1-T2,B1-B2]\n");
  CHECK(run({"jsf", "--p", "3", "--n", "4", "--lambda", "3,1/1"}).out == "chi(2,1/-) + chi(3/-)\n");
  CHECK(run({"brauer", "decnum", "--r", "5", "--s", "4", "--delta", "7", "--p", "5", "--lambda", "3,2/2,1,1", "--mu",
             "3,1/2,1"})
            .out.rfind("1", 0) == 0);

  const auto block = run({"block", "--p", "5", "--n", "7", "--s1", "2", "--s2", "3", "--lambda", "3,2/2,1,1"});
  CHECK(block.code == 0);
  CHECK(block.out.find("3,1/2,1") != std::string::npos);

  const auto caps = run({"caps", "--p", "17", "--n", "20", "--s1", "8", "--s2", "7", "--lambda",
                         "9,6,5,4,4,2/8,8,4,3,3,2"});
  CHECK(caps.code == 0);
  CHECK(caps.out.find("A A O V A V V A X O A V!A O V V A") != std::string::npos);

  const auto path = (std::filesystem::temp_directory_path() / "glcaps_test_caps.svg").string();
  CHECK(run({"caps", "--svg", path, "--p", "5", "--n", "7", "--s1", "2", "--s2", "3", "--lambda", "3,2/2,1,1"}).code == 0);
  std::ifstream svg(path);
  std::string first;
  std::getline(svg, first);
  CHECK(first.find("<svg") != std::string::npos);
  std::filesystem::remove(path);

  CHECK(run({"cocaps", "--p", "5", "--n", "7", "--s1", "2", "--s2", "3", "--lambda", "2/1", "--mu", "3,1/2,1"}).code == 0);

  for (const char* cmd : {"caps", "preceq", "decmat", "dagger"}) {
    std::vector<std::string> args{cmd, "--p", "5", "--n", "7", "--lambda", "3,2/2,1,1"};
    if (std::string(cmd) == "dagger") {
      args = {cmd, "--p", "5", "--n", "5", "--s", "1", "--lambda", "4/4"};
    } else {
      args.insert(args.end(), {"--s1", "2", "--s2", "3"});
      if (std::string(cmd) != "decmat") args.insert(args.end(), {"--mu", "2/1"});
    }
    INFO(cmd);  // mu = [2,1] lies below lambda
    CHECK(run(args).code == 0);
  }
  CHECK(run({"dagger", "--p", "5", "--n", "5", "--s", "1", "--lambda", "4/4"}).out == "2/2\n");
}

TEST_CASE("cli json") {
  const auto r = run({"--json", "decnum", "--p", "5", "--n", "7", "--s1", "2", "--s2", "3", "--lambda", "3,1/2,1", "--mu",
                      "2/1"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["schema"] == "glcaps/1");
  CHECK(j["command"] == "decnum");
  CHECK(j["value"] == 1);
  CHECK(j["witness"].size() == 3);

  const auto m = run({"--json", "decmat", "--p", "5", "--n", "7", "--s1", "2", "--s2", "3", "--lambda", "3,2/2,1,1"});
  REQUIRE(m.code == 0);
  CHECK(nlohmann::json::parse(m.out)["schema"] == "glcaps/1");
}

TEST_CASE("cli errors") {
  auto fails = [](std::vector<std::string> args, int code) {
    const auto r = run(std::move(args));
    CHECK(r.code == code);
    CHECK(r.out.empty());
    CHECK_FALSE(r.err.empty());
  };
  fails({}, 1);
  fails({"bogus"}, 1);
  fails({"diagram", "--p", "5", "--n", "5", "--s1", "1", "--s2", "1", "--lambda", "4/x"}, 1);
  fails({"diagram", "--p", "five"}, 1);
  fails({"diagram", "--p", "4", "--n", "5", "--s1", "1", "--s2", "1", "--lambda", "4/4"}, 2);
  fails({"diagram", "--p", "5", "--n", "5", "--s1", "1", "--s2", "1", "--lambda", "1,1/4"}, 2);
  fails({"tilting", "--p", "5", "--n", "7", "--s1", "2", "--s2", "3", "--lambda", "5/-", "--mu", "2/1"}, 2);
  fails({"brauer", "decnum", "--r", "5", "--s", "4", "--delta", "7", "--p", "5", "--lambda", "5/4", "--mu", "3/2"}, 2);
  fails({"brauer", "decnum", "--r", "5", "--s", "4", "--delta", "7", "--n", "13", "--p", "5", "--lambda", "3,2/2,1,1",
         "--mu", "3,1/2,1"},
        2);
  fails({"brauer", "mul", "--a", "1 1 | T1-T2", "--b", "1 1 | T1-T2,B1-B2"}, 2);
  fails({"verify", "nonsense"}, 1);
  CHECK(run({"--help"}).code == 0);
}
