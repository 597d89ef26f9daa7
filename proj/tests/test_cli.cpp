#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include "doctest.h"

namespace {

struct Result {
  int code;
  std::string out;
};

// Runs the CLI with `args` (shell syntax), capturing stdout; stderr is discarded.
Result run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " + SNAKE_ATLAS_CLI + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  while (std::fgets(buf.data(), buf.size(), pipe)) out += buf.data();
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST_CASE("polynomials") {
  CHECK(run("poly --which Q --n 4").out == "{\"coeffs\":[5,0,28,0,24],\"min_exp\":0}\n");
  CHECK(run("poly --which R --n 1 --q").out == "{\"t\":[[],[1,1]]}\n");
  CHECK(run("poly --which X --n 1").code == 3);
}

TEST_CASE("triangles") {
  const Result r = run("triangle --kind arnold --n 6 --format csv");
  CHECK(r.code == 0);
  CHECK(r.out.find("4,0,4,8,11,11,14,16,16\n") != std::string::npos);
  CHECK(r.out.find("6,0,80,160,236,304,361,361,418,464,496,512,512\n") != std::string::npos);
  CHECK(run("triangle --kind entringer --n 2").out ==
        "{\"n\":2,\"rows\":[{\"k\":1,\"r\":1,\"value\":1},{\"k\":1,\"r\":2,\"value\":0},{\"k\":2,\"r\":2,\"value\":1}]}\n");
  // Past 64 bits the values come out as exact decimal strings.
  CHECK(run("triangle --kind arnold --n 30").out.find("\"12412017499605318075505128696184832\"") !=
        std::string::npos);
  CHECK(run("triangle --kind pascal --n 3").code == 3);
}

TEST_CASE("families") {
  CHECK(run("family --name rsi-d --n 3").out == "[[-3,1,-2],[-2,1,-3],[1,2,-3],[2,1,-3],[3,1,-2]]\n");
  CHECK(run("family --name snakes --n 3 --first 2 --count").out == "4\n");
  CHECK(run("family --name rsii-b --n 4 --gae 2 --count").code == 0);
  CHECK(run("family --name nope --n 3").code == 3);
  CHECK(run("family --name rsi --n 9").code == 4);
  CHECK(run("family --name rsi --n 4", "SNAKE_ATLAS_MAX_N=3").code == 4);
}

TEST_CASE("bijections") {
  CHECK(run("bijection --name zeta2 --input '[4,-2,1,3,8,5,9,-7,6]'").out == "[3,-1,2,4,7,5,8,-6]\n");
  CHECK(run("bijection --name zeta2 --direction inverse --input '[3,-1,2,4,7,5,8,-6]'").out ==
        "[4,-2,1,3,8,5,9,-7,6]\n");
  CHECK(run("bijection --name gamma --input '[5,3,\"e\",1,\"e\",4,\"e\",2,\"e\"]'").out == "[4,-2,5,-3,-1]\n");
  const Result traced = run("bijection --name phi1 --input '[2,1]' --trace");
  CHECK(traced.out.find("\"trace\":[\"j=1:root\",\"j=2:ii\"]") != std::string::npos);
  CHECK(run("bijection --name phi1 --input '[1,'").code == 5);
  CHECK(run("bijection --name phi1-b --input '[2,-1]'").code == 6);
  CHECK(run("bijection --name phi9 --input '[1]'").code == 3);
}

TEST_CASE("verify") {
  const Result r = run("verify eq-1 --n-max 3");
  CHECK(r.code == 0);
  CHECK(r.out.find("\"status\": \"pass\"") != std::string::npos);
  CHECK(r.out == run("verify eq-1 --n-max 3").out);  // byte-stable
  CHECK(run("verify thm-1-1 --n-max 12").code == 4);
  CHECK(run("verify thm-0-0").code == 3);
}

TEST_CASE("usage errors") {
  CHECK(run("").code == 2);
  CHECK(run("triangle --n 3").code == 2);
}
