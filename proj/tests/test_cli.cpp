#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include "doctest.h"

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  std::string cmd = std::string(RIL_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = std::fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), got);
  int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

const std::string kExample = "--shape 9,7,7,5,2/2,1 --ribbon '{\"window_lo\":-4,\"steps\":\"BBLLLBBLBLLL\",\"tail_lo\":\"B\",\"tail_hi\":\"L\"}'";

}  // namespace

TEST_CASE("decompose") {
  Run r = run("decompose " + kExample);
  CHECK(r.code == 0);
  CHECK(r.out.find("a = (0,-4,-3,3)") != std::string::npos);
  CHECK(r.out.find("b = (3,5,9,6)") != std::string::npos);
  Run j = run("decompose --json " + kExample);
  CHECK(j.code == 0);
  CHECK(j.out.find("\"a\"") != std::string::npos);
  Run bad = run("decompose --shape 2,1,1/1,1 --ribbon row");
  CHECK(bad.code == 2);
}

TEST_CASE("matrix and minors") {
  CHECK(run("matrix --nvars 3 " + kExample).code == 0);
  CHECK(run("matrix --nvars 3 --minor 1,3,4 " + kExample).code == 0);
  CHECK(run("matrix --nvars 3 --minor 1,9 " + kExample).code == 2);
}

TEST_CASE("remarks are deterministic") {
  Run a = run("remarks");
  Run b = run("remarks");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK_FALSE(a.out.empty());
}

TEST_CASE("Kazhdan-Lusztig fixture fails positivity") {
  CHECK(run("imm kl --fixture remark_1_3 --perm 2143").code == 1);
  CHECK(run("imm kl --fixture nothing").code == 2);
}

TEST_CASE("usage errors") {
  CHECK(run("frobnicate").code == 2);
  CHECK(run("matrix --shape 3,2 --nvars -1").code == 2);
  CHECK(run("--help").code == 0);
}

TEST_CASE("kl-table and a small sweep") {
  Run t = run("kl-table --n 3");
  CHECK(t.code == 0);
  CHECK(t.out.find("123 321 : 1") != std::string::npos);
  CHECK(run("sweep --theorem det --max-cells 4 --max-window 2").code == 0);
  CHECK(run("sweep --theorem 1.1 --max-cells 4 --max-window 2").code == 0);
  CHECK(run("sweep --theorem nope").code == 2);
}
