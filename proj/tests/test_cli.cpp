#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>
#include <vector>
#include <sys/wait.h>

#include <json.hpp>

namespace {

struct Run {
  int code;
  std::string out;
};

// stdout only; stderr goes to /dev/null
Run run(const std::string& args) {
  std::string cmd = std::string(CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p);
  std::string out;
  std::array<char, 4096> buf;
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), got);
  int status = pclose(p);
  return {WEXITSTATUS(status), out};
}

const std::string fixtures = FIXTURE_DIR;

}  // namespace

TEST_CASE("cli: derive") {
  Run r = run("derive --kind lame --n 11/6 --target S4");
  CHECK(r.code == 0);
  CHECK(r.out.find("tables=2") == 0);
  CHECK(r.out.find("22 [1^2 2^10, 3^5 7^1, 2^1 4^5]") != std::string::npos);
  Run j = run("--format json derive --kind lame --n 11/6 --target S4");
  auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["tables"].size() == 2);
  CHECK(run("derive --kind lame --n 1/3 --target A4").code == 2);
}

TEST_CASE("cli: enumerate") {
  Run r = run("enumerate --passport '[1^2 2^4, 3^2 4^1, 2^1 4^2]'");
  CHECK(r.code == 0);
  CHECK(r.out.rfind("classes=3 degree=10 defect=0\n", 0) == 0);
  CHECK(run("enumerate --passport '[2^2, 2^2, 4^1]'").code == 2);
  CHECK(run("enumerate --passport '[1^2 2^4, 3^2 4^1, 2^2 4^1]'").code == 2);
  CHECK(run("enumerate --passport '[2^25, 2^1 3^16, 50^1]'").code == 3);
  Run none = run("enumerate --passport '[1^1 2^7, 3^5, 2^3 9^1]'");
  CHECK(none.code == 0);
  CHECK(none.out.rfind("classes=0", 0) == 0);
  CHECK(run("enumerate --passport 'nonsense'").code == 1);
  auto doc = nlohmann::json::parse(run("--format json enumerate --passport '[1^2 2^4, 3^2 4^1, 2^1 4^2]'").out);
  CHECK(doc["classes"] == 3);
  CHECK(doc["status"] == "found");
}

TEST_CASE("cli: check-n") {
  Run r = run("check-n --group G13 --kind lame --n 1/6");
  CHECK(r.code == 0);
  CHECK(r.out == "true\n");
  CHECK(run("check-n --group G12 --kind lame --n 1/2").out == "false\n");
  CHECK(run("check-n --group S4 --kind gen3 --n 1/4 --n1 1/8").out == "true\n");
  CHECK(run("check-n --group G99 --kind lame --n 1/2").code == 1);
}

TEST_CASE("cli: blocks on the S30 fixture") {
  auto doc = nlohmann::json::parse(run("--format json blocks --dessin " + fixtures + "/s30.json").out);
  CHECK(doc["primitive"] == false);
  CHECK(doc["blocks"][0] == nlohmann::json{1, 3, 6, 8, 13, 15, 21, 23, 26, 28});
  Run seeded = run("blocks --dessin " + fixtures + "/s30.json --seed 1,3");
  CHECK(seeded.out == "blocks=3 size=10\n");
  CHECK(run("blocks --sigma0 '(1 2)' --sigma1 '(1 2 3)'").out == "primitive\n");
}

TEST_CASE("cli: profile") {
  Run r = run("profile --f 'x(x^2+190x-1215)^2/(5x+27)^4' --compose 'x^2+1' --expect '[1^2 2^4, 3^2 4^1, 2^1 4^2]'");
  CHECK(r.code == 0);
  CHECK(r.out == "[1^2 2^4, 3^2 4^1, 2^1 4^2] belyi\n");
  CHECK(run("profile --f '-2x(2x^2-20x+45)^2/(27(5x-32))' --expect '[1^1 2^2, 2^1 3^1, 1^1 4^1]'").code == 2);
  CHECK(run("profile --f 'x +'").code == 1);
}

TEST_CASE("cli: family, validate, export-dot") {
  Run l = run("family --list");
  CHECK(l.code == 0);
  CHECK(l.out.find("BM2.case1\t") != std::string::npos);
  Run f = run("family --id BM2.case3 --k 2");
  CHECK(f.code == 0);
  CHECK(f.out == "BM2.case3 k=2 degree=30 [1^3 2^10 7^1, 3^10, 2^1 4^7]\n");
  CHECK(run("family --id BM2.case3 --k 0").code == 1);
  CHECK(run("family --id nope --k 1").code == 1);

  CHECK(run("validate --dessin " + fixtures + "/s30.json").out == "valid [1^2 2^14, 3^7 9^1, 2^1 4^7]\n");
  CHECK(run("validate --sigma0 '(1 2)' --sigma1 '(3 4)'").code == 2);
  CHECK(run("validate --sigma0 '(1 2 3)' --sigma1 '(1 2 3)'").code == 2);
  CHECK(run("validate --sigma0 '(1 2' --sigma1 '(1 3)'").code == 1);
  CHECK(run("validate --dessin /nonexistent.json").code == 1);

  Run dot = run("export-dot --dessin " + fixtures + "/s30.json");
  CHECK(dot.code == 0);
  CHECK(dot.out.find("graph") != std::string::npos);
}

TEST_CASE("cli: usage errors") {
  CHECK(run("").code == 1);
  CHECK(run("frobnicate").code == 1);
  CHECK(run("--format yaml check-n --group G13 --kind lame --n 1/6").code == 1);
  CHECK(run("derive --n 1/6").code == 1);
}

TEST_CASE("cli: byte-identical output") {
  for (const std::string& args : std::vector<std::string>{"--format json enumerate --passport '[1^2 2^10, 3^5 7^1, 2^1 4^5]'",
                                 "--jobs 3 --format json enumerate --passport '[1^2 2^10, 3^5 7^1, 2^1 4^5]'",
                                 "--format json family --id M3.case9 --k 1 --l 1",
                                 "--format json blocks --dessin " + fixtures + "/s30.json"}) {
    CAPTURE(args);
    CHECK(run(args).out == run(args).out);
  }
  CHECK(run("--jobs 1 --format json enumerate --passport '[1^2 2^10, 3^5 7^1, 2^1 4^5]'").out ==
        run("--jobs 4 --format json enumerate --passport '[1^2 2^10, 3^5 7^1, 2^1 4^5]'").out);
}
