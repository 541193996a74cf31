#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

namespace {

struct Run {
  int code = -1;
  std::string out;
};

// Runs the CLI with args; stderr is merged into out when merge is set.
Run run(const std::string& args, bool merge = false) {
  std::string cmd = std::string(COXM06_CLI_PATH) + " " + args + (merge ? " 2>&1" : " 2>/dev/null");
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::size_t count_lines(const std::string& s) {
  std::size_t n = 0;
  for (char c : s) n += c == '\n';
  return n;
}

}  // namespace

TEST_CASE("generate-relations") {
  Run j = run("generate-relations --format json");
  REQUIRE(j.code == 0);
  auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["schema"] == 1);
  CHECK(doc["relations"].size() == 225);
  CHECK(doc["class_sizes"] == nlohmann::json({15, 60, 45, 45, 60}));
  for (const auto& r : doc["relations"])
    for (const auto& t : r["terms"]) CHECK((t["coeff"] == "1/1" || t["coeff"] == "-1/1"));
  CHECK(run("generate-relations --format json").out == j.out);
  Run t = run("generate-relations");
  CHECK(t.code == 0);
  CHECK(count_lines(t.out) == 225);
}

TEST_CASE("emit-matrices and emit-f-table") {
  Run r = run("emit-matrices --which R --format text");
  REQUIRE(r.code == 0);
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);  // header
  int rows = 0;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string label, tok;
    ls >> label;
    int cols = 0;
    while (ls >> tok) ++cols;
    CHECK(cols == 40);
    ++rows;
  }
  CHECK(rows == 24);
  auto a = nlohmann::json::parse(run("emit-matrices --which A --format json").out);
  CHECK(a["rows"] == 16);
  CHECK(a["cols"] == 40);
  CHECK(a["entries"][0].size() == 40);
  Run f = run("emit-f-table");
  CHECK(f.code == 0);
  CHECK(count_lines(f.out) == 15);
  CHECK(f.out.find("f_12.34.56 = ") == 0);
}

TEST_CASE("param-eval") {
  Run ok = run("param-eval --A 2 --B 3 --C 5");
  REQUIRE(ok.code == 0);
  CHECK(ok.out.find("u_12.34.56 = -9\n") != std::string::npos);
  CHECK(ok.out.find("z_24 = -1\n") != std::string::npos);
  auto j = nlohmann::json::parse(run("param-eval --A 1/2 --B 3 --C 7 --format json").out);
  CHECK(j["coordinates"].size() == 24);
  CHECK(j["f"].size() == 15);
  CHECK(j["parameters"]["A"] == "1/2");
  Run bad = run("param-eval --A 1 --B 3 --C 5", true);
  CHECK(bad.code == 1);
  CHECK(bad.out.find("z_24 = 0") != std::string::npos);
  Run bad2 = run("param-eval --A 2 --B 2 --C 5", true);
  CHECK(bad2.code == 1);
  CHECK(bad2.out.find("z_45 = 0") != std::string::npos);
  CHECK(run("param-eval --A x --B 2 --C 5").code == 2);
}

TEST_CASE("verify exit codes") {
  Run o = run("verify --suite orbits --format json");
  CHECK(o.code == 0);
  auto rep = nlohmann::json::parse(o.out);
  CHECK(rep["suite"] == "orbits");
  CHECK(rep["counts"]["fail"] == 0);
  Run m = run("verify --suite substitution --mutate class1:flip-sign");
  CHECK(m.code == 1);
  CHECK(m.out.find("nonzero residue") != std::string::npos);
  CHECK(run("verify --suite bogus").code == 2);
  CHECK(run("verify --suite orbits --mutate class9:flip-sign").code == 2);
  CHECK(run("verify").code == 2);
  CHECK(run("--no-such-flag").code == 2);
  CHECK(run("generate-relations --format yaml").code == 2);
}

TEST_CASE("verify is deterministic") {
  std::string a = run("verify --suite random-points --seed 3 --seed 11 --points 4 --format json").out;
  CHECK(a == run("verify --suite random-points --seed 3 --seed 11 --points 4 --format json").out);
  auto rep = nlohmann::json::parse(a);
  CHECK(rep["seeds"] == nlohmann::json({3, 11}));
  CHECK(rep["checks"].size() == 16);
}
