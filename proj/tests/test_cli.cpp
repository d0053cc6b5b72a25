#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "rank2/errors.hpp"
#include "rank2/fusion_polytope.hpp"
#include "rank2/serialize.hpp"

using namespace rank2;

namespace {

struct Run {
  int code;
  std::string out;
};

// Runs the CLI with `args`, capturing standard output; stderr is discarded.
Run run(const std::string& args) {
  const std::string cmd = std::string(RANK2FUSION_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe);
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("JSON round trip over a sweep") {
  for (LieType t : {LieType::A2, LieType::C2, LieType::G2}) {
    for (Int m1 = 0; m1 <= 2; ++m1)
      for (Int m2 = 0; m2 <= 2; ++m2)
        for (Int n1 = 0; n1 <= 2; ++n1)
          for (Int n2 = 0; n2 <= 2; ++n2) {
            if (!is_admissible(t, Weight{m1, m2}, Weight{n1, n2})) continue;
            const auto d = graded_decompose(t, Weight{m1, m2}, Weight{n1, n2});
            CHECK(graded_from_json(Json::parse(dump_line(to_json(d)))) == d);
          }
  }
}

TEST_CASE("malformed JSON is rejected") {
  CHECK_THROWS_AS(graded_from_json(Json::parse(R"({"type":"A2","lambda":[1],"mu":[0,0],"entries":[]})")),
                  HypothesisViolation);
  CHECK_THROWS_AS(graded_from_json(Json::parse(R"({"type":"B2","lambda":[1,0],"mu":[0,0],"entries":[]})")),
                  HypothesisViolation);
  CHECK_THROWS_AS(graded_from_json(Json::parse(R"({"type":"A2","lambda":[1,0],"mu":[0,0]})")), HypothesisViolation);
}

TEST_CASE("CSV rows") {
  const auto d = graded_decompose(LieType::G2, Weight{1, 0}, Weight{1, 0});
  CHECK(to_csv(d) ==
        "type,lambda1,lambda2,mu1,mu2,nu1,nu2,degree,multiplicity\n"
        "G2,1,0,1,0,2,0,0,1\n"
        "G2,1,0,1,0,1,0,1,1\n"
        "G2,1,0,1,0,0,1,1,1\n"
        "G2,1,0,1,0,0,0,2,1\n");
}

TEST_CASE("decompose") {
  const auto g = run("decompose --type G2 --lambda 1,0 --mu 1,0 --format json");
  CHECK(g.code == 0);
  CHECK(g.out.find(R"({"nu":[0,0],"poly":[0,0,1]})") != std::string::npos);
  CHECK(Json::parse(g.out)["entries"].size() == 4);
  CHECK(run("decompose --type G2 --lambda 1,0 --mu 1,0 --format json").out == g.out);

  const auto z = run("decompose --type A2 --lambda 0,0 --mu 0,0 --format json");
  CHECK(z.code == 0);
  CHECK(z.out == "{\"type\":\"A2\",\"lambda\":[0,0],\"mu\":[0,0],\"entries\":[{\"nu\":[0,0],\"poly\":[1]}]}\n");

  const auto golden = std::filesystem::path(GOLDEN_DIR);
  CHECK(run("decompose --type A2 --lambda 1,0 --mu 0,1 --format json").out == slurp(golden / "A2_w1_w2.json"));
  CHECK(run("decompose --type C2 --lambda 1,0 --mu 1,0 --format json").out == slurp(golden / "C2_w1_w1.json"));
  CHECK(run("decompose --type G2 --lambda 1,0 --mu 1,0 --format json").out == slurp(golden / "G2_w1_w1.json"));
}

TEST_CASE("--out writes the payload to a file") {
  const auto path = std::filesystem::temp_directory_path() / "rank2fusion_cli_test.csv";
  std::filesystem::remove(path);
  CHECK(run("decompose --type C2 --lambda 1,0 --mu 1,0 --format csv --out " + path.string()).code == 0);
  CHECK(slurp(path) == to_csv(graded_decompose(LieType::C2, Weight{1, 0}, Weight{1, 0})));
  std::filesystem::remove(path);
}

TEST_CASE("exit codes") {
  CHECK(run("decompose --type G2 --lambda 1,1 --mu 0,1").code == 2);
  CHECK(run("decompose --type A2 --lambda 1 --mu 0,1").code == 2);
  CHECK(run("decompose --type A2 --lambda -1,0 --mu 0,1").code == 2);
  CHECK(run("decompose --type B2 --lambda 1,0 --mu 0,1").code == 2);
  CHECK(run("decompose --lambda 1,0 --mu 0,1").code == 2);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("").code == 2);
  CHECK(run("--help").code == 0);
  CHECK(run("schur --type A2 --lambda 1,0 --lambda2 1,0 --mu 2,0 --mu2 0,0").code == 2);
}

TEST_CASE("verify, oracle, count, schur") {
  const auto v = run("verify --type C2 --max 0");
  CHECK(v.code == 0);
  CHECK(v.out.rfind("1 pair, all checks pass\n", 0) == 0);

  const auto a = run("verify --type A2 --max 2 --jobs 2 --format json");
  CHECK(a.code == 0);
  const auto j = Json::parse(a.out);
  CHECK(j["pairs"] == 81);
  CHECK(j["failed_pairs"] == 0);
  CHECK(j["first_failure"].is_null());

  const auto single = run("verify --type G2 --lambda 1,2 --mu 4,0 --format json");
  CHECK(single.code == 0);
  CHECK(Json::parse(single.out)["pass"] == true);

  const auto o = run("oracle --type A2 --lambda 1,0 --mu 1,0 --format csv");
  CHECK(o.code == 0);
  CHECK(o.out == "type,lambda1,lambda2,mu1,mu2,nu1,nu2,multiplicity\nA2,1,0,1,0,2,0,1\nA2,1,0,1,0,0,1,1\n");

  const auto c = run("count --type G2 --lambda 1,0 --mu 1,0 --format json");
  CHECK(c.code == 0);
  const auto cj = Json::parse(c.out);
  CHECK(cj["S"] == 4);
  CHECK(cj["T"] == 4);
  CHECK(cj["klimyk"] == 4);
  CHECK(cj["tableaux"] == 4);

  const auto s = run("schur --type A2 --lambda 2,0 --lambda2 0,0 --mu 1,0 --mu2 1,0");
  CHECK(s.code == 0);
  CHECK(s.out.find("verdict: true") != std::string::npos);
  const auto sweep = run("schur --type C2 --max 4 --format json");
  CHECK(sweep.code == 0);
  CHECK(Json::parse(sweep.out)["failed"] == 0);
}
