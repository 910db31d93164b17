#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

const fs::path& scratch() {
  static const fs::path dir = [] {
    const fs::path d = fs::temp_directory_path() / "klcenter_cli_test";
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write(const fs::path& p, const std::string& text) { std::ofstream(p) << text; }

struct Run {
  int code;
  std::string out;
  std::string err;
  json parsed() const { return json::parse(out); }
};

Run cli(const std::string& args, const std::string& env = "") {
  const fs::path out = scratch() / "stdout.txt";
  const fs::path err = scratch() / "stderr.txt";
  const std::string cmd = env + " '" KLCENTER_CLI_PATH "' " + args + " >'" + out.string() + "' 2>'" + err.string() + "'";
  const int status = std::system(cmd.c_str());
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, slurp(out), slurp(err)};
}

std::string path(const std::string& name) { return (scratch() / name).string(); }

const char* kPlanar =
    "{\"id\":\"a\",\"points\":[[0,0],[3,1],[5,-2],[7,4],[9,0]]}\n"
    "{\"id\":\"b\",\"points\":[[1,1],[2,-1],[6,0],[8,3],[9,2]]}\n"
    "{\"id\":\"c\",\"points\":[[0,10],[9,10]]}\n";

}  // namespace

TEST_CASE("distance matrix") {
  write(scratch() / "planar.curves", kPlanar);
  const Run r = cli("distance " + path("planar.curves"));
  REQUIRE(r.code == 0);
  const json j = r.parsed();
  CHECK(j["metric"] == "discrete");
  CHECK(j["rows"] == json::array({"a", "b", "c"}));
  for (int i = 0; i < 3; ++i) CHECK(j["matrix"][i][i] == 0.0);
  CHECK(j["matrix"][0][1].get<double>() == doctest::Approx(2.2360679774997898).epsilon(1e-15));
  CHECK(j["matrix"][0][1] == j["matrix"][1][0]);

  const Run c = cli("distance --metric continuous " + path("planar.curves"));
  REQUIRE(c.code == 0);
  CHECK(c.parsed()["matrix"][0][1].get<double>() <= 2.2360679774997898 + 1e-9);
}

TEST_CASE("output is byte-identical across runs") {
  write(scratch() / "planar.curves", kPlanar);
  const std::string args = "cluster --k 2 --ell 3 --search " + path("planar.curves");
  const Run a = cli(args);
  const Run b = cli(args);
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("tolerance from the environment") {
  write(scratch() / "planar.curves", kPlanar);
  const std::string args = "distance --metric continuous " + path("planar.curves");
  const Run coarse = cli(args, "FRECHET_TOL=0.5");
  const Run fine = cli(args);
  REQUIRE(coarse.code == 0);
  const double dc = coarse.parsed()["matrix"][0][1];
  const double df = fine.parsed()["matrix"][0][1];
  CHECK(std::abs(dc - df) <= 0.5);
  CHECK(cli(args, "FRECHET_TOL=abc").code == 1);
  const Run flag = cli("distance --metric continuous --tol 1e-9 " + path("planar.curves"), "FRECHET_TOL=0.5");
  CHECK(flag.parsed()["matrix"][0][1].get<double>() == df);
}

TEST_CASE("csv input") {
  write(scratch() / "walk.csv", "id,x,y\na,0,0\na,1,0\nb,0,1\nb,1,1\n");
  const Run r = cli("distance " + path("walk.csv"));
  REQUIRE(r.code == 0);
  CHECK(r.parsed()["matrix"][0][1] == 1.0);
}

TEST_CASE("simplify writes curves and geojson") {
  write(scratch() / "planar.curves", kPlanar);
  const Run r = cli("simplify --mode min-error --ell 2 --out " + path("simple.curves") + " --emit-geojson " +
                    path("simple.geojson") + " " + path("planar.curves"));
  REQUIRE(r.code == 0);
  const json simplified = r.parsed();
  for (const json& c : simplified["curves"]) CHECK(c["complexity"].get<int>() <= 2);
  CHECK(cli("distance " + path("simple.curves")).code == 0);
  const json geo = json::parse(slurp(scratch() / "simple.geojson"));
  CHECK(geo["type"] == "FeatureCollection");
  CHECK(geo["features"].size() >= 3);
}

TEST_CASE("decide answers with exit codes") {
  write(scratch() / "planar.curves", kPlanar);
  const Run yes = cli("decide --k 3 --ell 5 --delta 0 " + path("planar.curves"));
  CHECK(yes.code == 0);
  CHECK(yes.parsed()["answer"] == "yes");
  const Run no = cli("decide --k 1 --ell 3 --delta 0.1 " + path("planar.curves"));
  CHECK(no.code == 2);
  CHECK(no.parsed()["answer"] == "no");
}

TEST_CASE("input errors exit with 1") {
  CHECK(cli("").code == 1);
  CHECK(cli("distance " + path("missing.curves")).code == 1);
  write(scratch() / "broken.curves", "{\"points\": [[0,0]]}\n{nope\n");
  const Run broken = cli("distance " + path("broken.curves"));
  CHECK(broken.code == 1);
  CHECK(broken.err.find("broken.curves:2") != std::string::npos);
  CHECK(cli("cluster --k 1 " + path("broken.curves")).code == 1);
  CHECK(cli("--help").code == 0);
}

TEST_CASE("hard instance round trip") {
  write(scratch() / "strings.txt", "# three strings\nABB\nBBA\nABA\n");
  const Run gen = cli("gen-hard --variant 2d-discrete --t 4 --superstring ABBA --out " + path("inst2d") + " " +
                      path("strings.txt"));
  REQUIRE(gen.code == 0);
  const std::string center = path("inst2d/center.curves");
  const Run ok = cli("verify --delta 1 " + path("inst2d") + " " + center);
  CHECK(ok.code == 0);
  CHECK(ok.parsed()["ok"] == true);
  CHECK(cli("verify --delta 0.99 " + path("inst2d") + " " + center).code == 2);
  const Run ex = cli("extract --variant 2d-discrete --s 10 --radius 2.59 " + center);
  REQUIRE(ex.code == 0);
  CHECK(ex.parsed()[0]["superstring"] == "ABBA");

  CHECK(cli("gen-hard --variant meb-discrete --t 4 --out " + path("meb") + " " + path("strings.txt")).code == 1);
  CHECK(cli("gen-hard --variant meb-discrete --t 4 --j 2 --jp 2 --out " + path("meb") + " " + path("strings.txt"))
            .code == 0);
}
