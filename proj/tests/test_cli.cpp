#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

// PLANCOL_CLI_PATH is injected by the build
const std::string cli = PLANCOL_CLI_PATH;

int run(const std::string& args) {
  int raw = std::system((cli + " " + args).c_str());
  REQUIRE(raw != -1);
  REQUIRE(WIFEXITED(raw));
  return WEXITSTATUS(raw);
}

int run_env(const std::string& env, const std::string& args) {
  int raw = std::system((env + " " + cli + " " + args).c_str());
  REQUIRE(raw != -1);
  REQUIRE(WIFEXITED(raw));
  return WEXITSTATUS(raw);
}

fs::path scratch() {
  fs::path dir = fs::current_path() / "cli_scratch";
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void spit(const fs::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary);
  out << text;
}

std::string q(const fs::path& p) { return p.string(); }

}  // namespace

TEST_CASE("generate color verify round trip") {
  auto dir = scratch();
  auto g = dir / "grid.json";
  auto c = dir / "grid_colors.json";
  auto t = dir / "grid_trace.csv";
  CHECK(run("generate --family grid --n 16 --seed 1 --out " + q(g)) == 0);
  CHECK(run("color --in " + q(g) + " --preset 4col --out " + q(c) + " --trace " + q(t)) == 0);
  CHECK(run("verify --graph " + q(g) + " --colors " + q(c)) == 0);
  CHECK(slurp(t).rfind("round,messages,max_bits\n", 0) == 0);

  // a tighter palette bound than the coloring uses must fail
  CHECK(run("verify --graph " + q(g) + " --colors " + q(c) + " --palette 1 2>/dev/null") == 1);
}

TEST_CASE("verify rejects a conflicting coloring") {
  auto dir = scratch();
  auto g = dir / "p4.json";
  auto bad = dir / "p4_bad.json";
  CHECK(run("generate --family path --n 4 --seed 1 --out " + q(g)) == 0);
  spit(bad, "{\"palette\": 4, \"colors\": {\"1\": 1, \"2\": 1, \"3\": 2, \"4\": 3}}\n");
  CHECK(run("verify --graph " + q(g) + " --colors " + q(bad) + " 2>/dev/null") == 1);
}

TEST_CASE("input problems exit with two") {
  auto dir = scratch();
  CHECK(run("color --in " + q(dir / "absent.json") + " --preset 4col --out " + q(dir / "x.json") +
            " 2>/dev/null") == 2);
  CHECK(run("generate --family klein_bottle --n 8 --seed 1 --out " + q(dir / "x.json") +
            " 2>/dev/null") == 2);
  CHECK(run("generate --bogus 2>/dev/null") == 2);
  CHECK(run("2>/dev/null") == 2);

  // the triangle free preset refuses a triangulation
  auto tri = dir / "tri.json";
  CHECK(run("generate --family triangulation --n 30 --seed 1 --out " + q(tri)) == 0);
  CHECK(run("color --in " + q(tri) + " --preset 4col --out " + q(dir / "x.json") +
            " 2>/dev/null") == 2);
}

TEST_CASE("bench emits the header even without sizes") {
  auto dir = scratch();
  auto out = dir / "bench_empty.txt";
  CHECK(run("bench --preset 4col --families grid > " + q(out)) == 0);
  CHECK(slurp(out) == "family,n,rounds,colors,proper,worst_shrink\n");
}

TEST_CASE("bench reruns are byte identical") {
  auto dir = scratch();
  auto a = dir / "bench_a.csv";
  auto b = dir / "bench_b.csv";
  std::string args = "bench --preset 4col --families grid,cycle --sizes 16,32 --seed 1 ";
  CHECK(run(args + "--out " + q(a) + " > /dev/null") == 0);
  CHECK(run(args + "--out " + q(b) + " > /dev/null") == 0);
  CHECK(slurp(a) == slurp(b));
  CHECK(slurp(a).rfind("family,n,rounds,colors,proper,worst_shrink\n", 0) == 0);
}

TEST_CASE("the seed environment variable wins") {
  auto dir = scratch();
  auto a = dir / "seed_env.json";
  auto b = dir / "seed_flag.json";
  auto c = dir / "seed_other.json";
  CHECK(run_env("COLOR_SEED=2", "generate --family triangulation --n 24 --seed 9 --out " + q(a)) ==
        0);
  CHECK(run("generate --family triangulation --n 24 --seed 2 --out " + q(b)) == 0);
  CHECK(run("generate --family triangulation --n 24 --seed 9 --out " + q(c)) == 0);
  CHECK(slurp(a) == slurp(b));
  CHECK(slurp(a) != slurp(c));
  CHECK(run_env("COLOR_SEED=abc",
                "generate --family triangulation --n 24 --out " + q(dir / "x.json") +
                    " 2>/dev/null") == 2);
}

TEST_CASE("charge analysis writes a ledger") {
  auto dir = scratch();
  auto g = dir / "k4.json";
  auto ledger = dir / "k4_ledger.json";
  CHECK(run("generate --family complete --n 4 --seed 1 --out " + q(g)) == 0);
  CHECK(run("analyze charge --in " + q(g) + " --ledger " + q(ledger)) == 0);
  std::string text = slurp(ledger);
  CHECK(text.find("\"removed\": 3") != std::string::npos);
  CHECK(text.find("\"max_charge\": \"3/4\"") != std::string::npos);
}

TEST_CASE("lowerbound checks report through exit codes") {
  CHECK(run("lowerbound --family planar4 --k 1 --check forcing > /dev/null") == 0);
  CHECK(run("lowerbound --family outerplanar3 --k 3 --check forcing > /dev/null") == 0);
  CHECK(run("lowerbound --family planar4 --k 2 --check distance > /dev/null") == 0);
  CHECK(run("lowerbound --family planar4 --k 9 --check forcing 2>/dev/null") == 2);
  CHECK(run("lowerbound --family planar4 --k 3 --check swap --t 2 > /dev/null") == 0);
  CHECK(run("lowerbound --family outerplanar3 --k 2 > /dev/null") == 0);
}

TEST_CASE("partition audit lists per iteration shrink") {
  auto dir = scratch();
  auto g = dir / "grid_b.json";
  auto audit = dir / "audit.csv";
  CHECK(run("generate --family grid --n 36 --seed 1 --out " + q(g)) == 0);
  CHECK(run("partition --in " + q(g) + " --preset 4col --audit " + q(audit) + " > /dev/null") == 0);
  CHECK(slurp(audit).rfind("iteration,active,remaining,ratio\n", 0) == 0);
}
