#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

namespace fs = std::filesystem;

const std::string kCli = VSCKIN_CLI_PATH;
const std::string kConfigs = VSCKIN_CONFIG_DIR;

int run(const std::string& args, const fs::path& out = "/dev/null") {
  const std::string cmd = kCli + " " + args + " > " + out.string() + " 2>/dev/null";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string read(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

struct TempDir {
  fs::path path = fs::temp_directory_path() / "vsckin_cli_test";
  TempDir() { fs::create_directories(path); }
  ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("simulate writes deterministic CSV and JSON") {
    TempDir tmp;
    const std::string cfg = "--config " + kConfigs + "/reaction1.json";
    CHECK(run("simulate " + cfg + " --out " + (tmp.path / "a.csv").string()) == 0);
    CHECK(run("simulate " + cfg + " --out " + (tmp.path / "b.csv").string()) == 0);
    CHECK(read(tmp.path / "a.csv") == read(tmp.path / "b.csv"));
    CHECK(read(tmp.path / "a.csv").rfind("# fingerprint=", 0) == 0);
    CHECK(run("simulate " + cfg + " --format json --regime bare --method uniformized --out " +
              (tmp.path / "a.json").string()) == 0);
    CHECK(read(tmp.path / "a.json").find("\"kind\": \"bare\"") != std::string::npos);
    CHECK(run("--simd scalar simulate " + cfg, tmp.path / "scalar.csv") == 0);
    CHECK(read(tmp.path / "scalar.csv").size() > 1000);
  }

  TEST_CASE("compare and sweep") {
    TempDir tmp;
    CHECK(run("compare --config " + kConfigs + "/reaction3.json --regimes bare,vsc",
              tmp.path / "c.csv") == 0);
    CHECK(read(tmp.path / "c.csv").find("runs=bare;vsc") != std::string::npos);
    CHECK(run("sweep --config " + kConfigs + "/reaction1.json --param kappa --values 0,0.1,1",
              tmp.path / "s.csv") == 0);
    CHECK(read(tmp.path / "s.csv").find("runs=kappa=0;kappa=0.1;kappa=1") != std::string::npos);
  }

  TEST_CASE("criterion and fcf print results") {
    TempDir tmp;
    CHECK(run("criterion --epsilon 1 --N 1e6 --kr 1 --kd 1 --kf 2", tmp.path / "c.txt") == 0);
    const std::string c = read(tmp.path / "c.txt");
    CHECK(c.find("modifiable = false") != std::string::npos);
    CHECK(c.find("rhs = 0.5") != std::string::npos);
    CHECK(c.find("k_ssa = 1") != std::string::npos);
    CHECK(run("fcf --lambda 1.5 --max-level 1", tmp.path / "f.txt") == 0);
    CHECK(read(tmp.path / "f.txt").find("1,0,0.486978") != std::string::npos);
  }

  TEST_CASE("exit codes") {
    CHECK(run("") == 2);
    CHECK(run("simulate") == 2);
    CHECK(run("simulate --config /nonexistent.json") == 1);
    CHECK(run("simulate --config " + kConfigs + "/reaction1.json --regime strong") == 2);
    CHECK(run("sweep --config " + kConfigs + "/reaction1.json --param kappa --values -1") == 2);
    CHECK(run("criterion --epsilon 1 --N 10 --kr 0 --kd 0") == 2);
    CHECK(run("--simd bogus fcf --lambda 1") == 2);
    CHECK(run("compare --config " + kConfigs + "/reaction1.json --out /nonexistent/dir/x.csv") == 1);
  }
}
