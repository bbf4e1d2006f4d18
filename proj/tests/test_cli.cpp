#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <sys/wait.h>

#include <json.hpp>

#include "cli.hpp"
#include "h2/families.hpp"

namespace cli = h2::cli;
namespace fs = std::filesystem;

namespace {

cli::RunConfig config(cli::Command cmd, std::string map, std::string conj, bool weighted = false) {
  cli::RunConfig c;
  c.command = cmd;
  c.map = std::move(map);
  c.conj = std::move(conj);
  c.weighted = weighted;
  return c;
}

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(const cli::RunConfig& c) {
  std::ostringstream out, err;
  const int code = cli::run(c, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "h2cn_test_cli";
  fs::create_directories(dir);
  return dir / name;
}

std::string hermitian_p_literal() {
  const h2::cplx p = *h2::hermitian_jw_solution(0.3, 0.2, 0.0);
  return "jw:" + h2::format_complex(p);
}

}  // namespace

TEST_CASE("classify examples") {
  const Outcome a = run(config(cli::Command::Classify, "0.5,0.25,0.25,1", "jmu:-1", true));
  REQUIRE(a.code == cli::kOk);
  CHECK(nlohmann::json::parse(a.out)["verdict"] == true);
  CHECK(nlohmann::json::parse(a.out)["case"] == "WeightedJmu");

  const Outcome b = run(config(cli::Command::Classify, "1,0,0,2", "jmu:1"));
  REQUIRE(b.code == cli::kOk);
  CHECK(nlohmann::json::parse(b.out)["verdict"] == true);

  const Outcome c = run(config(cli::Command::Classify, "0.5,0.25,0.25,1", "jw:0.4"));
  REQUIRE(c.code == cli::kOk);
  CHECK(nlohmann::json::parse(c.out)["verdict"] == false);

  cli::RunConfig csv = config(cli::Command::Classify, "1,0,0,2", "jmu:1");
  csv.format = "csv";
  CHECK(run(csv).out.rfind("case,verdict,violation\nCompJmu,true,", 0) == 0);
}

TEST_CASE("classify rejects bad input") {
  CHECK(run(config(cli::Command::Classify, "2,0,0,1", "jmu:1")).code == cli::kBadInput);
  CHECK(run(config(cli::Command::Classify, "1,0,0", "jmu:1")).code == cli::kBadInput);
  CHECK(run(config(cli::Command::Classify, "1,0,0,2", "jmu:0.5")).code == cli::kBadInput);
  CHECK(run(config(cli::Command::Classify, "1,0,0,2", "jx:1")).code == cli::kBadInput);
  const Outcome o = run(config(cli::Command::Classify, "1,2,2,4", "jmu:1"));
  CHECK(o.code == cli::kBadInput);
  CHECK(o.out.empty());
  CHECK_FALSE(o.err.empty());
}

TEST_CASE("verify exit codes") {
  SUBCASE("0.7z with J_i") {
    const Outcome o = run(config(cli::Command::Verify, "0.7,0,0,1", "jmu:i"));
    REQUIRE(o.code == cli::kOk);
    const auto j = nlohmann::json::parse(o.out);
    CHECK(j["verdict"] == true);
    CHECK(j["kernel_residual"].get<double>() < 1e-12);
    CHECK(j["consistent"] == true);
  }
  SUBCASE("Hermitian map with the solved p") {
    CHECK(run(config(cli::Command::Verify, "0.11,0.3,-0.3,1", hermitian_p_literal(), true)).code == cli::kOk);
  }
  SUBCASE("corrupted predicate") {
    std::ostringstream out, err;
    const h2::PredicateFn negated = [](const h2::CaseParams& p) { return !h2::predicate(p); };
    CHECK(cli::cmd_verify(config(cli::Command::Verify, "0.7,0,0,1", "jmu:i"), out, err, negated) ==
          cli::kInconsistent);
  }
  SUBCASE("bad input") {
    CHECK(run(config(cli::Command::Verify, "0.7,0,0,1", "jw:1.2")).code == cli::kBadInput);
    cli::RunConfig c = config(cli::Command::Verify, "0.7,0,0,1", "jmu:1");
    c.grid_n = 4;
    CHECK(run(c).code == cli::kBadInput);
  }
  SUBCASE("ill-conditioned grid") {
    CHECK(run(config(cli::Command::Verify, "1e-8,0.5,1e-7,1", "jmu:1")).code == cli::kIllConditioned);
  }
}

TEST_CASE("verify matrix dump") {
  const fs::path dir = scratch("dump");
  fs::create_directories(dir);
  fs::remove(dir / "operator.csv");
  ::setenv("CNORMAL_DUMP_DIR", dir.c_str(), 1);
  cli::RunConfig c = config(cli::Command::Verify, "0.7,0,0,1", "jmu:1");
  c.truncations = {8, 16};
  CHECK(run(c).code == cli::kOk);
  ::unsetenv("CNORMAL_DUMP_DIR");
  std::ifstream f(dir / "operator.csv");
  int lines = 0;
  for (std::string line; std::getline(f, line);) ++lines;
  CHECK(lines == 16);
}

TEST_CASE("sweep") {
  SUBCASE("samples = 0") {
    cli::RunConfig c = config(cli::Command::Sweep, "", "jmu");
    c.samples = 0;
    CHECK(run(c).code == cli::kBadInput);
  }
  SUBCASE("unwritable output path writes nothing") {
    cli::RunConfig c = config(cli::Command::Sweep, "", "jmu");
    c.samples = 3;
    c.out = "/nonexistent-dir/out.csv";
    const Outcome o = run(c);
    CHECK(o.code == cli::kBadInput);
    CHECK(o.out.empty());
    CHECK_FALSE(fs::exists(c.out));
  }
  SUBCASE("unknown family") {
    cli::RunConfig c = config(cli::Command::Sweep, "orbit", "jmu");
    c.samples = 3;
    CHECK(run(c).code == cli::kBadInput);
  }
  SUBCASE("CSV to a file, deterministic") {
    cli::RunConfig c = config(cli::Command::Sweep, "random", "jmu:1");
    c.samples = 8;
    c.out = scratch("sweep.csv").string();
    const Outcome a = run(c);
    REQUIRE(a.code == cli::kOk);
    std::ifstream f(c.out);
    std::stringstream file;
    file << f.rdbuf();
    CHECK(file.str() == a.out);
    CHECK(a.out.rfind("sample,case,verdict,kernel_residual,matrix_residual_max_n,consistent\n", 0) == 0);
    CHECK(a.out.find("summary,CompJmu,8/8,,,1.000000") != std::string::npos);
    CHECK(run(c).out == a.out);
  }
  SUBCASE("Hermitian weighted JW family is all true") {
    cli::RunConfig c = config(cli::Command::Sweep, "hermitian", "jw", true);
    c.samples = 10;
    c.format = "json";
    c.format_given = true;
    const Outcome o = run(c);
    REQUIRE(o.code == cli::kOk);
    const auto j = nlohmann::json::parse(o.out);
    CHECK(j["agreement_rate"] == 1.0);
    for (const auto& row : j["rows"]) CHECK(row["report"]["verdict"] == true);
  }
}

TEST_CASE("binary entry point") {
  const std::string bin = H2CN_BINARY;
  const fs::path out = scratch("bin.json");
  const std::string ok = bin + " classify --map 1,0,0,2 --conj jmu:1 --out " + out.string() + " > /dev/null";
  CHECK(std::system(ok.c_str()) == 0);
  CHECK(fs::exists(out));
  const std::string bad = bin + " classify --map 1,0,0,2 --conj jmu:1 --bogus > /dev/null 2>&1";
  const int status = std::system(bad.c_str());
  CHECK(WEXITSTATUS(status) == 2);
  const std::string zero = bin + " sweep --conj jmu --samples 0 > /dev/null 2>&1";
  CHECK(WEXITSTATUS(std::system(zero.c_str())) == 2);
}
