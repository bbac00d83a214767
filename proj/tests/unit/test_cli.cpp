#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "rpq/cli/app.hpp"
#include "rpq/cli/tables.hpp"
#include "rpq/suites.hpp"
#include "support.hpp"

using namespace rpq;
using namespace rpq::cli;
using rpq::test::rat;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / "rpq_cli_tests";
  std::filesystem::create_directories(dir);
  return dir / name;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream f(path);
  f << text;
}

std::string trimmed(std::string s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
  return s;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("eval examples") {
    CHECK(trimmed(run({"eval", "number", "--preset", "js", "-p", "1", "-q", "1/2", "-n", "3"}).out) == "7/4");
    CHECK(trimmed(run({"eval", "factorial", "--preset", "js", "-p", "1", "-q", "1/2", "-n", "3"}).out) == "21/8");
    CHECK(trimmed(run({"eval", "binomial", "--preset", "js", "-p", "1", "-q", "1/2", "-m", "3", "-n", "1"}).out) == "7/4");
    CHECK(trimmed(run({"eval", "number", "--preset", "bm", "-q", "1/2", "-n", "2"}).out) == "5/2");
    CHECK(trimmed(run({"eval", "number", "-n", "0"}).out) == "0");
    CHECK(trimmed(run({"zeta", "eval", "-p", "2", "-s", "3"}).out).find("1088/651") != std::string::npos);
  }

  TEST_CASE("exit codes") {
    CHECK(run({"eval", "number", "-p", "abc", "-n", "2"}).code == kExitParseError);
    CHECK(run({"eval", "number", "--preset", "nope", "-n", "2"}).code == kExitParseError);
    CHECK(run({"frobnicate"}).code == kExitParseError);
    CHECK(run({"check"}).code == kExitParseError);
    CHECK(run({"zeta", "eval", "-p", "5", "-s", "1"}).code == kExitDomainError);
    CHECK(run({"eval", "number", "-p", "1/2", "-q", "1/2", "-n", "2"}).code == kExitDomainError);
    CHECK(run({"eval", "number", "-n", "2", "--out", "/nonexistent/dir/out.txt"}).code == kExitIoError);
    CHECK(run({"--help"}).code == kExitOk);
  }

  TEST_CASE("check per module") {
    for (const auto& name : suite_names()) {
      Run r = run({"check", "--module", name});
      CHECK_MESSAGE(r.code == kExitOk, name << ": " << r.err);
    }
    Run c = run({"check", "--module", "gammabeta", "--classical-limit", "--format", "json"});
    CHECK(c.code == kExitOk);
    CHECK(c.out.find("pi") != std::string::npos);
    Run all = run({"check", "--all"});
    CHECK(all.code == kExitOk);
    CHECK(all.out.find("\"suite\"") != std::string::npos);
  }

  TEST_CASE("table round trips") {
    const std::vector<std::vector<std::string>> grids{
        {"table", "number", "--to", "12"},
        {"table", "binomial", "-m", "6", "--to", "6", "--preset", "hn"},
        {"table", "volkenborn", "--to", "3", "--levels", "4"},
        {"table", "zeta", "--from", "1", "--to", "4", "--primes", "2,3"},
    };
    int i = 0;
    for (const auto& grid : grids) {
      for (const std::string ext : {".csv", ".json"}) {
        auto path = scratch("grid" + std::to_string(i++) + ext);
        auto args = grid;
        args.insert(args.end(), {"--out", path.string()});
        REQUIRE(run(args).code == kExitOk);
        Run v = run({"table", grid[1], "--verify", path.string()});
        CHECK_MESSAGE(v.code == kExitOk, v.err);
      }
    }
  }

  TEST_CASE("tampered table is rejected") {
    Run t = run({"table", "number", "--to", "4"});
    std::string text = t.out;
    auto pos = text.rfind(',');
    text = text.substr(0, pos + 1) + "999\n";
    auto path = scratch("tampered.csv");
    write_file(path, text);
    Run v = run({"table", "number", "--verify", path.string()});
    CHECK(v.code == kExitSuiteFailure);
  }

  TEST_CASE("classical Bernoulli table") {
    Run r = run({"table", "bernoulli", "--classical-limit", "--from", "0", "--to", "10"});
    REQUIRE(r.code == kExitOk);
    Table t = table_from_csv(r.out);
    REQUIRE(t.rows.size() == 11);
    const std::vector<BigRational> expected{1, rat(-1, 2), rat(1, 6), 0, rat(-1, 30), 0, rat(1, 42), 0, rat(-1, 30), 0, rat(5, 66)};
    for (std::size_t n = 0; n <= 10; ++n) CHECK(parse_rational(t.rows[n].back()) == expected[n]);
  }

  TEST_CASE("zigzag table") {
    Run r = run({"table", "zigzag", "--classical-limit", "--from", "0", "--to", "7"});
    REQUIRE(r.code == kExitOk);
    Table t = table_from_csv(r.out);
    REQUIRE(t.rows.size() == 8);
    const std::vector<long> expected{1, 1, 1, 2, 5, 16, 61, 272};
    for (std::size_t n = 0; n < 8; ++n) CHECK(parse_rational(t.rows[n].back()) == expected[n]);
  }

  TEST_CASE("empty grid gives a header only") {
    Run r = run({"table", "number", "--from", "5", "--to", "2"});
    CHECK(r.code == kExitOk);
    Table t = table_from_csv(r.out);
    CHECK(t.rows.empty());
    CHECK(t.columns == table_columns(TableKind::number));
  }

  TEST_CASE("custom kernel file") {
    auto path = scratch("kernel.json");
    write_file(path, R"({"numerator": [[1, 0, 1], [0, 1, -1]], "denominator": [[0, 0, "3/10"]]})");
    for (long n : {1L, 4L, 9L}) {
      Run custom = run({"eval", "number", "--kernel", path.string(), "-p", "4/5", "-q", "1/2", "-n", std::to_string(n)});
      Run js = run({"eval", "number", "--preset", "js", "-p", "4/5", "-q", "1/2", "-n", std::to_string(n)});
      CHECK(custom.code == kExitOk);
      CHECK(custom.out == js.out);
    }
    CHECK(run({"eval", "number", "--kernel", path.string(), "--preset", "js", "-n", "2"}).code == kExitParseError);
    write_file(scratch("bad.json"), "{not json");
    CHECK(run({"eval", "number", "--kernel", scratch("bad.json").string(), "-n", "2"}).code != kExitOk);
  }

  TEST_CASE("p-adic commands") {
    CHECK(run({"pgamma", "-n", "4", "--classical-limit", "--prime", "5"}).code == kExitOk);
    CHECK(run({"volkenborn", "--integrand", "power", "-n", "1", "--classical-limit", "--prime", "5"}).code == kExitOk);
    CHECK(run({"spin", "exp", "--generator", "plus", "--hbar", "25", "-t", "1", "-p", "5"}).code == kExitOk);
    CHECK(run({"zeta", "ghost", "--group", "GSp", "-l", "2"}).code == kExitOk);
  }
}
