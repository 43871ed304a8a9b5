// Exit-code and format contract of the command-line tool, driven through the
// actual binary.

#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <string>

#include <json.hpp>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(ZDC_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  RunResult r;
  std::array<char, 4096> buf;
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  int status = pclose(p);
  r.exit_code = WEXITSTATUS(status);
  return r;
}

int count_lines(const std::string& s) {
  int n = 0;
  for (char c : s)
    if (c == '\n') ++n;
  return n;
}

}  // namespace

TEST_CASE("constants: row records and domain gates") {
  auto r = run("constants --row 0 --format json");
  REQUIRE(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("mode") == "literal");
  CHECK(j.at("B").get<double>() == 14.159674);
  CHECK(j.at("C").get<double>() > 30000.0);

  auto uniform = run("constants --row 38 --format csv");
  REQUIRE(uniform.exit_code == 0);
  CHECK(uniform.out.find("1.448") != std::string::npos);

  CHECK(run("constants --t0 1e12 --t1 1e13 --alpha0 0.99 --u 2.1 --v 4.4 --w 0.48 --x 7.0")
            .exit_code == 2);
  CHECK(run("constants --row 99").exit_code == 2);

  // log coordinates reach ranges whose heights overflow binary64
  auto big = run("constants --t0-log 500 --t1-log 1000 --alpha0 0.985 "
                 "--u 0.4648597 --v 0.5873406 --w 0.0212707 --x 1.0757433 "
                 "--d3-mode table --format json");
  REQUIRE(big.exit_code == 0);
  auto jb = nlohmann::json::parse(big.out);
  CHECK(jb.at("c1").get<double>() > 0.95);
  CHECK(jb.at("C").get<double>() > 1e6);
}

TEST_CASE("d3 mode resolution: flag beats environment") {
  auto r = run("constants --row 0 --d3-mode table --format json");
  REQUIRE(r.exit_code == 0);
  CHECK(nlohmann::json::parse(r.out).at("d3").get<double>() == 0.003);
  setenv("ZDC_D3_MODE", "table", 1);
  auto env_run = run("constants --row 0 --format json");
  unsetenv("ZDC_D3_MODE");
  REQUIRE(env_run.exit_code == 0);
  CHECK(nlohmann::json::parse(env_run.out).at("mode") == "table");
}

TEST_CASE("table: row counts and tolerance gate") {
  auto r = run("table --which CB --format csv --d3-mode table");
  REQUIRE(r.exit_code == 0);
  CHECK(count_lines(r.out) == 40);  // header + 38 rows + uniform row

  auto all = run("table --which all --format markdown --d3-mode table");
  REQUIRE(all.exit_code == 0);
  for (const char* name : {"### CB", "### b", "### params", "### d", "### c"})
    CHECK(all.out.find(name) != std::string::npos);
  // tables appear in the reference order
  CHECK(all.out.find("### CB") < all.out.find("### b"));
  CHECK(all.out.find("### b") < all.out.find("### params"));
  CHECK(all.out.find("### params") < all.out.find("### d"));
  CHECK(all.out.find("### d") < all.out.find("### c"));
}

TEST_CASE("verify: weight subset passes, full run flags the two stale caps") {
  CHECK(run("verify --only weights --samples 4").exit_code == 0);
  auto full = run("verify --only integrals");
  CHECK(full.exit_code == 1);  // the printed 1e-10/1e-8 caps are not attainable
  CHECK(full.out.find("residual outer tail") != std::string::npos);
}

TEST_CASE("optimize: identity search echoes the stored parameters") {
  auto r = run("optimize --row 0 --seed 42 --iters 0 --format json");
  REQUIRE(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("u").get<double>() == 2.1781287);
  CHECK(j.at("x").get<double>() == 7.0798370);
}

TEST_CASE("compare: external data required, then full pass") {
  auto bare = run("compare");
  CHECK(bare.exit_code == 2);
  auto with = run(std::string("compare --kln-file ") + ZDC_DATA_DIR + "/kln_placeholder.csv");
  CHECK(with.exit_code == 0);
  CHECK(count_lines(with.out) == 40);  // header + 39 rows
  auto t1 = run(std::string("compare --table1 --kln-file ") + ZDC_DATA_DIR +
                "/kln_placeholder.csv");
  CHECK(t1.exit_code == 0);
  CHECK(t1.out.find("improvement_percent") != std::string::npos);
}

TEST_CASE("file output and i/o failures") {
  std::string path = "/tmp/zdc_out_test.json";
  auto r = run("constants --row 3 --format json --out " + path);
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.empty());
  std::string text;
  {
    FILE* f = fopen(path.c_str(), "r");
    REQUIRE(f);
    char buf[8192];
    size_t n = fread(buf, 1, sizeof buf, f);
    text.assign(buf, n);
    fclose(f);
  }
  CHECK(nlohmann::json::parse(text).at("alpha0").get<double>() == 0.9923);
  remove(path.c_str());
  CHECK(run("constants --row 3 --out /nonexistent-dir/x.json").exit_code == 3);
  CHECK(run("compare --kln-file /nonexistent-dir/kln.csv").exit_code == 3);
}

TEST_CASE("schedule export round-trips through --schedule") {
  auto r = run("table --which params --format json");
  REQUIRE(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  REQUIRE(j.is_array());
  REQUIRE(j.size() == 39);
  CHECK(j[0].at("t0_log").get<double>() == 28.729633404596658);
  for (const char* k : {"t0_log", "t1_log", "alpha0", "u", "x", "v", "w"})
    CHECK(j[0].contains(k));
  // feed a one-row schedule back in
  std::string path = "/tmp/zdc_sched_test.json";
  {
    nlohmann::json one = nlohmann::json::array({j[0]});
    FILE* f = fopen(path.c_str(), "w");
    REQUIRE(f);
    std::string text = one.dump();
    fwrite(text.data(), 1, text.size(), f);
    fclose(f);
  }
  auto again = run("table --which CB --format csv --schedule " + path);
  CHECK(again.exit_code == 0);
  CHECK(count_lines(again.out) == 2);  // header + the single custom row
  remove(path.c_str());
}

TEST_CASE("config file supplies defaults, flags win") {
  std::string path = "/tmp/zdc_config_test.json";
  {
    FILE* f = fopen(path.c_str(), "w");
    REQUIRE(f);
    const char* text = "{\"d3_mode\": \"table\", \"format\": \"json\"}";
    fwrite(text, 1, strlen(text), f);
    fclose(f);
  }
  auto r = run("--config " + path + " constants --row 0");
  REQUIRE(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);  // json format came from the config
  CHECK(j.at("mode") == "table");
  auto flag_wins = run("--config " + path + " constants --row 0 --d3-mode literal");
  REQUIRE(flag_wins.exit_code == 0);
  CHECK(nlohmann::json::parse(flag_wins.out).at("mode") == "literal");
  remove(path.c_str());
}
