#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

using nlohmann::json;

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

// Run the installed CLI with the given arguments, capturing stdout.
RunResult run(const std::vector<std::string>& args) {
  std::string command = BJQ_CLI_PATH;
  for (const std::string& a : args) command += " '" + a + "'";
  command += " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buffer[4096];
  size_t got;
  while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) out.append(buffer, got);
  int status = pclose(pipe);
  int code = -1;
  if (WIFEXITED(status)) code = WEXITSTATUS(status);
  return {code, out};
}

json report_of(const RunResult& r) {
  REQUIRE_FALSE(r.out.empty());
  return json::parse(r.out);
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / name).string();
}

}  // namespace

TEST_CASE("help exits cleanly") {
  RunResult r = run({"--help"});
  CHECK(r.exit_code == 0);
}

TEST_CASE("quantize reports the operator in canonical text") {
  RunResult r = run({"quantize", "--rule", "bj", "--expr", "q^2*p^2"});
  CHECK(r.exit_code == 0);
  json report = report_of(r);
  CHECK(report.at("check") == "quantize");
  CHECK(report.at("result") == "qh^2*ph^2 - 2*i*hbar*qh*ph - 2/3*hbar^2");
  CHECK(report.at("inputs").at("rule") == "born-jordan");

  RunResult w = run({"quantize", "--rule", "weyl", "--expr", "q^2*p^2"});
  CHECK(report_of(w).at("result") == "qh^2*ph^2 - 2*i*hbar*qh*ph - 1/2*hbar^2");
}

TEST_CASE("bracket subcommand") {
  RunResult poisson = run({"bracket", "--poisson", "q^3", "p^3"});
  CHECK(poisson.exit_code == 0);
  CHECK(report_of(poisson).at("result") == "9*q^2*p^2");

  RunResult literal = run({"bracket", "--quantum", "q", "p"});
  CHECK(literal.exit_code == 0);
  CHECK(report_of(literal).at("result") == "1");

  RunResult ruled = run({"bracket", "--quantum", "--rule", "bj", "q^3", "p^3"});
  CHECK(ruled.exit_code == 0);
  CHECK(report_of(ruled).at("result") == "9*qh^2*ph^2 - 18*i*hbar*qh*ph - 6*hbar^2");

  // Exactly one bracket kind must be chosen.
  CHECK(run({"bracket", "q", "p"}).exit_code == 2);
  CHECK(run({"bracket", "--poisson", "--quantum", "q", "p"}).exit_code == 2);
}

TEST_CASE("groenewold check passes and reports the scalar") {
  RunResult r = run({"check", "groenewold"});
  CHECK(r.exit_code == 0);
  json report = report_of(r);
  CHECK(report.at("pass") == true);
  CHECK(report.at("result") == "-1/3*hbar^2");
}

TEST_CASE("strengthened check distinguishes the rules") {
  RunResult weyl = run({"check", "strengthened", "--f1", "q^3", "--g2", "p^3", "--rule", "weyl"});
  CHECK(weyl.exit_code == 1);
  json report = report_of(weyl);
  CHECK(report.at("pass") == false);
  CHECK(report.at("result") == "-3/2*hbar^2");

  RunResult bj = run({"check", "strengthened", "--f1", "q^3", "--g2", "p^3", "--rule", "bj"});
  CHECK(bj.exit_code == 0);
  CHECK(report_of(bj).at("pass") == true);

  // Mixed input is a usage error.
  CHECK(run({"check", "strengthened", "--f1", "q*p", "--rule", "bj"}).exit_code == 2);
}

TEST_CASE("covariance and ehrenfest checks pass for any polynomial") {
  RunResult cov = run({"check", "covariance", "--expr", "q^3*p^2 - 2*q*p", "--rule", "weyl"});
  CHECK(cov.exit_code == 0);
  CHECK(report_of(cov).at("pass") == true);

  RunResult ehr = run({"check", "ehrenfest", "--hamiltonian", "1/2*p^2 + q^4", "--rule", "bj"});
  CHECK(ehr.exit_code == 0);
  CHECK(report_of(ehr).at("pass") == true);
}

TEST_CASE("dirac check on linear generators") {
  RunResult r = run({"check", "dirac", "--c", "2", "--k", "1,2", "--l", "0,1", "--f",
                     "q1^2*q2", "--g", "p2^3", "--rule", "bj"});
  CHECK(r.exit_code == 0);
  CHECK(report_of(r).at("pass") == true);
}

TEST_CASE("syntax errors exit with the usage code") {
  CHECK(run({"quantize", "--rule", "bj", "--expr", "q +"}).exit_code == 2);
  CHECK(run({"quantize", "--rule", "banana", "--expr", "q"}).exit_code == 2);
  CHECK(run({"quantize", "--rule", "bj"}).exit_code == 2);  // missing --expr
  CHECK(run({"frobnicate"}).exit_code == 2);
}

TEST_CASE("nullspace listing for a small grid") {
  RunResult r = run({"grid", "nullspace", "--n", "8"});
  CHECK(r.exit_code == 0);
  json report = report_of(r);
  json expected = json::array({{-4, -4}, {-4, -2}, {-4, 2}, {-2, -4}, {2, -4}});
  CHECK(report.at("result") == expected);
  CHECK(report.at("metrics").at("count") == 5);
}

TEST_CASE("matrix check deviation is tiny") {
  RunResult r = run({"grid", "matrix-check", "--n", "16", "--m", "3", "--s", "-2"});
  CHECK(r.exit_code == 0);
  double deviation = report_of(r).at("metrics").at("deviation").get<double>();
  CHECK(deviation < 1e-12);
}

TEST_CASE("grid quantize and wigner round trip through files") {
  std::string op_path = temp_path("bjq_cli_op.json");
  std::string func_path = temp_path("bjq_cli_func.json");

  RunResult q = run({"grid", "quantize", "--rule", "weyl", "--n", "16", "--func", "harper",
                     "--out", op_path});
  CHECK(q.exit_code == 0);
  json qreport = report_of(q);
  CHECK(qreport.at("metrics").at("hermiticity_deviation").get<double>() < 1e-12);

  RunResult w = run({"grid", "wigner", "--op", op_path, "--out", func_path});
  CHECK(w.exit_code == 0);
  json wreport = report_of(w);
  CHECK(wreport.at("metrics").at("max_abs_imag").get<double>() < 1e-12);
  // The round trip must land back near the harper samples: min -2, max 2.
  CHECK(wreport.at("metrics").at("min_real").get<double>() == doctest::Approx(-2.0));
  CHECK(wreport.at("metrics").at("max_real").get<double>() == doctest::Approx(2.0));

  std::filesystem::remove(op_path);
  std::filesystem::remove(func_path);
}

TEST_CASE("unknown builtin names are usage errors") {
  CHECK(run({"grid", "quantize", "--rule", "bj", "--n", "8", "--func", "no_such_thing",
             "--out", temp_path("bjq_cli_unused.json")})
            .exit_code == 2);
}

TEST_CASE("dyn run writes one sample line per time step") {
  std::string out_path = temp_path("bjq_cli_series.jsonl");
  std::string config_path = temp_path("bjq_cli_config.json");
  json config = {{"N", 16},         {"rule", "bj"},
                 {"hamiltonian", "harper"}, {"initial", "gaussian"},
                 {"t_final", 1.0},  {"dt", 0.5},
                 {"observables", json::array({"hamiltonian", "cosq"})},
                 {"out", out_path}};
  {
    std::ofstream f(config_path);
    f << config.dump() << "\n";
  }
  RunResult r = run({"dyn", "run", "--config", config_path});
  CHECK(r.exit_code == 0);
  json report = report_of(r);
  CHECK(report.at("metrics").at("samples") == 3);
  CHECK(report.at("metrics").at("norm_drift").get<double>() < 1e-12);

  std::ifstream lines(out_path);
  std::string line;
  int count = 0;
  double last_t = -1;
  while (std::getline(lines, line)) {
    json sample = json::parse(line);
    CHECK(sample.at("t").get<double>() > last_t);
    last_t = sample.at("t").get<double>();
    CHECK(sample.at("expectations").size() == 2);
    ++count;
  }
  CHECK(count == 3);

  std::filesystem::remove(out_path);
  std::filesystem::remove(config_path);
}

TEST_CASE("dyn divergence reports the two distances") {
  std::string config_path = temp_path("bjq_cli_div_config.json");
  json config = {{"N", 16},
                 {"hamiltonian", "mixed:4,4"},
                 {"initial", "gaussian"},
                 {"t_final", 2.0},
                 {"dt", 1.0}};
  {
    std::ofstream f(config_path);
    f << config.dump() << "\n";
  }
  RunResult r = run({"dyn", "divergence", "--config", config_path});
  CHECK(r.exit_code == 0);
  json report = report_of(r);
  CHECK(report.at("metrics").at("hamiltonian_distance").get<double>() > 0.4);
  std::filesystem::remove(config_path);
}

TEST_CASE("config problems exit with the io code") {
  CHECK(run({"dyn", "run", "--config", temp_path("bjq_cli_missing.json")}).exit_code == 3);

  std::string config_path = temp_path("bjq_cli_bad_config.json");
  {
    std::ofstream f(config_path);
    f << R"({"N": 16, "hamiltonian": "harper"})" << "\n";  // missing fields
  }
  CHECK(run({"dyn", "run", "--config", config_path}).exit_code == 3);
  std::filesystem::remove(config_path);
}

TEST_CASE("pretty flag indents the report") {
  RunResult r = run({"--pretty", "check", "groenewold"});
  CHECK(r.exit_code == 0);
  CHECK(r.out.find('\n') != std::string::npos);
  CHECK(r.out.find("  \"check\"") != std::string::npos);
}
