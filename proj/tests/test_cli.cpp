#include <gtest/gtest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "vpv/cli.hpp"

using nlohmann::json;

namespace {

struct result {
  int code;
  std::string out;
  std::string err;
};

result run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "vpv");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = vpv::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream is(text);
  for (std::string l; std::getline(is, l);)
    if (!l.empty()) out.push_back(l);
  return out;
}

std::size_t columns(const std::string& line) {
  std::size_t n = 1;
  bool quoted = false;
  for (char c : line) {
    if (c == '"') quoted = !quoted;
    if (c == ',' && !quoted) ++n;
  }
  return n;
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("vpv_test_" + name);
}

}  // namespace

TEST(Cli, Verify2Json) {
  auto r = run_cli({"verify2", "--s", "1", "--x", "0.3", "--y", "0.4", "--tol", "1e-8", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = json::parse(r.out);
  for (const char* key : {"lhs_log", "rhs_log", "abs_err", "rel_err", "degree_cap", "tail_bound", "terms"})
    EXPECT_TRUE(j.contains(key)) << key;
  EXPECT_NEAR(j["rhs_log"]["re"].get<double>(), -std::log(0.7) * (0.4 / 0.6), 1e-15);
  EXPECT_LE(j["rel_err"].get<double>(), 1e-7);
}

TEST(Cli, JsonRoundTripAbsErr) {
  for (std::vector<std::string> args :
       {std::vector<std::string>{"verify2", "--s", "0.5+3i", "--x", "0.2-0.1i", "--y", "0.3"},
        {"verify2", "--s-re", "-1.5", "--s-im", "2", "--x", "0.4", "--y", "0.1i"},
        {"verify3", "--s", "1", "--t", "0.5", "--x", "0.2", "--y", "0.3", "--z", "0.25"}}) {
    args.insert(args.end(), {"--format", "json", "--tol", "1e-9"});
    auto r = run_cli(args);
    ASSERT_EQ(r.code, 0) << r.err;
    auto j = json::parse(r.out);
    double dre = j["lhs_log"]["re"].get<double>() - j["rhs_log"]["re"].get<double>();
    double dim = j["lhs_log"]["im"].get<double>() - j["rhs_log"]["im"].get<double>();
    double abs_err = j["abs_err"].get<double>();
    EXPECT_NEAR(std::hypot(dre, dim), abs_err, 4 * std::numeric_limits<double>::epsilon() * (1 + abs_err));
  }
}

TEST(Cli, ScanCsv) {
  auto r = run_cli({"scan", "--x", "0.2", "--y", "0.2", "--T", "0,5,14.134725", "--tol", "1e-6", "--format", "csv"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto ls = lines(r.out);
  ASSERT_EQ(ls.size(), 4u);
  EXPECT_EQ(ls[0], vpv::io::scan_csv_header());
  for (const auto& l : ls) EXPECT_EQ(columns(l), columns(ls[0]));
  EXPECT_EQ(ls[3].substr(0, 10), "14.134725,");
}

TEST(Cli, DomainErrorExitsOne) {
  auto r = run_cli({"verify2", "--s", "1", "--x", "1.5", "--y", "0.4"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("domain"), std::string::npos);
  EXPECT_TRUE(r.out.empty());
}

TEST(Cli, ExitCodeMatrix) {
  struct fixture {
    std::vector<std::string> args;
    int code;
  };
  std::vector<fixture> cases{
      {{"polylog", "--s", "2", "--z", "0.5"}, 0},
      {{"ez31", "--tol", "1e-10"}, 0},
      {{"audit", "--format", "csv"}, 0},
      {{"visible", "--cap", "5"}, 0},
      {{"probe", "--order", "3", "--x", "0.5", "--delta", "0.5,0.3"}, 0},
      {{"polylog", "--s", "2", "--z", "1.1"}, 1},
      {{"verify2", "--s", "0.5", "--x", "1", "--y", "0.3"}, 1},
      {{"verify2", "--s", "2", "--x", "0.3"}, 1},
      {{"verify2", "--s", "2", "--x", "0.3", "--y", "0.3", "--tol", "-1"}, 1},
      {{"verify2", "--s", "2", "--x", "abc", "--y", "0.3"}, 1},
      {{"probe", "--order", "7", "--x", "0.5", "--delta", "0.5"}, 1},
      {{"visible", "--dim", "4"}, 1},
      {{"nonsense"}, 1},
      {{}, 1},
      {{"verify2", "--s", "2", "--x", "0.95", "--y", "0.95", "--tol", "1e-12", "--degree-cap-max", "50"}, 2},
      {{"probe", "--order", "2", "--x", "0.5", "--delta", "1e-4", "--degree-cap-max", "100"}, 2},
      {{"ez31", "--tol", "1e-30"}, 2},
  };
  for (const auto& f : cases) {
    auto r = run_cli(f.args);
    std::string joined;
    for (const auto& a : f.args) joined += a + " ";
    EXPECT_EQ(r.code, f.code) << joined << "\n" << r.err;
  }
}

TEST(Cli, CatalogCsvHasFixedColumns) {
  auto r = run_cli({"catalog", "--format", "csv", "--tol", "1e-8"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto ls = lines(r.out);
  ASSERT_EQ(ls.size(), 15u);
  for (const auto& l : ls) EXPECT_EQ(columns(l), 10u);
}

TEST(Cli, CatalogJson) {
  auto r = run_cli({"catalog", "--format", "json", "--y", "0.25", "--T", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = json::parse(r.out);
  ASSERT_EQ(j.size(), 14u);
  for (const auto& e : j) EXPECT_LE(e["rel_err"].get<double>(), 1e-6) << e["name"];
  EXPECT_EQ(j[12]["audited_constant"], "LI4_HALF");
  EXPECT_TRUE(j[0]["audited_constant"].is_null());
}

TEST(Cli, ProbeNoteGoesToStderr) {
  auto r = run_cli({"probe", "--x", "0.5", "--delta", "0.5,0.25", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = json::parse(r.out);
  ASSERT_EQ(j.size(), 2u);
  EXPECT_NE(r.err.find("note:"), std::string::npos);
  EXPECT_TRUE(j[0]["error"].is_null());
}

TEST(Cli, AuditJsonVerdicts) {
  auto r = run_cli({"audit", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = json::parse(r.out);
  ASSERT_EQ(j.size(), 4u);
  EXPECT_EQ(j[0]["verdict"], "MATCHES_PRINTED");
  EXPECT_EQ(j[1]["verdict"], "MATCHES_PRINTED");
  EXPECT_EQ(j[2]["verdict"], "MATCHES_CORRECTED");
}

TEST(Cli, VisibleCsv) {
  auto r = run_cli({"visible", "--cap", "4"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "a,b\n1,1\n1,2\n2,1\n1,3\n3,1\n");
  r = run_cli({"visible", "--dim", "3", "--cap", "4"});
  EXPECT_EQ(r.out, "a,b,c\n1,1,1\n1,1,2\n1,2,1\n2,1,1\n");
}

TEST(Cli, ShortestRoundTripNumbers) {
  auto r = run_cli({"polylog", "--s", "2", "--z", "0.5", "--tol", "1e-15", "--format", "csv"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto ls = lines(r.out);
  ASSERT_EQ(ls.size(), 2u);
  std::string re = ls[1].substr(0, ls[1].find(','));
  double v = std::stod(re);
  EXPECT_EQ(vpv::io::shortest(v), re);
  EXPECT_NEAR(v, 0.5822405264650125, 1e-15);
}

TEST(Cli, ComplexSyntaxVariants) {
  auto a = run_cli({"polylog", "--s", "2+3i", "--z", "0.3+0.4i", "--format", "json"});
  auto b = run_cli({"polylog", "--s-re", "2", "--s-im", "3", "--z-re", "0.3", "--z-im", "0.4", "--format", "json"});
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(vpv::cli::split_complex("1e-3-2e-2i"), (std::pair<std::string, std::string>{"1e-3", "-2e-2"}));
  EXPECT_EQ(vpv::cli::split_complex("-i"), (std::pair<std::string, std::string>{"0", "-1"}));
  EXPECT_EQ(vpv::cli::split_complex("0.25"), (std::pair<std::string, std::string>{"0.25", "0"}));
}

TEST(Cli, ConfigFileWithFlagPrecedence) {
  auto path = temp_file("config.txt");
  {
    std::ofstream f(path);
    f << "# defaults\ns = 1\nx = 0.3\ny = 0.4\ntol = 1e-6\n";
  }
  auto a = run_cli({"--config", path.string(), "verify2", "--format", "json"});
  ASSERT_EQ(a.code, 0) << a.err;
  auto ja = json::parse(a.out);
  auto b = run_cli({"--config", path.string(), "verify2", "--y", "0.2", "--format", "json"});
  ASSERT_EQ(b.code, 0) << b.err;
  auto jb = json::parse(b.out);
  EXPECT_NEAR(jb["rhs_log"]["re"].get<double>(), -std::log(0.7) * 0.25, 1e-15);
  EXPECT_NE(ja["rhs_log"]["re"], jb["rhs_log"]["re"]);
  {
    std::ofstream f(path);
    f << "bogus = 3\n";
  }
  EXPECT_EQ(run_cli({"--config", path.string(), "ez31"}).code, 1);
  EXPECT_EQ(run_cli({"--config", "/nonexistent/vpv.conf", "ez31"}).code, 1);
  std::filesystem::remove(path);
}

TEST(Cli, OutputFile) {
  auto path = temp_file("out.json");
  auto r = run_cli({"ez31", "--format", "json", "--output", path.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.out.empty());
  std::ifstream f(path);
  auto j = json::parse(f);
  EXPECT_NEAR(j["value"]["re"].get<double>(), -0.117875999650509327, 1e-8);
  EXPECT_LE(j["tail_bound"].get<double>(), 1e-8);
  std::filesystem::remove(path);
}

TEST(Cli, ExtendedPrecision) {
  auto r = run_cli({"polylog", "--s", "3", "--z", "0.5", "--tol", "1e-25", "--precision", "extended:30",
                    "--format", "human"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("0.53721319360804020094"), std::string::npos) << r.out;
  EXPECT_EQ(run_cli({"polylog", "--s", "3", "--z", "0.5", "--precision", "extended:80"}).code, 1);
  EXPECT_EQ(run_cli({"polylog", "--s", "3", "--z", "0.5", "--precision", "quad"}).code, 1);
}

TEST(Cli, HelpExitsZero) {
  auto r = run_cli({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("verify2"), std::string::npos);
}
