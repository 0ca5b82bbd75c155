#include <gtest/gtest.h>

#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "../../tools/cli.hpp"
#include "moutard/catalog.hpp"
#include "moutard/nv.hpp"
#include "moutard/parse.hpp"
#include "moutard/serialize.hpp"

using namespace moutard;

namespace {

struct Outcome {
  int code;
  std::string out, err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(f), {}};
}

std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

double to_d(const std::string& s) {
  double v = 0.0;
  std::from_chars(s.data(), s.data() + s.size(), v);
  return v;
}

}  // namespace

TEST(Cli, ConstructReportIsDeterministic) {
  const Outcome a = run({"construct", "--example", "ord2", "--verify"});
  const Outcome b = run({"construct", "--example", "ord2", "--verify"});
  ASSERT_EQ(a.code, 0) << a.out << a.err;
  EXPECT_EQ(a.out, b.out);
  const Json j = Json::parse(a.out);
  EXPECT_TRUE(j["passed"].get<bool>());
}

TEST(Cli, OutFileMatchesStdout) {
  const auto path = std::filesystem::temp_directory_path() / "moutard_cli_out.json";
  const Outcome a = run({"evolve", "--example", "ord2"});
  const Outcome b = run({"evolve", "--example", "ord2", "--out", path.string()});
  ASSERT_EQ(a.code, 0);
  ASSERT_EQ(b.code, 0);
  EXPECT_EQ(slurp(path), a.out);
  std::filesystem::remove(path);
}

TEST(Cli, BlowupReproduce) {
  const Outcome r = run({"blowup", "--reproduce"});
  ASSERT_EQ(r.code, 0) << r.out;
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["t_star_exact"], "29/12");
  EXPECT_NEAR(j["t_star"].get<double>(), 29.0 / 12.0, 1e-12);
  EXPECT_TRUE(j["matches_reference_U"].get<bool>());
}

TEST(Cli, CsvRoundTripsAgainstTheLibrary) {
  const Outcome r = run({"export-grid", "--example", "blowup", "--field", "U", "--window", "-2", "2", "-2", "2", "--res",
                     "31", "--t", "1"});
  ASSERT_EQ(r.code, 0) << r.out;
  const auto rows = csv_rows(r.out);
  ASSERT_EQ(rows.size(), 31u * 31u + 1);
  EXPECT_EQ(rows[0], (std::vector<std::string>{"x", "y", "value"}));
  const NVSolution sol = nv_fields(extended_tau(flow_solve(HarmonicSeed(parse_tripoly("i*z^2"))),
                                                flow_solve(HarmonicSeed(parse_tripoly("z^2 + (1+i)*z"))),
                                                Rational(-20)));
  std::mt19937 g(71);
  std::uniform_int_distribution<std::size_t> pick(1, rows.size() - 1);
  for (int k = 0; k < 10; ++k) {
    const auto& row = rows[pick(g)];
    const double x = to_d(row[0]), y = to_d(row[1]), v = to_d(row[2]);
    const double ref = evaluate_at(sol.U, x, y, 1.0).real();
    EXPECT_NEAR(v, ref, 1e-12 * std::max(1.0, std::abs(ref)));
  }
}

TEST(Cli, CsvIsByteIdenticalAcrossRuns) {
  const std::vector<std::string> args{"export-grid", "--example", "ord2", "--field", "psi1", "--res", "25"};
  EXPECT_EQ(run(args).out, run(args).out);
}

TEST(Cli, OddResolutionHitsTheOrigin) {
  const Outcome r = run({"export-grid", "--example", "ord2", "--field", "u", "--window", "-1", "1", "-1", "1", "--res",
                     "21", "--with-t"});
  ASSERT_EQ(r.code, 0);
  const auto rows = csv_rows(r.out);
  EXPECT_EQ(rows[0].size(), 4u);
  const auto& mid = rows[1 + 10 * 21 + 10];
  EXPECT_EQ(mid[0], "0");
  EXPECT_EQ(mid[1], "0");
  EXPECT_NEAR(to_d(mid[3]), -0.2, 1e-12);
}

TEST(Cli, PoleCurvesFailUnlessAllowed) {
  const std::vector<std::string> base{"export-grid", "--example", "blowup", "--field", "U", "--window",
                                      "-3", "3", "-3", "3", "--res", "60", "--t", "3"};
  const Outcome strict = run(base);
  EXPECT_EQ(strict.code, 1);
  EXPECT_EQ(Json::parse(strict.out)["error"], "PoleError");
  auto loose = base;
  loose.push_back("--allow-poles");
  const Outcome r = run(loose);
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("nan"), std::string::npos);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"construct", "--example", "nope"}).code, 2);
  EXPECT_EQ(run({"construct", "--bogus"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"construct", "--p1", "z^2 +", "--p2", "z"}).code, 2);
  const Outcome d = run({"darboux1d", "--n", "4"});
  EXPECT_EQ(d.code, 1);
  EXPECT_EQ(Json::parse(d.out)["error"], "Unsupported");
  EXPECT_EQ(run({"construct", "--p1", "z*w", "--p2", "z"}).code, 1);
}

TEST(Cli, SigmaAndDarbouxAndPeriodic) {
  const Outcome s = run({"sigma", "--poly", "z^3", "--t", "1", "--times", "0.5,1"});
  ASSERT_EQ(s.code, 0) << s.out;
  EXPECT_EQ(Json::parse(s.out)["polynomial_t"], "z^3 + 6");
  EXPECT_EQ(run({"darboux1d", "--n", "3", "--tau2", "1/2", "--tau3", "-2"}).code, 0);
  const Outcome p = run({"periodic"});
  ASSERT_EQ(p.code, 0) << p.out;
  EXPECT_NEAR(Json::parse(p.out)["tau_min"].get<double>(), 0.5, 1e-12);
}
