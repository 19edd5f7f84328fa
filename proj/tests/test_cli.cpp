#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "charpoly/matrix_gen.hpp"
#include "charpoly/matrix_io.hpp"

#ifndef CHARPOLY_CLI_PATH
#error "CHARPOLY_CLI_PATH must point at the charpoly executable"
#endif

namespace charpoly {
namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run(const std::string& args) {
  const std::string cmd = std::string(CHARPOLY_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string temp_file(const std::string& name, const std::string& contents) {
  const std::string path = ::testing::TempDir() + "charpoly_cli_" + name;
  std::ofstream(path) << contents;
  return path;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

TEST(Cli, ComputeTwoByTwo) {
  const auto f = temp_file("two.txt", "2\n1 2\n3 4\n");
  const auto r = run("compute " + f);
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out, "# kind=PBar n=2 method=engine\n1\n5\n-2\n");
}

TEST(Cli, ComputeKindPAndOtherMethods) {
  const auto f = temp_file("two_p.txt", "2\n1 2\n3 4\n");
  EXPECT_EQ(run("compute --kind P " + f).out, "# kind=P n=2 method=engine\n-2\n-5\n1\n");
  EXPECT_EQ(run("compute --method leibniz " + f).out, "# kind=PBar n=2 method=leibniz\n1\n5\n-2\n");
  EXPECT_EQ(run("compute --method naive --precision b32 " + f).out, "# kind=PBar n=2 method=naive\n1\n5\n-2\n");
}

TEST(Cli, ComputeOneByOneFromStdin) {
  const auto f = temp_file("one.txt", "1\n7\n");
  const auto r = run("compute - < " + f);
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out, "# kind=PBar n=1 method=engine\n1\n7\n");
}

TEST(Cli, MalformedInputExits2) {
  const auto f = temp_file("bad.txt", "two\n1 2\n3 4\n");
  EXPECT_EQ(run("compute " + f).exit_code, 2);
  EXPECT_EQ(run("compute /nonexistent/matrix.txt").exit_code, 2);
  EXPECT_EQ(run("compute --method qr " + f).exit_code, 2);
}

TEST(Cli, LeibnizTooLargeExits3) {
  std::ostringstream m;
  m << "9\n";
  for (int i = 0; i < 9; ++i) m << "1 0 0 0 0 0 0 0 0\n";
  const auto f = temp_file("nine.txt", m.str());
  EXPECT_EQ(run("compute --method leibniz " + f).exit_code, 3);
}

TEST(Cli, Trace) {
  const auto id4 = temp_file("id4.txt", "4\n1 0 0 0\n0 1 0 0\n0 0 1 0\n0 0 0 1\n");
  EXPECT_EQ(run("trace --degree 2 " + id4).out, "6\n");
  const auto d3 = temp_file("d3.txt", "3\n1 0 0\n0 2 0\n0 0 3\n");
  EXPECT_EQ(run("trace --degree 3 " + d3).out, "6\n");
  EXPECT_EQ(run("trace --degree 4 " + d3).exit_code, 3);
  EXPECT_EQ(run("trace " + d3).exit_code, 2);  // --degree is required
}

TEST(Cli, GenIsDeterministicAndRoundTrips) {
  const std::string a = ::testing::TempDir() + "charpoly_gen_a.txt";
  const std::string b = ::testing::TempDir() + "charpoly_gen_b.txt";
  EXPECT_EQ(run("gen --n 7 --seed 99 --ensemble spread --decades 4 --out " + a).exit_code, 0);
  EXPECT_EQ(run("gen --n 7 --seed 99 --ensemble spread --decades 4 --out " + b).exit_code, 0);
  EXPECT_EQ(slurp(a), slurp(b));

  std::istringstream in(slurp(a));
  const auto m = read_matrix(in);
  EXPECT_EQ(m, gen_spread_spectrum(7, 4, 99).matrix);
}

TEST(Cli, GenKnownSpectrumSidecar) {
  const std::string side = ::testing::TempDir() + "charpoly_spec.txt";
  const auto r = run("gen --ensemble known --eigs 2 --pairs 0:1 --seed 3 --spectrum-out " + side);
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(slurp(side), "real 2\npair 0 1\n");
  EXPECT_EQ(run("gen --ensemble known --n 4 --eigs 2 --pairs 0:1").exit_code, 2);
  EXPECT_EQ(run("gen --n 0").exit_code, 2);
}

TEST(Cli, BenchEmitsOneRowPerMethodAndN) {
  const auto r = run("bench --n-values 4,8 --methods engine,naive --samples 1");
  EXPECT_EQ(r.exit_code, 0);
  std::istringstream is(r.out);
  std::string line;
  std::getline(is, line);
  EXPECT_EQ(line, "n,method,flops,wall_seconds,samples");
  int rows = 0;
  while (std::getline(is, line)) ++rows;
  EXPECT_EQ(rows, 4);
}

TEST(Cli, BenchCensus) {
  const auto r = run("bench --census --n-values 2,8");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.out.find("\n2,4,4,"), std::string::npos);
}

TEST(Cli, PrecisionValidatesSamples) {
  EXPECT_EQ(run("precision --samples 0").exit_code, 2);
  const auto r = run("precision --n 8 --samples 5 --methods engine,newton");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.out.find("method,n_samples,mean_rel_dev,ci95,n_overflow\nengine,5,"), std::string::npos);
}

}  // namespace
}  // namespace charpoly
