#include <gtest/gtest.h>

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cli.hpp"

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = hyperdec::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json run_json(std::vector<std::string> args) {
  args.insert(args.begin(), "--json");
  const CliRun r = run(args);
  EXPECT_EQ(r.code, 0) << r.err;
  return nlohmann::json::parse(r.out);
}

}  // namespace

TEST(Cli, SymbolModes) {
  EXPECT_EQ(run({"symbol", "0.(9)", "--mode", "unital"}).out, "1\n");
  EXPECT_EQ(run({"symbol", "0.(9)", "--mode", "natural"}).out, "1 - 10^-H\n");
  EXPECT_EQ(run({"symbol", "0.(9)", "--mode", "gap"}).out, "10^-H\n");
  EXPECT_EQ(run({"symbol", "0.12(45)", "--mode", "unital"}).out, "137/1100\n");
  EXPECT_EQ(run({"symbol", "0.(9)", "--mode", "other"}).code, hyperdec::cli::kUsage);
  EXPECT_EQ(run({"symbol", "0.(", "--mode", "unital"}).code, hyperdec::cli::kUsage);
}

TEST(Cli, CompareAndEval) {
  EXPECT_EQ(run({"compare", "1 - 10^-H", "1"}).out, "Less\n");
  EXPECT_EQ(run({"compare", "H^2", "H+5"}).out, "Greater\n");
  EXPECT_EQ(run({"compare", "H/H", "1"}).out, "Equal\n");
  const CliRun e = run({"eval", "1 - 10^-H"});
  EXPECT_EQ(e.code, 0);
  EXPECT_EQ(e.out, "value: 1 - 10^-H\nclass: appreciable, positive\nst: 1\natom form: 1 - 10^-H\n");
  const CliRun inf = run({"eval", "H"});
  EXPECT_NE(inf.out.find("class: infinite, positive"), std::string::npos);
  EXPECT_NE(inf.out.find("atom form: none"), std::string::npos);
  EXPECT_EQ(run({"eval", "(1 - 10^-H)/3"}).out.find("atom form: 1/3 - 1/3*10^-H") != std::string::npos, true);
}

TEST(Cli, Digits) {
  EXPECT_EQ(run({"digits", "1 - 10^-H", "--rank", "H"}).out, "H: 9\n");
  EXPECT_EQ(run({"digits", "1 - 10^-H", "--rank", "H+1"}).out, "H+1: 0\n");
  EXPECT_EQ(run({"digits", "1 - 2*10^-H", "--rank", "H"}).out, "H: 8\n");
  EXPECT_EQ(run({"digits", "1 - 10^-H", "--rank", "H", "--window", "1", "--finite", "3"}).out,
            "finite: 0.999\nH-1: 9\nH: 9\nH+1: 0\n");
  EXPECT_EQ(run({"digits", "1/8", "--rank", "3"}).out, "3: 5\n");
}

TEST(Cli, DigitExitCodes) {
  const CliRun undecided = run({"digits", "1/11", "--rank", "H"});
  EXPECT_EQ(undecided.code, hyperdec::cli::kUltrafilterDependent);
  EXPECT_TRUE(undecided.out.empty());
  EXPECT_NE(undecided.err.find("ultrafilter"), std::string::npos);
  const CliRun shown = run({"digits", "1/11", "--rank", "H", "--uncertified"});
  EXPECT_EQ(shown.code, 0);
  EXPECT_EQ(shown.out, "H: ? (cycle 09)\n");
  EXPECT_EQ(run({"digits", "1/H", "--rank", "H"}).code, hyperdec::cli::kDomain);
  const CliRun probed = run({"digits", "1/H", "--rank", "H", "--uncertified"});
  EXPECT_EQ(probed.code, 0);
  EXPECT_NE(probed.out.find("(uncertified)"), std::string::npos);
  EXPECT_EQ(run({"digits", "H", "--rank", "H"}).code, hyperdec::cli::kDomain);
  EXPECT_EQ(run({"digits", "1", "--rank", "0"}).code, hyperdec::cli::kUsage);
}

TEST(Cli, Render) {
  EXPECT_EQ(run({"render", "1 - 10^-H", "--finite", "3", "--ranks", "H", "--width", "1"}).out,
            "0.999...;...99[@H]0...\n");
  EXPECT_EQ(run({"render", "1", "--finite", "3"}).out, "1.000...;\nnote: exact rational\n");
  EXPECT_EQ(run({"render", "(1 - 10^-H)/3", "--finite", "3", "--ranks", "H", "--width", "1"}).out,
            "0.333...;...33[@H]0...\n");
  EXPECT_EQ(run({"render", "1 - 10^-H + 10^-(2H)", "--finite", "2", "--ranks", "H,2H", "--width", "0"}).out,
            "0.99...;...9[@H]...1[@2H]...\n");
  EXPECT_EQ(run({"render", "1", "--finite", "3", "--ranks", "H", "--width", "1", "--repeat9"}).out,
            "0.999...;...99[@H]9...\nnote: exact rational\n");
  EXPECT_EQ(run({"render", "H", "--finite", "3"}).code, hyperdec::cli::kDomain);
}

TEST(Cli, Calculus) {
  EXPECT_EQ(run({"derive", "1/x", "--at", "2"}).out, "-1/4\n");
  EXPECT_EQ(run({"derive", "x^2", "--at", "3", "--probes", "1/H,-1/H^2"}).out, "6\n");
  EXPECT_EQ(run({"derive", "1/x", "--at", "0"}).code, hyperdec::cli::kDomain);
  EXPECT_EQ(run({"derive", "x", "--at", "0", "--probes", "1"}).code, hyperdec::cli::kUsage);
  EXPECT_EQ(run({"integrate", "2*x", "--from", "1", "--to", "3"}).out, "8\n");
  EXPECT_EQ(run({"integrate", "x^2", "--from", "0", "--to", "1"}).out, "1/3\n");
  EXPECT_EQ(run({"limit", "(3*H^2+H)/(H^2+5)"}).out, "3\n");
  EXPECT_EQ(run({"limit", "2^H"}).code, hyperdec::cli::kDomain);
  EXPECT_EQ(run({"sum", "i", "--upper", "H"}).out, "1/2*H^2 + 1/2*H\n");
  EXPECT_EQ(run({"sum", "1", "--upper", "H"}).out, "H + 1\n");
  EXPECT_EQ(run({"sum", "i^2", "--upper", "3"}).out, "14\n");
  const CliRun evt = run({"evt", "x*(1-x)"});
  EXPECT_EQ(evt.out.substr(0, evt.out.find("partition")), "argmax: 1/2\nmax: 1/4\n");
  EXPECT_EQ(run({"evt", "x*(1-x)", "--candidates", "0,1"}).code, hyperdec::cli::kDomain);
}

TEST(Cli, JsonSchema) {
  const auto c = run_json({"compare", "1 - 10^-H", "1"});
  EXPECT_EQ(c["command"], "compare");
  EXPECT_EQ(c["inputs"]["lhs"], "1 - 10^-H");
  EXPECT_EQ(c["result"], "Less");
  EXPECT_TRUE(c.contains("threshold"));

  const auto e = run_json({"eval", "1 - 10^-H"});
  EXPECT_EQ(e["result"]["st"], "1");
  EXPECT_EQ(e["classification"]["kind"], "appreciable");
  EXPECT_EQ(e["classification"]["sign"], 1);

  const auto d = run_json({"digits", "1 - 10^-H", "--rank", "H"});
  EXPECT_EQ(d["result"]["digits"][0]["digit"], "9");
  EXPECT_EQ(d["result"]["digits"][0]["certified"], true);

  const auto v = run_json({"evt", "x*(1-x)"});
  EXPECT_EQ(v["result"]["argmax"], "1/2");
  EXPECT_EQ(v["witnesses"].size(), 3u);

  // --json may follow the subcommand
  const CliRun after = run({"symbol", "0.(9)", "--mode", "gap", "--json"});
  EXPECT_EQ(nlohmann::json::parse(after.out)["result"], "10^-H");
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, hyperdec::cli::kUsage);
  EXPECT_EQ(run({"frobnicate"}).code, hyperdec::cli::kUsage);
  EXPECT_EQ(run({"eval"}).code, hyperdec::cli::kUsage);
  EXPECT_EQ(run({"eval", "2^(H^2)"}).code, hyperdec::cli::kUsage);
  EXPECT_EQ(run({"eval", "1/(H-H)"}).code, hyperdec::cli::kDomain);
  EXPECT_EQ(run({"--help"}).code, 0);
  EXPECT_EQ(run({"digits", "1", "--rank", "Q"}).code, hyperdec::cli::kUsage);
}
