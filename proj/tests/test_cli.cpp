#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "qgame/cli.hpp"
#include "qgame/errors.hpp"
#include "support.hpp"

using namespace qgame;
using namespace qgame::cli;
using qgame::testing::kPi;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> v;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) v.push_back(l);
  return v;
}

std::vector<std::string> split(const std::string& s) {
  std::vector<std::string> v;
  std::stringstream in(s);
  for (std::string f; std::getline(in, f, ',');) v.push_back(f);
  return v;
}

std::filesystem::path temp_file(const std::string& name, const std::string& body) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << body;
  return path;
}

}  // namespace

TEST_CASE("angle and number formatting") {
  CHECK(parse_angle("pi") == kPi);
  CHECK(parse_angle("pi/2") == kPi / 2);
  CHECK(parse_angle("-pi/2") == -kPi / 2);
  CHECK(parse_angle("0.25") == 0.25);
  CHECK_THROWS_AS(parse_angle("90deg"), ConfigError);
  CHECK_THROWS_AS(parse_angle(""), ConfigError);
  CHECK(format_number(1.0) == "1");
  CHECK(format_number(-0.0) == "0");
  CHECK(format_number(kPi / 2) == "1.57079632679");
  CHECK(format_number(1.0 / 3) == "0.333333333333");
}

TEST_CASE("payoff command") {
  auto r = invoke({"payoff", "--game", "pd", "--pairing", "ph-ph", "--gamma", "0", "--delta", "0",
                   "--p1", "0", "--mu1", "0", "--p2", "0", "--mu2", "0", "--theta1",
                   "3.14159265358979", "--theta2", "3.14159265358979"});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "payoff_a=1 payoff_b=1\n");

  r = invoke({"payoff", "--game", "bos", "--pairing", "ph-ph", "--theta1", "0", "--theta2", "0"});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "payoff_a=2 payoff_b=1\n");

  r = invoke({"payoff", "--game", "pd", "--pairing", "ph-ph", "--p1", "1.5"});
  CHECK(r.code == kExitUsage);
  CHECK(lines(r.err).size() == 1);

  // closed form and oracle engines agree
  const std::vector<std::string> base{"payoff", "--game", "chicken", "--pairing", "d-ad",
                                      "--gamma", "0.7", "--delta", "0.4", "--p1", "0.3",
                                      "--mu1", "0.6", "--p2", "0.8", "--mu2", "0.2",
                                      "--theta1", "1.1", "--alpha1", "0.2", "--theta2", "2.5",
                                      "--beta2", "-1.3"};
  auto with_oracle = base;
  with_oracle.insert(with_oracle.end(), {"--engine", "oracle"});
  CHECK(invoke(base).out == invoke(with_oracle).out);

  CHECK(invoke({"payoff", "--game", "stag", "--pairing", "ph-ph"}).code == kExitUsage);
  CHECK(invoke({"payoff", "--game", "pd", "--pairing", "x-y"}).code == kExitUsage);
  CHECK(invoke({"payoff", "--game", "pd"}).code == kExitUsage);
  CHECK(invoke({"payoff", "--game", "pd", "--pairing", "ph-ph", "--engine", "exact"}).code ==
        kExitUsage);
  CHECK(invoke({}).code == kExitUsage);
  CHECK(invoke({"--help"}).code == kExitOk);
}

TEST_CASE("verify command") {
  auto r = invoke({"verify", "--pairing", "ph-ph", "--samples", "200", "--seed", "42", "--tol",
                   "1e-9"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("PASS") != std::string::npos);
  CHECK(invoke({"verify", "--pairing", "d-d", "--samples", "200", "--seed", "7", "--tol", "1e-9"})
            .code == kExitOk);
  // correlated damping is inside the oracle's scope
  CHECK(invoke({"verify", "--pairing", "ad-ad", "--samples", "200", "--seed", "42", "--tol",
                "1e-9"})
            .code == kExitOk);
  CHECK(invoke({"verify", "--pairing", "ad-ad", "--mu-zero"}).code == kExitOk);
  // a negative threshold cannot pass
  CHECK(invoke({"verify", "--pairing", "ph-ph", "--samples", "3", "--tol", "-1"}).code ==
        kExitUsage);
  CHECK(invoke({"verify", "--pairing", "ph-ph", "--samples", "0"}).code == kExitUsage);

  // same seed, same report
  const auto a = invoke({"verify", "--pairing", "ph-ad", "--samples", "20", "--seed", "9"});
  const auto b = invoke({"verify", "--pairing", "ph-ad", "--samples", "20", "--seed", "9"});
  CHECK(a.out == b.out);
}

TEST_CASE("verify draws are reproducible") {
  const auto x = verify_pairing(PairingId::AdD, 50, 123, false);
  const auto y = verify_pairing(PairingId::AdD, 50, 123, false);
  CHECK(x.max_abs_diff == y.max_abs_diff);
  CHECK(x.samples == 50);
  CHECK(x.max_abs_diff < 1e-9);
}

TEST_CASE("sweep config parsing") {
  const auto cfg = parse_sweep_config_text(
      "# memory sweep\n"
      "game = pd\n"
      "pairing = ad-ad\n"
      "p = 0.8\n"
      "theta2 = pi/2\n"
      "alpha2 = pi/2\n"
      "sweep.mu = 0:1:11\n");
  CHECK(cfg.game.name == "pd");
  CHECK(cfg.fixed.p1 == 0.8);
  CHECK(cfg.fixed.p2 == 0.8);
  CHECK(cfg.fixed.s2.theta == kPi / 2);
  REQUIRE(cfg.axes.size() == 1);
  const auto pts = cfg.points();
  REQUIRE(pts.size() == 11);
  CHECK(pts.front().mu1 == 0.0);
  CHECK(pts.back().mu2 == 1.0);
  CHECK(pts[3].mu1 == pts[3].mu2);

  // axes come out in canonical order, last one fastest
  const auto two = parse_sweep_config_text(
      "game = bos\npairing = d-d\nsweep.theta2 = 0:pi:3\nsweep.p1 = 0:1:2\n");
  REQUIRE(two.axes.size() == 2);
  CHECK(two.axes[0].name == "p1");
  const auto tp = two.points();
  REQUIRE(tp.size() == 6);
  CHECK(tp[1].s2.theta == doctest::Approx(kPi / 2));
  CHECK(tp[3].p1 == 1.0);

  CHECK_THROWS_AS(parse_sweep_config_text("game = pd\npairing = ad-ad\n"), ConfigError);
  CHECK_THROWS_AS(parse_sweep_config_text("game = pd\npairing = ad-ad\nsweep.mu = 0:1:1\n"),
                  ConfigError);
  CHECK_THROWS_AS(parse_sweep_config_text("game = pd\npairing = ad-ad\nsweep.mu = 0:2:5\n"),
                  RangeError);
  CHECK_THROWS_AS(parse_sweep_config_text("game = pd\npairing = ad-ad\nsweep.gamma = 0:1:5\n"),
                  ConfigError);
  CHECK_THROWS_AS(
      parse_sweep_config_text("game = pd\npairing = ad-ad\nsweep.mu = 0:1:5\nsweep.mu1 = 0:1:5\n"),
      ConfigError);
  CHECK_THROWS_AS(parse_sweep_config_text("game = pd\npairing = ad-ad\ncolour = red\nsweep.mu = 0:1:5\n"),
                  ConfigError);
  CHECK_THROWS_AS(parse_sweep_config_text("game = pd\ngame = bos\npairing = ad-ad\nsweep.mu = 0:1:5\n"),
                  ConfigError);
  CHECK_THROWS_AS(parse_sweep_config_text("pairing = ad-ad\nsweep.mu = 0:1:5\n"), ConfigError);
  CHECK_THROWS_AS(parse_sweep_config_text("game = pd\npairing = ad-ad\nsweep.mu = 0:1:5\nno equals\n"),
                  ConfigError);
  CHECK_THROWS_AS(parse_sweep_config_text("game = custom\npairing = ad-ad\nsweep.mu = 0:1:5\n"),
                  ConfigError);
}

TEST_CASE("sweep command") {
  const auto cfg = temp_file("qgame_sweep_ones.cfg",
                             "game = custom\n"
                             "game.a = 1,1,1,1\n"
                             "game.b = 1,1,1,1\n"
                             "pairing = d-ad\n"
                             "p = 0.4\n"
                             "gamma = pi/2\n"
                             "delta = 0.3\n"
                             "theta1 = 1\n"
                             "theta2 = 2\n"
                             "beta2 = -1\n"
                             "sweep.mu = 0:1:11\n");
  const auto r = invoke({"sweep", cfg.string()});
  REQUIRE(r.code == kExitOk);
  const auto ls = lines(r.out);
  REQUIRE(ls.size() == 12);
  CHECK(ls[0] == kCsvHeader);
  for (std::size_t i = 1; i < ls.size(); ++i) {
    const auto f = split(ls[i]);
    REQUIRE(f.size() == 16);
    CHECK(f[0] == "custom");
    CHECK(f[14] == "1");
    CHECK(f[15] == "1");
  }
  CHECK(r.out.find('\r') == std::string::npos);

  // --out writes the same bytes to a file
  const auto out_path = std::filesystem::temp_directory_path() / "qgame_sweep_ones.csv";
  CHECK(invoke({"sweep", cfg.string(), "--out", out_path.string()}).code == kExitOk);
  std::ifstream in(out_path, std::ios::binary);
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(buf.str() == r.out);

  const auto bad = temp_file("qgame_sweep_bad.cfg", "game = pd\n");
  CHECK(invoke({"sweep", bad.string()}).code == kExitUsage);
  CHECK(invoke({"sweep", "/nonexistent/qgame.cfg"}).code == kExitUsage);
}

TEST_CASE("figure command") {
  const int groups[] = {0, 0, 6, 4, 3, 3, 3, 3};
  for (int id = 2; id <= 7; ++id) {
    const auto r = invoke({"figure", "--id", std::to_string(id)});
    CHECK(r.code == kExitOk);
    const auto ls = lines(r.out);
    CHECK(ls.size() == 1u + 101u * static_cast<std::size_t>(groups[id]));
    CHECK(r.out == invoke({"figure", "--id", std::to_string(id)}).out);
  }
  CHECK(invoke({"figure", "--id", "8"}).code == kExitUsage);
  CHECK(invoke({"figure", "--id", "1"}).code == kExitUsage);
}

TEST_CASE("figure configurations") {
  const auto f2 = figure_configs(2);
  REQUIRE(f2.size() == 6);
  for (const auto& c : f2) {
    CHECK(c.pairing == PairingId::AdAd);
    CHECK(c.fixed.ent.gamma == 0.0);
    CHECK(c.fixed.ent.delta == 0.0);
    CHECK(c.fixed.s1.theta == 0.0);
    CHECK(c.fixed.s2.theta == kPi / 2);
    CHECK(c.fixed.s2.alpha == kPi / 2);
    CHECK(c.fixed.s2.beta == 0.0);
    REQUIRE(c.axes.size() == 1);
    CHECK(c.axes[0].name == "mu");
    CHECK(c.axes[0].steps == 101);
  }
  CHECK(f2[0].game.name == "pd");
  CHECK(f2[0].fixed.p1 == 0.8);
  CHECK(f2[1].fixed.p1 == 0.2);
  CHECK(f2[5].game.name == "chicken");

  const auto f5 = figure_configs(5);
  for (const auto& c : f5) {
    CHECK(c.game.name == "bos");
    CHECK(c.fixed.ent.gamma == 0.0);
    CHECK(c.fixed.ent.delta == kPi / 2);
    CHECK(c.fixed.s2.alpha == 0.0);
    CHECK(c.fixed.s2.beta == kPi / 2);
    CHECK(pairing_kinds(c.pairing).second == ChannelKind::AmplitudeDamping);
  }
  for (const auto& c : figure_configs(6)) {
    CHECK(c.pairing == PairingId::AdAd);
    CHECK(c.fixed.p1 == 0.5);
  }
  for (const auto& c : figure_configs(7)) CHECK(c.pairing == PairingId::DD);
}

TEST_CASE("nash command") {
  const auto r = invoke({"nash", "--case", "i", "--grid", "5x5x5", "--samples", "2"});
  CHECK((r.code == kExitOk || r.code == kExitFailed));
  CHECK(r.out.find("max variation over bob's (alpha, beta) grid: 0\n") != std::string::npos);
  const auto ls = lines(r.out);
  const auto hdr = std::find(ls.begin(), ls.end(),
                             "game,pairing,p,mu,payoff_a,payoff_b,gain_a,gain_b,epsilon_nash,"
                             "bob_best_response");
  REQUIRE(hdr != ls.end());
  CHECK(ls.end() - hdr - 1 == 3 * 9 * 4);

  CHECK(invoke({"nash", "--case", "v"}).code == kExitUsage);
  CHECK(invoke({"nash", "--case", "i", "--grid", "13x17"}).code == kExitUsage);
  CHECK(invoke({"nash", "--case", "i", "--grid", "1x17x17"}).code == kExitUsage);
  CHECK(invoke({"nash", "--case", "i", "--samples", "1"}).code == kExitUsage);
}
