#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qgame/closedform.hpp"
#include "qgame/games.hpp"
#include "qgame/protocol.hpp"

namespace qgame::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 2,        // bad flag, bad value, parse error
  kExitUnsupported = 3,  // valid request outside what the library handles
  kExitFailed = 4,       // verification or equilibrium check did not pass
};

inline constexpr std::string_view kCsvHeader =
    "game,pairing,p1,mu1,p2,mu2,gamma,delta,theta1,alpha1,beta1,theta2,alpha2,beta2,payoff_a,"
    "payoff_b";

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Radians, or one of the literals pi, pi/2, -pi, -pi/2.
double parse_angle(std::string_view text);
// 12 significant digits, shortest form ("%.12g").
std::string format_number(double v);

// Axis names: p1, mu1, p2, mu2, theta2, alpha2, beta2, plus the tied axes
// p (p1 = p2) and mu (mu1 = mu2).
struct Axis {
  std::string name;
  double start = 0.0;
  double stop = 0.0;
  int steps = 2;
  double at(int k) const;
};

struct SweepPoint {
  double p1 = 0, mu1 = 0, p2 = 0, mu2 = 0;
  EntanglementParams ent;
  StrategyParams s1, s2;
};

struct SweepConfig {
  Bimatrix game;
  PairingId pairing = PairingId::AdAd;
  SweepPoint fixed;
  std::vector<Axis> axes;  // kept in canonical (CSV column) order
  std::string output;      // empty: stdout

  void validate() const;
  // every grid point, last axis varying fastest
  std::vector<SweepPoint> points() const;
};

// Flat "key = value" text, '#' starts a comment. Sweep axes are written as
// "sweep.mu1 = 0:1:101" (start:stop:steps).
SweepConfig parse_sweep_config(std::istream& in);
SweepConfig parse_sweep_config_text(std::string_view text);

void write_csv_header(std::ostream& out);
void write_sweep_rows(const SweepConfig& cfg, std::ostream& out);

// Curve groups reproducing figure N (2..7), in caption order.
std::vector<SweepConfig> figure_configs(int id);

// Closed form vs two-pass oracle on `samples` seeded draws. The generator
// is std::mt19937_64 seeded with `seed`; a uniform double in [0, 1) is
// (draw >> 11) * 2^-53. Each tuple draws, in order: gamma, delta, theta1,
// alpha1, beta1, theta2, alpha2, beta2, p1, mu1, p2, mu2, then four Alice and
// four Bob entries in [0, 5). With mu_zero the two mu draws are replaced by 0.
struct VerifyReport {
  int samples = 0;
  double max_abs_diff = 0.0;
};
VerifyReport verify_pairing(PairingId pairing, int samples, std::uint64_t seed, bool mu_zero);

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qgame::cli
