#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

#include "qgame/closedform.hpp"
#include "qgame/protocol.hpp"

namespace qgame::testing {

inline constexpr double kPi = std::numbers::pi;

// Seeded uniform draws; same bit recipe as the verify command.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double in(double lo, double hi) { return lo + (hi - lo) * unit(); }

  StrategyParams strategy() {
    StrategyParams s;
    s.theta = in(0, kPi);
    s.alpha = in(-kPi, kPi);
    s.beta = in(-kPi, kPi);
    return s;
  }
  EntanglementParams entanglement() { return {in(0, kPi / 2), in(0, kPi / 2)}; }
  NoiseParams noise() { return {unit(), unit()}; }
  Entries entries() { return {in(0, 5), in(0, 5), in(0, 5), in(0, 5)}; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace qgame::testing
