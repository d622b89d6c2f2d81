#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "qgame/cli.hpp"
#include "qgame/oracle.hpp"

namespace qgame::cli {

namespace {

class Uniform {
 public:
  explicit Uniform(std::uint64_t seed) : engine_(seed) {}
  // [0, 1) from the top 53 bits; avoids std::uniform_real_distribution,
  // whose output differs between standard libraries.
  double next() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double next(double lo, double hi) { return lo + (hi - lo) * next(); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace

VerifyReport verify_pairing(PairingId pairing, int samples, std::uint64_t seed, bool mu_zero) {
  using std::numbers::pi;
  Uniform rng(seed);
  const auto [k1, k2] = pairing_kinds(pairing);
  VerifyReport rep;
  rep.samples = samples;
  for (int n = 0; n < samples; ++n) {
    EntanglementParams ent;
    ent.gamma = rng.next(0, pi / 2);
    ent.delta = rng.next(0, pi / 2);
    StrategyParams s1, s2;
    s1.theta = rng.next(0, pi);
    s1.alpha = rng.next(-pi, pi);
    s1.beta = rng.next(-pi, pi);
    s2.theta = rng.next(0, pi);
    s2.alpha = rng.next(-pi, pi);
    s2.beta = rng.next(-pi, pi);
    NoiseParams n1, n2;
    n1.p = rng.next();
    n1.mu = rng.next();
    n2.p = rng.next();
    n2.mu = rng.next();
    if (mu_zero) n1.mu = n2.mu = 0.0;
    Bimatrix g{"random", {}, {}};
    for (double& v : g.a) v = rng.next(0, 5);
    for (double& v : g.b) v = rng.next(0, 5);

    const auto closed = closed_payoff_pair(pairing, g, ent, s1, s2, n1, n2);
    const auto exact = oracle_payoffs({g, {k1, n1.p, n1.mu}, {k2, n2.p, n2.mu}, ent, s1, s2});
    rep.max_abs_diff = std::max({rep.max_abs_diff, std::abs(closed.first - exact.first),
                                 std::abs(closed.second - exact.second)});
  }
  return rep;
}

}  // namespace qgame::cli
