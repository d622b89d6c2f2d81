#include "qgame/equilibrium.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>

#include "qgame/errors.hpp"

namespace qgame {

using std::numbers::pi;

namespace {

double grid_value(int k, int n, bool symmetric) {
  const double f = static_cast<double>(k) / (n - 1);
  // written so that 0, +-pi/2 and +-pi come out exact
  return symmetric ? pi * (2.0 * f - 1.0) : pi * f;
}

double snap_axis(double v, int n, bool symmetric) {
  for (int k = 0; k < n; ++k) {
    const double g = grid_value(k, n, symmetric);
    if (std::abs(v - g) <= 1e-12) return g;
  }
  return v;
}

double payoff_of(const std::pair<double, double>& pay, Player who) {
  return who == Player::Alice ? pay.first : pay.second;
}

std::pair<double, double> evaluate(const Evaluator& eval, const StrategyParams& own,
                                   const StrategyParams& opponent, Player who) {
  return who == Player::Alice ? eval(own, opponent) : eval(opponent, own);
}

struct Scan {
  double best = -std::numeric_limits<double>::infinity();
  std::vector<StrategyParams> argmax;
};

Scan scan_grid(const Evaluator& eval, const StrategySpace& space, const StrategyParams& opponent,
               Player who) {
  space.validate();
  const auto grid = space.grid();
  std::vector<double> values(grid.size());
  Scan s;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    values[i] = payoff_of(evaluate(eval, grid[i], opponent, who), who);
    s.best = std::max(s.best, values[i]);
  }
  for (std::size_t i = 0; i < grid.size(); ++i)
    if (values[i] >= s.best - kTieTolerance) s.argmax.push_back(grid[i]);
  return s;
}

}  // namespace

void StrategySpace::validate() const {
  if (theta_points < 2 || alpha_points < 2 || beta_points < 2) {
    throw RangeError("strategy grid counts must be at least 2");
  }
}

std::vector<StrategyParams> StrategySpace::grid() const {
  validate();
  std::vector<StrategyParams> out;
  for (int i = 0; i < theta_points; ++i) {
    const double th = grid_value(i, theta_points, false);
    if (classical_only) {
      out.push_back(StrategyParams::classical(th));
      continue;
    }
    for (int j = 0; j < alpha_points; ++j)
      for (int k = 0; k < beta_points; ++k)
        out.push_back({th, grid_value(j, alpha_points, true), grid_value(k, beta_points, true)});
  }
  return out;
}

StrategyParams StrategySpace::snap(const StrategyParams& s) const {
  return {snap_axis(s.theta, theta_points, false), snap_axis(s.alpha, alpha_points, true),
          snap_axis(s.beta, beta_points, true)};
}

std::vector<StrategyParams> best_response(const Evaluator& eval, const StrategySpace& space,
                                          const StrategyParams& opponent, Player responder) {
  return scan_grid(eval, space, opponent, responder).argmax;
}

bool contains_strategy(const std::vector<StrategyParams>& set, const StrategyParams& s,
                       double tol) {
  return std::any_of(set.begin(), set.end(), [&](const StrategyParams& x) {
    return std::abs(x.theta - s.theta) <= tol && std::abs(x.alpha - s.alpha) <= tol &&
           std::abs(x.beta - s.beta) <= tol;
  });
}

EquilibriumReport check_profile(const Evaluator& eval, const StrategySpace& alice_space,
                                const StrategySpace& bob_space,
                                const std::pair<StrategyParams, StrategyParams>& profile,
                                double epsilon) {
  const StrategyParams a = alice_space.snap(profile.first);
  const StrategyParams b = bob_space.snap(profile.second);
  EquilibriumReport r;
  r.profile = {a, b};
  r.payoffs = eval(a, b);
  const Scan sa = scan_grid(eval, alice_space, b, Player::Alice);
  const Scan sb = scan_grid(eval, bob_space, a, Player::Bob);
  r.max_unilateral_gain_a = std::max(0.0, sa.best - r.payoffs.first);
  r.max_unilateral_gain_b = std::max(0.0, sb.best - r.payoffs.second);
  r.is_epsilon_nash = r.max_unilateral_gain_a <= epsilon && r.max_unilateral_gain_b <= epsilon;
  return r;
}

EquilibriumReport check_profile(const Evaluator& eval, const StrategySpace& space,
                                const std::pair<StrategyParams, StrategyParams>& profile,
                                double epsilon) {
  return check_profile(eval, space, space, profile, epsilon);
}

Evaluator closed_form_evaluator(PairingId pairing, const Bimatrix& game,
                                const EntanglementParams& ent, double p, double mu) {
  const NoiseParams n{p, mu};
  return [=](const StrategyParams& s1, const StrategyParams& s2) {
    return closed_payoff_pair(pairing, game, ent, s1, s2, n, n);
  };
}

// ---- case studies -------------------------------------------------------

const std::vector<std::string>& case_ids() {
  static const std::vector<std::string> ids = {"i",     "ii-a",  "ii-b",  "ii-c", "ii-d",
                                               "iii-a", "iii-b", "iii-c", "iv"};
  return ids;
}

CaseSetup case_setup(std::string_view id) {
  const std::vector<std::string> all_games = {"pd", "bos", "chicken"};
  const std::vector<PairingId> all_pairings(kAllPairings.begin(), kAllPairings.end());
  const StrategyParams phase_bob{pi / 2, pi / 2, 0.0};  // theta2 = pi/2, alpha2 = pi/2, beta2 = 0
  const StrategyParams beta_bob{pi / 2, 0.0, pi / 2};   // theta2 = pi/2, alpha2 = 0, beta2 = pi/2
  const auto alice0 = StrategyParams::classical(0.0);
  using P = PairingId;

  if (id == "i")
    return {"i", "gamma = delta = 0: classical limit, payoffs blind to Bob's phases", all_games,
            all_pairings, {0.0, 0.0}, alice0, phase_bob};
  if (id == "ii-a")
    return {"ii-a", "delta = 0, gamma = pi/2, amplitude damping: memory offsets decoherence",
            {"pd", "chicken"}, {P::AdAd}, {pi / 2, 0.0}, StrategyParams::classical(pi / 2),
            phase_bob};
  if (id == "ii-b")
    return {"ii-b", "delta = 0, gamma = pi/2, amplitude damping: quantum Bob ahead in bos",
            {"bos"}, {P::AdAd}, {pi / 2, 0.0}, alice0, phase_bob};
  if (id == "ii-c")
    return {"ii-c", "delta = 0, gamma = pi/2, mixed pairings ending in amplitude damping",
            {"bos"}, {P::PhAd, P::DAd}, {pi / 2, 0.0}, alice0, phase_bob};
  if (id == "ii-d")
    return {"ii-d", "delta = 0, gamma = pi/2, unital pairings: equal payoffs", all_games,
            {P::PhPh, P::DD}, {pi / 2, 0.0}, alice0, phase_bob};
  if (id == "iii-a")
    return {"iii-a", "gamma = 0, delta = pi/2: quantum Bob ahead in bos", {"bos"},
            {P::DD, P::AdAd}, {0.0, pi / 2}, alice0, beta_bob};
  if (id == "iii-b")
    return {"iii-b", "gamma = 0, delta = pi/2, dephasing or damping: equal payoffs", all_games,
            {P::PhPh, P::AdAd}, {0.0, pi / 2}, alice0, beta_bob};
  if (id == "iii-c")
    return {"iii-c", "gamma = 0, delta = pi/2, mixed pairings ending in amplitude damping",
            {"bos"}, {P::PhAd, P::DAd}, {0.0, pi / 2}, alice0, beta_bob};
  if (id == "iv")
    return {"iv", "gamma = delta = pi/2: quantum Bob ahead up to p = 1", all_games,
            all_pairings, {pi / 2, pi / 2}, alice0, phase_bob};
  throw LookupError("unknown case id '" + std::string(id) + "'");
}

CaseReport case_study(std::string_view id, const CaseOptions& options) {
  CaseReport report;
  report.setup = case_setup(id);
  const CaseSetup& setup = report.setup;
  const StrategySpace& bob_space = options.bob_space;
  const StrategySpace& alice_space = options.alice_space;
  bob_space.validate();
  alice_space.validate();

  std::vector<double> ps = options.p_values;
  std::vector<double> mus = options.mu_values;
  std::sort(ps.begin(), ps.end());
  std::sort(mus.begin(), mus.end());

  // Bob's phase grid at his profile theta, used for the variation figure
  std::vector<StrategyParams> phase_grid;
  for (int j = 0; j < bob_space.alpha_points; ++j)
    for (int k = 0; k < bob_space.beta_points; ++k)
      phase_grid.push_back({setup.bob.theta, grid_value(j, bob_space.alpha_points, true),
                            grid_value(k, bob_space.beta_points, true)});

  report.advantage_positive = true;
  report.monotone_in_mu = true;
  report.all_epsilon_nash = true;
  report.bob_profile_always_best = true;

  for (const auto& game_name : setup.games) {
    const Bimatrix game = builtin_game(game_name);
    for (PairingId pairing : setup.pairings) {
      for (double p : ps) {
        double prev_a = -std::numeric_limits<double>::infinity();
        double prev_b = prev_a;
        for (double mu : mus) {
          const Evaluator eval = closed_form_evaluator(pairing, game, setup.ent, p, mu);
          CaseRow row;
          row.game = game_name;
          row.pairing = pairing;
          row.p = p;
          row.mu = mu;
          std::tie(row.payoff_a, row.payoff_b) = eval(setup.alice, setup.bob);

          double lo_a = row.payoff_a, hi_a = row.payoff_a, lo_b = row.payoff_b, hi_b = row.payoff_b;
          for (const auto& s : phase_grid) {
            const auto pay = eval(setup.alice, s);
            lo_a = std::min(lo_a, pay.first);
            hi_a = std::max(hi_a, pay.first);
            lo_b = std::min(lo_b, pay.second);
            hi_b = std::max(hi_b, pay.second);
          }
          report.phase_variation = std::max({report.phase_variation, hi_a - lo_a, hi_b - lo_b});

          if (p > 0.0 && !(row.payoff_b > row.payoff_a)) report.advantage_positive = false;
          if (row.payoff_a < prev_a - 1e-12 || row.payoff_b < prev_b - 1e-12) {
            report.monotone_in_mu = false;
          }
          prev_a = row.payoff_a;
          prev_b = row.payoff_b;

          if (options.check_equilibria) {
            const StrategyParams a = alice_space.snap(setup.alice);
            const StrategyParams b = bob_space.snap(setup.bob);
            const Scan sa = scan_grid(eval, alice_space, b, Player::Alice);
            const Scan sb = scan_grid(eval, bob_space, a, Player::Bob);
            row.gain_a = std::max(0.0, sa.best - row.payoff_a);
            row.gain_b = std::max(0.0, sb.best - row.payoff_b);
            row.is_epsilon_nash = row.gain_a <= kNashEpsilon && row.gain_b <= kNashEpsilon;
            row.bob_profile_is_best_response = contains_strategy(sb.argmax, b);
            report.all_epsilon_nash = report.all_epsilon_nash && row.is_epsilon_nash;
            report.bob_profile_always_best =
                report.bob_profile_always_best && row.bob_profile_is_best_response;
          }
          report.rows.push_back(row);
        }
      }
    }
  }
  if (!options.check_equilibria) {
    report.all_epsilon_nash = false;
    report.bob_profile_always_best = false;
  }
  return report;
}

}  // namespace qgame
