#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qgame/closedform.hpp"
#include "qgame/protocol.hpp"

namespace qgame {

inline constexpr double kNashEpsilon = 1e-6;
inline constexpr double kTieTolerance = 1e-9;

enum class Player { Alice, Bob };

// Maps a profile (Alice, Bob) to the payoff pair (Alice, Bob).
using Evaluator =
    std::function<std::pair<double, double>(const StrategyParams&, const StrategyParams&)>;

// Regular grid with endpoints: theta over [0, pi], alpha and beta over
// [-pi, pi]. classical_only pins alpha = beta = 0.
struct StrategySpace {
  int theta_points = 13;
  int alpha_points = 17;
  int beta_points = 17;
  bool classical_only = false;

  static StrategySpace classical(int theta_points = 13) { return {theta_points, 2, 2, true}; }
  void validate() const;
  // Lexicographic order: theta outer, then alpha, then beta.
  std::vector<StrategyParams> grid() const;
  // Replaces coordinates within 1e-12 of a grid value by that grid value.
  StrategyParams snap(const StrategyParams& s) const;
};

struct EquilibriumReport {
  std::pair<StrategyParams, StrategyParams> profile;
  double max_unilateral_gain_a = 0.0;
  double max_unilateral_gain_b = 0.0;
  bool is_epsilon_nash = false;
  std::pair<double, double> payoffs;
};

// Every grid strategy whose payoff is within kTieTolerance of the best one.
std::vector<StrategyParams> best_response(const Evaluator& eval, const StrategySpace& space,
                                          const StrategyParams& opponent, Player responder);

EquilibriumReport check_profile(const Evaluator& eval, const StrategySpace& alice_space,
                                const StrategySpace& bob_space,
                                const std::pair<StrategyParams, StrategyParams>& profile,
                                double epsilon = kNashEpsilon);
EquilibriumReport check_profile(const Evaluator& eval, const StrategySpace& space,
                                const std::pair<StrategyParams, StrategyParams>& profile,
                                double epsilon = kNashEpsilon);

bool contains_strategy(const std::vector<StrategyParams>& set, const StrategyParams& s,
                       double tol = 1e-12);

// Closed-form evaluator with p1 = p2 = p and mu1 = mu2 = mu.
Evaluator closed_form_evaluator(PairingId pairing, const Bimatrix& game,
                                const EntanglementParams& ent, double p, double mu);

// ---- case studies -------------------------------------------------------

struct CaseSetup {
  std::string id;
  std::string description;
  std::vector<std::string> games;
  std::vector<PairingId> pairings;
  EntanglementParams ent;
  StrategyParams alice;
  StrategyParams bob;
};

// i, ii-a, ii-b, ii-c, ii-d, iii-a, iii-b, iii-c, iv
const std::vector<std::string>& case_ids();
CaseSetup case_setup(std::string_view id);  // LookupError on unknown id

struct CaseOptions {
  std::vector<double> p_values{0.0, 0.25, 0.5, 0.75, 1.0};
  std::vector<double> mu_values{0.0, 0.25, 0.5, 0.75, 1.0};
  StrategySpace bob_space{};
  StrategySpace alice_space = StrategySpace::classical();
  bool check_equilibria = true;
};

struct CaseRow {
  std::string game;
  PairingId pairing = PairingId::AdAd;
  double p = 0.0;
  double mu = 0.0;
  double payoff_a = 0.0;
  double payoff_b = 0.0;
  double gain_a = 0.0;
  double gain_b = 0.0;
  bool is_epsilon_nash = false;
  bool bob_profile_is_best_response = false;
};

struct CaseReport {
  CaseSetup setup;
  std::vector<CaseRow> rows;  // game, pairing, p, mu in lexicographic order
  // largest payoff change over Bob's (alpha, beta) grid at his profile theta
  double phase_variation = 0.0;
  bool advantage_positive = false;   // Bob > Alice at every row with p > 0
  bool monotone_in_mu = false;       // both payoffs nondecreasing in mu for every (game, pairing, p)
  bool all_epsilon_nash = false;
  bool bob_profile_always_best = false;
};

CaseReport case_study(std::string_view id, const CaseOptions& options = {});

}  // namespace qgame
