#include "qgame/oracle.hpp"

namespace qgame {

ComplexMatrix two_pass_state(const EntanglementParams& ent, const StrategyParams& s1,
                             const StrategyParams& s2, const ChannelSpec& ch1,
                             const ChannelSpec& ch2) {
  ent.validate();
  ComplexMatrix rho = density(initial_state(ent.gamma));
  rho = apply_channel(two_use_kraus(ch1), rho);
  rho = conjugate_by(tensor(strategy_unitary(s1), strategy_unitary(s2)), rho);
  return apply_channel(two_use_kraus(ch2), rho);
}

std::pair<double, double> oracle_payoffs(const GameConfig& cfg) {
  const ComplexMatrix rho = two_pass_state(cfg.ent, cfg.s1, cfg.s2, cfg.ch1, cfg.ch2);
  return {measure_payoff(payoff_operator(cfg.ent.delta, cfg.game.a), rho),
          measure_payoff(payoff_operator(cfg.ent.delta, cfg.game.b), rho)};
}

}  // namespace qgame
