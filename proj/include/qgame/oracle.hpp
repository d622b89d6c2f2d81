#pragma once

#include <utility>

#include "qgame/channels.hpp"
#include "qgame/games.hpp"
#include "qgame/protocol.hpp"

namespace qgame {

// ch1 is the channel on the way from the arbiter to the players, ch2 the
// channel on the way back. Each pass is one two-use channel acting on the
// qubit pair, so memory correlates the errors on Alice's and Bob's qubits
// within a pass.
struct GameConfig {
  Bimatrix game;
  ChannelSpec ch1;
  ChannelSpec ch2;
  EntanglementParams ent;
  StrategyParams s1;
  StrategyParams s2;
};

// rho_f = Phi2( (U1 x U2) Phi1(rho_in) (U1 x U2)^dagger ), with
// Phi_k = two_use_kraus(ch_k). Every kind is supported at every mu.
ComplexMatrix two_pass_state(const EntanglementParams& ent, const StrategyParams& s1,
                             const StrategyParams& s2, const ChannelSpec& ch1,
                             const ChannelSpec& ch2);

std::pair<double, double> oracle_payoffs(const GameConfig& cfg);

}  // namespace qgame
