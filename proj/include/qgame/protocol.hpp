#pragma once

#include <array>

#include "qgame/qmat.hpp"

namespace qgame {

// One player's unitary U(theta, alpha, beta) = cos(theta/2) R + sin(theta/2) P.
// theta in [0, pi], alpha and beta in [-pi, pi].
struct StrategyParams {
  double theta = 0.0;
  double alpha = 0.0;
  double beta = 0.0;

  // A classical player only mixes the two moves: alpha = beta = 0.
  static StrategyParams classical(double theta) { return {theta, 0.0, 0.0}; }
  void validate() const;
};

// gamma: entanglement of the arbiter's initial state.
// delta: entanglement of the measurement basis. Both in [0, pi/2].
struct EntanglementParams {
  double gamma = 0.0;
  double delta = 0.0;
  void validate() const;
};

// Four payoff entries $00, $01, $10, $11 for one player. The first index is
// Alice's move, the second Bob's.
using Entries = std::array<double, 4>;

// cos(gamma/2)|00> + i sin(gamma/2)|11>, basis order |00>,|01>,|10>,|11>.
StateVector initial_state(double gamma);
ComplexMatrix density(const StateVector& psi);

ComplexMatrix strategy_unitary(const StrategyParams& s);

// Entangled measurement basis, returned in the order psi00, psi01, psi10, psi11.
std::array<StateVector, 4> measurement_basis(double delta);
std::array<ComplexMatrix, 4> payoff_projectors(double delta);
ComplexMatrix payoff_operator(double delta, const Entries& entries);

// (U1 x U2) rho_in (U1 x U2)^dagger with no noise anywhere.
ComplexMatrix noiseless_final_state(double gamma, const StrategyParams& s1,
                                    const StrategyParams& s2);

// Tr(P rho). Throws NumericalError if the imaginary part exceeds 1e-10.
double measure_payoff(const ComplexMatrix& payoff_op, const ComplexMatrix& rho);

}  // namespace qgame
