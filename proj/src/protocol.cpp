#include "qgame/protocol.hpp"

#include <cmath>
#include <numbers>

#include "qgame/errors.hpp"

namespace qgame {

using std::numbers::pi;

void StrategyParams::validate() const {
  require_range("theta", theta, 0.0, pi);
  require_range("alpha", alpha, -pi, pi);
  require_range("beta", beta, -pi, pi);
}

void EntanglementParams::validate() const {
  require_range("gamma", gamma, 0.0, pi / 2);
  require_range("delta", delta, 0.0, pi / 2);
}

StateVector initial_state(double gamma) {
  require_range("gamma", gamma, 0.0, pi / 2);
  return {std::cos(gamma / 2), 0.0, 0.0, cplx(0.0, std::sin(gamma / 2))};
}

ComplexMatrix density(const StateVector& psi) { return ComplexMatrix::outer(psi, psi); }

ComplexMatrix strategy_unitary(const StrategyParams& s) {
  s.validate();
  const double c = std::cos(s.theta / 2);
  const double sn = std::sin(s.theta / 2);
  const cplx i(0.0, 1.0);
  // R|0> = e^{ia}|0>, R|1> = e^{-ia}|1>, P|0> = e^{i(pi/2-b)}|1>, P|1> = e^{i(pi/2+b)}|0>
  ComplexMatrix u(2);
  u(0, 0) = c * std::exp(i * s.alpha);
  u(1, 1) = c * std::exp(-i * s.alpha);
  u(0, 1) = sn * std::exp(i * (pi / 2 + s.beta));
  u(1, 0) = sn * std::exp(i * (pi / 2 - s.beta));
  return u;
}

std::array<StateVector, 4> measurement_basis(double delta) {
  require_range("delta", delta, 0.0, pi / 2);
  const double c = std::cos(delta / 2);
  const double s = std::sin(delta / 2);
  const cplx is(0.0, s);
  return {{
      {c, 0.0, 0.0, is},   // psi00
      {0.0, c, -is, 0.0},  // psi01
      {0.0, -is, c, 0.0},  // psi10
      {is, 0.0, 0.0, c},   // psi11
  }};
}

std::array<ComplexMatrix, 4> payoff_projectors(double delta) {
  const auto basis = measurement_basis(delta);
  return {density(basis[0]), density(basis[1]), density(basis[2]), density(basis[3])};
}

ComplexMatrix payoff_operator(double delta, const Entries& entries) {
  const auto proj = payoff_projectors(delta);
  ComplexMatrix p(4);
  for (std::size_t k = 0; k < 4; ++k) p += cplx(entries[k]) * proj[k];
  return p;
}

ComplexMatrix noiseless_final_state(double gamma, const StrategyParams& s1,
                                    const StrategyParams& s2) {
  const ComplexMatrix rho = density(initial_state(gamma));
  return conjugate_by(tensor(strategy_unitary(s1), strategy_unitary(s2)), rho);
}

double measure_payoff(const ComplexMatrix& payoff_op, const ComplexMatrix& rho) {
  if (payoff_op.dim() != rho.dim()) throw std::invalid_argument("measure_payoff: dimension mismatch");
  const cplx v = mat_trace(payoff_op * rho);
  if (std::abs(v.imag()) > 1e-10) {
    throw NumericalError("payoff has imaginary residue " + std::to_string(v.imag()));
  }
  return v.real();
}

}  // namespace qgame
