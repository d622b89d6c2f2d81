#pragma once

#include <array>
#include <map>
#include <string_view>
#include <utility>
#include <vector>

#include "qgame/qmat.hpp"

namespace qgame {

enum class ChannelKind { Dephasing, AmplitudeDamping, Depolarizing };

std::string_view channel_name(ChannelKind kind);

// p: decoherence strength, mu: memory (probability that the two uses see the
// same error). Both in [0, 1].
struct ChannelSpec {
  ChannelKind kind = ChannelKind::Dephasing;
  double p = 0.0;
  double mu = 0.0;
  void validate() const;
};

// Kraus elements with their weights already folded in.
struct KrausSet {
  std::vector<ComplexMatrix> operators;
};

// sigma_0 = I, sigma_1 = X, sigma_2 = Y, sigma_3 = Z
const ComplexMatrix& pauli(int index);

// Single-use Pauli probabilities p_0..p_3. Dephasing: (1-p/2, 0, 0, p/2).
// Depolarizing: (1-p, p/3, p/3, p/3). Throws for amplitude damping.
std::array<double, 4> pauli_probabilities(ChannelKind kind, double p);

KrausSet single_use_kraus(ChannelKind kind, double p);

// w_ij = p_i [(1-mu) p_j + mu delta_ij] over the Pauli indices the channel
// uses ({0,3} for dephasing, {0,1,2,3} for depolarizing).
std::map<std::pair<int, int>, double> pair_weights(ChannelKind kind, double p, double mu);

// Two consecutive uses of the channel (4x4 elements). Pauli channels use
// sqrt(w_ij) sigma_i x sigma_j. Amplitude damping mixes the product set
// (weight 1-mu) with the correlated pair A00c, A11c (weight mu); a group with
// zero weight is omitted.
KrausSet two_use_kraus(const ChannelSpec& spec);

struct CompletenessReport {
  bool ok = false;
  double deviation = 0.0;  // max |sum K^dagger K - I|
};

CompletenessReport verify_completeness(const KrausSet& ks, double tol);

ComplexMatrix apply_channel(const KrausSet& ks, const ComplexMatrix& rho);

}  // namespace qgame
