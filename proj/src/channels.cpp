#include "qgame/channels.hpp"

#include <cmath>

#include "qgame/errors.hpp"

namespace qgame {

std::string_view channel_name(ChannelKind kind) {
  switch (kind) {
    case ChannelKind::Dephasing: return "dephasing";
    case ChannelKind::AmplitudeDamping: return "amplitude-damping";
    case ChannelKind::Depolarizing: return "depolarizing";
  }
  return "unknown";
}

void ChannelSpec::validate() const {
  require_range("p", p, 0.0, 1.0);
  require_range("mu", mu, 0.0, 1.0);
}

const ComplexMatrix& pauli(int index) {
  static const std::array<ComplexMatrix, 4> table = {
      ComplexMatrix::identity(2),
      ComplexMatrix(2, {0.0, 1.0, 1.0, 0.0}),
      ComplexMatrix(2, {0.0, cplx(0.0, -1.0), cplx(0.0, 1.0), 0.0}),
      ComplexMatrix(2, {1.0, 0.0, 0.0, -1.0}),
  };
  if (index < 0 || index > 3) throw std::out_of_range("pauli index");
  return table[static_cast<std::size_t>(index)];
}

std::array<double, 4> pauli_probabilities(ChannelKind kind, double p) {
  require_range("p", p, 0.0, 1.0);
  switch (kind) {
    case ChannelKind::Dephasing: return {1.0 - p / 2, 0.0, 0.0, p / 2};
    case ChannelKind::Depolarizing: return {1.0 - p, p / 3, p / 3, p / 3};
    case ChannelKind::AmplitudeDamping: break;
  }
  throw UnsupportedError("amplitude damping is not a Pauli channel");
}

static std::vector<int> pauli_support(ChannelKind kind) {
  if (kind == ChannelKind::Dephasing) return {0, 3};
  return {0, 1, 2, 3};
}

// A0 = [[cos chi, 0], [0, 1]], A1 = [[0, 0], [sin chi, 0]] with cos chi = sqrt(1-p).
// |0> is the excited level and decays to |1>.
static std::array<ComplexMatrix, 2> damping_pair(double p) {
  const double c = std::sqrt(1.0 - p);
  const double s = std::sqrt(p);
  return {ComplexMatrix(2, {c, 0.0, 0.0, 1.0}), ComplexMatrix(2, {0.0, 0.0, s, 0.0})};
}

KrausSet single_use_kraus(ChannelKind kind, double p) {
  require_range("p", p, 0.0, 1.0);
  KrausSet ks;
  if (kind == ChannelKind::AmplitudeDamping) {
    auto a = damping_pair(p);
    ks.operators = {a[0], a[1]};
    return ks;
  }
  const auto probs = pauli_probabilities(kind, p);
  for (int i : pauli_support(kind)) ks.operators.push_back(std::sqrt(probs[i]) * pauli(i));
  return ks;
}

std::map<std::pair<int, int>, double> pair_weights(ChannelKind kind, double p, double mu) {
  require_range("mu", mu, 0.0, 1.0);
  if (kind == ChannelKind::AmplitudeDamping) {
    throw UnsupportedError("pair weights are defined for Pauli channels only");
  }
  const auto probs = pauli_probabilities(kind, p);
  std::map<std::pair<int, int>, double> w;
  const auto support = pauli_support(kind);
  for (int i : support)
    for (int j : support) w[{i, j}] = probs[i] * ((1.0 - mu) * probs[j] + (i == j ? mu : 0.0));
  return w;
}

KrausSet two_use_kraus(const ChannelSpec& spec) {
  spec.validate();
  KrausSet ks;
  if (spec.kind != ChannelKind::AmplitudeDamping) {
    for (const auto& [ij, w] : pair_weights(spec.kind, spec.p, spec.mu)) {
      ks.operators.push_back(std::sqrt(w) * tensor(pauli(ij.first), pauli(ij.second)));
    }
    return ks;
  }

  if (spec.mu < 1.0) {
    const auto a = damping_pair(spec.p);
    const double scale = std::sqrt(1.0 - spec.mu);
    for (const auto& x : a)
      for (const auto& y : a) ks.operators.push_back(scale * tensor(x, y));
  }
  if (spec.mu > 0.0) {
    const double scale = std::sqrt(spec.mu);
    ComplexMatrix a00 = ComplexMatrix::diagonal({std::sqrt(1.0 - spec.p), 1.0, 1.0, 1.0});
    ComplexMatrix a11(4);
    a11(3, 0) = std::sqrt(spec.p);
    ks.operators.push_back(scale * a00);
    ks.operators.push_back(scale * a11);
  }
  return ks;
}

CompletenessReport verify_completeness(const KrausSet& ks, double tol) {
  if (ks.operators.empty()) return {false, 1.0};
  const std::size_t n = ks.operators.front().dim();
  ComplexMatrix sum(n);
  for (const auto& k : ks.operators) sum += dagger(k) * k;
  const double dev = max_abs_diff(sum, ComplexMatrix::identity(n));
  return {dev <= tol, dev};
}

ComplexMatrix apply_channel(const KrausSet& ks, const ComplexMatrix& rho) {
  ComplexMatrix out(rho.dim());
  for (const auto& k : ks.operators) out += conjugate_by(k, rho);
  return out;
}

}  // namespace qgame
