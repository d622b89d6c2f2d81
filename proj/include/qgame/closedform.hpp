#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <utility>

#include "qgame/channels.hpp"
#include "qgame/games.hpp"
#include "qgame/protocol.hpp"

namespace qgame {

// Ordered (first pass, second pass) channel pairings.
enum class PairingId { AdAd, DD, PhPh, PhAd, AdPh, AdD, DAd, DPh, PhD };

inline constexpr std::array<PairingId, 9> kAllPairings = {
    PairingId::AdAd, PairingId::DD,  PairingId::PhPh, PairingId::PhAd, PairingId::AdPh,
    PairingId::AdD,  PairingId::DAd, PairingId::DPh,  PairingId::PhD};

std::string_view pairing_name(PairingId id);  // "ad-ad", "d-d", ...
std::optional<PairingId> parse_pairing(std::string_view name);
std::pair<ChannelKind, ChannelKind> pairing_kinds(PairingId id);

struct NoiseParams {
  double p = 0.0;
  double mu = 0.0;
};

// Amplitude damping, two uses.
//   chi00: |00> survives          chi11: |00> -> |11>
//   chi01: |00> -> |01> (or |10>) chi10: |00><11| coherence factor
//   chi_a: |01> -> |11>           chi_b: |01> survives, also the |01><10| factor
struct AdCoeffs {
  double chi00, chi11, chi10, chi01, chi_a, chi_b;
};
AdCoeffs ad_coeffs(double p, double mu);

// Depolarizing, two uses. The slot decides the meaning of d2..d4:
//   First : d1 no flip, d2 both qubits flipped, d3 |00><11| factor, d4 one flip
//   Second: d1 no flip, d2 one flip, d3 both flipped, d4 (minus 2 mu p / 3) coherence
enum class Slot { First, Second };
struct DepolCoeffs {
  double d1, d2, d3, d4;
  double eta1dp;  // -(d1 + d2) + 2 d4; meaningful for the first slot
};
DepolCoeffs depol_coeffs(double p, double mu, Slot slot);

struct DephasingCoeff {
  double mu_p;  // (1-mu)(1-p)^2 + mu
};
DephasingCoeff dephasing_coeff(double p, double mu);

// Trigonometric building blocks shared by every pairing.
struct AngleTerms {
  double c1, s1, c2, s2;  // cos^2(theta_i/2), sin^2(theta_i/2)
  double cg, sg, cd, sd;  // same for gamma and delta
  double xi;              // sin(delta) sin(gamma) / 2
  double sin_g;           // sin gamma sin theta1 sin theta2
  double sin_d;           // sin delta sin theta1 sin theta2
  double s_plus;          // sin(a1 + a2 + b1 + b2)
  double s_minus;         // sin(a1 + a2 - b1 - b2)
  double s_alt;           // sin(a1 - a2 + b1 - b2)
  double c_aa, c_bb;      // cos 2(a1 + a2), cos 2(b1 + b2)
  double c_21, c_12;      // cos 2(a2 - b1), cos 2(a1 - b2)
};
AngleTerms angle_terms(const EntanglementParams& ent, const StrategyParams& s1,
                       const StrategyParams& s2);

namespace composite {

// populations after a first-slot depolarizing pass
struct DepolMix {
  double d11;  // d1 cg + d2 sg
  double d21;  // d2 cg + d1 sg
};
DepolMix depol_mix(const DepolCoeffs& d, double cg, double sg);

// chi11 cg + chi00 cg - 2 chi01 cg + sg
double eta1_ad(const AdCoeffs& a, double cg, double sg);

struct AdAd {
  std::array<double, 4> eta, chi;
  std::array<double, 6> delta;
};
AdAd ad_ad(const AdCoeffs& a1, const AdCoeffs& a2, const AngleTerms& t);

struct DD {
  double eta, chi, delta;
};
DD d_d(const DepolCoeffs& d1, const DepolCoeffs& d2, const AngleTerms& t);

struct PhPh {
  double eta, chi;
};
PhPh ph_ph(const AngleTerms& t);

struct PhAd {
  std::array<double, 4> eta, chi;  // index 3: weights of the interference term
  std::array<double, 4> delta;
};
PhAd ph_ad(const AdCoeffs& a2, const AngleTerms& t);

struct AdPh {
  double eta, chi, delta, eta1ad;
};
AdPh ad_ph(const AdCoeffs& a1, const AngleTerms& t);

struct AdD {
  double eta, chi, delta, eta1ad;
};
AdD ad_d(const AdCoeffs& a1, const DepolCoeffs& d2, const AngleTerms& t);

struct DAd {
  std::array<double, 4> eta, chi;  // index 3: weights of the interference term
  std::array<double, 4> delta;     // index 3: (01 + 10) weight of the s1 s2 block
};
DAd d_ad(const DepolCoeffs& d1, const AdCoeffs& a2, const AngleTerms& t);

struct DPh {
  double eta, chi;
};
DPh d_ph(const DepolCoeffs& d1, const AngleTerms& t);

struct PhD {
  double eta, chi;
};
PhD ph_d(const DepolCoeffs& d2, const AngleTerms& t);

}  // namespace composite

// Payoff of the player whose entries are given. ch1 parameterizes the first
// pass, ch2 the second; their kinds come from the pairing.
double closed_payoff(PairingId pairing, const Entries& entries, const EntanglementParams& ent,
                     const StrategyParams& s1, const StrategyParams& s2, NoiseParams ch1,
                     NoiseParams ch2);

std::pair<double, double> closed_payoff_pair(PairingId pairing, const Bimatrix& game,
                                             const EntanglementParams& ent,
                                             const StrategyParams& s1, const StrategyParams& s2,
                                             NoiseParams ch1, NoiseParams ch2);

}  // namespace qgame
