#include "qgame/closedform.hpp"

#include <cmath>

#include "qgame/errors.hpp"

namespace qgame {

std::string_view pairing_name(PairingId id) {
  switch (id) {
    case PairingId::AdAd: return "ad-ad";
    case PairingId::DD: return "d-d";
    case PairingId::PhPh: return "ph-ph";
    case PairingId::PhAd: return "ph-ad";
    case PairingId::AdPh: return "ad-ph";
    case PairingId::AdD: return "ad-d";
    case PairingId::DAd: return "d-ad";
    case PairingId::DPh: return "d-ph";
    case PairingId::PhD: return "ph-d";
  }
  return "?";
}

std::optional<PairingId> parse_pairing(std::string_view name) {
  for (PairingId id : kAllPairings)
    if (pairing_name(id) == name) return id;
  return std::nullopt;
}

std::pair<ChannelKind, ChannelKind> pairing_kinds(PairingId id) {
  constexpr auto Ph = ChannelKind::Dephasing;
  constexpr auto Ad = ChannelKind::AmplitudeDamping;
  constexpr auto D = ChannelKind::Depolarizing;
  switch (id) {
    case PairingId::AdAd: return {Ad, Ad};
    case PairingId::DD: return {D, D};
    case PairingId::PhPh: return {Ph, Ph};
    case PairingId::PhAd: return {Ph, Ad};
    case PairingId::AdPh: return {Ad, Ph};
    case PairingId::AdD: return {Ad, D};
    case PairingId::DAd: return {D, Ad};
    case PairingId::DPh: return {D, Ph};
    case PairingId::PhD: return {Ph, D};
  }
  throw LookupError("unknown pairing");
}

static void check_noise(double p, double mu) {
  require_range("p", p, 0.0, 1.0);
  require_range("mu", mu, 0.0, 1.0);
}

AdCoeffs ad_coeffs(double p, double mu) {
  check_noise(p, mu);
  const double q = 1.0 - p;
  return {
      q * q + mu * q * p,                      // chi00
      p * p + mu * q * p,                      // chi11
      (1.0 - mu) * q + mu * std::sqrt(q),      // chi10
      (1.0 - mu) * q * p,                      // chi01
      (1.0 - mu) * p,                          // chi_a
      q + mu * p,                              // chi_b
  };
}

DepolCoeffs depol_coeffs(double p, double mu, Slot slot) {
  check_noise(p, mu);
  const double d1 = -(1.0 / 9) * (-3 + 2 * p) * (-2 * p + 2 * mu * p + 3);
  const double both = -(2.0 / 9) * p * (-2 * p + 2 * mu * p - 3 * mu);
  const double one = (2.0 / 9) * p * (-3 + 2 * p) * (mu - 1);
  const double coh = -(1.0 / 9) * (-9 + 24 * p - 18 * mu * p - 16 * p * p + 16 * mu * p * p);
  DepolCoeffs d{};
  d.d1 = d1;
  if (slot == Slot::First) {
    d.d2 = both;
    d.d3 = coh - (2.0 / 3) * mu * p;
    d.d4 = one;
  } else {
    d.d2 = one;
    d.d3 = both;
    d.d4 = coh;
  }
  d.eta1dp = -(d.d1 + d.d2) + 2 * d.d4;
  return d;
}

DephasingCoeff dephasing_coeff(double p, double mu) {
  check_noise(p, mu);
  return {(1.0 - mu) * (1.0 - p) * (1.0 - p) + mu};
}

AngleTerms angle_terms(const EntanglementParams& ent, const StrategyParams& s1,
                       const StrategyParams& s2) {
  ent.validate();
  s1.validate();
  s2.validate();
  auto sq = [](double x) { return x * x; };
  AngleTerms t{};
  t.c1 = sq(std::cos(s1.theta / 2));
  t.s1 = sq(std::sin(s1.theta / 2));
  t.c2 = sq(std::cos(s2.theta / 2));
  t.s2 = sq(std::sin(s2.theta / 2));
  t.cg = sq(std::cos(ent.gamma / 2));
  t.sg = sq(std::sin(ent.gamma / 2));
  t.cd = sq(std::cos(ent.delta / 2));
  t.sd = sq(std::sin(ent.delta / 2));
  t.xi = 0.5 * std::sin(ent.delta) * std::sin(ent.gamma);
  const double st = std::sin(s1.theta) * std::sin(s2.theta);
  t.sin_g = std::sin(ent.gamma) * st;
  t.sin_d = std::sin(ent.delta) * st;
  const double a1 = s1.alpha, b1 = s1.beta, a2 = s2.alpha, b2 = s2.beta;
  t.s_plus = std::sin(a1 + a2 + b1 + b2);
  t.s_minus = std::sin(a1 + a2 - b1 - b2);
  t.s_alt = std::sin(a1 - a2 + b1 - b2);
  t.c_aa = std::cos(2 * (a1 + a2));
  t.c_bb = std::cos(2 * (b1 + b2));
  t.c_21 = std::cos(2 * (a2 - b1));
  t.c_12 = std::cos(2 * (a1 - b2));
  return t;
}

namespace composite {

DepolMix depol_mix(const DepolCoeffs& d, double cg, double sg) {
  return {d.d1 * cg + d.d2 * sg, d.d2 * cg + d.d1 * sg};
}

double eta1_ad(const AdCoeffs& a, double cg, double sg) {
  return a.chi11 * cg + a.chi00 * cg - 2 * a.chi01 * cg + sg;
}

AdAd ad_ad(const AdCoeffs& a1, const AdCoeffs& a2, const AngleTerms& t) {
  const double cg = t.cg, sg = t.sg, cd = t.cd, sd = t.sd;
  const double g = sg + a1.chi11 * cg;  // population of |11> after the first pass
  const double cross = (a1.chi00 * a2.chi11 + 2 * a1.chi01 * a2.chi_a) * cg;
  const double mid = (a1.chi00 + 2 * a1.chi01 * a2.chi_a) * cg;
  const double odd = a1.chi01 + a1.chi01 * a2.chi11;
  const double feed = a2.chi_a * (sg + a1.chi11 * cg + a1.chi00 * cg);
  const double k4 = a1.chi10 + a1.chi10 * a2.chi11 - 2 * a1.chi10 * a2.chi_a;
  AdAd r{};
  r.eta[0] = a1.chi00 * a2.chi00 * cg * cd + g * sd + cross * sd;
  r.eta[1] = a2.chi00 * g * cd + mid * sd + a2.chi11 * g * sd;
  r.eta[2] = a1.chi01 * a2.chi00 * cg * cd + odd * cg * sd + feed * sd;
  r.eta[3] = a1.chi10 * a2.chi00 * cd + k4 * sd;
  r.chi[0] = a1.chi00 * a2.chi00 * cg * sd + g * cd + cross * cd;
  r.chi[1] = a2.chi00 * g * sd + mid * cd + a2.chi11 * g * cd;
  r.chi[2] = a1.chi01 * a2.chi00 * cg * sd + odd * cg * cd + feed * cd;
  r.chi[3] = a1.chi10 * a2.chi00 * sd + k4 * cd;
  r.delta[0] = (a1.chi01 * a2.chi_b + a1.chi00 * a2.chi01) * cg;
  r.delta[1] = a1.chi01 * a2.chi_b * cg + a2.chi01 * g;
  r.delta[2] = a2.chi_b * g * cd + (a1.chi01 * a2.chi01 + a1.chi00 * a2.chi_b * sd) * cg;
  r.delta[3] = a2.chi_b * g * sd + (a1.chi01 * a2.chi01 + a1.chi00 * a2.chi_b * cd) * cg;
  r.delta[4] = eta1_ad(a1, cg, sg);
  r.delta[5] = a1.chi10 * a2.chi01 - a1.chi10 * a2.chi_b;
  return r;
}

DD d_d(const DepolCoeffs& d1, const DepolCoeffs& d2, const AngleTerms& t) {
  const auto m = depol_mix(d1, t.cg, t.sg);
  DD r{};
  r.eta = (d2.d1 * m.d11 + d2.d3 * m.d21) * t.cd + (d2.d1 * m.d21 + d2.d3 * m.d11) * t.sd +
          2 * d2.d2 * d1.d4;
  r.chi = (d2.d1 * m.d21 + d2.d3 * m.d11) * t.cd + (d2.d1 * m.d11 + d2.d3 * m.d21) * t.sd +
          2 * d2.d2 * d1.d4;
  r.delta = d2.d2 * m.d11 + d2.d2 * m.d21 + d2.d1 * d1.d4 + d2.d3 * d1.d4;
  return r;
}

PhPh ph_ph(const AngleTerms& t) {
  return {t.cg * t.cd + t.sg * t.sd, t.sg * t.cd + t.cg * t.sd};
}

PhAd ph_ad(const AdCoeffs& a2, const AngleTerms& t) {
  const double cg = t.cg, sg = t.sg, cd = t.cd, sd = t.sd;
  const double rest = 1 + a2.chi11 - 2 * a2.chi_a;
  PhAd r{};
  r.eta[0] = a2.chi00 * cg * cd + (sg + a2.chi11 * cg) * sd;
  r.eta[1] = (cg + a2.chi11 * sg) * sd + a2.chi00 * sg * cd;
  r.eta[2] = a2.chi_a * sg * sd + a2.chi_a * cg * sd;
  r.eta[3] = a2.chi00 * cd + rest * sd;
  r.chi[0] = (sg + a2.chi11 * cg) * cd + a2.chi00 * cg * sd;
  r.chi[1] = a2.chi00 * sg * sd + (cg + a2.chi11 * sg) * cd;
  r.chi[2] = a2.chi_a * sg * cd + a2.chi_a * cg * cd;
  r.chi[3] = a2.chi00 * sd + rest * cd;
  r.delta[0] = a2.chi01 * cg * cd + a2.chi01 * cg * sd;
  r.delta[1] = a2.chi01 * sg * cd + a2.chi01 * sg * sd;
  r.delta[2] = a2.chi_b * sg * cd + a2.chi_b * cg * sd;
  r.delta[3] = a2.chi_b * cg * cd + a2.chi_b * sg * sd;
  return r;
}

AdPh ad_ph(const AdCoeffs& a1, const AngleTerms& t) {
  const double cg = t.cg, sg = t.sg, cd = t.cd, sd = t.sd;
  AdPh r{};
  r.eta = a1.chi00 * cg * cd + (sg + a1.chi11 * cg) * sd;
  r.chi = (sg + a1.chi11 * cg) * cd + a1.chi00 * cg * sd;
  r.delta = a1.chi01 * cg * cd + a1.chi01 * cg * sd;
  r.eta1ad = eta1_ad(a1, cg, sg);
  return r;
}

AdD ad_d(const AdCoeffs& a1, const DepolCoeffs& d2, const AngleTerms& t) {
  const double cg = t.cg, sg = t.sg, cd = t.cd, sd = t.sd;
  const double g = sg + a1.chi11 * cg;
  const double u = a1.chi00 * d2.d1 * cg + d2.d3 * g;
  const double v = d2.d1 * g + a1.chi00 * d2.d3 * cg;
  AdD r{};
  r.eta = u * cd + v * sd + 2 * a1.chi01 * d2.d2 * cg;
  r.chi = u * sd + v * cd + 2 * a1.chi01 * d2.d2 * cg;
  r.delta = a1.chi01 * (d2.d1 + d2.d3) * cg + d2.d2 * g + a1.chi00 * d2.d2 * cg;
  r.eta1ad = eta1_ad(a1, cg, sg);
  return r;
}

DAd d_ad(const DepolCoeffs& d1, const AdCoeffs& a2, const AngleTerms& t) {
  const double cd = t.cd, sd = t.sd;
  const auto m = depol_mix(d1, t.cg, t.sg);
  // The mixed population that enters the first block is d21 (checked
  // against the density-matrix simulation).
  const double d12 = m.d21;
  const double rest = 1 + a2.chi11 - 2 * a2.chi_a;
  DAd r{};
  r.eta[0] = m.d11 * a2.chi00 * cd + m.d11 * a2.chi11 * sd + d12 * sd + 2 * d1.d4 * a2.chi_a * sd;
  r.eta[1] = m.d21 * a2.chi00 * cd + m.d21 * a2.chi11 * sd + m.d11 * sd + 2 * d1.d4 * a2.chi_a * sd;
  r.eta[2] = (m.d11 + m.d21) * a2.chi_a * sd + d1.d4 * a2.chi00 * cd + (a2.chi11 + 1) * d1.d4 * sd;
  r.eta[3] = a2.chi00 * cd + rest * sd;
  r.chi[0] = m.d11 * a2.chi00 * sd + m.d11 * a2.chi11 * cd + d12 * cd + 2 * d1.d4 * a2.chi_a * cd;
  r.chi[1] = m.d21 * a2.chi00 * sd + m.d21 * a2.chi11 * cd + m.d11 * cd + 2 * d1.d4 * a2.chi_a * cd;
  r.chi[2] = (m.d11 + m.d21) * a2.chi_a * cd + d1.d4 * a2.chi00 * sd + (a2.chi11 + 1) * d1.d4 * cd;
  r.chi[3] = a2.chi00 * sd + rest * cd;
  r.delta[0] = m.d11 * a2.chi01 + d1.d4 * a2.chi_b;
  r.delta[1] = m.d11 * a2.chi_b * sd + m.d21 * a2.chi_b * cd + d1.d4 * a2.chi01;
  r.delta[2] = m.d11 * a2.chi_b * cd + m.d21 * a2.chi_b * sd + d1.d4 * a2.chi01;
  r.delta[3] = m.d21 * a2.chi01 + d1.d4 * a2.chi_b;
  return r;
}

DPh d_ph(const DepolCoeffs& d1, const AngleTerms& t) {
  const auto m = depol_mix(d1, t.cg, t.sg);
  return {m.d11 * t.cd + m.d21 * t.sd, m.d11 * t.sd + m.d21 * t.cd};
}

PhD ph_d(const DepolCoeffs& d2, const AngleTerms& t) {
  const double cg = t.cg, sg = t.sg, cd = t.cd, sd = t.sd;
  return {(d2.d1 * cg + d2.d3 * sg) * cd + (d2.d1 * sg + d2.d3 * cg) * sd,
          (d2.d1 * sg + d2.d3 * cg) * cd + (d2.d1 * cg + d2.d3 * sg) * sd};
}

}  // namespace composite

namespace {

struct Pay {
  double e00, e01, e10, e11;
  explicit Pay(const Entries& e) : e00(e[0]), e01(e[1]), e10(e[2]), e11(e[3]) {}
  double sum_diag() const { return e00 + e11; }
  double diff_diag() const { return e00 - e11; }
  double sum_off() const { return e01 + e10; }
  double diff_off() const { return e01 - e10; }
};

double pay_ad_ad(const Pay& e, const AngleTerms& t, NoiseParams n1, NoiseParams n2) {
  const AdCoeffs a1 = ad_coeffs(n1.p, n1.mu);
  const AdCoeffs a2 = ad_coeffs(n2.p, n2.mu);
  const auto c = composite::ad_ad(a1, a2, t);
  const double k = a1.chi10 * a2.chi10 * t.xi;
  const double kb = a1.chi10 * a2.chi_b * t.xi;
  return t.c1 * t.c2 * (c.eta[0] * e.e00 + c.chi[0] * e.e11 + c.delta[0] * e.sum_off() + e.diff_diag() * k * t.c_aa) +
         t.s1 * t.s2 * (c.eta[1] * e.e00 + c.chi[1] * e.e11 + c.delta[1] * e.sum_off() - e.diff_diag() * k * t.c_bb) +
         t.s1 * t.c2 * (c.eta[2] * e.e00 + c.chi[2] * e.e11 + c.delta[2] * e.e01 + c.delta[3] * e.e10 + e.diff_off() * kb * t.c_21) +
         t.c1 * t.s2 * (c.eta[2] * e.e00 + c.chi[2] * e.e11 + c.delta[3] * e.e01 + c.delta[2] * e.e10 - e.diff_off() * kb * t.c_12) +
         0.25 * t.sin_d * a2.chi10 * e.diff_diag() * c.delta[4] * t.s_plus -
         0.25 * t.sin_g * (c.eta[3] * e.e00 + c.chi[3] * e.e11) * t.s_minus -
         0.25 * t.sin_g * e.sum_off() * c.delta[5] * t.s_minus +
         0.25 * t.sin_d * a2.chi_b * e.diff_off() * c.delta[4] * t.s_alt;
}

double pay_d_d(const Pay& e, const AngleTerms& t, NoiseParams n1, NoiseParams n2) {
  const DepolCoeffs d1 = depol_coeffs(n1.p, n1.mu, Slot::First);
  const DepolCoeffs d2 = depol_coeffs(n2.p, n2.mu, Slot::Second);
  const auto c = composite::d_d(d1, d2, t);
  const double mp = n2.mu * n2.p;
  const double k = (d2.d4 - 2.0 / 3 * mp) * d1.d3 * t.xi;
  const double l = 0.25 * d1.d3 * d2.d1 - 0.5 * d1.d3 * d2.d2 + 0.25 * d1.d3 * d2.d3;
  const double q = (0.25 * d2.d4 - mp / 6) * d1.eta1dp;
  return t.c1 * t.c2 * (c.eta * e.e00 + c.chi * e.e11 + c.delta * e.sum_off() + e.diff_diag() * k * t.c_aa) +
         t.s1 * t.s2 * (c.chi * e.e00 + c.eta * e.e11 + c.delta * e.sum_off() - e.diff_diag() * k * t.c_bb) +
         t.s1 * t.c2 * (c.eta * e.e10 + c.chi * e.e01 + c.delta * e.sum_diag() + e.diff_off() * k * t.c_21) +
         t.c1 * t.s2 * (c.eta * e.e01 + c.chi * e.e10 + c.delta * e.sum_diag() - e.diff_off() * k * t.c_12) -
         l * e.sum_diag() * t.sin_g * t.s_minus - q * e.diff_diag() * t.sin_d * t.s_plus +
         l * e.sum_off() * t.sin_g * t.s_minus - q * e.diff_off() * t.sin_d * t.s_alt;
}

double pay_ph_ph(const Pay& e, const AngleTerms& t, NoiseParams n1, NoiseParams n2) {
  const double m1 = dephasing_coeff(n1.p, n1.mu).mu_p;
  const double m2 = dephasing_coeff(n2.p, n2.mu).mu_p;
  const auto c = composite::ph_ph(t);
  const double k = m1 * m2 * t.xi;
  return t.c1 * t.c2 * (c.eta * e.e00 + c.chi * e.e11 + e.diff_diag() * k * t.c_aa) +
         t.s1 * t.s2 * (c.eta * e.e11 + c.chi * e.e00 - e.diff_diag() * k * t.c_bb) +
         t.s1 * t.c2 * (c.eta * e.e10 + c.chi * e.e01 + e.diff_off() * k * t.c_21) +
         t.c1 * t.s2 * (c.eta * e.e01 + c.chi * e.e10 - e.diff_off() * k * t.c_12) +
         m2 / 4 * e.diff_diag() * t.sin_d * t.s_plus +
         m1 / 4 * (e.sum_off() - e.sum_diag()) * t.sin_g * t.s_minus +
         m2 / 4 * e.diff_off() * t.sin_d * t.s_alt;
}

double pay_ph_ad(const Pay& e, const AngleTerms& t, NoiseParams n1, NoiseParams n2) {
  const double m1 = dephasing_coeff(n1.p, n1.mu).mu_p;
  const AdCoeffs a2 = ad_coeffs(n2.p, n2.mu);
  const auto c = composite::ph_ad(a2, t);
  const double k = m1 * a2.chi10 * t.xi;
  const double kb = m1 * a2.chi_b * t.xi;
  return t.c1 * t.c2 * (c.eta[0] * e.e00 + c.chi[0] * e.e11 + c.delta[0] * e.sum_off() + e.diff_diag() * k * t.c_aa) +
         t.s1 * t.s2 * (c.eta[1] * e.e00 + c.chi[1] * e.e11 + c.delta[1] * e.sum_off() - e.diff_diag() * k * t.c_bb) +
         t.s1 * t.c2 * (c.delta[2] * e.e01 + c.delta[3] * e.e10 + c.eta[2] * e.e00 + c.chi[2] * e.e11 + e.diff_off() * kb * t.c_21) +
         t.c1 * t.s2 * (c.delta[3] * e.e01 + c.delta[2] * e.e10 + c.eta[2] * e.e00 + c.chi[2] * e.e11 - e.diff_off() * kb * t.c_12) -
         0.25 * (c.eta[3] * e.e00 + c.chi[3] * e.e11) * m1 * t.sin_g * t.s_minus +
         0.25 * a2.chi10 * e.diff_diag() * t.sin_d * t.s_plus +
         0.25 * m1 * (a2.chi_b - a2.chi01) * e.sum_off() * t.sin_g * t.s_minus +
         0.25 * a2.chi_b * e.diff_off() * t.sin_d * t.s_alt;
}

double pay_ad_ph(const Pay& e, const AngleTerms& t, NoiseParams n1, NoiseParams n2) {
  const AdCoeffs a1 = ad_coeffs(n1.p, n1.mu);
  const double m2 = dephasing_coeff(n2.p, n2.mu).mu_p;
  const auto c = composite::ad_ph(a1, t);
  const double k = m2 * a1.chi10 * t.xi;
  return t.c1 * t.c2 * (c.eta * e.e00 + c.chi * e.e11 + c.delta * e.sum_off() + e.diff_diag() * k * t.c_aa) +
         t.s1 * t.s2 * (c.chi * e.e00 + c.eta * e.e11 + c.delta * e.sum_off() - e.diff_diag() * k * t.c_bb) +
         t.s1 * t.c2 * (c.eta * e.e10 + c.chi * e.e01 + c.delta * e.sum_diag() + e.diff_off() * k * t.c_21) +
         t.c1 * t.s2 * (c.eta * e.e01 + c.chi * e.e10 + c.delta * e.sum_diag() - e.diff_off() * k * t.c_12) -
         0.25 * a1.chi10 * e.sum_diag() * t.sin_g * t.s_minus +
         0.25 * m2 * c.eta1ad * e.diff_diag() * t.sin_d * t.s_plus +
         0.25 * a1.chi10 * e.sum_off() * t.sin_g * t.s_minus +
         0.25 * m2 * c.eta1ad * e.diff_off() * t.sin_d * t.s_alt;
}

double pay_ad_d(const Pay& e, const AngleTerms& t, NoiseParams n1, NoiseParams n2) {
  const AdCoeffs a1 = ad_coeffs(n1.p, n1.mu);
  const DepolCoeffs d2 = depol_coeffs(n2.p, n2.mu, Slot::Second);
  const auto c = composite::ad_d(a1, d2, t);
  const double mp = n2.mu * n2.p;
  const double k = (d2.d4 - 2.0 / 3 * mp) * a1.chi10 * t.xi;
  const double l = 0.25 * a1.chi10 * d2.d1 - 0.5 * a1.chi10 * d2.d2 + 0.25 * a1.chi10 * d2.d3;
  const double q = (0.25 * d2.d4 - mp / 6) * c.eta1ad;
  return t.c1 * t.c2 * (c.eta * e.e00 + c.chi * e.e11 + c.delta * e.sum_off() + e.diff_diag() * k * t.c_aa) +
         t.s1 * t.s2 * (c.chi * e.e00 + c.eta * e.e11 + c.delta * e.sum_off() - e.diff_diag() * k * t.c_bb) +
         t.s1 * t.c2 * (c.chi * e.e01 + c.eta * e.e10 + c.delta * e.sum_diag() + e.diff_off() * k * t.c_21) +
         t.c1 * t.s2 * (c.eta * e.e01 + c.chi * e.e10 + c.delta * e.sum_diag() - e.diff_off() * k * t.c_12) -
         l * e.sum_diag() * t.sin_g * t.s_minus + q * e.diff_diag() * t.sin_d * t.s_plus +
         l * e.sum_off() * t.sin_g * t.s_minus + q * e.diff_off() * t.sin_d * t.s_alt;
}

double pay_d_ad(const Pay& e, const AngleTerms& t, NoiseParams n1, NoiseParams n2) {
  const DepolCoeffs d1 = depol_coeffs(n1.p, n1.mu, Slot::First);
  const AdCoeffs a2 = ad_coeffs(n2.p, n2.mu);
  const auto c = composite::d_ad(d1, a2, t);
  const double k = d1.d3 * a2.chi10 * t.xi;
  const double kb = d1.d3 * a2.chi_b * t.xi;
  return t.c1 * t.c2 * (c.eta[0] * e.e00 + c.chi[0] * e.e11 + c.delta[0] * e.sum_off() + e.diff_diag() * k * t.c_aa) +
         t.s1 * t.s2 * (c.eta[1] * e.e00 + c.chi[1] * e.e11 + c.delta[3] * e.sum_off() - e.diff_diag() * k * t.c_bb) +
         t.s1 * t.c2 * (c.delta[1] * e.e01 + c.delta[2] * e.e10 + c.eta[2] * e.e00 + c.chi[2] * e.e11 + e.diff_off() * kb * t.c_21) +
         t.c1 * t.s2 * (c.delta[2] * e.e01 + c.delta[1] * e.e10 + c.eta[2] * e.e00 + c.chi[2] * e.e11 - e.diff_off() * kb * t.c_12) -
         0.25 * d1.d3 * (c.eta[3] * e.e00 + c.chi[3] * e.e11) * t.sin_g * t.s_minus -
         0.25 * d1.eta1dp * a2.chi10 * e.diff_diag() * t.sin_d * t.s_plus -
         0.25 * d1.d3 * (a2.chi01 - a2.chi_b) * e.sum_off() * t.sin_g * t.s_minus -
         0.25 * d1.eta1dp * a2.chi_b * e.diff_off() * t.sin_d * t.s_alt;
}

double pay_d_ph(const Pay& e, const AngleTerms& t, NoiseParams n1, NoiseParams n2) {
  const DepolCoeffs d1 = depol_coeffs(n1.p, n1.mu, Slot::First);
  const double m2 = dephasing_coeff(n2.p, n2.mu).mu_p;
  const auto c = composite::d_ph(d1, t);
  const double k = d1.d3 * m2 * t.xi;
  const double q = 0.25 * d1.eta1dp * m2;
  return t.c1 * t.c2 * (c.eta * e.e00 + c.chi * e.e11 + d1.d4 * e.sum_off() + e.diff_diag() * k * t.c_aa) +
         t.s1 * t.s2 * (c.chi * e.e00 + c.eta * e.e11 + d1.d4 * e.sum_off() - e.diff_diag() * k * t.c_bb) +
         t.s1 * t.c2 * (c.chi * e.e01 + c.eta * e.e10 + d1.d4 * e.sum_diag() + e.diff_off() * k * t.c_21) +
         t.c1 * t.s2 * (c.chi * e.e10 + c.eta * e.e01 + d1.d4 * e.sum_diag() - e.diff_off() * k * t.c_12) -
         0.25 * d1.d3 * e.sum_diag() * t.sin_g * t.s_minus - q * e.diff_diag() * t.sin_d * t.s_plus +
         0.25 * d1.d3 * e.sum_off() * t.sin_g * t.s_minus - q * e.diff_off() * t.sin_d * t.s_alt;
}

double pay_ph_d(const Pay& e, const AngleTerms& t, NoiseParams n1, NoiseParams n2) {
  const double m1 = dephasing_coeff(n1.p, n1.mu).mu_p;
  const DepolCoeffs d2 = depol_coeffs(n2.p, n2.mu, Slot::Second);
  const auto c = composite::ph_d(d2, t);
  const double mp = n2.mu * n2.p;
  const double k = (d2.d4 - 2.0 / 3 * mp) * m1 * t.xi;
  const double l = 0.25 * m1 * d2.d1 - 0.5 * m1 * d2.d2 + 0.25 * m1 * d2.d3;
  const double q = 0.25 * d2.d4 - mp / 6;
  return t.c1 * t.c2 * (c.eta * e.e00 + c.chi * e.e11 + d2.d2 * e.sum_off() + e.diff_diag() * k * t.c_aa) +
         t.s1 * t.s2 * (c.chi * e.e00 + c.eta * e.e11 + d2.d2 * e.sum_off() - e.diff_diag() * k * t.c_bb) +
         t.s1 * t.c2 * (c.chi * e.e01 + c.eta * e.e10 + d2.d2 * e.sum_diag() + e.diff_off() * k * t.c_21) +
         t.c1 * t.s2 * (c.chi * e.e10 + c.eta * e.e01 + d2.d2 * e.sum_diag() - e.diff_off() * k * t.c_12) -
         l * e.sum_diag() * t.sin_g * t.s_minus + q * e.diff_diag() * t.sin_d * t.s_plus +
         l * e.sum_off() * t.sin_g * t.s_minus + q * e.diff_off() * t.sin_d * t.s_alt;
}

}  // namespace

double closed_payoff(PairingId pairing, const Entries& entries, const EntanglementParams& ent,
                     const StrategyParams& s1, const StrategyParams& s2, NoiseParams ch1,
                     NoiseParams ch2) {
  check_noise(ch1.p, ch1.mu);
  check_noise(ch2.p, ch2.mu);
  const AngleTerms t = angle_terms(ent, s1, s2);
  const Pay e(entries);
  switch (pairing) {
    case PairingId::AdAd: return pay_ad_ad(e, t, ch1, ch2);
    case PairingId::DD: return pay_d_d(e, t, ch1, ch2);
    case PairingId::PhPh: return pay_ph_ph(e, t, ch1, ch2);
    case PairingId::PhAd: return pay_ph_ad(e, t, ch1, ch2);
    case PairingId::AdPh: return pay_ad_ph(e, t, ch1, ch2);
    case PairingId::AdD: return pay_ad_d(e, t, ch1, ch2);
    case PairingId::DAd: return pay_d_ad(e, t, ch1, ch2);
    case PairingId::DPh: return pay_d_ph(e, t, ch1, ch2);
    case PairingId::PhD: return pay_ph_d(e, t, ch1, ch2);
  }
  throw LookupError("unknown pairing");
}

std::pair<double, double> closed_payoff_pair(PairingId pairing, const Bimatrix& game,
                                             const EntanglementParams& ent,
                                             const StrategyParams& s1, const StrategyParams& s2,
                                             NoiseParams ch1, NoiseParams ch2) {
  return {closed_payoff(pairing, game.a, ent, s1, s2, ch1, ch2),
          closed_payoff(pairing, game.b, ent, s1, s2, ch1, ch2)};
}

}  // namespace qgame
