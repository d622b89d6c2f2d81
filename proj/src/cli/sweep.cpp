#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <istream>
#include <map>
#include <numbers>
#include <ostream>
#include <sstream>

#include "qgame/cli.hpp"
#include "qgame/errors.hpp"

namespace qgame::cli {

using std::numbers::pi;

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos == std::string_view::npos ? pos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

const std::array<std::string_view, 9> kAxisOrder = {"p",  "p1",     "mu",     "mu1",  "p2",
                                                     "mu2", "theta2", "alpha2", "beta2"};

int axis_rank(std::string_view name) {
  for (std::size_t i = 0; i < kAxisOrder.size(); ++i)
    if (kAxisOrder[i] == name) return static_cast<int>(i);
  return -1;
}

void assign(SweepPoint& pt, std::string_view name, double v) {
  if (name == "p") pt.p1 = pt.p2 = v;
  else if (name == "mu") pt.mu1 = pt.mu2 = v;
  else if (name == "p1") pt.p1 = v;
  else if (name == "mu1") pt.mu1 = v;
  else if (name == "p2") pt.p2 = v;
  else if (name == "mu2") pt.mu2 = v;
  else if (name == "gamma") pt.ent.gamma = v;
  else if (name == "delta") pt.ent.delta = v;
  else if (name == "theta1") pt.s1.theta = v;
  else if (name == "alpha1") pt.s1.alpha = v;
  else if (name == "beta1") pt.s1.beta = v;
  else if (name == "theta2") pt.s2.theta = v;
  else if (name == "alpha2") pt.s2.alpha = v;
  else if (name == "beta2") pt.s2.beta = v;
  else throw ConfigError("unknown parameter '" + std::string(name) + "'");
}

Entries parse_entries(std::string_view text) {
  const auto parts = split(text, ',');
  if (parts.size() != 4) throw ConfigError("payoff entries need four comma-separated values");
  Entries e{};
  for (std::size_t i = 0; i < 4; ++i) {
    try {
      std::size_t used = 0;
      e[i] = std::stod(parts[i], &used);
      if (used != parts[i].size()) throw std::invalid_argument("trailing text");
    } catch (const std::exception&) {
      throw ConfigError("bad payoff entry '" + parts[i] + "'");
    }
  }
  return e;
}

void validate_point(const SweepPoint& pt) {
  require_range("p1", pt.p1, 0.0, 1.0);
  require_range("mu1", pt.mu1, 0.0, 1.0);
  require_range("p2", pt.p2, 0.0, 1.0);
  require_range("mu2", pt.mu2, 0.0, 1.0);
  pt.ent.validate();
  pt.s1.validate();
  pt.s2.validate();
}

}  // namespace

double parse_angle(std::string_view text) {
  const std::string t = trim(text);
  if (t == "pi") return pi;
  if (t == "-pi") return -pi;
  if (t == "pi/2") return pi / 2;
  if (t == "-pi/2") return -pi / 2;
  try {
    std::size_t used = 0;
    const double v = std::stod(t, &used);
    if (used != t.size() || !std::isfinite(v)) throw std::invalid_argument("trailing text");
    return v;
  } catch (const std::exception&) {
    throw ConfigError("cannot parse number '" + t + "'");
  }
}

std::string format_number(double v) {
  if (v == 0.0) v = 0.0;  // drop the sign of -0
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

double Axis::at(int k) const {
  if (k == steps - 1) return stop;
  return start + (stop - start) * (static_cast<double>(k) / (steps - 1));
}

void SweepConfig::validate() const {
  if (axes.empty()) throw ConfigError("sweep needs at least one axis");
  validate_point(fixed);
  for (const auto& ax : axes) {
    if (axis_rank(ax.name) < 0) throw ConfigError("cannot sweep '" + ax.name + "'");
    if (ax.steps < 2) throw ConfigError("axis " + ax.name + " needs at least 2 steps");
    SweepPoint lo = fixed, hi = fixed;
    assign(lo, ax.name, ax.start);
    assign(hi, ax.name, ax.stop);
    validate_point(lo);
    validate_point(hi);
  }
  auto has = [&](std::string_view n) {
    return std::any_of(axes.begin(), axes.end(), [&](const Axis& a) { return a.name == n; });
  };
  if (has("p") && (has("p1") || has("p2"))) throw ConfigError("sweep.p conflicts with sweep.p1/p2");
  if (has("mu") && (has("mu1") || has("mu2"))) {
    throw ConfigError("sweep.mu conflicts with sweep.mu1/mu2");
  }
}

std::vector<SweepPoint> SweepConfig::points() const {
  validate();
  std::vector<SweepPoint> out;
  std::vector<int> idx(axes.size(), 0);
  while (true) {
    SweepPoint pt = fixed;
    for (std::size_t i = 0; i < axes.size(); ++i) assign(pt, axes[i].name, axes[i].at(idx[i]));
    out.push_back(pt);
    int d = static_cast<int>(axes.size()) - 1;
    while (d >= 0 && ++idx[d] == axes[d].steps) idx[d--] = 0;
    if (d < 0) break;
  }
  return out;
}

SweepConfig parse_sweep_config(std::istream& in) {
  SweepConfig cfg;
  std::map<std::string, std::string> kv;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const std::string t = trim(line);
    if (t.empty()) continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("line " + std::to_string(lineno) + ": expected key = value");
    }
    const std::string key = trim(std::string_view(t).substr(0, eq));
    const std::string value = trim(std::string_view(t).substr(eq + 1));
    if (key.empty() || value.empty()) {
      throw ConfigError("line " + std::to_string(lineno) + ": empty key or value");
    }
    if (!kv.emplace(key, value).second) {
      throw ConfigError("line " + std::to_string(lineno) + ": duplicate key '" + key + "'");
    }
  }

  auto take = [&](const std::string& key) -> std::optional<std::string> {
    auto it = kv.find(key);
    if (it == kv.end()) return std::nullopt;
    std::string v = it->second;
    kv.erase(it);
    return v;
  };

  const auto game = take("game");
  if (!game) throw ConfigError("missing key 'game'");
  const auto ga = take("game.a");
  const auto gb = take("game.b");
  if (*game == "custom") {
    if (!ga || !gb) throw ConfigError("custom game needs game.a and game.b");
    cfg.game = Bimatrix{"custom", parse_entries(*ga), parse_entries(*gb)};
  } else {
    if (ga || gb) throw ConfigError("game.a/game.b are only valid with game = custom");
    try {
      cfg.game = builtin_game(*game);
    } catch (const LookupError& e) {
      throw ConfigError(e.what());
    }
  }

  const auto pairing = take("pairing");
  if (!pairing) throw ConfigError("missing key 'pairing'");
  const auto id = parse_pairing(*pairing);
  if (!id) throw ConfigError("unknown pairing '" + *pairing + "'");
  cfg.pairing = *id;

  if (auto out = take("output")) cfg.output = *out;

  for (const char* name : {"p", "mu", "p1", "mu1", "p2", "mu2", "gamma", "delta", "theta1",
                           "alpha1", "beta1", "theta2", "alpha2", "beta2"}) {
    if (auto v = take(name)) assign(cfg.fixed, name, parse_angle(*v));
  }

  std::vector<std::pair<std::string, std::string>> sweeps;
  for (auto it = kv.begin(); it != kv.end();) {
    if (it->first.rfind("sweep.", 0) == 0) {
      sweeps.emplace_back(it->first.substr(6), it->second);
      it = kv.erase(it);
    } else {
      ++it;
    }
  }
  if (!kv.empty()) throw ConfigError("unknown key '" + kv.begin()->first + "'");

  for (const auto& [name, spec] : sweeps) {
    if (axis_rank(name) < 0) throw ConfigError("cannot sweep '" + name + "'");
    const auto parts = split(spec, ':');
    if (parts.size() != 3) throw ConfigError("axis '" + name + "' must be start:stop:steps");
    Axis ax;
    ax.name = name;
    ax.start = parse_angle(parts[0]);
    ax.stop = parse_angle(parts[1]);
    try {
      std::size_t used = 0;
      ax.steps = std::stoi(parts[2], &used);
      if (used != parts[2].size()) throw std::invalid_argument("trailing text");
    } catch (const std::exception&) {
      throw ConfigError("axis '" + name + "': bad step count '" + parts[2] + "'");
    }
    cfg.axes.push_back(ax);
  }
  std::sort(cfg.axes.begin(), cfg.axes.end(),
            [](const Axis& a, const Axis& b) { return axis_rank(a.name) < axis_rank(b.name); });
  cfg.validate();
  return cfg;
}

SweepConfig parse_sweep_config_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_sweep_config(in);
}

void write_csv_header(std::ostream& out) { out << kCsvHeader << '\n'; }

void write_sweep_rows(const SweepConfig& cfg, std::ostream& out) {
  for (const SweepPoint& pt : cfg.points()) {
    const auto [pa, pb] = closed_payoff_pair(cfg.pairing, cfg.game, pt.ent, pt.s1, pt.s2,
                                             {pt.p1, pt.mu1}, {pt.p2, pt.mu2});
    const double cols[] = {pt.p1,        pt.mu1,       pt.p2,       pt.mu2,      pt.ent.gamma,
                           pt.ent.delta, pt.s1.theta,  pt.s1.alpha, pt.s1.beta,  pt.s2.theta,
                           pt.s2.alpha,  pt.s2.beta,   pa,          pb};
    out << cfg.game.name << ',' << pairing_name(cfg.pairing);
    for (double v : cols) out << ',' << format_number(v);
    out << '\n';
  }
}

std::vector<SweepConfig> figure_configs(int id) {
  auto make = [](const char* game, PairingId pairing, double p, EntanglementParams ent,
                 StrategyParams s1, StrategyParams s2) {
    SweepConfig c;
    c.game = builtin_game(game);
    c.pairing = pairing;
    c.fixed.p1 = c.fixed.p2 = p;
    c.fixed.ent = ent;
    c.fixed.s1 = s1;
    c.fixed.s2 = s2;
    c.axes = {Axis{"mu", 0.0, 1.0, 101}};
    return c;
  };
  const StrategyParams alice0 = StrategyParams::classical(0.0);
  const StrategyParams phase_bob{pi / 2, pi / 2, 0.0};
  const StrategyParams beta_bob{pi / 2, 0.0, pi / 2};
  const std::array<PairingId, 3> ending_in_ad = {PairingId::AdAd, PairingId::DAd, PairingId::PhAd};

  std::vector<SweepConfig> out;
  switch (id) {
    case 2:
      for (const char* g : {"pd", "bos", "chicken"})
        for (double p : {0.8, 0.2}) out.push_back(make(g, PairingId::AdAd, p, {0, 0}, alice0, phase_bob));
      break;
    case 3:
      for (const char* g : {"pd", "chicken"})
        for (double p : {0.8, 0.2})
          out.push_back(make(g, PairingId::AdAd, p, {pi / 2, 0}, StrategyParams::classical(pi / 2),
                             phase_bob));
      break;
    case 4:
      for (PairingId pr : ending_in_ad) out.push_back(make("bos", pr, 0.5, {pi / 2, 0}, alice0, phase_bob));
      break;
    case 5:
      for (PairingId pr : ending_in_ad) out.push_back(make("bos", pr, 0.5, {0, pi / 2}, alice0, beta_bob));
      break;
    case 6:
    case 7: {
      const PairingId pr = id == 6 ? PairingId::AdAd : PairingId::DD;
      for (const char* g : {"pd", "bos", "chicken"})
        out.push_back(make(g, pr, 0.5, {pi / 2, pi / 2}, alice0, phase_bob));
      break;
    }
    default:
      throw ConfigError("unknown figure id " + std::to_string(id) + " (expected 2..7)");
  }
  return out;
}

}  // namespace qgame::cli
