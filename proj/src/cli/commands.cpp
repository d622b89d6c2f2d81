#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "qgame/cli.hpp"
#include "qgame/equilibrium.hpp"
#include "qgame/errors.hpp"
#include "qgame/oracle.hpp"

namespace qgame::cli {

namespace {

struct PayoffArgs {
  std::string game, pairing, engine = "closed";
  std::string gamma = "0", delta = "0";
  std::string p1 = "0", mu1 = "0", p2 = "0", mu2 = "0";
  std::string theta1 = "0", alpha1 = "0", beta1 = "0";
  std::string theta2 = "0", alpha2 = "0", beta2 = "0";
};

struct VerifyArgs {
  std::string pairing;
  int samples = 200;
  std::uint64_t seed = 42;
  double tol = 1e-9;
  bool mu_zero = false;
};

struct SweepArgs {
  std::string config;
  std::string out;
};

struct FigureArgs {
  int id = 0;
  std::string out;
};

struct NashArgs {
  std::string case_id;
  std::string grid = "13x17x17";
  int samples = 5;
  std::string csv;
};

PairingId require_pairing(const std::string& name) {
  const auto id = parse_pairing(name);
  if (!id) throw ConfigError("unknown pairing '" + name + "'");
  return *id;
}

Bimatrix require_game(const std::string& name) {
  try {
    return builtin_game(name);
  } catch (const LookupError& e) {
    throw ConfigError(e.what());
  }
}

// Opens `path` for writing, or hands back `fallback` when path is empty.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : os_(&fallback) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
      if (!*file_) throw ConfigError("cannot open '" + path + "' for writing");
      os_ = file_.get();
    }
  }
  std::ostream& stream() { return *os_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* os_;
};

int cmd_payoff(const PayoffArgs& a, std::ostream& out) {
  const PairingId pairing = require_pairing(a.pairing);
  const Bimatrix game = require_game(a.game);
  const EntanglementParams ent{parse_angle(a.gamma), parse_angle(a.delta)};
  const StrategyParams s1{parse_angle(a.theta1), parse_angle(a.alpha1), parse_angle(a.beta1)};
  const StrategyParams s2{parse_angle(a.theta2), parse_angle(a.alpha2), parse_angle(a.beta2)};
  const NoiseParams n1{parse_angle(a.p1), parse_angle(a.mu1)};
  const NoiseParams n2{parse_angle(a.p2), parse_angle(a.mu2)};

  std::pair<double, double> pay;
  if (a.engine == "closed") {
    pay = closed_payoff_pair(pairing, game, ent, s1, s2, n1, n2);
  } else if (a.engine == "oracle") {
    const auto [k1, k2] = pairing_kinds(pairing);
    pay = oracle_payoffs({game, {k1, n1.p, n1.mu}, {k2, n2.p, n2.mu}, ent, s1, s2});
  } else {
    throw ConfigError("unknown engine '" + a.engine + "' (expected closed or oracle)");
  }
  out << "payoff_a=" << format_number(pay.first) << " payoff_b=" << format_number(pay.second)
      << '\n';
  return kExitOk;
}

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  const PairingId pairing = require_pairing(a.pairing);
  if (a.samples < 1) throw ConfigError("--samples must be positive");
  if (!(a.tol >= 0)) throw ConfigError("--tol must be nonnegative");
  const VerifyReport rep = verify_pairing(pairing, a.samples, a.seed, a.mu_zero);
  const bool ok = rep.max_abs_diff <= a.tol;
  out << "pairing=" << pairing_name(pairing) << " samples=" << rep.samples << " seed=" << a.seed
      << (a.mu_zero ? " mu=0" : "") << " max_abs_diff=" << format_number(rep.max_abs_diff)
      << " tol=" << format_number(a.tol) << (ok ? " PASS" : " FAIL") << '\n';
  return ok ? kExitOk : kExitFailed;
}

int cmd_sweep(const SweepArgs& a, std::ostream& out) {
  std::ifstream in(a.config);
  if (!in) throw ConfigError("cannot read config '" + a.config + "'");
  SweepConfig cfg = parse_sweep_config(in);
  if (!a.out.empty()) cfg.output = a.out;
  Sink sink(cfg.output, out);
  write_csv_header(sink.stream());
  write_sweep_rows(cfg, sink.stream());
  return kExitOk;
}

int cmd_figure(const FigureArgs& a, std::ostream& out) {
  const auto groups = figure_configs(a.id);
  Sink sink(a.out, out);
  write_csv_header(sink.stream());
  for (const auto& g : groups) write_sweep_rows(g, sink.stream());
  return kExitOk;
}

StrategySpace parse_grid(const std::string& text) {
  StrategySpace s;
  char x1 = 0, x2 = 0;
  std::istringstream in(text);
  if (!(in >> s.theta_points >> x1 >> s.alpha_points >> x2 >> s.beta_points) || x1 != 'x' ||
      x2 != 'x' || in.peek() != std::char_traits<char>::eof()) {
    throw ConfigError("--grid must look like 13x17x17");
  }
  s.validate();
  return s;
}

std::vector<double> unit_grid(int n) {
  std::vector<double> v(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) v[static_cast<std::size_t>(k)] = k == n - 1 ? 1.0 : double(k) / (n - 1);
  return v;
}

int cmd_nash(const NashArgs& a, std::ostream& out) {
  CaseOptions opt;
  opt.bob_space = parse_grid(a.grid);
  opt.alice_space = StrategySpace::classical(opt.bob_space.theta_points);
  if (a.samples < 2) throw ConfigError("--samples must be at least 2");
  opt.p_values = unit_grid(a.samples);
  opt.mu_values = unit_grid(a.samples);

  CaseReport rep;
  try {
    rep = case_study(a.case_id, opt);
  } catch (const LookupError& e) {
    throw ConfigError(e.what());
  }
  const CaseSetup& s = rep.setup;
  auto yes = [](bool b) { return b ? "yes" : "no"; };
  out << "case " << s.id << ": " << s.description << '\n';
  out << "  gamma=" << format_number(s.ent.gamma) << " delta=" << format_number(s.ent.delta)
      << " alice theta=" << format_number(s.alice.theta) << " bob (theta, alpha, beta)=("
      << format_number(s.bob.theta) << ", " << format_number(s.bob.alpha) << ", "
      << format_number(s.bob.beta) << ")\n";
  out << "  grid " << a.grid << ", p and mu on " << a.samples << " points each\n";
  out << "  max variation over bob's (alpha, beta) grid: " << format_number(rep.phase_variation)
      << '\n';
  out << "  bob ahead of alice for every p > 0: " << yes(rep.advantage_positive) << '\n';
  out << "  payoffs nondecreasing in mu: " << yes(rep.monotone_in_mu) << '\n';
  out << "  bob's profile in his best-response set everywhere: " << yes(rep.bob_profile_always_best)
      << '\n';
  int failures = 0;
  for (const auto& r : rep.rows) failures += r.is_epsilon_nash ? 0 : 1;
  out << "  grid epsilon-Nash (eps=" << format_number(kNashEpsilon) << "): "
      << rep.rows.size() - static_cast<std::size_t>(failures) << "/" << rep.rows.size()
      << " points\n";

  Sink sink(a.csv, out);
  std::ostream& csv = sink.stream();
  if (a.csv.empty()) csv << '\n';
  csv << "game,pairing,p,mu,payoff_a,payoff_b,gain_a,gain_b,epsilon_nash,bob_best_response\n";
  for (const auto& r : rep.rows) {
    csv << r.game << ',' << pairing_name(r.pairing) << ',' << format_number(r.p) << ','
        << format_number(r.mu) << ',' << format_number(r.payoff_a) << ','
        << format_number(r.payoff_b) << ',' << format_number(r.gain_a) << ','
        << format_number(r.gain_b) << ',' << (r.is_epsilon_nash ? 1 : 0) << ','
        << (r.bob_profile_is_best_response ? 1 : 0) << '\n';
  }
  return rep.all_epsilon_nash ? kExitOk : kExitFailed;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Two-player quantum games through correlated noisy channels", "qgame"};
  app.require_subcommand(1);

  PayoffArgs pa;
  auto* payoff = app.add_subcommand("payoff", "payoff pair at one parameter point");
  payoff->add_option("--game", pa.game, "pd, bos or chicken")->required();
  payoff->add_option("--pairing", pa.pairing, "ad-ad, d-d, ph-ph, ph-ad, ad-ph, ad-d, d-ad, d-ph, ph-d")
      ->required();
  payoff->add_option("--engine", pa.engine, "closed (default) or oracle");
  for (auto [flag, dest] : {std::pair{"--gamma", &pa.gamma}, {"--delta", &pa.delta},
                            {"--p1", &pa.p1}, {"--mu1", &pa.mu1}, {"--p2", &pa.p2},
                            {"--mu2", &pa.mu2}, {"--theta1", &pa.theta1}, {"--alpha1", &pa.alpha1},
                            {"--beta1", &pa.beta1}, {"--theta2", &pa.theta2},
                            {"--alpha2", &pa.alpha2}, {"--beta2", &pa.beta2}}) {
    payoff->add_option(flag, *dest, "default 0");
  }

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "closed form against the density-matrix oracle");
  verify->add_option("--pairing", va.pairing)->required();
  verify->add_option("--samples", va.samples, "number of random tuples (200)");
  verify->add_option("--seed", va.seed, "64-bit seed for mt19937_64 (42)");
  verify->add_option("--tol", va.tol, "pass threshold on max |difference| (1e-9)");
  verify->add_flag("--mu-zero", va.mu_zero, "draw memoryless channels only");

  SweepArgs sa;
  auto* sweep = app.add_subcommand("sweep", "CSV over the axes of a config file");
  sweep->add_option("config", sa.config, "key = value config file")->required();
  sweep->add_option("--out", sa.out, "output CSV (default: config 'output' key, else stdout)");

  FigureArgs fa;
  auto* figure = app.add_subcommand("figure", "CSV data behind one of the payoff-vs-memory figures");
  figure->add_option("--id", fa.id, "2..7")->required();
  figure->add_option("--out", fa.out, "output CSV (default stdout)");

  NashArgs na;
  auto* nash = app.add_subcommand("nash", "grid epsilon-Nash check for a case study");
  nash->add_option("--case", na.case_id, "i, ii-a, ii-b, ii-c, ii-d, iii-a, iii-b, iii-c, iv")
      ->required();
  nash->add_option("--grid", na.grid, "theta x alpha x beta points for Bob (13x17x17)");
  nash->add_option("--samples", na.samples, "points per axis of the (p, mu) grid (5)");
  nash->add_option("--csv", na.csv, "write the gains CSV here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (payoff->parsed()) return cmd_payoff(pa, out);
    if (verify->parsed()) return cmd_verify(va, out);
    if (sweep->parsed()) return cmd_sweep(sa, out);
    if (figure->parsed()) return cmd_figure(fa, out);
    if (nash->parsed()) return cmd_nash(na, out);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const RangeError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UnsupportedError& e) {
    err << "unsupported: " << e.what() << '\n';
    return kExitUnsupported;
  } catch (const NumericalError& e) {
    err << "numerical check failed: " << e.what() << '\n';
    return kExitFailed;
  }
  return kExitUsage;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  argv.push_back("qgame");
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace qgame::cli
