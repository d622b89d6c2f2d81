#include "qgame/games.hpp"

#include "qgame/errors.hpp"

namespace qgame {

std::pair<double, double> Bimatrix::cell(int row, int col) const {
  const auto k = static_cast<std::size_t>(2 * row + col);
  return {a.at(k), b.at(k)};
}

Bimatrix builtin_game(std::string_view name) {
  if (name == "pd") return {"pd", {3, 0, 5, 1}, {3, 5, 0, 1}};
  if (name == "bos") return {"bos", {2, 0, 0, 1}, {1, 0, 0, 2}};
  if (name == "chicken") return {"chicken", {3, 1, 4, 0}, {3, 4, 1, 0}};
  throw LookupError("unknown game '" + std::string(name) + "' (expected pd, bos or chicken)");
}

Bimatrix transpose(const Bimatrix& g) {
  return {g.name, {g.b[0], g.b[2], g.b[1], g.b[3]}, {g.a[0], g.a[2], g.a[1], g.a[3]}};
}

std::set<std::pair<int, int>> classical_pure_nash(const Bimatrix& g) {
  std::set<std::pair<int, int>> out;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) {
      const auto [pa, pb] = g.cell(r, c);
      const bool alice_stays = pa >= g.cell(1 - r, c).first;
      const bool bob_stays = pb >= g.cell(r, 1 - c).second;
      if (alice_stays && bob_stays) out.insert({r, c});
    }
  return out;
}

std::pair<double, double> classical_expected(const Bimatrix& g, double x, double y) {
  require_range("x", x, 0.0, 1.0);
  require_range("y", y, 0.0, 1.0);
  const double w[4] = {x * y, x * (1 - y), (1 - x) * y, (1 - x) * (1 - y)};
  double ea = 0.0, eb = 0.0;
  for (std::size_t k = 0; k < 4; ++k) {
    ea += w[k] * g.a[k];
    eb += w[k] * g.b[k];
  }
  return {ea, eb};
}

}  // namespace qgame
