#pragma once

#include <set>
#include <string>
#include <string_view>
#include <utility>

#include "qgame/protocol.hpp"

namespace qgame {

// Index 0 is the first move (C for pd/chicken, O for bos), which a player
// reaches with theta = 0; theta = pi gives index 1.
struct Bimatrix {
  std::string name;
  Entries a{};  // Alice
  Entries b{};  // Bob

  // payoffs of cell (row, col) as (alice, bob)
  std::pair<double, double> cell(int row, int col) const;
};

// pd, bos or chicken; anything else throws LookupError.
Bimatrix builtin_game(std::string_view name);

// Exchanges the roles of the players: new a_ij = old b_ji.
Bimatrix transpose(const Bimatrix& g);

std::set<std::pair<int, int>> classical_pure_nash(const Bimatrix& g);

// Expected payoffs when Alice plays row 0 with probability x and Bob plays
// column 0 with probability y.
std::pair<double, double> classical_expected(const Bimatrix& g, double x, double y);

}  // namespace qgame
