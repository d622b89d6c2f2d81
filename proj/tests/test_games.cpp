#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qgame/errors.hpp"
#include "qgame/games.hpp"
#include "support.hpp"

using namespace qgame;

namespace {

// Exhaustive 2x2 deviation check, written independently of the library.
std::set<std::pair<int, int>> brute_nash(const Bimatrix& g) {
  std::set<std::pair<int, int>> out;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) {
      const double a = g.a[2 * r + c], b = g.b[2 * r + c];
      if (g.a[2 * (1 - r) + c] > a) continue;
      if (g.b[2 * r + (1 - c)] > b) continue;
      out.insert({r, c});
    }
  return out;
}

}  // namespace

TEST_CASE("builtin games") {
  const auto pd = builtin_game("pd");
  CHECK(pd.cell(1, 1) == std::pair{1.0, 1.0});
  CHECK(pd.cell(0, 0) == std::pair{3.0, 3.0});
  CHECK(pd.cell(1, 0) == std::pair{5.0, 0.0});
  CHECK(builtin_game("bos").cell(0, 0) == std::pair{2.0, 1.0});
  CHECK(builtin_game("bos").cell(1, 1) == std::pair{1.0, 2.0});
  CHECK(builtin_game("chicken").cell(0, 1) == std::pair{1.0, 4.0});
  CHECK_THROWS_AS(builtin_game("stag"), LookupError);
}

TEST_CASE("pure Nash equilibria") {
  CHECK(classical_pure_nash(builtin_game("pd")) == std::set<std::pair<int, int>>{{1, 1}});
  CHECK(classical_pure_nash(builtin_game("bos")) == std::set<std::pair<int, int>>{{0, 0}, {1, 1}});
  CHECK(classical_pure_nash(builtin_game("chicken")) ==
        std::set<std::pair<int, int>>{{0, 1}, {1, 0}});

  testing::Rng rng(301);
  for (int n = 0; n < 200; ++n) {
    Bimatrix g{"random", rng.entries(), rng.entries()};
    // integer payoffs make ties common
    for (auto& v : g.a) v = static_cast<int>(v);
    for (auto& v : g.b) v = static_cast<int>(v);
    CHECK(classical_pure_nash(g) == brute_nash(g));
  }
}

TEST_CASE("classical expected payoffs") {
  const auto pd = builtin_game("pd");
  CHECK(classical_expected(pd, 0, 0) == std::pair{1.0, 1.0});
  CHECK(classical_expected(pd, 1, 1) == std::pair{3.0, 3.0});
  const auto bos = classical_expected(builtin_game("bos"), 0.5, 0.5);
  CHECK(bos.first == doctest::Approx(0.75));
  CHECK(bos.second == doctest::Approx(0.75));

  for (const char* name : {"pd", "bos", "chicken"}) {
    const auto g = builtin_game(name);
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c) CHECK(classical_expected(g, 1 - r, 1 - c) == g.cell(r, c));
  }
  CHECK_THROWS_AS(classical_expected(pd, 1.5, 0), RangeError);
  CHECK_THROWS_AS(classical_expected(pd, 0, -0.5), RangeError);
}

TEST_CASE("transpose swaps roles") {
  const auto g = builtin_game("chicken");
  const auto t = transpose(g);
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) {
      CHECK(t.cell(r, c).first == g.cell(c, r).second);
      CHECK(t.cell(r, c).second == g.cell(c, r).first);
    }
  // the symmetric games are their own transpose
  CHECK(transpose(builtin_game("pd")).a == builtin_game("pd").a);
}
