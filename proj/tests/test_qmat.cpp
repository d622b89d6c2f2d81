#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <limits>

#include "qgame/channels.hpp"
#include "qgame/errors.hpp"
#include "qgame/protocol.hpp"
#include "qgame/qmat.hpp"
#include "support.hpp"

using namespace qgame;

namespace {

const cplx I{0.0, 1.0};

ComplexMatrix random_matrix(testing::Rng& rng, std::size_t dim) {
  ComplexMatrix m(dim);
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < dim; ++c) m(r, c) = {rng.in(-1, 1), rng.in(-1, 1)};
  return m;
}

}  // namespace

TEST_CASE("construction rejects bad entries") {
  CHECK_THROWS_AS(ComplexMatrix(2, {1, 2, 3}), std::invalid_argument);
  const double nan = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(ComplexMatrix(2, {1, 0, 0, nan}), NumericalError);
  const double inf = std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS(ComplexMatrix(2, {1, 0, cplx{0, inf}, 1}), NumericalError);
  CHECK_NOTHROW(ComplexMatrix(2, {1, 0, 0, 1}));
}

TEST_CASE("tensor products") {
  const auto i2 = ComplexMatrix::identity(2);
  CHECK(max_abs_diff(tensor(i2, i2), ComplexMatrix::identity(4)) == 0.0);

  const auto zz = tensor(pauli(3), pauli(3));
  CHECK(max_abs_diff(zz, ComplexMatrix::diagonal({1, -1, -1, 1})) == 0.0);

  const StateVector ket00{1, 0, 0, 0};
  const StateVector got = tensor(pauli(1), i2) * ket00;
  CHECK(got == StateVector{0, 0, 1, 0});

  // index layout (i*db + k, j*db + l)
  testing::Rng rng(3);
  const auto a = random_matrix(rng, 2), b = random_matrix(rng, 2);
  const auto t = tensor(a, b);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) CHECK(t(i * 2 + k, j * 2 + l) == a(i, j) * b(k, l));
}

TEST_CASE("dagger") {
  const auto d = dagger(ComplexMatrix::diagonal({I, -I}));
  CHECK(max_abs_diff(d, ComplexMatrix::diagonal({-I, I})) == 0.0);

  testing::Rng rng(11);
  for (int n = 0; n < 20; ++n) {
    const auto m = random_matrix(rng, 4);
    CHECK(max_abs_diff(dagger(dagger(m)), m) == 0.0);
  }
  const auto u = strategy_unitary({1.1, 0.3, -2.0});
  CHECK(max_abs_diff(dagger(u) * u, ComplexMatrix::identity(2)) < 1e-14);
}

TEST_CASE("trace and products") {
  CHECK(mat_trace(ComplexMatrix::identity(4)) == cplx{4, 0});
  CHECK(mat_trace(tensor(pauli(3), pauli(3))) == cplx{0, 0});

  testing::Rng rng(5);
  const auto a = random_matrix(rng, 4), b = random_matrix(rng, 4);
  CHECK(std::abs(mat_trace(a * b) - mat_trace(b * a)) < 1e-14);
  CHECK(max_abs_diff(a * ComplexMatrix::identity(4), a) == 0.0);
  CHECK(max_abs_diff((a + b) - b, a) < 1e-15);
  CHECK(max_abs_diff(cplx{2, 0} * a, a + a) == 0.0);
  CHECK_THROWS(a * ComplexMatrix::identity(2));
}

TEST_CASE("vectors") {
  const StateVector u{1, I, 0, 0};
  CHECK(vector_norm(u) == doctest::Approx(std::sqrt(2.0)));
  CHECK(inner(u, u) == cplx{2, 0});
  // <u|v> conjugates the bra
  CHECK(inner(StateVector{I}, StateVector{1}) == cplx{0, -1});
  const auto o = ComplexMatrix::outer(StateVector{1, 0}, StateVector{0, 1});
  CHECK(o(0, 1) == cplx{1, 0});
  CHECK(o(1, 0) == cplx{0, 0});
}

TEST_CASE("hermitian eigenvalues") {
  auto ev = hermitian_eigenvalues(ComplexMatrix::diagonal({3, -1, 2, 0}));
  REQUIRE(ev.size() == 4);
  CHECK(ev[0] == doctest::Approx(-1));
  CHECK(ev[3] == doctest::Approx(3));

  // sigma_y has eigenvalues -1, 1
  ev = hermitian_eigenvalues(pauli(2));
  CHECK(ev[0] == doctest::Approx(-1).epsilon(1e-12));
  CHECK(ev[1] == doctest::Approx(1).epsilon(1e-12));

  // H = A + A^dagger: eigenvalue sum equals the trace, and square sum the
  // Frobenius norm
  testing::Rng rng(8);
  for (int n = 0; n < 25; ++n) {
    const auto a = random_matrix(rng, 4);
    const auto h = a + dagger(a);
    ev = hermitian_eigenvalues(h);
    double sum = 0, sq = 0, frob = 0;
    for (double e : ev) sum += e, sq += e * e;
    for (const auto& x : h.entries()) frob += std::norm(x);
    CHECK(sum == doctest::Approx(mat_trace(h).real()).epsilon(1e-12));
    CHECK(sq == doctest::Approx(frob).epsilon(1e-10));
  }
}

TEST_CASE("density checks") {
  CHECK(is_density(density(initial_state(0.7))));
  CHECK(is_density(ComplexMatrix::diagonal({0.25, 0.25, 0.25, 0.25})));
  CHECK_FALSE(is_density(ComplexMatrix::diagonal({0.5, 0.5, 0.5, -0.5})));  // negative
  CHECK_FALSE(is_density(ComplexMatrix::diagonal({0.5, 0.2, 0.2, 0.2})));   // trace
  ComplexMatrix nonherm = ComplexMatrix::diagonal({0.5, 0.5, 0, 0});
  nonherm(0, 1) = 0.1;
  CHECK_FALSE(is_hermitian(nonherm, 1e-12));
  CHECK_FALSE(is_density(nonherm));
}
