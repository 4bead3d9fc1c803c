#include <doctest.h>

#include <cmath>
#include <sstream>

#include "oracles.hpp"
#include "ytensor/exact.hpp"
#include "ytensor/partition.hpp"
#include "ytensor/profile.hpp"
#include "ytensor/rng.hpp"

using namespace ytensor;

TEST_CASE("partition validation and text form") {
  CHECK(Partition::parse("9,7,6,4,3,2").rows() == std::vector<int>{9, 7, 6, 4, 3, 2});
  CHECK(Partition::parse(" 3, 1 ").to_string() == "3,1");
  CHECK(Partition({2, 1, 0, 0}).height() == 2);
  CHECK(Partition::parse("").empty());
  CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Partition({2, -1}), std::invalid_argument);
  CHECK_THROWS_AS(Partition::parse("3,,1"), std::invalid_argument);
  CHECK_THROWS_AS(Partition::parse("3;1"), std::invalid_argument);
  const Partition lambda({4, 2, 1});
  CHECK(lambda.size() == 7);
  CHECK(lambda.conjugate().rows() == std::vector<int>{3, 2, 1, 1});
}

TEST_CASE("cells in row-major order") {
  CHECK(Partition({1}).cells() == std::vector<Cell>{{1, 1}});
  CHECK(Partition({2, 1}).cells() == std::vector<Cell>{{1, 1}, {1, 2}, {2, 1}});
  const auto row = Partition({3}).cells();
  CHECK(row.size() == 3);
  for (const auto& cell : row) CHECK(cell.i == 1);
}

TEST_CASE("hook lengths") {
  const Partition lambda({9, 7, 6, 4, 3, 2});
  CHECK(hook_length(lambda, {2, 3}) == 8);
  CHECK(hook_length(lambda, {2, 3}) == oracle::hook_by_walk(lambda, 2, 3));
  CHECK(hook_length(Partition({1}), {1, 1}) == 1);
  for (int j = 1; j <= 6; ++j) CHECK(hook_length(Partition({6}), {1, j}) == 6 - j + 1);
  CHECK_THROWS_AS(hook_length(lambda, {1, 10}), std::out_of_range);

  SUBCASE("hooks decrease along rows and up columns; match the walk") {
    for (const auto& mu : enumerate_diagrams(9, 9)) {
      for (const auto& cell : mu.cells()) {
        const int h = hook_length(mu, cell);
        CHECK(h == oracle::hook_by_walk(mu, cell.i, cell.j));
        if (mu.contains({cell.i, cell.j + 1})) CHECK(hook_length(mu, {cell.i, cell.j + 1}) <= h - 1);
        if (mu.contains({cell.i + 1, cell.j})) CHECK(hook_length(mu, {cell.i + 1, cell.j}) <= h - 1);
      }
    }
  }
}

TEST_CASE("shifted contents") {
  CHECK(shifted_content(Partition({4, 2}), 5, {1, 1}) == 5);
  CHECK(shifted_content(Partition({2, 1}), 2, {2, 1}) == 1);
  CHECK(shifted_content(Partition({3}), 2, {1, 3}) == 4);
  CHECK_THROWS_AS(shifted_content(Partition({3}), 2, {2, 1}), std::out_of_range);

  SUBCASE("shifted content of a row's last cell bounds the first hook") {
    for (int N = 1; N <= 5; ++N)
      for (const auto& mu : enumerate_diagrams(8, N))
        for (int i = 1; i <= mu.height(); ++i)
          CHECK(shifted_content(mu, N, {i, mu.row(i)}) >= hook_length(mu, {i, 1}));
  }
}

TEST_CASE("profile of a single cell") {
  const Profile L(Partition({1}));
  CHECK(L(0.0) == doctest::Approx(1.0));
  CHECK(L(0.25) == doctest::Approx(0.75));
  CHECK(L(-0.25) == doctest::Approx(0.75));
  CHECK(L(-0.5) == doctest::Approx(0.5));
  CHECK(L(0.7) == doctest::Approx(0.7));
  CHECK(evaluate(L, 1e6) == 1e6);
  CHECK(L.support_left() == doctest::Approx(-0.5));
  CHECK(L.support_right() == doctest::Approx(0.5));
  CHECK_THROWS_AS(Profile(Partition{}), std::invalid_argument);
}

TEST_CASE("profile of (2,1) against direct rotation of its cells") {
  // Cell (i, j) occupies [j-1, j] x [i-1, i]; after rotation X = (x - y)/sqrt2,
  // Y = (x + y)/sqrt2 and scaling by 1/sqrt(2n) its top corner is at
  // ((j - i), (i + j))/(2 sqrt n). The boundary height at X = 0 is the top
  // of cell (1,1) on the diagonal: 2/(2 sqrt 3) times the diagonal length 1.
  const Partition lambda({2, 1});
  const Profile L(lambda);
  const double u = 1 / (2 * std::sqrt(3.0));
  CHECK(L(0.0) == doctest::Approx(2 * u));
  for (const auto& cell : lambda.cells()) {
    const double X = (cell.j - cell.i) * u;
    CHECK(L(X) >= (cell.i + cell.j) * u - 1e-12);
  }
  CHECK(L(u) == doctest::Approx(3 * u));
  CHECK(L(-u) == doctest::Approx(3 * u));
}

TEST_CASE("profile invariants on many diagrams") {
  for (int n : {1, 2, 5, 9}) {
    for (const auto& lambda : enumerate_diagrams(n, n)) {
      const Profile L(lambda);
      CHECK(L.grid_area() == 2 * n);
      CHECK(L.to_partition() == lambda);
      CHECK(Profile::from_slopes(L.left_index(), L.slopes()).to_partition() == lambda);
      for (int k = L.left_index(); k <= L.right_index(); ++k) CHECK(L.grid_height(k) >= std::abs(k));
      for (const auto& cell : lambda.cells())
        CHECK(L.grid_height(cell.j - cell.i) >= cell.i + cell.j);
      // Row corners sit at lambda_i - i.
      for (int i = 1; i <= lambda.height(); ++i)
        CHECK(L.grid_height(lambda.row(i) - i) >= std::abs(lambda.row(i) - i));
    }
  }
}

TEST_CASE("profile equals |X| outside its support") {
  const Profile L(Partition({5, 3, 3, 1}));
  SplitMix64 rng(3, 0);
  for (int k = 0; k < 1000; ++k) {
    const double X = (static_cast<double>(rng() >> 11) * 0x1.0p-53 - 0.5) * 40;
    if (X <= L.support_left() || X >= L.support_right()) CHECK(L(X) == std::abs(X));
  }
}

TEST_CASE("a diagram with at most N rows has L = |X| left of -1/(2c)") {
  const int N = 4;
  for (const auto& lambda : enumerate_diagrams(10, N)) {
    const Profile L(lambda);
    const double c = std::sqrt(10.0) / N;
    CHECK(L.support_left() >= -0.5 / c - 1e-12);
  }
}

TEST_CASE("slope walks that are not diagrams are rejected") {
  CHECK_THROWS_AS(Profile::from_slopes(-1, {-1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Profile::from_slopes(0, {1, 0}), std::invalid_argument);
  CHECK_THROWS_AS(Profile::from_slopes(-1, {1, 1}), std::invalid_argument);
}

TEST_CASE("profile CSV lists corners") {
  std::ostringstream os;
  write_profile_csv(os, Profile(Partition({1})));
  CHECK(os.str() == "X,L\n-0.5,0.5\n0,1\n0.5,0.5\n");
}
