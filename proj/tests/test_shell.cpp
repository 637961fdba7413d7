#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "fermigas/shell.hpp"

using namespace fermigas;

namespace {

// Count arrays (l_1..l_d) of nonnegative integers with sum <= M directly.
long long enumerate_levels(int d, int M) {
  if (d == 0) return 1;
  long long total = 0;
  for (int l = 0; l <= M; ++l) total += enumerate_levels(d - 1, M - l);
  return total;
}

}  // namespace

TEST_CASE("particle counts") {
  CHECK(ShellSpec(1, 4).particle_number() == 5);
  CHECK(ShellSpec(2, 2).particle_number() == Integer(enumerate_levels(2, 2)));
  CHECK(ShellSpec(3, 1).particle_number() == Integer(enumerate_levels(3, 1)));
  CHECK(ShellSpec(2, 2).particle_number() == 6);
  CHECK(ShellSpec(3, 1).particle_number() == 4);

  for (int d = 1; d <= 4; ++d)
    for (int M = 0; M <= 8; ++M)
      REQUIRE(ShellSpec(d, M).particle_number() == Integer(enumerate_levels(d, M)));
}

TEST_CASE("shifted shell parameter") {
  CHECK(ShellSpec(1, 0).m_tilde() == Rational(1));
  CHECK(ShellSpec(2, 1).m_tilde() == make_rational(5, 2));
  CHECK(ShellSpec(3, 0).m_tilde() == Rational(2));
  CHECK(ShellSpec(3, 2).two_m_tilde() == 8);
  CHECK(ShellSpec(2, 1).m_tilde_real() == 2.5);
}

TEST_CASE("particle number is monotone") {
  for (int d = 1; d <= 4; ++d)
    for (int M = 0; M <= 10; ++M)
      REQUIRE(ShellSpec(d, M + 1).particle_number() > ShellSpec(d, M).particle_number());
  for (int M = 1; M <= 10; ++M)
    for (int d = 1; d <= 4; ++d)
      REQUIRE(ShellSpec(d + 1, M).particle_number() > ShellSpec(d, M).particle_number());
}

TEST_CASE("invalid parameters are rejected") {
  CHECK_THROWS_AS(ShellSpec(0, 3), std::invalid_argument);
  CHECK_THROWS_AS(ShellSpec(2, -1), std::invalid_argument);
}
