#include <doctest.h>

#include "rs/rudin.hpp"

using namespace rs;

TEST_CASE("first terms of r and r'") {
  CHECK(rudin_shapiro(0) == 1);
  CHECK(rudin_shapiro(3) == -1);
  CHECK(rudin_shapiro(6) == -1);
  std::vector<int> r8;
  for (std::uint64_t n = 0; n < 8; ++n) r8.push_back(rudin_shapiro(n));
  CHECK(r8 == std::vector<int>{1, 1, 1, -1, 1, 1, -1, 1});

  CHECK(rudin_shapiro_prime(0) == 1);
  CHECK(rudin_shapiro_prime(1) == -1);
  CHECK(rudin_shapiro_prime(2) == 1);
}

TEST_CASE("materialize matches digit descent") {
  auto r = materialize(SeqKind::R, 1 << 12);
  auto rp = materialize(SeqKind::RPrime, 1 << 12);
  for (std::uint64_t n = 0; n < (1 << 12); ++n) {
    CHECK(r[n] == rudin_shapiro(n));
    CHECK(rp[n] == rudin_shapiro_prime(n));
  }
}

TEST_CASE("generation routes agree: recurrence vs coded fixed point") {
  const std::size_t len = std::size_t(1) << 16;
  Word s = fixed_point_prefix(len);
  auto r = materialize(SeqKind::R, len);
  auto rp = materialize(SeqKind::RPrime, len);
  for (std::size_t n = 0; n < len; ++n) {
    REQUIRE(tau().of(s[n]) == r[n]);
    REQUIRE(tau_prime().of(s[n]) == rp[n]);
  }
}

TEST_CASE("r'(n) = (-1)^n r(n)") {
  for (std::uint64_t n = 0; n < (1 << 16); ++n) {
    int sign = n % 2 == 0 ? 1 : -1;
    REQUIRE(rudin_shapiro_prime(n) == sign * rudin_shapiro(n));
  }
}

TEST_CASE("base-4 splitting of r") {
  for (std::uint64_t n = 0; n < (1 << 14); ++n) {
    int rn = rudin_shapiro(n);
    int sign = n % 2 == 0 ? 1 : -1;
    REQUIRE(rudin_shapiro(4 * n) == rn);
    REQUIRE(rudin_shapiro(4 * n + 1) == rn);
    REQUIRE(rudin_shapiro(4 * n + 2) == sign * rn);
    REQUIRE(rudin_shapiro(4 * n + 3) == -sign * rn);
  }
}

TEST_CASE("fixed point prefix") {
  CHECK(to_string(fixed_point_prefix(1)) == "a");
  CHECK(to_string(fixed_point_prefix(4)) == "abac");
  CHECK(to_string(fixed_point_prefix(8)) == "abacabdb");
  // prefix-stability
  Word w64 = fixed_point_prefix(64);
  Word w256 = fixed_point_prefix(256);
  CHECK(Word(w256.begin(), w256.begin() + 64) == w64);
}

TEST_CASE("mahler coefficient identity") {
  CHECK(mahler_check(1));
  CHECK(mahler_check(2));
  CHECK(mahler_check(4096));
}
