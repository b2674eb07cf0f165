#include <doctest.h>

#include "rs/complexity.hpp"

using namespace rs;

namespace {
const SignSeq R{SeqKind::R};
const SignSeq RP{SeqKind::RPrime};
}  // namespace

TEST_CASE("window sums") {
  CHECK(window_sum(R, 0, 4) == 2);
  CHECK(window_sum(R, 7, 0) == 0);
  CHECK(window_sum(R, 4, 4) == 2);
}

TEST_CASE("recurrence table values") {
  std::vector<long long> first;
  for (std::uint64_t n = 1; n <= 7; ++n) first.push_back(max_window_sum(n));
  CHECK(first == std::vector<long long>{1, 2, 3, 4, 3, 4, 5});
  CHECK(max_window_sum(0) == 0);
  CHECK(max_window_sum(4) == 4);
  CHECK(max_window_sum(16) == 10);
  CHECK(max_window_sum(24) == 10);
  CHECK(min_window_sum(24) == -10);
  CHECK(abelian_complexity(0) == 1);
  CHECK(abelian_complexity(7) == 6);
  CHECK(abelian_complexity(16) == 11);
}

TEST_CASE("delta is the first difference") {
  CHECK(delta_max_sum(0) == 1);
  CHECK(delta_max_sum(4) == -1);
  CHECK(delta_max_sum(5) == 1);
  for (std::uint64_t n = 0; n < (std::uint64_t(1) << 14); ++n) {
    REQUIRE(delta_max_sum(n) == max_window_sum(n + 1) - max_window_sum(n));
  }
}

TEST_CASE("brute force extrema stabilize and match the recurrence") {
  ExtremaReport r1 = brute_extrema(R, 1);
  CHECK(r1.max_sum == 1);
  CHECK(r1.min_sum == -1);
  CHECK(r1.distinct_sums == 2);
  CHECK(r1.stabilized);

  ExtremaReport r6 = brute_extrema(R, 6);
  CHECK(r6.max_sum == 4);
  CHECK(r6.min_sum == -4);
  CHECK(r6.distinct_sums == 5);
  CHECK(r6.prefix_len == 8192);

  ExtremaReport rp7 = brute_extrema(RP, 7);
  CHECK(rp7.max_sum == 5);
  CHECK(rp7.min_sum == -5);
  CHECK(rp7.distinct_sums == 6);

  for (std::uint64_t n : {2, 3, 24, 100, 257}) {
    for (const SignSeq& seq : {R, RP}) {
      ExtremaReport rep = brute_extrema(seq, n);
      REQUIRE(rep.max_sum == max_window_sum(n));
      REQUIRE(rep.max_sum + rep.min_sum == 0);
      REQUIRE((rep.max_sum - rep.min_sum) % 2 == 0);
      REQUIRE((long long)rep.distinct_sums ==
              (rep.max_sum - rep.min_sum) / 2 + 1);
    }
  }
}

TEST_CASE("brute force prefix cap") {
  BruteOptions opts;
  opts.max_prefix = 1024;  // below the initial prefix
  CHECK_THROWS_AS(brute_extrema(R, 1, opts), std::runtime_error);
}

TEST_CASE("lemma-4 style identities hold") {
  CHECK(sum_identity_violations(2, 2).empty());
  CHECK(sum_identity_violations(128, 128).empty());
}

TEST_CASE("extremal words match the printed table") {
  const char* table_w[] = {"a", "ba", "aba", "baba", "babac", "babdba",
                           "abdbaba"};
  const char* table_wt[] = {"c", "ca", "cac", "caca", "dcaca", "cabaca",
                            "cacabac"};
  for (std::uint64_t n = 1; n <= 7; ++n) {
    CHECK(to_string(build_extremal(n, ExtremalFlavor::W).word) ==
          table_w[n - 1]);
    CHECK(to_string(build_extremal(n, ExtremalFlavor::WTilde).word) ==
          table_wt[n - 1]);
  }
  CHECK(build_extremal(5, ExtremalFlavor::W).target_sum == 3);
}

TEST_CASE("extremal verification") {
  ExtremalCheck c7 = verify_extremal_detail(7, ExtremalFlavor::W);
  CHECK(c7.ok());
  CHECK(coded_sum(build_extremal(7, ExtremalFlavor::W).word) == 5);
  CHECK(verify_extremal(1, ExtremalFlavor::W));
  CHECK(verify_extremal(4096, ExtremalFlavor::WTilde));
  for (std::uint64_t n = 1; n <= 256; ++n) {
    REQUIRE(verify_extremal(n, ExtremalFlavor::W));
    REQUIRE(verify_extremal(n, ExtremalFlavor::WTilde));
  }
}

TEST_CASE("extremal words have the expected length and letters") {
  for (std::uint64_t n : {9, 10, 11, 12, 37, 100, 255, 1000}) {
    ExtremalWord w = build_extremal(n, ExtremalFlavor::W);
    REQUIRE(w.word.size() == n);
    Letter last = w.word.back();
    REQUIRE((last == Letter::A || last == Letter::C));
    ExtremalWord wt = build_extremal(n, ExtremalFlavor::WTilde);
    REQUIRE(wt.word.size() == n);
    Letter first = wt.word.front();
    REQUIRE((first == Letter::C || first == Letter::D));
  }
}

TEST_CASE("recurrence agrees with brute force over a range") {
  for (std::uint64_t n = 1; n <= 64; ++n) {
    ExtremaReport rep = brute_extrema(R, n);
    REQUIRE(rep.max_sum == max_window_sum(n));
    ExtremaReport repp = brute_extrema(RP, n);
    REQUIRE(repp.max_sum == max_window_sum(n));
  }
}

TEST_CASE("lemma-5 bounds hold with equality") {
  for (std::uint64_t n = 1; n <= (std::uint64_t(1) << 12); ++n) {
    long long M = max_window_sum(n), M1 = max_window_sum(n + 1);
    REQUIRE(max_window_sum(4 * n) == 2 * M + 2);
    REQUIRE(max_window_sum(4 * n + 1) == 2 * M + 1);
    REQUIRE(max_window_sum(4 * n + 2) == M + M1 + 1);
    REQUIRE(max_window_sum(4 * n + 3) == 2 * M1 + 1);
  }
}
