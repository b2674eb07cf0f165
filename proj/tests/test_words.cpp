#include <doctest.h>

#include <random>

#include "rs/words.hpp"

using namespace rs;

namespace {

Word W(const char* s) { return *word_from_string(s); }

Word random_word(std::mt19937_64& rng, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<int> pick(0, 3);
  Word w(len(rng));
  for (auto& l : w) l = Letter(pick(rng));
  return w;
}

}  // namespace

TEST_CASE("digit_sum") {
  CHECK(digit_sum({}) == 0);
  CHECK(digit_sum({1, 1, 1, -1}) == 2);
  CHECK(digit_sum({-1, -1, 1}) == -1);
}

TEST_CASE("codings apply letterwise") {
  CHECK(tau().apply(W("abac")) == SignWord{1, 1, 1, -1});
  CHECK(tau_prime().apply(W("abac")) == SignWord{1, -1, 1, 1});
  CHECK(mu().apply(W("abcd")) == W("dcba"));
  CHECK(to_string(tau().apply(W("abac"))) == "+++-");
}

TEST_CASE("substitution iteration") {
  CHECK(iterate_substitution(sigma(), Letter::A, 0) == W("a"));
  CHECK(iterate_substitution(sigma(), Letter::A, 1) == W("ab"));
  CHECK(iterate_substitution(sigma(), Letter::A, 2) == W("abac"));
  CHECK(iterate_substitution(sigma(), Letter::A, 3) == W("abacabdb"));
  // sigma^2 on single letters
  CHECK(sigma().apply(sigma().apply(W("b"))) == W("abdb"));
  CHECK(sigma().apply(sigma().apply(W("c"))) == W("dcac"));
  CHECK(sigma().apply(sigma().apply(W("d"))) == W("dcdb"));
}

TEST_CASE("find_factor") {
  CHECK(find_factor(W("abac"), W("abacabdb")) == 0);
  CHECK(find_factor(W(""), W("abac")) == 0);
  CHECK(!find_factor(W("dd"), W("abacabdb")).has_value());
  CHECK(find_factor(W("db"), W("abacabdb")) == 6);
  CHECK(find_all_factors(W("ab"), W("abacabdb")) ==
        std::vector<std::size_t>{0, 4});
  // overlapping occurrences
  CHECK(find_all_factors(W("aa"), W("aaaa")) ==
        std::vector<std::size_t>{0, 1, 2});
}

TEST_CASE("properties over random words") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 200; ++trial) {
    Word w = random_word(rng, 64);
    CHECK(tau().apply(w).size() == w.size());
    CHECK(mu().apply(mu().apply(w)) == w);
    Word s2 = sigma().apply(sigma().apply(w));
    CHECK(coded_sum(s2) == 2 * coded_sum(w));
    CHECK(coded_sum_prime(s2) == 2 * coded_sum_prime(w));
    // digit sum is additive under concatenation
    Word v = random_word(rng, 64);
    Word wv = w;
    wv.insert(wv.end(), v.begin(), v.end());
    CHECK(digit_sum(tau().apply(wv)) ==
          digit_sum(tau().apply(w)) + digit_sum(tau().apply(v)));
  }
}

TEST_CASE("sigma^k lengths double") {
  for (unsigned k = 0; k <= 14; ++k) {
    CHECK(iterate_substitution(sigma(), Letter::A, k).size() ==
          (std::size_t(1) << k));
  }
}

TEST_CASE("word round trip") {
  CHECK(to_string(W("abdc")) == "abdc");
  CHECK(!word_from_string("abxc").has_value());
}
