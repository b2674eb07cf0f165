#ifndef RS_WORDS_HPP
#define RS_WORDS_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace rs {

/// The four-letter alphabet of the substitution world, ordered a < b < c < d.
enum class Letter : std::uint8_t { A = 0, B = 1, C = 2, D = 3 };

using Word = std::vector<Letter>;

/// Finite word over {-1,+1}.
using SignWord = std::vector<int>;

char to_char(Letter l);
std::optional<Letter> letter_from_char(char c);

std::string to_string(const Word& w);
/// Comma-free "+-" serialization, e.g. (1,1,-1) -> "++-".
std::string to_string(const SignWord& w);
std::optional<Word> word_from_string(std::string_view s);

/// Letter-to-word morphism, extended to words by concatenation.
struct Substitution {
  std::array<Word, 4> image;

  const Word& of(Letter l) const { return image[static_cast<std::size_t>(l)]; }
  Word apply(const Word& w) const;
};

/// Letter-to-sign coding (tau, tau').
struct SignCoding {
  std::array<int, 4> sign;

  int of(Letter l) const { return sign[static_cast<std::size_t>(l)]; }
  SignWord apply(const Word& w) const;
};

/// Letter-to-letter coding (mu).
struct LetterCoding {
  std::array<Letter, 4> image;

  Letter of(Letter l) const { return image[static_cast<std::size_t>(l)]; }
  Word apply(const Word& w) const;
};

/// sigma: a->ab, b->ac, c->db, d->dc
const Substitution& sigma();
/// tau: a,b -> +1; c,d -> -1
const SignCoding& tau();
/// tau': a,c -> +1; b,d -> -1
const SignCoding& tau_prime();
/// mu: a<->d, b<->c (an involution commuting with sigma)
const LetterCoding& mu();

/// Sum of the entries of a +-1 word; empty word sums to 0.
long long digit_sum(const SignWord& w);

/// S = digit_sum . tau and S' = digit_sum . tau'
long long coded_sum(const Word& w);
long long coded_sum_prime(const Word& w);

/// sub^k(start), built iteratively; k = 0 gives the single-letter word.
Word iterate_substitution(const Substitution& sub, Letter start, unsigned k);

/// Smallest index where pattern occurs in text (KMP), or nullopt.
/// The empty pattern matches at 0.
std::optional<std::size_t> find_factor(const Word& pattern, const Word& text);

/// All occurrence positions of pattern in text, left to right.
std::vector<std::size_t> find_all_factors(const Word& pattern, const Word& text);

}  // namespace rs

#endif
