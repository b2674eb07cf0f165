#include "rs/words.hpp"

namespace rs {

char to_char(Letter l) {
  switch (l) {
    case Letter::A: return 'a';
    case Letter::B: return 'b';
    case Letter::C: return 'c';
    default: return 'd';
  }
}

std::optional<Letter> letter_from_char(char c) {
  switch (c) {
    case 'a': return Letter::A;
    case 'b': return Letter::B;
    case 'c': return Letter::C;
    case 'd': return Letter::D;
    default: return std::nullopt;
  }
}

std::string to_string(const Word& w) {
  std::string out;
  out.reserve(w.size());
  for (Letter l : w) out.push_back(to_char(l));
  return out;
}

std::string to_string(const SignWord& w) {
  std::string out;
  out.reserve(w.size());
  for (int s : w) out.push_back(s > 0 ? '+' : '-');
  return out;
}

std::optional<Word> word_from_string(std::string_view s) {
  Word w;
  w.reserve(s.size());
  for (char c : s) {
    auto l = letter_from_char(c);
    if (!l) return std::nullopt;
    w.push_back(*l);
  }
  return w;
}

Word Substitution::apply(const Word& w) const {
  Word out;
  std::size_t total = 0;
  for (Letter l : w) total += of(l).size();
  out.reserve(total);
  for (Letter l : w) {
    const Word& im = of(l);
    out.insert(out.end(), im.begin(), im.end());
  }
  return out;
}

SignWord SignCoding::apply(const Word& w) const {
  SignWord out;
  out.reserve(w.size());
  for (Letter l : w) out.push_back(of(l));
  return out;
}

Word LetterCoding::apply(const Word& w) const {
  Word out;
  out.reserve(w.size());
  for (Letter l : w) out.push_back(of(l));
  return out;
}

namespace {

Word make_word(std::string_view s) {
  auto w = word_from_string(s);
  return *w;
}

}  // namespace

const Substitution& sigma() {
  static const Substitution s{{make_word("ab"), make_word("ac"),
                               make_word("db"), make_word("dc")}};
  return s;
}

const SignCoding& tau() {
  static const SignCoding c{{+1, +1, -1, -1}};
  return c;
}

const SignCoding& tau_prime() {
  static const SignCoding c{{+1, -1, +1, -1}};
  return c;
}

const LetterCoding& mu() {
  static const LetterCoding c{{Letter::D, Letter::C, Letter::B, Letter::A}};
  return c;
}

long long digit_sum(const SignWord& w) {
  long long s = 0;
  for (int v : w) s += v;
  return s;
}

long long coded_sum(const Word& w) {
  long long s = 0;
  for (Letter l : w) s += tau().of(l);
  return s;
}

long long coded_sum_prime(const Word& w) {
  long long s = 0;
  for (Letter l : w) s += tau_prime().of(l);
  return s;
}

Word iterate_substitution(const Substitution& sub, Letter start, unsigned k) {
  Word w{start};
  for (unsigned i = 0; i < k; ++i) w = sub.apply(w);
  return w;
}

namespace {

std::vector<std::size_t> kmp_failure(const Word& p) {
  std::vector<std::size_t> fail(p.size(), 0);
  for (std::size_t i = 1; i < p.size(); ++i) {
    std::size_t j = fail[i - 1];
    while (j > 0 && p[i] != p[j]) j = fail[j - 1];
    if (p[i] == p[j]) ++j;
    fail[i] = j;
  }
  return fail;
}

}  // namespace

std::optional<std::size_t> find_factor(const Word& pattern, const Word& text) {
  if (pattern.empty()) return 0;
  if (pattern.size() > text.size()) return std::nullopt;
  auto fail = kmp_failure(pattern);
  std::size_t j = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    while (j > 0 && text[i] != pattern[j]) j = fail[j - 1];
    if (text[i] == pattern[j]) ++j;
    if (j == pattern.size()) return i + 1 - pattern.size();
  }
  return std::nullopt;
}

std::vector<std::size_t> find_all_factors(const Word& pattern,
                                          const Word& text) {
  std::vector<std::size_t> out;
  if (pattern.empty() || pattern.size() > text.size()) return out;
  auto fail = kmp_failure(pattern);
  std::size_t j = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    while (j > 0 && text[i] != pattern[j]) j = fail[j - 1];
    if (text[i] == pattern[j]) ++j;
    if (j == pattern.size()) {
      out.push_back(i + 1 - pattern.size());
      j = fail[j - 1];
    }
  }
  return out;
}

}  // namespace rs
