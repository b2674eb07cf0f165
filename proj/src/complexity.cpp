#include "rs/complexity.hpp"

#include <algorithm>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <unordered_map>

namespace rs {

long long window_sum(const SignSeq& seq, std::uint64_t i, std::uint64_t n) {
  long long s = 0;
  for (std::uint64_t j = i; j < i + n; ++j) s += seq.term(j);
  return s;
}

ExtremaReport brute_extrema(const SignSeq& seq, std::uint64_t n,
                            const BruteOptions& opts) {
  if (n == 0) throw std::invalid_argument("brute_extrema: n must be >= 1");
  std::size_t len = std::max<std::size_t>(4096, 64 * n);
  bool have_prev = false;
  long long pmax = 0, pmin = 0;
  std::uint64_t pdist = 0;
  for (;;) {
    if (len > opts.max_prefix)
      throw std::runtime_error("brute_extrema: prefix cap exceeded");
    std::vector<int> terms = materialize(seq.kind, len);
    // running window sum; distinct values live in [-n, n] with n's parity
    long long cur = 0;
    for (std::uint64_t j = 0; j < n; ++j) cur += terms[j];
    long long mx = cur, mn = cur;
    std::vector<char> seen(2 * n + 1, 0);
    seen[cur + (long long)n] = 1;
    for (std::size_t i = 1; i + n <= len; ++i) {
      cur += terms[i + n - 1] - terms[i - 1];
      if (cur > mx) mx = cur;
      if (cur < mn) mn = cur;
      seen[cur + (long long)n] = 1;
    }
    std::uint64_t dist = 0;
    for (char c : seen) dist += c;
    if (have_prev && mx == pmax && mn == pmin && dist == pdist) {
      return ExtremaReport{n, mx, mn, dist, len, true};
    }
    pmax = mx;
    pmin = mn;
    pdist = dist;
    have_prev = true;
    len *= 2;
  }
}

namespace {

constexpr std::size_t kFlatLimit = std::size_t(1) << 21;

const std::vector<std::int32_t>& flat_max_table() {
  static const std::vector<std::int32_t> table = [] {
    std::vector<std::int32_t> t(kFlatLimit);
    for (std::size_t i = 0; i <= 3; ++i) t[i] = std::int32_t(i);
    for (std::size_t i = 4; i < kFlatLimit; ++i) {
      std::size_t q = i / 4;
      switch (i % 4) {
        case 0: t[i] = 2 * t[q] + 2; break;
        case 1: t[i] = 2 * t[q] + 1; break;
        case 2: t[i] = t[q] + t[q + 1] + 1; break;
        default: t[i] = 2 * t[q + 1] + 1; break;
      }
    }
    return t;
  }();
  return table;
}

std::shared_mutex g_memo_mutex;
std::unordered_map<std::uint64_t, long long> g_memo;

}  // namespace

long long max_window_sum(std::uint64_t n) {
  if (n < kFlatLimit) return flat_max_table()[n];
  {
    std::shared_lock lock(g_memo_mutex);
    auto it = g_memo.find(n);
    if (it != g_memo.end()) return it->second;
  }
  std::uint64_t q = n / 4;
  long long v;
  switch (n % 4) {
    case 0: v = 2 * max_window_sum(q) + 2; break;
    case 1: v = 2 * max_window_sum(q) + 1; break;
    case 2: v = max_window_sum(q) + max_window_sum(q + 1) + 1; break;
    default: v = 2 * max_window_sum(q + 1) + 1; break;
  }
  {
    std::unique_lock lock(g_memo_mutex);
    g_memo.emplace(n, v);
  }
  return v;
}

long long min_window_sum(std::uint64_t n) { return -max_window_sum(n); }

std::uint64_t abelian_complexity(std::uint64_t n) {
  return std::uint64_t(max_window_sum(n) + 1);
}

int delta_max_sum(std::uint64_t n) {
  while (n >= 4) {
    switch (n % 4) {
      case 0: return -1;
      case 3: return 1;
      default: n /= 4;
    }
  }
  return 1;
}

namespace {

struct SigTable {
  std::vector<long long> prefix;  // prefix[i] = sum of r(0..i-1)
  std::vector<int> r;

  explicit SigTable(std::size_t len) : r(materialize(SeqKind::R, len)) {
    prefix.resize(len + 1, 0);
    for (std::size_t i = 0; i < len; ++i) prefix[i + 1] = prefix[i] + r[i];
  }
  long long sig(std::uint64_t i, std::uint64_t n) const {
    return prefix[i + n] - prefix[i];
  }
};

}  // namespace

std::vector<SumIdentityViolation> sum_identity_violations(std::uint64_t i_max,
                                                          std::uint64_t n_max) {
  if (i_max < 1 || n_max < 1)
    throw std::invalid_argument("sum_identity_violations: bounds must be >= 1");
  std::vector<SumIdentityViolation> out;
  const std::size_t len = 4 * (i_max + n_max) + 8;
  SigTable t(len);
  auto S = [&](std::uint64_t i, std::uint64_t n) { return t.sig(i, n); };
  auto r = [&](std::uint64_t i) { return (long long)t.r[i]; };
  auto check = [&](int id, std::uint64_t i, std::uint64_t n, long long lhs,
                   long long rhs) {
    if (lhs != rhs) out.push_back({id, i, n, lhs, rhs});
  };
  for (std::uint64_t i = 0; i < i_max; ++i) {
    for (std::uint64_t n = 1; n < n_max; ++n) {
      check(1, i, n, S(4 * i, 4 * n), 2 * S(i, n));
      check(2, i, n, S(4 * i + 1, 4 * n), S(i, n) + S(i + 1, n));
      check(3, i, n, S(4 * i + 2, 4 * n), 2 * S(i + 1, n));
      check(4, i, n, S(4 * i + 3, 4 * n),
            2 * S(i + 1, n) - r(4 * i + 4 * n + 3) + r(4 * i + 3));
      check(5, i, n, S(4 * i, 4 * n + 1), 2 * S(i, n) + r(i + n));
      check(6, i, n, S(4 * i + 1, 4 * n + 1), 2 * S(i + 1, n) + r(i));
      check(7, i, n, S(4 * i + 2, 4 * n + 1),
            2 * S(i + 1, n) + r(4 * i + 4 * n + 2));
      check(8, i, n, S(4 * i + 3, 4 * n + 1), 2 * S(i + 1, n) + r(4 * i + 3));
      check(9, i, n, S(4 * i, 4 * n + 2), S(i, n) + S(i, n + 1) + r(i + n));
      check(10, i, n, S(4 * i + 1, 4 * n + 2),
            S(i + 1, n) + S(i, n + 1) + r(4 * i + 4 * n + 2));
      check(11, i, n, S(4 * i + 2, 4 * n + 2),
            S(i + 1, n) + S(i + 1, n + 1) - r(i + n + 1));
      check(12, i, n, S(4 * i + 3, 4 * n + 2),
            S(i + 1, n) + S(i + 1, n + 1) + r(4 * i + 3));
      check(13, i, n, S(4 * i, 4 * n + 3), 2 * S(i, n + 1) - r(4 * i + 4 * n + 3));
      check(14, i, n, S(4 * i + 1, 4 * n + 3), 2 * S(i, n + 1) - r(i));
      check(15, i, n, S(4 * i + 2, 4 * n + 3),
            2 * S(i + 1, n + 1) - r(i + n + 1));
      check(16, i, n, S(4 * i + 3, 4 * n + 3), 2 * S(i + 1, n + 1) + r(4 * i + 3));
    }
  }
  return out;
}

namespace {

Word sigma2(const Word& w) { return sigma().apply(sigma().apply(w)); }

void drop_suffix(Word& w, std::string_view suffix, std::uint64_t n) {
  if (w.size() < suffix.size())
    throw std::logic_error("extremal cancellation mismatch at n=" +
                           std::to_string(n));
  for (std::size_t i = 0; i < suffix.size(); ++i) {
    if (to_char(w[w.size() - suffix.size() + i]) != suffix[i])
      throw std::logic_error("extremal cancellation mismatch at n=" +
                             std::to_string(n));
  }
  w.resize(w.size() - suffix.size());
}

void drop_prefix(Word& w, std::string_view prefix, std::uint64_t n) {
  if (w.size() < prefix.size())
    throw std::logic_error("extremal cancellation mismatch at n=" +
                           std::to_string(n));
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    if (to_char(w[i]) != prefix[i])
      throw std::logic_error("extremal cancellation mismatch at n=" +
                             std::to_string(n));
  }
  w.erase(w.begin(), w.begin() + prefix.size());
}

void append(Word& w, std::string_view tail) {
  for (char c : tail) w.push_back(*letter_from_char(c));
}

// W_1=a, W_2=ba, W_3=aba;
// W_4n = b s2(W_n) c^-1, W_4n+1 = b s2(W_n),
// W_4n+2 = b s2(W_{n+1}) (bac)^-1  if dM(n)=1,  cdb s2(W_n) c^-1 otherwise,
// W_4n+3 = s2(W_{n+1}) c^-1.
Word build_w(std::uint64_t n) {
  switch (n) {
    case 1: return *word_from_string("a");
    case 2: return *word_from_string("ba");
    case 3: return *word_from_string("aba");
    default: break;
  }
  std::uint64_t q = n / 4;
  Word w;
  switch (n % 4) {
    case 0:
      w = sigma2(build_w(q));
      drop_suffix(w, "c", n);
      w.insert(w.begin(), Letter::B);
      break;
    case 1:
      w = sigma2(build_w(q));
      w.insert(w.begin(), Letter::B);
      break;
    case 2:
      if (delta_max_sum(q) == 1) {
        w = sigma2(build_w(q + 1));
        drop_suffix(w, "bac", n);
        w.insert(w.begin(), Letter::B);
      } else {
        w = sigma2(build_w(q));
        drop_suffix(w, "c", n);
        Word head = *word_from_string("cdb");
        w.insert(w.begin(), head.begin(), head.end());
      }
      break;
    default:
      w = sigma2(build_w(q + 1));
      drop_suffix(w, "c", n);
      break;
  }
  return w;
}

// W~_1=c, W~_2=ca, W~_3=cac;
// W~_4n = d^-1 s2(W~_n) a, W~_4n+1 = s2(W~_n) a,
// W~_4n+2 = (dca)^-1 s2(W~_{n+1}) a  if dM(n)=1,  d^-1 s2(W~_n) abd otherwise,
// W~_4n+3 = d^-1 s2(W~_{n+1}).
Word build_wtilde(std::uint64_t n) {
  switch (n) {
    case 1: return *word_from_string("c");
    case 2: return *word_from_string("ca");
    case 3: return *word_from_string("cac");
    default: break;
  }
  std::uint64_t q = n / 4;
  Word w;
  switch (n % 4) {
    case 0:
      w = sigma2(build_wtilde(q));
      drop_prefix(w, "d", n);
      append(w, "a");
      break;
    case 1:
      w = sigma2(build_wtilde(q));
      append(w, "a");
      break;
    case 2:
      if (delta_max_sum(q) == 1) {
        w = sigma2(build_wtilde(q + 1));
        drop_prefix(w, "dca", n);
        append(w, "a");
      } else {
        w = sigma2(build_wtilde(q));
        drop_prefix(w, "d", n);
        append(w, "abd");
      }
      break;
    default:
      w = sigma2(build_wtilde(q + 1));
      drop_prefix(w, "d", n);
      break;
  }
  return w;
}

std::size_t next_power_of_4(std::uint64_t n) {
  std::size_t p = 1;
  while (p < n) p *= 4;
  return p;
}

}  // namespace

ExtremalWord build_extremal(std::uint64_t n, ExtremalFlavor flavor) {
  if (n == 0) throw std::invalid_argument("build_extremal: n must be >= 1");
  Word w = flavor == ExtremalFlavor::W ? build_w(n) : build_wtilde(n);
  return ExtremalWord{n, std::move(w), max_window_sum(n), flavor};
}

ExtremalCheck verify_extremal_detail(std::uint64_t n, ExtremalFlavor flavor) {
  constexpr std::size_t kPrefixCap = std::size_t(1) << 22;
  ExtremalWord ew = build_extremal(n, flavor);
  ExtremalCheck chk;
  chk.length_ok = ew.word.size() == n;
  const bool tilde = flavor == ExtremalFlavor::WTilde;
  long long s = tilde ? coded_sum_prime(ew.word) : coded_sum(ew.word);
  chk.sum_ok = s == ew.target_sum;
  if (!chk.length_ok || !chk.sum_ok) return chk;

  // W ends with a or c and extends as bW or dW; W~ starts with c or d and
  // extends as W~a or W~b.
  bool edge_ok = tilde ? (ew.word.front() == Letter::C || ew.word.front() == Letter::D)
                       : (ew.word.back() == Letter::A || ew.word.back() == Letter::C);

  std::size_t plen = 16 * next_power_of_4(n);
  for (;;) {
    Word text = fixed_point_prefix(plen);
    auto occurrences = find_all_factors(ew.word, text);
    chk.factor_ok = !occurrences.empty();
    bool extended = false;
    for (std::size_t pos : occurrences) {
      if (tilde) {
        if (pos + n < text.size()) {
          Letter next = text[pos + n];
          if (next == Letter::A || next == Letter::B) {
            extended = true;
            break;
          }
        }
      } else {
        if (pos >= 1) {
          Letter prev = text[pos - 1];
          if (prev == Letter::B || prev == Letter::D) {
            extended = true;
            break;
          }
        }
      }
    }
    chk.boundary_ok = edge_ok && extended;
    if ((chk.factor_ok && chk.boundary_ok) || plen >= kPrefixCap) return chk;
    plen *= 2;
  }
}

bool verify_extremal(std::uint64_t n, ExtremalFlavor flavor) {
  return verify_extremal_detail(n, flavor).ok();
}

}  // namespace rs
