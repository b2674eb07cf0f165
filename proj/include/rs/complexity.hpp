#ifndef RS_COMPLEXITY_HPP
#define RS_COMPLEXITY_HPP

#include <cstdint>
#include <vector>

#include "rs/rudin.hpp"
#include "rs/words.hpp"

namespace rs {

/// Sum of n consecutive terms starting at index i; n = 0 gives 0.
long long window_sum(const SignSeq& seq, std::uint64_t i, std::uint64_t n);

struct ExtremaReport {
  std::uint64_t n = 0;
  long long max_sum = 0;
  long long min_sum = 0;
  std::uint64_t distinct_sums = 0;  // abelian classes among length-n windows
  std::size_t prefix_len = 0;       // prefix at which the triple stabilized
  bool stabilized = false;
};

struct BruteOptions {
  std::size_t max_prefix = std::size_t(1) << 26;
};

/// Exhaustive window scan over a prefix, starting at max(4096, 64 n) letters
/// and doubling until (max, min, distinct) survive a doubling unchanged.
/// Throws std::runtime_error once the prefix would exceed opts.max_prefix.
ExtremaReport brute_extrema(const SignSeq& seq, std::uint64_t n,
                            const BruteOptions& opts = {});

/// M(n): M(0)=0, M(1)=1, M(2)=2, M(3)=3, and for n >= 1
///   M(4n)=2M(n)+2, M(4n+1)=2M(n)+1, M(4n+2)=M(n)+M(n+1)+1, M(4n+3)=2M(n+1)+1.
/// Memoized; safe under concurrent queries.
long long max_window_sum(std::uint64_t n);

/// m(n) = -M(n)
long long min_window_sum(std::uint64_t n);

/// rho(n) = M(n) + 1; rho(0) = 1.
std::uint64_t abelian_complexity(std::uint64_t n);

/// First difference M(n+1)-M(n), always +1 or -1, via
///   dM(i)=1 for 0 <= i <= 3, dM(4n)=-1, dM(4n+3)=1, dM(4n+1)=dM(4n+2)=dM(n).
int delta_max_sum(std::uint64_t n);

struct SumIdentityViolation {
  int identity;  // 1..16
  std::uint64_t i, n;
  long long lhs, rhs;
};

/// Sweeps the sixteen window-sum identities over 0 <= i < i_max, 1 <= n < n_max
/// against r itself; any mismatch is returned (none expected).
std::vector<SumIdentityViolation> sum_identity_violations(std::uint64_t i_max,
                                                          std::uint64_t n_max);

enum class ExtremalFlavor { W, WTilde };

struct ExtremalWord {
  std::uint64_t n = 0;
  Word word;
  long long target_sum = 0;  // M(n)
  ExtremalFlavor flavor = ExtremalFlavor::W;
};

/// The recursive maximal-sum factors W_n (for r) and W~_n (for r').
/// Throws std::logic_error if a boundary cancellation does not match.
ExtremalWord build_extremal(std::uint64_t n, ExtremalFlavor flavor);

struct ExtremalCheck {
  bool length_ok = false;
  bool sum_ok = false;
  bool factor_ok = false;    // word occurs in a prefix of s
  bool boundary_ok = false;  // extendable per the flavor's side condition
  bool ok() const { return length_ok && sum_ok && factor_ok && boundary_ok; }
};

ExtremalCheck verify_extremal_detail(std::uint64_t n, ExtremalFlavor flavor);
bool verify_extremal(std::uint64_t n, ExtremalFlavor flavor);

}  // namespace rs

#endif
