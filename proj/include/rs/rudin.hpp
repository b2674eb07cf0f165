#ifndef RS_RUDIN_HPP
#define RS_RUDIN_HPP

#include <cstdint>

#include "rs/words.hpp"

namespace rs {

/// r(n): r(0)=1, r(2n)=r(n), r(2n+1)=(-1)^n r(n).  O(log n) digit descent.
int rudin_shapiro(std::uint64_t n);

/// r'(n): r'(0)=1, r'(2n)=(-1)^n r'(n), r'(2n+1)=-r'(n).
/// Equals (-1)^n r(n) (checked in tests via both routes).
int rudin_shapiro_prime(std::uint64_t n);

enum class SeqKind { R, RPrime };

/// Lazily indexed view of r or r'.
struct SignSeq {
  SeqKind kind = SeqKind::R;

  int term(std::uint64_t n) const {
    return kind == SeqKind::R ? rudin_shapiro(n) : rudin_shapiro_prime(n);
  }
};

/// First `len` terms as a flat array, filled forward from the recurrences.
std::vector<int> materialize(SeqKind kind, std::size_t len);

/// First `len` letters of the fixed point s = sigma^inf(a).
Word fixed_point_prefix(std::size_t len);

/// Coefficient-level check of R(z)+R(-z)=2R(z^2): r(2n)=r(n) for all 2n <= limit.
bool mahler_check(std::uint64_t limit);

}  // namespace rs

#endif
