#include "rs/rudin.hpp"

namespace rs {

int rudin_shapiro(std::uint64_t n) {
  int sign = 1;
  while (n > 0) {
    if (n & 1) {
      std::uint64_t m = n >> 1;
      if (m & 1) sign = -sign;  // r(2m+1) = (-1)^m r(m)
      n = m;
    } else {
      n >>= 1;
    }
  }
  return sign;
}

int rudin_shapiro_prime(std::uint64_t n) {
  int sign = 1;
  while (n > 0) {
    if (n & 1) {
      sign = -sign;  // r'(2m+1) = -r'(m)
      n >>= 1;
    } else {
      std::uint64_t m = n >> 1;
      if (m & 1) sign = -sign;  // r'(2m) = (-1)^m r'(m)
      n = m;
    }
  }
  return sign;
}

std::vector<int> materialize(SeqKind kind, std::size_t len) {
  std::vector<int> out(len);
  if (len == 0) return out;
  out[0] = 1;
  if (kind == SeqKind::R) {
    for (std::size_t i = 1; i < len; ++i) {
      std::size_t m = i >> 1;
      out[i] = (i & 1) ? ((m & 1) ? -out[m] : out[m]) : out[m];
    }
  } else {
    for (std::size_t i = 1; i < len; ++i) {
      std::size_t m = i >> 1;
      out[i] = (i & 1) ? -out[m] : ((m & 1) ? -out[m] : out[m]);
    }
  }
  return out;
}

Word fixed_point_prefix(std::size_t len) {
  Word w{Letter::A};
  while (w.size() < len) w = sigma().apply(w);
  w.resize(len);
  return w;
}

bool mahler_check(std::uint64_t limit) {
  for (std::uint64_t n = 0; 2 * n <= limit; ++n) {
    if (rudin_shapiro(2 * n) != rudin_shapiro(n)) return false;
  }
  return true;
}

}  // namespace rs
