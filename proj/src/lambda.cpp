#include "rs/lambda.hpp"

#include <gmpxx.h>

#include <bit>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include "rs/complexity.hpp"

namespace rs {

namespace {

constexpr std::uint32_t kMaxScale = 30;

int delta_max_sum_128(unsigned __int128 n) {
  while (n >= 4) {
    switch ((int)(n % 4)) {
      case 0: return -1;
      case 3: return 1;
      default: n /= 4;
    }
  }
  return 1;
}

int d_of(int digit) {
  static constexpr int table[4] = {1, 0, 1, 2};
  return table[digit];
}

}  // namespace

Quad4 Quad4::make(std::uint64_t p, std::uint32_t k) {
  if (p == 0) throw std::invalid_argument("Quad4: value must be positive");
  while (k > 0 && p % 4 == 0) {
    p >>= 2;
    --k;
  }
  if (k > kMaxScale) throw std::invalid_argument("Quad4: scale exceeds 4^-30");
  return Quad4{p, k};
}

std::optional<Quad4> Quad4::parse(std::string_view s) {
  auto parse_u64 = [](std::string_view t, std::uint64_t& out) {
    if (t.empty() || t.size() > 19) return false;
    out = 0;
    for (char c : t) {
      if (c < '0' || c > '9') return false;
      out = out * 10 + std::uint64_t(c - '0');
    }
    return true;
  };
  std::uint64_t p = 0, k = 0;
  auto slash = s.find('/');
  if (slash == std::string_view::npos) {
    if (!parse_u64(s, p) || p == 0) return std::nullopt;
    return Quad4::make(p, 0);
  }
  std::string_view num = s.substr(0, slash);
  std::string_view den = s.substr(slash + 1);
  if (den.size() < 3 || den.substr(0, 2) != "4^") return std::nullopt;
  if (!parse_u64(num, p) || p == 0) return std::nullopt;
  if (!parse_u64(den.substr(2), k) || k > kMaxScale) return std::nullopt;
  return Quad4::make(p, std::uint32_t(k));
}

int Quad4::digit(std::uint32_t j) const {
  if (j == 0 || j > k) return 0;
  return int((p >> (2 * (k - j))) & 3);
}

Quad4 Quad4::times4() const {
  if (k > 0) return Quad4{p, k - 1};
  if (p > (std::numeric_limits<std::uint64_t>::max() >> 2))
    throw std::overflow_error("Quad4: 4x out of range");
  return Quad4{p << 2, 0};
}

double Quad4::to_double() const {
  return double(p) / double(std::uint64_t(1) << (2 * k));
}

std::string Quad4::to_string() const {
  if (k == 0) return std::to_string(p);
  return std::to_string(p) + "/4^" + std::to_string(k);
}

std::string Quad4::to_decimal_string() const {
  if (k == 0) return std::to_string(p);
  // p / 4^k = p * 25^k / 10^(2k), a terminating decimal
  mpz_class scaled(static_cast<unsigned long>(p >> 32));
  scaled <<= 32;
  scaled += static_cast<unsigned long>(p & 0xffffffffu);
  mpz_class pow25;
  mpz_ui_pow_ui(pow25.get_mpz_t(), 25, k);
  scaled *= pow25;
  std::string digits = scaled.get_str();
  std::size_t frac = 2 * k;
  std::string out;
  if (digits.size() > frac) {
    out = digits.substr(0, digits.size() - frac) + "." +
          digits.substr(digits.size() - frac);
  } else {
    out = "0." + std::string(frac - digits.size(), '0') + digits;
  }
  while (out.back() == '0') out.pop_back();
  if (out.back() == '.') out.pop_back();
  return out;
}

Dyadic Dyadic::make(long long q, std::uint32_t j) {
  if (q == 0) return Dyadic{0, 0};
  while (j > 0 && q % 2 == 0) {
    q /= 2;
    --j;
  }
  return Dyadic{q, j};
}

namespace {

long long checked_shift(long long q, std::uint32_t by) {
  __int128 v = (__int128)q << by;
  if (v > std::numeric_limits<long long>::max() ||
      v < std::numeric_limits<long long>::min())
    throw std::overflow_error("Dyadic: scale overflow");
  return (long long)v;
}

}  // namespace

Dyadic Dyadic::operator+(const Dyadic& o) const {
  std::uint32_t J = std::max(j, o.j);
  return Dyadic::make(checked_shift(q, J - j) + checked_shift(o.q, J - o.j), J);
}

Dyadic Dyadic::operator-(const Dyadic& o) const {
  std::uint32_t J = std::max(j, o.j);
  return Dyadic::make(checked_shift(q, J - j) - checked_shift(o.q, J - o.j), J);
}

Dyadic Dyadic::times2() const {
  if (j > 0) return Dyadic{q, j - 1};
  return Dyadic::make(checked_shift(q, 1), 0);
}

double Dyadic::to_double() const { return std::ldexp(double(q), -int(j)); }

std::string Dyadic::to_string() const {
  if (j == 0) return std::to_string(q);
  return std::to_string(q) + "/2^" + std::to_string(j);
}

Base4Expansion base4_digits(Quad4 x) {
  Base4Expansion e;
  e.integer_part = x.integer_part();
  e.digits.resize(x.k);
  for (std::uint32_t j = 1; j <= x.k; ++j) e.digits[j - 1] = x.digit(j);
  return e;
}

std::uint64_t rho_of(Quad4 x) {
  return std::uint64_t(max_window_sum(x.integer_part()) + 1);
}

int a_series_term(Quad4 x, std::uint32_t j) {
  if (j == 0) throw std::invalid_argument("a_series_term: j must be >= 1");
  if (j > x.k) return 1;  // digit 0, and floor(4^j x)-1 = 3 mod 4 gives dM = 1
  int dj = d_of(x.digit(j));
  if (dj == 0) return 0;
  std::uint64_t fl = x.p >> (2 * (x.k - j));  // floor(4^j x)
  int aj = fl == 0 ? -1 : delta_max_sum(fl - 1);
  return dj * aj;
}

Dyadic a_exact(Quad4 x) {
  long long num = 1;  // closed tail sum_{j>k} 2^-j = 2^-k
  for (std::uint32_t j = 1; j <= x.k; ++j)
    num += (long long)a_series_term(x, j) << (x.k - j);
  return Dyadic::make(num, x.k);
}

SeriesValue a_series_float(double x, int terms) {
  if (!(x > 0) || !std::isfinite(x))
    throw std::invalid_argument("a_series_float: x must be positive");
  if (terms < 1 || terms > 60)
    throw std::invalid_argument("a_series_float: need 1 <= terms <= 60");
  int e2 = 0;
  double frac = std::frexp(x, &e2);  // x = frac * 2^e2, frac in [0.5, 1)
  auto mant = (unsigned __int128)std::llround(std::ldexp(frac, 53));
  // floor(4^j x) = mant * 2^(2j + e2 - 53), exact in 128 bits
  if (2 * terms + e2 > 126)
    throw std::domain_error("a_series_float: 4^terms * x out of range");
  long long num = 0;  // partial sum scaled by 2^terms
  unsigned __int128 prev_floor = 0;
  for (int j = 1; j <= terms; ++j) {
    int shift = 2 * j + e2 - 53;
    unsigned __int128 fl =
        shift >= 0 ? (mant << shift) : (mant >> (-shift));
    int digit = int((fl - 4 * prev_floor) % 4);
    prev_floor = fl;
    int dj = d_of(digit);
    if (dj != 0) {
      int aj = fl == 0 ? -1 : delta_max_sum_128(fl - 1);
      num += (long long)(dj * aj) << (terms - j);
    }
  }
  SeriesValue out;
  out.value = double(std::ldexp((long double)num, -terms));
  out.error_bound = std::ldexp(1.0, 1 - terms) +
                    4 * std::numeric_limits<double>::epsilon() *
                        std::max(1.0, std::fabs(out.value));
  return out;
}

LambdaValue lambda_exact(Quad4 x) {
  Dyadic numerator = Dyadic{(long long)rho_of(x), 0} + a_exact(x);
  long double xl = (long double)x.p / (long double)(std::uint64_t(1) << (2 * x.k));
  long double approx =
      std::ldexp((long double)numerator.q, -int(numerator.j)) / sqrtl(xl);
  return LambdaValue{x, numerator, approx};
}

namespace {

// Decimal string of V / 10^t rounded to `sig` significant digits.
std::string decimal_from_scaled(mpz_class V, long t, int sig) {
  bool neg = V < 0;
  if (neg) V = -V;
  if (V == 0) return "0";
  std::string digits = V.get_str();
  long L = (long)digits.size();
  if (L > sig) {
    long drop = L - sig;
    mpz_class pow10, half;
    mpz_ui_pow_ui(pow10.get_mpz_t(), 10, (unsigned long)drop);
    mpz_ui_pow_ui(half.get_mpz_t(), 10, (unsigned long)(drop - 1));
    V = (V + 5 * half) / pow10;
    t -= drop;
    digits = V.get_str();
    L = (long)digits.size();
  }
  std::string out;
  if (t <= 0) {
    out = digits + std::string(-t, '0');
  } else if (L > t) {
    out = digits.substr(0, L - t) + "." + digits.substr(L - t);
  } else {
    out = "0." + std::string(t - L, '0') + digits;
  }
  if (out.find('.') != std::string::npos) {
    while (out.back() == '0') out.pop_back();
    if (out.back() == '.') out.pop_back();
  }
  return neg ? "-" + out : out;
}

mpz_class mpz_from_u64(std::uint64_t v) {
  mpz_class out(static_cast<unsigned long>(v >> 32));
  out <<= 32;
  out += static_cast<unsigned long>(v & 0xffffffffu);
  return out;
}

}  // namespace

std::string lambda_decimal(const LambdaValue& v, int digits) {
  if (digits < 1 || digits > 200)
    throw std::invalid_argument("lambda_decimal: digits out of range");
  // value = q 2^k / (2^j sqrt(p)); scale by 10^t with isqrt(p 10^(2t))
  const long t = digits + 8;
  mpz_class p10t;
  mpz_ui_pow_ui(p10t.get_mpz_t(), 10, (unsigned long)(2 * t));
  mpz_class root = sqrt(mpz_from_u64(v.x.p) * p10t);  // floor(sqrt(p) 10^t)
  mpz_class scaled = mpz_class(long(v.numerator.q)) * p10t;  // q 10^(2t)
  scaled <<= v.x.k;
  mpz_class den = root;
  den <<= v.numerator.j;
  mpz_class V = scaled / den;  // ~ value * 10^t
  return decimal_from_scaled(V, t, digits);
}

std::vector<std::pair<int, double>> lambda_limit_quotients(Quad4 x, int k_max) {
  if (k_max < 1) throw std::invalid_argument("lambda_limit_quotients: k_max >= 1");
  if (std::bit_width(x.p) + 2 * k_max > 63)
    throw std::overflow_error("lambda_limit_quotients: 4^k_max x out of range");
  std::vector<std::pair<int, double>> out;
  out.reserve(k_max);
  const double xd = x.to_double();
  for (int k = 1; k <= k_max; ++k) {
    std::uint64_t fl = (x.p << (2 * k)) >> (2 * x.k);  // floor(4^k x)
    double rho = double(max_window_sum(fl) + 1);
    out.emplace_back(k, rho / std::sqrt(std::ldexp(xd, 2 * k)));
  }
  return out;
}

namespace {

std::vector<EndpointViolation> endpoint_sweep(int k, bool magnitude_only) {
  if (k < 1 || k > 13)
    throw std::invalid_argument("endpoint sweep: need 1 <= k <= 13");
  std::vector<EndpointViolation> out;
  const std::uint64_t top = std::uint64_t(1) << (2 * k);  // 4^k
  for (std::uint64_t z = 1; z < top; ++z) {
    Dyadic diff = a_exact(Quad4::make(z, std::uint32_t(k))) -
                   a_exact(Quad4::make(z + 1, std::uint32_t(k)));
    Dyadic want = z <= top - 2 ? Dyadic::make(-1, std::uint32_t(k))
                               : Dyadic::make((1LL << k) - 1, std::uint32_t(k));
    bool ok;
    if (magnitude_only) {
      Dyadic mag = diff.q < 0 ? Dyadic{-diff.q, diff.j} : diff;
      Dyadic wmag = want.q < 0 ? Dyadic{-want.q, want.j} : want;
      ok = mag == wmag;
    } else {
      ok = diff == want;
    }
    if (!ok) out.push_back({z, diff, want});
  }
  return out;
}

}  // namespace

std::vector<EndpointViolation> endpoint_difference_violations(int k) {
  return endpoint_sweep(k, false);
}

std::vector<EndpointViolation> endpoint_magnitude_violations(int k) {
  return endpoint_sweep(k, true);
}

double holder_ratio(Quad4 x, Quad4 y) {
  std::uint32_t K = std::max(x.k, y.k);
  if (std::bit_width(x.p) + 2 * (K - x.k) > 63 ||
      std::bit_width(y.p) + 2 * (K - y.k) > 63)
    throw std::overflow_error("holder_ratio: common scale out of range");
  std::uint64_t zx = x.p << (2 * (K - x.k));
  std::uint64_t zy = y.p << (2 * (K - y.k));
  if (zx == zy) throw std::invalid_argument("holder_ratio: points must differ");
  std::uint64_t dz = zx > zy ? zx - zy : zy - zx;
  double dx = std::ldexp(double(dz), -2 * int(K));
  double da = std::fabs((a_exact(x) - a_exact(y)).to_double());
  return da / std::sqrt(dx);
}

double holder_ratio_scan(int k, std::uint64_t trials, std::uint64_t seed) {
  if (k < 1 || k > 15) throw std::invalid_argument("holder_ratio_scan: bad k");
  std::mt19937_64 rng(seed);
  const std::uint64_t top = std::uint64_t(1) << (2 * k);
  std::uniform_int_distribution<std::uint64_t> dist(1, top - 1);
  double best = 0;
  for (std::uint64_t t = 0; t < trials; ++t) {
    std::uint64_t z1 = dist(rng), z2 = dist(rng);
    if (z1 == z2) continue;
    double da = std::fabs((a_exact(Quad4::make(z1, std::uint32_t(k))) -
                           a_exact(Quad4::make(z2, std::uint32_t(k))))
                              .to_double());
    std::uint64_t dz = z1 > z2 ? z1 - z2 : z2 - z1;
    double ratio = da / std::sqrt(std::ldexp(double(dz), -2 * k));
    if (ratio > best) best = ratio;
  }
  return best;
}

bool self_similarity_holds(Quad4 x) {
  Quad4 x4 = x.times4();
  Dyadic lhs = Dyadic{(long long)rho_of(x4), 0} + a_exact(x4);
  Dyadic rhs = (Dyadic{(long long)rho_of(x), 0} + a_exact(x)).times2();
  return lhs == rhs;
}

}  // namespace rs
