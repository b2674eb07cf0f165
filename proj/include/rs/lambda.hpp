#ifndef RS_LAMBDA_HPP
#define RS_LAMBDA_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace rs {

/// Positive 4-adic rational p/4^k, kept normalized (k = 0 or 4 does not
/// divide p).  Scales are capped at k <= 30 so downstream dyadic numerators
/// stay inside 64 bits.
struct Quad4 {
  std::uint64_t p = 1;
  std::uint32_t k = 0;

  static Quad4 make(std::uint64_t p, std::uint32_t k);
  /// Accepts "P", "P/4^K".
  static std::optional<Quad4> parse(std::string_view s);

  std::uint64_t integer_part() const { return p >> (2 * k); }
  /// Base-4 fractional digit x_j; 0 for j > k.
  int digit(std::uint32_t j) const;

  Quad4 times4() const;
  double to_double() const;
  std::string to_string() const;          // "P" or "P/4^K"
  std::string to_decimal_string() const;  // exact terminating decimal

  friend bool operator==(const Quad4&, const Quad4&) = default;
};

/// Dyadic rational q/2^j, normalized (j = 0 or q odd).
struct Dyadic {
  long long q = 0;
  std::uint32_t j = 0;

  static Dyadic make(long long q, std::uint32_t j);

  Dyadic operator+(const Dyadic& o) const;
  Dyadic operator-(const Dyadic& o) const;
  Dyadic times2() const;
  double to_double() const;
  std::string to_string() const;  // "q" or "q/2^j"

  friend bool operator==(const Dyadic&, const Dyadic&) = default;
};

struct Base4Expansion {
  std::uint64_t integer_part = 0;
  std::vector<int> digits;  // x_1..x_k, terminating
};

Base4Expansion base4_digits(Quad4 x);

/// rho(x) = rho(floor(x)) = M(floor(x)) + 1; rho of anything in (0,1) is 1.
std::uint64_t rho_of(Quad4 x);

/// The j-th series term d(x_j) a_j(x), in {-2,...,2}, where
/// a_j(x) = -1 if 4^j x < 1 and dM(floor(4^j x) - 1) otherwise,
/// and d(0)=d(2)=1, d(1)=0, d(3)=2.
int a_series_term(Quad4 x, std::uint32_t j);

/// a(x) = sum_{j>=1} d(x_j) a_j(x) 2^-j, exactly: the digits beyond the
/// scale contribute the closed tail 2^-k (their terms are all 1).
Dyadic a_exact(Quad4 x);

struct SeriesValue {
  double value = 0;
  double error_bound = 0;
};

/// Truncated series for arbitrary positive reals (exact dyadic input taken
/// from the double's bits); absolute error <= 2^(1-terms).
/// Requires 1 <= terms <= 60 and 4^terms * x < 2^126.
SeriesValue a_series_float(double x, int terms);

struct LambdaValue {
  Quad4 x;
  Dyadic numerator;    // rho(x) + a(x), exact
  long double approx;  // numerator / sqrt(x)
};

/// lambda(x) = (rho(x) + a(x)) / sqrt(x), numerator exact.
LambdaValue lambda_exact(Quad4 x);

/// Decimal rendering of numerator/sqrt(x) with `digits` significant digits,
/// exact integer square root underneath; trailing zeros trimmed.
std::string lambda_decimal(const LambdaValue& v, int digits);

/// Quotients rho(4^k x)/sqrt(4^k x) for k = 1..k_max (the defining limit).
/// Throws std::overflow_error if 4^k_max x leaves the 64-bit range.
std::vector<std::pair<int, double>> lambda_limit_quotients(Quad4 x, int k_max);

struct EndpointViolation {
  std::uint64_t z = 0;
  Dyadic got;
  Dyadic want;
};

/// Checks a(z 4^-k) - a((z+1) 4^-k) against -2^-k (z <= 4^k-2) and
/// 1 - 2^-k (z = 4^k-1) for every 1 <= z <= 4^k-1.
std::vector<EndpointViolation> endpoint_difference_violations(int k);

/// Same sweep for the magnitude only: |a(z 4^-k) - a((z+1) 4^-k)| = 2^-k
/// for z <= 4^k-2 (and 1-2^-k at the right edge).
std::vector<EndpointViolation> endpoint_magnitude_violations(int k);

/// Max of |a(x)-a(y)| / sqrt(|x-y|) over `trials` random pairs of distinct
/// grid points z 4^-k, z in [1, 4^k-1].  Deterministic for a fixed seed.
double holder_ratio_scan(int k, std::uint64_t trials,
                         std::uint64_t seed = 0x5eed);

/// Ratio for one specific pair.
double holder_ratio(Quad4 x, Quad4 y);

/// Exact numerator form of lambda(4x) = lambda(x):
/// rho(4x) + a(4x) == 2 (rho(x) + a(x)).
bool self_similarity_holds(Quad4 x);

}  // namespace rs

#endif
