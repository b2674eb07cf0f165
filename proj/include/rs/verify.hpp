#ifndef RS_VERIFY_HPP
#define RS_VERIFY_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "rs/lambda.hpp"
#include "rs/regularity.hpp"

namespace rs {

struct SuiteResult {
  std::string name;
  std::uint64_t checks = 0;
  std::uint64_t violations = 0;
  std::string detail;  // first violation or summary line

  bool ok() const { return violations == 0; }
};

/// Brute-force extrema vs the recurrences, both sequences:
/// M, m = -M, rho = (M-m)/2+1, and dM(n) = M(n+1)-M(n), for 1 <= n <= n_max.
/// The M accessor is injectable so tests can plant a fault.
SuiteResult suite_recurrence(std::uint64_t n_max,
                             const SeqAccessor& m_fn = nullptr);

/// The sixteen window-sum identities on 0 <= i < bound, 1 <= n < bound.
SuiteResult suite_lemma4(std::uint64_t bound);

/// build + verify the extremal words for 1 <= n <= n_max, both flavors.
SuiteResult suite_extremal(std::uint64_t n_max);

/// DFAO output vs the dM recurrence for 0 <= n < n_max.
SuiteResult suite_automaton(std::uint64_t n_max, const Dfao& d,
                            const SeqAccessor& delta_fn = nullptr);
SuiteResult suite_automaton(std::uint64_t n_max);

/// Endpoint-difference sweep (the literal signed identity) for 1 <= kk <= k.
SuiteResult suite_endpoint(int k);

/// Exact numerator self-similarity on grid points z 4^-6, z = 1..points.
SuiteResult suite_selfsim(std::uint64_t points);

/// Hoelder ratio scan: `trials` random pairs at grid depth k; the single
/// violation condition is a ratio above 10.
SuiteResult suite_holder(std::uint64_t trials, int k = 10,
                         std::uint64_t seed = 0x5eed);

std::vector<std::string> suite_names();

/// Runs one named suite ("recurrence", "lemma4", ...) with `bound` mapped to
/// its natural parameter.  Unknown names throw std::invalid_argument.
SuiteResult run_suite(const std::string& name, std::uint64_t bound);

}  // namespace rs

#endif
