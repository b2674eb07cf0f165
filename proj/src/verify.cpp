#include "rs/verify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "rs/complexity.hpp"

namespace rs {

namespace {

void record(SuiteResult& r, bool ok, const std::string& what) {
  ++r.checks;
  if (!ok) {
    ++r.violations;
    if (r.detail.empty()) r.detail = what;
  }
}

}  // namespace

SuiteResult suite_recurrence(std::uint64_t n_max, const SeqAccessor& m_fn_in) {
  SeqAccessor m_fn = m_fn_in
                         ? m_fn_in
                         : SeqAccessor([](std::uint64_t n) {
                             return max_window_sum(n);
                           });
  SuiteResult res{"recurrence"};
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    long long M = m_fn(n);
    for (SeqKind kind : {SeqKind::R, SeqKind::RPrime}) {
      ExtremaReport rep = brute_extrema(SignSeq{kind}, n);
      const char* tag = kind == SeqKind::R ? "r" : "r'";
      record(res, rep.stabilized, "unstabilized brute report");
      record(res, rep.max_sum == M,
             "M mismatch at n=" + std::to_string(n) + " (" + tag + ")");
      record(res, rep.max_sum + rep.min_sum == 0,
             "M+m != 0 at n=" + std::to_string(n) + " (" + tag + ")");
      record(res,
             (long long)rep.distinct_sums ==
                 (rep.max_sum - rep.min_sum) / 2 + 1,
             "rho mismatch at n=" + std::to_string(n) + " (" + tag + ")");
    }
    record(res, delta_max_sum(n) == m_fn(n + 1) - M,
           "dM mismatch at n=" + std::to_string(n));
  }
  return res;
}

SuiteResult suite_lemma4(std::uint64_t bound) {
  SuiteResult res{"lemma4"};
  auto violations = sum_identity_violations(bound, bound);
  res.checks = 16 * bound * (bound - 1);
  res.violations = violations.size();
  if (!violations.empty()) {
    std::ostringstream os;
    os << "identity " << violations[0].identity << " at (i,n)=("
       << violations[0].i << "," << violations[0].n << ")";
    res.detail = os.str();
  }
  return res;
}

SuiteResult suite_extremal(std::uint64_t n_max) {
  SuiteResult res{"extremal"};
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    for (ExtremalFlavor fl : {ExtremalFlavor::W, ExtremalFlavor::WTilde}) {
      record(res, verify_extremal(n, fl),
             std::string(fl == ExtremalFlavor::W ? "W" : "W~") + " fails at n=" +
                 std::to_string(n));
    }
  }
  return res;
}

SuiteResult suite_automaton(std::uint64_t n_max, const Dfao& d,
                            const SeqAccessor& delta_fn_in) {
  SeqAccessor delta_fn =
      delta_fn_in ? delta_fn_in : SeqAccessor([](std::uint64_t n) {
        return (long long)delta_max_sum(n);
      });
  SuiteResult res{"automaton"};
  for (std::uint64_t n = 0; n < n_max; ++n) {
    record(res, d.eval(n) == delta_fn(n),
           "dfao != dM at n=" + std::to_string(n));
  }
  return res;
}

SuiteResult suite_automaton(std::uint64_t n_max) {
  return suite_automaton(n_max, fig2_automaton(), nullptr);
}

SuiteResult suite_endpoint(int k) {
  SuiteResult res{"endpoint"};
  for (int kk = 1; kk <= k; ++kk) {
    auto v = endpoint_difference_violations(kk);
    res.checks += (std::uint64_t(1) << (2 * kk)) - 1;
    res.violations += v.size();
    if (!v.empty() && res.detail.empty()) {
      std::ostringstream os;
      os << "z=" << v[0].z << " at k=" << kk << ": got "
         << v[0].got.to_string() << ", stated " << v[0].want.to_string()
         << " (magnitude sweep is clean)";
      res.detail = os.str();
    }
  }
  return res;
}

SuiteResult suite_selfsim(std::uint64_t points) {
  SuiteResult res{"selfsim"};
  for (std::uint64_t z = 1; z <= points; ++z) {
    record(res, self_similarity_holds(Quad4::make(z, 6)),
           "self-similarity fails at z/4^6, z=" + std::to_string(z));
  }
  return res;
}

SuiteResult suite_holder(std::uint64_t trials, int k, std::uint64_t seed) {
  SuiteResult res{"holder"};
  double mx = holder_ratio_scan(k, trials, seed);
  res.checks = trials + 1;
  if (mx > 10.0) {
    ++res.violations;
    res.detail = "sampled ratio " + std::to_string(mx) + " exceeds 10";
  }
  // adjacent pair: |a(x)-a(y)| = 2^-k over a gap of 4^-k, ratio exactly 1
  double adj = holder_ratio(Quad4::make(5, std::uint32_t(k)),
                            Quad4::make(6, std::uint32_t(k)));
  if (adj != 1.0) {
    ++res.violations;
    if (res.detail.empty()) res.detail = "adjacent ratio != 1";
  }
  if (res.detail.empty()) {
    std::ostringstream os;
    os << "max ratio " << mx;
    res.detail = os.str();
  }
  return res;
}

std::vector<std::string> suite_names() {
  return {"recurrence", "lemma4",  "extremal", "automaton",
          "endpoint",   "selfsim", "holder"};
}

namespace {

int ilog4(std::uint64_t n) {
  int k = 0;
  while (n >= 4) {
    n /= 4;
    ++k;
  }
  return k;
}

}  // namespace

SuiteResult run_suite(const std::string& name, std::uint64_t bound) {
  if (name == "recurrence") return suite_recurrence(bound);
  if (name == "lemma4") return suite_lemma4(std::max<std::uint64_t>(2, bound));
  if (name == "extremal") return suite_extremal(bound);
  if (name == "automaton") return suite_automaton(bound);
  if (name == "endpoint")
    return suite_endpoint(
        bound <= 12 ? std::max(1, int(bound)) : std::clamp(ilog4(bound), 1, 8));
  if (name == "selfsim") return suite_selfsim(bound);
  if (name == "holder") return suite_holder(bound);
  throw std::invalid_argument("unknown suite: " + name);
}

}  // namespace rs
