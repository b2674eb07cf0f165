// rsabelian: Rudin-Shapiro abelian-complexity toolkit.
// Subcommands: rs, complexity, words, kernel, lambda, boxdim, verify.
// Exit codes: 0 ok, 1 verification failure, 2 usage error.

#include <CLI11.hpp>
#include <cinttypes>
#include <cstdio>
#include <string>

#include "rs/boxdim.hpp"
#include "rs/complexity.hpp"
#include "rs/lambda.hpp"
#include "rs/regularity.hpp"
#include "rs/rudin.hpp"
#include "rs/verify.hpp"
#include "rs/words.hpp"

namespace {

int usage_error(const std::string& flag, const std::string& msg) {
  std::fprintf(stderr, "error: %s: %s\n", flag.c_str(), msg.c_str());
  return 2;
}

int cmd_rs(const std::string& seq, std::uint64_t count) {
  if (seq == "s") {
    rs::Word w = rs::fixed_point_prefix(count);
    for (rs::Letter l : w) std::printf("%c\n", rs::to_char(l));
    return 0;
  }
  rs::SignSeq s{seq == "r" ? rs::SeqKind::R : rs::SeqKind::RPrime};
  auto terms = rs::materialize(s.kind, count);
  for (int v : terms) std::printf("%c\n", v > 0 ? '+' : '-');
  return 0;
}

int cmd_complexity(std::uint64_t from, std::uint64_t to, bool brute) {
  if (from > to) return usage_error("--from/--to", "need from <= to");
  std::printf("n,M,m,rho,deltaM\n");
  int exit_code = 0;
  for (std::uint64_t n = from; n <= to; ++n) {
    long long M = rs::max_window_sum(n);
    long long m = rs::min_window_sum(n);
    std::uint64_t rho = rs::abelian_complexity(n);
    int dM = rs::delta_max_sum(n);
    if (brute && n >= 1) {
      for (rs::SeqKind kind : {rs::SeqKind::R, rs::SeqKind::RPrime}) {
        rs::ExtremaReport rep = rs::brute_extrema(rs::SignSeq{kind}, n);
        if (rep.max_sum != M || rep.min_sum != m || rep.distinct_sums != rho) {
          std::fprintf(stderr,
                       "brute mismatch at n=%" PRIu64
                       ": got M=%lld m=%lld rho=%" PRIu64 "\n",
                       n, rep.max_sum, rep.min_sum, rep.distinct_sums);
          exit_code = 1;
        }
      }
    }
    std::printf("%" PRIu64 ",%lld,%lld,%" PRIu64 ",%d\n", n, M, m, rho, dM);
  }
  return exit_code;
}

int cmd_words(std::uint64_t n, const std::string& flavor) {
  rs::ExtremalFlavor fl =
      flavor == "w" ? rs::ExtremalFlavor::W : rs::ExtremalFlavor::WTilde;
  rs::ExtremalWord w = rs::build_extremal(n, fl);
  rs::ExtremalCheck chk = rs::verify_extremal_detail(n, fl);
  long long sum = fl == rs::ExtremalFlavor::W ? rs::coded_sum(w.word)
                                              : rs::coded_sum_prime(w.word);
  std::printf("%s\n", rs::to_string(w.word).c_str());
  std::printf("n=%" PRIu64 " flavor=%s sum=%lld M=%lld length=%s sum=%s "
              "factor=%s boundary=%s verdict=%s\n",
              n, flavor.c_str(), sum, w.target_sum,
              chk.length_ok ? "ok" : "bad", chk.sum_ok ? "ok" : "bad",
              chk.factor_ok ? "ok" : "bad", chk.boundary_ok ? "ok" : "bad",
              chk.ok() ? "pass" : "fail");
  return chk.ok() ? 0 : 1;
}

rs::SeqAccessor accessor_for(const std::string& name) {
  if (name == "deltaM")
    return [](std::uint64_t n) { return (long long)rs::delta_max_sum(n); };
  if (name == "r")
    return [](std::uint64_t n) { return (long long)rs::rudin_shapiro(n); };
  if (name == "rprime")
    return
        [](std::uint64_t n) { return (long long)rs::rudin_shapiro_prime(n); };
  if (name == "M")
    return [](std::uint64_t n) { return rs::max_window_sum(n); };
  return [](std::uint64_t n) { return (long long)rs::abelian_complexity(n); };
}

int cmd_kernel(const std::string& seq, int base, std::uint32_t prefix,
               std::size_t cap, std::uint64_t verify_to) {
  rs::SeqAccessor f = accessor_for(seq);
  std::printf("seq=%s base=%d prefix=%u cap=%zu\n", seq.c_str(), base, prefix,
              cap);
  rs::KernelClosure c = rs::kernel_closure(f, base, prefix, cap);
  std::printf("closure=%s nodes=%zu\n", c.closed ? "closed" : "open",
              c.nodes.size());
  int exit_code = 0;
  if (seq == "M" || seq == "rho") {
    rs::LinRep rep = rs::guess_linear_representation(f, base, prefix, cap);
    if (!rep.finitely_generated) {
      std::printf("linrep=not-finitely-generated-at-cap\n");
      return 1;
    }
    bool ok = rs::verify_linear_representation(rep, f, verify_to);
    std::printf("linrep rank=%zu relations=%zu verified_to=%" PRIu64
                " verdict=%s\n",
                rep.rank(), rep.relations.size(), verify_to,
                ok ? "pass" : "fail");
    if (!ok) exit_code = 1;
  }
  return exit_code;
}

int cmd_lambda(const std::string& from_s, const std::string& to_s,
               const std::string& step_s, int precision) {
  auto from = rs::Quad4::parse(from_s);
  if (!from) return usage_error("--from", "expected P or P/4^K");
  auto to = rs::Quad4::parse(to_s);
  if (!to) return usage_error("--to", "expected P or P/4^K");
  // step literal 4^-M
  std::uint32_t step_m = 0;
  {
    std::string_view sv = step_s;
    if (sv.size() < 4 || sv.substr(0, 3) != "4^-")
      return usage_error("--step", "expected 4^-M");
    std::uint64_t v = 0;
    for (char ch : sv.substr(3)) {
      if (ch < '0' || ch > '9') return usage_error("--step", "expected 4^-M");
      v = v * 10 + std::uint64_t(ch - '0');
    }
    if (v > 30) return usage_error("--step", "M too large");
    step_m = std::uint32_t(v);
  }
  std::uint32_t K = std::max({from->k, to->k, step_m});
  std::uint64_t z0 = from->p << (2 * (K - from->k));
  std::uint64_t z1 = to->p << (2 * (K - to->k));
  if (z0 > z1) return usage_error("--from/--to", "need from <= to");
  std::uint64_t step = std::uint64_t(1) << (2 * (K - step_m));
  std::printf("x,lambda\n");
  for (std::uint64_t z = z0; z <= z1; z += step) {
    rs::Quad4 x = rs::Quad4::make(z, K);
    rs::LambdaValue v = rs::lambda_exact(x);
    std::string lam = rs::lambda_decimal(v, precision);
    if (x.k == 0) {
      std::printf("%s,%s\n", x.to_string().c_str(), lam.c_str());
    } else {
      std::printf("%s;%s,%s\n", x.to_string().c_str(),
                  x.to_decimal_string().c_str(), lam.c_str());
    }
  }
  return 0;
}

int cmd_boxdim(const std::string& alpha_s, const std::string& beta_s,
               int jmin, int jmax, bool csv) {
  auto alpha = rs::Quad4::parse(alpha_s);
  if (!alpha) return usage_error("--alpha", "expected P or P/4^K");
  auto beta = rs::Quad4::parse(beta_s);
  if (!beta) return usage_error("--beta", "expected P or P/4^K");
  if (jmin < 1 || jmin >= jmax)
    return usage_error("--jmin/--jmax", "need 1 <= jmin < jmax");
  rs::BoxCountReport rep = rs::dimension_report(*alpha, *beta, jmin, jmax);
  if (csv) {
    std::printf("delta,count\n");
    for (std::size_t i = 0; i < rep.entries.size(); ++i) {
      rs::Quad4 d = rs::Quad4::make(1, std::uint32_t(jmin) + std::uint32_t(i));
      std::printf("%s,%" PRIu64 "\n", d.to_decimal_string().c_str(),
                  rep.entries[i].second);
    }
    return 0;
  }
  std::printf("interval=[%s,%s] jmin=%d jmax=%d sample=4^-%d\n",
              alpha->to_string().c_str(), beta->to_string().c_str(), jmin,
              jmax, jmax + 2);
  std::printf("delta,count\n");
  for (std::size_t i = 0; i < rep.entries.size(); ++i) {
    rs::Quad4 d = rs::Quad4::make(1, std::uint32_t(jmin) + std::uint32_t(i));
    std::printf("%s,%" PRIu64 "\n", d.to_decimal_string().c_str(),
                rep.entries[i].second);
  }
  std::printf("slope=%.4f\n", rep.slope);
  std::printf("r2=%.6f\n", rep.r2);
  std::printf("refined_slope=%.4f\n", rep.slope_refined);
  std::printf("rescaled_slope=%.4f scale_invariant=%s\n", rep.slope_rescaled,
              rep.scale_invariant ? "yes" : "no");
  return 0;
}

int cmd_verify(const std::string& suite, std::uint64_t bound) {
  std::uint64_t violations = 0;
  auto run_one = [&](const std::string& name) {
    rs::SuiteResult r = rs::run_suite(name, bound);
    std::printf("suite=%s checks=%" PRIu64 " violations=%" PRIu64 "%s%s\n",
                r.name.c_str(), r.checks, r.violations,
                r.detail.empty() ? "" : " detail=", r.detail.c_str());
    violations += r.violations;
  };
  if (suite == "all") {
    for (const auto& name : rs::suite_names()) run_one(name);
  } else {
    run_one(suite);
  }
  return violations == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rudin-Shapiro abelian complexity toolkit"};
  app.require_subcommand(1);

  auto* c_rs = app.add_subcommand("rs", "emit sequence terms, one per line");
  std::string rs_seq;
  std::uint64_t rs_count = 0;
  c_rs->add_option("--seq", rs_seq, "r | rprime | s")
      ->required()
      ->check(CLI::IsMember({"r", "rprime", "s"}));
  c_rs->add_option("--count", rs_count, "number of terms")->required();

  auto* c_cx = app.add_subcommand("complexity", "CSV n,M,m,rho,deltaM");
  std::uint64_t cx_from = 1, cx_to = 16;
  bool cx_brute = false;
  c_cx->add_option("--from", cx_from, "first n")->required();
  c_cx->add_option("--to", cx_to, "last n")->required();
  c_cx->add_flag("--brute", cx_brute, "cross-check rows by brute force");

  auto* c_w = app.add_subcommand("words", "extremal word and its verdict");
  std::uint64_t w_n = 1;
  std::string w_flavor;
  c_w->add_option("--n", w_n, "length")->required()->check(CLI::PositiveNumber);
  c_w->add_option("--flavor", w_flavor, "w | wtilde")
      ->required()
      ->check(CLI::IsMember({"w", "wtilde"}));

  auto* c_k = app.add_subcommand("kernel", "kernel closure / regularity witness");
  std::string k_seq;
  int k_base = 2;
  std::uint32_t k_prefix = 4096;
  std::size_t k_cap = 64;
  std::uint64_t k_verify = 100000;
  c_k->add_option("--seq", k_seq, "deltaM | r | rprime | M | rho")
      ->required()
      ->check(CLI::IsMember({"deltaM", "r", "rprime", "M", "rho"}));
  c_k->add_option("--base", k_base, "2 | 4")
      ->check(CLI::IsMember({2, 4}));
  c_k->add_option("--prefix", k_prefix, "fingerprint length (default 4096)");
  c_k->add_option("--cap", k_cap, "node cap (default 64)");
  c_k->add_option("--verify-to", k_verify, "relation sweep bound");

  auto* c_l = app.add_subcommand("lambda", "CSV x,lambda over a 4-adic grid");
  std::string l_from, l_to, l_step = "4^-0";
  int l_prec = 12;
  c_l->add_option("--from", l_from, "P or P/4^K")->required();
  c_l->add_option("--to", l_to, "P or P/4^K")->required();
  c_l->add_option("--step", l_step, "grid spacing, literal 4^-M");
  c_l->add_option("--precision", l_prec, "significant digits (default 12)")
      ->check(CLI::Range(1, 60));

  auto* c_b = app.add_subcommand("boxdim", "box-counting dimension report");
  std::string b_alpha, b_beta;
  int b_jmin = 3, b_jmax = 7;
  bool b_csv = false;
  c_b->add_option("--alpha", b_alpha, "P or P/4^K")->required();
  c_b->add_option("--beta", b_beta, "P or P/4^K")->required();
  c_b->add_option("--jmin", b_jmin, "coarsest delta 4^-jmin");
  c_b->add_option("--jmax", b_jmax, "finest delta 4^-jmax");
  c_b->add_flag("--csv", b_csv, "emit delta,count rows only");

  auto* c_v = app.add_subcommand("verify", "run invariant suites");
  std::string v_suite = "all";
  std::uint64_t v_bound = 512;
  c_v->add_option("--suite", v_suite, "suite name or all")
      ->check(CLI::IsMember({"all", "recurrence", "lemma4", "extremal",
                             "automaton", "endpoint", "selfsim", "holder"}));
  c_v->add_option("--n", v_bound, "sweep bound (default 512)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (c_rs->parsed()) return cmd_rs(rs_seq, rs_count);
    if (c_cx->parsed()) return cmd_complexity(cx_from, cx_to, cx_brute);
    if (c_w->parsed()) return cmd_words(w_n, w_flavor);
    if (c_k->parsed()) return cmd_kernel(k_seq, k_base, k_prefix, k_cap, k_verify);
    if (c_l->parsed()) return cmd_lambda(l_from, l_to, l_step, l_prec);
    if (c_b->parsed()) return cmd_boxdim(b_alpha, b_beta, b_jmin, b_jmax, b_csv);
    if (c_v->parsed()) return cmd_verify(v_suite, v_bound);
  } catch (const std::invalid_argument& e) {
    return usage_error("argument", e.what());
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 2;
}
