#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <stdexcept>

#include "rs/boxdim.hpp"
#include "rs/complexity.hpp"
#include "rs/lambda.hpp"
#include "rs/regularity.hpp"
#include "rs/rudin.hpp"
#include "rs/verify.hpp"
#include "rs/words.hpp"

namespace py = pybind11;

namespace {

rs::Quad4 parse_q4(const std::string& s) {
  auto q = rs::Quad4::parse(s);
  if (!q) throw std::invalid_argument("expected P or P/4^K, got: " + s);
  return *q;
}

rs::SeqKind kind_of(const std::string& s) {
  if (s == "r") return rs::SeqKind::R;
  if (s == "rprime") return rs::SeqKind::RPrime;
  throw std::invalid_argument("seq must be r or rprime");
}

rs::ExtremalFlavor flavor_of(const std::string& s) {
  if (s == "w") return rs::ExtremalFlavor::W;
  if (s == "wtilde") return rs::ExtremalFlavor::WTilde;
  throw std::invalid_argument("flavor must be w or wtilde");
}

rs::SeqAccessor accessor_of(const std::string& name) {
  if (name == "deltaM")
    return [](std::uint64_t n) { return (long long)rs::delta_max_sum(n); };
  if (name == "r")
    return [](std::uint64_t n) { return (long long)rs::rudin_shapiro(n); };
  if (name == "rprime")
    return
        [](std::uint64_t n) { return (long long)rs::rudin_shapiro_prime(n); };
  if (name == "M")
    return [](std::uint64_t n) { return rs::max_window_sum(n); };
  if (name == "rho")
    return [](std::uint64_t n) { return (long long)rs::abelian_complexity(n); };
  throw std::invalid_argument("unknown sequence: " + name);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Rudin-Shapiro abelian complexity: recurrences, automata, "
            "exact lambda evaluation, box dimension";

  m.def("r", &rs::rudin_shapiro, py::arg("n"));
  m.def("r_prime", &rs::rudin_shapiro_prime, py::arg("n"));
  m.def(
      "s_prefix",
      [](std::size_t len) { return rs::to_string(rs::fixed_point_prefix(len)); },
      py::arg("len"));
  m.def("mahler_check", &rs::mahler_check, py::arg("limit"));

  m.def("M", &rs::max_window_sum, py::arg("n"));
  m.def("m", &rs::min_window_sum, py::arg("n"));
  m.def("rho", &rs::abelian_complexity, py::arg("n"));
  m.def("delta_M", &rs::delta_max_sum, py::arg("n"));
  m.def(
      "window_sum",
      [](const std::string& seq, std::uint64_t i, std::uint64_t n) {
        return rs::window_sum(rs::SignSeq{kind_of(seq)}, i, n);
      },
      py::arg("seq"), py::arg("i"), py::arg("n"));
  m.def(
      "brute_extrema",
      [](const std::string& seq, std::uint64_t n) {
        rs::ExtremaReport rep = rs::brute_extrema(rs::SignSeq{kind_of(seq)}, n);
        py::dict d;
        d["n"] = rep.n;
        d["max"] = rep.max_sum;
        d["min"] = rep.min_sum;
        d["distinct"] = rep.distinct_sums;
        d["prefix_len"] = rep.prefix_len;
        d["stabilized"] = rep.stabilized;
        return d;
      },
      py::arg("seq"), py::arg("n"));
  m.def(
      "sum_identity_violations",
      [](std::uint64_t i_max, std::uint64_t n_max) {
        auto v = rs::sum_identity_violations(i_max, n_max);
        std::vector<std::tuple<int, std::uint64_t, std::uint64_t>> out;
        out.reserve(v.size());
        for (const auto& x : v) out.emplace_back(x.identity, x.i, x.n);
        return out;
      },
      py::arg("i_max"), py::arg("n_max"));

  m.def(
      "extremal_word",
      [](std::uint64_t n, const std::string& flavor) {
        return rs::to_string(rs::build_extremal(n, flavor_of(flavor)).word);
      },
      py::arg("n"), py::arg("flavor"));
  m.def(
      "verify_extremal",
      [](std::uint64_t n, const std::string& flavor) {
        return rs::verify_extremal(n, flavor_of(flavor));
      },
      py::arg("n"), py::arg("flavor"));

  m.def("fig2_eval",
        [](std::uint64_t n) { return rs::fig2_automaton().eval(n); },
        py::arg("n"));
  m.def(
      "kernel_closure",
      [](const std::string& seq, int base, std::uint32_t prefix,
         std::size_t cap) {
        rs::KernelClosure c =
            rs::kernel_closure(accessor_of(seq), base, prefix, cap);
        return py::make_tuple(c.closed, c.nodes.size());
      },
      py::arg("seq"), py::arg("base") = 2, py::arg("prefix") = 4096,
      py::arg("cap") = 64);
  m.def(
      "linear_representation",
      [](const std::string& seq, int base, std::uint32_t prefix,
         std::size_t cap, std::uint64_t verify_to) {
        rs::SeqAccessor f = accessor_of(seq);
        rs::LinRep rep = rs::guess_linear_representation(f, base, prefix, cap);
        py::dict d;
        d["finitely_generated"] = rep.finitely_generated;
        d["rank"] = rep.rank();
        d["relations"] = rep.relations.size();
        d["verified"] = rep.finitely_generated &&
                        rs::verify_linear_representation(rep, f, verify_to);
        return d;
      },
      py::arg("seq"), py::arg("base") = 2, py::arg("prefix") = 4096,
      py::arg("cap") = 64, py::arg("verify_to") = 100000);

  m.def(
      "a_exact",
      [](const std::string& x) {
        rs::Dyadic a = rs::a_exact(parse_q4(x));
        return py::make_tuple(a.q, std::uint64_t(1) << a.j);
      },
      py::arg("x"), "a(x) as an exact (numerator, denominator) pair");
  m.def(
      "lambda_value",
      [](const std::string& x) {
        return double(rs::lambda_exact(parse_q4(x)).approx);
      },
      py::arg("x"));
  m.def(
      "lambda_decimal",
      [](const std::string& x, int digits) {
        return rs::lambda_decimal(rs::lambda_exact(parse_q4(x)), digits);
      },
      py::arg("x"), py::arg("digits") = 12);
  m.def(
      "self_similarity_holds",
      [](const std::string& x) { return rs::self_similarity_holds(parse_q4(x)); },
      py::arg("x"));
  m.def(
      "endpoint_violations",
      [](int k) { return rs::endpoint_difference_violations(k).size(); },
      py::arg("k"));
  m.def(
      "endpoint_magnitude_violations",
      [](int k) { return rs::endpoint_magnitude_violations(k).size(); },
      py::arg("k"));
  m.def("holder_scan", &rs::holder_ratio_scan, py::arg("k") = 10,
        py::arg("trials") = 100000, py::arg("seed") = 0x5eed);

  m.def(
      "dimension_report",
      [](const std::string& alpha, const std::string& beta, int jmin,
         int jmax) {
        rs::BoxCountReport rep =
            rs::dimension_report(parse_q4(alpha), parse_q4(beta), jmin, jmax);
        py::dict d;
        d["entries"] = rep.entries;
        d["slope"] = rep.slope;
        d["r2"] = rep.r2;
        d["slope_refined"] = rep.slope_refined;
        d["slope_rescaled"] = rep.slope_rescaled;
        d["scale_invariant"] = rep.scale_invariant;
        return d;
      },
      py::arg("alpha"), py::arg("beta"), py::arg("jmin") = 3,
      py::arg("jmax") = 7);
}
