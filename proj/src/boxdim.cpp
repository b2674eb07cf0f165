#include "rs/boxdim.hpp"

#include <cmath>
#include <stdexcept>

#include "rs/complexity.hpp"

namespace rs {

double GraphSample::x_at(std::size_t i) const {
  return double(z_lo + std::int64_t(i)) / double(std::uint64_t(1) << (2 * m));
}

Quad4 GraphSample::grid_point(std::size_t i) const {
  std::int64_t z = z_lo + std::int64_t(i);
  if (z < 1) throw std::domain_error("grid_point: x must be positive");
  return Quad4::make(std::uint64_t(z), m);
}

namespace {

std::int64_t grid_index(Quad4 v, std::uint32_t m, const char* what) {
  if (v.k > m)
    throw std::invalid_argument(std::string(what) +
                                " is finer than the sampling grid");
  std::uint64_t z = v.p << (2 * (m - v.k));
  if ((z >> (2 * (m - v.k))) != v.p || z > (std::uint64_t(1) << 62))
    throw std::overflow_error("sample_graph: grid index out of range");
  return std::int64_t(z);
}

}  // namespace

GraphSample sample_graph(Quad4 alpha, Quad4 beta, std::uint32_t m,
                         std::size_t point_cap) {
  if (m < 1 || m > 26) throw std::invalid_argument("sample_graph: bad m");
  std::int64_t z_lo = grid_index(alpha, m, "alpha");
  std::int64_t z_hi = grid_index(beta, m, "beta");
  if (z_lo >= z_hi)
    throw std::invalid_argument("sample_graph: need alpha < beta");
  std::uint64_t count = std::uint64_t(z_hi - z_lo) + 1;
  if (count > point_cap)
    throw std::runtime_error("sample_graph: grid exceeds point cap");
  GraphSample s;
  s.m = m;
  s.z_lo = z_lo;
  s.values.resize(count);
  const double denom = double(std::uint64_t(1) << (2 * m));
  for (std::int64_t z = z_lo; z <= z_hi; ++z) {
    LambdaValue lv = lambda_exact(Quad4::make(std::uint64_t(z), m));
    double num = lv.numerator.to_double();
    s.values[std::size_t(z - z_lo)] = num / std::sqrt(double(z) / denom);
  }
  return s;
}

GraphSample sample_function(const std::function<double(double)>& f,
                            std::int64_t z_lo, std::int64_t z_hi,
                            std::uint32_t m) {
  if (z_lo >= z_hi) throw std::invalid_argument("sample_function: empty grid");
  GraphSample s;
  s.m = m;
  s.z_lo = z_lo;
  s.values.resize(std::size_t(z_hi - z_lo) + 1);
  const double denom = double(std::uint64_t(1) << (2 * m));
  for (std::int64_t z = z_lo; z <= z_hi; ++z)
    s.values[std::size_t(z - z_lo)] = f(double(z) / denom);
  return s;
}

std::uint64_t box_count(const GraphSample& s, std::uint32_t j) {
  if (s.m < j + 2)
    throw std::invalid_argument("box_count: sample resolution too coarse");
  const std::int64_t w = std::int64_t(1) << (2 * (s.m - j));
  const std::int64_t z_lo = s.z_lo, z_hi = s.z_hi();
  std::int64_t c_lo = z_lo / w;
  std::int64_t c_hi = (z_hi % w == 0) ? z_hi / w - 1 : z_hi / w;
  const double scale = double(std::uint64_t(1) << (2 * j));  // 1/delta
  std::uint64_t total = 0;
  for (std::int64_t c = c_lo; c <= c_hi; ++c) {
    std::int64_t a = std::max(z_lo, c * w);
    std::int64_t b = std::min(z_hi, (c + 1) * w);  // closed column
    double mx = s.values[std::size_t(a - z_lo)];
    double mn = mx;
    for (std::int64_t z = a + 1; z <= b; ++z) {
      double v = s.values[std::size_t(z - z_lo)];
      if (v > mx) mx = v;
      if (v < mn) mn = v;
    }
    total += std::uint64_t(std::floor(mx * scale) - std::floor(mn * scale)) + 1;
  }
  return total;
}

FitResult fit_dimension(const std::vector<std::pair<double, double>>& entries) {
  if (entries.size() < 3)
    throw std::invalid_argument("fit_dimension: need at least 3 entries");
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (!(entries[i].first > 0) || !(entries[i].second > 0))
      throw std::invalid_argument("fit_dimension: entries must be positive");
    for (std::size_t j = i + 1; j < entries.size(); ++j)
      if (entries[i].first == entries[j].first)
        throw std::invalid_argument("fit_dimension: deltas must be distinct");
  }
  const std::size_t n = entries.size();
  double mx = 0, my = 0;
  std::vector<double> xs(n), ys(n);
  for (std::size_t i = 0; i < n; ++i) {
    xs[i] = std::log(1.0 / entries[i].first);
    ys[i] = std::log(entries[i].second);
    mx += xs[i];
    my += ys[i];
  }
  mx /= double(n);
  my /= double(n);
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }
  FitResult fit;
  fit.slope = sxy / sxx;
  double ss_res = 0, ss_tot = 0;
  for (std::size_t i = 0; i < n; ++i) {
    double pred = my + fit.slope * (xs[i] - mx);
    ss_res += (ys[i] - pred) * (ys[i] - pred);
    ss_tot += (ys[i] - my) * (ys[i] - my);
  }
  fit.r2 = ss_tot > 0 ? 1.0 - ss_res / ss_tot : 1.0;
  return fit;
}

namespace {

std::pair<std::vector<std::pair<double, std::uint64_t>>, FitResult>
count_and_fit(Quad4 alpha, Quad4 beta, int j_min, int j_max, std::uint32_t m,
              std::size_t point_cap) {
  GraphSample s = sample_graph(alpha, beta, m, point_cap);
  std::vector<std::pair<double, std::uint64_t>> entries;
  std::vector<std::pair<double, double>> fit_in;
  for (int j = j_min; j <= j_max; ++j) {
    double delta = std::ldexp(1.0, -2 * j);
    std::uint64_t n = box_count(s, std::uint32_t(j));
    entries.emplace_back(delta, n);
    fit_in.emplace_back(delta, double(n));
  }
  return {std::move(entries), fit_dimension(fit_in)};
}

}  // namespace

BoxCountReport dimension_report(Quad4 alpha, Quad4 beta, int j_min, int j_max,
                                const DimensionOptions& opts) {
  if (j_min < 1 || j_min >= j_max)
    throw std::invalid_argument("dimension_report: need 1 <= j_min < j_max");
  const std::uint32_t m = std::uint32_t(j_max) + opts.oversample;
  BoxCountReport rep;
  auto [entries, fit] =
      count_and_fit(alpha, beta, j_min, j_max, m, opts.point_cap);
  rep.entries = std::move(entries);
  rep.slope = fit.slope;
  rep.r2 = fit.r2;
  rep.slope_refined = fit.slope;
  if (opts.refine) {
    auto [e2, f2] =
        count_and_fit(alpha, beta, j_min, j_max, m + 1, opts.point_cap);
    rep.slope_refined = f2.slope;
  }
  rep.slope_rescaled = fit.slope;
  rep.scale_invariant = true;
  if (opts.rescale_check) {
    auto [e4, f4] = count_and_fit(alpha.times4(), beta.times4(), j_min, j_max,
                                  m, opts.point_cap);
    rep.slope_rescaled = f4.slope;
    rep.scale_invariant = std::fabs(rep.slope - rep.slope_rescaled) <= 0.05;
  }
  return rep;
}

}  // namespace rs
