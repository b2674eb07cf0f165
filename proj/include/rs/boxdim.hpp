#ifndef RS_BOXDIM_HPP
#define RS_BOXDIM_HPP

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "rs/lambda.hpp"

namespace rs {

/// Graph sampled on the grid x = z 4^-m for z in [z_lo, z_hi].
struct GraphSample {
  std::uint32_t m = 1;
  std::int64_t z_lo = 0;
  std::vector<double> values;

  std::size_t size() const { return values.size(); }
  std::int64_t z_hi() const { return z_lo + std::int64_t(values.size()) - 1; }
  double x_at(std::size_t i) const;
  Quad4 grid_point(std::size_t i) const;  // requires z_lo + i >= 1
};

/// lambda sampled exactly at every grid point of [alpha, beta].
/// alpha and beta must lie on the 4^-m grid; throws if the grid exceeds
/// point_cap points.
GraphSample sample_graph(Quad4 alpha, Quad4 beta, std::uint32_t m,
                         std::size_t point_cap = std::size_t(1) << 24);

/// Arbitrary function sampled on the same kind of grid (calibration, tests).
GraphSample sample_function(const std::function<double(double)>& f,
                            std::int64_t z_lo, std::int64_t z_hi,
                            std::uint32_t m);

/// Column-oscillation box count at delta = 4^-j: every width-delta column
/// (closed on both sides, so boundary samples belong to both neighbours)
/// contributes floor(max/delta) - floor(min/delta) + 1.
/// Requires m >= j + 2 (at least 4^2 samples per column).
std::uint64_t box_count(const GraphSample& s, std::uint32_t j);

struct FitResult {
  double slope = 0;
  double r2 = 0;
};

/// Least-squares slope of log N against log(1/delta).
/// Requires >= 3 entries with distinct deltas.
FitResult fit_dimension(const std::vector<std::pair<double, double>>& entries);

struct BoxCountReport {
  std::vector<std::pair<double, std::uint64_t>> entries;  // (delta, N), delta decreasing
  double slope = 0;
  double r2 = 0;
  double slope_refined = 0;   // same counts one sampling level finer
  double slope_rescaled = 0;  // report for (4 alpha, 4 beta)
  bool scale_invariant = false;  // |slope - slope_rescaled| <= 0.05
};

struct DimensionOptions {
  std::uint32_t oversample = 2;  // sample at 4^-(j_max + oversample)
  std::size_t point_cap = std::size_t(1) << 24;
  bool refine = true;
  bool rescale_check = true;
};

/// Counts lambda's graph over [alpha, beta] at delta = 4^-j_min .. 4^-j_max,
/// fits the dimension, and cross-checks the slope against the rescaled
/// interval (4 alpha, 4 beta) per the self-similarity of lambda.
BoxCountReport dimension_report(Quad4 alpha, Quad4 beta, int j_min, int j_max,
                                const DimensionOptions& opts = {});

}  // namespace rs

#endif
