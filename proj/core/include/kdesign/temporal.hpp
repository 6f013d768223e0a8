#pragma once

#include <vector>

#include "kdesign/rng.hpp"
#include "kdesign/types.hpp"

namespace kdesign {

enum class TimeDistribution { Uniform };

/// Sampling window for evolution times: i.i.d. draws from [0, T].
struct TimeWindow {
  double duration = 0.0;
  TimeDistribution distribution = TimeDistribution::Uniform;

  void validate() const;
};

/// `count` i.i.d. times from the window, deterministic given the stream.
std::vector<double> sample_times(const TimeWindow& window, int count,
                                 Philox& rng);

/// Filter weight I_T(dE) = sinc^2(dE T / 2), the squared characteristic
/// function of the uniform window. Evaluates the removable singularity at
/// dE = 0 as 1; switches to a Taylor expansion near zero to avoid
/// cancellation. Value in [0, 1].
double filter_value(double delta_e, const TimeWindow& window);

/// Mean off-diagonal filter weight over all spectral gaps.
struct LeakageReport {
  double duration = 0.0;
  double epsilon = 0.0;
  int dim = 0;
};

/// epsilon_H(T) = (1 / (D (D-1))) sum_{m != m'} I_T(E_m - E_m'); D >= 2.
LeakageReport epsilon_h(const RVector& spectrum, const TimeWindow& window);

/// Diagnostic time scale D / spectral width, beyond which the filter starts
/// to resolve individual levels.
double heisenberg_scale(const RVector& spectrum);

}  // namespace kdesign
