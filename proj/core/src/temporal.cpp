#include "kdesign/temporal.hpp"

#include <cmath>
#include <stdexcept>

namespace kdesign {

void TimeWindow::validate() const {
  if (!(duration > 0.0)) {
    throw std::invalid_argument("TimeWindow: duration must be > 0");
  }
}

std::vector<double> sample_times(const TimeWindow& window, int count,
                                 Philox& rng) {
  window.validate();
  if (count < 1) throw std::invalid_argument("sample_times: count must be >= 1");
  std::vector<double> times(static_cast<std::size_t>(count));
  for (double& t : times) t = window.duration * rng.next_unit();
  return times;
}

double filter_value(double delta_e, const TimeWindow& window) {
  window.validate();
  const double x = 0.5 * delta_e * window.duration;
  const double ax = std::abs(x);
  if (ax < 1e-4) {
    const double x2 = x * x;
    // sinc^2(x) = 1 - x^2/3 + 2 x^4/45 + O(x^6)
    return 1.0 - x2 / 3.0 + 2.0 * x2 * x2 / 45.0;
  }
  const double s = std::sin(x) / x;
  return s * s;
}

LeakageReport epsilon_h(const RVector& spectrum, const TimeWindow& window) {
  window.validate();
  const int d = static_cast<int>(spectrum.size());
  if (d < 2) {
    throw std::invalid_argument("epsilon_h: need D >= 2 for off-diagonal pairs");
  }
  double sum = 0.0;
  for (int m = 0; m < d; ++m) {
    for (int n = m + 1; n < d; ++n) {
      sum += filter_value(spectrum(m) - spectrum(n), window);
    }
  }
  const double eps = 2.0 * sum / (static_cast<double>(d) * (d - 1));
  return LeakageReport{window.duration, eps, d};
}

double heisenberg_scale(const RVector& spectrum) {
  const int d = static_cast<int>(spectrum.size());
  if (d < 2) throw std::invalid_argument("heisenberg_scale: need D >= 2");
  const double width = spectrum.maxCoeff() - spectrum.minCoeff();
  if (!(width > 0)) {
    throw std::invalid_argument("heisenberg_scale: spectrum has zero width");
  }
  return static_cast<double>(d) / width;
}

}  // namespace kdesign
