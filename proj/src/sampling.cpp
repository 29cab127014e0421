#include "tmlift/sampling.hpp"

namespace tmlift {

TangentPoint sample_point(const MetricSpec& spec, SplitMix64& rng) {
  const int n = spec.dim();
  const ChartBox box = spec.sample_box();
  TangentPoint u;
  u.x.resize(n);
  u.y.resize(n);
  for (int i = 0; i < n; ++i) u.x[i] = rng.uniform(box.lo[i], box.hi[i]);
  while (true) {
    for (int i = 0; i < n; ++i) u.y[i] = rng.uniform(-2.0, 2.0);
    if (u.y.norm() > 0.0 && norm_y(spec, u) >= 0.1) break;
  }
  return u;
}

TangentPoint sample_unit_point(const MetricSpec& spec, SplitMix64& rng) {
  TangentPoint u = sample_point(spec, rng);
  u.y /= norm_y(spec, u);
  return u;
}

}  // namespace tmlift
