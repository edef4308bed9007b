#include "numu/metric.hpp"

namespace numu {

std::string to_string(const MetricResult& r) {
  return (r.exact ? "=2^-" : "<=2^-") + std::to_string(r.exponent);
}

MetricResult an_distance(const MixedTerm& t, const MixedTerm& u,
                         unsigned precision) {
  if (precision == 0) fail(Errc::Internal, "precision must be >= 1");
  // trunc_0 is always the hole on both sides, so start probing at 1.
  for (unsigned n = 1; n <= precision; ++n)
    if (!trunc_equal(truncate(t, n), truncate(u, n)))
      return MetricResult{true, n - 1};
  return MetricResult{false, precision};
}

}  // namespace numu
