#ifndef NUMU_METRIC_HPP
#define NUMU_METRIC_HPP

#include <string>

#include "numu/term.hpp"

namespace numu {

/// Result of a distance query at a finite precision. Distance 0 is only
/// semidecidable, so the API reports either the exact value 2^-exponent or
/// the bound "at most 2^-precision".
struct MetricResult {
  bool exact = false;
  unsigned exponent = 0;

  bool operator==(const MetricResult&) const = default;
};

std::string to_string(const MetricResult& r);  // "=2^-k" or "<=2^-p"

/// Arnold-Nivat metric d(t,u) = inf{2^-n : trunc_n(t) = trunc_n(u)},
/// probed up to `precision` (>= 1). Truncations are compared raw, not up
/// to α.
MetricResult an_distance(const MixedTerm& t, const MixedTerm& u,
                         unsigned precision);

}  // namespace numu

#endif
