#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace imbalance {

// Exact integers for polynomial coefficients and signed counts that have no
// a-priori bound.  Plain long long is kept for counts that are bounded by
// construction (extension counts live under the enumeration cap).
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Thrown when an enumeration would exceed its configured cap.  Callers treat
// this as refusal, never as an answer.
struct CapExceeded : std::runtime_error {
  explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Default ceiling for linear-extension streams.
inline constexpr long long kDefaultExtensionCap = 10'000'000;

}  // namespace imbalance
