#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "permtree/bigint.hpp"

namespace permtree {

/// Working precision for log-space bounds (about 50 decimal digits).
using Real = boost::multiprecision::cpp_bin_float_50;
/// Cross-check precision.
using AuditReal = boost::multiprecision::cpp_bin_float_100;

template <class R = Real>
R log_of(const BigInt& x) {
  return boost::multiprecision::log(R(x));
}

}  // namespace permtree
