#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace permtree {

using BigInt = boost::multiprecision::cpp_int;

BigInt factorial(std::uint64_t n);

inline std::string to_decimal(const BigInt& value) { return value.str(); }

inline BigInt from_decimal(const std::string& text) { return BigInt(text); }

}  // namespace permtree
