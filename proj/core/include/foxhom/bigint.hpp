#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <string>

namespace foxhom {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt big_abs(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

inline BigInt big_gcd(const BigInt& a, const BigInt& b) {
  return boost::multiprecision::gcd(a, b);
}

// Returns the value as int64 when it fits, otherwise nullopt.
std::optional<std::int64_t> to_int64(const BigInt& x);

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

}  // namespace foxhom
