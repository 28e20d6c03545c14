#pragma once

#include <string>

namespace prasad {

// Values of quadratic characters.
enum class Sign : int { minus = -1, plus = 1 };

constexpr Sign operator*(Sign a, Sign b) {
  return static_cast<int>(a) == static_cast<int>(b) ? Sign::plus : Sign::minus;
}

constexpr Sign& operator*=(Sign& a, Sign b) { return a = a * b; }

constexpr Sign sign_from_parity(long long k) { return (k % 2 == 0) ? Sign::plus : Sign::minus; }

constexpr int to_int(Sign s) { return static_cast<int>(s); }

inline std::string to_string(Sign s) { return s == Sign::plus ? "+1" : "-1"; }

}  // namespace prasad
