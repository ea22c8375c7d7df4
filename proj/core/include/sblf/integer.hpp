#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

namespace sblf {

using Integer = mpz_class;

/// Parses an optionally signed decimal integer of any size; throws InputError.
Integer parse_integer(std::string_view text);

std::string to_string(const Integer& value);

std::size_t hash_value(const Integer& value) noexcept;

/// Floor division, rounding toward negative infinity. Divisor must be nonzero.
Integer floor_div(const Integer& numerator, const Integer& denominator);

/// Returns true and stores the value when it fits in int64.
bool fits_int64(const Integer& value, std::int64_t& out);

enum class Sign : int { Plus = 1, Minus = -1 };

inline Sign operator*(Sign lhs, Sign rhs) {
  return lhs == rhs ? Sign::Plus : Sign::Minus;
}
inline Sign negate(Sign s) { return s == Sign::Plus ? Sign::Minus : Sign::Plus; }
inline int to_int(Sign s) { return static_cast<int>(s); }
inline char sign_char(Sign s) { return s == Sign::Plus ? '+' : '-'; }

}  // namespace sblf
