#include "sblf/integer.hpp"

#include "sblf/errors.hpp"

#include <cctype>
#include <functional>

namespace sblf {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : InputError(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

Integer parse_integer(std::string_view text) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    negative = text[i] == '-';
    ++i;
  }
  if (i == text.size()) throw InputError("expected an integer, got '" + std::string(text) + "'");
  for (std::size_t j = i; j < text.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(text[j])))
      throw InputError("expected an integer, got '" + std::string(text) + "'");
  }
  Integer value(std::string(text.substr(i)), 10);
  return negative ? Integer(-value) : value;
}

std::string to_string(const Integer& value) { return value.get_str(10); }

std::size_t hash_value(const Integer& value) noexcept {
  const mpz_srcptr z = value.get_mpz_t();
  std::size_t h = static_cast<std::size_t>(z->_mp_size) * 0x9e3779b97f4a7c15ULL;
  const int limbs = z->_mp_size < 0 ? -z->_mp_size : z->_mp_size;
  for (int i = 0; i < limbs; ++i) {
    h ^= std::hash<mp_limb_t>{}(z->_mp_d[i]) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

Integer floor_div(const Integer& numerator, const Integer& denominator) {
  if (denominator == 0) throw InputError("division by zero");
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), numerator.get_mpz_t(), denominator.get_mpz_t());
  return q;
}

bool fits_int64(const Integer& value, std::int64_t& out) {
  if (!value.fits_slong_p()) return false;
  out = value.get_si();
  return true;
}

}  // namespace sblf
