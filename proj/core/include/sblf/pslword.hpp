#pragma once

#include "sblf/integer.hpp"
#include "sblf/sl2z.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sblf {

enum class Letter : std::uint8_t { A, A2, B };

/// A letter with an arbitrary exponent, used as input to reduction.
struct RawLetter {
  enum class Base : std::uint8_t { A, B } base;
  std::int64_t exponent = 1;
};

/// Reduced word in Z/3 * Z/2 = <a, b | a^3, b^2>.
class PslWord {
 public:
  PslWord() = default;

  static PslWord reduce(std::span<const Letter> letters);
  static PslWord reduce(std::span<const RawLetter> letters);

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  /// Appends one letter, cancelling against the end of the word.
  void push_back(Letter letter);
  void append(const PslWord& other);

  friend bool operator==(const PslWord&, const PslWord&) = default;
  friend auto operator<=>(const PslWord&, const PslWord&) = default;

 private:
  std::vector<Letter> letters_;
};

struct SignedElement {
  Sign sign = Sign::Plus;
  PslWord word;

  friend bool operator==(const SignedElement&, const SignedElement&) = default;
};

PslWord word_multiply(const PslWord& u, const PslWord& v);
PslWord word_inverse(const PslWord& u);
/// Reversal of the letter sequence; an involutive antihomomorphism.
PslWord t_map(const PslWord& w);

Sl2Matrix evaluate_word(const PslWord& w, Sign sign = Sign::Plus);
Sl2Matrix evaluate(const SignedElement& e);
SignedElement matrix_to_signed_word(const Sl2Matrix& m);

PslWord x1_word();
PslWord x2_word();
PslWord x1_power_word(const Integer& n);
PslWord x2_power_word(const Integer& n);

std::optional<Integer> as_x1_power_psl(const PslWord& w);

/// Tokens a, a2, b, or a^k / b^k with any integer k; `e` alone is the empty word.
std::vector<RawLetter> parse_raw_letters(std::string_view text);
/// parse_raw_letters followed by reduction.
PslWord parse_word(std::string_view text);
/// Same as parse_word with an optional leading `+` or `-` token.
SignedElement parse_signed_word(std::string_view text);

std::string to_string(Letter letter);
/// Tokens separated by spaces; the empty word prints as `e`.
std::string to_string(const PslWord& w);
std::string to_string(const SignedElement& e);

}  // namespace sblf
