#include "sblf/pslword.hpp"

#include "sblf/errors.hpp"

#include <cctype>
#include <sstream>

namespace sblf {

namespace {

int a_exponent(Letter l) { return l == Letter::A ? 1 : 2; }

const Sl2Matrix& letter_matrix(Letter l) {
  static const Sl2Matrix a = generator(Generator::A);
  static const Sl2Matrix a2 = a * a;
  static const Sl2Matrix b = generator(Generator::B);
  switch (l) {
    case Letter::A: return a;
    case Letter::A2: return a2;
    case Letter::B: return b;
  }
  return b;
}

}  // namespace

void PslWord::push_back(Letter letter) {
  if (letters_.empty()) {
    letters_.push_back(letter);
    return;
  }
  const Letter top = letters_.back();
  if (letter == Letter::B) {
    if (top == Letter::B) {
      letters_.pop_back();
    } else {
      letters_.push_back(letter);
    }
    return;
  }
  if (top == Letter::B) {
    letters_.push_back(letter);
    return;
  }
  const int e = (a_exponent(top) + a_exponent(letter)) % 3;
  if (e == 0) {
    letters_.pop_back();
  } else {
    letters_.back() = e == 1 ? Letter::A : Letter::A2;
  }
}

void PslWord::append(const PslWord& other) {
  for (Letter l : other.letters_) push_back(l);
}

PslWord PslWord::reduce(std::span<const Letter> letters) {
  PslWord w;
  for (Letter l : letters) w.push_back(l);
  return w;
}

PslWord PslWord::reduce(std::span<const RawLetter> letters) {
  PslWord w;
  for (const RawLetter& r : letters) {
    if (r.base == RawLetter::Base::A) {
      const auto e = ((r.exponent % 3) + 3) % 3;
      if (e == 1) w.push_back(Letter::A);
      if (e == 2) w.push_back(Letter::A2);
    } else if (r.exponent % 2 != 0) {
      w.push_back(Letter::B);
    }
  }
  return w;
}

PslWord word_multiply(const PslWord& u, const PslWord& v) {
  PslWord w = u;
  w.append(v);
  return w;
}

PslWord word_inverse(const PslWord& u) {
  std::vector<Letter> out(u.letters().rbegin(), u.letters().rend());
  for (Letter& l : out) {
    if (l == Letter::A) {
      l = Letter::A2;
    } else if (l == Letter::A2) {
      l = Letter::A;
    }
  }
  return PslWord::reduce(out);
}

PslWord t_map(const PslWord& w) {
  std::vector<Letter> out(w.letters().rbegin(), w.letters().rend());
  return PslWord::reduce(out);
}

Sl2Matrix evaluate_word(const PslWord& w, Sign sign) {
  Sl2Matrix m;
  for (Letter l : w.letters()) m *= letter_matrix(l);
  return sign == Sign::Plus ? m : -m;
}

Sl2Matrix evaluate(const SignedElement& e) { return evaluate_word(e.word, e.sign); }

PslWord x1_word() { return x1_power_word(1); }
PslWord x2_word() { return x2_power_word(1); }

PslWord x1_power_word(const Integer& n) {
  std::vector<Letter> letters;
  if (n == 0) return PslWord();
  const bool positive = n > 0;
  const Letter outer = positive ? Letter::A : Letter::A2;
  const Letter inner = positive ? Letter::A2 : Letter::A;
  const Integer reps = abs(n) - 1;
  letters.reserve(2 * reps.get_ui() + 3);
  letters.push_back(outer);
  for (Integer i = 0; i < reps; ++i) {
    letters.push_back(Letter::B);
    letters.push_back(inner);
  }
  letters.push_back(Letter::B);
  letters.push_back(outer);
  return PslWord::reduce(letters);
}

PslWord x2_power_word(const Integer& n) {
  if (n == 0) return PslWord();
  // x2 = b a2 and x2^-1 = a b
  PslWord unit;
  if (n > 0) {
    unit.push_back(Letter::B);
    unit.push_back(Letter::A2);
  } else {
    unit.push_back(Letter::A);
    unit.push_back(Letter::B);
  }
  PslWord w;
  for (Integer i = 0; i < abs(n); ++i) w.append(unit);
  return w;
}

SignedElement matrix_to_signed_word(const Sl2Matrix& m) {
  struct Step {
    bool x1;
    Integer exponent;
  };
  std::vector<Step> steps;
  Integer a = m.a(), b = m.b(), c = m.c(), d = m.d();
  while (c != 0) {
    if (abs(a) >= abs(c)) {
      Integer q;
      mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), c.get_mpz_t());
      a -= q * c;
      b -= q * d;
      steps.push_back({false, q});
    } else if (a == 0) {
      a += c;
      b += d;
      steps.push_back({false, -1});
      c -= a;
      d -= b;
      steps.push_back({true, -1});
    } else {
      Integer q;
      mpz_tdiv_q(q.get_mpz_t(), c.get_mpz_t(), a.get_mpz_t());
      c -= q * a;
      d -= q * b;
      steps.push_back({true, -q});
    }
  }
  // Steps left-multiplied: X2^q subtracts q*row2 from row1, X1^m adds m*row1 to row2.
  // What remains is a*[[1, a*b],[0,1]] with a = +-1.
  PslWord w;
  for (const Step& s : steps) {
    w.append(s.x1 ? x1_power_word(-s.exponent) : x2_power_word(-s.exponent));
  }
  w.append(x2_power_word(-(a * b)));
  const Sl2Matrix plus = evaluate_word(w);
  return SignedElement{plus == m ? Sign::Plus : Sign::Minus, std::move(w)};
}

std::optional<Integer> as_x1_power_psl(const PslWord& w) {
  if (w.empty()) return Integer(0);
  if (w.size() % 2 == 0) return std::nullopt;
  const Letter first = w.letters().front();
  if (first == Letter::B) return std::nullopt;
  const long magnitude = static_cast<long>((w.size() - 1) / 2);
  const Integer n = first == Letter::A ? Integer(magnitude) : Integer(-magnitude);
  if (x1_power_word(n) == w) return n;
  return std::nullopt;
}

std::vector<RawLetter> parse_raw_letters(std::string_view text) {
  std::vector<RawLetter> out;
  std::istringstream in{std::string(text)};
  std::string token;
  std::vector<std::string> tokens;
  while (in >> token) tokens.push_back(token);
  if (tokens.size() == 1 && tokens[0] == "e") return out;
  for (const std::string& t : tokens) {
    if (t == "a") {
      out.push_back({RawLetter::Base::A, 1});
    } else if (t == "a2") {
      out.push_back({RawLetter::Base::A, 2});
    } else if (t == "b") {
      out.push_back({RawLetter::Base::B, 1});
    } else if (t.size() > 2 && (t[0] == 'a' || t[0] == 'b') && t[1] == '^') {
      std::int64_t e = 0;
      if (!fits_int64(parse_integer(std::string_view(t).substr(2)), e)) {
        throw InputError("exponent out of range in '" + t + "'");
      }
      out.push_back({t[0] == 'a' ? RawLetter::Base::A : RawLetter::Base::B, e});
    } else {
      throw InputError("unknown word token '" + t + "' (expected a, a2, b)");
    }
  }
  return out;
}

PslWord parse_word(std::string_view text) { return PslWord::reduce(parse_raw_letters(text)); }

SignedElement parse_signed_word(std::string_view text) {
  std::size_t i = text.find_first_not_of(" \t\r\n");
  Sign sign = Sign::Plus;
  if (i != std::string_view::npos && (text[i] == '+' || text[i] == '-')) {
    const std::size_t next = i + 1;
    if (next == text.size() || std::isspace(static_cast<unsigned char>(text[next]))) {
      sign = text[i] == '-' ? Sign::Minus : Sign::Plus;
      text = text.substr(next);
    }
  }
  return SignedElement{sign, parse_word(text)};
}

std::string to_string(Letter letter) {
  switch (letter) {
    case Letter::A: return "a";
    case Letter::A2: return "a2";
    case Letter::B: return "b";
  }
  return "?";
}

std::string to_string(const PslWord& w) {
  if (w.empty()) return "e";
  std::string out;
  for (Letter l : w.letters()) {
    if (!out.empty()) out += ' ';
    out += to_string(l);
  }
  return out;
}

std::string to_string(const SignedElement& e) {
  return std::string(1, sign_char(e.sign)) + " " + to_string(e.word);
}

}  // namespace sblf
