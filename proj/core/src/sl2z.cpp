#include "sblf/sl2z.hpp"

#include "sblf/errors.hpp"

#include <cctype>
#include <sstream>
#include <utility>

namespace sblf {

Sl2Matrix::Sl2Matrix() : a_(1), b_(0), c_(0), d_(1) {}

Sl2Matrix::Sl2Matrix(Integer a, Integer b, Integer c, Integer d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
  if (a_ * d_ - b_ * c_ != 1) {
    throw InputError("matrix " + to_string(*this) + " does not have determinant 1");
  }
}

Sl2Matrix::Sl2Matrix(Unchecked, Integer a, Integer b, Integer c, Integer d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {}

Sl2Matrix Sl2Matrix::inverse() const { return Sl2Matrix(Unchecked{}, d_, -b_, -c_, a_); }

Sl2Matrix Sl2Matrix::operator-() const { return Sl2Matrix(Unchecked{}, -a_, -b_, -c_, -d_); }

Sl2Matrix Sl2Matrix::pow(const Integer& exponent) const {
  Sl2Matrix base = exponent < 0 ? inverse() : *this;
  Integer e = abs(exponent);
  Sl2Matrix result;
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) result *= base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

Integer Sl2Matrix::max_abs_entry() const {
  Integer best = abs(a_);
  for (const Integer* x : {&b_, &c_, &d_}) {
    if (abs(*x) > best) best = abs(*x);
  }
  return best;
}

std::size_t Sl2Matrix::hash() const noexcept {
  std::size_t h = hash_value(a_);
  for (const Integer* x : {&b_, &c_, &d_}) {
    h ^= hash_value(*x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

Sl2Matrix operator*(const Sl2Matrix& lhs, const Sl2Matrix& rhs) {
  return Sl2Matrix(Sl2Matrix::Unchecked{}, lhs.a_ * rhs.a_ + lhs.b_ * rhs.c_,
                   lhs.a_ * rhs.b_ + lhs.b_ * rhs.d_, lhs.c_ * rhs.a_ + lhs.d_ * rhs.c_,
                   lhs.c_ * rhs.b_ + lhs.d_ * rhs.d_);
}

Sl2Matrix& Sl2Matrix::operator*=(const Sl2Matrix& rhs) {
  *this = *this * rhs;
  return *this;
}

Sl2Matrix multiply(const Sl2Matrix& lhs, const Sl2Matrix& rhs) { return lhs * rhs; }
Sl2Matrix inverse(const Sl2Matrix& m) { return m.inverse(); }

Sl2Matrix generator(Generator g) {
  switch (g) {
    case Generator::X1: return Sl2Matrix(1, 0, 1, 1);
    case Generator::X2: return Sl2Matrix(1, -1, 0, 1);
    case Generator::A: return Sl2Matrix(0, -1, 1, 1);
    case Generator::B: return Sl2Matrix(1, 2, -1, -1);
    case Generator::E: return Sl2Matrix();
  }
  throw InputError("unknown generator");
}

Sl2Matrix generator(std::string_view name) {
  if (name == "X1") return generator(Generator::X1);
  if (name == "X2") return generator(Generator::X2);
  if (name == "A") return generator(Generator::A);
  if (name == "B") return generator(Generator::B);
  if (name == "E") return generator(Generator::E);
  throw InputError("unknown generator '" + std::string(name) + "'");
}

Sl2Matrix x1_power(const Integer& m) { return Sl2Matrix(Sl2Matrix::Unchecked{}, 1, 0, m, 1); }
Sl2Matrix x2_power(const Integer& m) { return Sl2Matrix(Sl2Matrix::Unchecked{}, 1, -m, 0, 1); }

Sl2Matrix conjugate(const Sl2Matrix& h, const Sl2Matrix& g) { return g.inverse() * h * g; }

Curve::Curve(Integer p, Integer q) : p_(std::move(p)), q_(std::move(q)) {
  if (gcd(p_, q_) != 1) {
    throw InputError("curve (" + to_string(p_) + "," + to_string(q_) + ") is not primitive");
  }
  if (p_ < 0 || (p_ == 0 && q_ < 0)) {
    p_ = -p_;
    q_ = -q_;
  }
}

Curve act(const Curve& c, const Sl2Matrix& m) {
  return Curve(c.p() * m.a() + c.q() * m.c(), c.p() * m.b() + c.q() * m.d());
}

Sl2Matrix twist_matrix(const Curve& c) { return twist_power(c, 1); }

Sl2Matrix twist_power(const Curve& c, const Integer& k) {
  const Integer pqk = c.p() * c.q() * k;
  return Sl2Matrix(1 - pqk, -c.q() * c.q() * k, c.p() * c.p() * k, 1 + pqk);
}

Curve apply_twist(const Curve& c, const Curve& g) { return act(g, twist_matrix(c)); }

Integer intersection_number(const Curve& g, const Curve& c) {
  return g.p() * c.q() - g.q() * c.p();
}

std::optional<ParabolicPower> decompose_parabolic(const Sl2Matrix& m) {
  if (m.trace() != 2 || m.is_identity()) return std::nullopt;
  const Integer& lower = m.c();      // p^2 k
  const Integer upper = -m.b();      // q^2 k
  const Integer diag = m.d() - 1;    // pqk
  Integer k = gcd(lower, upper);
  if (lower < 0 || (lower == 0 && upper < 0)) k = -k;
  const Integer p2 = lower / k;
  const Integer q2 = upper / k;
  if (p2 < 0 || q2 < 0 || !mpz_perfect_square_p(p2.get_mpz_t()) ||
      !mpz_perfect_square_p(q2.get_mpz_t())) {
    return std::nullopt;
  }
  Integer p = sqrt(p2);
  Integer q = sqrt(q2);
  if (p * q * k != diag) q = -q;
  if (p * q * k != diag || gcd(p, q) != 1) return std::nullopt;
  ParabolicPower result{Curve(p, q), k};
  if (twist_power(result.curve, k) != m) return std::nullopt;
  return result;
}

bool is_conjugate_to_x1(const Sl2Matrix& m) {
  const auto parabolic = decompose_parabolic(m);
  return parabolic && parabolic->exponent == 1;
}

Sl2Matrix BoundaryClass::matrix() const {
  const Sl2Matrix power = x1_power(m);
  return sign == Sign::Plus ? power : -power;
}

std::optional<BoundaryClass> as_plus_minus_x1_power(const Sl2Matrix& m) {
  if (m.b() != 0 || m.a() != m.d()) return std::nullopt;
  if (m.a() == 1) return BoundaryClass{Sign::Plus, m.c()};
  if (m.a() == -1) return BoundaryClass{Sign::Minus, -m.c()};
  return std::nullopt;
}

std::optional<SignedParabolic> signed_parabolic(const Sl2Matrix& m) {
  if (m.trace() == 2) {
    if (auto p = decompose_parabolic(m)) return SignedParabolic{Sign::Plus, *p};
  } else if (m.trace() == -2) {
    if (auto p = decompose_parabolic(-m)) return SignedParabolic{Sign::Minus, *p};
  }
  return std::nullopt;
}

namespace {

class MatrixLexer {
 public:
  explicit MatrixLexer(std::string_view text) : text_(text) {}

  void expect(char ch) {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != ch) fail(std::string("expected '") + ch + "'");
    ++pos_;
  }

  Integer integer() {
    skip_space();
    const std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return parse_integer(text_.substr(start, pos_ - start));
  }

  void finish() {
    skip_space();
    if (pos_ != text_.size()) fail("trailing characters");
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(1, pos_ + 1, what + " in matrix literal '" + std::string(text_) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Sl2Matrix parse_matrix(std::string_view text) {
  MatrixLexer lex(text);
  lex.expect('[');
  lex.expect('[');
  Integer a = lex.integer();
  lex.expect(',');
  Integer b = lex.integer();
  lex.expect(']');
  lex.expect(',');
  lex.expect('[');
  Integer c = lex.integer();
  lex.expect(',');
  Integer d = lex.integer();
  lex.expect(']');
  lex.expect(']');
  lex.finish();
  return Sl2Matrix(std::move(a), std::move(b), std::move(c), std::move(d));
}

std::string to_string(const Sl2Matrix& m) {
  return "[[" + to_string(m.a()) + "," + to_string(m.b()) + "],[" + to_string(m.c()) + "," +
         to_string(m.d()) + "]]";
}

std::string to_string(const Curve& c) {
  return "(" + to_string(c.p()) + "," + to_string(c.q()) + ")";
}

std::string to_string(const BoundaryClass& bc) {
  return std::string(1, sign_char(bc.sign)) + " " + to_string(x1_power(bc.m));
}

std::ostream& operator<<(std::ostream& os, const Sl2Matrix& m) { return os << to_string(m); }
std::ostream& operator<<(std::ostream& os, const Curve& c) { return os << to_string(c); }

}  // namespace sblf
