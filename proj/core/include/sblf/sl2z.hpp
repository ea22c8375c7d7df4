#pragma once

#include "sblf/integer.hpp"

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace sblf {

/// 2x2 integer matrix [[a,b],[c,d]] with determinant 1.
class Sl2Matrix {
 public:
  Sl2Matrix();

  /// Throws InputError when ad - bc != 1.
  Sl2Matrix(Integer a, Integer b, Integer c, Integer d);

  const Integer& a() const { return a_; }
  const Integer& b() const { return b_; }
  const Integer& c() const { return c_; }
  const Integer& d() const { return d_; }

  Integer trace() const { return a_ + d_; }
  Sl2Matrix inverse() const;
  Sl2Matrix operator-() const;
  Sl2Matrix pow(const Integer& exponent) const;

  bool is_identity() const { return a_ == 1 && d_ == 1 && b_ == 0 && c_ == 0; }
  bool is_plus_minus_identity() const { return b_ == 0 && c_ == 0 && a_ == d_; }

  /// Largest absolute value among the four entries.
  Integer max_abs_entry() const;

  std::size_t hash() const noexcept;

  friend Sl2Matrix operator*(const Sl2Matrix& lhs, const Sl2Matrix& rhs);
  Sl2Matrix& operator*=(const Sl2Matrix& rhs);
  friend bool operator==(const Sl2Matrix& lhs, const Sl2Matrix& rhs) {
    return lhs.a_ == rhs.a_ && lhs.b_ == rhs.b_ && lhs.c_ == rhs.c_ && lhs.d_ == rhs.d_;
  }
  friend bool operator!=(const Sl2Matrix& lhs, const Sl2Matrix& rhs) { return !(lhs == rhs); }

 private:
  struct Unchecked {};
  Sl2Matrix(Unchecked, Integer a, Integer b, Integer c, Integer d);

  Integer a_;
  Integer b_;
  Integer c_;
  Integer d_;

  friend Sl2Matrix x1_power(const Integer& m);
  friend Sl2Matrix x2_power(const Integer& m);
};

struct Sl2MatrixHash {
  std::size_t operator()(const Sl2Matrix& m) const noexcept { return m.hash(); }
};

Sl2Matrix multiply(const Sl2Matrix& lhs, const Sl2Matrix& rhs);
Sl2Matrix inverse(const Sl2Matrix& m);

enum class Generator { X1, X2, A, B, E };

Sl2Matrix generator(Generator g);
/// Accepts X1, X2, A, B, E; throws InputError otherwise.
Sl2Matrix generator(std::string_view name);

/// [[1,0],[m,1]]
Sl2Matrix x1_power(const Integer& m);
/// [[1,-m],[0,1]]
Sl2Matrix x2_power(const Integer& m);

/// Conjugation g^-1 h g.
Sl2Matrix conjugate(const Sl2Matrix& h, const Sl2Matrix& g);

/// Primitive vector (p,q) up to sign, stored with p > 0 or p = 0, q > 0.
class Curve {
 public:
  /// Throws InputError when gcd(p,q) != 1.
  Curve(Integer p, Integer q);

  const Integer& p() const { return p_; }
  const Integer& q() const { return q_; }

  friend bool operator==(const Curve& lhs, const Curve& rhs) {
    return lhs.p_ == rhs.p_ && lhs.q_ == rhs.q_;
  }
  friend bool operator!=(const Curve& lhs, const Curve& rhs) { return !(lhs == rhs); }

 private:
  Integer p_;
  Integer q_;
};

/// Row action (p,q)·M, canonicalized.
Curve act(const Curve& c, const Sl2Matrix& m);

/// Right-handed twist [[1-pq, -q^2],[p^2, 1+pq]].
Sl2Matrix twist_matrix(const Curve& c);
Sl2Matrix twist_power(const Curve& c, const Integer& k);

/// The image of g under the twist along c.
Curve apply_twist(const Curve& c, const Curve& g);

/// Algebraic intersection p_g q_c - q_g p_c of representatives.
Integer intersection_number(const Curve& g, const Curve& c);

struct ParabolicPower {
  Curve curve;
  Integer exponent;
};

std::optional<ParabolicPower> decompose_parabolic(const Sl2Matrix& m);
bool is_conjugate_to_x1(const Sl2Matrix& m);

/// sign · X1^m
struct BoundaryClass {
  Sign sign = Sign::Plus;
  Integer m;

  Sl2Matrix matrix() const;
  friend bool operator==(const BoundaryClass& lhs, const BoundaryClass& rhs) {
    return lhs.sign == rhs.sign && lhs.m == rhs.m;
  }
};

std::optional<BoundaryClass> as_plus_minus_x1_power(const Sl2Matrix& m);

/// sign · T_c^k for M of trace ±2 other than ±E.
struct SignedParabolic {
  Sign sign;
  ParabolicPower power;
};

std::optional<SignedParabolic> signed_parabolic(const Sl2Matrix& m);

/// Parses `[[a,b],[c,d]]`, whitespace tolerant.
Sl2Matrix parse_matrix(std::string_view text);
std::string to_string(const Sl2Matrix& m);
std::string to_string(const Curve& c);
std::string to_string(const BoundaryClass& bc);

std::ostream& operator<<(std::ostream& os, const Sl2Matrix& m);
std::ostream& operator<<(std::ostream& os, const Curve& c);

}  // namespace sblf
